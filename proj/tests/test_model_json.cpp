#include <doctest.h>

#include "wrdpm/errors.hpp"
#include "wrdpm/model_json.hpp"

using namespace wrdpm;
using nlohmann::json;

TEST_CASE("latent model documents roundtrip") {
  LatentModel m;
  m.distribution.family = EdgeFamily::Bernoulli;
  m.n = 4;
  m.sources = {source::FiniteSupport{{Eigen::Vector2d(0.5, 0), Eigen::Vector2d(0, 0.5)}, {0.25, 0.75}, {0, 1, 1, 0}}};
  auto back = latent_model_from_json(to_json(m));
  CHECK(back.distribution.family == EdgeFamily::Bernoulli);
  CHECK(back.n == 4);
  const auto& f = std::get<source::FiniteSupport>(back.sources[0]);
  CHECK(f.vectors[1] == Eigen::Vector2d(0, 0.5));
  CHECK(f.probabilities == std::vector<double>{0.25, 0.75});
  CHECK(f.assignment == std::vector<std::size_t>{0, 1, 1, 0});

  for (VectorSource s : {VectorSource{source::Constant{Eigen::Vector3d(1, 2, 3)}},
                         VectorSource{source::AxisNoise{4, 0.2}},
                         VectorSource{source::MultiresolutionAxis{3, 0.1, 2.0}},
                         VectorSource{source::Ray{Eigen::Vector2d(1, 0), {1, 2, 3, 4}, 1.0}}}) {
    LatentModel one{EdgeDistribution{}, 4, {s}};
    const json doc = to_json(one);
    CAPTURE(doc.dump());
    CHECK(to_json(latent_model_from_json(doc)) == doc);
    CHECK(doc["sources"][0]["kind"] == kind_name(s));
  }
}

TEST_CASE("latent model documents are validated") {
  CHECK_THROWS_AS(latent_model_from_json(json::parse(R"({"n": 3, "sources": []})")), ValidationError);
  CHECK_THROWS_AS(latent_model_from_json(json::parse(
                      R"({"distribution": "poisson", "n": 3, "sources": [{"kind": "blob"}]})")),
                  ValidationError);
  CHECK_THROWS_AS(latent_model_from_json(json::parse(
                      R"({"distribution": "poisson", "n": "three", "sources": []})")),
                  ValidationError);
  auto m = latent_model_from_json(json::parse(
      R"({"distribution": "poisson", "n": 10, "sources": [{"kind": "axis_noise", "dimension": 3}]})"));
  CHECK(std::get<source::AxisNoise>(m.sources[0]).noise_scale == 0.1);
}

TEST_CASE("block model and chung-lu documents") {
  auto spec = block_model_from_json(json::parse(R"({"B": [[1, 0.1], [0.1, 1]], "sizes": [3, 4]})"));
  CHECK(spec.block_parameters(0, 1) == 0.1);
  CHECK(spec.node_count() == 7);
  CHECK(to_json(spec) == json::parse(R"({"B": [[1, 0.1], [0.1, 1]], "sizes": [3, 4]})"));
  CHECK_THROWS_AS(block_model_from_json(json::parse(R"({"B": [[1, 0.1]], "sizes": [3]})")), ValidationError);

  auto cl = chung_lu_from_json(json::parse(R"({"weights": [1, 2, 3]})"));
  CHECK(cl.weights == std::vector<double>{1, 2, 3});
  CHECK_THROWS_AS(chung_lu_from_json(json::parse(R"({"w": []})")), ValidationError);
}

TEST_CASE("report documents") {
  NullEnsembleReport r;
  r.statistic = "total_weight";
  r.null_kind = "poisson_er";
  r.observed = 3;
  r.samples = {2.5};
  r.null_mean = 2.5;
  r.quantile = 1;
  r.two_sided = 0;
  r.seed = 4;
  json doc = to_json(r);
  CHECK(doc["null_std"].is_null());
  CHECK(doc["N"] == 1);
  CHECK(doc["samples"] == json::array({2.5}));
  r.null_std = 0.5;
  CHECK(to_json(r)["null_std"] == 0.5);

  Embedding e;
  e.dimension = 3;
  e.residual = 1e-9;
  e.iterations = 12;
  e.converged = true;
  CHECK(embedding_sidecar(e) == json::parse(R"({"d": 3, "residual": 1e-9, "iterations": 12, "converged": true})"));
}

TEST_CASE("json text errors") {
  CHECK_THROWS_AS(parse_json_text("{oops"), ParseError);
  CHECK(parse_json_text("[1, 2]").size() == 2);
}
