#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "wrdpm/graph.hpp"
#include "wrdpm/io.hpp"

using namespace wrdpm;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path& root() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "wrdpm_test_cli";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// Runs the CLI with `args`; stderr goes to <root>/stderr.txt.
int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" WRDPM_CLI_PATH "\" " + args + " > \"" + (root() / "stdout.txt").string() +
                          "\" 2> \"" + (root() / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string out(const std::string& name) { return (root() / name).string(); }

json read_json(const fs::path& p) { return json::parse(read_text_file(p)); }

std::string cliques_file() {
  const auto path = out("cliques.txt");
  if (!fs::exists(path)) save_graph(fixtures::disjoint_cliques(3, 5), path, GraphFormat::EdgeList);
  return path;
}

}  // namespace

TEST_CASE("generate builtins") {
  REQUIRE(run("generate --builtin simple-community --n 150 --seed 7 --out " + out("simple")) == 0);
  auto g = load_graph(out("simple/graph.txt"), GraphFormat::EdgeList);
  CHECK(g.n() == 150);
  auto x = load_matrix_csv(out("simple/vectors.csv"));
  CHECK(x.rows() == 150);
  CHECK(x.cols() == 3);
  CHECK(load_matrix_csv(out("simple/grid.csv")).isApprox(x * x.transpose()));
  auto m = read_json(out("simple/manifest.json"));
  CHECK(m["subcommand"] == "generate");
  CHECK(m["seed"] == 7);
  CHECK(m["config"]["builtin"] == "simple-community");

  REQUIRE(run("generate --builtin multiresolution --seed 1 --out " + out("multi")) == 0);
  auto model = read_json(out("multi/model.json"));
  CHECK(model["sources"][0]["kind"] == "multiresolution_axis");
  CHECK(model["sources"][0]["magnitude_mean"] == 2.0);

  REQUIRE(run("generate --builtin er --family poisson --param 0 --n 6 --out " + out("er")) == 0);
  CHECK(total_weight(load_graph(out("er/graph.txt"), GraphFormat::EdgeList)) == 0);

  REQUIRE(run("generate --builtin sbm --n 30 --format dense --out " + out("sbm")) == 0);
  CHECK(load_graph(out("sbm/graph.csv"), GraphFormat::Dense).n() == 30);

  write_text_file(out("cl.json"), R"({"weights": [1, 2, 3, 4]})");
  REQUIRE(run("generate --builtin chung-lu --weights " + out("cl.json") + " --out " + out("cl")) == 0);
  CHECK(load_matrix_csv(out("cl/grid.csv"))(2, 3) == doctest::Approx(1.2));
}

TEST_CASE("generate from a model file") {
  write_text_file(out("model.json"),
                  R"({"distribution": "bernoulli", "n": 8,
                      "sources": [{"kind": "constant", "vector": [0.5, 0.5]}]})");
  REQUIRE(run("generate --model " + out("model.json") + " --seed 2 --out " + out("from_model")) == 0);
  CHECK(load_graph(out("from_model/graph.txt"), GraphFormat::EdgeList).n() == 8);
}

TEST_CASE("generate errors") {
  CHECK(run("generate --out " + out("none")) == 1);
  CHECK(run("generate --builtin er --out " + out("none")) == 1);
  CHECK(run("generate --builtin chung-lu --out " + out("none")) == 1);
  CHECK(run("generate --builtin galaxy --out " + out("none")) == 1);
  CHECK(run("generate --builtin er --family bernoulli --param 2 --out " + out("none")) == 2);
  write_text_file(out("bad_model.json"), R"({"distribution": "poisson"})");
  CHECK(run("generate --model " + out("bad_model.json") + " --out " + out("none")) == 2);
}

TEST_CASE("seed falls back to the environment") {
  REQUIRE(run("generate --builtin simple-community --n 40 --seed 11 --out " + out("seed_flag")) == 0);
  REQUIRE(run("generate --builtin simple-community --n 40 --out " + out("seed_env"), "WRDPM_SEED=11") == 0);
  CHECK(read_text_file(out("seed_flag/graph.txt")) == read_text_file(out("seed_env/graph.txt")));
  CHECK(read_json(out("seed_env/manifest.json"))["seed_source"] == "env");
  CHECK(run("generate --builtin simple-community --n 40 --out " + out("seed_bad"), "WRDPM_SEED=abc") == 1);
}

TEST_CASE("embed") {
  REQUIRE(run("embed --graph " + cliques_file() + " --d 3 --out " + out("embed")) == 0);
  auto side = read_json(out("embed/embedding.json"));
  CHECK(side["residual"].get<double>() < 1e-6);
  CHECK(side["d"] == 3);
  CHECK(side["converged"] == true);
  const auto first = read_text_file(out("embed/embedding.csv"));
  REQUIRE(run("embed --graph " + cliques_file() + " --d 3 --out " + out("embed")) == 0);
  CHECK(read_text_file(out("embed/embedding.csv")) == first);

  CHECK(run("embed --graph " + cliques_file() + " --d 0 --out " + out("none")) == 1);
  CHECK(run("embed --graph " + cliques_file() + " --d 99 --out " + out("none")) == 2);
  CHECK(run("embed --graph " + out("missing.txt") + " --d 2 --out " + out("none")) == 1);
  write_text_file(out("broken.txt"), "0 1 1\n1 1 2\n");
  CHECK(run("embed --graph " + out("broken.txt") + " --d 1 --out " + out("none")) == 2);
  CHECK(read_text_file(out("stderr.txt")).find("line 2") != std::string::npos);
}

TEST_CASE("non-convergence is a warning unless strict") {
  REQUIRE(run("generate --builtin simple-community --n 60 --seed 3 --out " + out("nc")) == 0);
  const std::string base = "embed --graph " + out("nc/graph.txt") + " --d 3 --max-iter 1 --tol 1e-15 --out " + out("nc_e");
  CHECK(run(base) == 0);
  CHECK(read_text_file(out("stderr.txt")).find("warning") != std::string::npos);
  CHECK(run(base + " --strict") == 3);
}

TEST_CASE("cluster") {
  REQUIRE(run("cluster --graph " + cliques_file() + " --d 3 --seed 4 --out " + out("cluster")) == 0);
  auto doc = read_json(out("cluster/cluster.json"));
  CHECK(doc["k"] == 3);
  CHECK(doc["stress"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(doc["sizes"] == json::array({5, 5, 5}));
  REQUIRE(run("cluster --embedding " + out("cluster/embedding.csv") + " --k 1 --out " + out("cluster1")) == 0);
  CHECK(read_json(out("cluster1/cluster.json"))["sizes"] == json::array({15}));
  CHECK(run("cluster --out " + out("none")) == 1);
}

TEST_CASE("sweep") {
  REQUIRE(run("sweep --graph " + cliques_file() + " --d-range 2..4 --seed 1 --out " + out("sweep")) == 0);
  const auto csv = read_text_file(out("sweep/stress.csv"));
  CHECK(csv.rfind("d,stress,penalized_stress,residual\n", 0) == 0);
  CHECK(read_json(out("sweep/manifest.json"))["results"]["selected_d"] == 3);
  for (int d = 2; d <= 4; ++d) CHECK(fs::exists(out("sweep/partition_d" + std::to_string(d) + ".csv")));
  CHECK(fs::exists(out("sweep/centrality.csv")));

  REQUIRE(run("sweep --graph " + cliques_file() + " --d-range 2..2 --out " + out("sweep1")) == 0);
  const auto one = read_text_file(out("sweep1/stress.csv"));
  CHECK(std::count(one.begin(), one.end(), '\n') == 2);
  CHECK(one.find("2,") != std::string::npos);

  REQUIRE(run("sweep --graph " + cliques_file() + " --d-range 2..3 --penalized --l1 1 --l2 1 --out " +
              out("sweep_pen")) == 0);
  const auto pen = read_text_file(out("sweep_pen/stress.csv"));
  const auto row = pen.substr(pen.find('\n') + 1);
  CHECK(row.find(",,") == std::string::npos);

  CHECK(run("sweep --graph " + cliques_file() + " --penalized --out " + out("none")) == 1);
  CHECK(run("sweep --graph " + cliques_file() + " --d-range 3..2 --out " + out("none")) == 1);
  CHECK(run("sweep --graph " + cliques_file() + " --d-range 0..2 --out " + out("none")) == 1);
  CHECK(run("sweep --graph " + cliques_file() + " --d-range x --out " + out("none")) == 1);
}

TEST_CASE("null") {
  REQUIRE(run("generate --builtin simple-community --seed 5 --out " + out("null_g")) == 0);
  const std::string g = " --graph " + out("null_g/graph.txt");
  REQUIRE(run("null" + g + " --statistic avg_weighted_clustering --samples 100 --seed 2 --out " + out("null")) == 0);
  auto r = read_json(out("null/null_report.json"));
  CHECK(r["N"] == 100);
  CHECK(r["samples"].size() == 100);
  CHECK(r["observed"].get<double>() > r["null_mean"].get<double>());

  REQUIRE(run("null" + g + " -N 1 --out " + out("null1")) == 0);
  auto r1 = read_json(out("null1/null_report.json"));
  CHECK(r1["N"] == 1);
  CHECK(r1["null_std"].is_null());

  CHECK(run("null" + g + " --statistic modularity --out " + out("none")) == 1);
  const auto err = read_text_file(out("stderr.txt"));
  for (const char* name : {"avg_weighted_clustering", "total_weight", "log_likelihood"})
    CHECK(err.find(name) != std::string::npos);
  CHECK(run("null" + g + " --null dot_product --out " + out("none")) == 1);
  REQUIRE(run("null" + g + " --null dot_product --vectors " + out("null_g/vectors.csv") +
              " --statistic log_likelihood -N 5 --out " + out("null_dp")) == 0);
  CHECK(read_json(out("null_dp/null_report.json"))["null"] == "dot_product");
}

TEST_CASE("likelihood") {
  write_text_file(out("pair.txt"), "0 1 3\n");
  write_text_file(out("pair_vectors.csv"), "1.4142135623730951\n1.4142135623730951\n");
  REQUIRE(run("likelihood --graph " + out("pair.txt") + " --vectors " + out("pair_vectors.csv") + " --out " +
              out("lik")) == 0);
  auto doc = read_json(out("lik/likelihood.json"));
  CHECK(doc["log_likelihood"].get<double>() == doctest::Approx(std::log(4.0 / 3) - 2));
  CHECK(doc["impossible"] == false);

  write_text_file(out("zero_vectors.csv"), "0\n0\n");
  REQUIRE(run("likelihood --graph " + out("pair.txt") + " --vectors " + out("zero_vectors.csv") + " --out " +
              out("lik0")) == 0);
  auto zero = read_json(out("lik0/likelihood.json"));
  CHECK(zero["impossible"] == true);
  CHECK(zero["log_likelihood"].is_null());
}

TEST_CASE("usage basics") {
  CHECK(run("") == 1);
  CHECK(run("--help") == 0);
  CHECK(run("frobnicate") == 1);
}
