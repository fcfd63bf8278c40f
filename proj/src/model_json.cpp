#include "wrdpm/model_json.hpp"

#include "wrdpm/errors.hpp"

namespace wrdpm {

using nlohmann::json;

namespace {

json vector_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Eigen::VectorXd vector_from(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ValidationError(std::string(what) + " must be a non-empty array");
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = j.at(i).get<double>();
  return v;
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

template <class T>
T value_or(const json& doc, const char* key, T fallback) {
  return doc.contains(key) ? doc.at(key).get<T>() : fallback;
}

json source_json(const VectorSource& s) {
  json out = {{"kind", kind_name(s)}};
  if (auto* c = std::get_if<source::Constant>(&s)) {
    out["vector"] = vector_json(c->vector);
  } else if (auto* f = std::get_if<source::FiniteSupport>(&s)) {
    json vs = json::array();
    for (const auto& v : f->vectors) vs.push_back(vector_json(v));
    out["vectors"] = vs;
    out["probabilities"] = f->probabilities;
    if (!f->assignment.empty()) out["assignment"] = f->assignment;
  } else if (auto* a = std::get_if<source::AxisNoise>(&s)) {
    out["dimension"] = a->dimension;
    out["noise_scale"] = a->noise_scale;
  } else if (auto* m = std::get_if<source::MultiresolutionAxis>(&s)) {
    out["dimension"] = m->dimension;
    out["noise_scale"] = m->noise_scale;
    out["magnitude_mean"] = m->magnitude_mean;
  } else if (auto* r = std::get_if<source::Ray>(&s)) {
    out["direction"] = vector_json(r->direction);
    if (!r->magnitudes.empty()) out["magnitudes"] = r->magnitudes;
    out["magnitude_mean"] = r->magnitude_mean;
  }
  return out;
}

VectorSource source_from(const json& doc) {
  const auto kind = field(doc, "kind").get<std::string>();
  if (kind == "constant") return source::Constant{vector_from(field(doc, "vector"), "vector")};
  if (kind == "finite_support") {
    source::FiniteSupport f;
    for (const auto& v : field(doc, "vectors")) f.vectors.push_back(vector_from(v, "vectors[]"));
    if (f.vectors.empty()) throw ValidationError("finite_support needs at least one vector");
    f.probabilities = field(doc, "probabilities").get<std::vector<double>>();
    f.assignment = value_or(doc, "assignment", std::vector<std::size_t>{});
    return f;
  }
  if (kind == "axis_noise") {
    return source::AxisNoise{field(doc, "dimension").get<Eigen::Index>(),
                             value_or(doc, "noise_scale", 0.1)};
  }
  if (kind == "multiresolution_axis") {
    return source::MultiresolutionAxis{field(doc, "dimension").get<Eigen::Index>(),
                                       value_or(doc, "noise_scale", 0.1),
                                       value_or(doc, "magnitude_mean", 2.0)};
  }
  if (kind == "ray") {
    return source::Ray{vector_from(field(doc, "direction"), "direction"),
                       value_or(doc, "magnitudes", std::vector<double>{}),
                       value_or(doc, "magnitude_mean", 1.0)};
  }
  throw ValidationError("unknown source kind '" + kind + "'");
}

}  // namespace

json to_json(const LatentModel& model) {
  json sources = json::array();
  for (const auto& s : model.sources) sources.push_back(source_json(s));
  return {{"distribution", to_string(model.distribution.family)},
          {"n", model.n},
          {"sources", sources}};
}

LatentModel latent_model_from_json(const json& doc) {
  try {
    LatentModel model;
    model.distribution.family = parse_edge_family(field(doc, "distribution").get<std::string>());
    model.n = field(doc, "n").get<Eigen::Index>();
    for (const auto& s : field(doc, "sources")) model.sources.push_back(source_from(s));
    model.validate();
    return model;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid model document: ") + e.what());
  }
}

json to_json(const BlockModelSpec& spec) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < spec.block_parameters.rows(); ++r) {
    rows.push_back(vector_json(spec.block_parameters.row(r).transpose()));
  }
  return {{"B", rows}, {"sizes", spec.community_sizes}};
}

BlockModelSpec block_model_from_json(const json& doc) {
  try {
    BlockModelSpec spec;
    const auto& rows = field(doc, "B");
    const auto b = static_cast<Eigen::Index>(rows.size());
    if (b < 1) throw ValidationError("B must be non-empty");
    spec.block_parameters.resize(b, b);
    for (Eigen::Index r = 0; r < b; ++r) {
      const auto row = vector_from(rows.at(r), "B row");
      if (row.size() != b) throw ValidationError("B must be square");
      spec.block_parameters.row(r) = row.transpose();
    }
    spec.community_sizes = field(doc, "sizes").get<std::vector<Eigen::Index>>();
    return spec;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid block model document: ") + e.what());
  }
}

json to_json(const ChungLuSpec& spec) { return {{"weights", spec.weights}}; }

ChungLuSpec chung_lu_from_json(const json& doc) {
  try {
    return ChungLuSpec{field(doc, "weights").get<std::vector<double>>()};
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid Chung-Lu document: ") + e.what());
  }
}

json embedding_sidecar(const Embedding& e) {
  return {{"d", e.dimension},
          {"residual", e.residual},
          {"iterations", e.iterations},
          {"converged", e.converged}};
}

json to_json(const NullEnsembleReport& report) {
  json out = {{"statistic", report.statistic},
              {"null", report.null_kind},
              {"observed", report.observed},
              {"null_mean", report.null_mean},
              {"null_std", nullptr},
              {"quantile", report.quantile},
              {"two_sided", report.two_sided},
              {"samples", report.samples},
              {"seed", report.seed},
              {"N", report.samples.size()}};
  if (report.null_std) out["null_std"] = *report.null_std;
  return out;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace wrdpm
