#ifndef WRDPM_MODEL_JSON_HPP
#define WRDPM_MODEL_JSON_HPP

#include <json.hpp>

#include "wrdpm/analysis.hpp"
#include "wrdpm/embedding.hpp"
#include "wrdpm/latent_model.hpp"
#include "wrdpm/specializations.hpp"

namespace wrdpm {

// Latent model document:
//   {"distribution": "poisson", "n": 150,
//    "sources": [{"kind": "axis_noise", "dimension": 3, "noise_scale": 0.1}]}
// Source kinds and fields:
//   constant             vector
//   finite_support       vectors, probabilities, assignment (optional)
//   axis_noise           dimension, noise_scale
//   multiresolution_axis dimension, noise_scale, magnitude_mean
//   ray                  direction, magnitudes (optional), magnitude_mean
nlohmann::json to_json(const LatentModel& model);
LatentModel latent_model_from_json(const nlohmann::json& doc);

// {"B": [[...], ...], "sizes": [...]}
nlohmann::json to_json(const BlockModelSpec& spec);
BlockModelSpec block_model_from_json(const nlohmann::json& doc);

// {"weights": [...]}
nlohmann::json to_json(const ChungLuSpec& spec);
ChungLuSpec chung_lu_from_json(const nlohmann::json& doc);

/// {"d", "residual", "iterations", "converged"}.
nlohmann::json embedding_sidecar(const Embedding& e);

/// {"statistic", "null", "observed", "null_mean", "null_std", "quantile",
///  "two_sided", "samples", "seed", "N"}; null_std is null for N < 2.
nlohmann::json to_json(const NullEnsembleReport& report);

nlohmann::json parse_json_text(const std::string& text);

}  // namespace wrdpm

#endif  // WRDPM_MODEL_JSON_HPP
