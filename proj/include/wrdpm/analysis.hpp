#ifndef WRDPM_ANALYSIS_HPP
#define WRDPM_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "wrdpm/graph.hpp"
#include "wrdpm/latent_model.hpp"

namespace wrdpm {

struct ClusteringCoefficients {
  Eigen::VectorXd per_node;
  double average = 0.0;
};

/// Barrat weighted clustering coefficient:
///   c_j = 1/(s_j (k_j − 1)) Σ_{l,h} (w_jl + w_jh)/2 · a_jl a_jh a_lh
/// with s_j the strength and k_j the degree of the binarized graph; nodes with
/// k_j < 2 get 0. The average runs over all nodes.
ClusteringCoefficients weighted_clustering(const WeightedGraph& g);

namespace null_model {

/// Constant-rate Poisson graph with the observed graph's MLE rate.
struct PoissonEr {};

/// Poisson graph whose rates are the (clamped) dot products of fixed vectors.
struct DotProduct {
  Eigen::MatrixXd vectors;
};

}  // namespace null_model

using NullModel = std::variant<null_model::PoissonEr, null_model::DotProduct>;

enum class Statistic { AvgWeightedClustering, TotalWeight, LogLikelihood };

std::string to_string(Statistic s);
/// Accepts avg_weighted_clustering, total_weight, log_likelihood.
Statistic parse_statistic(const std::string& name);
std::string null_kind_name(const NullModel& null);

struct NullEnsembleReport {
  std::string statistic;
  std::string null_kind;
  double observed = 0.0;
  std::vector<double> samples;
  double null_mean = 0.0;
  /// Sample standard deviation; absent when fewer than two samples.
  std::optional<double> null_std;
  /// Mid-rank empirical CDF of `observed` among the samples.
  double quantile = 0.0;
  /// min(1, 2·min(quantile, 1 − quantile)).
  double two_sided = 0.0;
  std::uint64_t seed = 0;
  std::size_t sample_count() const { return samples.size(); }
};

/// Fits `null` to `g`, draws `samples` Poisson networks from it (sample i with
/// seed derive_seed(seed, i)), and evaluates `statistic` on each and on `g`.
/// The log-likelihood statistic scores every graph under the null's own rates.
NullEnsembleReport null_compare(const WeightedGraph& g, const NullModel& null, Statistic statistic,
                                std::size_t samples, std::uint64_t seed);

/// Log-likelihood of `g` under rates (or probabilities) X Xᵀ.
LogLikelihood evaluate_null_likelihood(const WeightedGraph& g, const Eigen::MatrixXd& x,
                                       EdgeFamily family,
                                       DomainPolicy policy = DomainPolicy::Strict);

}  // namespace wrdpm

#endif  // WRDPM_ANALYSIS_HPP
