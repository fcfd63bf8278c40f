#ifndef WRDPM_LATENT_MODEL_HPP
#define WRDPM_LATENT_MODEL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "wrdpm/graph.hpp"

namespace wrdpm {

enum class EdgeFamily { Bernoulli, Poisson };

std::string to_string(EdgeFamily family);
EdgeFamily parse_edge_family(const std::string& name);

/// Edge-weight distribution. Both shipped families take one parameter:
/// Bernoulli on the open interval (0,1), Poisson on [0, inf).
struct EdgeDistribution {
  EdgeFamily family = EdgeFamily::Poisson;

  std::size_t parameter_count() const noexcept { return 1; }
  bool in_domain(std::size_t parameter, double value) const;
  std::string domain_description(std::size_t parameter) const;
};

/// How out-of-domain parameters are treated by `sample_network`.
enum class DomainPolicy {
  Strict,  ///< throw DomainError naming the offending pair
  Clamp,   ///< Poisson: max(0, λ); Bernoulli: clamp to [0,1]
};

namespace source {

/// Every node receives the same vector.
struct Constant {
  Eigen::VectorXd vector;
};

/// Nodes take one of finitely many vectors. With `assignment` set (one entry
/// per node), nodes are mapped directly; otherwise each node draws a vector
/// index with the given probabilities.
struct FiniteSupport {
  std::vector<Eigen::VectorXd> vectors;
  std::vector<double> probabilities;
  std::vector<std::size_t> assignment;
};

/// e_c + Σ_i Y_i e_i with c uniform over the d axes and Y_i i.i.d. half-normal
/// with scale `noise_scale` (the standard deviation of the unfolded normal).
struct AxisNoise {
  Eigen::Index dimension = 3;
  double noise_scale = 0.1;
};

/// X e_c + Σ_{i≠c} Y_i e_i with X exponential of mean `magnitude_mean` and Y_i
/// as in AxisNoise.
struct MultiresolutionAxis {
  Eigen::Index dimension = 3;
  double noise_scale = 0.1;
  double magnitude_mean = 2.0;
};

/// Vectors m·direction with m ≥ 0. Per-node magnitudes when `magnitudes` is
/// non-empty, otherwise m is exponential with mean `magnitude_mean`.
struct Ray {
  Eigen::VectorXd direction;
  std::vector<double> magnitudes;
  double magnitude_mean = 1.0;
};

}  // namespace source

using VectorSource = std::variant<source::Constant, source::FiniteSupport, source::AxisNoise,
                                  source::MultiresolutionAxis, source::Ray>;

Eigen::Index dimension(const VectorSource& s);
std::string kind_name(const VectorSource& s);

/// Full parameter set: edge distribution, node count, and one vector source
/// per distribution parameter.
struct LatentModel {
  EdgeDistribution distribution;
  Eigen::Index n = 0;
  std::vector<VectorSource> sources;

  /// Throws ValidationError on inconsistent shapes or invalid source parameters.
  void validate() const;
};

/// Latent vectors for every node: `vectors[i]` is n×d_i, row j is node j's
/// vector in parameter space i. `components[i][j]` records which mixture
/// component node j came from (vector index or axis), or -1 when the source
/// has no components.
struct DrawnVectors {
  std::vector<Eigen::MatrixXd> vectors;
  std::vector<std::vector<int>> components;

  Eigen::Index n() const { return vectors.empty() ? 0 : vectors.front().rows(); }
};

/// Wraps a fixed n×d matrix, e.g. a learned embedding, as single-parameter vectors.
DrawnVectors fixed_vectors(Eigen::MatrixXd x);

DrawnVectors draw_vectors(const LatentModel& model, std::uint64_t seed);

/// Pairwise dot products of parameter space `parameter`.
Eigen::MatrixXd dot_product_grid(const DrawnVectors& vectors, std::size_t parameter = 0);

WeightedGraph sample_network(const EdgeDistribution& distribution,
                             std::span<const Eigen::MatrixXd> grids, std::uint64_t seed,
                             DomainPolicy policy = DomainPolicy::Strict);

WeightedGraph sample_network(const LatentModel& model, const DrawnVectors& vectors,
                             std::uint64_t seed, DomainPolicy policy = DomainPolicy::Strict);

struct LogLikelihood {
  double value = 0.0;
  /// Set when some observation has probability zero; `value` is then -inf.
  bool impossible = false;
};

/// Σ_{j<l} log P(A_jl | grids(j,l)). Weights must be nonnegative integers
/// (0/1 for Bernoulli).
LogLikelihood log_likelihood(const EdgeDistribution& distribution,
                             std::span<const Eigen::MatrixXd> grids, const WeightedGraph& g);

LogLikelihood log_likelihood(const EdgeDistribution& distribution, const DrawnVectors& vectors,
                             const WeightedGraph& g);

/// Applies `policy` to a grid: identity for Strict, clamping otherwise.
Eigen::MatrixXd apply_domain_policy(const EdgeDistribution& distribution, Eigen::MatrixXd grid,
                                    DomainPolicy policy);

}  // namespace wrdpm

#endif  // WRDPM_LATENT_MODEL_HPP
