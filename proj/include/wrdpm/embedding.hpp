#ifndef WRDPM_EMBEDDING_HPP
#define WRDPM_EMBEDDING_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wrdpm/graph.hpp"

namespace wrdpm {

enum class DiagonalInit {
  DegreeMean,  ///< Σ_l A_jl / (n-1)
  Zeros,
  Dominant,  ///< Σ_l |A_jl| + 1: positive definite start
};

std::string to_string(DiagonalInit init);
DiagonalInit parse_diagonal_init(const std::string& name);

struct SolverConfig {
  int max_iterations = 500;
  /// Stop once the L2 change of the imputed diagonal falls below this.
  double tolerance = 1e-8;
  DiagonalInit diagonal_init = DiagonalInit::DegreeMean;

  void validate() const;
};

/// Latent vectors fitted to an observed graph.
struct Embedding {
  /// n×d, row j is node j's vector.
  Eigen::MatrixXd vectors;
  Eigen::Index dimension = 0;
  /// Off-diagonal Frobenius discrepancy of vectors·vectorsᵀ against the graph.
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  /// Off-diagonal residual after each iteration; non-increasing.
  std::vector<double> residual_history;
};

/// Fits n×d vectors whose pairwise dot products approximate the graph's
/// off-diagonal weights.
///
/// Alternates between the best rank-d positive semidefinite approximation of
/// the adjacency matrix with an imputed diagonal, and replacing that diagonal
/// with the diagonal of the approximation. Every step lowers (or keeps) the
/// off-diagonal residual. On hitting `max_iterations` the best iterate is
/// returned with `converged = false`.
Embedding embed(const WeightedGraph& g, Eigen::Index d, const SolverConfig& config = {});

/// √(Σ_{j≠l} (⟨X_j, X_l⟩ − A_jl)²).
double residual(const WeightedGraph& g, const Eigen::MatrixXd& x);

}  // namespace wrdpm

#endif  // WRDPM_EMBEDDING_HPP
