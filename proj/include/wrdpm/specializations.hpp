#ifndef WRDPM_SPECIALIZATIONS_HPP
#define WRDPM_SPECIALIZATIONS_HPP

#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "wrdpm/graph.hpp"
#include "wrdpm/latent_model.hpp"

namespace wrdpm {

namespace diagonal {

/// a_ll = Σ_{j≠l} |a_jl| + delta. Strictly diagonally dominant, hence
/// positive definite by Gershgorin, for any delta > 0.
struct Dominant {
  double delta = 1.0;
};

/// a_ll = Σ_{j≠l} |a_jl|, the diagonal of |L| = D + A. Positive semidefinite.
struct LaplacianAbs {};

}  // namespace diagonal

using DiagonalStrategy = std::variant<diagonal::Dominant, diagonal::LaplacianAbs>;

/// Symmetric matrix with the given off-diagonal entries and a diagonal chosen
/// by `strategy`.
Eigen::MatrixXd complete_diagonal(const SymmetricOffDiagonal& m, const DiagonalStrategy& strategy);

/// Realizes an arbitrary edge-parameter assignment as a latent model: dominant
/// completion, full-rank factorization, and direct node-to-vector assignment.
/// The returned vectors reproduce every off-diagonal parameter.
LatentModel realize_edge_parameters(const SymmetricOffDiagonal& parameters, EdgeFamily family,
                                    double delta = 1.0);

struct BlockModelSpec {
  /// b×b symmetric matrix of block parameters.
  Eigen::MatrixXd block_parameters;
  /// Community sizes; nodes are assigned to blocks in order.
  std::vector<Eigen::Index> community_sizes;

  Eigen::Index block_count() const { return block_parameters.rows(); }
  Eigen::Index node_count() const;
  void validate(const EdgeDistribution& distribution, bool check_diagonal) const;
};

struct ChungLuSpec {
  std::vector<double> weights;
};

/// Constant-vector model whose every pair has parameter `theta`. The vector is
/// (√θ, 0, ..., 0) in `dim` dimensions.
LatentModel make_er(Eigen::Index n, EdgeFamily family, double theta, Eigen::Index dim = 1);

/// Poisson rate MLE total_weight / C(n,2).
double poisson_er_rate(const WeightedGraph& g);

LatentModel fit_poisson_er(const WeightedGraph& g);

/// Block model as a finite-support latent model with nodes assigned directly to
/// their block's vector. With `magnitude_normalization`, the factored matrix
/// uses diagonal n·Σ_z B_{x,z}, which gives every block the same squared
/// vector length scale and replaces the intra-block parameter; without it, B
/// itself must be positive semidefinite. Zero-eigenvalue columns are dropped,
/// so a rank-one B yields one-dimensional vectors.
LatentModel make_sbm(const BlockModelSpec& spec, EdgeFamily family, bool magnitude_normalization);

/// Ray model with direction e_1/√Σw and node magnitudes w_j, so pair (j,l)
/// has parameter w_j·w_l/Σw.
LatentModel make_chung_lu(const ChungLuSpec& spec, EdgeFamily family, Eigen::Index dim = 1);

}  // namespace wrdpm

#endif  // WRDPM_SPECIALIZATIONS_HPP
