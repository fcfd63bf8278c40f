#ifndef WRDPM_COMMUNITY_HPP
#define WRDPM_COMMUNITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "wrdpm/embedding.hpp"
#include "wrdpm/graph.hpp"

namespace wrdpm {

/// Community assignment of n nodes into k communities.
class Partition {
 public:
  Partition(std::vector<int> assignment, int k);

  int k() const noexcept { return k_; }
  std::size_t n() const noexcept { return assignment_.size(); }
  const std::vector<int>& assignment() const noexcept { return assignment_; }
  int operator[](std::size_t j) const { return assignment_[j]; }
  /// Node count per community.
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }

 private:
  std::vector<int> assignment_;
  std::vector<std::size_t> sizes_;
  int k_;
};

struct KMeansOptions {
  int max_iterations = 100;
  int restarts = 10;
};

struct KMeansResult {
  Partition partition;
  /// Σ_j cos(x_j, centroid of j's cluster) over nonzero rows.
  double objective;
};

/// Spherical k-means on the row directions of `x`.
///
/// Rows are normalized; each restart seeds centroids k-means++ style on cosine
/// distance, then alternates nearest-centroid assignment (by dot product) with
/// centroid = normalized member mean. Empty clusters are re-seeded with the
/// point least similar to its own centroid. The best objective over restarts
/// wins. Zero rows do not take part and join the cluster whose centroid has the
/// largest component sum (cluster 0 on ties).
KMeansResult angular_kmeans_detailed(const Eigen::MatrixXd& x, int k, std::uint64_t seed,
                                     const KMeansOptions& options = {});

Partition angular_kmeans(const Eigen::MatrixXd& x, int k, std::uint64_t seed,
                         const KMeansOptions& options = {});

struct StressOptions {
  /// Use unit-length rows (zero rows contribute nothing).
  bool normalized = true;
};

/// Σ_i C(z_i, 2) − (intra-community dot products) + (inter-community dot products).
double stress(const Eigen::MatrixXd& x, const Partition& p, const StressOptions& options = {});

/// λ₁·stress + λ₂·off-diagonal residual against `g`.
double stress_penalized(const Eigen::MatrixXd& x, const Partition& p, const WeightedGraph& g,
                        double lambda1, double lambda2, const StressOptions& options = {});

/// Vector length per node.
Eigen::VectorXd centrality(const Eigen::MatrixXd& x);

struct Penalty {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
};

struct SweepOptions {
  SolverConfig solver;
  KMeansOptions kmeans;
  StressOptions stress;
  /// When set, selection minimizes the penalized stress.
  std::optional<Penalty> penalty;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct StressRecord {
  Eigen::Index d;
  double stress;
  std::optional<double> penalized_stress;
  Embedding embedding;
  Partition partition;
};

struct StressReport {
  std::vector<StressRecord> records;
  Eigen::Index selected_d;

  const StressRecord& selected() const;
};

/// For each d in [d_min, d_max]: embed at d, cluster with k = d, score. The
/// selected d minimizes the stress (penalized when requested), smallest d on
/// ties. Each d uses seed derive_seed(seed, d) for clustering.
StressReport dimension_sweep(const WeightedGraph& g, Eigen::Index d_min, Eigen::Index d_max,
                             std::uint64_t seed, const SweepOptions& options = {});

}  // namespace wrdpm

#endif  // WRDPM_COMMUNITY_HPP
