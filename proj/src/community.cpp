#include "wrdpm/community.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <thread>

#include "wrdpm/errors.hpp"
#include "wrdpm/linalg.hpp"
#include "wrdpm/random.hpp"

namespace wrdpm {

Partition::Partition(std::vector<int> assignment, int k)
    : assignment_(std::move(assignment)), sizes_(k > 0 ? k : 0, 0), k_(k) {
  if (k < 1) throw ValidationError("partition needs k >= 1");
  for (int c : assignment_) {
    if (c < 0 || c >= k) throw ValidationError("community id " + std::to_string(c) + " >= k");
    ++sizes_[c];
  }
}

namespace {

struct Clustering {
  std::vector<int> labels;
  double objective = -std::numeric_limits<double>::infinity();
};

Eigen::MatrixXd centroids_of(const Eigen::MatrixXd& unit, const std::vector<Eigen::Index>& rows,
                             const std::vector<int>& labels, int k) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(k, unit.cols());
  for (std::size_t t = 0; t < rows.size(); ++t) c.row(labels[t]) += unit.row(rows[t]);
  return normalize_rows(c);
}

Clustering run_once(const Eigen::MatrixXd& unit, const std::vector<Eigen::Index>& rows, int k,
                    Rng& rng, int max_iterations) {
  const std::size_t m = rows.size();

  // k-means++ seeding with distance 1 - cos.
  Eigen::MatrixXd centroids(k, unit.cols());
  centroids.row(0) = unit.row(rows[rng.uniform_index(m)]);
  std::vector<double> dist(m, std::numeric_limits<double>::infinity());
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
      const double dd = std::max(0.0, 1.0 - unit.row(rows[t]).dot(centroids.row(c - 1)));
      dist[t] = std::min(dist[t], dd * dd);
      total += dist[t];
    }
    std::size_t pick = 0;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      pick = m - 1;
      for (std::size_t t = 0; t < m; ++t) {
        acc += dist[t];
        if (target < acc) {
          pick = t;
          break;
        }
      }
    } else {
      pick = rng.uniform_index(m);
    }
    centroids.row(c) = unit.row(rows[pick]);
  }

  std::vector<int> labels(m, -1);
  for (int it = 0; it < max_iterations; ++it) {
    bool changed = false;
    const Eigen::MatrixXd sims = unit(rows, Eigen::all) * centroids.transpose();
    for (std::size_t t = 0; t < m; ++t) {
      int best = 0;
      for (int c = 1; c < k; ++c) {
        if (sims(t, c) > sims(t, best)) best = c;
      }
      // Keep the current cluster when it ties the best.
      if (labels[t] >= 0 && sims(t, labels[t]) >= sims(t, best) - 1e-12) best = labels[t];
      if (best != labels[t]) {
        labels[t] = best;
        changed = true;
      }
    }

    // Re-seed empty clusters with the point least similar to its centroid.
    std::vector<std::size_t> counts(k, 0);
    for (int l : labels) ++counts[l];
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      std::size_t worst = m;
      double worst_sim = std::numeric_limits<double>::infinity();
      for (std::size_t t = 0; t < m; ++t) {
        if (counts[labels[t]] < 2) continue;
        const double s = sims(t, labels[t]);
        if (s < worst_sim) {
          worst_sim = s;
          worst = t;
        }
      }
      if (worst == m) break;  // fewer points than clusters
      --counts[labels[worst]];
      labels[worst] = c;
      counts[c] = 1;
      changed = true;
    }

    centroids = centroids_of(unit, rows, labels, k);
    if (!changed) break;
  }

  Clustering out;
  out.labels = std::move(labels);
  out.objective = 0.0;
  for (std::size_t t = 0; t < m; ++t) {
    out.objective += unit.row(rows[t]).dot(centroids.row(out.labels[t]));
  }
  return out;
}

}  // namespace

KMeansResult angular_kmeans_detailed(const Eigen::MatrixXd& x, int k, std::uint64_t seed,
                                     const KMeansOptions& options) {
  if (k < 1) throw ValidationError("k must be >= 1");
  if (options.restarts < 1 || options.max_iterations < 1) {
    throw ValidationError("k-means needs restarts >= 1 and max_iterations >= 1");
  }
  const Eigen::Index n = x.rows();
  if (k > n) throw ValidationError("k exceeds the number of rows");

  const Eigen::MatrixXd unit = normalize_rows(x);
  std::vector<Eigen::Index> rows;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (x.row(j).squaredNorm() > 0.0) rows.push_back(j);
  }
  if (rows.empty()) throw ValidationError("angular k-means: every row is zero");

  Rng rng(seed);
  Clustering best;
  for (int r = 0; r < options.restarts; ++r) {
    Clustering c = run_once(unit, rows, k, rng, options.max_iterations);
    if (c.objective > best.objective + 1e-12) best = std::move(c);
  }

  std::vector<int> assignment(n, 0);
  for (std::size_t t = 0; t < rows.size(); ++t) assignment[rows[t]] = best.labels[t];
  if (static_cast<Eigen::Index>(rows.size()) < n) {
    const Eigen::MatrixXd centroids = centroids_of(unit, rows, best.labels, k);
    const Eigen::VectorXd score = centroids.rowwise().sum();
    int target = 0;
    for (int c = 1; c < k; ++c) {
      if (score(c) > score(target)) target = c;
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (x.row(j).squaredNorm() == 0.0) assignment[j] = target;
    }
  }
  return {Partition(std::move(assignment), k), best.objective};
}

Partition angular_kmeans(const Eigen::MatrixXd& x, int k, std::uint64_t seed,
                         const KMeansOptions& options) {
  return angular_kmeans_detailed(x, k, seed, options).partition;
}

double stress(const Eigen::MatrixXd& x, const Partition& p, const StressOptions& options) {
  if (static_cast<Eigen::Index>(p.n()) != x.rows()) {
    throw ValidationError("partition does not cover the embedding rows");
  }
  const Eigen::MatrixXd v = options.normalized ? normalize_rows(x) : x;

  // Pair sums from per-community vector sums: Σ_{j<l} ⟨v_j,v_l⟩ = (‖Σv‖² − Σ‖v‖²)/2.
  Eigen::MatrixXd community_sum = Eigen::MatrixXd::Zero(p.k(), v.cols());
  Eigen::VectorXd community_sq = Eigen::VectorXd::Zero(p.k());
  for (Eigen::Index j = 0; j < v.rows(); ++j) {
    community_sum.row(p[j]) += v.row(j);
    community_sq(p[j]) += v.row(j).squaredNorm();
  }
  double intra = 0.0;
  double ideal = 0.0;
  for (int c = 0; c < p.k(); ++c) {
    intra += 0.5 * (community_sum.row(c).squaredNorm() - community_sq(c));
    const double z = static_cast<double>(p.sizes()[c]);
    ideal += 0.5 * z * (z - 1.0);
  }
  const double all = 0.5 * (community_sum.colwise().sum().squaredNorm() - community_sq.sum());
  const double inter = all - intra;
  return ideal - intra + inter;
}

double stress_penalized(const Eigen::MatrixXd& x, const Partition& p, const WeightedGraph& g,
                        double lambda1, double lambda2, const StressOptions& options) {
  if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0)) {
    throw ValidationError("stress penalties must be nonnegative");
  }
  double out = 0.0;
  if (lambda1 != 0.0) out += lambda1 * stress(x, p, options);
  if (lambda2 != 0.0) out += lambda2 * residual(g, x);
  return out;
}

Eigen::VectorXd centrality(const Eigen::MatrixXd& x) { return row_norms(x); }

const StressRecord& StressReport::selected() const {
  for (const auto& r : records) {
    if (r.d == selected_d) return r;
  }
  throw Error("selected dimension missing from report");
}

namespace {

StressRecord sweep_one(const WeightedGraph& g, Eigen::Index d, std::uint64_t seed,
                       const SweepOptions& options) {
  Embedding e = embed(g, d, options.solver);
  Partition p = angular_kmeans(e.vectors, static_cast<int>(d), derive_seed(seed, d),
                               options.kmeans);
  const double s = stress(e.vectors, p, options.stress);
  std::optional<double> penalized;
  if (options.penalty) {
    penalized = options.penalty->lambda1 * s + options.penalty->lambda2 * e.residual;
  }
  return StressRecord{d, s, penalized, std::move(e), std::move(p)};
}

}  // namespace

StressReport dimension_sweep(const WeightedGraph& g, Eigen::Index d_min, Eigen::Index d_max,
                             std::uint64_t seed, const SweepOptions& options) {
  if (d_min < 1 || d_max < d_min || d_max > g.n()) {
    throw ValidationError("dimension range [" + std::to_string(d_min) + ", " +
                          std::to_string(d_max) + "] must lie within [1, " +
                          std::to_string(g.n()) + "]");
  }
  if (options.penalty && (!(options.penalty->lambda1 >= 0.0) || !(options.penalty->lambda2 >= 0.0))) {
    throw ValidationError("stress penalties must be nonnegative");
  }
  options.solver.validate();

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, threads);

  const auto count = static_cast<std::size_t>(d_max - d_min + 1);
  std::vector<std::optional<StressRecord>> slots(count);
  for (std::size_t start = 0; start < count; start += threads) {
    const std::size_t stop = std::min(count, start + threads);
    if (threads == 1) {
      slots[start] = sweep_one(g, d_min + static_cast<Eigen::Index>(start), seed, options);
      continue;
    }
    std::vector<std::future<StressRecord>> batch;
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, sweep_one, std::cref(g),
                                 d_min + static_cast<Eigen::Index>(i), seed, std::cref(options)));
    }
    for (std::size_t i = start; i < stop; ++i) slots[i] = batch[i - start].get();
  }

  StressReport report{{}, d_min};
  double best = std::numeric_limits<double>::infinity();
  for (auto& slot : slots) {
    const double score = options.penalty ? *slot->penalized_stress : slot->stress;
    if (score < best) {
      best = score;
      report.selected_d = slot->d;
    }
    report.records.push_back(std::move(*slot));
  }
  return report;
}

}  // namespace wrdpm
