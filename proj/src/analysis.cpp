#include "wrdpm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wrdpm/errors.hpp"
#include "wrdpm/random.hpp"
#include "wrdpm/specializations.hpp"

namespace wrdpm {

ClusteringCoefficients weighted_clustering(const WeightedGraph& g) {
  const Eigen::MatrixXd& w = g.weights();
  const Eigen::MatrixXd a = (w.array() > 0.0).cast<double>();
  const Eigen::VectorXd degree = a.rowwise().sum();
  const Eigen::VectorXd strength = w.rowwise().sum();
  // By symmetry of the (l,h) sum, Σ (w_jl + w_jh)/2 a_jl a_jh a_lh = Σ_l w_jl (A²)_jl.
  const Eigen::VectorXd numerator = w.cwiseProduct(a * a).rowwise().sum();

  ClusteringCoefficients out;
  out.per_node = Eigen::VectorXd::Zero(g.n());
  for (Eigen::Index j = 0; j < g.n(); ++j) {
    if (degree(j) >= 2.0) out.per_node(j) = numerator(j) / (strength(j) * (degree(j) - 1.0));
  }
  // Sequential sum: the result does not depend on how Eigen vectorizes reductions.
  double sum = 0.0;
  for (Eigen::Index j = 0; j < g.n(); ++j) sum += out.per_node(j);
  out.average = sum / double(g.n());
  return out;
}

std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::AvgWeightedClustering: return "avg_weighted_clustering";
    case Statistic::TotalWeight: return "total_weight";
    case Statistic::LogLikelihood: return "log_likelihood";
  }
  return "";
}

Statistic parse_statistic(const std::string& name) {
  for (auto s : {Statistic::AvgWeightedClustering, Statistic::TotalWeight,
                 Statistic::LogLikelihood}) {
    if (to_string(s) == name) return s;
  }
  throw ValidationError("unknown statistic '" + name +
                        "' (expected avg_weighted_clustering, total_weight or log_likelihood)");
}

std::string null_kind_name(const NullModel& null) {
  return std::holds_alternative<null_model::PoissonEr>(null) ? "poisson_er" : "dot_product";
}

namespace {

double evaluate(Statistic statistic, const WeightedGraph& g, const Eigen::MatrixXd& grid) {
  switch (statistic) {
    case Statistic::AvgWeightedClustering: return weighted_clustering(g).average;
    case Statistic::TotalWeight: return total_weight(g);
    case Statistic::LogLikelihood: {
      const EdgeDistribution poisson{EdgeFamily::Poisson};
      return log_likelihood(poisson, std::span(&grid, 1), g).value;
    }
  }
  return 0.0;
}

}  // namespace

NullEnsembleReport null_compare(const WeightedGraph& g, const NullModel& null, Statistic statistic,
                                std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw ValidationError("null ensemble needs at least one sample");
  const EdgeDistribution poisson{EdgeFamily::Poisson};

  Eigen::MatrixXd grid;
  if (std::holds_alternative<null_model::PoissonEr>(null)) {
    grid = Eigen::MatrixXd::Constant(g.n(), g.n(), poisson_er_rate(g));
  } else {
    const auto& x = std::get<null_model::DotProduct>(null).vectors;
    if (x.rows() != g.n()) {
      throw ValidationError("null vectors have " + std::to_string(x.rows()) +
                            " rows but the graph has " + std::to_string(g.n()) + " nodes");
    }
    grid = apply_domain_policy(poisson, x * x.transpose(), DomainPolicy::Clamp);
    grid.triangularView<Eigen::StrictlyLower>() = grid.transpose();
  }

  NullEnsembleReport report;
  report.statistic = to_string(statistic);
  report.null_kind = null_kind_name(null);
  report.seed = seed;
  report.observed = evaluate(statistic, g, grid);
  report.samples.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const WeightedGraph sample =
        sample_network(poisson, std::span(&grid, 1), derive_seed(seed, i), DomainPolicy::Clamp);
    report.samples.push_back(evaluate(statistic, sample, grid));
  }

  const double n = static_cast<double>(samples);
  report.null_mean = std::accumulate(report.samples.begin(), report.samples.end(), 0.0) / n;
  if (samples > 1) {
    double ss = 0.0;
    for (double v : report.samples) ss += (v - report.null_mean) * (v - report.null_mean);
    report.null_std = std::sqrt(ss / (n - 1.0));
  }
  double below = 0.0;
  double equal = 0.0;
  for (double v : report.samples) {
    if (v < report.observed) below += 1.0;
    else if (v == report.observed) equal += 1.0;
  }
  report.quantile = (below + 0.5 * equal) / n;
  report.two_sided = std::min(1.0, 2.0 * std::min(report.quantile, 1.0 - report.quantile));
  return report;
}

LogLikelihood evaluate_null_likelihood(const WeightedGraph& g, const Eigen::MatrixXd& x,
                                       EdgeFamily family, DomainPolicy policy) {
  if (x.rows() != g.n()) throw ValidationError("vector count does not match the graph");
  const EdgeDistribution dist{family};
  Eigen::MatrixXd grid = x * x.transpose();
  grid.triangularView<Eigen::StrictlyLower>() = grid.transpose();
  grid = apply_domain_policy(dist, std::move(grid), policy);
  return log_likelihood(dist, std::span(&grid, 1), g);
}

}  // namespace wrdpm
