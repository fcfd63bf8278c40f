#include "wrdpm/specializations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wrdpm/errors.hpp"
#include "wrdpm/io.hpp"
#include "wrdpm/linalg.hpp"

namespace wrdpm {

Eigen::MatrixXd complete_diagonal(const SymmetricOffDiagonal& m, const DiagonalStrategy& strategy) {
  double delta = 0.0;
  if (const auto* dom = std::get_if<diagonal::Dominant>(&strategy)) {
    if (!(dom->delta > 0.0)) {
      throw ValidationError("dominant completion needs delta > 0, got " +
                            format_number(dom->delta));
    }
    delta = dom->delta;
  }
  const Eigen::Index n = m.n();
  Eigen::VectorXd diag(n);
  for (Eigen::Index l = 0; l < n; ++l) {
    double radius = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != l) radius += std::abs(m(j, l));
    }
    diag(l) = radius + delta;
  }
  return m.with_diagonal(diag);
}

LatentModel realize_edge_parameters(const SymmetricOffDiagonal& parameters, EdgeFamily family,
                                    double delta) {
  EdgeDistribution dist{family};
  const Eigen::Index n = parameters.n();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index l = j + 1; l < n; ++l) {
      if (!dist.in_domain(0, parameters(j, l))) {
        throw DomainError("edge parameter " + format_number(parameters(j, l)) + " for pair (" +
                          std::to_string(j) + "," + std::to_string(l) + ") outside " +
                          dist.domain_description(0));
      }
    }
  }
  const Eigen::MatrixXd completed = complete_diagonal(parameters, diagonal::Dominant{delta});
  const Eigen::MatrixXd x = factor_psd(completed, n);

  source::FiniteSupport support;
  support.probabilities.assign(n, 1.0 / static_cast<double>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    support.vectors.emplace_back(x.row(j).transpose());
    support.assignment.push_back(static_cast<std::size_t>(j));
  }
  LatentModel model{dist, n, {std::move(support)}};
  model.validate();
  return model;
}

Eigen::Index BlockModelSpec::node_count() const {
  return std::accumulate(community_sizes.begin(), community_sizes.end(), Eigen::Index{0});
}

void BlockModelSpec::validate(const EdgeDistribution& distribution, bool check_diagonal) const {
  const Eigen::Index b = block_parameters.rows();
  if (b < 1 || block_parameters.cols() != b) {
    throw ValidationError("block matrix must be square and non-empty");
  }
  if (static_cast<Eigen::Index>(community_sizes.size()) != b) {
    throw ValidationError("need one community size per block");
  }
  for (auto z : community_sizes) {
    if (z < 1) throw ValidationError("community sizes must be positive");
  }
  for (Eigen::Index x = 0; x < b; ++x) {
    for (Eigen::Index y = x; y < b; ++y) {
      if (block_parameters(x, y) != block_parameters(y, x)) {
        throw ValidationError("block matrix must be symmetric");
      }
      if (x == y && !check_diagonal) continue;
      if (!distribution.in_domain(0, block_parameters(x, y))) {
        throw DomainError("block parameter B(" + std::to_string(x) + "," + std::to_string(y) +
                          ")=" + format_number(block_parameters(x, y)) + " outside " +
                          distribution.domain_description(0));
      }
    }
  }
}

LatentModel make_er(Eigen::Index n, EdgeFamily family, double theta, Eigen::Index dim) {
  EdgeDistribution dist{family};
  if (!dist.in_domain(0, theta)) {
    throw DomainError("parameter " + format_number(theta) + " outside " + to_string(family) +
                      " domain " + dist.domain_description(0));
  }
  if (dim < 1) throw ValidationError("dimension must be positive");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v(0) = std::sqrt(theta);
  LatentModel model{dist, n, {source::Constant{v}}};
  model.validate();
  return model;
}

double poisson_er_rate(const WeightedGraph& g) {
  if (g.n() < 2) throw ValidationError("Poisson rate estimate needs at least two nodes");
  const double pairs = static_cast<double>(g.n()) * static_cast<double>(g.n() - 1) / 2.0;
  return total_weight(g) / pairs;
}

LatentModel fit_poisson_er(const WeightedGraph& g) {
  return make_er(g.n(), EdgeFamily::Poisson, poisson_er_rate(g));
}

LatentModel make_sbm(const BlockModelSpec& spec, EdgeFamily family, bool magnitude_normalization) {
  EdgeDistribution dist{family};
  spec.validate(dist, !magnitude_normalization);
  const Eigen::Index b = spec.block_count();
  const Eigen::Index n = spec.node_count();

  Eigen::MatrixXd target = spec.block_parameters;
  if (magnitude_normalization) {
    const Eigen::VectorXd row_sums = spec.block_parameters.rowwise().sum();
    target.diagonal() = static_cast<double>(n) * row_sums;
  }
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd x = factor_psd(target, b);
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(target, Eigen::EigenvaluesOnly);
    eigenvalues = eig.eigenvalues().reverse();
  }
  const double tol = 1e-9 * std::max(1.0, target.norm());
  Eigen::Index rank = 0;
  while (rank < b && eigenvalues(rank) > tol) ++rank;
  x.conservativeResize(Eigen::NoChange, std::max<Eigen::Index>(rank, 1));

  source::FiniteSupport support;
  for (Eigen::Index c = 0; c < b; ++c) {
    support.vectors.emplace_back(x.row(c).transpose());
    support.probabilities.push_back(static_cast<double>(spec.community_sizes[c]) /
                                    static_cast<double>(n));
  }
  for (Eigen::Index c = 0; c < b; ++c) {
    support.assignment.insert(support.assignment.end(), spec.community_sizes[c],
                              static_cast<std::size_t>(c));
  }
  // Renormalize so rounding in size/n never trips the sum-to-one check.
  const double total =
      std::accumulate(support.probabilities.begin(), support.probabilities.end(), 0.0);
  for (double& p : support.probabilities) p /= total;

  LatentModel model{dist, n, {std::move(support)}};
  model.validate();
  return model;
}

LatentModel make_chung_lu(const ChungLuSpec& spec, EdgeFamily family, Eigen::Index dim) {
  const auto& w = spec.weights;
  if (w.size() < 2) throw ValidationError("Chung-Lu needs at least two weights");
  if (dim < 1) throw ValidationError("dimension must be positive");
  for (double v : w) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError("Chung-Lu weights must be > 0");
  }
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  EdgeDistribution dist{family};
  if (family == EdgeFamily::Bernoulli) {
    std::vector<double> sorted = w;
    std::partial_sort(sorted.begin(), sorted.begin() + 2, sorted.end(), std::greater<>());
    const double max_p = sorted[0] * sorted[1] / sum;
    if (!dist.in_domain(0, max_p)) {
      throw DomainError("Chung-Lu edge probability " + format_number(max_p) +
                        " outside bernoulli domain (0,1)");
    }
  }
  Eigen::VectorXd direction = Eigen::VectorXd::Zero(dim);
  direction(0) = 1.0 / std::sqrt(sum);
  LatentModel model{dist, static_cast<Eigen::Index>(w.size()), {source::Ray{direction, w, 1.0}}};
  model.validate();
  return model;
}

}  // namespace wrdpm
