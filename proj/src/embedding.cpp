#include "wrdpm/embedding.hpp"

#include <limits>

#include "wrdpm/errors.hpp"
#include "wrdpm/io.hpp"
#include "wrdpm/linalg.hpp"

namespace wrdpm {

std::string to_string(DiagonalInit init) {
  switch (init) {
    case DiagonalInit::DegreeMean: return "degree-mean";
    case DiagonalInit::Zeros: return "zeros";
    case DiagonalInit::Dominant: return "dominant";
  }
  return "degree-mean";
}

DiagonalInit parse_diagonal_init(const std::string& name) {
  if (name == "degree-mean") return DiagonalInit::DegreeMean;
  if (name == "zeros") return DiagonalInit::Zeros;
  if (name == "dominant") return DiagonalInit::Dominant;
  throw ValidationError("unknown diagonal init '" + name +
                        "' (expected degree-mean, zeros or dominant)");
}

void SolverConfig::validate() const {
  if (max_iterations < 1) throw ValidationError("max_iterations must be >= 1");
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be > 0");
}

double residual(const WeightedGraph& g, const Eigen::MatrixXd& x) {
  return offdiagonal_residual(g.weights(), x);
}

Embedding embed(const WeightedGraph& g, Eigen::Index d, const SolverConfig& config) {
  config.validate();
  const Eigen::Index n = g.n();
  if (d < 1 || d > n) {
    throw ValidationError("embedding dimension " + std::to_string(d) + " outside [1, " +
                          std::to_string(n) + "]");
  }

  Eigen::MatrixXd a = g.weights();
  switch (config.diagonal_init) {
    case DiagonalInit::DegreeMean:
      a.diagonal() = n > 1 ? Eigen::VectorXd(g.weights().rowwise().sum() / double(n - 1))
                           : Eigen::VectorXd::Zero(n);
      break;
    case DiagonalInit::Zeros: a.diagonal().setZero(); break;
    case DiagonalInit::Dominant:
      a.diagonal() = g.weights().cwiseAbs().rowwise().sum().array() + 1.0;
      break;
  }

  Embedding best;
  best.dimension = d;
  best.residual = std::numeric_limits<double>::infinity();
  std::vector<double> history;

  for (int it = 1; it <= config.max_iterations; ++it) {
    Eigen::MatrixXd x = truncated_psd_factor(a, d);
    const Eigen::VectorXd next_diag = x.rowwise().squaredNorm();
    const double change = (next_diag - a.diagonal()).norm();
    a.diagonal() = next_diag;

    const double res = offdiagonal_residual(g.weights(), x);
    history.push_back(res);
    if (res < best.residual || best.vectors.size() == 0) {
      best.vectors = std::move(x);
      best.residual = res;
    }
    best.iterations = it;
    if (change < config.tolerance) {
      best.converged = true;
      break;
    }
  }
  best.residual_history = std::move(history);
  return best;
}

}  // namespace wrdpm
