#include "wrdpm/latent_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "wrdpm/errors.hpp"
#include "wrdpm/io.hpp"
#include "wrdpm/random.hpp"

namespace wrdpm {

std::string to_string(EdgeFamily family) {
  return family == EdgeFamily::Bernoulli ? "bernoulli" : "poisson";
}

EdgeFamily parse_edge_family(const std::string& name) {
  if (name == "bernoulli") return EdgeFamily::Bernoulli;
  if (name == "poisson") return EdgeFamily::Poisson;
  throw ValidationError("unknown edge family '" + name + "' (expected bernoulli or poisson)");
}

bool EdgeDistribution::in_domain(std::size_t, double value) const {
  if (!std::isfinite(value)) return false;
  return family == EdgeFamily::Bernoulli ? (value > 0.0 && value < 1.0) : value >= 0.0;
}

std::string EdgeDistribution::domain_description(std::size_t) const {
  return family == EdgeFamily::Bernoulli ? "(0,1)" : "[0,inf)";
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Eigen::Index dimension(const VectorSource& s) {
  return std::visit(
      overloaded{
          [](const source::Constant& c) { return c.vector.size(); },
          [](const source::FiniteSupport& f) {
            return f.vectors.empty() ? Eigen::Index{0} : f.vectors.front().size();
          },
          [](const source::AxisNoise& a) { return a.dimension; },
          [](const source::MultiresolutionAxis& m) { return m.dimension; },
          [](const source::Ray& r) { return r.direction.size(); },
      },
      s);
}

std::string kind_name(const VectorSource& s) {
  return std::visit(overloaded{
                        [](const source::Constant&) { return "constant"; },
                        [](const source::FiniteSupport&) { return "finite_support"; },
                        [](const source::AxisNoise&) { return "axis_noise"; },
                        [](const source::MultiresolutionAxis&) { return "multiresolution_axis"; },
                        [](const source::Ray&) { return "ray"; },
                    },
                    s);
}

void LatentModel::validate() const {
  if (n < 1) throw ValidationError("model node count must be positive");
  if (sources.size() != distribution.parameter_count()) {
    throw ValidationError("expected " + std::to_string(distribution.parameter_count()) +
                          " vector source(s), got " + std::to_string(sources.size()));
  }
  for (const auto& s : sources) {
    if (dimension(s) < 1) throw ValidationError(kind_name(s) + " source has dimension < 1");
    std::visit(
        overloaded{
            [](const source::Constant&) {},
            [this](const source::FiniteSupport& f) {
              const Eigen::Index d = f.vectors.front().size();
              for (const auto& v : f.vectors) {
                if (v.size() != d) throw ValidationError("finite support vectors differ in size");
              }
              if (f.probabilities.size() != f.vectors.size()) {
                throw ValidationError("finite support needs one probability per vector");
              }
              double total = 0.0;
              for (double p : f.probabilities) {
                if (!(p >= 0.0)) throw ValidationError("negative finite support probability");
                total += p;
              }
              if (std::abs(total - 1.0) > 1e-12) {
                throw ValidationError("finite support probabilities sum to " +
                                      format_number(total) + ", not 1");
              }
              if (!f.assignment.empty()) {
                if (static_cast<Eigen::Index>(f.assignment.size()) != n) {
                  throw ValidationError("finite support assignment must list every node");
                }
                for (auto a : f.assignment) {
                  if (a >= f.vectors.size()) throw ValidationError("assignment index out of range");
                }
              }
            },
            [](const source::AxisNoise& a) {
              if (!(a.noise_scale >= 0.0)) throw ValidationError("noise_scale must be >= 0");
            },
            [](const source::MultiresolutionAxis& m) {
              if (m.dimension < 2) throw ValidationError("multiresolution needs dimension >= 2");
              if (!(m.noise_scale >= 0.0)) throw ValidationError("noise_scale must be >= 0");
              if (!(m.magnitude_mean > 0.0)) throw ValidationError("magnitude_mean must be > 0");
            },
            [this](const source::Ray& r) {
              if (!r.magnitudes.empty()) {
                if (static_cast<Eigen::Index>(r.magnitudes.size()) != n) {
                  throw ValidationError("ray magnitudes must list every node");
                }
                for (double m : r.magnitudes) {
                  if (!(m >= 0.0)) throw ValidationError("ray magnitudes must be >= 0");
                }
              } else if (!(r.magnitude_mean > 0.0)) {
                throw ValidationError("ray magnitude_mean must be > 0");
              }
            },
        },
        s);
  }
}

DrawnVectors fixed_vectors(Eigen::MatrixXd x) {
  DrawnVectors out;
  out.components.emplace_back(x.rows(), -1);
  out.vectors.push_back(std::move(x));
  return out;
}

namespace {

void draw_source(const VectorSource& s, Eigen::Index n, Rng& rng, Eigen::MatrixXd& rows,
                 std::vector<int>& components) {
  const Eigen::Index d = dimension(s);
  rows = Eigen::MatrixXd::Zero(n, d);
  components.assign(n, -1);
  std::visit(
      overloaded{
          [&](const source::Constant& c) { rows.rowwise() = c.vector.transpose(); },
          [&](const source::FiniteSupport& f) {
            for (Eigen::Index j = 0; j < n; ++j) {
              std::size_t pick = 0;
              if (!f.assignment.empty()) {
                pick = f.assignment[j];
              } else {
                const double u = rng.uniform();
                double cdf = 0.0;
                pick = f.vectors.size() - 1;
                for (std::size_t t = 0; t < f.probabilities.size(); ++t) {
                  cdf += f.probabilities[t];
                  if (u < cdf) {
                    pick = t;
                    break;
                  }
                }
              }
              rows.row(j) = f.vectors[pick].transpose();
              components[j] = static_cast<int>(pick);
            }
          },
          [&](const source::AxisNoise& a) {
            for (Eigen::Index j = 0; j < n; ++j) {
              const auto axis = static_cast<Eigen::Index>(rng.uniform_index(d));
              for (Eigen::Index i = 0; i < d; ++i) rows(j, i) = rng.half_normal(a.noise_scale);
              rows(j, axis) += 1.0;
              components[j] = static_cast<int>(axis);
            }
          },
          [&](const source::MultiresolutionAxis& m) {
            for (Eigen::Index j = 0; j < n; ++j) {
              const auto axis = static_cast<Eigen::Index>(rng.uniform_index(d));
              rows(j, axis) = rng.exponential_with_mean(m.magnitude_mean);
              for (Eigen::Index i = 0; i < d; ++i) {
                if (i != axis) rows(j, i) = rng.half_normal(m.noise_scale);
              }
              components[j] = static_cast<int>(axis);
            }
          },
          [&](const source::Ray& r) {
            for (Eigen::Index j = 0; j < n; ++j) {
              const double m = r.magnitudes.empty() ? rng.exponential_with_mean(r.magnitude_mean)
                                                    : r.magnitudes[j];
              rows.row(j) = m * r.direction.transpose();
            }
          },
      },
      s);
}

}  // namespace

DrawnVectors draw_vectors(const LatentModel& model, std::uint64_t seed) {
  model.validate();
  Rng rng(seed);
  DrawnVectors out;
  out.vectors.resize(model.sources.size());
  out.components.resize(model.sources.size());
  for (std::size_t i = 0; i < model.sources.size(); ++i) {
    draw_source(model.sources[i], model.n, rng, out.vectors[i], out.components[i]);
  }
  return out;
}

Eigen::MatrixXd dot_product_grid(const DrawnVectors& vectors, std::size_t parameter) {
  if (parameter >= vectors.vectors.size()) throw ValidationError("parameter index out of range");
  const Eigen::MatrixXd& x = vectors.vectors[parameter];
  Eigen::MatrixXd grid = x * x.transpose();
  // The product is symmetric mathematically; make it so bitwise.
  grid.triangularView<Eigen::StrictlyLower>() = grid.transpose();
  return grid;
}

Eigen::MatrixXd apply_domain_policy(const EdgeDistribution& distribution, Eigen::MatrixXd grid,
                                    DomainPolicy policy) {
  if (policy == DomainPolicy::Strict) return grid;
  if (distribution.family == EdgeFamily::Poisson) return grid.cwiseMax(0.0);
  return grid.cwiseMax(0.0).cwiseMin(1.0);
}

WeightedGraph sample_network(const EdgeDistribution& distribution,
                             std::span<const Eigen::MatrixXd> grids, std::uint64_t seed,
                             DomainPolicy policy) {
  if (grids.size() != distribution.parameter_count()) {
    throw ValidationError("expected one grid per distribution parameter");
  }
  const Eigen::Index n = grids.front().rows();
  for (const auto& grid : grids) {
    if (grid.rows() != n || grid.cols() != n) throw ValidationError("grid shape mismatch");
  }
  Rng rng(seed);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index l = j + 1; l < n; ++l) {
      double param = grids[0](j, l);
      if (!distribution.in_domain(0, param)) {
        if (policy == DomainPolicy::Strict || !std::isfinite(param)) {
          throw DomainError("parameter " + format_number(param) + " for pair (" +
                            std::to_string(j) + "," + std::to_string(l) + ") outside " +
                            to_string(distribution.family) + " domain " +
                            distribution.domain_description(0));
        }
        param = distribution.family == EdgeFamily::Poisson ? std::max(param, 0.0)
                                                           : std::clamp(param, 0.0, 1.0);
      }
      const double w = distribution.family == EdgeFamily::Poisson
                           ? static_cast<double>(rng.poisson(param))
                           : (rng.bernoulli(param) ? 1.0 : 0.0);
      a(j, l) = a(l, j) = w;
    }
  }
  return WeightedGraph(std::move(a));
}

WeightedGraph sample_network(const LatentModel& model, const DrawnVectors& vectors,
                             std::uint64_t seed, DomainPolicy policy) {
  if (vectors.vectors.size() != model.sources.size() || vectors.n() != model.n) {
    throw ValidationError("drawn vectors do not match the model");
  }
  std::vector<Eigen::MatrixXd> grids;
  for (std::size_t i = 0; i < vectors.vectors.size(); ++i) {
    grids.push_back(dot_product_grid(vectors, i));
  }
  return sample_network(model.distribution, grids, seed, policy);
}

LogLikelihood log_likelihood(const EdgeDistribution& distribution,
                             std::span<const Eigen::MatrixXd> grids, const WeightedGraph& g) {
  if (grids.size() != distribution.parameter_count()) {
    throw ValidationError("expected one grid per distribution parameter");
  }
  const Eigen::MatrixXd& grid = grids[0];
  if (grid.rows() != g.n() || grid.cols() != g.n()) throw ValidationError("grid shape mismatch");
  if (!g.is_integer_valued()) throw ValidationError("log-likelihood needs integer edge weights");

  LogLikelihood out;
  for (Eigen::Index j = 0; j < g.n(); ++j) {
    for (Eigen::Index l = j + 1; l < g.n(); ++l) {
      const double w = g.weight(j, l);
      const double p = grid(j, l);
      double term;
      if (distribution.family == EdgeFamily::Bernoulli) {
        if (w > 1.0) throw DomainError("bernoulli log-likelihood needs 0/1 weights");
        if (!(p >= 0.0 && p <= 1.0)) {
          throw DomainError("bernoulli parameter " + format_number(p) + " outside [0,1]");
        }
        term = w == 1.0 ? std::log(p) : std::log1p(-p);
      } else {
        if (!(p >= 0.0)) throw DomainError("poisson rate " + format_number(p) + " is negative");
        if (p == 0.0) {
          term = w == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
        } else {
          term = w * std::log(p) - p - std::lgamma(w + 1.0);
        }
      }
      if (std::isinf(term)) {
        out.impossible = true;
        out.value = -std::numeric_limits<double>::infinity();
        return out;
      }
      out.value += term;
    }
  }
  return out;
}

LogLikelihood log_likelihood(const EdgeDistribution& distribution, const DrawnVectors& vectors,
                             const WeightedGraph& g) {
  std::vector<Eigen::MatrixXd> grids;
  for (std::size_t i = 0; i < vectors.vectors.size(); ++i) {
    grids.push_back(dot_product_grid(vectors, i));
  }
  return log_likelihood(distribution, grids, g);
}

}  // namespace wrdpm
