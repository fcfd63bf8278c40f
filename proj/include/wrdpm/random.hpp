#ifndef WRDPM_RANDOM_HPP
#define WRDPM_RANDOM_HPP

#include <cstdint>
#include <random>

namespace wrdpm {

/// Seedable generator whose output depends only on the seed.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard; the
/// variate transforms are implemented here rather than taken from
/// std::*_distribution, whose outputs differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, bound). Requires bound > 0.
  std::uint64_t uniform_index(std::uint64_t bound);
  double normal(double mean = 0.0, double stddev = 1.0);
  /// |N(0, scale²)|.
  double half_normal(double scale);
  double exponential_with_mean(double mean);
  bool bernoulli(double p);
  /// Sequential-search inversion below 30, PTRS rejection at or above.
  std::uint64_t poisson(double lambda);

 private:
  std::mt19937_64 engine_;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

/// Independent stream seed for sub-task `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace wrdpm

#endif  // WRDPM_RANDOM_HPP
