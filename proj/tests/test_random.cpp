#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "wrdpm/random.hpp"

using namespace wrdpm;

namespace {

struct Moments {
  double mean = 0, var = 0;
};

template <class F>
Moments moments(int n, F&& draw) {
  std::vector<double> xs(n);
  for (auto& x : xs) x = draw();
  Moments m;
  for (double x : xs) m.mean += x;
  m.mean /= n;
  for (double x : xs) m.var += (x - m.mean) * (x - m.mean);
  m.var /= n - 1;
  return m;
}

// |sample mean - mu| within 4 standard errors.
void check_mean(const Moments& m, double mu, double sigma2, int n) {
  CHECK(std::abs(m.mean - mu) < 4 * std::sqrt(sigma2 / n));
}

}  // namespace

TEST_CASE("same seed, same stream") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs |= x != c.next();
  }
  CHECK(differs);
}

TEST_CASE("derived seeds are distinct and stable") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(7, i));
  CHECK(seen.size() == 1000);
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
  CHECK(derive_seed(7, 3) != derive_seed(8, 3));
}

TEST_CASE("uniform variates") {
  Rng rng(1);
  const int n = 100000;
  double lo = 1, hi = 0;
  auto m = moments(n, [&] {
    const double u = rng.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    return u;
  });
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
  check_mean(m, 0.5, 1.0 / 12, n);

  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[rng.uniform_index(7)];
  for (int c : counts) CHECK(std::abs(c - 10000) < 4 * std::sqrt(10000.0));
}

TEST_CASE("normal and half-normal") {
  Rng rng(2);
  const int n = 100000;
  auto m = moments(n, [&] { return rng.normal(3.0, 2.0); });
  check_mean(m, 3.0, 4.0, n);
  CHECK(m.var == doctest::Approx(4.0).epsilon(0.03));

  auto h = moments(n, [&] { return rng.half_normal(0.5); });
  const double mu = 0.5 * std::sqrt(2 / std::numbers::pi);
  check_mean(h, mu, 0.25 * (1 - 2 / std::numbers::pi), n);
}

TEST_CASE("exponential") {
  Rng rng(3);
  const int n = 100000;
  auto m = moments(n, [&] { return rng.exponential_with_mean(2.0); });
  check_mean(m, 2.0, 4.0, n);
  CHECK(m.var == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("bernoulli") {
  Rng rng(4);
  const int n = 100000;
  auto m = moments(n, [&] { return rng.bernoulli(0.3) ? 1.0 : 0.0; });
  check_mean(m, 0.3, 0.21, n);
  CHECK_FALSE(rng.bernoulli(0.0));
  CHECK(rng.bernoulli(1.0));
}

TEST_CASE("poisson across both sampling regimes") {
  Rng rng(5);
  CHECK(rng.poisson(0.0) == 0);
  const int n = 50000;
  for (double lambda : {0.05, 1.0, 7.5, 29.9, 30.0, 120.0, 5000.0}) {
    CAPTURE(lambda);
    auto m = moments(n, [&] { return double(rng.poisson(lambda)); });
    check_mean(m, lambda, lambda, n);
    CHECK(m.var == doctest::Approx(lambda).epsilon(0.05));
  }
}

TEST_CASE("poisson pmf at small rate") {
  // Frequencies of 0, 1, 2 against e^{-λ}λ^k/k!.
  Rng rng(6);
  const int n = 200000;
  const double lambda = 1.5;
  std::vector<int> counts(3, 0);
  for (int i = 0; i < n; ++i) {
    const auto k = rng.poisson(lambda);
    if (k < 3) ++counts[k];
  }
  double p = std::exp(-lambda);
  for (int k = 0; k < 3; ++k) {
    CAPTURE(k);
    CHECK(std::abs(counts[k] - n * p) < 4 * std::sqrt(n * p * (1 - p)));
    p *= lambda / (k + 1);
  }
}
