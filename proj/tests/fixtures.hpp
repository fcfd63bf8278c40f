#ifndef WRDPM_TEST_FIXTURES_HPP
#define WRDPM_TEST_FIXTURES_HPP

#include <algorithm>
#include <vector>

#include <Eigen/Dense>

#include "wrdpm/graph.hpp"

namespace fixtures {

/// `count` disjoint unit-weight cliques of `size` nodes, laid out block by block.
inline wrdpm::WeightedGraph disjoint_cliques(int count, int size) {
  const int n = count * size;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int c = 0; c < count; ++c) a.block(c * size, c * size, size, size).setOnes();
  a.diagonal().setZero();
  return wrdpm::WeightedGraph{a};
}

/// Disjoint cliques whose first nodes (0, size, 2·size, ...) are also joined
/// to one another.
inline wrdpm::WeightedGraph bridged_cliques(int count, int size) {
  Eigen::MatrixXd a = disjoint_cliques(count, size).weights();
  for (int c = 0; c < count; ++c)
    for (int e = 0; e < count; ++e)
      if (c != e) a(c * size, e * size) = 1;
  return wrdpm::WeightedGraph{a};
}

/// Fraction of nodes whose community is the majority label of its true block.
inline double purity(const std::vector<int>& labels, const std::vector<int>& truth, int k) {
  double hits = 0;
  for (int t = 0; t <= *std::max_element(truth.begin(), truth.end()); ++t) {
    std::vector<int> counts(k, 0);
    for (std::size_t j = 0; j < truth.size(); ++j)
      if (truth[j] == t) ++counts[labels[j]];
    hits += *std::max_element(counts.begin(), counts.end());
  }
  return hits / double(truth.size());
}

}  // namespace fixtures

#endif  // WRDPM_TEST_FIXTURES_HPP
