#ifndef WRDPM_GRAPH_HPP
#define WRDPM_GRAPH_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wrdpm {

enum class GraphFormat { EdgeList, Dense };

/// Undirected weighted graph stored as a dense symmetric adjacency matrix.
///
/// Invariants (checked on construction): square, symmetric, zero diagonal,
/// all entries finite and nonnegative. Instances are immutable.
class WeightedGraph {
 public:
  /// Validates `weights`. Entries whose asymmetry exceeds `symmetry_tolerance`
  /// are rejected; smaller discrepancies are resolved by copying the upper
  /// triangle onto the lower one.
  explicit WeightedGraph(Eigen::MatrixXd weights, std::vector<std::string> labels = {},
                         double symmetry_tolerance = 1e-12);

  /// Graph with `n` nodes and no edges.
  static WeightedGraph empty(Eigen::Index n);

  Eigen::Index n() const noexcept { return weights_.rows(); }
  const Eigen::MatrixXd& weights() const noexcept { return weights_; }
  double weight(Eigen::Index j, Eigen::Index l) const { return weights_(j, l); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// True when every weight is a whole number.
  bool is_integer_valued() const;

  bool operator==(const WeightedGraph& other) const {
    return weights_ == other.weights_ && labels_ == other.labels_;
  }

 private:
  Eigen::MatrixXd weights_;
  std::vector<std::string> labels_;
};

/// The C(n,2) off-diagonal values of a symmetric matrix whose diagonal is
/// undetermined. Entries may be negative.
class SymmetricOffDiagonal {
 public:
  explicit SymmetricOffDiagonal(Eigen::Index n);

  /// Takes the strict upper triangle of `m`; the lower triangle and diagonal
  /// are ignored.
  static SymmetricOffDiagonal from_upper(const Eigen::MatrixXd& m);

  Eigen::Index n() const noexcept { return n_; }
  double operator()(Eigen::Index j, Eigen::Index l) const;
  void set(Eigen::Index j, Eigen::Index l, double value);

  /// Dense symmetric matrix with the given diagonal.
  Eigen::MatrixXd with_diagonal(const Eigen::VectorXd& diagonal) const;

 private:
  std::size_t index(Eigen::Index j, Eigen::Index l) const;

  Eigen::Index n_;
  std::vector<double> entries_;
};

/// Sum of edge weights over unordered pairs.
double total_weight(const WeightedGraph& g);

WeightedGraph load_graph(const std::filesystem::path& path, GraphFormat format);
void save_graph(const WeightedGraph& g, const std::filesystem::path& path, GraphFormat format);

/// Parsers over in-memory text; `load_graph` reads the file and delegates here.
WeightedGraph parse_edge_list(const std::string& text);
WeightedGraph parse_dense(const std::string& text);
std::string format_edge_list(const WeightedGraph& g);
std::string format_dense(const WeightedGraph& g);

GraphFormat parse_graph_format(const std::string& name);

}  // namespace wrdpm

#endif  // WRDPM_GRAPH_HPP
