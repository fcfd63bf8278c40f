#include "wrdpm/graph.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "wrdpm/errors.hpp"
#include "wrdpm/io.hpp"

namespace wrdpm {

WeightedGraph::WeightedGraph(Eigen::MatrixXd weights, std::vector<std::string> labels,
                             double symmetry_tolerance)
    : weights_(std::move(weights)), labels_(std::move(labels)) {
  const Eigen::Index n = weights_.rows();
  if (n < 1) throw ValidationError("graph must have at least one node");
  if (weights_.cols() != n) {
    throw ValidationError("adjacency matrix must be square, got " + std::to_string(n) + "x" +
                          std::to_string(weights_.cols()));
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    if (weights_(j, j) != 0.0) {
      throw ValidationError("nonzero diagonal entry at node " + std::to_string(j));
    }
    for (Eigen::Index l = j + 1; l < n; ++l) {
      const double upper = weights_(j, l);
      const double lower = weights_(l, j);
      if (!std::isfinite(upper) || !std::isfinite(lower)) {
        throw ValidationError("non-finite weight at (" + std::to_string(j) + "," +
                              std::to_string(l) + ")");
      }
      if (upper < 0.0 || lower < 0.0) {
        throw ValidationError("negative weight at (" + std::to_string(j) + "," +
                              std::to_string(l) + ")");
      }
      if (std::abs(upper - lower) > symmetry_tolerance) {
        throw ValidationError("asymmetric weights at (" + std::to_string(j) + "," +
                              std::to_string(l) + "): " + format_number(upper) + " vs " +
                              format_number(lower));
      }
      weights_(l, j) = upper;
    }
  }
  if (labels_.empty()) {
    labels_.reserve(n);
    for (Eigen::Index j = 0; j < n; ++j) labels_.push_back(std::to_string(j));
  } else if (static_cast<Eigen::Index>(labels_.size()) != n) {
    throw ValidationError("expected " + std::to_string(n) + " labels, got " +
                          std::to_string(labels_.size()));
  }
}

WeightedGraph WeightedGraph::empty(Eigen::Index n) {
  return WeightedGraph(Eigen::MatrixXd::Zero(n, n));
}

bool WeightedGraph::is_integer_valued() const {
  return (weights_.array() == weights_.array().floor()).all();
}

SymmetricOffDiagonal::SymmetricOffDiagonal(Eigen::Index n)
    : n_(n), entries_(n > 1 ? static_cast<std::size_t>(n * (n - 1) / 2) : 0, 0.0) {
  if (n < 1) throw ValidationError("node count must be positive");
}

SymmetricOffDiagonal SymmetricOffDiagonal::from_upper(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw ValidationError("matrix must be square");
  SymmetricOffDiagonal out(m.rows());
  for (Eigen::Index j = 0; j < m.rows(); ++j)
    for (Eigen::Index l = j + 1; l < m.rows(); ++l) out.set(j, l, m(j, l));
  return out;
}

std::size_t SymmetricOffDiagonal::index(Eigen::Index j, Eigen::Index l) const {
  if (j == l) throw ValidationError("diagonal entries are undetermined");
  if (j > l) std::swap(j, l);
  if (j < 0 || l >= n_) throw ValidationError("index out of range");
  // Row-major strict upper triangle.
  return static_cast<std::size_t>(j * (2 * n_ - j - 1) / 2 + (l - j - 1));
}

double SymmetricOffDiagonal::operator()(Eigen::Index j, Eigen::Index l) const {
  return entries_[index(j, l)];
}

void SymmetricOffDiagonal::set(Eigen::Index j, Eigen::Index l, double value) {
  entries_[index(j, l)] = value;
}

Eigen::MatrixXd SymmetricOffDiagonal::with_diagonal(const Eigen::VectorXd& diagonal) const {
  if (diagonal.size() != n_) throw ValidationError("diagonal length mismatch");
  Eigen::MatrixXd m(n_, n_);
  for (Eigen::Index j = 0; j < n_; ++j) {
    m(j, j) = diagonal(j);
    for (Eigen::Index l = j + 1; l < n_; ++l) m(j, l) = m(l, j) = (*this)(j, l);
  }
  return m;
}

double total_weight(const WeightedGraph& g) {
  return g.weights().triangularView<Eigen::StrictlyUpper>().toDenseMatrix().sum();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t b = i;
    while (i < s.size() && !(s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

long long parse_node_id(std::string_view token, std::size_t line) {
  const double v = parse_number(token, line);
  if (v < 0 || v != std::floor(v) || v > 1e15) {
    throw ParseError("node id must be a nonnegative integer: '" + std::string(token) + "'", line);
  }
  return static_cast<long long>(v);
}

}  // namespace

WeightedGraph parse_edge_list(const std::string& text) {
  struct Edge {
    long long u, v;
    double w;
  };
  std::vector<Edge> edges;
  std::set<std::pair<long long, long long>> seen;
  long long declared_n = -1;
  long long max_id = -1;
  bool saw_edge = false;

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front().substr(0, 2) == "n=") {
      if (saw_edge || declared_n >= 0 || tokens.size() != 1) {
        throw ParseError("'n=<count>' header must appear once, before any edge", line_no);
      }
      declared_n = parse_node_id(tokens.front().substr(2), line_no);
      if (declared_n < 1) throw ParseError("declared node count must be positive", line_no);
      continue;
    }
    if (tokens.size() != 3) {
      throw ParseError("expected '<u> <v> <w>', got " + std::to_string(tokens.size()) + " fields",
                       line_no);
    }
    Edge e{parse_node_id(tokens[0], line_no), parse_node_id(tokens[1], line_no),
           parse_number(tokens[2], line_no)};
    if (e.u == e.v) throw ParseError("self-loop on node " + std::to_string(e.u), line_no);
    if (!std::isfinite(e.w) || e.w < 0) throw ParseError("negative or non-finite weight", line_no);
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) {
      throw ParseError("duplicate edge " + std::to_string(key.first) + "-" +
                           std::to_string(key.second),
                       line_no);
    }
    if (declared_n >= 0 && std::max(e.u, e.v) >= declared_n) {
      throw ParseError("node id exceeds declared n=" + std::to_string(declared_n), line_no);
    }
    max_id = std::max({max_id, e.u, e.v});
    saw_edge = true;
    edges.push_back(e);
  }

  const long long n = declared_n >= 0 ? declared_n : max_id + 1;
  if (n < 1) throw ParseError("edge list has no edges and no 'n=<count>' header");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : edges) w(e.u, e.v) = w(e.v, e.u) = e.w;
  return WeightedGraph(std::move(w));
}

WeightedGraph parse_dense(const std::string& text) {
  Eigen::MatrixXd m = parse_matrix_csv(text);
  if (m.rows() == 0) throw ParseError("dense matrix file is empty");
  if (m.rows() != m.cols()) {
    throw ParseError("dense matrix must be square, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
  return WeightedGraph(std::move(m));
}

std::string format_edge_list(const WeightedGraph& g) {
  std::string out = "n=" + std::to_string(g.n()) + "\n";
  for (Eigen::Index j = 0; j < g.n(); ++j) {
    for (Eigen::Index l = j + 1; l < g.n(); ++l) {
      const double w = g.weight(j, l);
      if (w == 0.0) continue;
      out += std::to_string(j) + ' ' + std::to_string(l) + ' ' + format_number(w) + '\n';
    }
  }
  return out;
}

std::string format_dense(const WeightedGraph& g) { return format_matrix_csv(g.weights()); }

WeightedGraph load_graph(const std::filesystem::path& path, GraphFormat format) {
  const std::string text = read_text_file(path);
  return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_dense(text);
}

void save_graph(const WeightedGraph& g, const std::filesystem::path& path, GraphFormat format) {
  write_text_file(path, format == GraphFormat::EdgeList ? format_edge_list(g) : format_dense(g));
}

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "edge-list") return GraphFormat::EdgeList;
  if (name == "dense") return GraphFormat::Dense;
  throw ValidationError("unknown graph format '" + name + "' (expected edge-list or dense)");
}

}  // namespace wrdpm
