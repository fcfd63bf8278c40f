// wrdpm: generate weighted random dot product networks, embed them, and
// compare them against null models.
//
// Exit codes: 0 success, 1 usage error, 2 data/validation error,
// 3 numerical failure (non-convergence with --strict).

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrdpm/model_json.hpp"
#include "wrdpm/wrdpm.hpp"

#ifndef WRDPM_VERSION
#define WRDPM_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace wrdpm;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumerical = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Options shared by every subcommand.
struct Common {
  std::optional<std::uint64_t> seed;
  std::string out = ".";
  std::string format = "edge-list";
  bool strict = false;
};

struct Solver {
  int max_iterations = 500;
  double tolerance = 1e-8;
  std::string init = "degree-mean";

  SolverConfig config() const {
    return SolverConfig{max_iterations, tolerance, parse_diagonal_init(init)};
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Random seed (falls back to $WRDPM_SEED, then 0)");
  sub->add_option("--out", c.out, "Output directory")->capture_default_str();
  sub->add_option("--format", c.format, "Graph file format")
      ->check(CLI::IsMember({"edge-list", "dense"}))
      ->capture_default_str();
}

void add_solver(CLI::App* sub, Solver& s) {
  sub->add_option("--max-iter", s.max_iterations, "Embedding iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--tol", s.tolerance, "Convergence tolerance on the diagonal change")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--init", s.init, "Diagonal initialization")
      ->check(CLI::IsMember({"degree-mean", "zeros", "dominant"}))
      ->capture_default_str();
}

std::uint64_t resolve_seed(const Common& c, std::string& source) {
  if (c.seed) {
    source = "flag";
    return *c.seed;
  }
  if (const char* env = std::getenv("WRDPM_SEED"); env && *env) {
    std::uint64_t v = 0;
    const std::string text = env;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size()) {
      throw UsageError("WRDPM_SEED is not an unsigned 64-bit integer: '" + text + "'");
    }
    source = "env";
    return v;
  }
  source = "default";
  return 0;
}

// Every option of `sub` with its effective value, for the manifest.
json resolved_config(const CLI::App* sub) {
  json cfg = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || name == "help") continue;
    if (opt->count() > 0) {
      const auto& r = opt->results();
      if (opt->get_expected_max() == 0) cfg[name] = true;
      else cfg[name] = r.size() == 1 ? json(r.front()) : json(r);
    } else if (opt->get_expected_max() == 0) {
      cfg[name] = false;
    } else {
      const auto d = opt->get_default_str();
      cfg[name] = d.empty() ? json(nullptr) : json(d);
    }
  }
  return cfg;
}

/// Writes result files into the output directory and the run manifest last.
class Outputs {
 public:
  Outputs(const CLI::App* sub, const Common& common)
      : sub_(sub), dir_(common.out), start_(std::chrono::steady_clock::now()) {
    seed_ = resolve_seed(common, seed_source_);
    fs::create_directories(dir_);
  }

  std::uint64_t seed() const { return seed_; }

  void text(const std::string& name, const std::string& content) {
    write_text_file(dir_ / name, content);
    files_.push_back(name);
  }
  void document(const std::string& name, const json& doc) { text(name, doc.dump(2) + "\n"); }
  void matrix(const std::string& name, const Eigen::MatrixXd& m) { text(name, format_matrix_csv(m)); }
  void graph(const std::string& stem, const WeightedGraph& g, GraphFormat fmt) {
    const std::string name = stem + (fmt == GraphFormat::EdgeList ? ".txt" : ".csv");
    save_graph(g, dir_ / name, fmt);
    files_.push_back(name);
  }
  void input(const std::string& path) { inputs_.push_back(path); }
  void note(const std::string& key, json value) { extra_[key] = std::move(value); }

  void manifest() {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    json m = {{"subcommand", sub_->get_name()},
              {"config", resolved_config(sub_)},
              {"seed", seed_},
              {"seed_source", seed_source_},
              {"inputs", inputs_},
              {"outputs", files_},
              {"output_dir", dir_.string()},
              {"version", WRDPM_VERSION},
              {"duration_seconds", seconds}};
    if (!extra_.empty()) m["results"] = extra_;
    write_text_file(dir_ / "manifest.json", m.dump(2) + "\n");
  }

 private:
  const CLI::App* sub_;
  fs::path dir_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t seed_ = 0;
  std::string seed_source_;
  std::vector<std::string> files_;
  std::vector<std::string> inputs_;
  json extra_ = json::object();
};

std::string partition_csv(const Partition& p) {
  std::ostringstream os;
  os << "node,community\n";
  for (std::size_t j = 0; j < p.n(); ++j) os << j << ',' << p[j] << '\n';
  return os.str();
}

std::string centrality_csv(const Eigen::VectorXd& len) {
  std::ostringstream os;
  os << "node,length\n";
  for (Eigen::Index j = 0; j < len.size(); ++j) os << j << ',' << format_number(len(j)) << '\n';
  return os.str();
}

WeightedGraph read_graph(const std::string& path, const Common& c, Outputs& out) {
  out.input(path);
  return load_graph(path, parse_graph_format(c.format));
}

Eigen::MatrixXd read_vectors(const std::string& path, Outputs& out) {
  out.input(path);
  return load_matrix_csv(path);
}

void warn_unconverged(const Embedding& e) {
  std::cerr << "warning: embedding at d=" << e.dimension << " did not converge after "
            << e.iterations << " iterations (residual " << format_number(e.residual) << ")\n";
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  Common common;
  std::string model_file;
  std::string builtin;
  Eigen::Index n = 150;
  std::string family = "poisson";
  std::optional<double> param;
  Eigen::Index dimension = 3;
  double noise_scale = 0.1;
  double magnitude_mean = 2.0;
  std::string blocks_file;
  bool normalize = false;
  std::string weights_file;
  bool clamp = false;
};

// Three equal-as-possible blocks with intra parameter 1 and inter parameter 0.1.
BlockModelSpec default_blocks(Eigen::Index n) {
  if (n < 3) throw ValidationError("the default block model needs n >= 3");
  BlockModelSpec spec;
  spec.block_parameters = Eigen::MatrixXd::Constant(3, 3, 0.1);
  spec.block_parameters.diagonal().setOnes();
  for (Eigen::Index b = 0; b < 3; ++b) spec.community_sizes.push_back(n / 3 + (b < n % 3 ? 1 : 0));
  return spec;
}

LatentModel builtin_model(const GenerateArgs& a, const CLI::App* sub, Outputs& out) {
  const EdgeFamily family = parse_edge_family(a.family);
  const bool n_given = sub->get_option("--n")->count() > 0;
  auto need_param = [&] {
    if (!a.param) throw UsageError("--builtin " + a.builtin + " requires --param");
    return *a.param;
  };
  if (a.builtin == "simple-community") {
    return LatentModel{EdgeDistribution{family}, a.n, {source::AxisNoise{a.dimension, a.noise_scale}}};
  }
  if (a.builtin == "multiresolution") {
    return LatentModel{EdgeDistribution{family}, a.n,
                       {source::MultiresolutionAxis{a.dimension, a.noise_scale, a.magnitude_mean}}};
  }
  if (a.builtin == "er") return make_er(a.n, family, need_param(), a.dimension);
  if (a.builtin == "poisson-er") return make_er(a.n, EdgeFamily::Poisson, need_param(), a.dimension);
  if (a.builtin == "sbm") {
    BlockModelSpec spec = default_blocks(a.n);
    if (!a.blocks_file.empty()) {
      out.input(a.blocks_file);
      spec = block_model_from_json(parse_json_text(read_text_file(a.blocks_file)));
      if (n_given && spec.node_count() != a.n) {
        throw ValidationError("--n " + std::to_string(a.n) + " disagrees with block sizes summing to " +
                              std::to_string(spec.node_count()));
      }
    }
    return make_sbm(spec, family, a.normalize);
  }
  if (a.builtin == "chung-lu") {
    if (a.weights_file.empty()) throw UsageError("--builtin chung-lu requires --weights");
    out.input(a.weights_file);
    auto spec = chung_lu_from_json(parse_json_text(read_text_file(a.weights_file)));
    if (n_given && Eigen::Index(spec.weights.size()) != a.n) {
      throw ValidationError("--n disagrees with the number of Chung-Lu weights");
    }
    return make_chung_lu(spec, family, a.dimension);
  }
  throw UsageError("unknown builtin '" + a.builtin + "'");
}

int run_generate(const GenerateArgs& a, const CLI::App* sub) {
  Outputs out(sub, a.common);
  LatentModel model;
  if (!a.model_file.empty()) {
    out.input(a.model_file);
    model = latent_model_from_json(parse_json_text(read_text_file(a.model_file)));
  } else {
    model = builtin_model(a, sub, out);
  }
  model.validate();
  const auto policy = a.clamp ? DomainPolicy::Clamp : DomainPolicy::Strict;
  const DrawnVectors vectors = draw_vectors(model, derive_seed(out.seed(), 0));
  const WeightedGraph g = sample_network(model, vectors, derive_seed(out.seed(), 1), policy);

  out.graph("graph", g, parse_graph_format(a.common.format));
  for (std::size_t i = 0; i < vectors.vectors.size(); ++i) {
    const std::string suffix = vectors.vectors.size() == 1 ? "" : "_" + std::to_string(i);
    out.matrix("vectors" + suffix + ".csv", vectors.vectors[i]);
    out.matrix("grid" + suffix + ".csv", dot_product_grid(vectors, i));
  }
  if (!vectors.components.empty() && !vectors.components[0].empty() && vectors.components[0][0] >= 0) {
    std::ostringstream os;
    os << "node,component\n";
    for (std::size_t j = 0; j < vectors.components[0].size(); ++j) os << j << ',' << vectors.components[0][j] << '\n';
    out.text("components.csv", os.str());
  }
  out.document("model.json", to_json(model));
  out.note("n", g.n());
  out.note("total_weight", total_weight(g));
  out.manifest();
  return 0;
}

// ------------------------------------------------------------------- embed

struct EmbedArgs {
  Common common;
  Solver solver;
  std::string graph;
  Eigen::Index d = 0;
};

int run_embed(const EmbedArgs& a, const CLI::App* sub) {
  Outputs out(sub, a.common);
  const WeightedGraph g = read_graph(a.graph, a.common, out);
  const Embedding e = embed(g, a.d, a.solver.config());
  out.matrix("embedding.csv", e.vectors);
  out.document("embedding.json", embedding_sidecar(e));
  out.note("residual", e.residual);
  out.note("converged", e.converged);
  out.manifest();
  if (!e.converged) {
    warn_unconverged(e);
    if (a.common.strict) return kExitNumerical;
  }
  return 0;
}

// ----------------------------------------------------------------- cluster

struct ClusterArgs {
  Common common;
  Solver solver;
  std::string embedding;
  std::string graph;
  Eigen::Index d = 0;
  int k = 0;
  int kmeans_iterations = 100;
  int restarts = 10;
};

int run_cluster(const ClusterArgs& a, const CLI::App* sub) {
  Outputs out(sub, a.common);
  Eigen::MatrixXd x;
  std::optional<Embedding> fitted;
  if (!a.embedding.empty()) {
    x = read_vectors(a.embedding, out);
  } else {
    if (a.d < 1) throw UsageError("--graph requires --d");
    fitted = embed(read_graph(a.graph, a.common, out), a.d, a.solver.config());
    x = fitted->vectors;
    out.matrix("embedding.csv", x);
    out.document("embedding.json", embedding_sidecar(*fitted));
  }
  const int k = a.k > 0 ? a.k : int(x.cols());
  const auto r = angular_kmeans_detailed(x, k, out.seed(), KMeansOptions{a.kmeans_iterations, a.restarts});
  out.text("partition.csv", partition_csv(r.partition));
  out.document("cluster.json", {{"k", k},
                                {"objective", r.objective},
                                {"sizes", r.partition.sizes()},
                                {"stress", stress(x, r.partition)},
                                {"stress_unnormalized", stress(x, r.partition, StressOptions{false})}});
  out.manifest();
  if (fitted && !fitted->converged) {
    warn_unconverged(*fitted);
    if (a.common.strict) return kExitNumerical;
  }
  return 0;
}

// ------------------------------------------------------------------- sweep

struct SweepArgs {
  Common common;
  Solver solver;
  std::string graph;
  std::string d_range = "2..8";
  bool penalized = false;
  std::optional<double> l1, l2;
  bool unnormalized = false;
  unsigned threads = 0;
};

std::pair<Eigen::Index, Eigen::Index> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto parse = [&](std::string_view s) {
    Eigen::Index v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size() || v < 1) {
      throw UsageError("--d-range expects LO..HI with 1 <= LO <= HI, got '" + text + "'");
    }
    return v;
  };
  const std::string_view view(text);
  const auto lo = parse(dots == std::string::npos ? view : view.substr(0, dots));
  const auto hi = dots == std::string::npos ? lo : parse(view.substr(dots + 2));
  if (lo > hi) throw UsageError("--d-range expects LO..HI with LO <= HI, got '" + text + "'");
  return {lo, hi};
}

int run_sweep(const SweepArgs& a, const CLI::App* sub) {
  const auto [lo, hi] = parse_range(a.d_range);
  if (a.penalized && (!a.l1 || !a.l2)) throw UsageError("--penalized requires both --l1 and --l2");
  if (!a.penalized && (a.l1 || a.l2)) throw UsageError("--l1/--l2 only apply with --penalized");

  Outputs out(sub, a.common);
  const WeightedGraph g = read_graph(a.graph, a.common, out);
  SweepOptions opts;
  opts.solver = a.solver.config();
  opts.stress.normalized = !a.unnormalized;
  opts.threads = a.threads;
  if (a.penalized) opts.penalty = Penalty{*a.l1, *a.l2};
  const StressReport report = dimension_sweep(g, lo, hi, out.seed(), opts);

  std::ostringstream csv;
  csv << "d,stress,penalized_stress,residual\n";
  bool all_converged = true;
  for (const auto& r : report.records) {
    csv << r.d << ',' << format_number(r.stress) << ','
        << (r.penalized_stress ? format_number(*r.penalized_stress) : "") << ','
        << format_number(r.embedding.residual) << '\n';
    out.text("partition_d" + std::to_string(r.d) + ".csv", partition_csv(r.partition));
    if (!r.embedding.converged) {
      warn_unconverged(r.embedding);
      all_converged = false;
    }
  }
  out.text("stress.csv", csv.str());
  const auto& best = report.selected();
  out.text("centrality.csv", centrality_csv(centrality(best.embedding.vectors)));
  out.matrix("embedding.csv", best.embedding.vectors);
  out.document("embedding.json", embedding_sidecar(best.embedding));
  out.note("selected_d", report.selected_d);
  out.manifest();
  return !all_converged && a.common.strict ? kExitNumerical : 0;
}

// -------------------------------------------------------------------- null

struct NullArgs {
  Common common;
  std::string graph;
  std::string null_kind = "poisson_er";
  std::string vectors;
  std::string statistic = "avg_weighted_clustering";
  std::size_t samples = 100;
};

int run_null(const NullArgs& a, const CLI::App* sub) {
  if (a.null_kind == "dot_product" && a.vectors.empty()) {
    throw UsageError("--null dot_product requires --vectors");
  }
  Outputs out(sub, a.common);
  const WeightedGraph g = read_graph(a.graph, a.common, out);
  NullModel null = null_model::PoissonEr{};
  if (a.null_kind == "dot_product") null = null_model::DotProduct{read_vectors(a.vectors, out)};
  const auto report = null_compare(g, null, parse_statistic(a.statistic), a.samples, out.seed());
  out.document("null_report.json", to_json(report));
  out.manifest();
  return 0;
}

// -------------------------------------------------------------- likelihood

struct LikelihoodArgs {
  Common common;
  std::string graph;
  std::string vectors;
  std::string family = "poisson";
  bool clamp = false;
};

int run_likelihood(const LikelihoodArgs& a, const CLI::App* sub) {
  Outputs out(sub, a.common);
  const WeightedGraph g = read_graph(a.graph, a.common, out);
  const Eigen::MatrixXd x = read_vectors(a.vectors, out);
  const auto ll = evaluate_null_likelihood(g, x, parse_edge_family(a.family),
                                           a.clamp ? DomainPolicy::Clamp : DomainPolicy::Strict);
  out.document("likelihood.json", {{"family", a.family},
                                   {"n", g.n()},
                                   {"log_likelihood", ll.impossible ? json(nullptr) : json(ll.value)},
                                   {"impossible", ll.impossible}});
  out.manifest();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted random dot product networks: generate, embed, cluster, compare."};
  app.set_version_flag("--version", WRDPM_VERSION);
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Sample a network from a latent model");
  add_common(generate, gen.common);
  auto* model_opt = generate->add_option("--model", gen.model_file, "Latent model JSON file");
  auto* builtin_opt = generate->add_option("--builtin", gen.builtin, "Builtin model")
      ->check(CLI::IsMember({"simple-community", "multiresolution", "er", "poisson-er", "sbm", "chung-lu"}));
  model_opt->excludes(builtin_opt);
  generate->add_option("--n", gen.n, "Node count")->check(CLI::PositiveNumber)->capture_default_str()->excludes(model_opt);
  generate->add_option("--family", gen.family, "Edge weight family")
      ->check(CLI::IsMember({"poisson", "bernoulli"}))
      ->capture_default_str()
      ->excludes(model_opt);
  generate->add_option("--param", gen.param, "ER parameter (probability or rate)");
  generate->add_option("--dimension", gen.dimension, "Latent dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--noise-scale", gen.noise_scale, "Half-normal noise scale")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  generate->add_option("--magnitude-mean", gen.magnitude_mean, "Mean of exponential magnitudes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--blocks", gen.blocks_file, "Block model JSON {\"B\", \"sizes\"}")->check(CLI::ExistingFile);
  generate->add_flag("--normalize", gen.normalize, "Block model magnitude normalization");
  generate->add_option("--weights", gen.weights_file, "Chung-Lu JSON {\"weights\"}")->check(CLI::ExistingFile);
  generate->add_flag("--clamp", gen.clamp, "Clamp out-of-domain parameters instead of failing");

  EmbedArgs emb;
  auto* embed_cmd = app.add_subcommand("embed", "Fit latent vectors to a network");
  add_common(embed_cmd, emb.common);
  add_solver(embed_cmd, emb.solver);
  embed_cmd->add_option("--graph", emb.graph, "Input graph file")->required()->check(CLI::ExistingFile);
  embed_cmd->add_option("--d", emb.d, "Embedding dimension")->required()->check(CLI::PositiveNumber);
  embed_cmd->add_flag("--strict", emb.common.strict, "Exit with status 3 if the solver does not converge");

  ClusterArgs clu;
  auto* cluster = app.add_subcommand("cluster", "Angular k-means on latent vectors");
  add_common(cluster, clu.common);
  add_solver(cluster, clu.solver);
  auto* emb_opt = cluster->add_option("--embedding", clu.embedding, "Vectors CSV")->check(CLI::ExistingFile);
  auto* graph_opt = cluster->add_option("--graph", clu.graph, "Graph file to embed first")->check(CLI::ExistingFile);
  emb_opt->excludes(graph_opt);
  cluster->add_option("--d", clu.d, "Embedding dimension when clustering a graph")
      ->check(CLI::PositiveNumber)
      ->needs(graph_opt);
  cluster->add_option("--k", clu.k, "Number of communities (default: vector dimension)")
      ->check(CLI::PositiveNumber);
  cluster->add_option("--kmeans-iter", clu.kmeans_iterations, "k-means iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cluster->add_option("--restarts", clu.restarts, "k-means restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cluster->add_flag("--strict", clu.common.strict, "Exit with status 3 if the solver does not converge");

  SweepArgs swp;
  auto* sweep = app.add_subcommand("sweep", "Select the embedding dimension by stress");
  add_common(sweep, swp.common);
  add_solver(sweep, swp.solver);
  sweep->add_option("--graph", swp.graph, "Input graph file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--d-range", swp.d_range, "Dimensions LO..HI")->capture_default_str();
  sweep->add_flag("--penalized", swp.penalized, "Select by l1*stress + l2*residual");
  sweep->add_option("--l1", swp.l1, "Stress weight")->check(CLI::NonNegativeNumber);
  sweep->add_option("--l2", swp.l2, "Residual weight")->check(CLI::NonNegativeNumber);
  sweep->add_flag("--unnormalized", swp.unnormalized, "Score raw rather than unit-length vectors");
  sweep->add_option("--threads", swp.threads, "Worker threads (0: hardware concurrency)")->capture_default_str();
  sweep->add_flag("--strict", swp.common.strict, "Exit with status 3 if any embedding does not converge");

  NullArgs nul;
  auto* null_cmd = app.add_subcommand("null", "Compare a statistic against a null ensemble");
  add_common(null_cmd, nul.common);
  null_cmd->add_option("--graph", nul.graph, "Input graph file")->required()->check(CLI::ExistingFile);
  null_cmd->add_option("--null", nul.null_kind, "Null model")
      ->check(CLI::IsMember({"poisson_er", "dot_product"}))
      ->capture_default_str();
  null_cmd->add_option("--vectors", nul.vectors, "Vectors CSV for the dot_product null")->check(CLI::ExistingFile);
  null_cmd->add_option("--statistic", nul.statistic, "Statistic")
      ->check(CLI::IsMember({"avg_weighted_clustering", "total_weight", "log_likelihood"}))
      ->capture_default_str();
  null_cmd->add_option("--samples,-N", nul.samples, "Null sample count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  LikelihoodArgs lik;
  auto* likelihood = app.add_subcommand("likelihood", "Log-likelihood of a network under fixed vectors");
  add_common(likelihood, lik.common);
  likelihood->add_option("--graph", lik.graph, "Input graph file")->required()->check(CLI::ExistingFile);
  likelihood->add_option("--vectors", lik.vectors, "Vectors CSV")->required()->check(CLI::ExistingFile);
  likelihood->add_option("--family", lik.family, "Edge weight family")
      ->check(CLI::IsMember({"poisson", "bernoulli"}))
      ->capture_default_str();
  likelihood->add_flag("--clamp", lik.clamp, "Clamp out-of-domain parameters instead of failing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate) {
      if (gen.model_file.empty() && gen.builtin.empty()) throw UsageError("generate needs --model or --builtin");
      return run_generate(gen, generate);
    }
    if (*embed_cmd) return run_embed(emb, embed_cmd);
    if (*cluster) {
      if (clu.embedding.empty() && clu.graph.empty()) throw UsageError("cluster needs --embedding or --graph");
      return run_cluster(clu, cluster);
    }
    if (*sweep) return run_sweep(swp, sweep);
    if (*null_cmd) return run_null(nul, null_cmd);
    if (*likelihood) return run_likelihood(lik, likelihood);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
