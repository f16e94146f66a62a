#include "sgr/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <unordered_map>

#include "sgr/aux_graph.hpp"
#include "sgr/checks.hpp"
#include "sgr/embed.hpp"
#include "sgr/eval.hpp"
#include "sgr/graph_io.hpp"
#include "sgr/semantic.hpp"
#include "sgr/side_enhance.hpp"

namespace sgr::cli {

namespace {

std::string one_line(std::string s) {
  for (char& ch : s)
    if (ch == '\n' || ch == '\r' || ch == '\t') ch = ' ';
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::kIo, "cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error(ErrorKind::kIo, "write failed for " + path);
}

AttributedGraph load(const RunConfig& c, bool need_labels) {
  if (c.edges.empty() || c.attrs.empty())
    throw Error(ErrorKind::kInvalidArgument, c.command + " needs --edges and --attrs");
  if (need_labels && c.labels.empty())
    throw Error(ErrorKind::kInvalidArgument, c.command + " needs --labels");
  std::optional<std::filesystem::path> labels;
  if (!c.labels.empty()) labels = c.labels;
  return load_graph(c.edges, c.attrs, labels);
}

struct Pipeline {
  WalkMatrix walk;
  EmbeddingModel model;
};

Pipeline compute(const RunConfig& c, const AttributedGraph& g, std::ostream& err) {
  AuxGraphOptions aux;
  aux.deltas = c.deltas;
  aux.motif_mode = c.weighted_motifs ? MotifMode::kWeighted : MotifMode::kCount;
  aux.size_cap = c.size_cap;
  const HeteroAdjacency b = build_hetero_adjacency(g, aux);
  if (!c.dump_b.empty()) dump_triples(b, c.dump_b);

  Index k = c.dim;
  if (k > b.size()) {
    err << "warning\t--dim " << k << " exceeds n+m = " << b.size() << "; using " << b.size() << '\n';
    k = b.size();
  }
  Pipeline p;
  p.walk = walk_matrix(b, c.order, c.negatives);
  p.model = factorize(p.walk, k);
  return p;
}

bool has_side_info(const RunConfig& c) {
  return c.lambdas.community != 0.0 || c.lambdas.attribute != 0.0;
}

// Stacks a prior embedding file into the row order of `g` (nodes, then attributes).
Matrix stack_prior(const SplitEmbeddings& prior, const AttributedGraph& g, Index attr_rows) {
  if (prior.node_ids.size() != g.node_ids.size() ||
      static_cast<Index>(prior.attr_ids.size()) != attr_rows)
    throw Error(ErrorKind::kInvalidInput, "embedding file does not cover the graph's entities");
  const Index dim = prior.node_vectors.cols();
  Matrix x(g.num_nodes() + attr_rows, dim);
  auto place = [&](const std::vector<std::string>& file_ids, const Matrix& rows,
                   const std::vector<std::string>& graph_ids, Index offset) {
    std::unordered_map<std::string, Index> where;
    for (Index i = 0; i < static_cast<Index>(graph_ids.size()); ++i) where.emplace(graph_ids[i], i);
    for (Index r = 0; r < static_cast<Index>(file_ids.size()); ++r) {
      const auto it = where.find(file_ids[r]);
      if (it == where.end())
        throw Error(ErrorKind::kInvalidInput, "embedding row " + file_ids[r] + " is not in the graph");
      x.row(offset + it->second) = rows.row(r);
    }
  };
  place(prior.node_ids, prior.node_vectors, g.node_ids, 0);
  if (attr_rows > 0) place(prior.attr_ids, prior.attr_vectors, g.attr_ids, g.num_nodes());
  return x;
}

int cmd_embed(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.out.empty()) throw Error(ErrorKind::kInvalidArgument, "embed needs --out");
  const AttributedGraph g = load(c, false);
  const Pipeline p = compute(c, g, err);
  write_embeddings(p.model, g, c.out);
  out << "wrote " << p.model.num_entities() << " x " << p.model.dim() << " embeddings to " << c.out << '\n';
  return 0;
}

int cmd_enhance(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.out.empty()) throw Error(ErrorKind::kInvalidArgument, "enhance needs --out");
  const AttributedGraph g = load(c, false);
  Pipeline p = compute(c, g, err);
  if (!c.embeddings.empty()) {
    const SplitEmbeddings prior = split_embeddings(read_embeddings(c.embeddings));
    p.model.x = stack_prior(prior, g, p.model.num_attrs());
    p.model.y = update_y(p.walk.z, p.model.x);
  }
  const SideInfo side = build_side_info(g, c.lambdas, p.model.num_attrs());
  const EnhanceResult r = side_enhance(p.model, p.walk, side, c.iterations);
  char line[128];
  std::snprintf(line, sizeof line, "objective\tbefore\t%.17g\nobjective\tafter\t%.17g\n",
                r.objective_before, r.objective_after);
  out << line;
  write_embeddings(r.model, g, c.out);
  out << "wrote " << r.model.num_entities() << " x " << r.model.dim() << " embeddings to " << c.out << '\n';
  return 0;
}

// Node vectors in graph order, from --embeddings or a fresh run.
Matrix node_vectors_for(const RunConfig& c, const AttributedGraph& g, std::ostream& err) {
  if (!c.embeddings.empty()) {
    const SplitEmbeddings prior = split_embeddings(read_embeddings(c.embeddings));
    return stack_prior(prior, g, static_cast<Index>(prior.attr_ids.size()) == g.num_attrs() ? g.num_attrs() : 0)
        .topRows(g.num_nodes());
  }
  Pipeline p = compute(c, g, err);
  if (has_side_info(c)) {
    const SideInfo side = build_side_info(g, c.lambdas, p.model.num_attrs());
    p.model = side_enhance(p.model, p.walk, side, c.iterations).model;
  }
  return p.model.node_vectors();
}

int cmd_eval(const RunConfig& c, EvalTask task, std::ostream& out, std::ostream& err) {
  const AttributedGraph g = load(c, true);
  const Matrix nodes = node_vectors_for(c, g, err);
  EvalProtocol protocol;
  protocol.task = task;
  protocol.repeats = c.repeats;
  protocol.train_fraction = c.train_fraction;
  protocol.seed = c.seed;
  const EvalReport report = evaluate(nodes, g.labels, g.num_classes(), protocol);
  out << report.table();
  if (!c.out.empty()) write_text(c.out, report.records());
  return 0;
}

int cmd_describe(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Matrix nodes, attrs;
  std::vector<std::string> attr_ids;
  int classes = 0;
  if (!c.embeddings.empty() && c.edges.empty()) {
    const SplitEmbeddings prior = split_embeddings(read_embeddings(c.embeddings));
    nodes = prior.node_vectors;
    attrs = prior.attr_vectors;
    attr_ids = prior.attr_ids;
  } else {
    const AttributedGraph g = load(c, false);
    classes = g.num_classes();
    if (!c.embeddings.empty()) {
      const SplitEmbeddings prior = split_embeddings(read_embeddings(c.embeddings));
      const Matrix x = stack_prior(prior, g, g.num_attrs());
      nodes = x.topRows(g.num_nodes());
      attrs = x.bottomRows(g.num_attrs());
    } else {
      Pipeline p = compute(c, g, err);
      if (has_side_info(c)) {
        const SideInfo side = build_side_info(g, c.lambdas, p.model.num_attrs());
        p.model = side_enhance(p.model, p.walk, side, c.iterations).model;
      }
      nodes = p.model.node_vectors();
      attrs = p.model.attr_vectors();
    }
    attr_ids = g.attr_ids;
  }
  if (attrs.rows() == 0) throw Error(ErrorKind::kInvalidInput, "embedding has no attribute rows");

  const int k1 = c.node_clusters > 0 ? c.node_clusters : classes;
  if (k1 < 1)
    throw Error(ErrorKind::kInvalidArgument, "--node-clusters is required when no labels are given");
  const DistanceMetric metric = c.cosine_describe ? DistanceMetric::kCosine : DistanceMetric::kEuclidean;
  const Clustering communities = kmeans(nodes, k1, derive_seed(c.seed, 0));

  std::vector<CommunityDescription> descriptions;
  if (c.attr_clusters > 0) {
    const Clustering topics = kmeans(attrs, c.attr_clusters, derive_seed(c.seed, 1));
    descriptions = describe_topics(attrs, attr_ids, communities, topics, c.keywords, c.topics, metric);
  } else {
    descriptions = describe_direct(attrs, attr_ids, communities, c.keywords, metric);
  }
  const std::string text = format_descriptions(descriptions);
  out << text;
  if (!c.out.empty()) write_text(c.out, text);
  return 0;
}

int cmd_selftest(const RunConfig& c, bool seed_given, std::ostream& out) {
  checks::CheckSizes sizes = c.full ? checks::CheckSizes{} : checks::quick_sizes();
  if (seed_given) sizes.seed = c.seed;
  int failed = 0;
  for (const auto& r : checks::run_all(sizes, c.full)) {
    out << checks::format_result(r) << '\n';
    if (!r.passed && !r.skipped) ++failed;
  }
  out << (failed ? "selftest failed: " + std::to_string(failed) + " check(s)\n" : "selftest passed\n");
  return failed ? 1 : 0;
}

}  // namespace

void validate(const RunConfig& c) {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::kInvalidArgument, what);
  };
  need(c.dim >= 1, "--dim must be >= 1");
  need(c.order >= 1, "--order must be >= 1");
  need(c.negatives >= 1, "--neg must be >= 1");
  need(c.deltas.d0 >= 0.0 && c.deltas.d1 >= 0.0 && c.deltas.d2 >= 0.0, "--delta0/1/2 must be >= 0");
  need(c.lambdas.community >= 0.0 && c.lambdas.attribute >= 0.0, "--lambda1/2 must be >= 0");
  need(c.repeats >= 1, "--repeats must be >= 1");
  need(c.train_fraction > 0.0 && c.train_fraction < 1.0, "--train-frac must lie in (0, 1)");
  need(c.keywords >= 1, "--keywords must be >= 1");
  need(c.topics >= 1, "--topics must be >= 1");
  need(c.node_clusters >= 0, "--node-clusters must be >= 0");
  need(c.attr_clusters >= 0, "--attr-clusters must be >= 0");
  need(c.size_cap >= 1, "--size-cap must be >= 1");
  need(c.iterations >= 1, "--iterations must be >= 1");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Semantic graph representation: attributed network embedding, evaluation and "
               "community descriptions.",
               "sgr"};
  app.add_option("command", c.command, "embed | enhance | eval-cluster | eval-classify | describe | selftest")
      ->required()
      ->check(CLI::IsMember({"embed", "enhance", "eval-cluster", "eval-classify", "describe", "selftest"}));

  app.add_option("--edges", c.edges, "edge list, one 'u<TAB>v' per line");
  app.add_option("--attrs", c.attrs, "node attributes, 'node<TAB>attr[<TAB>weight]' per line");
  app.add_option("--labels", c.labels, "node classes, 'node<TAB>class' per line");
  app.add_option("--out", c.out, "output file (embeddings, report records or descriptions)");
  app.add_option("--embeddings", c.embeddings, "prior embedding file to enhance, evaluate or describe");
  app.add_option("--dump-b", c.dump_b, "write the auxiliary adjacency as 'i<TAB>j<TAB>value' lines");

  app.add_option("--dim", c.dim, "embedding dimension k (clamped to n+m)")->capture_default_str();
  app.add_option("--order", c.order, "random-walk order o")->capture_default_str();
  app.add_option("--neg", c.negatives, "negative sampling count b")->capture_default_str();
  app.add_option("--delta0", c.deltas.d0, "weight of the direct node-attribute relation")->capture_default_str();
  app.add_option("--delta1", c.deltas.d1, "weight of the shared-attribute motif")->capture_default_str();
  app.add_option("--delta2", c.deltas.d2, "weight of the co-held-attribute motif")->capture_default_str();
  app.add_option("--lambda1", c.lambdas.community, "community side-information weight")->capture_default_str();
  app.add_option("--lambda2", c.lambdas.attribute, "attribute-similarity side-information weight")
      ->capture_default_str();
  app.add_option("--iterations", c.iterations, "alternating update passes in enhance")->capture_default_str();
  app.add_flag("--weighted-motifs", c.weighted_motifs, "scale motif counts by the attribute weight");
  app.add_option("--size-cap", c.size_cap, "largest n+m accepted for dense work")->capture_default_str();

  app.add_option("--repeats", c.repeats, "evaluation repeats")->capture_default_str();
  auto* seed_opt = app.add_option("--seed", c.seed, "base seed for every random choice")->capture_default_str();
  app.add_option("--train-frac", c.train_fraction, "training fraction for eval-classify")->capture_default_str();

  app.add_option("--keywords", c.keywords, "keywords per community or topic (q)")->capture_default_str();
  app.add_option("--topics", c.topics, "topics per community (t)")->capture_default_str();
  app.add_option("--node-clusters", c.node_clusters, "communities K1 (0: number of classes)")
      ->capture_default_str();
  app.add_option("--attr-clusters", c.attr_clusters, "attribute topics K2 (0: describe attributes directly)")
      ->capture_default_str();
  app.add_flag("--cosine-describe", c.cosine_describe, "rank keywords by cosine instead of Euclidean distance");
  app.add_flag("--full", c.full, "selftest at acceptance sizes, including the optional dataset check");
  app.footer("Thread count follows OMP_NUM_THREADS.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error\t" << to_string(ErrorKind::kInvalidArgument) << '\t' << one_line(e.what()) << '\n';
    return 2;
  }

  try {
    validate(c);
    if (c.command == "embed") return cmd_embed(c, out, err);
    if (c.command == "enhance") return cmd_enhance(c, out, err);
    if (c.command == "eval-cluster") return cmd_eval(c, EvalTask::kClustering, out, err);
    if (c.command == "eval-classify") return cmd_eval(c, EvalTask::kClassification, out, err);
    if (c.command == "describe") return cmd_describe(c, out, err);
    return cmd_selftest(c, seed_opt->count() > 0, out);
  } catch (const Error& e) {
    err << "error\t" << to_string(e.kind()) << '\t' << one_line(e.what()) << '\n';
  } catch (const std::exception& e) {
    err << "error\tinternal\t" << one_line(e.what()) << '\n';
  }
  return 2;
}

}  // namespace sgr::cli
