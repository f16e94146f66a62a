#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "sgr/eval.hpp"

namespace sgr {

namespace {

constexpr int kMaxSplitAttempts = 20;

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

struct RepeatScore {
  double nmi = 0.0;
  double ac = 0.0;
  double f1 = 0.0;
};

RepeatScore cluster_once(const Matrix& x, const std::vector<int>& labels, int c,
                         std::uint64_t seed, const KMeansOptions& options) {
  const Clustering clusters = kmeans(x, c, seed, options);
  return {nmi(clusters.assignment, labels), clustering_accuracy(clusters.assignment, labels), 0.0};
}

RepeatScore classify_once(const Matrix& x, const std::vector<int>& labels, int c,
                          std::uint64_t seed, const EvalProtocol& protocol) {
  const Index n = x.rows();
  const auto train_size = static_cast<Index>(std::llround(protocol.train_fraction * n));
  if (train_size < 1 || train_size >= n)
    throw Error(ErrorKind::kInvalidArgument, "train fraction leaves an empty train or test split");

  for (int attempt = 0; attempt < kMaxSplitAttempts; ++attempt) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});
    for (Index i = 0; i < train_size; ++i) {
      const Index j = i + static_cast<Index>(rng() % static_cast<std::uint64_t>(n - i));
      std::swap(order[i], order[j]);
    }

    std::vector<char> seen(c, 0);
    for (Index i = 0; i < train_size; ++i) seen[labels[order[i]]] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) continue;

    // Keep the original node order inside each split.
    std::vector<char> in_train(n, 0);
    for (Index i = 0; i < train_size; ++i) in_train[order[i]] = 1;
    Matrix train_x(train_size, x.cols()), test_x(n - train_size, x.cols());
    std::vector<int> train_y, test_y;
    Index a = 0, b = 0;
    for (Index i = 0; i < n; ++i) {
      if (in_train[i]) {
        train_x.row(a++) = x.row(i);
        train_y.push_back(labels[i]);
      } else {
        test_x.row(b++) = x.row(i);
        test_y.push_back(labels[i]);
      }
    }
    const auto model = LinearClassifier::train(train_x, train_y, c, protocol.classifier);
    const auto pred = model.classify(test_x);
    return {0.0, accuracy(pred, test_y), macro_f1(pred, test_y, c)};
  }
  throw Error(ErrorKind::kInvalidInput, "could not draw a training split containing every class in " +
                                            std::to_string(kMaxSplitAttempts) + " attempts");
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over (seed, stream)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

EvalReport evaluate(const Matrix& node_vectors, const std::vector<int>& labels, int num_classes,
                    const EvalProtocol& protocol) {
  if (labels.empty()) throw Error(ErrorKind::kInvalidInput, "evaluation needs node labels");
  if (static_cast<Index>(labels.size()) != node_vectors.rows())
    throw Error(ErrorKind::kInvalidArgument, "label count does not match embedding rows");
  if (protocol.repeats < 1) throw Error(ErrorKind::kInvalidArgument, "repeats must be >= 1");
  if (num_classes < 1) throw Error(ErrorKind::kInvalidInput, "no classes");

  std::vector<RepeatScore> scores(protocol.repeats);
  std::vector<std::string> failures(protocol.repeats);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < protocol.repeats; ++r) {
    try {
      const std::uint64_t seed = derive_seed(protocol.seed, static_cast<std::uint64_t>(r));
      scores[r] = protocol.task == EvalTask::kClustering
                      ? cluster_once(node_vectors, labels, num_classes, seed, protocol.kmeans)
                      : classify_once(node_vectors, labels, num_classes, seed, protocol);
    } catch (const std::exception& e) {
      failures[r] = e.what();
    }
  }
  for (const auto& f : failures)
    if (!f.empty()) throw Error(ErrorKind::kInvalidInput, f);

  EvalReport report;
  report.task = protocol.task;
  report.repeats = protocol.repeats;
  report.seed = protocol.seed;
  report.protocol = protocol;
  for (const auto& s : scores) {
    report.nmi += s.nmi;
    report.ac += s.ac;
    report.macro_f1 += s.f1;
  }
  report.nmi /= protocol.repeats;
  report.ac /= protocol.repeats;
  report.macro_f1 /= protocol.repeats;
  return report;
}

EvalReport evaluate(const EmbeddingModel& model, const AttributedGraph& g, const EvalProtocol& protocol) {
  if (!g.has_labels()) throw Error(ErrorKind::kInvalidInput, "evaluation needs node labels");
  if (model.num_nodes != g.num_nodes())
    throw Error(ErrorKind::kInvalidArgument, "model and graph disagree on node count");
  return evaluate(Matrix(model.node_vectors()), g.labels, g.num_classes(), protocol);
}

std::string EvalReport::table() const {
  std::string out;
  if (task == EvalTask::kClustering) {
    out += "task        clustering (k-means, k = classes)\n";
    out += "NMI         " + fmt("%.4f", nmi) + "\n";
    out += "AC          " + fmt("%.4f", ac) + "\n";
  } else {
    out += "task        classification (train fraction " + fmt("%.3g", protocol.train_fraction) + ")\n";
    out += "AC          " + fmt("%.4f", ac) + "\n";
    out += "Macro-F1    " + fmt("%.4f", macro_f1) + "\n";
  }
  out += "repeats     " + std::to_string(repeats) + "\n";
  out += "seed        " + std::to_string(seed) + "\n";
  return out;
}

std::string EvalReport::records() const {
  std::string out;
  if (task == EvalTask::kClustering) {
    out += "task\tclustering\n";
    out += "nmi\t" + fmt("%.17g", nmi) + "\n";
    out += "ac\t" + fmt("%.17g", ac) + "\n";
    out += "kmeans_restarts\t" + std::to_string(protocol.kmeans.restarts) + "\n";
    out += "kmeans_max_iterations\t" + std::to_string(protocol.kmeans.max_iterations) + "\n";
  } else {
    out += "task\tclassification\n";
    out += "ac\t" + fmt("%.17g", ac) + "\n";
    out += "macro_f1\t" + fmt("%.17g", macro_f1) + "\n";
    out += "train_fraction\t" + fmt("%.17g", protocol.train_fraction) + "\n";
    out += "l2\t" + fmt("%.17g", protocol.classifier.l2) + "\n";
  }
  out += "repeats\t" + std::to_string(repeats) + "\n";
  out += "seed\t" + std::to_string(seed) + "\n";
  return out;
}

}  // namespace sgr
