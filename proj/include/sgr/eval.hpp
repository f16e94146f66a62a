#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgr/embed.hpp"
#include "sgr/graph_io.hpp"
#include "sgr/types.hpp"

namespace sgr {

struct Clustering {
  std::vector<int> assignment;
  Matrix centers;  // k x dim
  double wcss = 0.0;
  int iterations = 0;

  int k() const { return static_cast<int>(centers.rows()); }
};

struct KMeansOptions {
  int restarts = 10;
  int max_iterations = 300;
};

// Lloyd's algorithm with k-means++ seeding; best of `restarts` by
// within-cluster sum of squares. Empty clusters take the point farthest from
// the center of the currently largest cluster.
Clustering kmeans(const Matrix& points, int k, std::uint64_t seed, const KMeansOptions& options = {});

// Mutual information normalized by the arithmetic mean of the entropies.
double nmi(const std::vector<int>& a, const std::vector<int>& b);

// Assignment maximizing total weight in a rows x cols matrix; result[r] is the
// column matched to row r, or -1 when rows > cols leaves it unmatched.
std::vector<int> max_weight_assignment(const Matrix& weights);

// For each predicted cluster, the truth class it is matched to (or -1).
std::vector<int> match_clusters(const std::vector<int>& pred, const std::vector<int>& truth);

// Fraction of elements correct after the best one-to-one cluster/class matching.
double clustering_accuracy(const std::vector<int>& pred, const std::vector<int>& truth);

double accuracy(const std::vector<int>& pred, const std::vector<int>& truth);

// Unweighted mean of per-class F1 over classes 0..num_classes-1; a class absent
// from both pred and truth contributes 0.
double macro_f1(const std::vector<int>& pred, const std::vector<int>& truth, int num_classes);

struct ClassifierOptions {
  double l2 = 1e-3;
  double tolerance = 1e-6;  // gradient norm
  int max_steps = 5000;
};

// One-vs-rest L2-regularized logistic regression with an unregularized bias.
class LinearClassifier {
 public:
  static LinearClassifier train(const Matrix& features, const std::vector<int>& labels,
                                int num_classes, const ClassifierOptions& options = {});

  std::vector<int> classify(const Matrix& features) const;
  Matrix scores(const Matrix& features) const;

  const Matrix& weights() const { return weights_; }  // dim x classes
  const Vector& bias() const { return bias_; }
  int steps() const { return steps_; }

 private:
  Matrix weights_;
  Vector bias_;
  int steps_ = 0;
};

// Mean logistic loss of one binary problem (targets in {0,1}) plus l2/2 |w|^2,
// and its gradient. Exposed for gradient checks.
double logistic_loss(const Matrix& features, const Vector& targets, const Vector& w, double bias,
                     double l2, Vector* grad_w = nullptr, double* grad_bias = nullptr);

enum class EvalTask { kClustering, kClassification };

struct EvalProtocol {
  EvalTask task = EvalTask::kClustering;
  int repeats = 100;
  double train_fraction = 0.1;
  std::uint64_t seed = 0;
  KMeansOptions kmeans;
  ClassifierOptions classifier;
};

struct EvalReport {
  EvalTask task = EvalTask::kClustering;
  double nmi = 0.0;  // clustering
  double ac = 0.0;
  double macro_f1 = 0.0;  // classification
  int repeats = 0;
  std::uint64_t seed = 0;
  EvalProtocol protocol;

  std::string table() const;
  std::string records() const;  // "metric<TAB>value" lines
};

// Derived per-repeat seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

EvalReport evaluate(const Matrix& node_vectors, const std::vector<int>& labels, int num_classes,
                    const EvalProtocol& protocol);
EvalReport evaluate(const EmbeddingModel& model, const AttributedGraph& g, const EvalProtocol& protocol);

}  // namespace sgr
