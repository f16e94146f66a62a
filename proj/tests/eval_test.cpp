#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sgr/eval.hpp"
#include "sgr/oracle.hpp"
#include "test_util.hpp"

namespace sgr {
namespace {

Matrix blobs(std::mt19937_64& rng, const std::vector<Vector>& centers, int per, std::vector<int>* labels) {
  std::normal_distribution<double> noise(0.0, 0.1);
  Matrix pts(static_cast<Index>(centers.size()) * per, centers[0].size());
  for (std::size_t c = 0; c < centers.size(); ++c)
    for (int i = 0; i < per; ++i) {
      const Index r = static_cast<Index>(c) * per + i;
      for (Index d = 0; d < pts.cols(); ++d) pts(r, d) = centers[c][d] + noise(rng);
      if (labels) labels->push_back(static_cast<int>(c));
    }
  return pts;
}

TEST(KMeans, SeparatesBlobs) {
  std::mt19937_64 rng(1);
  std::vector<int> truth;
  const Matrix pts = blobs(rng, {Vector::Constant(2, -5.0), Vector::Constant(2, 5.0)}, 30, &truth);
  const auto c = kmeans(pts, 2, 42);
  EXPECT_EQ(clustering_accuracy(c.assignment, truth), 1.0);
}

TEST(KMeans, OnePointPerCluster) {
  std::mt19937_64 rng(2);
  const Matrix pts = test::random_matrix(rng, 5, 3);
  const auto c = kmeans(pts, 5, 1);
  EXPECT_EQ(c.wcss, 0.0);
  std::vector<int> a = c.assignment;
  std::sort(a.begin(), a.end());
  EXPECT_EQ(a, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(KMeans, SeedDeterminism) {
  std::mt19937_64 rng(3);
  const Matrix pts = test::random_matrix(rng, 80, 4);
  const auto a = kmeans(pts, 4, 7);
  const auto b = kmeans(pts, 4, 7);
  EXPECT_EQ(a.assignment, b.assignment);
  EXPECT_EQ(a.centers, b.centers);
}

TEST(KMeans, DuplicatePointsKeepEveryClusterNonEmpty) {
  Matrix pts = Matrix::Zero(10, 2);
  pts(9, 0) = 1.0;
  const auto c = kmeans(pts, 3, 5);
  std::vector<int> sizes(3, 0);
  for (int a : c.assignment) ++sizes[a];
  for (int s : sizes) EXPECT_GT(s, 0);
}

TEST(KMeans, BadK) {
  EXPECT_THROW(kmeans(Matrix::Zero(3, 2), 0, 1), Error);
  EXPECT_THROW(kmeans(Matrix::Zero(3, 2), 4, 1), Error);
}

TEST(Nmi, Examples) {
  const std::vector<int> a{0, 0, 1, 1, 2, 2};
  EXPECT_NEAR(nmi(a, a), 1.0, 1e-15);
  EXPECT_EQ(nmi({0, 0, 0, 0}, {0, 0, 1, 1}), 0.0);
  EXPECT_NEAR(nmi({0, 0, 1, 1}, {1, 1, 0, 0}), 1.0, 1e-15);
}

TEST(Nmi, SymmetricAndBounded) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    const int size = 2 + static_cast<int>(rng() % 50);
    std::vector<int> a(size), b(size);
    for (int i = 0; i < size; ++i) {
      a[i] = static_cast<int>(rng() % 4);
      b[i] = static_cast<int>(rng() % 6);
    }
    EXPECT_EQ(nmi(a, b), nmi(b, a));
    EXPECT_GE(nmi(a, b), 0.0);
    EXPECT_LE(nmi(a, b), 1.0);
  }
}

TEST(ClusteringAccuracy, Examples) {
  EXPECT_EQ(clustering_accuracy({2, 2, 0, 0, 1}, {0, 0, 1, 1, 2}), 1.0);
  EXPECT_NEAR(clustering_accuracy({0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 2, 2}), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(clustering_accuracy({0, 0, 1, 1}, {1, 1, 1, 0}), 0.75);
  EXPECT_EQ(clustering_accuracy({3, 3, 3, 3, 3}, {0, 1, 1, 1, 2}), 0.6);
}

TEST(ClusteringAccuracy, MatchesBruteForceAndRelabeling) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const int size = 1 + static_cast<int>(rng() % 30);
    const int kp = 1 + static_cast<int>(rng() % 5);
    const int kt = 1 + static_cast<int>(rng() % 5);
    std::vector<int> p(size), q(size);
    for (int i = 0; i < size; ++i) {
      p[i] = static_cast<int>(rng() % kp);
      q[i] = static_cast<int>(rng() % kt);
    }
    const double ac = clustering_accuracy(p, q);
    EXPECT_NEAR(ac, oracle::best_matching_overlap(p, q) / size, 1e-15);

    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> p2(size);
    for (int i = 0; i < size; ++i) p2[i] = perm[p[i]] + 10;
    EXPECT_EQ(clustering_accuracy(p2, q), ac);

    // never below the best single cluster/class overlap
    std::vector<std::vector<int>> table(kp, std::vector<int>(kt, 0));
    int best = 0;
    for (int i = 0; i < size; ++i) best = std::max(best, ++table[p[i]][q[i]]);
    EXPECT_GE(ac * size + 1e-9, best);
  }
}

TEST(MaxWeightAssignment, Rectangular) {
  Matrix w(3, 2);
  w << 1, 5, 4, 1, 0, 0;
  const auto a = max_weight_assignment(w);
  EXPECT_EQ(a[0], 1);
  EXPECT_EQ(a[1], 0);
  EXPECT_EQ(a[2], -1);
}

TEST(Metrics, AccuracyAndMacroF1) {
  EXPECT_EQ(accuracy({0, 1, 1}, {0, 1, 1}), 1.0);
  EXPECT_EQ(macro_f1({0, 1, 1}, {0, 1, 1}, 2), 1.0);
  const std::vector<int> truth{0, 0, 1, 1};
  const std::vector<int> pred{0, 0, 0, 0};
  EXPECT_EQ(accuracy(pred, truth), 0.5);
  // class 0: precision 1/2, recall 1, F1 2/3; class 1: F1 0
  EXPECT_NEAR(macro_f1(pred, truth, 2), (2.0 / 3.0 + 0.0) / 2.0, 1e-15);
  // a class absent from both counts as 0
  EXPECT_NEAR(macro_f1({0, 1}, {0, 1}, 3), 2.0 / 3.0, 1e-15);
}

TEST(Classifier, SeparableTrainAccuracy) {
  std::mt19937_64 rng(6);
  std::vector<int> labels;
  const Matrix pts =
      blobs(rng, {Vector::Constant(3, -2.0), Vector::Constant(3, 2.0), Vector::Unit(3, 0) * 6.0}, 20, &labels);
  const auto model = LinearClassifier::train(pts, labels, 3);
  EXPECT_EQ(accuracy(model.classify(pts), labels), 1.0);
  EXPECT_EQ(model.weights().rows(), 3);
  EXPECT_EQ(model.weights().cols(), 3);
}

TEST(Classifier, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const Index n = 5 + static_cast<Index>(rng() % 20);
    const Index d = 1 + static_cast<Index>(rng() % 5);
    const Matrix f = test::random_matrix(rng, n, d, -2, 2);
    Vector y(n);
    for (Index i = 0; i < n; ++i) y[i] = static_cast<double>(rng() % 2);
    Vector w = test::random_matrix(rng, d, 1).col(0);
    double b = 0.3;
    const double l2 = 0.01 * static_cast<double>(rng() % 10);
    Vector gw;
    double gb = 0.0;
    logistic_loss(f, y, w, b, l2, &gw, &gb);
    Vector fw(d);
    for (Index j = 0; j < d; ++j) {
      const double h = 1e-6 * std::max(1.0, std::abs(w[j]));
      const double keep = w[j];
      w[j] = keep + h;
      const double up = logistic_loss(f, y, w, b, l2);
      w[j] = keep - h;
      const double down = logistic_loss(f, y, w, b, l2);
      w[j] = keep;
      fw[j] = (up - down) / (2 * h);
    }
    const double h = 1e-6;
    const double fb = (logistic_loss(f, y, w, b + h, l2) - logistic_loss(f, y, w, b - h, l2)) / (2 * h);
    EXPECT_LE((gw - fw).norm() / std::max(fw.norm(), 1e-12), 1e-5);
    EXPECT_LE(std::abs(gb - fb) / std::max(std::abs(fb), 1e-6), 1e-5);
  }
}

TEST(Evaluate, PerfectEmbeddings) {
  std::mt19937_64 rng(8);
  std::vector<int> labels;
  const Matrix pts = blobs(rng, {Vector::Constant(2, -5.0), Vector::Constant(2, 5.0), Vector::Unit(2, 0) * 10},
                           20, &labels);
  EvalProtocol p;
  p.repeats = 1;
  const auto r = evaluate(pts, labels, 3, p);
  EXPECT_NEAR(r.nmi, 1.0, 1e-12);
  EXPECT_EQ(r.ac, 1.0);
  p.task = EvalTask::kClassification;
  p.repeats = 5;
  p.train_fraction = 0.3;
  const auto c = evaluate(pts, labels, 3, p);
  EXPECT_EQ(c.ac, 1.0);
  EXPECT_EQ(c.macro_f1, 1.0);
}

TEST(Evaluate, SameSeedSameReport) {
  std::mt19937_64 rng(9);
  const Matrix pts = test::random_matrix(rng, 60, 4);
  std::vector<int> labels(60);
  for (int i = 0; i < 60; ++i) labels[i] = i % 3;
  for (EvalTask task : {EvalTask::kClustering, EvalTask::kClassification}) {
    EvalProtocol p;
    p.task = task;
    p.repeats = 6;
    p.seed = 123;
    const auto a = evaluate(pts, labels, 3, p);
    const auto b = evaluate(pts, labels, 3, p);
    EXPECT_EQ(a.records(), b.records());
    EXPECT_EQ(a.table(), b.table());
  }
}

TEST(Evaluate, RecordsFormat) {
  std::vector<int> labels{0, 0, 1, 1};
  Matrix pts(4, 1);
  pts << 0, 0.1, 5, 5.1;
  EvalProtocol p;
  p.repeats = 2;
  const auto r = evaluate(pts, labels, 2, p);
  const std::string rec = r.records();
  EXPECT_NE(rec.find("nmi\t1\n"), std::string::npos) << rec;
  EXPECT_NE(rec.find("ac\t1\n"), std::string::npos) << rec;
}

TEST(Evaluate, MissingLabelsAndMissingClass) {
  test::TempDir dir;
  EmbeddingModel model;
  model.x = Matrix::Ones(2, 1);
  model.num_nodes = 2;
  EXPECT_THROW(evaluate(model, test::minimal_graph(), EvalProtocol{}), Error);

  // class 2 has no samples, so no training split can contain it
  Matrix pts = Matrix::Random(30, 2);
  std::vector<int> labels(30, 0);
  labels[0] = 1;
  EvalProtocol p;
  p.task = EvalTask::kClassification;
  p.repeats = 1;
  EXPECT_THROW(evaluate(pts, labels, 3, p), Error);
}

TEST(Evaluate, DefaultProtocol) {
  EXPECT_EQ(EvalProtocol{}.repeats, 100);
  EXPECT_EQ(EvalProtocol{}.train_fraction, 0.1);
}

}  // namespace
}  // namespace sgr
