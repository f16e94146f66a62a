#include <limits>
#include <random>

#include "sgr/eval.hpp"
#include "sgr/kernels.hpp"

namespace sgr {

namespace {

// Platform-stable draws; std distributions differ between standard libraries.
Index uniform_index(std::mt19937_64& rng, Index n) { return static_cast<Index>(rng() % n); }
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Matrix seed_plus_plus(const Matrix& points, int k, std::mt19937_64& rng) {
  const Index n = points.rows();
  Matrix centers(k, points.cols());
  std::vector<char> chosen(n, 0);
  Index first = uniform_index(rng, n);
  centers.row(0) = points.row(first);
  chosen[first] = 1;

  Vector nearest = (points.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (int c = 1; c < k; ++c) {
    const double total = nearest.sum();
    Index pick = -1;
    if (total > 0.0) {
      const double target = uniform01(rng) * total;
      double acc = 0.0;
      for (Index i = 0; i < n; ++i) {
        acc += nearest[i];
        if (nearest[i] > 0.0 && acc >= target) {
          pick = i;
          break;
        }
      }
      if (pick < 0)  // rounding at the tail
        for (Index i = n - 1; i >= 0; --i)
          if (nearest[i] > 0.0) {
            pick = i;
            break;
          }
    } else {
      // All remaining points coincide with a center; take any unchosen one.
      Index remaining = 0;
      for (Index i = 0; i < n; ++i) remaining += chosen[i] ? 0 : 1;
      Index skip = uniform_index(rng, remaining);
      for (Index i = 0; i < n; ++i) {
        if (chosen[i]) continue;
        if (skip-- == 0) {
          pick = i;
          break;
        }
      }
    }
    chosen[pick] = 1;
    centers.row(c) = points.row(pick);
    nearest = nearest.cwiseMin((points.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }
  return centers;
}

Matrix cluster_means(const Matrix& points, const std::vector<int>& assign, int k) {
  Matrix centers = Matrix::Zero(k, points.cols());
  std::vector<Index> counts(k, 0);
  for (Index i = 0; i < points.rows(); ++i) {
    centers.row(assign[i]) += points.row(i);
    ++counts[assign[i]];
  }
  for (int c = 0; c < k; ++c)
    if (counts[c] > 0) centers.row(c) /= static_cast<double>(counts[c]);
  return centers;
}

// Moves the point farthest from the largest cluster's mean into each empty
// cluster. Requires points.rows() >= k.
void repair_empty(const Matrix& points, std::vector<int>& assign, int k) {
  while (true) {
    std::vector<Index> counts(k, 0);
    for (int a : assign) ++counts[a];
    int empty = -1;
    for (int c = 0; c < k && empty < 0; ++c)
      if (counts[c] == 0) empty = c;
    if (empty < 0) return;

    int largest = 0;
    for (int c = 1; c < k; ++c)
      if (counts[c] > counts[largest]) largest = c;
    const Matrix centers = cluster_means(points, assign, k);
    Index far = -1;
    double best = -1.0;
    for (Index i = 0; i < points.rows(); ++i) {
      if (assign[i] != largest) continue;
      const double d = (points.row(i) - centers.row(largest)).squaredNorm();
      if (d > best) {
        best = d;
        far = i;
      }
    }
    assign[far] = empty;
  }
}

Clustering lloyd(const Matrix& points, int k, Matrix centers, int max_iterations) {
  Clustering result;
  auto [assign, dist] = kernels::nearest_centers(points, centers);
  int it = 0;
  for (; it < max_iterations; ++it) {
    repair_empty(points, assign, k);
    centers = cluster_means(points, assign, k);
    auto [next, next_dist] = kernels::nearest_centers(points, centers);
    if (next == assign) break;
    assign = std::move(next);
  }
  repair_empty(points, assign, k);
  result.centers = cluster_means(points, assign, k);
  double wcss = 0.0;
  for (Index i = 0; i < points.rows(); ++i)
    wcss += (points.row(i) - result.centers.row(assign[i])).squaredNorm();
  result.assignment = std::move(assign);
  result.wcss = wcss;
  result.iterations = it + 1;
  return result;
}

}  // namespace

Clustering kmeans(const Matrix& points, int k, std::uint64_t seed, const KMeansOptions& options) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "k-means needs k >= 1");
  if (k > points.rows())
    throw Error(ErrorKind::kInvalidArgument, "k-means: k = " + std::to_string(k) +
                                                 " exceeds point count " +
                                                 std::to_string(points.rows()));
  if (!points.allFinite()) throw Error(ErrorKind::kNumerical, "k-means: non-finite points");
  if (options.restarts < 1 || options.max_iterations < 1)
    throw Error(ErrorKind::kInvalidArgument, "k-means: restarts and iterations must be >= 1");

  std::mt19937_64 rng(seed);
  Clustering best;
  best.wcss = std::numeric_limits<double>::infinity();
  for (int r = 0; r < options.restarts; ++r) {
    Clustering run = lloyd(points, k, seed_plus_plus(points, k, rng), options.max_iterations);
    if (run.wcss < best.wcss) best = std::move(run);
  }
  return best;
}

}  // namespace sgr
