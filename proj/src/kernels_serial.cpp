#include <cmath>
#include <limits>

#include "sgr/kernels.hpp"

namespace sgr::kernels::serial {

namespace {

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c = Matrix::Zero(a.rows(), b.cols());
  for (Index j = 0; j < b.cols(); ++j)
    for (Index k = 0; k < a.cols(); ++k) {
      const double bkj = b(k, j);
      if (bkj == 0.0) continue;
      for (Index i = 0; i < a.rows(); ++i) c(i, j) += a(i, k) * bkj;
    }
  return c;
}

}  // namespace

Matrix power_sum(const Matrix& p, int order) {
  Matrix sum = p;
  Matrix current = p;
  for (int r = 2; r <= order; ++r) {
    current = multiply(current, p);
    sum += current;
  }
  return sum;
}

Matrix column_cosine(const Matrix& m) {
  const Index k = m.cols();
  std::vector<double> sq(k);
  for (Index c = 0; c < k; ++c) {
    double s = 0.0;
    for (Index r = 0; r < m.rows(); ++r) s += m(r, c) * m(r, c);
    sq[c] = s;
  }
  Matrix out(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = a; b < k; ++b) {
      double dot = 0.0;
      for (Index r = 0; r < m.rows(); ++r) dot += m(r, a) * m(r, b);
      const double denom = sq[a] * sq[b];
      if (a == b)
        out(a, a) = sq[a] > 0.0 ? 1.0 : 0.0;
      else
        out(a, b) = out(b, a) = denom > 0.0 ? dot / std::sqrt(denom) : 0.0;
    }
  return out;
}

Matrix squared_distances(const Matrix& points, const Matrix& centers) {
  Matrix out(points.rows(), centers.rows());
  for (Index i = 0; i < points.rows(); ++i)
    for (Index j = 0; j < centers.rows(); ++j) {
      double s = 0.0;
      for (Index c = 0; c < points.cols(); ++c) {
        const double d = points(i, c) - centers(j, c);
        s += d * d;
      }
      out(i, j) = s;
    }
  return out;
}

std::pair<std::vector<int>, Vector> nearest_centers(const Matrix& points, const Matrix& centers) {
  const Matrix d = squared_distances(points, centers);
  std::vector<int> assign(points.rows(), 0);
  Vector dist(points.rows());
  for (Index i = 0; i < d.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (Index j = 0; j < d.cols(); ++j)
      if (d(i, j) < best) {
        best = d(i, j);
        assign[i] = static_cast<int>(j);
      }
    dist[i] = best;
  }
  return {std::move(assign), std::move(dist)};
}

std::pair<Matrix, Matrix> motif_counts(const Matrix& r0, bool weighted) {
  const Index n = r0.rows();
  const Index m = r0.cols();
  Matrix r1 = Matrix::Zero(n, m);
  Matrix r2 = Matrix::Zero(n, m);
  for (Index i = 0; i < n; ++i)
    for (Index w = 0; w < m; ++w) {
      if (!(r0(i, w) > 0.0)) continue;
      double shared_nodes = 0.0;
      for (Index j = 0; j < n; ++j)
        if (j != i && r0(j, w) > 0.0) shared_nodes += 1.0;
      double other_attrs = 0.0;
      for (Index s = 0; s < m; ++s)
        if (s != w && r0(i, s) > 0.0) other_attrs += 1.0;
      const double scale = weighted ? r0(i, w) : 1.0;
      r1(i, w) = scale * shared_nodes;
      r2(i, w) = scale * other_attrs;
    }
  return {std::move(r1), std::move(r2)};
}

double pairwise_penalty(const Matrix& x, const Matrix& t) {
  double total = 0.0;
  for (Index i = 0; i < t.rows(); ++i)
    for (Index j = 0; j < t.cols(); ++j) {
      double s = 0.0;
      for (Index c = 0; c < x.cols(); ++c) {
        const double d = x(i, c) - x(j, c);
        s += d * d;
      }
      total += t(i, j) * s;
    }
  return 0.5 * total;
}

}  // namespace sgr::kernels::serial
