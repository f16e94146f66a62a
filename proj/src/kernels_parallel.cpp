#include <cmath>
#include <limits>

#include "sgr/kernels.hpp"

namespace sgr::kernels {

Matrix power_sum(const Matrix& p, int order) {
  Matrix sum = p;
  Matrix current = p;
  Matrix next(p.rows(), p.cols());
  // Eigen's GEMM is OpenMP-parallel when compiled with -fopenmp.
  for (int r = 2; r <= order; ++r) {
    next.noalias() = current * p;
    current.swap(next);
    sum += current;
  }
  return sum;
}

Matrix column_cosine(const Matrix& m) {
  Matrix gram(m.cols(), m.cols());
  gram.noalias() = m.transpose() * m;
  const Index k = gram.rows();
  const Vector sq = gram.diagonal();
#pragma omp parallel for schedule(static)
  for (Index j = 0; j < k; ++j) {
    for (Index i = 0; i < k; ++i) {
      const double denom = sq[i] * sq[j];
      if (i == j)
        gram(i, j) = sq[i] > 0.0 ? 1.0 : 0.0;
      else
        gram(i, j) = denom > 0.0 ? gram(i, j) / std::sqrt(denom) : 0.0;
    }
  }
  // Symmetrize exactly; the GEMM can differ in the last bit across the diagonal.
  for (Index j = 0; j < k; ++j)
    for (Index i = j + 1; i < k; ++i) gram(j, i) = gram(i, j);
  return gram;
}

Matrix squared_distances(const Matrix& points, const Matrix& centers) {
  Matrix out(points.rows(), centers.rows());
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < points.rows(); ++i)
    for (Index j = 0; j < centers.rows(); ++j)
      out(i, j) = (points.row(i) - centers.row(j)).squaredNorm();
  return out;
}

std::pair<std::vector<int>, Vector> nearest_centers(const Matrix& points, const Matrix& centers) {
  std::vector<int> assign(points.rows(), 0);
  Vector dist(points.rows());
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < points.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    int arg = 0;
    for (Index j = 0; j < centers.rows(); ++j) {
      const double d = (points.row(i) - centers.row(j)).squaredNorm();
      if (d < best) {
        best = d;
        arg = static_cast<int>(j);
      }
    }
    assign[i] = arg;
    dist[i] = best;
  }
  return {std::move(assign), std::move(dist)};
}

std::pair<Matrix, Matrix> motif_counts(const Matrix& r0, bool weighted) {
  const Index n = r0.rows();
  const Index m = r0.cols();
  std::vector<double> col_support(m, 0.0);
  std::vector<double> row_support(n, 0.0);
#pragma omp parallel for schedule(static)
  for (Index w = 0; w < m; ++w) {
    double c = 0.0;
    for (Index i = 0; i < n; ++i) c += r0(i, w) > 0.0 ? 1.0 : 0.0;
    col_support[w] = c;
  }
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) {
    double c = 0.0;
    for (Index w = 0; w < m; ++w) c += r0(i, w) > 0.0 ? 1.0 : 0.0;
    row_support[i] = c;
  }

  Matrix r1 = Matrix::Zero(n, m);
  Matrix r2 = Matrix::Zero(n, m);
#pragma omp parallel for schedule(static)
  for (Index w = 0; w < m; ++w) {
    for (Index i = 0; i < n; ++i) {
      const double v = r0(i, w);
      if (!(v > 0.0)) continue;
      const double scale = weighted ? v : 1.0;
      r1(i, w) = scale * (col_support[w] - 1.0);
      r2(i, w) = scale * (row_support[i] - 1.0);
    }
  }
  return {std::move(r1), std::move(r2)};
}

double pairwise_penalty(const Matrix& x, const Matrix& t) {
  double total = 0.0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
  for (Index i = 0; i < t.rows(); ++i) {
    double row = 0.0;
    for (Index j = 0; j < t.cols(); ++j) {
      const double w = t(i, j);
      if (w != 0.0) row += w * (x.row(i) - x.row(j)).squaredNorm();
    }
    total += row;
  }
  return 0.5 * total;
}

}  // namespace sgr::kernels
