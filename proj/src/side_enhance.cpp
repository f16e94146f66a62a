#include "sgr/side_enhance.hpp"

#include <algorithm>

#include "sgr/aux_graph.hpp"
#include "sgr/kernels.hpp"

namespace sgr {

namespace {

Matrix pad(const Matrix& block, Index size) {
  Matrix t = Matrix::Zero(size, size);
  t.topLeftCorner(block.rows(), block.cols()) = block;
  return t;
}

void require_finite(const Matrix& m, const char* name) {
  if (!m.allFinite()) throw Error(ErrorKind::kNumerical, std::string(name) + " is not finite");
}

}  // namespace

Matrix modularity_matrix(const AttributedGraph& g) {
  const Index e = g.num_edges();
  if (e < 1) throw Error(ErrorKind::kInvalidInput, "modularity needs at least one edge");
  const Matrix a = Matrix(g.adjacency);
  const Vector d = a.rowwise().sum();
  Matrix q = a - d * d.transpose() / (2.0 * static_cast<double>(e));
  return q;
}

Matrix attribute_cosine(const Matrix& r0) {
  return kernels::column_cosine(r0.transpose());
}

Matrix laplacian(const Matrix& t) {
  Matrix l = -t;
  l.diagonal() += t.rowwise().sum();
  return l;
}

Matrix SideInfo::t1() const { return pad(q_norm, size()); }
Matrix SideInfo::t2() const { return pad(s_norm, size()); }

SideInfo build_side_info(const AttributedGraph& g, SideWeights lambdas) {
  return build_side_info(g, lambdas, g.num_attrs());
}

SideInfo build_side_info(const AttributedGraph& g, SideWeights lambdas, Index num_attrs) {
  if (!(lambdas.community >= 0.0) || !(lambdas.attribute >= 0.0))
    throw Error(ErrorKind::kInvalidArgument, "side-information weights must be nonnegative");
  SideInfo side;
  side.lambdas = lambdas;
  side.num_nodes = g.num_nodes();
  side.num_attrs = num_attrs;
  side.q_norm = mnorm(modularity_matrix(g));
  side.s_norm = mnorm(attribute_cosine(Matrix(g.attr_weights)));

  const Index n = side.num_nodes;
  Matrix block = lambdas.community * laplacian(side.q_norm) +
                 lambdas.attribute * laplacian(side.s_norm);
  side.l = pad(block, n + num_attrs);
  return side;
}

double regularization_value(const Matrix& x, const Matrix& t) {
  if (t.rows() != t.cols() || t.rows() != x.rows())
    throw Error(ErrorKind::kInvalidArgument, "regularizer shape does not match embeddings");
  const double scale = std::max(1.0, t.size() ? t.cwiseAbs().maxCoeff() : 0.0);
  if (t.size() && (t - t.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw Error(ErrorKind::kInvalidArgument, "regularizer matrix is not symmetric");
  return kernels::pairwise_penalty(x, t);
}

double enhanced_objective(const Matrix& z, const Matrix& x, const Matrix& y, const Matrix& l) {
  const double fit = (z - x * y.transpose()).squaredNorm();
  return fit + (x.transpose() * l * x).trace();
}

Matrix objective_gradient_x(const Matrix& z, const Matrix& x, const Matrix& y, const Matrix& l) {
  return 2.0 * (x * (y.transpose() * y) - z * y + l * x);
}

Matrix objective_gradient_y(const Matrix& z, const Matrix& x, const Matrix& y) {
  return 2.0 * (y * (x.transpose() * x) - z.transpose() * x);
}

Matrix pseudo_inverse(const Matrix& m, double tol) {
  require_finite(m, "pseudo-inverse input");
  if (m.size() == 0) return Matrix(m.cols(), m.rows());
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) throw Error(ErrorKind::kNumerical, "SVD did not converge");
  const Vector& s = svd.singularValues();
  const double cutoff = tol * (s.size() ? s[0] : 0.0);
  Vector inv(s.size());
  for (Index i = 0; i < s.size(); ++i) inv[i] = s[i] > cutoff && s[i] > 0.0 ? 1.0 / s[i] : 0.0;
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

Matrix update_x(const Matrix& z, const Matrix& y, const Matrix& l) {
  require_finite(z, "Z");
  require_finite(y, "Y");
  require_finite(l, "L");
  const Index size = z.rows();
  const Index k = y.cols();
  if (z.cols() != y.rows() || l.rows() != size || l.cols() != size)
    throw Error(ErrorKind::kInvalidArgument, "update_x: inconsistent shapes");
  const Matrix left = pseudo_inverse(Matrix::Identity(size, size) + l);
  const Matrix right = pseudo_inverse(y.transpose() * y + Matrix::Identity(k, k));
  return left * (z * y) * right;
}

Matrix update_y(const Matrix& z, const Matrix& x) {
  require_finite(z, "Z");
  require_finite(x, "X");
  if (z.rows() != x.rows()) throw Error(ErrorKind::kInvalidArgument, "update_y: inconsistent shapes");
  return (z.transpose() * x) * pseudo_inverse(x.transpose() * x);
}

Matrix least_squares_x(const Matrix& z, const Matrix& y) {
  if (z.cols() != y.rows())
    throw Error(ErrorKind::kInvalidArgument, "least_squares_x: inconsistent shapes");
  return (z * y) * pseudo_inverse(y.transpose() * y);
}

EnhanceResult side_enhance(const EmbeddingModel& model, const WalkMatrix& walk,
                           const SideInfo& side, int iterations) {
  if (iterations < 1) throw Error(ErrorKind::kInvalidArgument, "iterations must be >= 1");
  if (model.num_entities() != walk.z.rows() || side.size() != model.num_entities() ||
      side.num_nodes != model.num_nodes)
    throw Error(ErrorKind::kInvalidArgument, "model, walk matrix and side information disagree in shape");

  EnhanceResult result;
  Matrix x = model.x;
  Matrix y = model.y;
  result.objective_before = enhanced_objective(walk.z, x, y, side.l);
  for (int it = 0; it < iterations; ++it) {
    x = update_x(walk.z, y, side.l);
    y = update_y(walk.z, x);
  }
  result.objective_after = enhanced_objective(walk.z, x, y, side.l);

  result.model = model;
  result.model.x = std::move(x);
  result.model.y = std::move(y);
  return result;
}

}  // namespace sgr
