#include "sgr/embed.hpp"

#include <cmath>

#include "sgr/kernels.hpp"

namespace sgr {

namespace {

void check_walk_params(int order, int negatives) {
  if (order < 1) throw Error(ErrorKind::kInvalidArgument, "walk order must be >= 1");
  if (negatives < 1) throw Error(ErrorKind::kInvalidArgument, "negative count must be >= 1");
}

}  // namespace

Matrix walk_proximity(const HeteroAdjacency& b, int order, int negatives) {
  check_walk_params(order, negatives);
  const Matrix& adj = b.matrix();
  const Vector degrees = adj.rowwise().sum();
  for (Index i = 0; i < degrees.size(); ++i)
    if (!(degrees[i] > 0.0))
      throw Error(ErrorKind::kInvalidInput, "entity " + std::to_string(i) + " has zero degree");

  const Vector inv_degree = degrees.cwiseInverse();
  const Matrix transition = inv_degree.asDiagonal() * adj;
  Matrix m = kernels::power_sum(transition, order);
  const double scale = degrees.sum() / (static_cast<double>(order) * negatives);
  m = scale * m * inv_degree.asDiagonal();
  return m;
}

WalkMatrix walk_matrix(const HeteroAdjacency& b, int order, int negatives) {
  WalkMatrix w;
  w.z = walk_proximity(b, order, negatives);
  w.z = w.z.cwiseMax(1.0).array().log().matrix();
  w.degrees = b.matrix().rowwise().sum();
  w.volume = w.degrees.sum();
  w.num_nodes = b.num_nodes();
  w.order = order;
  w.negatives = negatives;
  return w;
}

EmbeddingModel factorize(const WalkMatrix& walk, Index k) {
  const Matrix& z = walk.z;
  const Index size = z.rows();
  if (k < 1 || k > size)
    throw Error(ErrorKind::kInvalidArgument,
                "embedding dimension " + std::to_string(k) + " outside [1, " +
                    std::to_string(size) + "]");
  if (!z.allFinite()) throw Error(ErrorKind::kNumerical, "walk matrix has non-finite entries");

  Eigen::BDCSVD<Matrix> svd(z, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success || !svd.singularValues().allFinite())
    throw Error(ErrorKind::kNumerical,
                "SVD did not converge (|Z|_F = " + std::to_string(z.norm()) +
                    ", max |Z_ij| = " + std::to_string(z.cwiseAbs().maxCoeff()) + ")");

  Matrix u = svd.matrixU().leftCols(k);
  Matrix v = svd.matrixV().leftCols(k);
  const Vector s = svd.singularValues().head(k);
  for (Index c = 0; c < k; ++c) {
    Index arg = 0;
    double best = -1.0;
    for (Index r = 0; r < size; ++r)
      if (std::abs(u(r, c)) > best) {
        best = std::abs(u(r, c));
        arg = r;
      }
    if (u(arg, c) < 0.0) {
      u.col(c) *= -1.0;
      v.col(c) *= -1.0;
    }
  }

  const Vector root = s.cwiseSqrt();
  EmbeddingModel model;
  model.x = u * root.asDiagonal();
  model.y = v * root.asDiagonal();
  model.singular_values = s;
  model.num_nodes = walk.num_nodes;
  model.order = walk.order;
  model.negatives = walk.negatives;
  return model;
}

EmbeddingModel embed(const AttributedGraph& g, const EmbedParams& params, WalkMatrix* walk_out) {
  const HeteroAdjacency b = build_hetero_adjacency(g, params.aux);
  WalkMatrix walk = walk_matrix(b, params.order, params.negatives);
  EmbeddingModel model = factorize(walk, params.dim);
  if (walk_out) *walk_out = std::move(walk);
  return model;
}

void write_embeddings(const EmbeddingModel& model, const AttributedGraph& g,
                      const std::filesystem::path& path) {
  // Topology-only models carry no attribute rows.
  static const std::vector<std::string> kNoAttrs;
  const auto& attr_ids = model.num_attrs() == 0 ? kNoAttrs : g.attr_ids;
  write_embeddings(model.x, model.num_nodes, g.node_ids, attr_ids, path);
}

}  // namespace sgr
