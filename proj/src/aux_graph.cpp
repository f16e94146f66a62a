#include "sgr/aux_graph.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "sgr/kernels.hpp"

namespace sgr {

Matrix mnorm(const Matrix& m) {
  if (m.size() == 0) return m;
  if (!m.allFinite()) throw Error(ErrorKind::kNumerical, "mnorm: non-finite input");
  const double lo = m.minCoeff();
  const double hi = m.maxCoeff();
  if (hi == lo) return Matrix::Zero(m.rows(), m.cols());
  const double range = hi - lo;
  Matrix out = (m.array() - lo) / range;
  // Pin the extremes so min -> 0 and max -> 1 hold exactly.
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) == lo) out(i, j) = 0.0;
      else if (m(i, j) == hi) out(i, j) = 1.0;
    }
  return out;
}

Matrix attribute_similarity(const Matrix& r0) {
  const Index m = r0.cols();
  if (m == 0) return Matrix(0, 0);
  if (!r0.allFinite()) throw Error(ErrorKind::kNumerical, "attribute matrix is not finite");
  for (Index w = 0; w < m; ++w)
    if (r0.col(w).squaredNorm() == 0.0)
      throw Error(ErrorKind::kInvalidInput,
                  "attribute column " + std::to_string(w) + " has zero norm");

  const Matrix p0 = kernels::column_cosine(r0);
  const Vector degree = p0.rowwise().sum();
  Matrix p(m, m);
  for (Index s = 0; s < m; ++s)
    for (Index w = 0; w < m; ++w) p(w, s) = p0(w, s) / std::sqrt(degree[w] * degree[s]);
  return mnorm(p);
}

MotifRelations motif_relations(const Matrix& r0, MotifMode mode) {
  if (!r0.allFinite() || (r0.array() < 0.0).any())
    throw Error(ErrorKind::kInvalidInput, "motif_relations: R0 must be finite and nonnegative");
  auto [r1, r2] = kernels::motif_counts(r0, mode == MotifMode::kWeighted);
  return {std::move(r1), std::move(r2)};
}

Matrix combine_relations(const Matrix& r0, const Matrix& r1, const Matrix& r2,
                         const MotifWeights& deltas) {
  if (deltas.d0 < 0.0 || deltas.d1 < 0.0 || deltas.d2 < 0.0)
    throw Error(ErrorKind::kInvalidArgument, "motif weights must be nonnegative");
  if (r1.rows() != r0.rows() || r1.cols() != r0.cols() || r2.rows() != r0.rows() ||
      r2.cols() != r0.cols())
    throw Error(ErrorKind::kInvalidArgument, "relation matrices differ in shape");
  const Matrix r = deltas.d0 * mnorm(r0) + deltas.d1 * mnorm(r1) + deltas.d2 * mnorm(r2);
  return mnorm(r);
}

HeteroAdjacency assemble_hetero_adjacency(const Matrix& adjacency, const Matrix& relations,
                                          const Matrix& attr_similarity, MotifWeights deltas) {
  const Index n = adjacency.rows();
  const Index m = attr_similarity.rows();
  if (adjacency.cols() != n || relations.rows() != n || relations.cols() != m ||
      attr_similarity.cols() != m)
    throw Error(ErrorKind::kInvalidArgument, "hetero adjacency blocks have inconsistent shapes");

  Matrix b(n + m, n + m);
  b.topLeftCorner(n, n) = adjacency;
  b.topRightCorner(n, m) = relations;
  b.bottomLeftCorner(m, n) = relations.transpose();
  b.bottomRightCorner(m, m) = attr_similarity;
  return HeteroAdjacency(std::move(b), n, deltas);
}

HeteroAdjacency build_hetero_adjacency(const AttributedGraph& g, const AuxGraphOptions& options) {
  const Index n = g.num_nodes();
  const bool drop_attrs = options.zero_attribute_block && options.deltas.all_zero();
  const Index m = drop_attrs ? 0 : g.num_attrs();
  if (n + m > options.size_cap)
    throw Error(ErrorKind::kSizeCap, "n+m = " + std::to_string(n + m) + " exceeds size cap " +
                                         std::to_string(options.size_cap));

  const Matrix adjacency = Matrix(g.adjacency);
  Matrix relations = Matrix::Zero(n, m);
  Matrix similarity = Matrix::Zero(m, m);
  if (m > 0) {
    const Matrix r0 = Matrix(g.attr_weights);
    if (!options.zero_attribute_block) similarity = attribute_similarity(r0);
    const auto motifs = motif_relations(r0, options.motif_mode);
    relations = combine_relations(r0, motifs.r1, motifs.r2, options.deltas);
  }

  HeteroAdjacency b = assemble_hetero_adjacency(adjacency, relations, similarity, options.deltas);

  const Vector degrees = b.matrix().rowwise().sum();
  for (Index i = 0; i < b.size(); ++i)
    if (!(degrees[i] > 0.0)) {
      const std::string name = i < n ? "node " + g.node_ids[i] : "attribute " + g.attr_ids[i - n];
      throw Error(ErrorKind::kInvalidInput, name + " is isolated in the heterogeneous graph");
    }
  return b;
}

void dump_triples(const HeteroAdjacency& b, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  char buf[32];
  const Matrix& mat = b.matrix();
  for (Index i = 0; i < mat.rows(); ++i)
    for (Index j = 0; j < mat.cols(); ++j) {
      if (mat(i, j) == 0.0) continue;
      std::snprintf(buf, sizeof buf, "%.17g", mat(i, j));
      out << i << '\t' << j << '\t' << buf << '\n';
    }
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

}  // namespace sgr
