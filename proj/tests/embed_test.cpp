#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sgr/checks.hpp"
#include "sgr/embed.hpp"
#include "sgr/oracle.hpp"
#include "test_util.hpp"

namespace sgr {
namespace {

HeteroAdjacency plain(const Matrix& a) { return HeteroAdjacency(a, a.rows(), {0, 0, 0}); }

oracle::Dense dense(const Matrix& m) {
  oracle::Dense d(m.rows(), std::vector<double>(m.cols()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

TEST(WalkMatrix, SingleEdge) {
  Matrix a(2, 2);
  a << 0, 1, 1, 0;
  const auto b = plain(a);
  EXPECT_LE((walk_proximity(b, 2, 1) - Matrix::Ones(2, 2)).norm(), 1e-15);
  EXPECT_EQ(walk_matrix(b, 2, 1).z, Matrix::Zero(2, 2));
}

TEST(WalkMatrix, Triangle) {
  const Matrix a = Matrix::Ones(3, 3) - Matrix::Identity(3, 3);
  const Matrix m = walk_proximity(plain(a), 1, 1);
  EXPECT_LE((m - 1.5 * a).norm(), 1e-14);
  const WalkMatrix w = walk_matrix(plain(a), 1, 1);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) EXPECT_NEAR(w.z(i, j), i == j ? 0.0 : std::log(1.5), 1e-15);
  EXPECT_NEAR(std::log(1.5), 0.405465, 1e-6);
  EXPECT_EQ(w.volume, 6.0);
}

TEST(WalkMatrix, ManyNegativesFloorToZero) {
  const Matrix a = Matrix::Ones(4, 4) - Matrix::Identity(4, 4);
  EXPECT_EQ(walk_matrix(plain(a), 3, 1000000).z, Matrix::Zero(4, 4));
}

TEST(WalkMatrix, RejectsBadParams) {
  const Matrix a = Matrix::Ones(2, 2) - Matrix::Identity(2, 2);
  EXPECT_THROW(walk_matrix(plain(a), 0, 1), Error);
  EXPECT_THROW(walk_matrix(plain(a), 1, 0), Error);
  Matrix z = Matrix::Zero(3, 3);
  z(0, 1) = z(1, 0) = 1.0;
  EXPECT_THROW(walk_matrix(plain(z), 1, 1), Error);
}

TEST(WalkMatrix, OracleAndSymmetry) {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (std::uint64_t s = 0; checked < 100; ++s) {
    const auto g = checks::random_attributed_graph(s, 8, 5, s % 2 == 0);
    HeteroAdjacency b{Matrix(), 0, {}};
    try {
      b = build_hetero_adjacency(g);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    const int order = 1 + static_cast<int>(rng() % 4);
    const Matrix m = walk_proximity(b, order, 1);
    const auto mo = oracle::walk_proximity(dense(b.matrix()), order, 1);
    double diff = 0.0, scale = 0.0;
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) {
        diff += (m(i, j) - mo[i][j]) * (m(i, j) - mo[i][j]);
        scale += mo[i][j] * mo[i][j];
      }
    EXPECT_LE(std::sqrt(diff / scale), 1e-10);
    EXPECT_LE((m - m.transpose()).norm(), 1e-10 * m.norm());
    const Vector d = b.matrix().rowwise().sum();
    const Matrix p = d.cwiseInverse().asDiagonal() * b.matrix();
    EXPECT_LE((p.rowwise().sum() - Vector::Ones(p.rows())).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Factorize, ZeroInput) {
  WalkMatrix w;
  w.z = Matrix::Zero(4, 4);
  w.num_nodes = 4;
  const auto model = factorize(w, 2);
  EXPECT_EQ(model.x, Matrix::Zero(4, 2));
  EXPECT_EQ(model.y, Matrix::Zero(4, 2));
}

TEST(Factorize, RankOneRecovery) {
  std::mt19937_64 rng(4);
  const Vector u = test::random_matrix(rng, 6, 1).col(0).normalized();
  const Vector v = test::random_matrix(rng, 6, 1).col(0).normalized();
  WalkMatrix w;
  w.z = 3.0 * u * v.transpose();
  w.num_nodes = 6;
  const auto model = factorize(w, 1);
  EXPECT_LE((w.z - model.x * model.y.transpose()).norm(), 1e-8);
  EXPECT_NEAR(model.x.norm() * model.y.norm(), 3.0, 1e-12);
}

TEST(Factorize, TailNormAndMonotone) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    WalkMatrix w;
    const Index n = 2 + static_cast<Index>(rng() % 10);
    w.z = test::random_matrix(rng, n, n, 0, 2);
    w.num_nodes = n;
    const auto theta = oracle::singular_values(dense(w.z));
    double prev = std::numeric_limits<double>::infinity();
    for (Index k = 1; k <= n; ++k) {
      const auto model = factorize(w, k);
      const double res = (w.z - model.x * model.y.transpose()).norm();
      double tail = 0.0;
      for (std::size_t i = k; i < theta.size(); ++i) tail += theta[i] * theta[i];
      EXPECT_NEAR(res, std::sqrt(tail), 1e-8);
      EXPECT_LE(res, prev + 1e-12);
      prev = res;
    }
    EXPECT_LE((w.z - factorize(w, n).x * factorize(w, n).y.transpose()).norm() / w.z.norm(), 1e-8);
  }
}

TEST(Factorize, SignConvention) {
  std::mt19937_64 rng(12);
  WalkMatrix w;
  w.z = test::random_matrix(rng, 7, 7);
  w.num_nodes = 7;
  const auto model = factorize(w, 4);
  for (Index c = 0; c < 4; ++c) {
    Index arg;
    model.x.col(c).cwiseAbs().maxCoeff(&arg);
    EXPECT_GT(model.x(arg, c), 0.0);
  }
}

TEST(Factorize, RejectsBadRank) {
  WalkMatrix w;
  w.z = Matrix::Identity(3, 3);
  EXPECT_THROW(factorize(w, 0), Error);
  EXPECT_THROW(factorize(w, 4), Error);
}

TEST(Embed, MinimalShape) {
  EmbedParams params;
  params.dim = 2;
  const auto model = embed(test::minimal_graph(), params);
  EXPECT_EQ(model.x.rows(), 3);
  EXPECT_EQ(model.dim(), 2);
  EXPECT_EQ(model.num_nodes, 2);
  EXPECT_EQ(model.num_attrs(), 1);
  EXPECT_TRUE(model.x.allFinite());
  EXPECT_EQ(Matrix(model.node_vectors()).rows() + Matrix(model.attr_vectors()).rows(), 3);
}

TEST(Embed, AblationUsesAdjacencyOnly) {
  const auto g = checks::random_attributed_graph(17, 8, 5, false);
  EmbedParams params;
  params.dim = 3;
  params.aux.deltas = {0, 0, 0};
  params.aux.zero_attribute_block = true;
  WalkMatrix walk;
  const auto model = embed(g, params, &walk);
  EXPECT_EQ(model.num_attrs(), 0);
  const auto direct = walk_matrix(plain(Matrix(g.adjacency)), params.order, 1);
  EXPECT_EQ(walk.z, direct.z);
}

TEST(Embed, Deterministic) {
  const auto g = checks::random_attributed_graph(99, 8, 5, true);
  EmbedParams params;
  params.dim = 4;
  const auto a = embed(g, params);
  const auto b = embed(g, params);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.y, b.y);
}

TEST(Embed, FullRankSubspaces) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = checks::random_attributed_graph(s, 8, 5, false);
    EmbedParams params;
    params.dim = 1000;
    HeteroAdjacency b{Matrix(), 0, {}};
    try {
      b = build_hetero_adjacency(g);
    } catch (const Error&) {
      continue;
    }
    params.dim = b.size();
    const auto model = embed(g, params);
    const Matrix xx = model.x * model.x.transpose();
    const Matrix yy = model.y * model.y.transpose();
    EXPECT_LE((xx - yy).norm() / std::max(xx.norm(), 1e-300), 1e-6);
  }
}

}  // namespace
}  // namespace sgr
