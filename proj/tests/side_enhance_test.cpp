#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sgr/checks.hpp"
#include "sgr/oracle.hpp"
#include "sgr/side_enhance.hpp"
#include "test_util.hpp"

namespace sgr {
namespace {

TEST(Modularity, Triangle) {
  const auto g = build_graph({{"a", "b"}, {"b", "c"}, {"a", "c"}}, {{"a", "x"}});
  const Matrix q = modularity_matrix(g);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) EXPECT_NEAR(q(i, j), i == j ? -2.0 / 3.0 : 1.0 / 3.0, 1e-15);
}

TEST(Modularity, SingleEdge) {
  Matrix want(2, 2);
  want << -0.5, 0.5, 0.5, -0.5;
  EXPECT_EQ(modularity_matrix(test::minimal_graph()), want);
}

TEST(Modularity, RowSumsAndOracle) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto g = checks::random_attributed_graph(s, 10, 4, false);
    const Matrix q = modularity_matrix(g);
    EXPECT_LE(q.rowwise().sum().cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_EQ(q, q.transpose());
    const Matrix a = Matrix(g.adjacency);
    oracle::Dense d(a.rows(), std::vector<double>(a.cols()));
    for (Index i = 0; i < a.rows(); ++i)
      for (Index j = 0; j < a.cols(); ++j) d[i][j] = a(i, j);
    const auto qo = oracle::modularity(d);
    for (Index i = 0; i < a.rows(); ++i)
      for (Index j = 0; j < a.cols(); ++j) EXPECT_NEAR(q(i, j), qo[i][j], 1e-14);
  }
}

TEST(Modularity, NoEdges) {
  AttributedGraph g;
  g.node_ids = {"a"};
  g.attr_ids = {"x"};
  g.adjacency = SparseMatrix(1, 1);
  g.attr_weights = SparseMatrix(1, 1);
  g.attr_weights.insert(0, 0) = 1.0;
  EXPECT_THROW(modularity_matrix(g), Error);
}

TEST(AttributeCosine, Examples) {
  Matrix r0(4, 3);
  r0 << 1, 1, 0,  //
      0, 1, 1,    //
      2, 2, 0,    //
      0, 0, 0;
  const Matrix s = attribute_cosine(r0);
  EXPECT_NEAR(s(0, 1), 0.5, 1e-15);
  EXPECT_EQ(s(0, 2), 1.0);  // parallel rows
  EXPECT_EQ(s(3, 3), 0.0);  // zero row
  EXPECT_EQ(s, s.transpose());

  Matrix disjoint(2, 2);
  disjoint << 1, 0, 0, 3;
  EXPECT_EQ(attribute_cosine(disjoint)(0, 1), 0.0);
}

TEST(SideInfo, ZeroWeights) {
  const auto g = checks::random_attributed_graph(1, 6, 3, false);
  const auto side = build_side_info(g, {0, 0});
  EXPECT_EQ(side.l, Matrix::Zero(side.size(), side.size()));
}

TEST(SideInfo, CommunityOnlyPadsAttributes) {
  const auto g = checks::random_attributed_graph(2, 6, 3, false);
  const auto side = build_side_info(g, {1, 0});
  const Index n = g.num_nodes();
  EXPECT_EQ(side.l.bottomRows(side.size() - n), Matrix::Zero(side.size() - n, side.size()));
  EXPECT_EQ(side.l, laplacian(side.t1()));
}

TEST(SideInfo, LaplacianKernel) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto g = checks::random_attributed_graph(s, 8, 5, s % 2 == 0);
    const auto side = build_side_info(g, {1, 1});
    const Vector ones = Vector::Ones(side.size());
    EXPECT_LE((side.l * ones).norm(), 1e-10);
    EXPECT_LE((ones.transpose() * side.l).norm(), 1e-10);
    EXPECT_EQ(side.l, side.l.transpose());
    for (const Matrix& t : {side.t1(), side.t2()}) {
      EXPECT_EQ(t, t.transpose());
      EXPECT_EQ(t.rightCols(g.num_attrs()), Matrix::Zero(side.size(), g.num_attrs()));
    }
  }
}

TEST(SideInfo, RejectsNegativeWeights) {
  EXPECT_THROW(build_side_info(test::minimal_graph(), {-1, 0}), Error);
}

TEST(Regularization, ConstantRowsAndZeroT) {
  std::mt19937_64 rng(1);
  Matrix t = test::random_matrix(rng, 5, 5, 0, 1);
  t = (t + t.transpose()).eval();
  const Matrix x = Matrix::Ones(5, 1) * test::random_matrix(rng, 1, 3);
  EXPECT_NEAR(regularization_value(x, t), 0.0, 1e-14);
  EXPECT_EQ(regularization_value(test::random_matrix(rng, 5, 3), Matrix::Zero(5, 5)), 0.0);
}

TEST(Regularization, PairwiseEqualsTrace) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const Index n = 2 + static_cast<Index>(rng() % 10);
    Matrix t = test::random_matrix(rng, n, n, 0, 1);
    t = (t + t.transpose()).eval();
    const Matrix x = test::random_matrix(rng, n, 1 + static_cast<Index>(rng() % 4));
    const double pair = regularization_value(x, t);
    const double trace = (x.transpose() * laplacian(t) * x).trace();
    EXPECT_NEAR(pair, trace, 1e-8 * std::max(1.0, std::abs(trace)));
    EXPECT_GE(pair, 0.0);
  }
}

TEST(Regularization, RejectsAsymmetric) {
  Matrix t = Matrix::Zero(2, 2);
  t(0, 1) = 1.0;
  EXPECT_THROW(regularization_value(Matrix::Ones(2, 1), t), Error);
}

TEST(Updates, OrthonormalY) {
  std::mt19937_64 rng(3);
  const Matrix z = test::random_matrix(rng, 6, 6);
  const Matrix q = Eigen::HouseholderQR<Matrix>(test::random_matrix(rng, 6, 3)).householderQ() *
                   Matrix::Identity(6, 3);
  const Matrix x = update_x(z, q, Matrix::Zero(6, 6));
  EXPECT_LE((x - z * q / 2.0).norm(), 1e-12);
}

TEST(Updates, ZeroTarget) {
  std::mt19937_64 rng(4);
  const Matrix z = Matrix::Zero(5, 5);
  EXPECT_EQ(update_x(z, test::random_matrix(rng, 5, 2), Matrix::Zero(5, 5)), Matrix::Zero(5, 2));
  EXPECT_EQ(update_y(z, test::random_matrix(rng, 5, 2)), Matrix::Zero(5, 2));
}

TEST(Updates, NormalEquations) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Index n = 3 + static_cast<Index>(rng() % 9);
    const Index k = 1 + static_cast<Index>(rng() % 3);
    const Matrix z = test::random_matrix(rng, n, n, 0, 2);
    const Matrix x = test::random_matrix(rng, n, k);
    const Matrix y = test::random_matrix(rng, n, k);
    const Matrix yn = update_y(z, x);
    EXPECT_LE((yn * x.transpose() * x - z.transpose() * x).norm(), 1e-8 * (z.transpose() * x).norm());
    const Matrix xl = least_squares_x(z, y);
    EXPECT_LE((xl * y.transpose() * y - z * y).norm(), 1e-8 * (z * y).norm());
  }
}

TEST(Pinv, RankDeficient) {
  Matrix m(3, 2);
  m << 1, 2, 2, 4, 3, 6;
  const Matrix p = pseudo_inverse(m);
  EXPECT_LE((m * p * m - m).norm(), 1e-12);
  EXPECT_LE((p * m * p - p).norm(), 1e-12);
  EXPECT_EQ(pseudo_inverse(Matrix::Zero(2, 2)), Matrix::Zero(2, 2));
}

TEST(SideEnhance, ZeroLambdaNormalEquations) {
  const auto g = checks::random_attributed_graph(33, 8, 4, false);
  EmbedParams params;
  params.dim = 3;
  WalkMatrix walk;
  EmbeddingModel model;
  try {
    model = embed(g, params, &walk);
  } catch (const Error&) {
    GTEST_SKIP() << "fixture has an empty row of B";
  }
  const auto side = build_side_info(g, {0, 0});
  const auto r = side_enhance(model, walk, side);
  const Matrix& y = model.y;
  const Matrix zy = walk.z * y;
  EXPECT_LE((r.model.x * (y.transpose() * y + Matrix::Identity(3, 3)) - zy).norm(), 1e-8 * zy.norm());
  EXPECT_TRUE(std::isfinite(r.objective_before));
  EXPECT_TRUE(std::isfinite(r.objective_after));
  EXPECT_NEAR(r.objective_before,
              (walk.z - model.x * model.y.transpose()).squaredNorm(), 1e-9 * (1.0 + r.objective_before));

  const auto again = side_enhance(model, walk, side);
  EXPECT_EQ(again.model.x, r.model.x);
  EXPECT_EQ(again.model.y, r.model.y);
}

TEST(SideEnhance, ShapeMismatch) {
  const auto g = test::minimal_graph();
  EmbedParams params;
  params.dim = 2;
  params.aux.deltas = {1, 0, 0};
  WalkMatrix walk;
  const auto model = embed(g, params, &walk);
  const auto wrong = build_side_info(g, {1, 1}, 0);
  EXPECT_THROW(side_enhance(model, walk, wrong), Error);
}

}  // namespace
}  // namespace sgr
