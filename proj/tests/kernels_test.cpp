#include <gtest/gtest.h>

#include <random>

#include "sgr/kernels.hpp"
#include "test_util.hpp"

namespace sgr {
namespace {

namespace k = kernels;

class KernelAgreement : public ::testing::TestWithParam<int> {
 protected:
  std::mt19937_64 rng{static_cast<std::uint64_t>(GetParam())};
};

TEST_P(KernelAgreement, PowerSum) {
  const Index n = 1 + static_cast<Index>(rng() % 40);
  Matrix p = test::random_matrix(rng, n, n, 0, 1);
  p = (p.array().colwise() / p.rowwise().sum().array()).matrix();
  for (int order = 1; order <= 4; ++order) {
    const Matrix a = k::power_sum(p, order);
    const Matrix b = k::serial::power_sum(p, order);
    EXPECT_LE((a - b).norm(), 1e-12 * (1.0 + b.norm()));
  }
}

TEST_P(KernelAgreement, ColumnCosine) {
  Matrix m = test::random_matrix(rng, 1 + static_cast<Index>(rng() % 30), 1 + static_cast<Index>(rng() % 20), 0, 1);
  m.col(0).setZero();
  const Matrix a = k::column_cosine(m);
  const Matrix b = k::serial::column_cosine(m);
  EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_EQ(a, a.transpose());
  EXPECT_EQ(a(0, 0), 0.0);
  for (Index i = 1; i < a.rows(); ++i) EXPECT_EQ(a(i, i), 1.0);
}

TEST_P(KernelAgreement, Distances) {
  const Index dim = 1 + static_cast<Index>(rng() % 8);
  const Matrix pts = test::random_matrix(rng, 1 + static_cast<Index>(rng() % 100), dim);
  const Matrix ctr = test::random_matrix(rng, 1 + static_cast<Index>(rng() % 6), dim);
  EXPECT_LE((k::squared_distances(pts, ctr) - k::serial::squared_distances(pts, ctr)).cwiseAbs().maxCoeff(),
            1e-12);
  const auto [ia, da] = k::nearest_centers(pts, ctr);
  const auto [ib, db] = k::serial::nearest_centers(pts, ctr);
  EXPECT_EQ(ia, ib);
  EXPECT_LE((da - db).cwiseAbs().maxCoeff(), 1e-12);
}

TEST_P(KernelAgreement, MotifCounts) {
  Matrix r0 = test::random_matrix(rng, 1 + static_cast<Index>(rng() % 30), 1 + static_cast<Index>(rng() % 12), 0, 2);
  r0 = (r0.array() < 1.0).select(0.0, r0);
  for (bool weighted : {false, true}) {
    const auto [a1, a2] = k::motif_counts(r0, weighted);
    const auto [b1, b2] = k::serial::motif_counts(r0, weighted);
    EXPECT_EQ(a1, b1);
    EXPECT_EQ(a2, b2);
  }
}

TEST_P(KernelAgreement, PairwisePenalty) {
  const Index n = 1 + static_cast<Index>(rng() % 30);
  Matrix t = test::random_matrix(rng, n, n, 0, 1);
  t = (t + t.transpose()).eval();
  const Matrix x = test::random_matrix(rng, n, 1 + static_cast<Index>(rng() % 5));
  const double a = k::pairwise_penalty(x, t);
  const double b = k::serial::pairwise_penalty(x, t);
  EXPECT_NEAR(a, b, 1e-12 * (1.0 + std::abs(b)));
}

INSTANTIATE_TEST_SUITE_P(Seeds, KernelAgreement, ::testing::Range(0, 12));

TEST(Kernels, NearestCenterTieGoesToLowerIndex) {
  Matrix pts(1, 1);
  pts << 0.0;
  Matrix ctr(2, 1);
  ctr << 1.0, -1.0;
  EXPECT_EQ(k::nearest_centers(pts, ctr).first[0], 0);
  EXPECT_EQ(k::serial::nearest_centers(pts, ctr).first[0], 0);
}

}  // namespace
}  // namespace sgr
