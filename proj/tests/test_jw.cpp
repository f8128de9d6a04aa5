#include <gtest/gtest.h>

#include "cfq/hamiltonian.hpp"
#include "cfq/jordan_wigner.hpp"
#include "support.hpp"

using namespace cfq;
using cfq::testing::kron_matrix;
using cfq::testing::Mat;

TEST(JordanWigner, CanonicalAnticommutation) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto dim = Eigen::Index{1} << m;
    const Mat id = Mat::Identity(dim, dim);
    std::vector<Mat> a, ad;
    for (std::size_t k = 0; k < m; ++k) {
      a.push_back(kron_matrix(jw_ladder(m, k, false)));
      ad.push_back(kron_matrix(jw_ladder(m, k, true)));
      ASSERT_LE((ad.back() - a.back().adjoint()).norm(), 1e-12);
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const Mat delta = i == j ? id : Mat::Zero(dim, dim);
        ASSERT_LE((a[i] * ad[j] + ad[j] * a[i] - delta).norm(), 1e-12) << m << " " << i << " " << j;
        ASSERT_LE((a[i] * a[j] + a[j] * a[i]).norm(), 1e-12);
      }
    }
  }
}

TEST(JordanWigner, AgreesWithFockSignCounting) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t k = 0; k < m; ++k) {
      EXPECT_LE((kron_matrix(jw_ladder(m, k, true)) - cfq::testing::fock_creation(m, k)).norm(), 1e-12);
    }
  }
}

TEST(JordanWigner, MajoranasAndEdgeVertex) {
  EXPECT_EQ(jw_majorana(4, 2, false).str(), "+ZZXI");
  EXPECT_EQ(jw_majorana(4, 0, true).str(), "+YIII");
  const auto [e, v] = jw_edge_vertex(4, 1, 3);
  EXPECT_EQ(v.str(), "+IIIZ");
  EXPECT_TRUE(e.is_hermitian());
  EXPECT_EQ(e.weight(), 3u);
}

TEST(JordanWigner, SnakeOrder) {
  const auto order = ModeOrder::snake(SquareLattice(3, 2));
  EXPECT_EQ(order.mode({0, 0}), 0u);
  EXPECT_EQ(order.mode({2, 0}), 2u);
  EXPECT_EQ(order.mode({2, 1}), 3u);
  EXPECT_EQ(order.mode({0, 1}), 5u);
}

TEST(JordanWigner, SnakeHoppingWeightGrowsWithWidth) {
  for (int l = 2; l <= 8; ++l) {
    const auto s = weight_stats(SquareLattice(l, l), EncodingKind::JordanWigner);
    EXPECT_EQ(s.max_hopping_weight, static_cast<std::size_t>(2 * l)) << l;
    EXPECT_EQ(s.max_coulomb_weight, 2u);
    EXPECT_EQ(s.qubit_total, static_cast<std::size_t>(l * l));
  }
}
