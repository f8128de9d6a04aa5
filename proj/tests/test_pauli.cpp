#include <gtest/gtest.h>

#include <random>

#include "cfq/pauli.hpp"
#include "support.hpp"

using namespace cfq;
using cfq::testing::kron_matrix;
using cfq::testing::random_pauli;

TEST(Pauli, ParseAndPrintRoundTrip) {
  for (const char* s : {"+XIYZ", "-ZZ", "+iY", "-iXXI", "+IIII"}) {
    EXPECT_EQ(PauliString::parse(s).str(), s);
  }
  EXPECT_EQ(PauliString::parse("XYZ").str(), "+XYZ");
  EXPECT_EQ(PauliString::parse("iX").str(), "+iX");
  EXPECT_EQ(PauliString::parse("X_Z").str(), "+XIZ");
  EXPECT_THROW(PauliString::parse("+XQ"), std::invalid_argument);
}

TEST(Pauli, SingleQubitTable) {
  auto p = [](const char* s) { return PauliString::parse(s); };
  EXPECT_EQ(p("X") * p("Y"), p("+iZ"));
  EXPECT_EQ(p("Y") * p("X"), p("-iZ"));
  EXPECT_EQ(p("Y") * p("Z"), p("+iX"));
  EXPECT_EQ(p("Z") * p("X"), p("+iY"));
  EXPECT_EQ(p("Y") * p("Y"), p("I"));
  EXPECT_TRUE(anticommutes(p("X"), p("Z")));
  EXPECT_TRUE(commutes(p("XX"), p("ZZ")));
}

TEST(Pauli, WeightSupportAndWideStrings) {
  PauliString p(130);
  p.set(0, Pauli::X);
  p.set(64, Pauli::Y);
  p.set(129, Pauli::Z);
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(p.support(), (std::vector<std::size_t>{0, 64, 129}));
  PauliString q(130);
  q.set(64, Pauli::Z);
  EXPECT_TRUE(anticommutes(p, q));
  EXPECT_EQ((p * p).str(), PauliString(130).str());
  EXPECT_THROW(p * PauliString(3), DimensionError);
}

// Products, phases, adjoints and commutation against explicit Kronecker
// matrices on random pairs.
TEST(PauliProperty, MatchesDenseMatrices) {
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = size(rng);
    const PauliString a = random_pauli(rng, n), b = random_pauli(rng, n);
    const auto ma = kron_matrix(a), mb = kron_matrix(b);
    ASSERT_LE((kron_matrix(a * b) - ma * mb).norm(), 1e-12) << a.str() << " " << b.str();
    ASSERT_LE((kron_matrix(a.adjoint()) - ma.adjoint()).norm(), 1e-12);
    ASSERT_LE((kron_matrix(a.inverse()) * ma - cfq::testing::Mat::Identity(ma.rows(), ma.cols())).norm(), 1e-12);
    const bool dense_commute = (ma * mb - mb * ma).norm() < 1e-9;
    ASSERT_EQ(commutes(a, b), dense_commute) << a.str() << " " << b.str();
    ASSERT_EQ(a.is_hermitian(), (ma - ma.adjoint()).norm() < 1e-9);
  }
}

TEST(PauliProperty, ProductIsAssociative) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_pauli(rng, 9), b = random_pauli(rng, 9), c = random_pauli(rng, 9);
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(PauliSum, SimplifyMergesAndDrops) {
  PauliSum s(2);
  s.add(PauliString::parse("XZ"), 0.5);
  s.add(PauliString::parse("-XZ"), 0.5);
  s.add(PauliString::parse("+iYY"), 2.0);
  s.add(PauliString::parse("ZI"), 1e-15);
  const PauliSum t = simplify(s);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.terms()[0].word.str(), "+YY");
  EXPECT_NEAR(t.terms()[0].coeff.imag(), 2.0, 1e-15);
  EXPECT_FALSE(t.is_hermitian());
}

TEST(PauliSumProperty, ProductMatchesDense) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    PauliSum a(3), b(3);
    for (int k = 0; k < 4; ++k) {
      a.add(random_pauli(rng, 3), {g(rng), g(rng)});
      b.add(random_pauli(rng, 3), {g(rng), g(rng)});
    }
    const auto prod = simplify(a * b);
    ASSERT_LE((kron_matrix(prod) - kron_matrix(a) * kron_matrix(b)).norm(), 1e-10);
    ASSERT_LE((kron_matrix(a.adjoint()) - kron_matrix(a).adjoint()).norm(), 1e-12);
    const auto herm = simplify(a + a.adjoint());
    ASSERT_TRUE(herm.is_hermitian(1e-12));
  }
}
