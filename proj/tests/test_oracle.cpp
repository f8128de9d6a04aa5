#include <gtest/gtest.h>

#include <random>

#include "cfq/oracle.hpp"
#include "support.hpp"

using namespace cfq;
using cfq::testing::Mat;

TEST(Oracle, ToMatrixMatchesKronecker) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = cfq::testing::random_pauli(rng, 1 + trial % 5);
    ASSERT_LE((to_matrix(p) - cfq::testing::kron_matrix(p)).norm(), 1e-12) << p.str();
    Mat m = Mat::Identity(to_matrix(p).rows(), 3);
    m.col(1).setConstant(0.5);
    Mat expect = to_matrix(p) * m;
    apply_left(p, m);
    ASSERT_LE((m - expect).norm(), 1e-12);
  }
}

TEST(Oracle, ProjectorRanks) {
  struct Row { int w, h, phase; std::size_t rank; };
  for (const Row& r : {Row{2, 2, 0, 32}, Row{2, 2, 1, 8}, Row{2, 3, 0, 64}, Row{3, 2, 1, 64}}) {
    const auto enc = encode(SquareLattice(r.w, r.h, r.phase));
    const Mat p = codespace_projector(enc.stabilizers);
    EXPECT_LE((p * p - p).norm(), 1e-12);
    EXPECT_LE((p - p.adjoint()).norm(), 1e-12);
    EXPECT_EQ(projector_rank(p), r.rank) << r.w << "x" << r.h << " phase " << r.phase;
  }
}

// Dense random projector: one block, so the blocked rank path sees no
// structure to exploit.
TEST(Oracle, ProjectorRankOfDenseProjector) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  Mat a(16, 5);
  for (Eigen::Index r = 0; r < 16; ++r)
    for (Eigen::Index c = 0; c < 5; ++c) a(r, c) = {g(rng), g(rng)};
  const Mat q = Eigen::HouseholderQR<Mat>(a).householderQ() * Mat::Identity(16, 5);
  EXPECT_EQ(projector_rank(q * q.adjoint()), 5u);
  EXPECT_EQ(projector_rank(Mat::Zero(4, 4)), 0u);
}

TEST(Oracle, CodespaceBasisSpansProjector) {
  for (int phase : {0, 1}) {
    const auto enc = encode(SquareLattice(3, 2, phase));
    const Mat q = codespace_basis(enc.stabilizers);
    const Mat p = codespace_projector(enc.stabilizers);
    EXPECT_LE((q.adjoint() * q - Mat::Identity(q.cols(), q.cols())).norm(), 1e-10);
    EXPECT_LE((q * q.adjoint() - p).norm(), 1e-10);
    for (const auto& g : enc.stabilizers.generators()) {
      EXPECT_LE((to_matrix(g) * q - q).norm(), 1e-10);
    }
  }
}

TEST(Oracle, SizeCap) {
  const auto enc = encode(SquareLattice(4, 3, 0));  // 12 modes, 15 qubits
  ASSERT_GT(enc.num_qubits(), kMaxOracleQubits);
  EXPECT_THROW(codespace_projector(enc.stabilizers), SizeCapError);
  EXPECT_THROW(groundspace_check(enc), SizeCapError);
  EXPECT_THROW(encoded_spectrum(hubbard(enc.graph, 1, 2), enc), SizeCapError);
}

TEST(Oracle, PauliSumEigenvaluesMatchDense) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 30; ++trial) {
    PauliSum h(5);
    for (int k = 0; k < 6; ++k) {
      auto p = cfq::testing::random_pauli(rng, 5);
      p.set_phase(0);
      h.add(p, g(rng));
    }
    // A Z-only block structure on some trials.
    if (trial % 2) h = simplify(h + PauliSum(PauliString::parse("ZZIIZ"), 0.3));
    h = simplify(h);
    const auto expect = cfq::testing::eigenvalues(cfq::testing::kron_matrix(h));
    EXPECT_LE(cfq::testing::max_gap(pauli_sum_eigenvalues(h), expect), 1e-10);
  }
}

TEST(Oracle, FermionicSpectrumAgreesWithSignCounting) {
  const SquareLattice l(3, 2);
  const Graph g = l.graph();
  for (std::uint64_t seed : {1u, 2u}) {
    const auto ham = random_hubbard(g, seed);
    const Mat h = cfq::testing::fock_hamiltonian(ham, 6, [&](const Vertex& v) { return g.index_of(v); });
    const auto full = fermionic_spectrum(ham, g, Sector::Full);
    EXPECT_LE(cfq::testing::max_gap(full.eigenvalues, cfq::testing::eigenvalues(h)), 1e-10);
    const auto even = fermionic_spectrum(ham, g, Sector::EvenParity);
    EXPECT_EQ(even.eigenvalues.size(), 32u);
    EXPECT_LE(cfq::testing::max_gap(even.eigenvalues, cfq::testing::eigenvalues(cfq::testing::even_block(h))),
              1e-10);
  }
}

TEST(Oracle, EncodedSpectrumPerCase) {
  struct Row { int w, h, phase; Sector sector; };
  for (const Row& r : {Row{2, 2, 0, Sector::Doubled}, Row{2, 2, 1, Sector::EvenParity},
                       Row{2, 3, 0, Sector::Full}, Row{3, 3, 0, Sector::Full}}) {
    const SquareLattice l(r.w, r.h, r.phase);
    const auto enc = encode(l);
    const auto ham = random_hubbard(enc.graph, 17);
    const auto m = enc.num_modes();
    const Mat h = cfq::testing::fock_hamiltonian(ham, m, [&](const Vertex& v) { return enc.graph.index_of(v); });
    std::vector<double> expect;
    if (r.sector == Sector::EvenParity) {
      expect = cfq::testing::eigenvalues(cfq::testing::even_block(h));
    } else {
      expect = cfq::testing::eigenvalues(h);
      if (r.sector == Sector::Doubled) expect = doubled(expect);
    }
    const auto got = encoded_spectrum(ham, enc);
    EXPECT_EQ(got.sector, r.sector);
    EXPECT_LE(cfq::testing::max_gap(got.eigenvalues, expect), 1e-10) << r.w << "x" << r.h;
    const auto cmp = compare_spectra(ham, enc);
    EXPECT_LE(cmp.max_discrepancy, 1e-10);
  }
}

TEST(Oracle, GroundSpaceIsCodespace) {
  const auto enc22 = encode(SquareLattice(2, 2, 1));
  const auto g22 = groundspace_check(enc22);
  EXPECT_TRUE(g22.passed);
  EXPECT_EQ(g22.ground_dimension, 8u);

  const auto enc33 = encode(SquareLattice(3, 3, 0));
  const auto g33 = groundspace_check(enc33);
  EXPECT_TRUE(g33.passed);
  EXPECT_NEAR(g33.ground_energy, -static_cast<double>(enc33.stabilizers.generators().size()), 1e-10);
  EXPECT_EQ(g33.codespace_rank, 512u);
}

TEST(Oracle, DiscrepancyHelpers) {
  EXPECT_EQ(spectrum_discrepancy({1, 2}, {2, 1.5}), 0.5);
  EXPECT_TRUE(std::isinf(spectrum_discrepancy({1}, {1, 1})));
  EXPECT_EQ(doubled({1, 3}), (std::vector<double>{1, 1, 3, 3}));
  const auto c = cluster({0, 1e-12, 1, 2, 2});
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].second, 2u);
  EXPECT_EQ(c[2].second, 2u);
}
