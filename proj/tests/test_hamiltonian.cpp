#include <gtest/gtest.h>

#include "cfq/hamiltonian.hpp"
#include "cfq/jordan_wigner.hpp"
#include "support.hpp"

using namespace cfq;

TEST(Compiler, HoppingGivesTwoTermsOfHalfT) {
  const SquareLattice l(3, 3);
  const auto enc = encode(l);
  for (const auto& e : enc.graph.edges()) {
    const PauliSum s = compile_term(enc, FermionicTerm::hopping(e.tail, e.head, 0.7));
    ASSERT_EQ(s.size(), 2u) << to_string(e);
    for (const auto& t : s.terms()) {
      EXPECT_NEAR(std::abs(t.coeff.real()), 0.35, 1e-15);
      EXPECT_NEAR(t.coeff.imag(), 0.0, 1e-15);
      EXPECT_LE(t.word.weight(), 3u);
    }
  }
}

TEST(Compiler, ReversedHoppingIsTheSameOperator) {
  const auto enc = encode(SquareLattice(3, 2));
  for (const auto& e : enc.graph.edges()) {
    const auto a = simplify(compile_term(enc, FermionicTerm::hopping(e.tail, e.head, 1.3)));
    const auto b = simplify(compile_term(enc, FermionicTerm::hopping(e.head, e.tail, 1.3)));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a.terms()[k].word, b.terms()[k].word);
      EXPECT_NEAR(std::abs(a.terms()[k].coeff - b.terms()[k].coeff), 0.0, 1e-15);
    }
  }
}

TEST(Compiler, CoulombAndNumber) {
  const auto enc = encode(SquareLattice(2, 2, 1));
  const auto c = simplify(compile_term(enc, FermionicTerm::coulomb({0, 0}, {1, 0}, 2.0)));
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c.max_weight(), 2u);
  for (const auto& t : c.terms()) EXPECT_NEAR(std::abs(t.coeff.real()), 0.5, 1e-15);
  const auto n = simplify(compile_term(enc, FermionicTerm::number({1, 1}, -1.0)));
  ASSERT_EQ(n.size(), 2u);
}

TEST(Compiler, RejectsBadTerms) {
  const auto enc = encode(SquareLattice(3, 3));
  EXPECT_THROW(compile_term(enc, FermionicTerm::hopping({0, 0}, {1, 1}, 1.0)), HamiltonianError);
  EXPECT_THROW(compile_term(enc, FermionicTerm::hopping({0, 0}, {9, 9}, 1.0)), HamiltonianError);
  EXPECT_THROW(compile_term(enc, FermionicTerm::number({0, 0}, std::nan(""))), HamiltonianError);
  EXPECT_THROW(term_kind_from_string("pairing"), HamiltonianError);
  EXPECT_THROW(encoding_from_string("bk"), std::invalid_argument);
}

TEST(CompilerProperty, CompiledHamiltoniansAreHermitian) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SquareLattice l(2 + seed % 4, 2 + (seed / 4) % 4, seed % 2);
    const auto enc = encode(l);
    const auto ham = random_hubbard(enc.graph, seed);
    const auto compiled = compile_hamiltonian(ham, enc, EncodingKind::Compact);
    EXPECT_TRUE(compiled.pauli_sum.is_hermitian(1e-12));
    const auto jw = compile_hamiltonian(ham, jw_encode(l), EncodingKind::JordanWigner);
    EXPECT_TRUE(jw.pauli_sum.is_hermitian(1e-12));
  }
}

// JW compilation reproduces the sign-counted Fock matrix term by term.
TEST(Compiler, JordanWignerMatchesFockMatrix) {
  const SquareLattice l(3, 2);
  const auto enc = jw_encode(l.graph(), ModeOrder::row_major(l.graph()));
  const auto ham = random_hubbard(enc.graph, 5);
  const auto compiled = compile_hamiltonian(ham, enc, EncodingKind::JordanWigner);
  const auto fock = cfq::testing::fock_hamiltonian(
      ham, 6, [&](const Vertex& v) { return enc.graph.index_of(v); });
  EXPECT_LE((cfq::testing::kron_matrix(compiled.pauli_sum) - fock).norm(), 1e-12);
}

TEST(Stats, CompactTableValues) {
  for (int w = 2; w <= 8; ++w) {
    for (int h = 2; h <= 8; ++h) {
      for (int phase : {0, 1}) {
        const auto s = weight_stats(SquareLattice(w, h, phase), EncodingKind::Compact);
        // A lone even face leaves no face qubit, so hopping stays at weight 2.
        const bool has_odd_face = SquareLattice(w, h, phase).classify().odd_faces > 0;
        EXPECT_EQ(s.max_hopping_weight, has_odd_face ? 3u : 2u) << w << "x" << h << " phase " << phase;
        EXPECT_EQ(s.max_coulomb_weight, 2u);
        EXPECT_LT(2 * s.qubit_total, 3 * s.modes);
      }
    }
  }
  EXPECT_EQ(weight_stats(SquareLattice(3, 3, 0), EncodingKind::Compact).encoded_space, "Full");
  EXPECT_EQ(weight_stats(SquareLattice(4, 4, 1), EncodingKind::Compact).encoded_space, "Even");
  EXPECT_EQ(weight_stats(SquareLattice(4, 4, 0), EncodingKind::Compact).encoded_space,
            "Full Plus Qubit");
}
