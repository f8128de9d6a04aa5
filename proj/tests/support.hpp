#pragma once

// Test-side oracles. Nothing here calls into the library's own matrix or
// spectrum code, so agreement with it means something.

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <random>
#include <string>
#include <vector>

#include "cfq/hamiltonian.hpp"
#include "cfq/pauli.hpp"

namespace cfq::testing {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

// Kronecker product of 2x2 letters, qubit 0 leftmost, times i^phase.
inline Mat kron_matrix(const PauliString& p) {
  Mat out = Mat::Identity(1, 1);
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    Mat s(2, 2);
    switch (p.at(q)) {
      case Pauli::I: s << 1, 0, 0, 1; break;
      case Pauli::X: s << 0, 1, 1, 0; break;
      case Pauli::Y: s << 0, cd(0, -1), cd(0, 1), 0; break;
      case Pauli::Z: s << 1, 0, 0, -1; break;
    }
    Mat next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * s;
    out = std::move(next);
  }
  static const cd powers[4] = {1.0, cd(0, 1), -1.0, cd(0, -1)};
  return powers[p.phase()] * out;
}

inline Mat kron_matrix(const PauliSum& s) {
  const Eigen::Index dim = Eigen::Index{1} << s.num_qubits();
  Mat out = Mat::Zero(dim, dim);
  for (const auto& t : s.terms()) out += t.coeff * kron_matrix(t.word);
  return out;
}

// Creation operator on an occupation-number basis of m modes. Mode k is bit
// (m-1-k) of the basis index; the sign counts occupied modes below k.
inline Mat fock_creation(std::size_t m, std::size_t k) {
  const std::size_t dim = std::size_t{1} << m;
  Mat a = Mat::Zero(dim, dim);
  const std::size_t bit = std::size_t{1} << (m - 1 - k);
  for (std::size_t s = 0; s < dim; ++s) {
    if (s & bit) continue;
    const std::size_t below = s >> (m - k);  // modes 0..k-1
    const double sign = std::popcount(below) % 2 ? -1.0 : 1.0;
    a(s | bit, s) = sign;
  }
  return a;
}

// a_k or a_k^dagger on basis state s: the new state and its sign, or
// nothing when the result vanishes.
inline std::optional<std::pair<std::size_t, double>> ladder(std::size_t m, std::size_t k,
                                                            bool dagger, std::size_t s) {
  const std::size_t bit = std::size_t{1} << (m - 1 - k);
  if (static_cast<bool>(s & bit) == dagger) return std::nullopt;
  const double sign = std::popcount(s >> (m - k)) % 2 ? -1.0 : 1.0;
  return std::pair{s ^ bit, sign};
}

// Fermionic H on the Fock space, modes indexed through `mode_of`. Built
// state by state from the ladder action above.
template <typename ModeOf>
Mat fock_hamiltonian(const FermionicHamiltonian& ham, std::size_t m, ModeOf mode_of) {
  const std::size_t dim = std::size_t{1} << m;
  Mat h = Mat::Zero(dim, dim);
  // coeff * a_i^dag a_j applied to every basis state.
  auto add_pair = [&](std::size_t i, std::size_t j, double coeff) {
    for (std::size_t s = 0; s < dim; ++s) {
      const auto a = ladder(m, j, false, s);
      if (!a) continue;
      const auto b = ladder(m, i, true, a->first);
      if (!b) continue;
      h(b->first, s) += coeff * a->second * b->second;
    }
  };
  for (const auto& t : ham.terms) {
    const std::size_t i = mode_of(t.i), j = mode_of(t.j);
    switch (t.kind) {
      case TermKind::Hopping:
        add_pair(i, j, t.coeff);
        add_pair(j, i, t.coeff);
        break;
      case TermKind::Coulomb:
        for (std::size_t s = 0; s < dim; ++s) {
          const bool ni = s >> (m - 1 - i) & 1, nj = s >> (m - 1 - j) & 1;
          if (ni && nj) h(s, s) += t.coeff;
        }
        break;
      case TermKind::Number: add_pair(i, i, t.coeff); break;
    }
  }
  return h;
}

inline std::vector<double> eigenvalues(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + h.rows());
  std::sort(out.begin(), out.end());
  return out;
}

inline Mat even_block(const Mat& h) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index s = 0; s < h.rows(); ++s)
    if (std::popcount(static_cast<std::uint64_t>(s)) % 2 == 0) keep.push_back(s);
  Mat out(keep.size(), keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) out(r, c) = h(keep[r], keep[c]);
  return out;
}

inline double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return 1e300;
  double worst = 0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

inline PauliString random_pauli(std::mt19937_64& rng, std::size_t n) {
  PauliString p(n);
  std::uniform_int_distribution<int> letter(0, 3), phase(0, 3);
  for (std::size_t q = 0; q < n; ++q) p.set(q, static_cast<Pauli>(letter(rng)));
  p.set_phase(phase(rng));
  return p;
}

}  // namespace cfq::testing
