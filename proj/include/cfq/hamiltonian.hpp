#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfq/encoder.hpp"
#include "cfq/lattice.hpp"
#include "cfq/pauli.hpp"

namespace cfq {

class HamiltonianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TermKind { Hopping, Coulomb, Number };

std::string to_string(TermKind k);
TermKind term_kind_from_string(const std::string& s);

/// hopping: coeff * (a_i^dag a_j + a_j^dag a_i)
/// coulomb: coeff * n_i n_j
/// number:  coeff * n_i  (j unused)
struct FermionicTerm {
  TermKind kind;
  Vertex i;
  Vertex j;
  double coeff;

  static FermionicTerm hopping(Vertex i, Vertex j, double t) { return {TermKind::Hopping, i, j, t}; }
  static FermionicTerm coulomb(Vertex i, Vertex j, double u) { return {TermKind::Coulomb, i, j, u}; }
  static FermionicTerm number(Vertex i, double mu) { return {TermKind::Number, i, i, mu}; }
};

struct FermionicHamiltonian {
  std::vector<FermionicTerm> terms;

  /// Throws HamiltonianError unless every site is in the graph, two-site
  /// terms act on nearest neighbours and coefficients are finite.
  void validate(const Graph& graph) const;
};

/// Nearest-neighbour hopping t and density-density U on every edge.
FermionicHamiltonian hubbard(const Graph& graph, double t, double u);
/// Hubbard-type model with uniform random t, U in [-1, 1] per edge and a
/// chemical potential in [-1, 1] per site.
FermionicHamiltonian random_hubbard(const Graph& graph, std::uint64_t seed);

enum class EncodingKind { Compact, JordanWigner };

std::string to_string(EncodingKind k);
EncodingKind encoding_from_string(const std::string& s);

/// number:  mu (1 - V_i) / 2
/// coulomb: U (1 - V_i)(1 - V_j) / 4
/// hopping: -t (i/2) (E_ij V_j + V_i E_ij)
PauliSum compile_term(const EncodedOperators& enc, const FermionicTerm& term);

struct CompiledHamiltonian {
  EncodingKind encoding;
  PauliSum pauli_sum;
  QubitLayout layout;
};

CompiledHamiltonian compile_hamiltonian(const FermionicHamiltonian& ham,
                                        const EncodedOperators& enc, EncodingKind encoding);

struct WeightStats {
  EncodingKind encoding;
  std::size_t modes;
  std::size_t qubit_total;
  double qubit_to_mode_ratio;
  std::size_t max_hopping_weight;
  std::size_t max_coulomb_weight;
  std::string encoded_space;  // "Full", "Even" or "Full Plus Qubit"
};

WeightStats weight_stats(const EncodedOperators& enc, EncodingKind encoding,
                         std::string encoded_space);
/// Compact mapping or snake-ordered Jordan-Wigner on a square lattice.
WeightStats weight_stats(const SquareLattice& lattice, EncodingKind encoding);

}  // namespace cfq
