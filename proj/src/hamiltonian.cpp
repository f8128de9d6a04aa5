#include "cfq/hamiltonian.hpp"

#include <cmath>
#include <random>

#include "cfq/jordan_wigner.hpp"

namespace cfq {

std::string to_string(TermKind k) {
  switch (k) {
    case TermKind::Hopping: return "hopping";
    case TermKind::Coulomb: return "coulomb";
    case TermKind::Number: return "number";
  }
  return "?";
}

TermKind term_kind_from_string(const std::string& s) {
  if (s == "hopping") return TermKind::Hopping;
  if (s == "coulomb") return TermKind::Coulomb;
  if (s == "number") return TermKind::Number;
  throw HamiltonianError("unknown term kind '" + s + "'");
}

std::string to_string(EncodingKind k) {
  return k == EncodingKind::Compact ? "compact" : "jw";
}

EncodingKind encoding_from_string(const std::string& s) {
  if (s == "compact") return EncodingKind::Compact;
  if (s == "jw") return EncodingKind::JordanWigner;
  throw std::invalid_argument("unknown encoding '" + s + "'");
}

void FermionicHamiltonian::validate(const Graph& graph) const {
  for (const auto& t : terms) {
    if (!std::isfinite(t.coeff)) throw HamiltonianError("non-finite coefficient");
    if (!graph.contains(t.i)) throw HamiltonianError("site " + to_string(t.i) + " not in lattice");
    if (t.kind == TermKind::Number) continue;
    if (!graph.contains(t.j)) throw HamiltonianError("site " + to_string(t.j) + " not in lattice");
    if (!graph.adjacent(t.i, t.j)) {
      throw HamiltonianError(to_string(t.kind) + " term " + to_string(t.i) + "-" +
                             to_string(t.j) + " is not nearest-neighbour");
    }
  }
}

FermionicHamiltonian hubbard(const Graph& graph, double t, double u) {
  FermionicHamiltonian ham;
  for (const auto& e : graph.edges()) {
    ham.terms.push_back(FermionicTerm::hopping(e.tail, e.head, t));
    ham.terms.push_back(FermionicTerm::coulomb(e.tail, e.head, u));
  }
  return ham;
}

FermionicHamiltonian random_hubbard(const Graph& graph, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  FermionicHamiltonian ham;
  for (const auto& e : graph.edges()) {
    ham.terms.push_back(FermionicTerm::hopping(e.tail, e.head, coeff(rng)));
    ham.terms.push_back(FermionicTerm::coulomb(e.tail, e.head, coeff(rng)));
  }
  for (const auto& v : graph.vertices()) ham.terms.push_back(FermionicTerm::number(v, coeff(rng)));
  return ham;
}

namespace {

PauliSum number_operator(const EncodedOperators& enc, const Vertex& v) {
  PauliSum n = PauliSum::identity(enc.num_qubits(), 0.5);
  n.add(enc.vertex(v), -0.5);
  return n;
}

}  // namespace

PauliSum compile_term(const EncodedOperators& enc, const FermionicTerm& term) {
  FermionicHamiltonian{{term}}.validate(enc.graph);
  switch (term.kind) {
    case TermKind::Number:
      return simplify(number_operator(enc, term.i) * term.coeff);
    case TermKind::Coulomb:
      return simplify(number_operator(enc, term.i) * number_operator(enc, term.j) *
                      term.coeff);
    case TermKind::Hopping: {
      const PauliString e = enc.edge(term.i, term.j);
      PauliSum sum(enc.num_qubits());
      sum.add(e * enc.vertex(term.j));
      sum.add(enc.vertex(term.i) * e);
      return simplify(sum * std::complex<double>(0.0, -0.5 * term.coeff));
    }
  }
  throw HamiltonianError("unknown term kind");
}

CompiledHamiltonian compile_hamiltonian(const FermionicHamiltonian& ham,
                                        const EncodedOperators& enc, EncodingKind encoding) {
  ham.validate(enc.graph);
  PauliSum total(enc.num_qubits());
  for (const auto& t : ham.terms) total += compile_term(enc, t);
  return {encoding, simplify(total), enc.layout};
}

WeightStats weight_stats(const EncodedOperators& enc, EncodingKind encoding,
                         std::string encoded_space) {
  WeightStats s{encoding, enc.num_modes(), enc.num_qubits(), 0.0, 0, 0,
                std::move(encoded_space)};
  s.qubit_to_mode_ratio = static_cast<double>(s.qubit_total) / static_cast<double>(s.modes);
  for (const auto& e : enc.graph.edges()) {
    s.max_hopping_weight = std::max(
        s.max_hopping_weight, compile_term(enc, FermionicTerm::hopping(e.tail, e.head, 1.0)).max_weight());
    s.max_coulomb_weight = std::max(
        s.max_coulomb_weight, compile_term(enc, FermionicTerm::coulomb(e.tail, e.head, 1.0)).max_weight());
  }
  return s;
}

WeightStats weight_stats(const SquareLattice& lattice, EncodingKind encoding) {
  if (encoding == EncodingKind::JordanWigner) {
    return weight_stats(jw_encode(lattice), encoding, "Full");
  }
  std::string space = "Full";
  switch (lattice.classify().tag) {
    case LatticeCase::I: space = "Full"; break;
    case LatticeCase::II: space = "Even"; break;
    case LatticeCase::III: space = "Full Plus Qubit"; break;
  }
  return weight_stats(encode(lattice), encoding, space);
}

}  // namespace cfq
