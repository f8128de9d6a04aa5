#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cfq/encoder.hpp"
#include "cfq/hamiltonian.hpp"
#include "cfq/hex_encoder.hpp"
#include "cfq/lattice.hpp"
#include "cfq/pauli.hpp"
#include "cfq/stabilizer.hpp"

namespace cfq {

/// Dense matrix in the computational basis, qubit 0 as the most significant
/// bit (leftmost Kronecker factor).
using DenseOperator = Eigen::MatrixXcd;

constexpr std::size_t kMaxOracleQubits = 14;
constexpr std::size_t kMaxOracleModes = 10;

class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

DenseOperator to_matrix(const PauliString& p);
DenseOperator to_matrix(const PauliSum& s);

/// Left-multiplies `m` by the Pauli string in place, O(dim * cols).
void apply_left(const PauliString& p, DenseOperator& m);

/// prod_g (1 + g) / 2.
DenseOperator codespace_projector(const StabilizerGroup& stabs);
/// Number of eigenvalues above 1/2.
std::size_t projector_rank(const DenseOperator& projector);

/// Orthonormal basis of the joint +1 eigenspace, built column by column as
/// normalised group averages of computational basis states.
DenseOperator codespace_basis(const StabilizerGroup& stabs);

enum class Sector { Full, EvenParity, Doubled };

std::string to_string(Sector s);

struct SpectrumReport {
  std::vector<double> eigenvalues;                         // ascending
  std::vector<std::pair<double, std::size_t>> multiplicities;  // clustered
  Sector sector = Sector::Full;
};

/// Clusters sorted eigenvalues that lie within `tol` of their neighbour.
std::vector<std::pair<double, std::size_t>> cluster(const std::vector<double>& sorted,
                                                    double tol = 1e-8);

/// Hermitian eigenvalues, exploiting the block structure of qubits on which
/// every term is I or Z. Exact dense diagonalisation of each block.
std::vector<double> pauli_sum_eigenvalues(const PauliSum& h);

/// Jordan-Wigner reference: H assembled from products of ladder operators,
/// diagonalised on all 2^M states (Full) or on even occupation (EvenParity).
SpectrumReport fermionic_spectrum(const FermionicHamiltonian& ham, const Graph& graph,
                                  Sector sector);

/// Compact-compiled H restricted to the codespace. The sector tag records
/// how the codespace dimension relates to 2^M.
SpectrumReport encoded_spectrum(const FermionicHamiltonian& ham, const EncodedOperators& enc);

/// Largest pairwise gap after sorting; +inf when the lengths differ.
double spectrum_discrepancy(const std::vector<double>& a, const std::vector<double>& b);
/// Each value repeated twice.
std::vector<double> doubled(const std::vector<double>& values);

/// Encoded vs fermionic spectrum, choosing the reference sector from the
/// codespace dimension. Returns the discrepancy.
struct SpectrumComparison {
  SpectrumReport encoded;
  SpectrumReport reference;
  double max_discrepancy;
};
SpectrumComparison compare_spectra(const FermionicHamiltonian& ham, const EncodedOperators& enc);

// --- Relation suite ---------------------------------------------------------

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;  // first few failures

  void record(bool ok, const std::string& what);
};

struct RelationReport {
  std::string lattice;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Symplectic checks only, so no size limit: local (anti)commutation of all
/// edge/vertex pairs, face loops, stabilizer consistency and the per-case
/// Majorana, hole and logical-qubit contracts.
RelationReport verify_relations(const SquareLattice& lattice, const SignConvention& signs = {});
RelationReport verify_relations(const HexLattice& lattice);
/// Checks shared by every lattice kind.
void verify_common(const EncodedOperators& enc, RelationReport& report);

struct GroundspaceReport {
  double ground_energy;
  std::size_t ground_dimension;
  std::size_t codespace_rank;
  bool passed;
};

/// H_map = -sum(generators); its ground space must be the codespace.
GroundspaceReport groundspace_check(const EncodedOperators& enc, double tol = 1e-10);

}  // namespace cfq
