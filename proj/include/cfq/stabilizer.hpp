#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cfq/pauli.hpp"

namespace cfq {

class StabilizerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Abelian group generated by commuting, hermitian Pauli strings.
///
/// Membership is exact: a string is a member only if some product of
/// generators reproduces it including its sign.
class StabilizerGroup {
 public:
  StabilizerGroup() = default;
  /// Throws StabilizerError if generators fail to commute, are not hermitian,
  /// are the identity, or generate -I.
  StabilizerGroup(std::size_t n_qubits, std::vector<PauliString> generators);

  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliString>& generators() const { return generators_; }
  /// Number of independent generators; the group has 2^n_nontrivial elements.
  std::size_t n_nontrivial() const { return rows_.size(); }
  bool independent() const { return rows_.size() == generators_.size(); }

  /// Generator indices whose product has the same letters as p.
  std::optional<std::vector<std::size_t>> decompose_word(const PauliString& p) const;
  PauliString product_of(const std::vector<std::size_t>& indices) const;

  bool contains(const PauliString& p) const;
  bool contains_up_to_phase(const PauliString& p) const;
  bool commutes_with(const PauliString& p) const;

 private:
  struct Row {
    std::vector<std::uint64_t> bits;   // x words then z words
    std::vector<std::uint64_t> combo;  // generator subset
    std::size_t pivot;
  };

  std::vector<std::uint64_t> symplectic(const PauliString& p) const;

  std::size_t n_ = 0;
  std::vector<PauliString> generators_;
  std::vector<Row> rows_;
};

}  // namespace cfq
