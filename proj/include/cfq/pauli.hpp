#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cfq {

/// Raised when two operators over different qubit counts are combined.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Single-qubit letter. The enumerator value packs the symplectic pair as
/// (x | z << 1), so Y = X|Z.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char to_char(Pauli p);

/// Phase-tracked Pauli word over n qubits:
///
///   P = i^phase * sigma(x_0, z_0) (x) sigma(x_1, z_1) (x) ...
///
/// where sigma(1,0)=X, sigma(0,1)=Z and sigma(1,1)=Y are the hermitian
/// letters. With this convention P is hermitian iff phase is even.
/// Qubit q lives in bit (q % 64) of word (q / 64).
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);

  /// Parses "[+|-|+i|-i|i]WORD" with WORD over {I,X,Y,Z}, qubit 0 leftmost.
  static PauliString parse(std::string_view text);
  static PauliString single(std::size_t n_qubits, std::size_t qubit, Pauli p);

  std::size_t num_qubits() const { return n_; }
  int phase() const { return phase_; }
  Pauli at(std::size_t qubit) const;

  void set(std::size_t qubit, Pauli p);
  void set_phase(int phase) { phase_ = ((phase % 4) + 4) % 4; }
  PauliString& mul_phase(int k);  // multiply by i^k

  bool is_identity_word() const;
  /// Exactly +identity (phase included).
  bool is_identity() const { return phase_ == 0 && is_identity_word(); }
  bool is_hermitian() const { return phase_ % 2 == 0; }
  std::size_t weight() const;
  std::vector<std::size_t> support() const;

  /// Phase-stripped copy.
  PauliString word() const;
  PauliString inverse() const;
  PauliString adjoint() const;
  PauliString operator-() const;

  /// "+XIYZ" style; the prefix is one of "+", "-", "+i", "-i".
  std::string str() const;
  /// Letters only, no phase prefix.
  std::string letters() const;

  std::span<const std::uint64_t> x_words() const { return x_; }
  std::span<const std::uint64_t> z_words() const { return z_; }

  /// Letter masks as basis-index bit patterns, qubit 0 in the most
  /// significant position. Requires num_qubits() <= 63.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;

  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend bool operator==(const PauliString&, const PauliString&) = default;

  /// Same letters on every qubit, phases ignored.
  bool same_word(const PauliString& other) const;
  /// Canonical order: lexicographic on z bits, then x bits, by qubit index.
  static bool word_less(const PauliString& a, const PauliString& b);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  int phase_ = 0;
};

PauliString multiply(const PauliString& a, const PauliString& b);
/// Symplectic test; never builds a matrix.
bool commutes(const PauliString& a, const PauliString& b);
inline bool anticommutes(const PauliString& a, const PauliString& b) {
  return !commutes(a, b);
}
inline std::size_t weight(const PauliString& a) { return a.weight(); }

/// Complex-weighted sum of phase-free Pauli words.
class PauliSum {
 public:
  struct Term {
    std::complex<double> coeff;
    PauliString word;  // phase 0
  };

  static constexpr double kDefaultEpsilon = 1e-12;

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits) : n_(n_qubits) {}
  /// Single term; the phase of `p` is folded into the coefficient.
  PauliSum(const PauliString& p, std::complex<double> coeff = 1.0);

  static PauliSum identity(std::size_t n_qubits, std::complex<double> c = 1.0);

  std::size_t num_qubits() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const PauliString& p, std::complex<double> coeff = 1.0);
  PauliSum& operator+=(const PauliSum& rhs);
  PauliSum& operator-=(const PauliSum& rhs);
  PauliSum& operator*=(std::complex<double> c);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, std::complex<double> c) { return a *= c; }
  friend PauliSum operator*(std::complex<double> c, PauliSum a) { return a *= c; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  PauliSum adjoint() const;
  std::size_t max_weight() const;
  /// True when every coefficient is real to within `tol` (after simplify).
  bool is_hermitian(double tol = 1e-12) const;

 private:
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

/// Merges duplicate words, drops |coeff| < eps and sorts canonically.
PauliSum simplify(const PauliSum& s, double eps = PauliSum::kDefaultEpsilon);

}  // namespace cfq
