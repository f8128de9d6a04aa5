#include "cfq/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

namespace cfq {

namespace {

constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void require_same_size(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("Pauli size mismatch: " + std::to_string(a.num_qubits()) +
                         " vs " + std::to_string(b.num_qubits()));
  }
}

const std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::size_t n_qubits)
    : n_(n_qubits), x_(words_for(n_qubits), 0), z_(words_for(n_qubits), 0) {}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, Pauli p) {
  PauliString out(n_qubits);
  out.set(qubit, p);
  return out;
}

PauliString PauliString::parse(std::string_view text) {
  int phase = 0;
  if (text.starts_with("+i")) {
    phase = 1;
    text.remove_prefix(2);
  } else if (text.starts_with("-i")) {
    phase = 3;
    text.remove_prefix(2);
  } else if (text.starts_with("i")) {
    phase = 1;
    text.remove_prefix(1);
  } else if (text.starts_with("+")) {
    text.remove_prefix(1);
  } else if (text.starts_with("-")) {
    phase = 2;
    text.remove_prefix(1);
  }
  PauliString out(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I': case '_': break;
      case 'X': out.set(q, Pauli::X); break;
      case 'Y': out.set(q, Pauli::Y); break;
      case 'Z': out.set(q, Pauli::Z); break;
      default:
        throw std::invalid_argument("bad Pauli letter '" + std::string(1, text[q]) + "'");
    }
  }
  out.phase_ = phase;
  return out;
}

Pauli PauliString::at(std::size_t qubit) const {
  if (qubit >= n_) throw std::out_of_range("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (qubit % 64);
  const std::size_t w = qubit / 64;
  const unsigned x = (x_[w] & bit) ? 1u : 0u;
  const unsigned z = (z_[w] & bit) ? 1u : 0u;
  return static_cast<Pauli>(x | (z << 1));
}

void PauliString::set(std::size_t qubit, Pauli p) {
  if (qubit >= n_) throw std::out_of_range("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (qubit % 64);
  const std::size_t w = qubit / 64;
  const auto v = static_cast<unsigned>(p);
  x_[w] = (v & 1u) ? (x_[w] | bit) : (x_[w] & ~bit);
  z_[w] = (v & 2u) ? (z_[w] | bit) : (z_[w] & ~bit);
}

PauliString& PauliString::mul_phase(int k) {
  set_phase(phase_ + k);
  return *this;
}

bool PauliString::is_identity_word() const {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] | z_[w]) return false;
  }
  return true;
}

std::size_t PauliString::weight() const {
  std::size_t count = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) count += std::popcount(x_[w] | z_[w]);
  return count;
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n_; ++q) {
    if (at(q) != Pauli::I) out.push_back(q);
  }
  return out;
}

PauliString PauliString::word() const {
  PauliString out = *this;
  out.phase_ = 0;
  return out;
}

// Letters are hermitian and self-inverse, so only the phase changes.
PauliString PauliString::inverse() const {
  PauliString out = *this;
  out.set_phase(-phase_);
  return out;
}

PauliString PauliString::adjoint() const { return inverse(); }

PauliString PauliString::operator-() const {
  PauliString out = *this;
  out.mul_phase(2);
  return out;
}

std::string PauliString::letters() const {
  std::string s(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) s[q] = to_char(at(q));
  return s;
}

std::string PauliString::str() const {
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  return kPrefix[phase_] + letters();
}

std::uint64_t PauliString::x_mask() const {
  if (n_ > 63) throw DimensionError("basis masks need at most 63 qubits");
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    if (static_cast<unsigned>(at(q)) & 1u) m |= std::uint64_t{1} << (n_ - 1 - q);
  }
  return m;
}

std::uint64_t PauliString::z_mask() const {
  if (n_ > 63) throw DimensionError("basis masks need at most 63 qubits");
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    if (static_cast<unsigned>(at(q)) & 2u) m |= std::uint64_t{1} << (n_ - 1 - q);
  }
  return m;
}

// Writing sigma(x,z) = i^(xz) X^x Z^z and commuting Z^z1 past X^x2 gives the
// per-qubit exponent  x1 z1 + x2 z2 + 2 z1 x2 - (x1^x2)(z1^z2)  (mod 4).
PauliString& PauliString::operator*=(const PauliString& rhs) {
  require_same_size(*this, rhs);
  long long e = phase_ + rhs.phase_;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    const std::uint64_t x1 = x_[w], z1 = z_[w], x2 = rhs.x_[w], z2 = rhs.z_[w];
    e += std::popcount(x1 & z1);
    e += std::popcount(x2 & z2);
    e += 2 * std::popcount(z1 & x2);
    e -= std::popcount((x1 ^ x2) & (z1 ^ z2));
    x_[w] = x1 ^ x2;
    z_[w] = z1 ^ z2;
  }
  set_phase(static_cast<int>(e % 4));
  return *this;
}

bool PauliString::same_word(const PauliString& other) const {
  return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

bool PauliString::word_less(const PauliString& a, const PauliString& b) {
  auto lex = [](const std::vector<std::uint64_t>& u,
                const std::vector<std::uint64_t>& v) -> int {
    for (std::size_t w = 0; w < u.size(); ++w) {
      const std::uint64_t d = u[w] ^ v[w];
      if (d) {
        const std::uint64_t low = d & (~d + 1);
        return (u[w] & low) ? 1 : -1;
      }
    }
    return 0;
  };
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (int c = lex(a.z_, b.z_)) return c < 0;
  return lex(a.x_, b.x_) < 0;
}

PauliString multiply(const PauliString& a, const PauliString& b) { return a * b; }

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
  unsigned parity = 0;
  for (std::size_t w = 0; w < ax.size(); ++w) {
    parity ^= std::popcount((ax[w] & bz[w]) ^ (az[w] & bx[w])) & 1u;
  }
  return parity == 0;
}

// ---------------------------------------------------------------------------

PauliSum::PauliSum(const PauliString& p, std::complex<double> coeff)
    : n_(p.num_qubits()) {
  add(p, coeff);
}

PauliSum PauliSum::identity(std::size_t n_qubits, std::complex<double> c) {
  return PauliSum(PauliString(n_qubits), c);
}

void PauliSum::add(const PauliString& p, std::complex<double> coeff) {
  if (terms_.empty() && n_ == 0) n_ = p.num_qubits();
  if (p.num_qubits() != n_) throw DimensionError("PauliSum term size mismatch");
  terms_.push_back({coeff * kIPow[p.phase()], p.word()});
}

PauliSum& PauliSum::operator+=(const PauliSum& rhs) {
  for (const auto& t : rhs.terms_) add(t.word, t.coeff);
  if (n_ == 0) n_ = rhs.n_;
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& rhs) {
  for (const auto& t : rhs.terms_) add(t.word, -t.coeff);
  if (n_ == 0) n_ = rhs.n_;
  return *this;
}

PauliSum& PauliSum::operator*=(std::complex<double> c) {
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_ != b.n_) throw DimensionError("PauliSum size mismatch");
  PauliSum out(a.n_);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) out.add(ta.word * tb.word, ta.coeff * tb.coeff);
  }
  return simplify(out);
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_);
  for (const auto& t : terms_) out.add(t.word, std::conj(t.coeff));
  return out;
}

std::size_t PauliSum::max_weight() const {
  std::size_t w = 0;
  for (const auto& t : terms_) w = std::max(w, t.word.weight());
  return w;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& t : simplify(*this).terms_) {
    if (std::abs(t.coeff.imag()) > tol) return false;
  }
  return true;
}

PauliSum simplify(const PauliSum& s, double eps) {
  struct Less {
    bool operator()(const PauliString& a, const PauliString& b) const {
      return PauliString::word_less(a, b);
    }
  };
  std::map<PauliString, std::complex<double>, Less> merged;
  for (const auto& t : s.terms()) merged[t.word] += t.coeff;
  PauliSum out(s.num_qubits());
  for (const auto& [w, c] : merged) {
    if (std::abs(c) >= eps) out.add(w, c);
  }
  return out;
}

}  // namespace cfq
