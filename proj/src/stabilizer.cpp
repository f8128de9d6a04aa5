#include "cfq/stabilizer.hpp"

#include <bit>

namespace cfq {

namespace {

bool test_bit(const std::vector<std::uint64_t>& v, std::size_t i) {
  return (v[i / 64] >> (i % 64)) & 1u;
}

void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

std::optional<std::size_t> lowest_bit(const std::vector<std::uint64_t>& v) {
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (v[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
  }
  return std::nullopt;
}

}  // namespace

StabilizerGroup::StabilizerGroup(std::size_t n_qubits, std::vector<PauliString> generators)
    : n_(n_qubits), generators_(std::move(generators)) {
  const std::size_t combo_words = (generators_.size() + 63) / 64;
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const auto& g = generators_[k];
    if (g.num_qubits() != n_) throw DimensionError("stabilizer generator size mismatch");
    if (!g.is_hermitian()) throw StabilizerError("generator " + g.str() + " is not hermitian");
    if (g.is_identity_word()) throw StabilizerError("generator " + g.str() + " is trivial");
    for (std::size_t j = 0; j < k; ++j) {
      if (!commutes(g, generators_[j])) {
        throw StabilizerError("generators " + generators_[j].str() + " and " + g.str() +
                              " do not commute");
      }
    }
    Row row{symplectic(g), std::vector<std::uint64_t>(combo_words, 0), 0};
    row.combo[k / 64] |= std::uint64_t{1} << (k % 64);
    for (const auto& r : rows_) {
      if (test_bit(row.bits, r.pivot)) {
        xor_into(row.bits, r.bits);
        xor_into(row.combo, r.combo);
      }
    }
    if (auto pivot = lowest_bit(row.bits)) {
      row.pivot = *pivot;
      rows_.push_back(std::move(row));
    } else {
      // Dependent generator: its dependency must multiply to +I.
      std::vector<std::size_t> subset;
      for (std::size_t j = 0; j <= k; ++j) {
        if (test_bit(row.combo, j)) subset.push_back(j);
      }
      if (!product_of(subset).is_identity()) {
        throw StabilizerError("generators produce -I; the codespace is empty");
      }
    }
  }
}

std::vector<std::uint64_t> StabilizerGroup::symplectic(const PauliString& p) const {
  const auto xs = p.x_words();
  const auto zs = p.z_words();
  const std::size_t words = (2 * n_ + 63) / 64;
  std::vector<std::uint64_t> out(words, 0);
  for (std::size_t q = 0; q < n_; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (q % 64);
    if (xs[q / 64] & bit) out[q / 64] |= bit;
    if (zs[q / 64] & bit) out[(n_ + q) / 64] |= std::uint64_t{1} << ((n_ + q) % 64);
  }
  return out;
}

std::optional<std::vector<std::size_t>> StabilizerGroup::decompose_word(
    const PauliString& p) const {
  if (p.num_qubits() != n_) throw DimensionError("stabilizer query size mismatch");
  auto bits = symplectic(p);
  std::vector<std::uint64_t> combo((generators_.size() + 63) / 64, 0);
  for (const auto& r : rows_) {
    if (test_bit(bits, r.pivot)) {
      xor_into(bits, r.bits);
      xor_into(combo, r.combo);
    }
  }
  if (lowest_bit(bits)) return std::nullopt;
  std::vector<std::size_t> subset;
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    if (test_bit(combo, j)) subset.push_back(j);
  }
  return subset;
}

PauliString StabilizerGroup::product_of(const std::vector<std::size_t>& indices) const {
  PauliString out(n_);
  for (std::size_t j : indices) out *= generators_.at(j);
  return out;
}

bool StabilizerGroup::contains(const PauliString& p) const {
  auto subset = decompose_word(p);
  return subset && product_of(*subset) == p;
}

bool StabilizerGroup::contains_up_to_phase(const PauliString& p) const {
  return decompose_word(p).has_value();
}

bool StabilizerGroup::commutes_with(const PauliString& p) const {
  for (const auto& g : generators_) {
    if (!commutes(g, p)) return false;
  }
  return true;
}

}  // namespace cfq
