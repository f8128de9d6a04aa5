#pragma once

#include <utility>
#include <vector>

#include "cfq/encoder.hpp"
#include "cfq/lattice.hpp"
#include "cfq/pauli.hpp"

namespace cfq {

/// Bijection from graph vertices to Jordan-Wigner modes 0..M-1.
class ModeOrder {
 public:
  /// Rows top to bottom, alternating direction, starting left to right.
  static ModeOrder snake(const SquareLattice& lattice);
  static ModeOrder row_major(const Graph& graph);

  std::size_t size() const { return mode_of_.size(); }
  std::size_t mode(const Vertex& v) const { return mode_of_.at(v); }
  const std::vector<Vertex>& vertex_by_mode() const { return by_mode_; }

 private:
  explicit ModeOrder(std::vector<Vertex> by_mode);

  std::vector<Vertex> by_mode_;
  std::map<Vertex, std::size_t> mode_of_;
};

// Modes are 0-based below: mode 0 carries no Z string.

/// a_i^dagger -> 1/2 Z_0 ... Z_{i-1} (X_i - i Y_i); a_i is its adjoint.
PauliSum jw_ladder(std::size_t n_modes, std::size_t mode, bool dagger);

/// gamma_i = Z_0...Z_{i-1} X_i, gamma-bar_i = Z_0...Z_{i-1} Y_i.
PauliString jw_majorana(std::size_t n_modes, std::size_t mode, bool bar);

/// E_ij = -i gamma_i gamma_j and V_j = -i gamma_j gamma-bar_j.
std::pair<PauliString, PauliString> jw_edge_vertex(std::size_t n_modes, std::size_t i,
                                                   std::size_t j);

/// Jordan-Wigner images of every lattice edge and vertex on M qubits, with
/// vertex qubit = mode index and an empty stabilizer group.
EncodedOperators jw_encode(const Graph& graph, const ModeOrder& order);
EncodedOperators jw_encode(const SquareLattice& lattice);

}  // namespace cfq
