#include "cfq/jordan_wigner.hpp"

namespace cfq {

ModeOrder::ModeOrder(std::vector<Vertex> by_mode) : by_mode_(std::move(by_mode)) {
  for (std::size_t m = 0; m < by_mode_.size(); ++m) {
    if (!mode_of_.emplace(by_mode_[m], m).second) {
      throw LatticeError("mode order repeats vertex " + to_string(by_mode_[m]));
    }
  }
}

ModeOrder ModeOrder::snake(const SquareLattice& lattice) {
  std::vector<Vertex> order;
  for (int y = 0; y < lattice.height(); ++y) {
    for (int k = 0; k < lattice.width(); ++k) {
      const int x = y % 2 == 0 ? k : lattice.width() - 1 - k;
      order.push_back({x, y});
    }
  }
  return ModeOrder(std::move(order));
}

ModeOrder ModeOrder::row_major(const Graph& graph) { return ModeOrder(graph.vertices()); }

namespace {

void require_mode(std::size_t n_modes, std::size_t mode) {
  if (mode >= n_modes) {
    throw std::out_of_range("mode " + std::to_string(mode) + " out of range for " +
                            std::to_string(n_modes) + " modes");
  }
}

PauliString z_string(std::size_t n_modes, std::size_t upto) {
  PauliString s(n_modes);
  for (std::size_t k = 0; k < upto; ++k) s.set(k, Pauli::Z);
  return s;
}

}  // namespace

PauliSum jw_ladder(std::size_t n_modes, std::size_t mode, bool dagger) {
  require_mode(n_modes, mode);
  PauliString x = z_string(n_modes, mode);
  PauliString y = x;
  x.set(mode, Pauli::X);
  y.set(mode, Pauli::Y);
  PauliSum out(n_modes);
  out.add(x, 0.5);
  out.add(y, std::complex<double>(0.0, dagger ? -0.5 : 0.5));
  return out;
}

PauliString jw_majorana(std::size_t n_modes, std::size_t mode, bool bar) {
  require_mode(n_modes, mode);
  PauliString s = z_string(n_modes, mode);
  s.set(mode, bar ? Pauli::Y : Pauli::X);
  return s;
}

std::pair<PauliString, PauliString> jw_edge_vertex(std::size_t n_modes, std::size_t i,
                                                   std::size_t j) {
  if (i == j) throw std::invalid_argument("edge operator needs two distinct modes");
  PauliString e = jw_majorana(n_modes, i, false) * jw_majorana(n_modes, j, false);
  e.mul_phase(3);
  PauliString v = jw_majorana(n_modes, j, false) * jw_majorana(n_modes, j, true);
  v.mul_phase(3);
  return {e, v};
}

EncodedOperators jw_encode(const Graph& graph, const ModeOrder& order) {
  const std::size_t n = graph.num_vertices();
  if (order.size() != n) throw LatticeError("mode order does not cover the lattice");
  EncodedOperators enc;
  enc.lattice_kind = "jw";
  enc.graph = graph;
  enc.layout.vertices = order.vertex_by_mode();
  for (const auto& v : graph.vertices()) enc.layout.vertex_qubit[v] = order.mode(v);
  enc.layout.total = n;
  for (const auto& e : graph.edges()) {
    enc.edge_ops.emplace(e, jw_edge_vertex(n, order.mode(e.tail), order.mode(e.head)).first);
  }
  for (const auto& v : graph.vertices()) {
    const std::size_t m = order.mode(v);
    PauliString vop = jw_majorana(n, m, false) * jw_majorana(n, m, true);
    enc.vertex_ops.push_back(vop.mul_phase(3));
  }
  enc.stabilizers = StabilizerGroup(n, {});
  return enc;
}

EncodedOperators jw_encode(const SquareLattice& lattice) {
  return jw_encode(lattice.graph(), ModeOrder::snake(lattice));
}

}  // namespace cfq
