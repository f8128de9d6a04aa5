#include "cfq/hex_encoder.hpp"

#include <algorithm>
#include <set>

namespace cfq {

namespace {

std::pair<Vertex, Vertex> undirected(const Vertex& a, const Vertex& b) {
  return std::minmax(a, b);
}

}  // namespace

HexLattice::HexLattice(int face_columns, int face_rows)
    : columns_(face_columns), rows_(face_rows) {
  if (face_columns < 1 || face_rows < 1) {
    throw LatticeError("hex lattice needs at least one face column and row");
  }
  std::set<Vertex> verts;
  std::set<std::pair<Vertex, Vertex>> edge_set;
  for (const Face& f : faces()) {
    const auto cyc = cycle_of(f);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      verts.insert(cyc[k]);
      edge_set.insert(undirected(cyc[k], cyc[(k + 1) % cyc.size()]));
    }
  }
  vertices_.assign(verts.begin(), verts.end());
  std::vector<DirectedEdge> edges;
  for (const auto& [lo, hi] : edge_set) {
    if (lo.y == hi.y) {
      edges.push_back(lo.x % 2 == 0 ? DirectedEdge{lo, hi} : DirectedEdge{hi, lo});
    } else {
      edges.push_back(lo.x % 2 == 0 ? DirectedEdge{hi, lo} : DirectedEdge{lo, hi});
    }
  }
  graph_ = Graph(vertices_, std::move(edges));

  auto in_patch = [&](const std::pair<Vertex, Vertex>& e) { return edge_set.contains(e); };
  std::vector<Face> starred = faces();
  for (int r = -1; r <= rows_; ++r) {
    for (int c = 0; c < columns_; ++c) {
      const Face f{c, r};
      if (contains(f)) continue;
      const auto star = star_of(f);
      if (in_patch(star[0]) && (in_patch(star[1]) || in_patch(star[2]))) partial_.push_back(f);
    }
  }
  std::sort(partial_.begin(), partial_.end());
  starred.insert(starred.end(), partial_.begin(), partial_.end());
  for (const Face& f : starred) {
    const auto star = star_of(f);
    for (std::size_t k = 0; k < star.size(); ++k) {
      if (!in_patch(star[k])) continue;
      const Pauli p = k == 0 ? Pauli::Y : Pauli::X;
      if (!factor_.emplace(star[k], std::make_pair(f, p)).second) {
        throw LatticeError("edge carries two face factors");
      }
    }
  }
}

std::vector<Face> HexLattice::faces() const {
  std::vector<Face> out;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < columns_; ++c) out.push_back({c, r});
  return out;
}

bool HexLattice::contains(const Vertex& v) const { return graph_.contains(v); }

bool HexLattice::contains(const Face& f) const {
  return f.x >= 0 && f.x < columns_ && f.y >= 0 && f.y < rows_;
}

std::array<Vertex, 6> HexLattice::cycle_of(const Face& f) const {
  if (!contains(f)) throw LatticeError("face " + to_string(f) + " not in hex lattice");
  const int c = f.x, y0 = top_of(f);
  return {Vertex{c, y0},         Vertex{c + 1, y0},     Vertex{c + 1, y0 + 1},
          Vertex{c + 1, y0 + 2}, Vertex{c, y0 + 2},     Vertex{c, y0 + 1}};
}

std::pair<Vertex, Vertex> HexLattice::bottom_edge(const Face& f) const {
  const auto cyc = cycle_of(f);
  return {cyc[4], cyc[3]};
}

// Bottom edge first, then the lower-left and lower-right sides.
std::array<std::pair<Vertex, Vertex>, 3> HexLattice::star_of(const Face& f) const {
  const int c = f.x, y = top_of(f) + 2;
  return {undirected({c, y}, {c + 1, y}), undirected({c, y - 1}, {c, y}),
          undirected({c + 1, y - 1}, {c + 1, y})};
}

DirectedEdge HexLattice::orient_edge(const Vertex& a, const Vertex& b) const {
  return graph_.oriented(a, b);
}

std::optional<std::pair<Face, Pauli>> HexLattice::face_factor(const Vertex& a,
                                                              const Vertex& b) const {
  orient_edge(a, b);  // throws for non-edges
  const auto it = factor_.find(undirected(a, b));
  if (it == factor_.end()) return std::nullopt;
  return it->second;
}

QubitLayout HexLattice::qubit_layout() const {
  QubitLayout layout;
  layout.vertices = vertices_;
  std::size_t q = 0;
  for (const Vertex& v : vertices_) layout.vertex_qubit[v] = q++;
  for (const Face& f : faces()) layout.face_qubit[f] = q++;
  for (const Face& f : partial_) layout.face_qubit[f] = q++;
  layout.total = q;
  return layout;
}

Graph HexLattice::graph() const { return graph_; }

DirectedEdge hex_orient_edge(const HexLattice& lattice, const Vertex& a, const Vertex& b) {
  return lattice.orient_edge(a, b);
}

namespace {

PauliString oriented_hex_operator(const HexLattice& lattice, const QubitLayout& layout,
                                  const DirectedEdge& e) {
  PauliString op(layout.total);
  op.set(layout.vertex_qubit.at(e.tail), Pauli::X);
  op.set(layout.vertex_qubit.at(e.head), Pauli::Y);
  if (auto ff = lattice.face_factor(e.tail, e.head)) {
    op.set(layout.face_qubit.at(ff->first), ff->second);
  }
  return op;
}

using Bits = std::vector<std::uint8_t>;

// Symplectic bits: x part in [0, n), z part in [n, 2n).
Bits to_bits(const PauliString& p) {
  const std::size_t n = p.num_qubits();
  Bits b(2 * n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    const Pauli l = p.at(q);
    b[q] = (l == Pauli::X || l == Pauli::Y) ? 1 : 0;
    b[n + q] = (l == Pauli::Z || l == Pauli::Y) ? 1 : 0;
  }
  return b;
}

PauliString from_bits(const Bits& b) {
  const std::size_t n = b.size() / 2;
  PauliString p(n);
  for (std::size_t q = 0; q < n; ++q) {
    const int code = b[q] + 2 * b[n + q];
    p.set(q, code == 1 ? Pauli::X : code == 2 ? Pauli::Z : code == 3 ? Pauli::Y : Pauli::I);
  }
  return p;
}

void xor_into(Bits& dst, const Bits& src) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] ^= src[k];
}

// Reduces v against an echelon basis (pivot column per row); true when v
// ends up zero.
bool reduce(Bits& v, const std::vector<Bits>& basis, const std::vector<std::size_t>& pivots) {
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (v[pivots[r]]) xor_into(v, basis[r]);
  }
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

void insert(Bits v, std::vector<Bits>& basis, std::vector<std::size_t>& pivots) {
  if (reduce(v, basis, pivots)) return;
  const auto pivot = static_cast<std::size_t>(std::find(v.begin(), v.end(), 1) - v.begin());
  for (auto& row : basis) {
    if (row[pivot]) xor_into(row, v);
  }
  basis.push_back(std::move(v));
  pivots.push_back(pivot);
}

// Each partial face qubit adds a logical qubit that the edge, vertex and
// first corner Majorana operators leave alone. Pick commuting Paulis from that
// commutant, outside the loop group, one per partial face, and use them as
// extra stabilizers.
std::vector<PauliString> partial_face_pins(const EncodedOperators& enc,
                                           const std::vector<PauliString>& loops,
                                           std::size_t count) {
  if (count == 0) return {};
  const std::size_t n = enc.num_qubits();
  std::vector<PauliString> constraints;
  for (const auto& [e, op] : enc.edge_ops) constraints.push_back(op);
  for (const auto& v : enc.vertex_ops) constraints.push_back(v);
  // Only the first corner: a second bare corner Majorana is an independent
  // operator once a partial face exists, so it cannot be logical as well.
  const auto corners = majorana_corners(enc);
  if (!corners.empty()) constraints.push_back(corners.front().op);

  // Commutation with c is the row (z_c | x_c) dotted with (x | z).
  std::vector<Bits> rows;
  for (const auto& c : constraints) {
    const Bits b = to_bits(c);
    Bits row(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      row[q] = b[n + q];
      row[n + q] = b[q];
    }
    rows.push_back(row);
  }
  std::vector<Bits> echelon;
  std::vector<std::size_t> pivots;
  for (auto& r : rows) insert(r, echelon, pivots);
  std::vector<bool> is_pivot(2 * n, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Bits> quotient;
  std::vector<std::size_t> quotient_pivots;
  for (const auto& l : loops) insert(to_bits(l), quotient, quotient_pivots);

  std::vector<PauliString> pins;
  for (std::size_t free = 0; free < 2 * n && pins.size() < count; ++free) {
    if (is_pivot[free]) continue;
    Bits v(2 * n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      if (echelon[r][free]) v[pivots[r]] = 1;
    }
    Bits probe = v;
    if (reduce(probe, quotient, quotient_pivots)) continue;
    const PauliString candidate = from_bits(v);
    const bool fits = std::all_of(pins.begin(), pins.end(),
                                  [&](const PauliString& p) { return commutes(p, candidate); });
    if (!fits) continue;
    insert(v, quotient, quotient_pivots);
    pins.push_back(candidate);
  }
  if (pins.size() != count) throw EncodingError("partial face qubits cannot be pinned");
  // Shave weight by multiplying with face loops while that helps.
  for (auto& pin : pins) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (const auto& l : loops) {
        const PauliString trial = (pin * l).word();
        if (trial.weight() < pin.weight()) {
          pin = trial;
          improved = true;
        }
      }
    }
  }
  return pins;
}

}  // namespace

PauliString hex_edge_operator(const HexLattice& lattice, const Vertex& i, const Vertex& j) {
  const DirectedEdge e = lattice.orient_edge(i, j);
  PauliString op = oriented_hex_operator(lattice, lattice.qubit_layout(), e);
  return e.tail == i ? op : -op;
}

EncodedOperators encode(const HexLattice& lattice) {
  EncodedOperators enc;
  enc.lattice_kind = "hex";
  enc.graph = lattice.graph();
  enc.layout = lattice.qubit_layout();
  for (const auto& e : enc.graph.edges()) {
    enc.edge_ops.emplace(e, oriented_hex_operator(lattice, enc.layout, e));
  }
  for (const auto& v : enc.graph.vertices()) {
    enc.vertex_ops.push_back(
        PauliString::single(enc.layout.total, enc.layout.vertex_qubit.at(v), Pauli::Z));
  }
  std::vector<PauliString> generators;
  for (const Face& f : lattice.faces()) {
    const auto cyc = lattice.cycle_of(f);
    enc.stabilizer_faces.push_back(f);
    generators.push_back(loop_operator(enc, cyc));
  }
  std::vector<PauliString> pins =
      partial_face_pins(enc, generators, lattice.partial_faces().size());
  for (std::size_t k = 0; k < pins.size(); ++k) {
    enc.stabilizer_faces.push_back(lattice.partial_faces()[k]);
    generators.push_back(std::move(pins[k]));
  }
  enc.stabilizers = StabilizerGroup(enc.layout.total, std::move(generators));
  return enc;
}

StabilizerGroup hex_stabilizer_generators(const HexLattice& lattice) {
  return encode(lattice).stabilizers;
}

}  // namespace cfq
