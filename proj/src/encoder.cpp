#include "cfq/encoder.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace cfq {

PauliString EncodedOperators::edge(const Vertex& i, const Vertex& j) const {
  const DirectedEdge& e = graph.oriented(i, j);
  const PauliString& op = edge_ops.at(e);
  return e.tail == i ? op : -op;
}

PauliString EncodedOperators::vertex(const Vertex& v) const {
  return vertex_ops.at(graph.index_of(v));
}

PauliString EncodedOperators::parity() const {
  PauliString out(num_qubits());
  for (const auto& v : vertex_ops) out *= v;
  return out;
}

namespace {

PauliString oriented_edge_operator(const SquareLattice& lattice, const QubitLayout& layout,
                                   const DirectedEdge& e, const SignConvention& signs) {
  PauliString op(layout.total);
  op.set(layout.vertex_qubit.at(e.tail), Pauli::X);
  op.set(layout.vertex_qubit.at(e.head), Pauli::Y);
  int sign = signs.horizontal;
  Pauli face_letter = Pauli::Y;
  if (e.axis() == Axis::Vertical) {
    face_letter = Pauli::X;
    sign = e.head.y > e.tail.y ? signs.south : signs.north;
  }
  if (auto f = lattice.odd_face_of(e.tail, e.head)) {
    op.set(layout.face_qubit.at(*f), face_letter);
  }
  if (sign < 0) op.mul_phase(2);
  return op;
}

}  // namespace

PauliString edge_operator(const SquareLattice& lattice, const Vertex& i, const Vertex& j,
                          const SignConvention& signs) {
  const DirectedEdge e = lattice.orient_edge(i, j);
  PauliString op = oriented_edge_operator(lattice, lattice.qubit_layout(), e, signs);
  return e.tail == i ? op : -op;
}

PauliString vertex_operator(const SquareLattice& lattice, const Vertex& j) {
  const QubitLayout layout = lattice.qubit_layout();
  return PauliString::single(layout.total, layout.vertex_qubit.at(j), Pauli::Z);
}

PauliString loop_operator(const EncodedOperators& enc, std::span<const Vertex> cycle) {
  if (cycle.size() >= 2 && cycle.front() == cycle.back()) cycle = cycle.first(cycle.size() - 1);
  if (cycle.size() < 3) throw LatticeError("a loop needs at least three vertices");
  PauliString out(enc.num_qubits());
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const Vertex& a = cycle[k];
    const Vertex& b = cycle[(k + 1) % cycle.size()];
    if (!enc.graph.adjacent(a, b)) {
      throw LatticeError("loop step " + to_string(a) + "->" + to_string(b) +
                         " is not an edge");
    }
    out *= enc.edge(a, b);
  }
  out.mul_phase(static_cast<int>(cycle.size() % 4));
  return out;
}

EncodedOperators encode(const SquareLattice& lattice, const SignConvention& signs) {
  EncodedOperators enc;
  enc.lattice_kind = "square";
  enc.graph = lattice.graph();
  enc.layout = lattice.qubit_layout();
  for (const auto& e : enc.graph.edges()) {
    enc.edge_ops.emplace(e, oriented_edge_operator(lattice, enc.layout, e, signs));
  }
  for (const auto& v : enc.graph.vertices()) {
    enc.vertex_ops.push_back(
        PauliString::single(enc.layout.total, enc.layout.vertex_qubit.at(v), Pauli::Z));
  }
  std::vector<PauliString> generators;
  for (const Face& f : lattice.faces()) {
    if (lattice.is_odd(f)) continue;
    const auto corners = lattice.corners_of(f);
    enc.stabilizer_faces.push_back(f);
    generators.push_back(loop_operator(enc, corners));
  }
  enc.stabilizers = StabilizerGroup(enc.layout.total, std::move(generators));
  return enc;
}

StabilizerGroup stabilizer_generators(const SquareLattice& lattice,
                                      const SignConvention& signs) {
  return encode(lattice, signs).stabilizers;
}

// ---------------------------------------------------------------------------

std::vector<CornerMajorana> majorana_corners(const EncodedOperators& enc) {
  std::vector<CornerMajorana> out;
  for (const Vertex& v : enc.graph.vertices()) {
    const auto edges = enc.graph.incident(v);
    if (edges.empty()) continue;
    const bool all_in = std::all_of(edges.begin(), edges.end(),
                                    [&](const DirectedEdge& e) { return e.head == v; });
    const bool all_out = std::all_of(edges.begin(), edges.end(),
                                     [&](const DirectedEdge& e) { return e.tail == v; });
    if (!all_in && !all_out) continue;
    out.push_back({v, all_in,
                   PauliString::single(enc.num_qubits(), enc.layout.vertex_qubit.at(v),
                                       all_in ? Pauli::X : Pauli::Y)});
  }
  return out;
}

CornerMajorana inject_majorana(const EncodedOperators& enc) {
  auto corners = majorana_corners(enc);
  if (corners.empty()) {
    throw CaseError("no corner vertices bounding odd faces on which to define a Majorana");
  }
  return corners.front();
}

PauliString inject_majorana(const SquareLattice& lattice) {
  return inject_majorana(encode(lattice)).op;
}

PauliString transport(const EncodedOperators& enc, const PauliString& corner_op,
                      std::span<const Vertex> path) {
  PauliString out = corner_op;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (!enc.graph.adjacent(path[k], path[k + 1])) {
      throw LatticeError("broken path at " + to_string(path[k]) + "->" +
                         to_string(path[k + 1]));
    }
    out *= enc.edge(path[k], path[k + 1]);
    out.mul_phase(1);
  }
  return out;
}

std::vector<Vertex> staircase_path(const Vertex& from, const Vertex& to) {
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur.x != to.x) {
    cur.x += to.x > cur.x ? 1 : -1;
    path.push_back(cur);
  }
  while (cur.y != to.y) {
    cur.y += to.y > cur.y ? 1 : -1;
    path.push_back(cur);
  }
  return path;
}

std::vector<Vertex> shortest_path(const Graph& graph, const Vertex& from, const Vertex& to) {
  std::map<Vertex, Vertex> parent;
  std::deque<Vertex> queue{from};
  parent.emplace(from, from);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (v == to) break;
    std::vector<Vertex> next;
    for (const auto& e : graph.incident(v)) next.push_back(e.tail == v ? e.head : e.tail);
    std::sort(next.begin(), next.end());
    for (const Vertex& w : next) {
      if (parent.emplace(w, v).second) queue.push_back(w);
    }
  }
  if (!parent.contains(to)) throw LatticeError("no path to " + to_string(to));
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

PauliString hole_operator(const EncodedOperators& enc, const CornerMajorana& majorana,
                          std::span<const Vertex> path) {
  if (path.empty() || path.front() != majorana.corner) {
    throw LatticeError("hole path must start at the Majorana corner " +
                       to_string(majorana.corner));
  }
  return transport(enc, majorana.op, path) * enc.parity();
}

// ---------------------------------------------------------------------------

LogicalQubit logical_paulis(const SquareLattice& lattice, const EncodedOperators& enc) {
  return logical_paulis(lattice, enc, lattice.corners().front());
}

LogicalQubit logical_paulis(const SquareLattice& lattice, const EncodedOperators& enc,
                            const Vertex& site) {
  if (lattice.classify().tag != LatticeCase::III) {
    throw CaseError("logical qubit exists only in case III, lattice is case " +
                    to_string(lattice.classify().tag));
  }
  const auto corners = majorana_corners(enc);
  if (corners.size() != 4) {
    throw EncodingError("case III lattice should expose 4 Majorana corners, found " +
                        std::to_string(corners.size()));
  }
  LogicalQubit lq{site, {corners[0], corners[1], corners[2], corners[3]}, {}, {}, {}, {}};
  for (std::size_t s = 0; s < 4; ++s) {
    const auto path = staircase_path(corners[s].corner, site);
    lq.at_site[s] = transport(enc, corners[s].op, path);
  }
  const auto& b = lq.at_site[1];
  const auto& c = lq.at_site[2];
  const auto& d = lq.at_site[3];
  lq.x = (c * d).mul_phase(3);
  lq.y = (d * b).mul_phase(3);
  lq.z = (b * c).mul_phase(3);
  return lq;
}

// ---------------------------------------------------------------------------

ToricFactors toric_factorization(const SquareLattice& lattice, const EncodedOperators& enc,
                                 const PauliString& generator) {
  const QubitLayout& layout = enc.layout;
  PauliString face_part(layout.total);
  PauliString vertex_part(layout.total);
  std::set<Vertex> z_vertices;
  for (std::size_t q : generator.support()) {
    const Pauli p = generator.at(q);
    if (layout.is_vertex_qubit(q)) {
      if (p != Pauli::Z) {
        throw EncodingError("generator " + generator.str() + " has non-Z letter on vertex qubit");
      }
      vertex_part.set(q, p);
      z_vertices.insert(layout.vertices.at(q));
    } else {
      face_part.set(q, p);
    }
  }
  face_part.set_phase(generator.phase());

  if (z_vertices.size() != 4) {
    throw EncodingError("generator " + generator.str() + " is not a 4-vertex parity check");
  }
  const Vertex top_left = *z_vertices.begin();
  const Face face{top_left.x, top_left.y};
  if (!lattice.contains(face) || lattice.is_odd(face)) {
    throw EncodingError("generator " + generator.str() + " does not surround an even face");
  }
  const auto corners = lattice.corners_of(face);
  if (!std::all_of(corners.begin(), corners.end(),
                   [&](const Vertex& v) { return z_vertices.contains(v); })) {
    throw EncodingError("generator " + generator.str() + " vertex support is not a face");
  }

  PauliString expected(layout.total);
  const std::pair<Face, Pauli> neighbours[] = {{{face.x, face.y - 1}, Pauli::Y},
                                               {{face.x, face.y + 1}, Pauli::Y},
                                               {{face.x - 1, face.y}, Pauli::X},
                                               {{face.x + 1, face.y}, Pauli::X}};
  for (const auto& [f, letter] : neighbours) {
    if (lattice.contains(f)) expected.set(layout.face_qubit.at(f), letter);
  }
  if (!face_part.same_word(expected)) {
    throw EncodingError("face part " + face_part.letters() + " of generator around " +
                        to_string(face) + " should be " + expected.letters());
  }
  return {face, face_part, vertex_part};
}

}  // namespace cfq
