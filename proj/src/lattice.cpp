#include "cfq/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace cfq {

std::string to_string(const Vertex& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::string to_string(const Face& f) {
  return "f(" + std::to_string(f.x) + "," + std::to_string(f.y) + ")";
}

std::string to_string(const DirectedEdge& e) {
  return to_string(e.tail) + "->" + to_string(e.head);
}

std::string to_string(LatticeCase c) {
  switch (c) {
    case LatticeCase::I: return "I";
    case LatticeCase::II: return "II";
    case LatticeCase::III: return "III";
  }
  return "?";
}

// ---------------------------------------------------------------------------

Graph::Graph(std::vector<Vertex> vertices, std::vector<DirectedEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_[vertices_[i]] = i;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& e = edges_[k];
    if (!contains(e.tail) || !contains(e.head)) {
      throw LatticeError("edge " + to_string(e) + " references unknown vertex");
    }
    edge_index_[std::minmax(e.tail, e.head)] = k;
  }
}

std::size_t Graph::index_of(const Vertex& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw LatticeError("vertex " + to_string(v) + " not in lattice");
  return it->second;
}

bool Graph::adjacent(const Vertex& a, const Vertex& b) const {
  return edge_index_.contains(std::minmax(a, b));
}

const DirectedEdge& Graph::oriented(const Vertex& a, const Vertex& b) const {
  auto it = edge_index_.find(std::minmax(a, b));
  if (it == edge_index_.end()) {
    throw LatticeError("edge " + to_string(a) + "-" + to_string(b) + " not in lattice");
  }
  return edges_[it->second];
}

std::vector<DirectedEdge> Graph::incident(const Vertex& v) const {
  std::vector<DirectedEdge> out;
  for (const auto& e : edges_) {
    if (e.touches(v)) out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

SquareLattice::SquareLattice(int width, int height, int checkerboard_phase)
    : width_(width), height_(height), phase_(checkerboard_phase) {
  if (width < 2 || height < 2) {
    throw LatticeError("square lattice must be at least 2x2, got " +
                       std::to_string(width) + "x" + std::to_string(height));
  }
  if (checkerboard_phase != 0 && checkerboard_phase != 1) {
    throw LatticeError("checkerboard phase must be 0 or 1");
  }
}

bool SquareLattice::contains(const Vertex& v) const {
  return v.x >= 0 && v.x < width_ && v.y >= 0 && v.y < height_;
}

bool SquareLattice::contains(const Face& f) const {
  return f.x >= 0 && f.x < width_ - 1 && f.y >= 0 && f.y < height_ - 1;
}

std::size_t SquareLattice::index(const Vertex& v) const {
  if (!contains(v)) throw LatticeError("vertex " + to_string(v) + " not in lattice");
  return static_cast<std::size_t>(v.y * width_ + v.x);
}

std::vector<Vertex> SquareLattice::vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(num_modes()));
  for (int y = 0; y < height_; ++y)
    for (int x = 0; x < width_; ++x) out.push_back({x, y});
  return out;
}

std::vector<Face> SquareLattice::faces() const {
  std::vector<Face> out;
  for (int y = 0; y + 1 < height_; ++y)
    for (int x = 0; x + 1 < width_; ++x) out.push_back({x, y});
  return out;
}

std::vector<Vertex> SquareLattice::corners() const {
  return {{0, 0}, {width_ - 1, 0}, {0, height_ - 1}, {width_ - 1, height_ - 1}};
}

bool SquareLattice::is_corner(const Vertex& v) const {
  return (v.x == 0 || v.x == width_ - 1) && (v.y == 0 || v.y == height_ - 1);
}

bool SquareLattice::is_odd(const Face& f) const {
  if (!contains(f)) throw LatticeError("face " + to_string(f) + " not in lattice");
  return (f.x + f.y) % 2 == phase_;
}

std::array<Vertex, 4> SquareLattice::corners_of(const Face& f) const {
  return {Vertex{f.x, f.y}, Vertex{f.x + 1, f.y}, Vertex{f.x + 1, f.y + 1},
          Vertex{f.x, f.y + 1}};
}

void SquareLattice::require_edge(const Vertex& a, const Vertex& b) const {
  const int dist = std::abs(a.x - b.x) + std::abs(a.y - b.y);
  if (!contains(a) || !contains(b) || dist != 1) {
    throw LatticeError("edge " + to_string(a) + "-" + to_string(b) + " not in lattice");
  }
}

std::vector<Face> SquareLattice::faces_of(const Vertex& a, const Vertex& b) const {
  require_edge(a, b);
  std::vector<Face> out;
  const Vertex lo = std::min(a, b);
  if (a.y == b.y) {
    for (Face f : {Face{lo.x, lo.y - 1}, Face{lo.x, lo.y}})
      if (contains(f)) out.push_back(f);
  } else {
    for (Face f : {Face{lo.x - 1, lo.y}, Face{lo.x, lo.y}})
      if (contains(f)) out.push_back(f);
  }
  return out;
}

DirectedEdge SquareLattice::orient_edge(const Vertex& a, const Vertex& b) const {
  require_edge(a, b);
  const Vertex lo = std::min(a, b);  // west or north endpoint
  const Vertex hi = std::max(a, b);
  if (a.y == b.y) {
    const bool east = (lo.y + phase_) % 2 == 1;
    return east ? DirectedEdge{lo, hi} : DirectedEdge{hi, lo};
  }
  const bool north = lo.x % 2 == 0;
  return north ? DirectedEdge{hi, lo} : DirectedEdge{lo, hi};
}

std::optional<Face> SquareLattice::odd_face_of(const Vertex& a, const Vertex& b) const {
  for (const Face& f : faces_of(a, b)) {
    if (is_odd(f)) return f;
  }
  return std::nullopt;
}

CaseInfo SquareLattice::classify() const {
  int odd = 0;
  for (const Face& f : faces()) odd += is_odd(f) ? 1 : 0;
  const int even = num_faces() - odd;
  LatticeCase tag = LatticeCase::I;
  if (num_faces() % 2 == 1) tag = even > odd ? LatticeCase::II : LatticeCase::III;
  return {tag, num_modes(), odd, even};
}

QubitLayout SquareLattice::qubit_layout() const {
  QubitLayout layout;
  layout.vertices = vertices();
  std::size_t q = 0;
  for (const Vertex& v : layout.vertices) layout.vertex_qubit[v] = q++;
  for (const Face& f : faces()) {
    if (is_odd(f)) layout.face_qubit[f] = q++;
  }
  layout.total = q;
  return layout;
}

Graph SquareLattice::graph() const {
  std::vector<DirectedEdge> edges;
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) {
      if (x + 1 < width_) edges.push_back(orient_edge({x, y}, {x + 1, y}));
      if (y + 1 < height_) edges.push_back(orient_edge({x, y}, {x, y + 1}));
    }
  }
  return Graph(vertices(), std::move(edges));
}

}  // namespace cfq
