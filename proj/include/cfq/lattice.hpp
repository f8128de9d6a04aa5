#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfq {

/// Invalid geometry: unknown vertex/edge, bad dimensions, broken path.
class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lattice site. Row 0 is the top row, column 0 the left column.
/// Ordered row-major: (y, x).
struct Vertex {
  int x = 0;
  int y = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

std::string to_string(const Vertex& v);

/// Face label. For square lattices (x, y) is the top-left corner; for hex
/// lattices it is (face column, face row). Ordered row-major.
struct Face {
  int x = 0;
  int y = 0;

  friend bool operator==(const Face&, const Face&) = default;
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

std::string to_string(const Face& f);

enum class Axis { Horizontal, Vertical };

struct DirectedEdge {
  Vertex tail;
  Vertex head;

  Axis axis() const { return tail.y == head.y ? Axis::Horizontal : Axis::Vertical; }
  DirectedEdge reversed() const { return {head, tail}; }
  bool touches(const Vertex& v) const { return tail == v || head == v; }
  bool shares_vertex(const DirectedEdge& e) const {
    return touches(e.tail) || touches(e.head);
  }

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

std::string to_string(const DirectedEdge& e);

/// Vertex qubits first (in vertex order), then face qubits (in face order).
struct QubitLayout {
  std::vector<Vertex> vertices;
  std::map<Vertex, std::size_t> vertex_qubit;
  std::map<Face, std::size_t> face_qubit;
  std::size_t total = 0;

  std::size_t num_vertices() const { return vertex_qubit.size(); }
  std::size_t num_faces() const { return face_qubit.size(); }
  bool is_vertex_qubit(std::size_t q) const { return q < vertex_qubit.size(); }
};

/// Oriented interaction graph shared by all lattice kinds.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Vertex> vertices, std::vector<DirectedEdge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<DirectedEdge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }

  bool contains(const Vertex& v) const { return index_.contains(v); }
  std::size_t index_of(const Vertex& v) const;
  bool adjacent(const Vertex& a, const Vertex& b) const;
  /// The edge joining a and b in its lattice orientation.
  const DirectedEdge& oriented(const Vertex& a, const Vertex& b) const;
  std::vector<DirectedEdge> incident(const Vertex& v) const;
  std::size_t degree(const Vertex& v) const { return incident(v).size(); }

 private:
  std::vector<Vertex> vertices_;
  std::vector<DirectedEdge> edges_;
  std::map<Vertex, std::size_t> index_;
  std::map<std::pair<Vertex, Vertex>, std::size_t> edge_index_;  // keyed (min, max)
};

enum class LatticeCase { I, II, III };

std::string to_string(LatticeCase c);

struct CaseInfo {
  LatticeCase tag;
  int modes;
  int odd_faces;
  int even_faces;
};

/// W x H square lattice of fermionic modes with a checkerboard face labelling.
/// Face (fx, fy) is odd (qubit-bearing) iff (fx + fy) % 2 == checkerboard_phase,
/// so the default phase 0 makes the top-left face odd.
///
/// Edges circulate around the even faces, alternating handedness on every row
/// of faces: vertical edges in column x point north iff x is even, horizontal
/// edges in row y point east iff y + phase is odd.
class SquareLattice {
 public:
  SquareLattice(int width, int height, int checkerboard_phase = 0);

  int width() const { return width_; }
  int height() const { return height_; }
  int checkerboard_phase() const { return phase_; }
  int num_modes() const { return width_ * height_; }
  int num_faces() const { return (width_ - 1) * (height_ - 1); }

  bool contains(const Vertex& v) const;
  bool contains(const Face& f) const;
  std::size_t index(const Vertex& v) const;
  std::vector<Vertex> vertices() const;
  std::vector<Face> faces() const;
  std::vector<Vertex> corners() const;
  bool is_corner(const Vertex& v) const;

  bool is_odd(const Face& f) const;
  /// Clockwise on screen from the top-left: (x,y), (x+1,y), (x+1,y+1), (x,y+1).
  std::array<Vertex, 4> corners_of(const Face& f) const;
  /// The one or two faces bordering the edge {a, b}.
  std::vector<Face> faces_of(const Vertex& a, const Vertex& b) const;

  DirectedEdge orient_edge(const Vertex& a, const Vertex& b) const;
  std::optional<Face> odd_face_of(const Vertex& a, const Vertex& b) const;

  CaseInfo classify() const;
  QubitLayout qubit_layout() const;
  Graph graph() const;

 private:
  void require_edge(const Vertex& a, const Vertex& b) const;

  int width_;
  int height_;
  int phase_;
};

inline LatticeCase classify_case(const SquareLattice& l) { return l.classify().tag; }

}  // namespace cfq
