#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "cfq/encoder.hpp"
#include "cfq/lattice.hpp"

namespace cfq {

/// Rectangular patch of hexagons in a brick-wall embedding. Each hexagon is a
/// 1x2 brick; face (c, r) spans x in {c, c+1} and y in [y0, y0+2] with
/// y0 = 2r + (c % 2), so neighbouring face columns are offset by half a face.
/// The horizontal edge at y0+2 is the face's bottom edge.
///
/// Orientation: horizontal edges leaving column x point east iff x is even,
/// vertical edges on line x point north iff x is even. Faces in even columns
/// then circulate clockwise and faces in odd columns counterclockwise, except
/// for their bottom edges.
///
/// Above every odd column the patch contains the bottom edge and a lower side
/// of a hexagon that is not itself in the patch. Those partial faces get a
/// qubit too, so that their corners anticommute. Each such qubit adds a
/// logical qubit, pinned by an extra stabilizer.
class HexLattice {
 public:
  HexLattice(int face_columns, int face_rows);

  int face_columns() const { return columns_; }
  int face_rows() const { return rows_; }
  int num_modes() const { return static_cast<int>(vertices_.size()); }
  int num_faces() const { return columns_ * rows_; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::vector<Face> faces() const;
  bool contains(const Vertex& v) const;
  bool contains(const Face& f) const;
  /// Faces outside the patch whose bottom edge and a lower side are edges
  /// of the patch, in (y, x) order.
  const std::vector<Face>& partial_faces() const { return partial_; }

  /// Clockwise on screen, starting at the top-left vertex.
  std::array<Vertex, 6> cycle_of(const Face& f) const;
  std::pair<Vertex, Vertex> bottom_edge(const Face& f) const;

  DirectedEdge orient_edge(const Vertex& a, const Vertex& b) const;
  /// Face (whole or partial) whose qubit the edge touches: Y for its bottom
  /// edge, X for the two edges meeting the bottom edge inside that face.
  std::optional<std::pair<Face, Pauli>> face_factor(const Vertex& a, const Vertex& b) const;

  /// Vertices, then whole faces row-major, then partial faces.
  QubitLayout qubit_layout() const;
  Graph graph() const;

 private:
  int top_of(const Face& f) const { return 2 * f.y + (f.x % 2); }
  std::array<std::pair<Vertex, Vertex>, 3> star_of(const Face& f) const;

  int columns_;
  int rows_;
  std::vector<Vertex> vertices_;
  Graph graph_;
  std::vector<Face> partial_;
  std::map<std::pair<Vertex, Vertex>, std::pair<Face, Pauli>> factor_;
};

DirectedEdge hex_orient_edge(const HexLattice& lattice, const Vertex& a, const Vertex& b);
PauliString hex_edge_operator(const HexLattice& lattice, const Vertex& i, const Vertex& j);
/// Generators: one loop per whole face, then one pin per partial face qubit.
/// A pin commutes with every edge and vertex operator and with the first
/// corner Majorana, so only that corner keeps a single-qubit Majorana.
EncodedOperators encode(const HexLattice& lattice);
StabilizerGroup hex_stabilizer_generators(const HexLattice& lattice);

}  // namespace cfq
