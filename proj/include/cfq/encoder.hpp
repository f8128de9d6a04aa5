#pragma once

#include <array>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfq/lattice.hpp"
#include "cfq/pauli.hpp"
#include "cfq/stabilizer.hpp"

namespace cfq {

/// The requested construction does not exist for this lattice case.
class CaseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operator that should come out of the encoder has an unexpected shape.
class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Signs attached to the three edge classes of the square-lattice rule
/// X_tail Y_head P_face. The defaults make every odd-face loop +I; anything
/// else exists for mutation testing.
struct SignConvention {
  int south = +1;
  int north = -1;
  int horizontal = +1;
};

/// Encoded edge and vertex operators on a qubit layout, plus the face-loop
/// stabilizers that carve out the codespace.
struct EncodedOperators {
  std::string lattice_kind;  // "square" or "hex"
  Graph graph;
  QubitLayout layout;
  std::map<DirectedEdge, PauliString> edge_ops;  // keyed by lattice orientation
  std::vector<PauliString> vertex_ops;           // by graph vertex index
  std::vector<Face> stabilizer_faces;
  StabilizerGroup stabilizers;

  std::size_t num_qubits() const { return layout.total; }
  std::size_t num_modes() const { return graph.num_vertices(); }
  /// E_ij for i -> j; the negation when i -> j runs against the orientation.
  PauliString edge(const Vertex& i, const Vertex& j) const;
  PauliString vertex(const Vertex& v) const;
  /// prod_j V_j over every vertex.
  PauliString parity() const;
};

PauliString edge_operator(const SquareLattice& lattice, const Vertex& i, const Vertex& j,
                          const SignConvention& signs = {});
PauliString vertex_operator(const SquareLattice& lattice, const Vertex& j);

/// i^k E_{p0 p1} E_{p1 p2} ... E_{p(k-1) p0} for the closed cycle p of k edges.
/// A trailing repeat of p0 is accepted and ignored.
PauliString loop_operator(const EncodedOperators& enc, std::span<const Vertex> cycle);

/// Square-lattice encoding: edge ops, vertex ops and one stabilizer per even
/// face.
EncodedOperators encode(const SquareLattice& lattice, const SignConvention& signs = {});
StabilizerGroup stabilizer_generators(const SquareLattice& lattice,
                                      const SignConvention& signs = {});

// --- Single Majoranas -------------------------------------------------------

struct CornerMajorana {
  Vertex corner;
  bool arrows_in;
  PauliString op;  // X at the corner if arrows point in, Y if they point out
};

/// Every vertex whose incident edges all point into it or all point away
/// from it, in vertex order. On square lattices these are exactly the corners
/// bounding odd faces.
std::vector<CornerMajorana> majorana_corners(const EncodedOperators& enc);

/// The default (first) Majorana corner. Throws CaseError when there is none.
CornerMajorana inject_majorana(const EncodedOperators& enc);
PauliString inject_majorana(const SquareLattice& lattice);

/// Moves a Majorana along `path` (path[0] is where it currently sits):
/// gamma_b = i * gamma_a * E_ab at every step, which keeps it hermitian.
PauliString transport(const EncodedOperators& enc, const PauliString& corner_op,
                      std::span<const Vertex> path);

/// Horizontal leg first, then vertical.
std::vector<Vertex> staircase_path(const Vertex& from, const Vertex& to);
/// Breadth-first path in vertex order; used where no grid exists.
std::vector<Vertex> shortest_path(const Graph& graph, const Vertex& from, const Vertex& to);

/// h_i = gamma_i * prod_j V_j with gamma_i the corner Majorana carried to
/// path.back(). path.front() must be the corner.
PauliString hole_operator(const EncodedOperators& enc, const CornerMajorana& majorana,
                          std::span<const Vertex> path);

// --- Case III logical qubit -------------------------------------------------

struct LogicalQubit {
  Vertex site;
  std::array<CornerMajorana, 4> species;  // A, B, C, D by corner order
  std::array<PauliString, 4> at_site;     // A_i, B_i, C_i, D_i
  PauliString x;  // -i C D
  PauliString y;  // -i D B
  PauliString z;  // -i B C
};

/// Throws CaseError unless the lattice is case III.
LogicalQubit logical_paulis(const SquareLattice& lattice, const EncodedOperators& enc);
LogicalQubit logical_paulis(const SquareLattice& lattice, const EncodedOperators& enc,
                            const Vertex& site);

// --- Toric-code view --------------------------------------------------------

struct ToricFactors {
  Face face;                // the even face the generator loops around
  PauliString face_part;    // restriction to face qubits
  PauliString vertex_part;  // restriction to vertex qubits: Z on 4 corners
};

/// Splits a square-lattice stabilizer generator by qubit kind and checks the
/// letter pattern: Z on the 4 bounding vertices, Y on odd faces north and
/// south, X on odd faces east and west. Throws EncodingError otherwise.
ToricFactors toric_factorization(const SquareLattice& lattice, const EncodedOperators& enc,
                                 const PauliString& generator);

}  // namespace cfq
