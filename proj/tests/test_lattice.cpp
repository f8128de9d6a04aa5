#include <gtest/gtest.h>

#include "cfq/lattice.hpp"

using namespace cfq;

namespace {

// Number of cycle edges whose orientation follows the clockwise walk.
int clockwise_edges(const SquareLattice& l, const Face& f) {
  const auto c = l.corners_of(f);
  int n = 0;
  for (int k = 0; k < 4; ++k) {
    if (l.orient_edge(c[k], c[(k + 1) % 4]).tail == c[k]) ++n;
  }
  return n;
}

}  // namespace

TEST(Lattice, OrientationRules) {
  for (int phase : {0, 1}) {
    const SquareLattice l(5, 4, phase);
    for (int y = 0; y < 4; ++y) {
      for (int x = 0; x + 1 < 5; ++x) {
        const auto e = l.orient_edge({x, y}, {x + 1, y});
        const bool east = e.tail == Vertex{x, y};
        EXPECT_EQ(east, (y + phase) % 2 == 1) << x << "," << y << " phase " << phase;
      }
    }
    for (int x = 0; x < 5; ++x) {
      for (int y = 0; y + 1 < 4; ++y) {
        const auto e = l.orient_edge({x, y}, {x, y + 1});
        const bool north = e.head == Vertex{x, y};
        EXPECT_EQ(north, x % 2 == 0);
      }
    }
  }
}

TEST(Lattice, EvenFacesAreDirectedCycles) {
  for (int phase : {0, 1}) {
    const SquareLattice l(6, 6, phase);
    for (const Face& f : l.faces()) {
      const int cw = clockwise_edges(l, f);
      if (!l.is_odd(f)) {
        EXPECT_TRUE(cw == 0 || cw == 4) << to_string(f);
      } else {
        EXPECT_EQ(cw, 2) << to_string(f);
      }
    }
  }
}

TEST(Lattice, OddFaceRule) {
  const SquareLattice p0(3, 3, 0), p1(3, 3, 1);
  EXPECT_TRUE(p0.is_odd({0, 0}));
  EXPECT_FALSE(p0.is_odd({1, 0}));
  EXPECT_FALSE(p1.is_odd({0, 0}));
  EXPECT_TRUE(p1.is_odd({1, 0}));
}

TEST(Lattice, CaseClassification) {
  const auto c22p0 = SquareLattice(2, 2, 0).classify();
  EXPECT_EQ(c22p0.tag, LatticeCase::III);
  EXPECT_EQ(c22p0.odd_faces, 1);
  EXPECT_EQ(c22p0.even_faces, 0);
  EXPECT_EQ(SquareLattice(2, 2, 1).classify().tag, LatticeCase::II);
  EXPECT_EQ(SquareLattice(3, 3, 0).classify().tag, LatticeCase::I);
  EXPECT_EQ(SquareLattice(3, 3, 1).classify().tag, LatticeCase::I);
  EXPECT_EQ(SquareLattice(4, 4, 1).classify().tag, LatticeCase::II);
  EXPECT_EQ(SquareLattice(4, 4, 0).classify().tag, LatticeCase::III);
  EXPECT_EQ(SquareLattice(2, 3, 0).classify().tag, LatticeCase::I);
  for (int w = 2; w <= 8; ++w) {
    for (int h = 2; h <= 8; ++h) {
      for (int phase : {0, 1}) {
        const auto info = SquareLattice(w, h, phase).classify();
        const int excess = info.odd_faces - info.even_faces;
        EXPECT_TRUE(excess >= -1 && excess <= 1);
        const LatticeCase expect =
            excess == 0 ? LatticeCase::I : excess < 0 ? LatticeCase::II : LatticeCase::III;
        EXPECT_EQ(info.tag, expect) << w << "x" << h << " phase " << phase;
      }
    }
  }
}

TEST(Lattice, QubitLayout) {
  EXPECT_EQ(SquareLattice(3, 3, 0).qubit_layout().total, 11u);
  EXPECT_EQ(SquareLattice(2, 2, 0).qubit_layout().total, 5u);
  EXPECT_EQ(SquareLattice(2, 2, 1).qubit_layout().total, 4u);
  EXPECT_EQ(SquareLattice(5, 4, 0).qubit_layout().total, 26u);

  const auto layout = SquareLattice(3, 3, 0).qubit_layout();
  EXPECT_EQ(layout.vertex_qubit.at({0, 0}), 0u);
  EXPECT_EQ(layout.vertex_qubit.at({2, 0}), 2u);
  EXPECT_EQ(layout.vertex_qubit.at({0, 1}), 3u);
  EXPECT_EQ(layout.face_qubit.at({0, 0}), 9u);
  EXPECT_EQ(layout.face_qubit.at({1, 1}), 10u);
  EXPECT_FALSE(layout.face_qubit.contains({1, 0}));
}

TEST(Lattice, GraphAndErrors) {
  const SquareLattice l(3, 2);
  const Graph g = l.graph();
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(g.edges().size(), 7u);
  EXPECT_EQ(g.degree({1, 0}), 3u);
  EXPECT_TRUE(g.adjacent({1, 0}, {1, 1}));
  EXPECT_FALSE(g.adjacent({0, 0}, {1, 1}));
  EXPECT_THROW(l.orient_edge({0, 0}, {1, 1}), LatticeError);
  EXPECT_THROW(SquareLattice(1, 3), LatticeError);
  EXPECT_THROW(SquareLattice(3, 3, 2), LatticeError);
  EXPECT_EQ(l.faces_of({1, 0}, {1, 1}).size(), 2u);
  EXPECT_EQ(l.faces_of({0, 0}, {1, 0}).size(), 1u);
}
