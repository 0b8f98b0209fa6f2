#pragma once
// Shared small fixtures for the test suite.

#include "qpkit/potential.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/ratmat.hpp"
#include "qpkit/rep.hpp"

namespace qpkit::testfix {

// a: 1 -> 2, b: 2 -> 3, c: 3 -> 1 (1-based labels; indices are a=0, b=1, c=2).
inline Quiver three_cycle_quiver() {
  Quiver q(3);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  q.add_arrow("c", 2, 0);
  return q;
}

// The triangle potential S = cba (read right to left: a, then b, then c).
inline PathVector three_cycle_potential() {
  Path p;
  p.word = {2, 1, 0};
  return pv_of(p);
}

inline QP three_cycle_qp(int truncation = 8) {
  return make_qp(three_cycle_quiver(), three_cycle_potential(), truncation);
}

// Single arrow 2 -> 1, the quiver of the rank-2 alternating walk.
inline IntMat rank2_matrix() {
  IntMat b(2, 2);
  b.at(0, 1) = 1;
  b.at(1, 0) = -1;
  return b;
}

// Double arrow 2 -> 1.
inline IntMat kronecker_matrix() {
  IntMat b(2, 2);
  b.at(0, 1) = 2;
  b.at(1, 0) = -2;
  return b;
}

// a: 1 -> 2, b: 2 -> 1, the smallest quiver with a two-arrow cycle.
inline Quiver two_cycle_quiver() {
  Quiver q(2);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 0);
  return q;
}

inline IntMat chain3_matrix() {
  IntMat b(3, 3);
  b.at(0, 1) = 1;
  b.at(1, 0) = -1;
  b.at(1, 2) = 1;
  b.at(2, 1) = -1;
  return b;
}

// Interval module over the triangle supported on vertices 2 and 3, with the
// connecting arrow acting as the identity.
inline DecoratedRep interval_23_rep() {
  DecoratedRep m;
  m.dims = {0, 1, 1};
  m.dec_dims = {0, 0, 0};
  m.arrow_maps = {RatMat(1, 0), RatMat::identity(1), RatMat(0, 1)};
  return m;
}

// Indecomposable (n, n) module over the double arrow: the first arrow acts
// as the identity, the second as the nilpotent single Jordan block.
inline DecoratedRep kronecker_rep(int n) {
  DecoratedRep m;
  m.dims = {n, n};
  m.dec_dims = {0, 0};
  RatMat j(n, n);
  for (int i = 0; i + 1 < n; ++i) j.at(i, i + 1) = 1;
  m.arrow_maps = {RatMat::identity(n), j};
  return m;
}

}  // namespace qpkit::testfix
