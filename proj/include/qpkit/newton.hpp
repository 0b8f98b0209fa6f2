#pragma once
// Tropical semifield operations on Laurent-monomial exponent vectors, and
// the Newton-polytope vertex filter.
//
// Tropical addition is the componentwise minimum of exponent vectors;
// multiplication is exponent addition.  Evaluating a polynomial tropically
// discards coefficients.  Restricting a polynomial to the vertices of its
// Newton polytope preserves every tropical evaluation: a linear functional
// is minimized over the polytope at a vertex.

#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/polynomial.hpp"

namespace qpkit {

inline IntVec tropical_add(const IntVec& a, const IntVec& b) {
  QPKIT_REQUIRE(a.size() == b.size(), "tropical_add: length mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

// Evaluate F with variable j replaced by the Laurent monomial assign[j],
// '+' replaced by componentwise min.  Result lives in the ambient space of
// the assignment monomials.
inline IntVec tropical_eval(const IntPolynomial& F,
                            const std::vector<IntVec>& assign) {
  QPKIT_REQUIRE(!F.is_zero(), "tropical_eval: zero polynomial has no value");
  QPKIT_REQUIRE(static_cast<int>(assign.size()) == F.nvars,
                "tropical_eval: assignment length mismatch");
  size_t out_n = assign.empty() ? 0 : assign[0].size();
  for (const auto& m : assign)
    QPKIT_REQUIRE(m.size() == out_n, "tropical_eval: ragged assignment");
  bool first = true;
  IntVec best;
  for (const auto& [e, c] : F.terms) {
    IntVec v(out_n, 0);
    for (int j = 0; j < F.nvars; ++j)
      for (size_t t = 0; t < out_n; ++t) v[t] += e[j] * assign[j][t];
    if (first) {
      best = v;
      first = false;
    } else {
      best = tropical_add(best, v);
    }
  }
  return best;
}

namespace detail {

// Exact-rational phase-I simplex: is `target` a convex combination of
// `points`?  Minimizes the sum of artificial variables with Bland's rule
// (guaranteed termination); feasible iff the optimum is zero.
inline bool in_convex_hull(const std::vector<const IntVec*>& points,
                           const IntVec& target) {
  if (points.empty()) return false;
  int n = static_cast<int>(target.size());
  int m = static_cast<int>(points.size());
  int rows = n + 1;           // n coordinate rows + convex-combination row
  int cols = m + rows + 1;    // lambdas + artificials + rhs

  // Translate so the target is the origin; then b = (0,...,0,1).
  std::vector<std::vector<Rat>> T(rows + 1, std::vector<Rat>(cols, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) T[i][j] = Rat((*points[j])[i] - target[i]);
  for (int j = 0; j < m; ++j) T[n][j] = 1;
  T[n][cols - 1] = 1;
  // Flip rows with negative rhs so artificial variables start feasible
  // (only relevant for the coordinate rows, whose rhs is 0 — kept general).
  for (int i = 0; i < rows; ++i)
    if (T[i][cols - 1] < 0)
      for (int j = 0; j < cols; ++j) T[i][j] = -T[i][j];
  for (int i = 0; i < rows; ++i) T[i][m + i] = 1;

  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = m + i;
  // Objective: minimize sum of artificials.  Reduced-cost row = c - colsums
  // over constraint rows (c = 1 on artificials, 0 on lambdas).
  for (int j = 0; j < cols; ++j) {
    Rat colsum = 0;
    for (int i = 0; i < rows; ++i) colsum += T[i][j];
    Rat c = (j >= m && j < m + rows) ? Rat(1) : Rat(0);
    T[rows][j] = c - colsum;
  }
  // rhs of the objective row holds -(current objective value).
  // (set above via the colsum of the rhs column with c = 0 there)

  while (true) {
    int enter = -1;
    for (int j = 0; j < cols - 1; ++j)
      if (T[rows][j] < 0) {
        enter = j;
        break;  // Bland: smallest index
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best_ratio = 0;
    for (int i = 0; i < rows; ++i) {
      if (T[i][enter] > 0) {
        Rat ratio = T[i][cols - 1] / T[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    QPKIT_REQUIRE(leave >= 0, "in_convex_hull: unbounded phase-I problem");
    // Pivot on (leave, enter).
    Rat piv = T[leave][enter];
    for (int j = 0; j < cols; ++j) T[leave][j] /= piv;
    for (int i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      Rat f = T[i][enter];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  return T[rows][cols - 1] == 0;  // objective value == 0
}

}  // namespace detail

// Is the exponent vector at index `idx` a vertex of the Newton polytope of
// the exponent set `all`?
inline bool is_newton_vertex(const std::vector<IntVec>& all, size_t idx) {
  std::vector<const IntVec*> others;
  others.reserve(all.size() - 1);
  for (size_t i = 0; i < all.size(); ++i)
    if (i != idx) others.push_back(&all[i]);
  return !detail::in_convex_hull(others, all[idx]);
}

// Sum, with coefficient 1, of the monomials at the vertices of the Newton
// polytope of F.  Preserves every tropical evaluation of F.
inline IntPolynomial newton_vertex_filter(const IntPolynomial& F) {
  QPKIT_REQUIRE(!F.is_zero(), "newton_vertex_filter: zero polynomial");
  std::vector<IntVec> expo;
  expo.reserve(F.terms.size());
  for (const auto& [e, c] : F.terms) expo.push_back(e);
  IntPolynomial out = IntPolynomial::zero(F.nvars);
  for (size_t i = 0; i < expo.size(); ++i)
    if (is_newton_vertex(expo, i)) out.add_term(expo[i], 1);
  return out;
}

}  // namespace qpkit
