#pragma once
// g-vector / F-polynomial / h-vector recurrences along words in the
// n-regular tree, for a skew-symmetric initial exchange matrix with
// principal tracking rows.
//
// State at the root: g_l = e_l, F_l = 1, h_l = 0, matrix = principal
// extension of the initial matrix.  Crossing an edge labelled k updates
// index k only:
//   g_k  <-  -g_k + sum_i [b_{i,k}]_+ g_i - sum_i [b_{n+i,k}]_+ b^0_i
//   F_k  <-  (prod_i u_i^{[b_{n+i,k}]_+} prod_i F_i^{[b_{i,k}]_+}
//             + prod_i u_i^{[-b_{n+i,k}]_+} prod_i F_i^{[-b_{i,k}]_+}) / F_k
// where b is the current extended matrix, b^0_i the i-th column of the
// initial matrix, and the division is exact.  h-vectors are tropical
// evaluations of the F-polynomials against the initial matrix.

#include <string>
#include <utility>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/matrix.hpp"
#include "qpkit/newton.hpp"
#include "qpkit/polynomial.hpp"
#include "qpkit/tree_word.hpp"

namespace qpkit {

struct SeedInvariants {
  std::vector<IntVec> g;         // n vectors of length n
  std::vector<IntPolynomial> f;  // n polynomials in u_1..u_n
  std::vector<IntVec> h;         // n vectors of length n

  friend bool operator==(const SeedInvariants&, const SeedInvariants&) = default;
};

// Exponent vector of the tropical evaluation of F under
//   u_i -> x_i^{-1} prod_{j != i} x_j^{[-b_{j,i}]_+}
// with b the initial exchange matrix.
inline IntVec h_vector_of(const IntPolynomial& F, const IntMat& B) {
  QPKIT_REQUIRE(B.rows == B.cols && B.rows == F.nvars,
                "h_vector_of: dimension mismatch");
  int n = B.rows;
  std::vector<IntVec> assign(n);
  for (int i = 0; i < n; ++i) {
    IntVec m = zero_vector(n);
    m[i] = -1;
    for (int j = 0; j < n; ++j)
      if (j != i) m[j] += neg_part(B.at(j, i));
    assign[i] = m;
  }
  return tropical_eval(F, assign);
}

// Walk engine: initial matrix plus the current vertex's state.
class SeedWalk {
 public:
  explicit SeedWalk(const IntMat& B, long long term_guard = 1000000)
      : b0_(B), matrix_(principal_extension(B)), term_guard_(term_guard) {
    QPKIT_REQUIRE(is_skew_symmetric(B), "SeedWalk: initial matrix not skew-symmetric");
    int n = B.rows;
    inv_.g.reserve(n);
    inv_.f.reserve(n);
    inv_.h.reserve(n);
    for (int l = 0; l < n; ++l) {
      inv_.g.push_back(unit_vector(n, l));
      inv_.f.push_back(IntPolynomial::one(n));
      inv_.h.push_back(zero_vector(n));
    }
  }

  int n() const { return b0_.rows; }
  const IntMat& initial_matrix() const { return b0_; }
  const ExtendedExchangeMatrix& matrix() const { return matrix_; }
  const SeedInvariants& invariants() const { return inv_; }

  // Cross the edge labelled k (0-based).
  void step(int k) {
    int nn = n();
    QPKIT_REQUIRE(0 <= k && k < nn, "SeedWalk::step: direction out of range");
    const IntMat& m = matrix_.entries;

    IntVec gk = scale_vector(-1, inv_.g[k]);
    for (int i = 0; i < nn; ++i) {
      int c = pos_part(m.at(i, k));
      if (c) gk = add_vectors(gk, scale_vector(c, inv_.g[i]));
      int d = pos_part(m.at(nn + i, k));
      if (d) gk = add_vectors(gk, scale_vector(-d, column_of(b0_, i)));
    }

    IntVec upos(nn), uneg(nn);
    for (int i = 0; i < nn; ++i) {
      upos[i] = pos_part(m.at(nn + i, k));
      uneg[i] = neg_part(m.at(nn + i, k));
    }
    IntPolynomial t1 = IntPolynomial::monomial(upos, 1);
    IntPolynomial t2 = IntPolynomial::monomial(uneg, 1);
    for (int i = 0; i < nn; ++i) {
      int e1 = pos_part(m.at(i, k));
      if (e1) t1 = t1 * pow_poly(inv_.f[i], e1);
      int e2 = neg_part(m.at(i, k));
      if (e2) t2 = t2 * pow_poly(inv_.f[i], e2);
    }
    IntPolynomial fk = exact_divide(t1 + t2, inv_.f[k]);
    QPKIT_REQUIRE(fk.term_count() <= term_guard_,
                  "SeedWalk::step: polynomial size guard exceeded");

    inv_.g[k] = gk;
    inv_.f[k] = fk;
    inv_.h[k] = h_vector_of(fk, b0_);
    matrix_ = mutate_matrix(matrix_, k);
  }

 private:
  static IntVec column_of(const IntMat& B, int j) {
    IntVec c(B.rows);
    for (int i = 0; i < B.rows; ++i) c[i] = static_cast<int>(B.at(i, j));
    return c;
  }

  IntMat b0_;
  ExtendedExchangeMatrix matrix_;
  SeedInvariants inv_;
  long long term_guard_;
};

// States at every vertex of the walk, root included (word.size()+1 entries).
inline std::vector<std::pair<ExtendedExchangeMatrix, SeedInvariants>>
invariants_along(const IntMat& B, const TreeWord& word,
                 long long term_guard = 1000000) {
  word.validate(B.rows);
  SeedWalk walk(B, term_guard);
  std::vector<std::pair<ExtendedExchangeMatrix, SeedInvariants>> out;
  out.reserve(word.size() + 1);
  out.emplace_back(walk.matrix(), walk.invariants());
  for (int k : word.labels) {
    walk.step(k);
    out.emplace_back(walk.matrix(), walk.invariants());
  }
  return out;
}

namespace detail {
inline void report_diff(std::string* why, const std::string& msg) {
  if (why) *why += (why->empty() ? "" : "; ") + msg;
}
}  // namespace detail

// One cluster variable seen from two adjacent roots joined by an edge
// labelled k: g/h with respect to the first root, gp/hp with respect to the
// second, B the first root's exchange matrix.  Checks
//   gp_k = -g_k,   gp_j = g_j + [b_{j,k}]_+ g_k - b_{j,k} h_k  (j != k),
//   g_k = h_k - hp_k.
inline bool check_transition(const IntVec& g, const IntVec& gp, const IntVec& h,
                             const IntVec& hp, const IntMat& B, int k,
                             std::string* why = nullptr) {
  int n = B.rows;
  QPKIT_REQUIRE(B.cols == n && static_cast<int>(g.size()) == n &&
                    static_cast<int>(gp.size()) == n &&
                    static_cast<int>(h.size()) == n &&
                    static_cast<int>(hp.size()) == n && 0 <= k && k < n,
                "check_transition: dimension mismatch");
  bool ok = true;
  for (int j = 0; j < n; ++j) {
    int expect = (j == k) ? -g[k]
                          : g[j] + pos_part(B.at(j, k)) * g[k] -
                                static_cast<int>(B.at(j, k)) * h[k];
    if (gp[j] != expect) {
      ok = false;
      detail::report_diff(why, "g'[" + std::to_string(j + 1) + "] = " +
                                   std::to_string(gp[j]) + ", expected " +
                                   std::to_string(expect));
    }
  }
  if (g[k] != h[k] - hp[k]) {
    ok = false;
    detail::report_diff(why, "g[k] = " + std::to_string(g[k]) +
                                 " != h[k] - h'[k] = " +
                                 std::to_string(h[k] - hp[k]));
  }
  return ok;
}

// Same transition with h_k replaced by min(g_k, 0): the form that only
// needs g-vectors.  Holds whenever h_k = min(g_k, 0).
inline bool check_transition_g_only(const IntVec& g, const IntVec& gp,
                                    const IntMat& B, int k,
                                    std::string* why = nullptr) {
  int n = B.rows;
  QPKIT_REQUIRE(B.cols == n && static_cast<int>(g.size()) == n &&
                    static_cast<int>(gp.size()) == n && 0 <= k && k < n,
                "check_transition_g_only: dimension mismatch");
  bool ok = true;
  int hk = std::min(g[k], 0);
  for (int j = 0; j < n; ++j) {
    int expect = (j == k) ? -g[k]
                          : g[j] + pos_part(B.at(j, k)) * g[k] -
                                static_cast<int>(B.at(j, k)) * hk;
    if (gp[j] != expect) {
      ok = false;
      detail::report_diff(why, "g'[" + std::to_string(j + 1) + "] = " +
                                   std::to_string(gp[j]) + ", expected " +
                                   std::to_string(expect));
    }
  }
  return ok;
}

}  // namespace qpkit
