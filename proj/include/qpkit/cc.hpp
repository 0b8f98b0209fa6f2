#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qpkit/cluster_expr.hpp"
#include "qpkit/common.hpp"
#include "qpkit/grassmann.hpp"
#include "qpkit/laurent.hpp"
#include "qpkit/polynomial.hpp"
#include "qpkit/potential.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/ratmat.hpp"
#include "qpkit/rep.hpp"

namespace qpkit {

// Cluster variable attached to a decorated representation, computed two ways:
//  (1) from invariant data, substituting yhat_j into the submodule generating
//      function F and shifting by the index vector, and
//  (2) when F != 1, directly as the weighted sum over dimension profiles
//        x^{v(e)} with
//        v(e)_i = -d_i - rk gamma_i
//                 + sum_j ([b_ij]_+ e_j + [-b_ij]_+ (d_j - e_j)),
//      whose coefficients are the Euler characteristics supplied by F.
// The two evaluations must agree; a mismatch throws.  F = 1 belongs to a
// negative simple (or the zero module), where only form (1) applies.
inline LaurentExpr cc_cluster_variable(const QP& qp, const DecoratedRep& M,
                                       const IntPolynomial& F) {
  const Quiver& Q = qp.quiver;
  const int n = Q.vertex_count();
  QPKIT_REQUIRE(F.nvars == n, "cc_cluster_variable: F has wrong variable count");
  QPKIT_REQUIRE(!Q.has_any_two_cycle(),
                "cc_cluster_variable: quiver must be free of 2-cycles so its "
                "arrow counts match the exchange matrix");
  validate_rep_shapes(Q, M);
  const IntMat B = matrix_of(Q);
  const IntVec g = rep_g_vector(qp, M);
  const LaurentExpr expr = cluster_variable_expr(F, g, B);
  if (F.is_one()) return expr;

  for (int i = 0; i < n; ++i) {
    QPKIT_REQUIRE(M.dec_dims[i] == 0,
                  "cc_cluster_variable: the profile-sum form needs a "
                  "representation without negative components");
  }
  std::vector<int> rk_gamma(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    rk_gamma[i] = rank_of(triangle_maps(qp, M, i).gamma);
  }
  // Consistency of the index vector with its closed form for positive
  // representations: g_i = sum_j [-b_ij]_+ d_j - rk gamma_i - d_i.
  for (int i = 0; i < n; ++i) {
    long long alt = -rk_gamma[i] - M.dims[i];
    for (int j = 0; j < n; ++j) alt += neg_part(B.at(i, j)) * M.dims[j];
    QPKIT_REQUIRE(g[i] == alt,
                  "cc_cluster_variable: index vector disagrees with its "
                  "closed form at vertex " + std::to_string(i + 1));
  }

  IntPolynomial acc = IntPolynomial::zero(n);
  for (const auto& [e, chi] : F.terms) {
    IntVec v(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      QPKIT_REQUIRE(e[i] >= 0 && e[i] <= M.dims[i],
                    "cc_cluster_variable: profile outside the dimension box");
      long long vi = -M.dims[i] - rk_gamma[i];
      for (int j = 0; j < n; ++j) {
        vi += pos_part(B.at(i, j)) * e[j] +
              neg_part(B.at(i, j)) * (M.dims[j] - e[j]);
      }
      v[i] = static_cast<int>(vi);
    }
    acc.add_term(v, chi);
  }
  QPKIT_REQUIRE(!acc.is_zero(), "cc_cluster_variable: profile sum vanished");
  const LaurentExpr direct = laurent_normalize(acc);
  QPKIT_REQUIRE(direct == expr,
                "cc_cluster_variable: profile-sum evaluation disagrees with "
                "the invariant-data expression");
  return expr;
}

inline LaurentExpr cc_cluster_variable(const QP& qp, const BasisMonomialRep& bm) {
  return cc_cluster_variable(qp, bm.rep,
                             f_poly_of(qp.quiver, bm.rep, bm.cert));
}

enum class WitnessStatus { found, absent, not_searched };

inline std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::found: return "found";
    case WitnessStatus::absent: return "absent";
    default: return "not_searched";
  }
}

// Result of comparing the denominator vector of a cluster-variable expression
// with the dimension vector of its representation.
struct DenominatorReport {
  IntVec denominator;  // exponent of x_i in the denominator (possibly < 0)
  IntVec dims;
  // Vertices where the denominator exponent equals the dimension.  For each,
  // we search the coordinate subrepresentations for a witness N with
  //   ker gamma_i inside N_out(i)   and   gamma_i(N_out(i)) = N_in(i),
  // the structure that forces equality to persist.  The search runs only when
  // the representation carries a grading certificate (otherwise coordinate
  // subsets need not exhaust the submodule varieties and the result would
  // mean nothing); `searched` records whether it ran.
  std::vector<int> equality_sites;
  std::vector<WitnessStatus> witness;
  bool searched = false;
};

namespace detail {

// Global basis index of local coordinate c in the block of `arrow_end`.
inline int global_basis_index(const std::vector<int>& off, int vertex, int c) {
  return off[vertex] + c;
}

inline bool witness_at_site(const Quiver& Q, const DecoratedRep& M,
                            const TriangleMaps& t,
                            const std::vector<int>& off,
                            const std::vector<std::uint32_t>& closed_masks) {
  // Map out/in coordinates of the triangle at `site` to global basis bits.
  std::vector<int> out_bit, in_bit;
  for (int b : t.outs) {
    const int v = Q.arrow(b).head;
    for (int c = 0; c < M.dims[v]; ++c)
      out_bit.push_back(global_basis_index(off, v, c));
  }
  for (int a : t.ins) {
    const int v = Q.arrow(a).tail;
    for (int c = 0; c < M.dims[v]; ++c)
      in_bit.push_back(global_basis_index(off, v, c));
  }
  const RatMat ker = kernel(t.gamma);
  for (std::uint32_t mask : closed_masks) {
    // ker gamma must live inside the selected out-coordinates.
    bool ok = true;
    for (int j = 0; j < ker.cols && ok; ++j) {
      for (int r = 0; r < ker.rows; ++r) {
        if (ker.at(r, j) != 0 && ((mask >> out_bit[r]) & 1u) == 0) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    // gamma of the selected out-coordinates must equal the span of the
    // selected in-coordinates.
    std::vector<int> sel;
    for (int c = 0; c < t.gamma.cols; ++c)
      if ((mask >> out_bit[c]) & 1u) sel.push_back(c);
    RatMat C(t.gamma.rows, static_cast<int>(sel.size()));
    for (size_t j = 0; j < sel.size(); ++j)
      for (int r = 0; r < t.gamma.rows; ++r)
        C.at(r, static_cast<int>(j)) = t.gamma.at(r, sel[j]);
    int selected_in = 0;
    bool inside = true;
    for (int r = 0; r < t.gamma.rows && inside; ++r) {
      const bool in_sel = ((mask >> in_bit[r]) & 1u) != 0;
      if (in_sel) {
        ++selected_in;
      } else {
        for (size_t j = 0; j < sel.size(); ++j) {
          if (C.at(r, static_cast<int>(j)) != 0) {
            inside = false;
            break;
          }
        }
      }
    }
    if (!inside) continue;
    if (rank_of(C) == selected_in) return true;
  }
  return false;
}

}  // namespace detail

inline DenominatorReport denominator_check(const QP& qp, const DecoratedRep& M,
                                           const LaurentExpr& x) {
  const Quiver& Q = qp.quiver;
  const int n = Q.vertex_count();
  validate_rep_shapes(Q, M);
  QPKIT_REQUIRE(static_cast<int>(x.denom_exponents.size()) == n,
                "denominator_check: variable count mismatch");
  DenominatorReport rep;
  rep.denominator = x.denom_exponents;
  rep.dims = M.dims;
  for (int i = 0; i < n; ++i) {
    QPKIT_REQUIRE(rep.denominator[i] <= M.dims[i],
                  "denominator_check: exponent bound violated at vertex " +
                      std::to_string(i + 1));
    if (rep.denominator[i] == M.dims[i] && M.dims[i] > 0) {
      rep.equality_sites.push_back(i);
    }
  }
  if (rep.equality_sites.empty()) {
    rep.searched = true;
    return rep;
  }
  const GradingCertificate cert = certify_basis_monomial(Q, M);
  if (!cert.ok) {
    rep.witness.assign(rep.equality_sites.size(), WitnessStatus::not_searched);
    return rep;
  }
  const detail::CoordinateEnumeration ce = detail::coordinate_enumeration(Q, M);
  std::vector<int> off(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) off[i + 1] = off[i] + M.dims[i];
  std::vector<std::uint32_t> closed;
  const std::uint64_t limit = std::uint64_t{1} << ce.total;
  for (std::uint64_t mask64 = 0; mask64 < limit; ++mask64) {
    const auto mask = static_cast<std::uint32_t>(mask64);
    bool is_closed = true;
    std::uint32_t scan = mask;
    while (scan != 0) {
      const int b = std::countr_zero(scan);
      scan &= scan - 1;
      if ((ce.need[b] & ~mask) != 0) {
        is_closed = false;
        break;
      }
    }
    if (is_closed) closed.push_back(mask);
  }
  rep.searched = true;
  for (int site : rep.equality_sites) {
    const TriangleMaps t = triangle_maps(qp, M, site);
    const bool hit = detail::witness_at_site(Q, M, t, off, closed);
    rep.witness.push_back(hit ? WitnessStatus::found : WitnessStatus::absent);
  }
  return rep;
}

}  // namespace qpkit
