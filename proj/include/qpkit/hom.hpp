#pragma once
// Homomorphism spaces between representations of one quiver (intertwiner
// tuples), the E-invariant family built from Hom dimensions and g-vectors,
// the lower bound for the E-invariant, and the numeric identities relating
// all of these across a mutation.

#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/potential.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/ratmat.hpp"
#include "qpkit/rep.hpp"
#include "qpkit/rep_mutate.hpp"

namespace qpkit {

namespace detail {

inline RatMat kron(const RatMat& A, const RatMat& B) {
  RatMat r(A.rows * B.rows, A.cols * B.cols);
  for (int i1 = 0; i1 < A.rows; ++i1)
    for (int j1 = 0; j1 < A.cols; ++j1) {
      const Rat& c = A.at(i1, j1);
      if (c == 0) continue;
      for (int i2 = 0; i2 < B.rows; ++i2)
        for (int j2 = 0; j2 < B.cols; ++j2)
          r.at(i1 * B.rows + i2, j1 * B.cols + j2) = c * B.at(i2, j2);
    }
  return r;
}

}  // namespace detail

struct HomSpace {
  int dim = 0;
  std::vector<std::vector<RatMat>> basis;  // per element: one matrix per vertex
};

// Solutions of phi_{h(a)} a_M = a_N phi_{t(a)} for all arrows, with
// phi_i: M(i) -> N(i).  The decorations play no role.
inline HomSpace hom_space(const Quiver& Q, const DecoratedRep& M,
                          const DecoratedRep& N) {
  validate_rep_shapes(Q, M);
  validate_rep_shapes(Q, N);
  const int n = Q.vertex_count();
  std::vector<int> off(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i)
    off[static_cast<size_t>(i) + 1] =
        off[static_cast<size_t>(i)] + M.dims[static_cast<size_t>(i)] *
                                          N.dims[static_cast<size_t>(i)];
  int rows = 0;
  for (int a = 0; a < Q.arrow_count(); ++a)
    rows += N.dims[static_cast<size_t>(Q.arrow(a).head)] *
            M.dims[static_cast<size_t>(Q.arrow(a).tail)];

  RatMat sys(rows, off[static_cast<size_t>(n)]);
  int row0 = 0;
  for (int a = 0; a < Q.arrow_count(); ++a) {
    int h = Q.arrow(a).head, t = Q.arrow(a).tail;
    const RatMat& ma = M.arrow_maps[static_cast<size_t>(a)];
    const RatMat& na = N.arrow_maps[static_cast<size_t>(a)];
    // vec(phi_h * ma) = (ma^T (x) I) vec(phi_h);
    // vec(na * phi_t) = (I (x) na) vec(phi_t).
    RatMat lhs = detail::kron(transpose(ma),
                              RatMat::identity(N.dims[static_cast<size_t>(h)]));
    RatMat rhs = detail::kron(RatMat::identity(M.dims[static_cast<size_t>(t)]),
                              na);
    set_block(sys, row0, off[static_cast<size_t>(h)], lhs);
    set_block(sys, row0, off[static_cast<size_t>(t)], Rat(-1) * rhs);
    row0 += lhs.rows;
  }

  RatMat K = kernel(sys);
  HomSpace hs;
  hs.dim = K.cols;
  for (int c = 0; c < K.cols; ++c) {
    std::vector<RatMat> tuple;
    for (int i = 0; i < n; ++i) {
      RatMat phi(N.dims[static_cast<size_t>(i)],
                 M.dims[static_cast<size_t>(i)]);
      for (int j = 0; j < phi.cols; ++j)
        for (int r = 0; r < phi.rows; ++r)
          phi.at(r, j) = K.at(off[static_cast<size_t>(i)] + j * phi.rows + r, c);
      tuple.push_back(phi);
    }
    hs.basis.push_back(std::move(tuple));
  }
  return hs;
}

inline long long hom_dim(const Quiver& Q, const DecoratedRep& M,
                         const DecoratedRep& N) {
  return hom_space(Q, M, N).dim;
}

struct EInvariants {
  long long hom = 0;            // dim Hom(M, N)
  long long hom_swapped = 0;    // dim Hom(N, M)
  long long e_inj = 0;          // hom + sum_i d_i(M) g_i(N)
  long long e_inj_swapped = 0;  // hom_swapped + sum_i d_i(N) g_i(M)
  long long e_sym = 0;          // e_inj + e_inj_swapped
};

inline EInvariants e_invariants(const QP& qp, const DecoratedRep& M,
                                const DecoratedRep& N) {
  EInvariants e;
  e.hom = hom_dim(qp.quiver, M, N);
  e.hom_swapped = hom_dim(qp.quiver, N, M);
  IntVec gm = rep_g_vector(qp, M);
  IntVec gn = rep_g_vector(qp, N);
  e.e_inj = e.hom;
  e.e_inj_swapped = e.hom_swapped;
  for (int i = 0; i < qp.quiver.vertex_count(); ++i) {
    e.e_inj += static_cast<long long>(M.dims[static_cast<size_t>(i)]) *
               gn[static_cast<size_t>(i)];
    e.e_inj_swapped += static_cast<long long>(N.dims[static_cast<size_t>(i)]) *
                       gm[static_cast<size_t>(i)];
  }
  e.e_sym = e.e_inj + e.e_inj_swapped;
  return e;
}

inline long long e_invariant(const QP& qp, const DecoratedRep& M) {
  EInvariants e = e_invariants(qp, M, M);
  QPKIT_REQUIRE(2 * e.e_inj == e.e_sym,
                "e_invariant: symmetrization inconsistency");
  return e.e_inj;
}

struct LowerBoundReport {
  long long e = 0;
  long long bound = 0;
  long long slack = 0;  // e - bound, nonnegative
};

// bound = sum_k nullity(beta_k) * dim(ker gamma_k / im beta_k)
//       + sum_k dim M(k) * dim V(k).
// The bound is required to hold; when e is zero the per-vertex degeneracy
// pattern forced by equality is also required.
inline LowerBoundReport lower_bound_check(const QP& qp,
                                          const DecoratedRep& M) {
  LowerBoundReport r;
  r.e = e_invariant(qp, M);
  for (int k = 0; k < qp.quiver.vertex_count(); ++k) {
    TriangleMaps t = triangle_maps(qp, M, k);
    long long null_beta = t.beta.cols - rank_of(t.beta);
    long long null_gamma = t.gamma.cols - rank_of(t.gamma);
    long long quot = null_gamma - rank_of(t.beta);  // ker gamma / im beta
    QPKIT_REQUIRE(quot >= 0, "lower_bound_check: triangle inconsistency");
    r.bound += null_beta * quot +
               static_cast<long long>(M.dims[static_cast<size_t>(k)]) *
                   M.dec_dims[static_cast<size_t>(k)];
    if (r.e == 0) {
      QPKIT_REQUIRE(M.dims[static_cast<size_t>(k)] == 0 ||
                        M.dec_dims[static_cast<size_t>(k)] == 0,
                    "lower_bound_check: zero invariant but module and "
                    "decoration overlap");
      QPKIT_REQUIRE(null_beta == 0 || quot == 0,
                    "lower_bound_check: zero invariant but out-map kernel "
                    "and quotient overlap");
    }
  }
  QPKIT_REQUIRE(r.e >= r.bound, "lower_bound_check: bound violated");
  r.slack = r.e - r.bound;
  return r;
}

// Checks, across one mutation at k, the conservation of
//   <M,N> + dim coker(alpha_{k;M}) * h_k(N),
// the difference formula for the directed E-invariant,
//   e_inj(mut M, mut N) - e_inj(M, N) = h_k(mut M) h_k(N) - h_k(M) h_k(mut N),
// the h-vector transition h_k(mut N) = h_k(N) - g_k(N), and the invariance
// of the symmetrized E-invariant.
inline bool hom_mutation_identity(const QP& qp, const DecoratedRep& M,
                                  const DecoratedRep& N, int k,
                                  std::string* why = nullptr,
                                  Rng* rng = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why += (why->empty() ? "" : "; ") + msg;
    return false;
  };
  RepMutationResult rm = mutate_rep(qp, M, k, rng);
  RepMutationResult rn = mutate_rep(qp, N, k, rng);
  QPKIT_REQUIRE(rm.qp.reduced.quiver == rn.qp.reduced.quiver &&
                    rm.qp.reduced.potential == rn.qp.reduced.potential,
                "hom_mutation_identity: mutation target mismatch");
  const QP& qpb = rm.qp.reduced;

  auto coker_alpha = [](const QP& q, const DecoratedRep& R, int v) {
    TriangleMaps t = triangle_maps(q, R, v);
    return static_cast<long long>(t.alpha.rows) - rank_of(t.alpha);
  };
  long long lhs = hom_dim(qp.quiver, M, N) +
                  coker_alpha(qp, M, k) *
                      rep_h_vector(qp, N)[static_cast<size_t>(k)];
  long long rhs =
      hom_dim(qpb.quiver, rm.reduced, rn.reduced) +
      coker_alpha(qpb, rm.reduced, k) *
          rep_h_vector(qpb, rn.reduced)[static_cast<size_t>(k)];
  bool ok = true;
  if (lhs != rhs)
    ok = fail("confined-hom conservation: " + std::to_string(lhs) +
              " != " + std::to_string(rhs));

  long long hm = rep_h_vector(qp, M)[static_cast<size_t>(k)];
  long long hn = rep_h_vector(qp, N)[static_cast<size_t>(k)];
  long long hmb = rep_h_vector(qpb, rm.reduced)[static_cast<size_t>(k)];
  long long hnb = rep_h_vector(qpb, rn.reduced)[static_cast<size_t>(k)];
  long long gn = rep_g_vector(qp, N)[static_cast<size_t>(k)];
  if (hnb != hn - gn)
    ok = fail("h-transition: " + std::to_string(hnb) +
              " != " + std::to_string(hn - gn));

  EInvariants before = e_invariants(qp, M, N);
  EInvariants after = e_invariants(qpb, rm.reduced, rn.reduced);
  if (after.e_inj - before.e_inj != hmb * hn - hm * hnb)
    ok = fail("directed difference: " +
              std::to_string(after.e_inj - before.e_inj) +
              " != " + std::to_string(hmb * hn - hm * hnb));
  if (after.e_sym != before.e_sym)
    ok = fail("symmetrized invariance: " + std::to_string(after.e_sym) +
              " != " + std::to_string(before.e_sym));
  return ok;
}

}  // namespace qpkit
