#pragma once
// Duality: the opposite quiver with the reversed potential, and the dual
// representation with transposed arrow matrices.  The E-invariant is
// preserved, which is asserted on construction.

#include <algorithm>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/hom.hpp"
#include "qpkit/potential.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/rep.hpp"

namespace qpkit {

inline QP opposite_qp(const QP& qp) {
  Quiver Qo = opposite_quiver(qp.quiver);
  PathVector So;
  for (const auto& [p, c] : qp.potential) {
    Path r;
    r.word = p.word;
    std::reverse(r.word.begin(), r.word.end());
    for (int& a : r.word) a = Qo.arrow_index(qp.quiver.arrow(a).id);
    pv_add_term(So, r, c);
  }
  return make_qp(Qo, So, qp.truncation);
}

// Same spaces and decoration, transposed matrices, over the opposite QP.
inline DecoratedRep dual_rep(const QP& qp, const DecoratedRep& M,
                             const QP& opposite) {
  const Quiver& Q = qp.quiver;
  const Quiver& Qo = opposite.quiver;
  DecoratedRep R;
  R.dims = M.dims;
  R.dec_dims = M.dec_dims;
  R.arrow_maps.assign(static_cast<size_t>(Qo.arrow_count()), RatMat(0, 0));
  for (int a = 0; a < Q.arrow_count(); ++a)
    R.arrow_maps[static_cast<size_t>(Qo.arrow_index(Q.arrow(a).id))] =
        transpose(M.arrow_maps[static_cast<size_t>(a)]);
  std::string why;
  QPKIT_REQUIRE(check_relations(opposite, R, &why),
                "dual_rep: dual violates relations (" + why + ")");
  QPKIT_REQUIRE(e_invariant(opposite, R) == e_invariant(qp, M),
                "dual_rep: E-invariant not preserved");
  return R;
}

inline DecoratedRep dual_rep(const QP& qp, const DecoratedRep& M) {
  return dual_rep(qp, M, opposite_qp(qp));
}

}  // namespace qpkit
