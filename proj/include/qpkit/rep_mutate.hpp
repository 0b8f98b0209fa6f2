#pragma once
// Mutation of decorated representations at a vertex.  The premutation
// rebuilds the space at the vertex from the triangle maps (kernel and image
// quotients chosen via explicit, optionally randomized, splittings); the
// full mutation then twists the premutated representation by the inverse of
// the reduction equivalence and restricts to the reduced quiver, where the
// split-off arrow pairs are forced to act by zero.

#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/potential.hpp"
#include "qpkit/qp_mutate.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/ratmat.hpp"
#include "qpkit/rep.hpp"
#include "qpkit/right_equiv.hpp"
#include "qpkit/rng.hpp"

namespace qpkit {

// Representation over premutate_qp(qp, k).  The space at k becomes
//   ker gamma / im beta  (+)  im gamma  (+)  ker alpha / im gamma  (+)  V(k)
// and the old decoration is absorbed into the module while the new
// decoration is ker beta / (ker beta intersect im alpha).  When a seeded
// generator is supplied the complement choices vary with the seed; the
// isomorphism class of the result does not.
inline DecoratedRep premutate_rep(const QP& qp, const DecoratedRep& M, int k,
                                  const QP& premutated, Rng* rng = nullptr) {
  const Quiver& Q = qp.quiver;
  const Quiver& Qt = premutated.quiver;
  validate_rep_shapes(Q, M);
  TriangleMaps t = triangle_maps(qp, M, k);
  const int m_in = t.alpha.cols;
  const int m_out = t.beta.rows;
  const int vk = M.dec_dims[static_cast<size_t>(k)];

  RatMat Kbeta = kernel(t.beta);
  RatMat Ialpha = column_space(t.alpha);
  const int vbar = rank_of(hconcat(Kbeta, Ialpha)) - rank_of(Ialpha);

  RatMat Ibeta = column_space(t.beta);
  RatMat Kgamma = kernel(t.gamma);
  RatMat C1 = complement_in(Ibeta, Kgamma, rng);
  RatMat Igamma = column_space(t.gamma);
  RatMat Kalpha = kernel(t.alpha);
  RatMat C3 = complement_in(Igamma, Kalpha, rng);
  RatMat D = complement_in(Kgamma, RatMat::identity(m_out), rng);

  const int c1 = C1.cols, rg = Igamma.cols, c3 = C3.cols;
  const int dk_new = c1 + rg + c3 + vk;

  // Projection onto the C1 coordinates in the basis (im beta, C1, D),
  // negated; and the coordinates of gamma in the basis of its image,
  // negated.
  RatMat T = hconcat(hconcat(Ibeta, C1), D);
  RatMat Tinv = inverse(T);
  RatMat block1 = -block_of(Tinv, Ibeta.cols, 0, c1, m_out);
  auto gcoords = solve_matrix(Igamma, t.gamma);
  QPKIT_REQUIRE(gcoords.has_value(), "premutate_rep: image coordinates");
  RatMat block2 = -*gcoords;

  RatMat alpha_bar(dk_new, m_out);
  set_block(alpha_bar, 0, 0, block1);
  set_block(alpha_bar, c1, 0, block2);
  RatMat beta_bar(m_in, dk_new);
  set_block(beta_bar, 0, c1, Igamma);
  set_block(beta_bar, 0, c1 + rg, C3);

  // Kernel and image of the new triangle legs at k.
  QPKIT_REQUIRE((alpha_bar * Ibeta).is_zero() &&
                    m_out - rank_of(alpha_bar) == Ibeta.cols,
                "premutate_rep: kernel of the new in-map is not im beta");
  QPKIT_REQUIRE(rank_of(alpha_bar) == c1 + rg,
                "premutate_rep: rank of the new in-map");
  QPKIT_REQUIRE((t.alpha * beta_bar).is_zero() &&
                    rank_of(beta_bar) == m_in - rank_of(t.alpha),
                "premutate_rep: image of the new out-map is not ker alpha");

  DecoratedRep R;
  R.dims = M.dims;
  R.dims[static_cast<size_t>(k)] = dk_new;
  R.dec_dims = M.dec_dims;
  R.dec_dims[static_cast<size_t>(k)] = vbar;
  R.arrow_maps.assign(static_cast<size_t>(Qt.arrow_count()), RatMat(0, 0));

  // The reversed arrows at k enumerate, in order, the old arrows on the
  // other side; the block structure of the new triangle legs relies on it.
  std::vector<int> nins = Qt.in_arrows(k);
  std::vector<int> nouts = Qt.out_arrows(k);
  QPKIT_REQUIRE(nins.size() == t.outs.size() && nouts.size() == t.ins.size(),
                "premutate_rep: reversed arrow count mismatch");
  for (size_t q = 0; q < nins.size(); ++q)
    QPKIT_REQUIRE(Qt.arrow(nins[q]).id == Q.arrow(t.outs[q]).id + "'",
                  "premutate_rep: reversed in-arrow order mismatch");
  for (size_t p = 0; p < nouts.size(); ++p)
    QPKIT_REQUIRE(Qt.arrow(nouts[p]).id == Q.arrow(t.ins[p]).id + "'",
                  "premutate_rep: reversed out-arrow order mismatch");

  for (const Arrow& a : Q.arrows())
    if (a.tail != k && a.head != k)
      R.arrow_maps[static_cast<size_t>(Qt.arrow_index(a.id))] =
          M.arrow_maps[static_cast<size_t>(Q.arrow_index(a.id))];
  for (int ai : t.ins)
    for (int bi : t.outs)
      R.arrow_maps[static_cast<size_t>(Qt.arrow_index(
          "[" + Q.arrow(bi).id + "." + Q.arrow(ai).id + "]"))] =
          M.arrow_maps[static_cast<size_t>(bi)] *
          M.arrow_maps[static_cast<size_t>(ai)];
  int off = 0;
  for (size_t p = 0; p < t.ins.size(); ++p) {
    int d = M.dims[static_cast<size_t>(Q.arrow(t.ins[p]).tail)];
    R.arrow_maps[static_cast<size_t>(
        Qt.arrow_index(Q.arrow(t.ins[p]).id + "'"))] =
        block_of(beta_bar, off, 0, d, dk_new);
    off += d;
  }
  off = 0;
  for (size_t q = 0; q < t.outs.size(); ++q) {
    int d = M.dims[static_cast<size_t>(Q.arrow(t.outs[q]).head)];
    R.arrow_maps[static_cast<size_t>(
        Qt.arrow_index(Q.arrow(t.outs[q]).id + "'"))] =
        block_of(alpha_bar, 0, off, dk_new, d);
    off += d;
  }

  validate_rep_shapes(Qt, R);
  std::string why;
  QPKIT_REQUIRE(check_relations(premutated, R, &why),
                "premutate_rep: result is not a representation (" + why + ")");
  TriangleMaps tb = triangle_maps(premutated, R, k);
  QPKIT_REQUIRE(tb.gamma == t.beta * t.alpha,
                "premutate_rep: new second-derivative map is not beta*alpha");
  return R;
}

struct RepMutationResult {
  QPMutationResult qp;      // premutated and reduced QP, equivalence, pairs
  DecoratedRep premutated;  // over qp.premutated
  DecoratedRep reduced;     // over qp.reduced
};

inline RepMutationResult mutate_rep(const QP& qp, const DecoratedRep& M,
                                    int k, Rng* rng = nullptr) {
  RepMutationResult out;
  out.qp = mutate_qp(qp, k);
  out.premutated = premutate_rep(qp, M, k, out.qp.premutated, rng);

  const Quiver& Qt = out.qp.premutated.quiver;
  RightEquivalence psi =
      invert_equivalence(Qt, qp.truncation, out.qp.phi);
  std::vector<RatMat> twisted(static_cast<size_t>(Qt.arrow_count()));
  for (int c = 0; c < Qt.arrow_count(); ++c)
    twisted[static_cast<size_t>(c)] =
        evaluate_pv(Qt, out.premutated, psi.images[static_cast<size_t>(c)],
                    Qt.arrow(c).head, Qt.arrow(c).tail);

  const Quiver& Qr = out.qp.reduced.quiver;
  for (int c = 0; c < Qt.arrow_count(); ++c)
    if (!Qr.has_arrow_id(Qt.arrow(c).id))
      QPKIT_REQUIRE(twisted[static_cast<size_t>(c)].is_zero(),
                    "mutate_rep: split-off arrow '" + Qt.arrow(c).id +
                        "' does not act by zero");

  DecoratedRep R;
  R.dims = out.premutated.dims;
  R.dec_dims = out.premutated.dec_dims;
  for (int c = 0; c < Qr.arrow_count(); ++c)
    R.arrow_maps.push_back(
        twisted[static_cast<size_t>(Qt.arrow_index(Qr.arrow(c).id))]);

  std::string why;
  QPKIT_REQUIRE(check_relations(out.qp.reduced, R, &why),
                "mutate_rep: reduced result is not a representation (" + why +
                    ")");
  out.reduced = R;
  return out;
}

}  // namespace qpkit
