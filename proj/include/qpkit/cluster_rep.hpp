#pragma once
// Representations attached to cluster variables: mutate the QP forward
// along a vertex word, plant a negative simple at the far end, and mutate
// the representation back along the reversed word.  Because the double
// mutation of a QP reproduces the original only up to right-equivalence,
// the result lives over the deterministic return-chain QP, which shares
// the vertex indexing and the exchange matrix of the starting QP and is
// returned alongside the representation.

#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/matrix.hpp"
#include "qpkit/potential.hpp"
#include "qpkit/qp_mutate.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/rep.hpp"
#include "qpkit/rep_mutate.hpp"
#include "qpkit/rng.hpp"
#include "qpkit/tree_word.hpp"

namespace qpkit {

struct ClusterRepResult {
  DecoratedRep rep;  // over final_qp
  QP final_qp;       // right-equivalent to the input QP, same matrix
};

inline ClusterRepResult build_cluster_rep(const QP& qp0,
                                          const std::vector<int>& word,
                                          int ell, Rng* rng = nullptr) {
  QPKIT_REQUIRE(0 <= ell && ell < qp0.quiver.vertex_count(),
                "build_cluster_rep: bad vertex");
  std::vector<QP> chain{qp0};
  for (size_t i = 0; i < word.size(); ++i) {
    try {
      chain.push_back(mutate_qp(chain.back(), word[i]).reduced);
    } catch (const error& e) {
      throw error("build_cluster_rep: mutation failed after word prefix of "
                  "length " +
                  std::to_string(i) + " at vertex " +
                  std::to_string(word[i] + 1) + ": " + e.what());
    }
  }

  DecoratedRep rep = negative_simple_rep(chain.back().quiver, ell);
  QP cur = chain.back();
  for (size_t i = word.size(); i-- > 0;) {
    RepMutationResult r = mutate_rep(cur, rep, word[i], rng);
    rep = r.reduced;
    cur = r.qp.reduced;
  }

  QPKIT_REQUIRE(matrix_of(cur.quiver) == matrix_of(qp0.quiver),
                "build_cluster_rep: return chain changed the matrix");
  ClusterRepResult out;
  out.rep = rep;
  out.final_qp = cur;
  return out;
}

inline ClusterRepResult build_cluster_rep(const QP& qp0, const TreeWord& word,
                                          int ell, Rng* rng = nullptr) {
  return build_cluster_rep(qp0, word.labels, ell, rng);
}

}  // namespace qpkit
