#pragma once
// Randomized isomorphism probe for decorated representations.  Certain
// verdicts (not_isomorphic) rest only on invariants; the isomorphic verdict
// comes from exhibiting an invertible intertwiner sampled from the Hom
// space.  Representations over two distinct quivers with identical arrow
// multiplicities are compared through the positional arrow matching, in
// which case mismatches beyond the dimension data stay inconclusive.

#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/hom.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/ratmat.hpp"
#include "qpkit/rep.hpp"
#include "qpkit/rng.hpp"

namespace qpkit {

enum class IsoVerdict { isomorphic, not_isomorphic, inconclusive };

inline std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::isomorphic: return "isomorphic";
    case IsoVerdict::not_isomorphic: return "not_isomorphic";
    default: return "inconclusive";
  }
}

// Match the arrows of two quivers with equal multiplicities by position
// within each parallel group (stored order); returns for each arrow of `a`
// the index of its partner in `b`, or an empty vector when the shapes
// differ.
inline std::vector<int> positional_arrow_matching(const Quiver& a,
                                                  const Quiver& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.arrow_count() != b.arrow_count())
    return {};
  std::vector<int> match;
  std::vector<bool> used(static_cast<size_t>(b.arrow_count()), false);
  for (int i = 0; i < a.arrow_count(); ++i) {
    int found = -1;
    for (int j = 0; j < b.arrow_count(); ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      if (b.arrow(j).tail == a.arrow(i).tail &&
          b.arrow(j).head == a.arrow(i).head) {
        found = j;
        break;
      }
    }
    if (found < 0) return {};
    used[static_cast<size_t>(found)] = true;
    match.push_back(found);
  }
  return match;
}

inline IsoVerdict iso_probe(const Quiver& QM, const DecoratedRep& M,
                            const Quiver& QN, const DecoratedRep& N,
                            int trials, Rng& rng) {
  if (M.dims != N.dims || M.dec_dims != N.dec_dims)
    return IsoVerdict::not_isomorphic;
  bool same_quiver = (QM == QN);
  std::vector<int> match = positional_arrow_matching(QM, QN);
  if (match.empty() && QM.arrow_count() > 0)
    return same_quiver ? IsoVerdict::not_isomorphic
                       : IsoVerdict::inconclusive;

  DecoratedRep Nm;  // N carried over to QM through the matching
  Nm.dims = N.dims;
  Nm.dec_dims = N.dec_dims;
  Nm.arrow_maps.resize(static_cast<size_t>(QM.arrow_count()));
  for (int i = 0; i < QM.arrow_count(); ++i)
    Nm.arrow_maps[static_cast<size_t>(i)] =
        N.arrow_maps[static_cast<size_t>(match[static_cast<size_t>(i)])];

  long long total = 0;
  for (int d : M.dims) total += d;
  HomSpace fwd = hom_space(QM, M, Nm);
  if (total == 0) return IsoVerdict::isomorphic;  // decorations already equal
  if (same_quiver) {
    long long bwd = hom_dim(QM, Nm, M);
    if (fwd.dim != bwd || fwd.dim == 0) return IsoVerdict::not_isomorphic;
  } else if (fwd.dim == 0) {
    return IsoVerdict::inconclusive;  // the matching itself may be at fault
  }

  for (int t = 0; t < trials; ++t) {
    std::vector<RatMat> cand;
    for (int i = 0; i < QM.vertex_count(); ++i)
      cand.emplace_back(M.dims[static_cast<size_t>(i)],
                        M.dims[static_cast<size_t>(i)]);
    for (const auto& elem : fwd.basis) {
      Rat c(rng.uniform(-3, 3));
      if (c == 0) continue;
      for (int i = 0; i < QM.vertex_count(); ++i)
        cand[static_cast<size_t>(i)] =
            cand[static_cast<size_t>(i)] + c * elem[static_cast<size_t>(i)];
    }
    bool invertible = true;
    for (const RatMat& m : cand)
      if (rank_of(m) != m.rows) {
        invertible = false;
        break;
      }
    if (invertible) return IsoVerdict::isomorphic;
  }
  return IsoVerdict::inconclusive;
}

inline IsoVerdict iso_probe(const Quiver& Q, const DecoratedRep& M,
                            const DecoratedRep& N, int trials, Rng& rng) {
  return iso_probe(Q, M, Q, N, trials, rng);
}

}  // namespace qpkit
