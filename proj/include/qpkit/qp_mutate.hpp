#pragma once
// Mutation of a quiver with potential at a vertex.  The first stage rewires
// the quiver (composite arrows through the vertex plus reversed arrows) and
// rewrites the potential; the second stage splits off all two-arrow cycles
// by an explicit right-equivalence, leaving a reduced quiver with potential
// of minimum degree three.

#include <string>
#include <utility>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/path.hpp"
#include "qpkit/potential.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/ratmat.hpp"
#include "qpkit/right_equiv.hpp"

namespace qpkit {

namespace detail {

inline PathVector apply_to_potential(const Quiver& Q, int N,
                                     const RightEquivalence& phi,
                                     const PathVector& S) {
  return pv_truncate(cyclic_normalize(Q, apply_equivalence(Q, N, phi, S)), N);
}

}  // namespace detail

// Rewire at k and rewrite the potential.  Arrows not touching k are kept
// with their ids; each composable pair (a into k, b out of k) becomes a
// composite arrow "[b.a]" from t(a) to h(b); every arrow touching k is
// replaced by a reversed arrow with a trailing apostrophe.  The potential
// becomes the rewritten old potential (composable pairs through k collapsed
// into composites) plus one unit 3-cycle "[b.a] a' b'" per pair.
inline QP premutate_qp(const QP& qp, int k) {
  const Quiver& Q = qp.quiver;
  QPKIT_REQUIRE(0 <= k && k < Q.vertex_count(), "premutate_qp: bad vertex");
  QPKIT_REQUIRE(!Q.has_two_cycle_through(k),
                "premutate_qp: two-arrow cycle through the mutation vertex");

  std::vector<int> ins = Q.in_arrows(k);
  std::vector<int> outs = Q.out_arrows(k);

  Quiver Qt(Q.vertex_count());
  for (const Arrow& a : Q.arrows())
    if (a.tail != k && a.head != k) Qt.add_arrow(a.id, a.tail, a.head);
  for (int ai : ins)
    for (int bi : outs)
      Qt.add_arrow("[" + Q.arrow(bi).id + "." + Q.arrow(ai).id + "]",
                   Q.arrow(ai).tail, Q.arrow(bi).head);
  // Reversed arrows, inserted in the old enumeration order so that the new
  // in/out enumerations at k match the old out/in enumerations entrywise.
  for (int ai : ins) Qt.add_arrow(Q.arrow(ai).id + "'", k, Q.arrow(ai).tail);
  for (int bi : outs) Qt.add_arrow(Q.arrow(bi).id + "'", Q.arrow(bi).head, k);

  PathVector St;
  for (const auto& [p, c] : qp.potential) {
    const std::vector<int>& w = p.word;
    // Rotate so the cycle does not pass through k between the last and
    // first letters; a rotation with h(w[r]) != k always exists (no loops).
    size_t rot = 0;
    while (rot < w.size() && Q.arrow(w[rot]).head == k) ++rot;
    QPKIT_REQUIRE(rot < w.size(), "premutate_qp: cycle stuck at the vertex");
    std::vector<int> wr = detail::rotate_word(w, rot);
    Path np;
    for (size_t i = 0; i < wr.size(); ++i) {
      const Arrow& cur = Q.arrow(wr[i]);
      if (cur.tail == k) {
        QPKIT_REQUIRE(i + 1 < wr.size() && Q.arrow(wr[i + 1]).head == k,
                      "premutate_qp: unmatched arrow at the vertex");
        np.word.push_back(Qt.arrow_index(
            "[" + cur.id + "." + Q.arrow(wr[i + 1]).id + "]"));
        ++i;
      } else {
        QPKIT_REQUIRE(cur.head != k, "premutate_qp: unmatched arrow");
        np.word.push_back(Qt.arrow_index(cur.id));
      }
    }
    pv_add_term(St, np, c);
  }
  for (int ai : ins)
    for (int bi : outs) {
      Path tri;
      tri.word = {
          Qt.arrow_index("[" + Q.arrow(bi).id + "." + Q.arrow(ai).id + "]"),
          Qt.arrow_index(Q.arrow(ai).id + "'"),
          Qt.arrow_index(Q.arrow(bi).id + "'")};
      pv_add_term(St, tri, Rat(1));
    }
  return make_qp(Qt, St, qp.truncation);
}

struct SplitReduceResult {
  QP reduced;                       // two-arrow cycles and their arrows removed
  int trivial_pairs = 0;            // number of split-off two-arrow cycles
  RightEquivalence phi;             // over the input quiver; phi(S) is the
                                    // unit two-arrow cycles plus the reduced
                                    // potential, up to rotation
};

// Split the potential into a sum of unit two-arrow cycles on a maximal set
// of arrow pairs and a remainder of degree >= 3 not touching those pairs.
// Stage one normalizes the degree-2 coefficient block per vertex pair by an
// invertible linear change of arrows; stage two removes the paired arrows
// from all longer terms, one arrow at a time from the lowest degree up, by
// substitutions that cancel exactly against the unit cycles.
inline SplitReduceResult split_reduce(const QP& qp) {
  const Quiver& Q = qp.quiver;
  const int N = qp.truncation;
  PathVector S = qp.potential;
  RightEquivalence phi = identity_equivalence(Q);
  std::vector<std::pair<int, int>> pairs;  // (x: i->j, y: j->i), i < j

  // Stage one: per vertex pair, bring the two-arrow-cycle coefficients to
  // rank normal form.
  for (int i = 0; i < Q.vertex_count(); ++i)
    for (int j = i + 1; j < Q.vertex_count(); ++j) {
      std::vector<int> xs, ys;
      for (int a = 0; a < Q.arrow_count(); ++a) {
        if (Q.arrow(a).tail == i && Q.arrow(a).head == j) xs.push_back(a);
        if (Q.arrow(a).tail == j && Q.arrow(a).head == i) ys.push_back(a);
      }
      if (xs.empty() || ys.empty()) continue;
      RatMat C(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
      for (size_t s = 0; s < xs.size(); ++s)
        for (size_t t = 0; t < ys.size(); ++t) {
          Path p;
          p.word = detail::least_rotation({xs[s], ys[t]});
          auto it = S.find(p);
          if (it != S.end()) C.at(static_cast<int>(s), static_cast<int>(t)) =
              it->second;
        }
      RankNormalForm f = rank_normal_form(C);
      if (f.rank == 0) continue;
      RightEquivalence psi = identity_equivalence(Q);
      for (size_t s = 0; s < xs.size(); ++s) {
        PathVector img;
        for (size_t sp = 0; sp < xs.size(); ++sp)
          pv_add_term(img, Path::of_arrow(xs[sp]),
                      f.p.at(static_cast<int>(sp), static_cast<int>(s)));
        psi.images[static_cast<size_t>(xs[s])] = img;
      }
      for (size_t t = 0; t < ys.size(); ++t) {
        PathVector img;
        for (size_t tp = 0; tp < ys.size(); ++tp)
          pv_add_term(img, Path::of_arrow(ys[tp]),
                      f.q.at(static_cast<int>(t), static_cast<int>(tp)));
        psi.images[static_cast<size_t>(ys[t])] = img;
      }
      S = detail::apply_to_potential(Q, N, psi, S);
      phi = compose_equivalence(Q, N, psi, phi);
      for (int v = 0; v < f.rank; ++v)
        pairs.emplace_back(xs[static_cast<size_t>(v)],
                           ys[static_cast<size_t>(v)]);
    }

  std::vector<bool> is_paired(static_cast<size_t>(Q.arrow_count()), false);
  for (const auto& [x, y] : pairs) is_paired[x] = is_paired[y] = true;
  auto check_degree_two = [&]() {
    PathVector expect;
    for (const auto& [x, y] : pairs) {
      Path p;
      p.word = detail::least_rotation({x, y});
      pv_add_term(expect, p, Rat(1));
    }
    QPKIT_REQUIRE(pv_degree_part(S, 2) == expect,
                  "split_reduce: degree-2 part not in split form");
  };
  check_degree_two();

  // Stage two.
  auto touches_pair = [&](const Path& p) {
    for (int a : p.word)
      if (is_paired[static_cast<size_t>(a)]) return true;
    return false;
  };
  auto min_long_degree = [&]() {
    int d = -1;
    for (const auto& [p, c] : S)
      if (p.length() >= 3 && touches_pair(p)) {
        d = p.length();  // PathLess orders by length, first hit is minimal
        break;
      }
    return d;
  };
  // One substitution: replace `target` by itself minus the rotated
  // remainders of every degree-d term containing `probe`, the rotation
  // chosen so the cancellation against the unit cycle "target probe" (or
  // "probe target") is exact.
  auto eliminate = [&](int probe, int target, int d, bool probe_front) {
    PathVector theta;
    for (const auto& [p, c] : S) {
      if (p.length() != d) continue;
      size_t pos = p.word.size();
      for (size_t u = 0; u < p.word.size(); ++u)
        if (p.word[u] == probe) {
          pos = u;
          break;
        }
      if (pos == p.word.size()) continue;
      std::vector<int> w = detail::rotate_word(
          p.word, probe_front ? pos : (pos + 1) % p.word.size());
      Path rest;
      if (probe_front)
        rest.word.assign(w.begin() + 1, w.end());
      else
        rest.word.assign(w.begin(), w.end() - 1);
      pv_add_term(theta, rest, c);
    }
    if (theta.empty()) return;
    RightEquivalence psi = identity_equivalence(Q);
    psi.images[static_cast<size_t>(target)] =
        pv_add(pv_of(Path::of_arrow(target)), pv_scale(Rat(-1), theta));
    S = detail::apply_to_potential(Q, N, psi, S);
    phi = compose_equivalence(Q, N, psi, phi);
  };

  for (int pass = 0; pass <= N + 2; ++pass) {
    int d = min_long_degree();
    if (d < 0) break;
    QPKIT_REQUIRE(pass <= N + 1, "split_reduce: reduction did not terminate");
    for (const auto& [x, y] : pairs) {
      eliminate(x, y, d, /*probe_front=*/true);   // degree-d terms with x
      eliminate(y, x, d, /*probe_front=*/false);  // remaining ones with y
    }
    for (const auto& [p, c] : S)
      QPKIT_REQUIRE(p.length() != d || !touches_pair(p),
                    "split_reduce: a term survived its elimination pass");
    check_degree_two();
  }

  QPKIT_REQUIRE(detail::apply_to_potential(Q, N, phi, qp.potential) == S,
                "split_reduce: accumulated equivalence does not reproduce "
                "the split potential");

  // Assemble the reduced quiver with potential on the unpaired arrows.
  Quiver Qr(Q.vertex_count());
  std::vector<int> remap(static_cast<size_t>(Q.arrow_count()), -1);
  for (int a = 0; a < Q.arrow_count(); ++a)
    if (!is_paired[static_cast<size_t>(a)])
      remap[static_cast<size_t>(a)] =
          Qr.add_arrow(Q.arrow(a).id, Q.arrow(a).tail, Q.arrow(a).head);
  // add_arrow keeps (tail, head, insertion) order, and insertion follows the
  // stored order of Q, so indices of kept arrows are order-preserving.
  PathVector Sr;
  for (const auto& [p, c] : S) {
    if (p.length() == 2 && touches_pair(p)) continue;
    Path np;
    for (int a : p.word) {
      QPKIT_REQUIRE(remap[static_cast<size_t>(a)] >= 0,
                    "split_reduce: paired arrow left in the remainder");
      np.word.push_back(remap[static_cast<size_t>(a)]);
    }
    pv_add_term(Sr, np, c);
  }

  SplitReduceResult out;
  out.reduced = make_qp(Qr, Sr, N);
  out.trivial_pairs = static_cast<int>(pairs.size());
  out.phi = phi;
  return out;
}

struct QPMutationResult {
  QP premutated;
  QP reduced;
  RightEquivalence phi;  // over premutated.quiver
  int trivial_pairs = 0;
};

inline QPMutationResult mutate_qp(const QP& qp, int k) {
  QPMutationResult out;
  out.premutated = premutate_qp(qp, k);
  SplitReduceResult sr = split_reduce(out.premutated);
  out.reduced = std::move(sr.reduced);
  out.phi = std::move(sr.phi);
  out.trivial_pairs = sr.trivial_pairs;
  return out;
}

}  // namespace qpkit
