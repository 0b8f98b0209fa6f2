#pragma once
// Potentials: rational combinations of cyclic paths up to cyclic
// equivalence, stored with every cycle rotated to its lexicographically
// least word.  Cyclic and second derivatives, the vertex matrix of second
// derivatives, and seeded random potentials.

#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/path.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/rng.hpp"

namespace qpkit {

inline bool path_is_cycle(const Quiver& Q, const Path& p) {
  return !p.is_lazy() && path_head(Q, p) == path_tail(Q, p);
}

namespace detail {

inline std::vector<int> rotate_word(const std::vector<int>& w, size_t r) {
  std::vector<int> out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + static_cast<long>(r), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(r));
  return out;
}

inline std::vector<int> least_rotation(const std::vector<int>& w) {
  std::vector<int> best = w;
  for (size_t r = 1; r < w.size(); ++r) {
    std::vector<int> cand = rotate_word(w, r);
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace detail

// Rotate every cycle to canonical form and merge.  Rejects non-cycles.
inline PathVector cyclic_normalize(const Quiver& Q, const PathVector& v) {
  PathVector r;
  for (const auto& [p, c] : v) {
    QPKIT_REQUIRE(path_is_cycle(Q, p),
                  "cyclic_normalize: non-cycle term " + to_string(Q, p));
    Path q;
    q.word = detail::least_rotation(p.word);
    pv_add_term(r, q, c);
  }
  return r;
}

inline bool cyclically_equal(const Quiver& Q, const PathVector& x,
                             const PathVector& y) {
  return cyclic_normalize(Q, x) == cyclic_normalize(Q, y);
}

// d/da: sum over occurrences of a in each cycle of the rotated remainder
// (the word following the occurrence wrapped around to the word before it).
// Every term has head t(a) and tail h(a).
inline PathVector cyclic_derivative(const Quiver& Q, const PathVector& S,
                                    int a) {
  PathVector r;
  for (const auto& [p, c] : S) {
    QPKIT_REQUIRE(path_is_cycle(Q, p), "cyclic_derivative: non-cycle term");
    const std::vector<int>& w = p.word;
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] != a) continue;
      Path rem;
      rem.word.insert(rem.word.end(), w.begin() + static_cast<long>(i) + 1,
                      w.end());
      rem.word.insert(rem.word.end(), w.begin(), w.begin() + static_cast<long>(i));
      if (rem.word.empty()) rem = Path::lazy(Q.arrow(a).tail);
      pv_add_term(r, rem, c);
    }
  }
  return r;
}

// Second derivative for composable b after a (h(a) = t(b)): each cycle is
// rotated so it does not begin with a, then every adjacent pair (b, a) in
// the word contributes the complementary word.  Every term has head t(a)
// and tail h(b).
inline PathVector second_derivative(const Quiver& Q, const PathVector& S,
                                    int b, int a) {
  QPKIT_REQUIRE(Q.arrow(a).head == Q.arrow(b).tail,
                "second_derivative: arrows do not meet");
  PathVector r;
  for (const auto& [p, c] : S) {
    QPKIT_REQUIRE(path_is_cycle(Q, p), "second_derivative: non-cycle term");
    size_t rot = 0;
    while (rot < p.word.size() && p.word[rot] == a) ++rot;
    QPKIT_REQUIRE(rot < p.word.size(),
                  "second_derivative: cycle consists of one arrow repeated");
    std::vector<int> w = detail::rotate_word(p.word, rot);
    for (size_t i = 1; i < w.size(); ++i) {
      if (w[i] != a || w[i - 1] != b) continue;
      Path rem;
      rem.word.insert(rem.word.end(), w.begin() + static_cast<long>(i) + 1,
                      w.end());
      if (i >= 2)
        rem.word.insert(rem.word.end(), w.begin(),
                        w.begin() + static_cast<long>(i) - 1);
      if (rem.word.empty()) rem = Path::lazy(Q.arrow(a).tail);
      pv_add_term(r, rem, c);
    }
  }
  return r;
}

// Matrix of second derivatives at a vertex: rows follow in_arrows(k), columns
// follow out_arrows(k); entry (p,q) is the second derivative for the pair
// (out-arrow q, in-arrow p).
inline std::vector<std::vector<PathVector>> h_matrix(const Quiver& Q,
                                                     const PathVector& S,
                                                     int k) {
  std::vector<int> ins = Q.in_arrows(k);
  std::vector<int> outs = Q.out_arrows(k);
  std::vector<std::vector<PathVector>> m(ins.size());
  for (size_t p = 0; p < ins.size(); ++p) {
    m[p].resize(outs.size());
    for (size_t q = 0; q < outs.size(); ++q)
      m[p][q] = second_derivative(Q, S, outs[q], ins[p]);
  }
  return m;
}

inline bool is_reduced_potential(const PathVector& S) {
  return S.empty() || pv_min_degree(S) >= 3;
}

// A quiver with a potential, plus the truncation order for all path
// computations.  The potential is stored in cyclic normal form with every
// term of length < truncation.
struct QP {
  Quiver quiver;
  PathVector potential;
  int truncation = 10;
};

inline QP make_qp(const Quiver& quiver, const PathVector& potential,
                  int truncation) {
  QPKIT_REQUIRE(truncation >= 2, "make_qp: truncation too small");
  QP qp;
  qp.quiver = quiver;
  qp.potential = pv_truncate(cyclic_normalize(quiver, potential), truncation);
  qp.truncation = truncation;
  for (const auto& [p, c] : qp.potential)
    QPKIT_REQUIRE(path_is_valid(quiver, p), "make_qp: invalid path in potential");
  return qp;
}

// One canonical representative per cyclic word class of length 2..max_degree,
// each with an independent nonzero coefficient in [-3, 3] from the seeded
// generator.  Deterministic for a fixed quiver and seed.
inline PathVector random_potential(const Quiver& Q, int max_degree, Rng& rng) {
  PathVector S;
  std::vector<int> word;
  // Depth-first over composable words in increasing arrow order; keep cycles
  // whose word is its own least rotation (one representative per class).
  auto rec = [&](auto&& self, int first_head) -> void {
    if (!word.empty() && static_cast<int>(word.size()) >= 2 &&
        Q.arrow(word.back()).tail == first_head &&
        word == detail::least_rotation(word)) {
      Path p;
      p.word = word;
      pv_add_term(S, p, Rat(rng.nonzero(3)));
    }
    if (static_cast<int>(word.size()) >= max_degree) return;
    int attach = word.empty() ? -1 : Q.arrow(word.back()).tail;
    for (int a = 0; a < Q.arrow_count(); ++a) {
      if (!word.empty() && Q.arrow(a).head != attach) continue;
      word.push_back(a);
      self(self, word.empty() ? 0 : first_head);
      word.pop_back();
    }
  };
  for (int a0 = 0; a0 < Q.arrow_count(); ++a0) {
    word.assign(1, a0);
    rec(rec, Q.arrow(a0).head);
    word.clear();
  }
  return cyclic_normalize(Q, S);
}

}  // namespace qpkit
