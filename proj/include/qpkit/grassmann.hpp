#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/polynomial.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/ratmat.hpp"
#include "qpkit/rep.hpp"

namespace qpkit {

// Certificate that coordinate subrepresentations carry all of the
// Euler-characteristic information of the submodule varieties of a
// representation.  We exhibit a one-parameter torus action scaling basis
// vector b by t^{weights[b]} such that
//   (a) each arrow map is homogeneous: conjugation rescales it by the single
//       power t^{-drop}, so the action maps submodules to submodules and
//       preserves dimension profiles, and
//   (b) the fixed points are isolated and are exactly the coordinate
//       subspaces: weights within each vertex are pairwise distinct, arrow
//       matrices are partial permutations, and every drop is >= 1.
// Euler characteristic is then computed by counting fixed points: chi of the
// profile-e submodule variety equals the number of arrow-closed coordinate
// subsets with profile e.
struct GradingCertificate {
  bool ok = false;
  std::string reason;                           // set when !ok
  std::vector<std::vector<long long>> weights;  // per vertex, per basis index
  std::vector<long long> drops;                 // per arrow (0 for zero maps)
};

namespace detail {

struct BasisEdge {
  int src = 0;    // global basis index at the tail vertex
  int dst = 0;    // global basis index at the head vertex
  int arrow = 0;  // arrow index in the quiver
  int slot = 0;   // compact index of the arrow among arrows with entries
};

// Clear denominators of a column vector; false when entries get too large to
// hold in long long.
inline bool integerize_column(const RatMat& col, std::vector<long long>* out) {
  namespace mp = boost::multiprecision;
  Int common(1);
  for (int i = 0; i < col.rows; ++i) {
    common = mp::lcm(common, Int(mp::denominator(col.at(i, 0))));
  }
  out->assign(static_cast<size_t>(col.rows), 0);
  const Int bound = Int(1) << 40;
  for (int i = 0; i < col.rows; ++i) {
    const Int v = Int(mp::numerator(col.at(i, 0))) *
                  (common / Int(mp::denominator(col.at(i, 0))));
    if (v >= bound || v <= -bound) return false;
    (*out)[i] = v.convert_to<long long>();
  }
  return true;
}

inline RatMat power_column(int rows, long long mu) {
  RatMat p(rows, 1);
  Rat acc(1);
  for (int i = 0; i < rows; ++i) {
    p.at(i, 0) = acc;
    acc *= mu;
  }
  return p;
}

}  // namespace detail

// Attempts to build a GradingCertificate.  Structural failures (entries other
// than 0/1, doubled rows or columns, a cycle in the basis digraph) and an
// unsuccessful weight search all return ok = false with a reason; they never
// throw.
inline GradingCertificate certify_basis_monomial(const Quiver& Q,
                                                 const DecoratedRep& M) {
  validate_rep_shapes(Q, M);
  GradingCertificate cert;
  const int n = Q.vertex_count();
  std::vector<int> off(n + 1, 0);
  for (int i = 0; i < n; ++i) off[i + 1] = off[i] + static_cast<int>(M.dims[i]);
  const int total = off[n];
  cert.drops.assign(static_cast<size_t>(Q.arrow_count()), 0);

  // Partial-permutation check; collect one basis-digraph edge per entry.
  std::vector<detail::BasisEdge> edges;
  std::vector<int> slot_of(static_cast<size_t>(Q.arrow_count()), -1);
  int slots = 0;
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const Arrow& ar = Q.arrow(a);
    const RatMat& m = M.arrow_maps[a];
    bool any = false;
    std::vector<char> row_used(static_cast<size_t>(m.rows), 0);
    std::vector<char> col_used(static_cast<size_t>(m.cols), 0);
    for (int r = 0; r < m.rows; ++r) {
      for (int c = 0; c < m.cols; ++c) {
        const Rat v = m.at(r, c);
        if (v == 0) continue;
        if (v != 1) {
          cert.reason = "arrow " + ar.id + " has an entry other than 0 and 1";
          return cert;
        }
        if (row_used[r] || col_used[c]) {
          cert.reason = "arrow " + ar.id +
                        " has two entries in one row or column";
          return cert;
        }
        row_used[r] = col_used[c] = 1;
        any = true;
        edges.push_back({off[ar.tail] + c, off[ar.head] + r, a, 0});
      }
    }
    if (any) slot_of[a] = slots++;
  }
  for (auto& e : edges) e.slot = slot_of[e.arrow];

  // Acyclicity of the basis digraph (Kahn's algorithm).
  {
    std::vector<int> indeg(static_cast<size_t>(total), 0);
    for (const auto& e : edges) ++indeg[e.dst];
    std::vector<int> queue;
    for (int b = 0; b < total; ++b)
      if (indeg[b] == 0) queue.push_back(b);
    int removed = 0;
    while (!queue.empty()) {
      const int b = queue.back();
      queue.pop_back();
      ++removed;
      for (const auto& e : edges) {
        if (e.src == b && --indeg[e.dst] == 0) queue.push_back(e.dst);
      }
    }
    if (removed != total) {
      cert.reason = "basis digraph has a directed cycle";
      return cert;
    }
  }

  // Weight search.  Unknowns: one weight per basis vector plus one drop per
  // arrow with entries; homogeneity means w[src] - w[dst] - drop = 0 on every
  // edge.  We take a particular solution with all drops equal to 1 when one
  // exists, add a generic element of the homogeneous kernel to separate
  // weights within each vertex, and pick the uniform-drop multiplier C large
  // enough to keep every drop >= 1.  When no uniform-drop solution exists we
  // fall back to a generic kernel element alone, accepted if its drops all
  // come out with one strict sign.
  const int unknowns = total + slots;
  RatMat full(static_cast<int>(edges.size()), unknowns);
  RatMat weight_only(static_cast<int>(edges.size()), total);
  RatMat ones(static_cast<int>(edges.size()), 1);
  for (size_t r = 0; r < edges.size(); ++r) {
    const auto& e = edges[r];
    const int ri = static_cast<int>(r);
    full.at(ri, e.src) += 1;
    full.at(ri, e.dst) += -1;
    full.at(ri, total + e.slot) += -1;
    weight_only.at(ri, e.src) += 1;
    weight_only.at(ri, e.dst) += -1;
    ones.at(ri, 0) = 1;
  }
  const RatMat null_space = kernel(full);
  const std::optional<RatMat> uniform = solve_matrix(weight_only, ones);

  std::vector<std::pair<int, int>> pairs;  // same-vertex basis index pairs
  for (int i = 0; i < n; ++i)
    for (int p = off[i]; p < off[i + 1]; ++p)
      for (int q = p + 1; q < off[i + 1]; ++q) pairs.emplace_back(p, q);

  auto accept = [&](const std::vector<long long>& x) -> bool {
    for (const auto& e : edges) {
      const long long drop = x[e.src] - x[e.dst];
      if (drop < 1 || drop != x[static_cast<size_t>(total) + e.slot]) return false;
    }
    for (const auto& [p, q] : pairs) {
      if (x[p] == x[q]) return false;
    }
    cert.weights.assign(static_cast<size_t>(n), {});
    for (int i = 0; i < n; ++i) {
      cert.weights[i].assign(x.begin() + off[i], x.begin() + off[i + 1]);
    }
    for (int a = 0; a < Q.arrow_count(); ++a) {
      if (slot_of[a] >= 0) cert.drops[a] = x[static_cast<size_t>(total) + slot_of[a]];
    }
    cert.ok = true;
    return true;
  };

  static const long long kMus[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                   29, 31, 37, 41, 43, 47, 53, 59, 61};
  for (long long mu : kMus) {
    RatMat generic(unknowns, 1);
    if (null_space.cols > 0) {
      generic = null_space * detail::power_column(null_space.cols, mu);
    }
    if (uniform) {
      // Candidate C*x0 + generic with x0 = (uniform weights, all drops 1).
      RatMat x0(unknowns, 1);
      for (int b = 0; b < total; ++b) x0.at(b, 0) = uniform->at(b, 0);
      for (int s = 0; s < slots; ++s) x0.at(total + s, 0) = 1;
      bool feasible = true;
      std::vector<Rat> bad_c;
      for (const auto& [p, q] : pairs) {
        const Rat dw = x0.at(p, 0) - x0.at(q, 0);
        const Rat dv = generic.at(p, 0) - generic.at(q, 0);
        if (dw == 0) {
          if (dv == 0) {
            feasible = false;  // this mu cannot separate the pair
            break;
          }
        } else {
          bad_c.push_back(-dv / dw);
        }
      }
      if (!feasible) continue;
      Rat min_delta(0);
      for (int s = 0; s < slots; ++s) {
        min_delta = std::min(min_delta, Rat(generic.at(total + s, 0)));
      }
      // Smallest integer C with C + min_delta >= 1, skipping collisions.
      long long c = 1;
      {
        const Rat need = Rat(1) - min_delta;
        while (Rat(c) < need) ++c;
      }
      auto collides = [&](long long cc) {
        for (const Rat& b : bad_c)
          if (Rat(cc) == b) return true;
        return false;
      };
      while (collides(c)) ++c;
      RatMat x = Rat(c) * x0 + generic;
      std::vector<long long> xi;
      if (detail::integerize_column(x, &xi) && accept(xi)) return cert;
    } else {
      std::vector<long long> xi;
      if (!detail::integerize_column(generic, &xi)) continue;
      bool pos = slots > 0, neg = slots > 0;
      for (int s = 0; s < slots; ++s) {
        if (xi[static_cast<size_t>(total) + s] <= 0) pos = false;
        if (xi[static_cast<size_t>(total) + s] >= 0) neg = false;
      }
      if (neg) {
        for (auto& v : xi) v = -v;
        pos = true;
      }
      if (pos && accept(xi)) return cert;
    }
  }
  cert.reason = "no homogeneous weight system with distinct vertex weights and "
                "strictly positive drops was found";
  return cert;
}

// A representation packaged with a successful grading certificate.
struct BasisMonomialRep {
  DecoratedRep rep;
  GradingCertificate cert;
};

inline BasisMonomialRep basis_monomial_rep(const Quiver& Q,
                                           const DecoratedRep& M) {
  GradingCertificate cert = certify_basis_monomial(Q, M);
  QPKIT_REQUIRE(cert.ok, "basis_monomial_rep: " + cert.reason);
  return BasisMonomialRep{M, cert};
}

namespace detail {

struct CoordinateEnumeration {
  int total = 0;
  std::vector<std::uint32_t> vertex_mask;  // bits belonging to each vertex
  std::vector<std::uint32_t> need;  // per basis bit: bits its arrows force
};

inline CoordinateEnumeration coordinate_enumeration(const Quiver& Q,
                                                    const DecoratedRep& M) {
  const int n = Q.vertex_count();
  CoordinateEnumeration ce;
  std::vector<int> off(n + 1, 0);
  for (int i = 0; i < n; ++i) off[i + 1] = off[i] + static_cast<int>(M.dims[i]);
  ce.total = off[n];
  QPKIT_REQUIRE(ce.total <= 24,
                "coordinate subset enumeration supports total dimension <= 24, got " +
                    std::to_string(ce.total));
  ce.vertex_mask.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int b = off[i]; b < off[i + 1]; ++b)
      ce.vertex_mask[i] |= (std::uint32_t{1} << b);
  ce.need.assign(static_cast<size_t>(ce.total), 0);
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const Arrow& ar = Q.arrow(a);
    const RatMat& m = M.arrow_maps[a];
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c)
        if (m.at(r, c) != 0)
          ce.need[off[ar.tail] + c] |= (std::uint32_t{1} << (off[ar.head] + r));
  }
  return ce;
}

}  // namespace detail

// Number of arrow-closed coordinate subsets per dimension profile.  Under a
// valid certificate these counts are the Euler characteristics of the
// submodule varieties.
inline std::map<IntVec, long long> coordinate_profile_counts(
    const Quiver& Q, const DecoratedRep& M, const GradingCertificate& cert) {
  QPKIT_REQUIRE(cert.ok,
                "coordinate_profile_counts: certificate missing: " + cert.reason);
  const detail::CoordinateEnumeration ce = detail::coordinate_enumeration(Q, M);
  const int n = Q.vertex_count();
  std::map<IntVec, long long> counts;
  const std::uint64_t limit = std::uint64_t{1} << ce.total;
  for (std::uint64_t mask64 = 0; mask64 < limit; ++mask64) {
    const auto mask = static_cast<std::uint32_t>(mask64);
    bool closed = true;
    std::uint32_t scan = mask;
    while (scan != 0) {
      const int b = std::countr_zero(scan);
      scan &= scan - 1;
      if ((ce.need[b] & ~mask) != 0) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    IntVec e(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      e[i] = std::popcount(mask & ce.vertex_mask[i]);
    ++counts[e];
  }
  return counts;
}

inline long long chi_coordinate(const Quiver& Q, const DecoratedRep& M,
                                const GradingCertificate& cert,
                                const IntVec& e) {
  const auto counts = coordinate_profile_counts(Q, M, cert);
  const auto it = counts.find(e);
  return it == counts.end() ? 0 : it->second;
}

// Submodule generating function sum_e chi_e u^e.
inline IntPolynomial f_poly_of(const Quiver& Q, const DecoratedRep& M,
                               const GradingCertificate& cert) {
  const auto counts = coordinate_profile_counts(Q, M, cert);
  IntPolynomial f = IntPolynomial::zero(Q.vertex_count());
  for (const auto& [e, c] : counts) f.add_term(e, Int(c));
  return f;
}

inline IntPolynomial f_poly_of(const Quiver& Q, const BasisMonomialRep& bm) {
  return f_poly_of(Q, bm.rep, bm.cert);
}

inline IntPolynomial f_poly_of(const Quiver& Q, const DecoratedRep& M) {
  const GradingCertificate cert = certify_basis_monomial(Q, M);
  QPKIT_REQUIRE(cert.ok, "f_poly_of: " + cert.reason);
  return f_poly_of(Q, M, cert);
}

}  // namespace qpkit
