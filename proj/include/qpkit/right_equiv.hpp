#pragma once
// Right-equivalences of a truncated complete path algebra: vertex-fixing
// algebra automorphisms, given by an image path combination per arrow with
// the same endpoints and an invertible degree-1 part.  Provides
// application (substitution), composition, validation, and degree-by-degree
// inversion modulo the truncation ideal.

#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/path.hpp"
#include "qpkit/potential.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/ratmat.hpp"

namespace qpkit {

struct RightEquivalence {
  std::vector<PathVector> images;  // per arrow index of the quiver
};

inline RightEquivalence identity_equivalence(const Quiver& Q) {
  RightEquivalence phi;
  phi.images.reserve(static_cast<size_t>(Q.arrow_count()));
  for (int a = 0; a < Q.arrow_count(); ++a)
    phi.images.push_back(pv_of(Path::of_arrow(a)));
  return phi;
}

// Substitute every arrow of every term by its image; expand; truncate.
inline PathVector apply_equivalence(const Quiver& Q, int N,
                                    const RightEquivalence& phi,
                                    const PathVector& v) {
  QPKIT_REQUIRE(static_cast<int>(phi.images.size()) == Q.arrow_count(),
                "apply_equivalence: image count mismatch");
  PathVector out;
  for (const auto& [p, c] : v) {
    PathVector acc = pv_of(Path::lazy(path_head(Q, p)), c);
    for (int a : p.word) acc = pv_mul(Q, N, acc, phi.images[a]);
    out = pv_add(out, acc);
  }
  return out;
}

// apply(compose(g, f), v) == apply(g, apply(f, v)) modulo the truncation.
inline RightEquivalence compose_equivalence(const Quiver& Q, int N,
                                            const RightEquivalence& g,
                                            const RightEquivalence& f) {
  RightEquivalence out;
  out.images.reserve(f.images.size());
  for (const PathVector& img : f.images)
    out.images.push_back(apply_equivalence(Q, N, g, img));
  return out;
}

namespace detail {

// Degree-1 coefficient matrix of phi restricted to the parallel arrows
// group `arrows` (all sharing one tail and head): entry (b, a) is the
// coefficient of arrow arrows[b] in the image of arrows[a].
inline RatMat linear_block(const Quiver&, const RightEquivalence& phi,
                           const std::vector<int>& arrows) {
  int m = static_cast<int>(arrows.size());
  RatMat L(m, m);
  for (int a = 0; a < m; ++a) {
    const PathVector& img = phi.images[static_cast<size_t>(arrows[a])];
    for (int b = 0; b < m; ++b) {
      auto it = img.find(Path::of_arrow(arrows[b]));
      if (it != img.end()) L.at(b, a) = it->second;
    }
  }
  return L;
}

// Groups of parallel arrows, each in stored arrow order.
inline std::vector<std::vector<int>> parallel_groups(const Quiver& Q) {
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < Q.arrow_count(); ++i) {
    const Arrow& a = Q.arrow(i);
    if (!groups.empty()) {
      const Arrow& prev = Q.arrow(groups.back().back());
      if (prev.tail == a.tail && prev.head == a.head) {
        groups.back().push_back(i);
        continue;
      }
    }
    groups.push_back({i});
  }
  return groups;
}

}  // namespace detail

// Endpoint preservation, minimum degree 1, and invertible degree-1 part.
inline void validate_equivalence(const Quiver& Q, const RightEquivalence& phi) {
  QPKIT_REQUIRE(static_cast<int>(phi.images.size()) == Q.arrow_count(),
                "validate_equivalence: image count mismatch");
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const PathVector& img = phi.images[static_cast<size_t>(a)];
    QPKIT_REQUIRE(pv_min_degree(img) >= 1,
                  "validate_equivalence: image of '" + Q.arrow(a).id +
                      "' has a lazy term or is zero");
    auto type = pv_uniform_type(Q, img);
    QPKIT_REQUIRE(type && type->first == Q.arrow(a).head &&
                      type->second == Q.arrow(a).tail,
                  "validate_equivalence: image of '" + Q.arrow(a).id +
                      "' changes endpoints");
  }
  for (const auto& group : detail::parallel_groups(Q)) {
    RatMat L = detail::linear_block(Q, phi, group);
    QPKIT_REQUIRE(rank_of(L) == L.rows,
                  "validate_equivalence: degree-1 part singular");
  }
}

// Inverse modulo paths of length >= N, built degree by degree: the degree-1
// part is inverted exactly; each higher correction cancels the lowest
// remaining error of psi(phi(a)) - a.
inline RightEquivalence invert_equivalence(const Quiver& Q, int N,
                                           const RightEquivalence& phi) {
  validate_equivalence(Q, phi);
  RightEquivalence psi;
  psi.images.assign(static_cast<size_t>(Q.arrow_count()), PathVector{});

  // Inverse of the linear part, stored per arrow as a combination of its
  // parallel group.
  std::vector<std::vector<int>> groups = detail::parallel_groups(Q);
  std::vector<RatMat> linv_by_group;
  std::vector<int> group_of(static_cast<size_t>(Q.arrow_count()), -1);
  std::vector<int> pos_in_group(static_cast<size_t>(Q.arrow_count()), -1);
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    linv_by_group.push_back(inverse(detail::linear_block(Q, phi, groups[gi])));
    for (size_t t = 0; t < groups[gi].size(); ++t) {
      group_of[static_cast<size_t>(groups[gi][t])] = static_cast<int>(gi);
      pos_in_group[static_cast<size_t>(groups[gi][t])] = static_cast<int>(t);
    }
  }
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const std::vector<int>& grp = groups[static_cast<size_t>(group_of[a])];
    const RatMat& Linv = linv_by_group[static_cast<size_t>(group_of[a])];
    PathVector img;
    for (size_t b = 0; b < grp.size(); ++b)
      pv_add_term(img, Path::of_arrow(grp[b]),
                  Linv.at(static_cast<int>(b), pos_in_group[a]));
    psi.images[static_cast<size_t>(a)] = img;
  }

  for (int d = 2; d < N; ++d) {
    // error_d[a] = degree-d part of psi(phi(a)) - a
    std::vector<PathVector> error_d(static_cast<size_t>(Q.arrow_count()));
    bool any = false;
    for (int a = 0; a < Q.arrow_count(); ++a) {
      PathVector e = apply_equivalence(Q, N, psi, phi.images[a]);
      pv_add_term(e, Path::of_arrow(a), Rat(-1));
      error_d[static_cast<size_t>(a)] = pv_degree_part(e, d);
      if (!error_d[static_cast<size_t>(a)].empty()) any = true;
    }
    if (!any) continue;
    // psi_d(a') = -error_d(Linv(a')); add to the images.
    for (int ap = 0; ap < Q.arrow_count(); ++ap) {
      const std::vector<int>& grp = groups[static_cast<size_t>(group_of[ap])];
      const RatMat& Linv = linv_by_group[static_cast<size_t>(group_of[ap])];
      PathVector corr;
      for (size_t b = 0; b < grp.size(); ++b) {
        const Rat& c = Linv.at(static_cast<int>(b), pos_in_group[ap]);
        if (c != 0)
          corr = pv_add(corr, pv_scale(-c, error_d[static_cast<size_t>(grp[b])]));
      }
      psi.images[static_cast<size_t>(ap)] =
          pv_add(psi.images[static_cast<size_t>(ap)], corr);
    }
  }

  for (int a = 0; a < Q.arrow_count(); ++a) {
    PathVector round1 = apply_equivalence(Q, N, psi, phi.images[a]);
    PathVector round2 = apply_equivalence(Q, N, phi, psi.images[a]);
    QPKIT_REQUIRE(round1 == pv_of(Path::of_arrow(a)),
                  "invert_equivalence: left inverse check failed");
    QPKIT_REQUIRE(round2 == pv_of(Path::of_arrow(a)),
                  "invert_equivalence: right inverse check failed");
  }
  return psi;
}

}  // namespace qpkit
