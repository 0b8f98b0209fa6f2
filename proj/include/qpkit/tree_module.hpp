#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/polynomial.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/rep.hpp"

namespace qpkit {

// A "thin tree" representation: one-dimensional spaces on a vertex subset T
// whose induced subquiver is a tree (at most one arrow between any two
// members, no multiple arrows, connected, |T|-1 edges), identity maps on the
// arrows inside T and zero maps elsewhere.  Because the induced subquiver has
// no directed cycles, every cyclic path leaves T, so the representation
// satisfies the relations of *every* potential on the quiver.
struct TreeModule {
  DecoratedRep rep;
  std::vector<int> vertices;    // sorted members of T (0-based)
  // Leaf-peeling order v_1..v_l: each v_i is a leaf of the subtree induced on
  // {v_i, ..., v_l}.  Mutating at v_1, v_2, ... peels the module one
  // one-dimensional layer at a time.
  std::vector<int> peel_order;
};

namespace detail {

// Undirected adjacency restricted to T; throws if some pair is joined by more
// than one arrow (in either direction combined).
inline std::vector<std::vector<int>> tree_adjacency(const Quiver& Q,
                                                    const std::vector<int>& T) {
  const int l = static_cast<int>(T.size());
  std::vector<std::vector<int>> adj(l);
  int edges = 0;
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      const int multiplicity =
          Q.arrows_between(T[i], T[j]) + Q.arrows_between(T[j], T[i]);
      QPKIT_REQUIRE(multiplicity <= 1,
                    "tree_module: vertices " + std::to_string(T[i] + 1) +
                        " and " + std::to_string(T[j] + 1) +
                        " are joined by more than one arrow");
      if (multiplicity == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
    }
  }
  QPKIT_REQUIRE(edges == l - 1,
                "tree_module: induced subquiver has " + std::to_string(edges) +
                    " edges on " + std::to_string(l) +
                    " vertices; a tree needs exactly " + std::to_string(l - 1));
  return adj;
}

}  // namespace detail

inline TreeModule tree_module(const Quiver& Q, std::vector<int> T) {
  QPKIT_REQUIRE(!T.empty(), "tree_module: empty vertex set");
  std::sort(T.begin(), T.end());
  QPKIT_REQUIRE(std::adjacent_find(T.begin(), T.end()) == T.end(),
                "tree_module: repeated vertex");
  QPKIT_REQUIRE(T.front() >= 0 && T.back() < Q.vertex_count(),
                "tree_module: vertex out of range");
  const int l = static_cast<int>(T.size());
  std::vector<std::vector<int>> adj = detail::tree_adjacency(Q, T);

  // Connectivity: with exactly l-1 edges it suffices to reach all vertices
  // from T[0].
  std::vector<char> seen(l, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  QPKIT_REQUIRE(reached == l, "tree_module: induced subquiver is disconnected");

  // Leaf peeling; pick the smallest-numbered leaf each round so the order is
  // deterministic.
  std::vector<int> degree(l, 0);
  for (int i = 0; i < l; ++i) degree[i] = static_cast<int>(adj[i].size());
  std::vector<char> removed(l, 0);
  std::vector<int> peel;
  peel.reserve(l);
  for (int round = 0; round < l; ++round) {
    int leaf = -1;
    for (int i = 0; i < l; ++i) {
      if (!removed[i] && degree[i] <= 1) {
        leaf = i;
        break;
      }
    }
    QPKIT_REQUIRE(leaf >= 0, "tree_module: leaf peeling failed");
    removed[leaf] = 1;
    peel.push_back(T[leaf]);
    for (int w : adj[leaf]) {
      if (!removed[w]) --degree[w];
    }
  }

  DecoratedRep M;
  M.dims.assign(Q.vertex_count(), 0);
  M.dec_dims.assign(Q.vertex_count(), 0);
  for (int v : T) M.dims[v] = 1;
  std::set<int> members(T.begin(), T.end());
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const Arrow& ar = Q.arrow(a);
    RatMat block(M.dims[ar.head], M.dims[ar.tail]);
    if (members.count(ar.tail) && members.count(ar.head)) block.at(0, 0) = 1;
    M.arrow_maps.push_back(block);
  }
  validate_rep_shapes(Q, M);
  return TreeModule{M, T, peel};
}

// Number of arrows of Q that start at i and end inside T.  For i in T the
// index g_i of the thin tree module equals (this count) - 1.
inline int tree_out_degree_within(const Quiver& Q, const TreeModule& tm, int i) {
  std::set<int> members(tm.vertices.begin(), tm.vertices.end());
  int count = 0;
  for (int a : Q.out_arrows(i)) {
    if (members.count(Q.arrow(a).head)) ++count;
  }
  return count;
}

// Submodule generating function of a thin tree module: the subrepresentations
// spanned by coordinate lines are exactly the subsets Z of T closed under the
// arrows inside T (tail in Z forces head in Z), each contributing the
// monomial prod_{i in Z} u_i.  All other dimension profiles contribute zero.
inline IntPolynomial f_poly_tree(const Quiver& Q, const TreeModule& tm) {
  const int n = Q.vertex_count();
  const int l = static_cast<int>(tm.vertices.size());
  QPKIT_REQUIRE(l <= 30, "f_poly_tree: tree too large to enumerate");

  // Successor masks: local bit j must pull in local bit k when an arrow runs
  // T[j] -> T[k].
  std::vector<int> local(n, -1);
  for (int j = 0; j < l; ++j) local[tm.vertices[j]] = j;
  std::vector<std::uint32_t> need(l, 0);
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const Arrow& ar = Q.arrow(a);
    if (local[ar.tail] >= 0 && local[ar.head] >= 0) {
      need[local[ar.tail]] |= (std::uint32_t{1} << local[ar.head]);
    }
  }

  IntPolynomial f = IntPolynomial::zero(n);
  const std::uint32_t total = std::uint32_t{1} << l;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    bool closed = true;
    for (int j = 0; j < l && closed; ++j) {
      if ((mask >> j) & 1u) {
        if ((need[j] & ~mask) != 0u) closed = false;
      }
    }
    if (!closed) continue;
    IntVec e(n, 0);
    for (int j = 0; j < l; ++j) {
      if ((mask >> j) & 1u) e[tm.vertices[j]] = 1;
    }
    f.add_term(e, Int(1));
  }
  return f;
}

}  // namespace qpkit
