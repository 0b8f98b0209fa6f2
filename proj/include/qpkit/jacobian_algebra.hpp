#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/jacobian.hpp"
#include "qpkit/path.hpp"
#include "qpkit/potential.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/ratmat.hpp"
#include "qpkit/rep.hpp"

namespace qpkit {

// The quotient of the truncated path algebra by the derivative ideal, packaged
// as an honest finite-dimensional algebra: coset basis (in path order), full
// multiplication table, graded pieces e_i A e_j, and the indecomposable left
// projectives A e_k with their arrow actions.  Construction requires the
// certificate that the truncation is faithful (all paths of length
// truncation-1 already reduce to zero), so products never spill past the cut.
class JacobianAlgebra {
 public:
  explicit JacobianAlgebra(const QP& qp) : quot_(qp) {
    QPKIT_REQUIRE(quot_.certified(),
                  "JacobianAlgebra: quotient is not certified "
                  "finite-dimensional at this truncation");
    const Quiver& Q = qp.quiver;
    const int d = quot_.dimension();
    for (int i = 0; i < d; ++i) index_[quot_.basis()[i]] = i;
    heads_.resize(static_cast<size_t>(d));
    tails_.resize(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
      heads_[i] = path_head(Q, quot_.basis()[i]);
      tails_[i] = path_tail(Q, quot_.basis()[i]);
    }
    table_.assign(static_cast<size_t>(d) * d, {});
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        // Composable cosets only; x*y needs tail(x) == head(y).
        if (tails_[i] != heads_[j]) continue;
        const PathVector prod = quot_.multiply(pv_of(quot_.basis()[i]),
                                               pv_of(quot_.basis()[j]));
        const RatMat col = quot_.coordinates(prod);
        std::vector<std::pair<int, Rat>> entries;
        for (int r = 0; r < d; ++r) {
          if (col.at(r, 0) != 0) entries.emplace_back(r, col.at(r, 0));
        }
        table_[static_cast<size_t>(i) * d + j] = std::move(entries);
      }
    }
  }

  const QP& qp() const { return quot_.qp(); }
  const JacobianQuotient& quotient() const { return quot_; }
  int dimension() const { return quot_.dimension(); }
  const std::vector<Path>& basis() const { return quot_.basis(); }
  int head_of(int i) const { return heads_[i]; }
  int tail_of(int i) const { return tails_[i]; }

  int index_of(const Path& p) const {
    const auto it = index_.find(p);
    QPKIT_REQUIRE(it != index_.end(), "JacobianAlgebra: path is not a basis coset");
    return it->second;
  }

  // Sparse coordinates of basis_i * basis_j.
  const std::vector<std::pair<int, Rat>>& product(int i, int j) const {
    return table_[static_cast<size_t>(i) * dimension() + j];
  }

  // Basis indices of the graded piece e_head A e_tail.
  std::vector<int> component(int head, int tail) const {
    std::vector<int> out;
    for (int i = 0; i < dimension(); ++i) {
      if (heads_[i] == head && tails_[i] == tail) out.push_back(i);
    }
    return out;
  }

  // Basis indices of the left projective A e_k, i.e. cosets with tail k.
  std::vector<int> projective_basis(int k) const {
    std::vector<int> out;
    for (int i = 0; i < dimension(); ++i) {
      if (tails_[i] == k) out.push_back(i);
    }
    return out;
  }

 private:
  JacobianQuotient quot_;
  std::map<Path, int, PathLess> index_;
  std::vector<int> heads_, tails_;
  std::vector<std::vector<std::pair<int, Rat>>> table_;
};

namespace detail {

// Per-vertex local numbering of the projective left module A e_k: basis coset
// b sits at vertex head(b).  Returns, per vertex, the global basis indices in
// basis order, plus the inverse map global index -> local position.
struct ProjectiveLayout {
  std::vector<std::vector<int>> at_vertex;  // per vertex: global basis indices
  std::vector<int> local;                   // per global index: local position
};

inline ProjectiveLayout projective_layout(const JacobianAlgebra& alg, int k) {
  const int n = alg.qp().quiver.vertex_count();
  ProjectiveLayout lay;
  lay.at_vertex.assign(static_cast<size_t>(n), {});
  lay.local.assign(static_cast<size_t>(alg.dimension()), -1);
  for (int i : alg.projective_basis(k)) {
    lay.local[i] = static_cast<int>(lay.at_vertex[alg.head_of(i)].size());
    lay.at_vertex[alg.head_of(i)].push_back(i);
  }
  return lay;
}

}  // namespace detail

// The projective A e_k as a decorated representation: the space at vertex i is
// spanned by the basis cosets with tail k and head i, and an arrow acts by
// left multiplication followed by reduction.
inline DecoratedRep projective_module(const JacobianAlgebra& alg, int k) {
  const Quiver& Q = alg.qp().quiver;
  const int n = Q.vertex_count();
  QPKIT_REQUIRE(k >= 0 && k < n, "projective_module: vertex out of range");
  const detail::ProjectiveLayout lay = detail::projective_layout(alg, k);
  DecoratedRep P;
  P.dims.assign(static_cast<size_t>(n), 0);
  P.dec_dims.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    P.dims[i] = static_cast<int>(lay.at_vertex[i].size());
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const Arrow& ar = Q.arrow(a);
    RatMat block(P.dims[ar.head], P.dims[ar.tail]);
    for (int c = 0; c < P.dims[ar.tail]; ++c) {
      const int src = lay.at_vertex[ar.tail][c];
      const PathVector prod = alg.quotient().multiply(
          pv_of(Path::of_arrow(a)), pv_of(alg.basis()[src]));
      const RatMat coord = alg.quotient().coordinates(prod);
      for (int g = 0; g < alg.dimension(); ++g) {
        if (coord.at(g, 0) == 0) continue;
        QPKIT_REQUIRE(alg.tail_of(g) == k && alg.head_of(g) == ar.head,
                      "projective_module: product left its graded piece");
        block.at(lay.local[g], c) = coord.at(g, 0);
      }
    }
    P.arrow_maps.push_back(block);
  }
  validate_rep_shapes(Q, P);
  QPKIT_REQUIRE(check_relations(alg.qp(), P),
                "projective_module: projective violates the relations");
  return P;
}

}  // namespace qpkit
