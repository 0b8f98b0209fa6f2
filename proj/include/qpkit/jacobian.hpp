#pragma once
// Quotient of a truncated path algebra by the two-sided ideal generated by
// the cyclic derivatives of the potential.  The quotient basis is computed
// by sparse elimination over all paths below the truncation order; a
// certificate records whether every path of maximal stored length already
// lies in the ideal, in which case the quotient is insensitive to the
// truncation and all long products vanish.

#include <map>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/path.hpp"
#include "qpkit/potential.hpp"
#include "qpkit/quiver.hpp"
#include "qpkit/ratmat.hpp"

namespace qpkit {

// All composable words of length < N, in PathLess order (length, then word).
inline std::vector<Path> enumerate_paths(const Quiver& Q, int N,
                                         long long guard = 200000) {
  std::vector<Path> all;
  std::vector<Path> layer;
  for (int v = 0; v < Q.vertex_count(); ++v) layer.push_back(Path::lazy(v));
  for (int len = 0; len < N && !layer.empty(); ++len) {
    all.insert(all.end(), layer.begin(), layer.end());
    QPKIT_REQUIRE(static_cast<long long>(all.size()) <= guard,
                  "enumerate_paths: too many paths");
    std::vector<Path> next;
    for (const Path& p : layer)
      for (int x = 0; x < Q.arrow_count(); ++x) {
        if (Q.arrow(x).tail != path_head(Q, p)) continue;
        Path q;
        q.word.push_back(x);
        q.word.insert(q.word.end(), p.word.begin(), p.word.end());
        next.push_back(q);
      }
    layer = std::move(next);
  }
  return all;
}

class JacobianQuotient {
 public:
  explicit JacobianQuotient(const QP& qp) : qp_(qp) {
    const Quiver& Q = qp_.quiver;
    const int N = qp_.truncation;
    std::vector<Path> paths = enumerate_paths(Q, N);
    path_count_ = static_cast<int>(paths.size());

    // Span of p * dS/da * q over all arrows a and flanking paths p, q.
    for (int a = 0; a < Q.arrow_count(); ++a) {
      PathVector d = cyclic_derivative(Q, qp_.potential, a);
      if (d.empty()) continue;
      for (const Path& p : paths) {
        if (path_tail(Q, p) != Q.arrow(a).tail) continue;
        PathVector pd = pv_mul(Q, N, pv_of(p), d);
        if (pd.empty()) continue;
        for (const Path& q : paths) {
          if (path_head(Q, q) != Q.arrow(a).head) continue;
          insert_row(pv_mul(Q, N, pd, pv_of(q)));
        }
      }
    }

    for (const Path& p : paths)
      if (pivots_.find(p) == pivots_.end()) basis_.push_back(p);

    certified_ = true;
    for (const Path& p : paths)
      if (p.length() == N - 1 && !reduce(pv_of(p)).empty()) {
        certified_ = false;
        break;
      }
  }

  const QP& qp() const { return qp_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<Path>& basis() const { return basis_; }
  int enumerated_paths() const { return path_count_; }

  // True when every path of length truncation-1 lies in the ideal; then
  // every product of basis elements of that total length reduces to zero
  // and the quotient does not depend on the truncation order.
  bool certified() const { return certified_; }

  // Coset normal form: an equivalent combination of basis paths.
  PathVector reduce(PathVector v) const {
    PathVector out;
    while (!v.empty()) {
      auto it = std::prev(v.end());  // largest term under PathLess
      Path lead = it->first;
      Rat c = it->second;
      auto piv = pivots_.find(lead);
      if (piv == pivots_.end()) {
        out.emplace(lead, c);
        v.erase(it);
      } else {
        v = pv_sub(v, pv_scale(c, piv->second));  // pivot lead coeff is 1
      }
    }
    return out;
  }

  // Product of two coset normal forms, reduced again.
  PathVector multiply(const PathVector& x, const PathVector& y) const {
    return reduce(pv_mul(qp_.quiver, qp_.truncation, x, y));
  }

  // Column of coordinates in basis order.
  RatMat coordinates(const PathVector& v) const {
    PathVector r = reduce(v);
    RatMat col(dimension(), 1);
    for (int i = 0; i < dimension(); ++i) {
      auto it = r.find(basis_[static_cast<size_t>(i)]);
      if (it != r.end()) col.at(i, 0) = it->second;
    }
    for (const auto& [p, c] : r)
      QPKIT_REQUIRE(pivots_.find(p) == pivots_.end(),
                    "JacobianQuotient::coordinates: unreduced term");
    return col;
  }

 private:
  void insert_row(PathVector row) {
    while (!row.empty()) {
      auto it = std::prev(row.end());
      auto piv = pivots_.find(it->first);
      if (piv == pivots_.end()) {
        Rat inv = Rat(1) / it->second;
        pivots_.emplace(it->first, pv_scale(inv, row));
        return;
      }
      row = pv_sub(row, pv_scale(it->second, piv->second));
    }
  }

  QP qp_;
  std::map<Path, PathVector, PathLess> pivots_;  // lead path -> monic row
  std::vector<Path> basis_;
  int path_count_ = 0;
  bool certified_ = false;
};

inline JacobianQuotient jacobian_quotient_basis(const QP& qp) {
  return JacobianQuotient(qp);
}

}  // namespace qpkit
