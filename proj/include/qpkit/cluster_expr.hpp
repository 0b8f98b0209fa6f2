#pragma once
// Coefficient-free cluster variables from invariant data: substitute
//   yhat_j = prod_i x_i^{b_{i,j}}
// into the F-polynomial and multiply by the monomial x^g.

#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/laurent.hpp"
#include "qpkit/matrix.hpp"
#include "qpkit/polynomial.hpp"

namespace qpkit {

inline LaurentExpr cluster_variable_expr(const IntPolynomial& F, const IntVec& g,
                                         const IntMat& B) {
  int n = B.rows;
  QPKIT_REQUIRE(B.cols == n && F.nvars == n && static_cast<int>(g.size()) == n,
                "cluster_variable_expr: dimension mismatch");
  std::vector<IntVec> yhat(n);
  for (int j = 0; j < n; ++j) {
    IntVec m(n);
    for (int i = 0; i < n; ++i) m[i] = static_cast<int>(B.at(i, j));
    yhat[j] = m;
  }
  IntPolynomial sub = substitute_monomials(F, yhat, n);
  return laurent_normalize(shift_exponents(sub, g));
}

}  // namespace qpkit
