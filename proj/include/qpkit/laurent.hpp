#pragma once
// Laurent expressions: an integer polynomial numerator over a monomial
// denominator, in the normal form where the numerator is not divisible by
// any variable (minimum exponent 0 in each variable).  The denominator
// exponent vector may have negative entries (e.g. an initial cluster
// variable x_l is 1 / x^(-e_l)).

#include <string>

#include "qpkit/common.hpp"
#include "qpkit/polynomial.hpp"

namespace qpkit {

struct LaurentExpr {
  IntPolynomial numerator;   // min exponent 0 in every variable
  IntVec denom_exponents;    // z = numerator / x^denom_exponents

  friend bool operator==(const LaurentExpr& a, const LaurentExpr& b) {
    return a.numerator == b.numerator && a.denom_exponents == b.denom_exponents;
  }
};

// Normalize a Laurent polynomial (polynomial with possibly negative
// exponents) into a LaurentExpr.
inline LaurentExpr laurent_normalize(const IntPolynomial& p) {
  QPKIT_REQUIRE(!p.is_zero(), "laurent_normalize: zero expression");
  IntVec mins = min_exponents(p);
  LaurentExpr z;
  z.numerator = shift_exponents(p, scale_vector(-1, mins));
  z.denom_exponents = scale_vector(-1, mins);
  return z;
}

// Back to a single Laurent polynomial.
inline IntPolynomial laurent_expand(const LaurentExpr& z) {
  return shift_exponents(z.numerator, scale_vector(-1, z.denom_exponents));
}

// Display form "(num)/(x1*x2^2)"; negative denominator exponents are folded
// back into the displayed numerator so the printed denominator is a genuine
// monomial.
inline std::string to_string(const LaurentExpr& z,
                             const std::string& prefix = "x") {
  IntVec dpos(z.denom_exponents.size()), dneg(z.denom_exponents.size());
  bool any_pos = false;
  for (size_t j = 0; j < z.denom_exponents.size(); ++j) {
    dpos[j] = std::max(z.denom_exponents[j], 0);
    dneg[j] = std::max(-z.denom_exponents[j], 0);
    if (dpos[j] > 0) any_pos = true;
  }
  IntPolynomial shown = shift_exponents(z.numerator, dneg);
  std::string num = to_string(shown, prefix);
  if (!any_pos) return num;
  std::string den = term_to_string(dpos, Int(1), prefix);
  if (shown.terms.size() > 1) num = "(" + num + ")";
  if (den.find('*') != std::string::npos || den.find('^') != std::string::npos)
    den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace qpkit
