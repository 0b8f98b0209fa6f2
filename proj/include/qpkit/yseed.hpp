#pragma once
// Y-seeds with entries in the universal semifield, represented as fractions
// of integer polynomials with nonnegative coefficients.  Mutation at k:
//   y'_k = 1 / y_k,
//   y'_i = y_i * y_k^{[b_{k,i}]_+} * (y_k + 1)^{-b_{k,i}}   (i != k),
// together with matrix mutation.  Both update rules are subtraction-free,
// so positivity of coefficients is preserved.
//
// Fractions are reduced only by integer content, common monomial factors,
// and whole-denominator division; equality of entries is decided by
// cross-multiplication, which is exact regardless of reduction.

#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/matrix.hpp"
#include "qpkit/polynomial.hpp"

namespace qpkit {

struct YFraction {
  IntPolynomial num;
  IntPolynomial den;
};

// num1 * den2 == num2 * den1.
inline bool y_equal(const YFraction& a, const YFraction& b) {
  return a.num * b.den == b.num * a.den;
}

namespace detail {

inline Int int_content(const IntPolynomial& p) {
  Int g = 0;
  for (const auto& [e, c] : p.terms) {
    g = boost::multiprecision::gcd(g, c < 0 ? Int(-c) : c);
    if (g == 1) break;
  }
  return g;
}

inline IntPolynomial divide_content(const IntPolynomial& p, const Int& g) {
  IntPolynomial r = IntPolynomial::zero(p.nvars);
  for (const auto& [e, c] : p.terms) r.add_term(e, c / g);
  return r;
}

}  // namespace detail

inline YFraction reduce_fraction(YFraction f) {
  QPKIT_REQUIRE(!f.den.is_zero(), "reduce_fraction: zero denominator");
  if (f.num.is_zero()) return {IntPolynomial::zero(f.num.nvars),
                              IntPolynomial::one(f.den.nvars)};
  Int g = boost::multiprecision::gcd(detail::int_content(f.num),
                                     detail::int_content(f.den));
  if (g > 1) {
    f.num = detail::divide_content(f.num, g);
    f.den = detail::divide_content(f.den, g);
  }
  IntVec mn = min_exponents(f.num), md = min_exponents(f.den);
  IntVec common(mn.size());
  bool any = false;
  for (size_t i = 0; i < mn.size(); ++i) {
    common[i] = -std::min(mn[i], md[i]);
    if (common[i] != 0) any = true;
  }
  if (any) {
    f.num = shift_exponents(f.num, common);
    f.den = shift_exponents(f.den, common);
  }
  if (!f.den.is_one()) {
    try {
      IntPolynomial q = exact_divide(f.num, f.den);
      f.num = q;
      f.den = IntPolynomial::one(f.den.nvars);
    } catch (const error&) {
      // fraction is not a polynomial; keep as is
    }
  }
  return f;
}

struct YSeed {
  std::vector<YFraction> y;  // n entries, functions of y_1..y_n
  IntMat b;                  // n x n skew-symmetric
};

inline YSeed initial_y_seed(const IntMat& B) {
  QPKIT_REQUIRE(is_skew_symmetric(B), "initial_y_seed: not skew-symmetric");
  YSeed s;
  s.b = B;
  int n = B.rows;
  s.y.reserve(n);
  for (int i = 0; i < n; ++i)
    s.y.push_back({IntPolynomial::variable(n, i), IntPolynomial::one(n)});
  return s;
}

inline YSeed mutate_y_seed(const YSeed& seed, int k) {
  int n = seed.b.rows;
  QPKIT_REQUIRE(0 <= k && k < n, "mutate_y_seed: direction out of range");
  const IntPolynomial& p = seed.y[k].num;
  const IntPolynomial& q = seed.y[k].den;
  IntPolynomial psum = p + q;  // numerator of y_k + 1

  YSeed out;
  out.y.resize(n);
  out.y[k] = reduce_fraction({q, p});
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    long long c = seed.b.at(k, i);
    YFraction f = seed.y[i];
    if (c >= 0) {
      // y_k^c (y_k+1)^{-c} = p^c / (p+q)^c
      int e = static_cast<int>(c);
      f.num = f.num * pow_poly(p, e);
      f.den = f.den * pow_poly(psum, e);
    } else {
      // (y_k+1)^{-c} = (p+q)^{|c|} / q^{|c|}
      int e = static_cast<int>(-c);
      f.num = f.num * pow_poly(psum, e);
      f.den = f.den * pow_poly(q, e);
    }
    out.y[i] = reduce_fraction(f);
  }
  out.b = mutate_matrix(ExtendedExchangeMatrix::from_matrix(seed.b), k).entries;
  return out;
}

inline bool y_seed_equal(const YSeed& a, const YSeed& b) {
  if (!(a.b == b.b) || a.y.size() != b.y.size()) return false;
  for (size_t i = 0; i < a.y.size(); ++i)
    if (!y_equal(a.y[i], b.y[i])) return false;
  return true;
}

inline std::string to_string(const YFraction& f) {
  YFraction r = reduce_fraction(f);
  std::string num = to_string(r.num, "y");
  if (r.den.is_one()) return num;
  std::string den = to_string(r.den, "y");
  if (r.num.term_count() > 1) num = "(" + num + ")";
  if (r.den.term_count() > 1 || den.find('*') != std::string::npos ||
      den.find('^') != std::string::npos)
    den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace qpkit
