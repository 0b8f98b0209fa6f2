#pragma once
// Exact multivariate polynomials over the integers.
//
// Exponent vectors may be negative (Laurent terms) — contexts that require
// genuine polynomials check nonnegativity explicitly.  The canonical term
// order is graded lexicographic; serialization lists terms in descending
// graded-lex order, so e.g. "u1*u2+u1+u2+1".

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qpkit/common.hpp"

namespace qpkit {

// Graded lexicographic: lower total degree first, ties by lexicographic
// comparison of exponent vectors.
struct GradedLexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    long long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

struct IntPolynomial {
  int nvars = 0;
  std::map<IntVec, Int, GradedLexLess> terms;  // no zero coefficients stored

  static IntPolynomial zero(int nvars) {
    IntPolynomial p;
    p.nvars = nvars;
    return p;
  }
  static IntPolynomial constant(int nvars, const Int& c) {
    IntPolynomial p = zero(nvars);
    if (c != 0) p.terms[zero_vector(nvars)] = c;
    return p;
  }
  static IntPolynomial one(int nvars) { return constant(nvars, 1); }
  static IntPolynomial monomial(const IntVec& expo, const Int& c) {
    IntPolynomial p = zero(static_cast<int>(expo.size()));
    if (c != 0) p.terms[expo] = c;
    return p;
  }
  static IntPolynomial variable(int nvars, int j) {
    return monomial(unit_vector(nvars, j), 1);
  }

  bool is_zero() const { return terms.empty(); }
  bool is_one() const {
    return terms.size() == 1 && terms.begin()->second == 1 &&
           terms.begin()->first == zero_vector(nvars);
  }
  bool is_laurent() const {  // any negative exponent present?
    for (const auto& [e, c] : terms)
      for (int x : e)
        if (x < 0) return true;
    return false;
  }
  Int constant_term() const {
    auto it = terms.find(zero_vector(nvars));
    return it == terms.end() ? Int(0) : it->second;
  }
  long long term_count() const { return static_cast<long long>(terms.size()); }

  void add_term(const IntVec& expo, const Int& c) {
    QPKIT_REQUIRE(static_cast<int>(expo.size()) == nvars,
                  "IntPolynomial::add_term: exponent length mismatch");
    if (c == 0) return;
    auto it = terms.find(expo);
    if (it == terms.end()) {
      terms.emplace(expo, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
  }
};

inline IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  QPKIT_REQUIRE(a.nvars == b.nvars, "polynomial +: variable count mismatch");
  IntPolynomial r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

inline IntPolynomial operator-(const IntPolynomial& a) {
  IntPolynomial r = a;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

inline IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + (-b);
}

inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  QPKIT_REQUIRE(a.nvars == b.nvars, "polynomial *: variable count mismatch");
  IntPolynomial r = IntPolynomial::zero(a.nvars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) r.add_term(add_vectors(ea, eb), ca * cb);
  return r;
}

inline IntPolynomial operator*(const Int& c, const IntPolynomial& a) {
  IntPolynomial r = IntPolynomial::zero(a.nvars);
  for (const auto& [e, co] : a.terms) r.add_term(e, c * co);
  return r;
}

inline IntPolynomial operator*(const IntPolynomial& a, const Int& c) {
  return c * a;
}

inline IntPolynomial pow_poly(const IntPolynomial& a, int k) {
  QPKIT_REQUIRE(k >= 0, "pow_poly: negative exponent");
  IntPolynomial r = IntPolynomial::one(a.nvars);
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

// Shift all exponents by the vector s (multiply by the Laurent monomial u^s).
inline IntPolynomial shift_exponents(const IntPolynomial& a, const IntVec& s) {
  IntPolynomial r = IntPolynomial::zero(a.nvars);
  for (const auto& [e, c] : a.terms) r.add_term(add_vectors(e, s), c);
  return r;
}

// Componentwise minimum of exponent vectors over all terms.
inline IntVec min_exponents(const IntPolynomial& a) {
  QPKIT_REQUIRE(!a.is_zero(), "min_exponents: zero polynomial");
  IntVec m = a.terms.begin()->first;
  for (const auto& [e, c] : a.terms)
    for (int j = 0; j < a.nvars; ++j) m[j] = std::min(m[j], e[j]);
  return m;
}

inline IntVec max_exponents(const IntPolynomial& a) {
  QPKIT_REQUIRE(!a.is_zero(), "max_exponents: zero polynomial");
  IntVec m = a.terms.begin()->first;
  for (const auto& [e, c] : a.terms)
    for (int j = 0; j < a.nvars; ++j) m[j] = std::max(m[j], e[j]);
  return m;
}

// Substitute variable j -> Laurent monomial with exponent vector assign[j]
// (in a possibly different ambient variable set of size out_nvars).
inline IntPolynomial substitute_monomials(const IntPolynomial& a,
                                          const std::vector<IntVec>& assign,
                                          int out_nvars) {
  QPKIT_REQUIRE(static_cast<int>(assign.size()) == a.nvars,
                "substitute_monomials: assignment length mismatch");
  for (const auto& m : assign)
    QPKIT_REQUIRE(static_cast<int>(m.size()) == out_nvars,
                  "substitute_monomials: monomial length mismatch");
  IntPolynomial r = IntPolynomial::zero(out_nvars);
  for (const auto& [e, c] : a.terms) {
    IntVec acc = zero_vector(out_nvars);
    for (int j = 0; j < a.nvars; ++j)
      for (int t = 0; t < out_nvars; ++t) acc[t] += e[j] * assign[j][t];
    r.add_term(acc, c);
  }
  return r;
}

// Exact division: returns q with q*den == num, or throws.  Long division by
// the graded-lex leading term, performed over the rationals, then checked
// for integrality.
inline IntPolynomial exact_divide(const IntPolynomial& num,
                                  const IntPolynomial& den) {
  QPKIT_REQUIRE(num.nvars == den.nvars, "exact_divide: variable count mismatch");
  QPKIT_REQUIRE(!den.is_zero(), "exact_divide: division by zero polynomial");
  QPKIT_REQUIRE(!num.is_laurent() && !den.is_laurent(),
                "exact_divide: inputs must have nonnegative exponents");
  if (num.is_zero()) return IntPolynomial::zero(num.nvars);

  const auto& dlead = *den.terms.rbegin();  // largest term
  // Rational working copy of the remainder.
  std::map<IntVec, Rat, GradedLexLess> rem;
  for (const auto& [e, c] : num.terms) rem[e] = Rat(c);
  std::map<IntVec, Rat, GradedLexLess> quot;

  auto add_rat = [](std::map<IntVec, Rat, GradedLexLess>& m, const IntVec& e,
                    const Rat& c) {
    if (c == 0) return;
    auto it = m.find(e);
    if (it == m.end()) {
      m.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) m.erase(it);
    }
  };

  while (!rem.empty()) {
    const auto& rlead = *rem.rbegin();
    // If the divisor's leading monomial does not divide the remainder's,
    // the division cannot be exact (graded-lex is multiplication-compatible,
    // so an exact quotient forces leading-monomial divisibility).
    IntVec diff(num.nvars);
    for (int j = 0; j < num.nvars; ++j) {
      diff[j] = rlead.first[j] - dlead.first[j];
      if (diff[j] < 0)
        throw error("exact_divide: inexact division (leading monomials)");
    }
    Rat coef = rlead.second / Rat(dlead.second);
    add_rat(quot, diff, coef);
    for (const auto& [e, c] : den.terms)
      add_rat(rem, add_vectors(e, diff), -coef * Rat(c));
  }

  IntPolynomial q = IntPolynomial::zero(num.nvars);
  for (const auto& [e, c] : quot) {
    if (boost::multiprecision::denominator(c) != 1)
      throw error("exact_divide: inexact division (non-integer quotient)");
    q.add_term(e, Int(boost::multiprecision::numerator(c)));
  }
  return q;
}

// ---------------------------------------------------------------------------
// Text format: terms `c*u1^a1*...*un^an` joined by `+`/`-`.  The printer
// omits unit coefficients, zero exponents, and `^1`; the parser accepts both
// the printed form and the fully explicit form.  Round-trips exactly.

inline std::string term_to_string(const IntVec& e, const Int& coef,
                                  const std::string& prefix) {
  Int c = coef < 0 ? Int(-coef) : coef;
  std::string vars;
  for (size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!vars.empty()) vars += "*";
    vars += prefix + std::to_string(j + 1);
    if (e[j] != 1) vars += "^" + std::to_string(e[j]);
  }
  if (vars.empty()) return c.str();
  if (c == 1) return vars;
  return c.str() + "*" + vars;
}

inline std::string to_string(const IntPolynomial& p,
                             const std::string& prefix = "u") {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const Int& c = it->second;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    out += term_to_string(it->first, c, prefix);
  }
  return out;
}

inline IntPolynomial parse_polynomial(const std::string& text, int nvars,
                                      const std::string& prefix = "u") {
  IntPolynomial p = IntPolynomial::zero(nvars);
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  QPKIT_REQUIRE(!s.empty(), "parse_polynomial: empty input");
  if (s == "0") return p;

  size_t pos = 0;
  auto parse_int = [&](bool allow_sign) -> long long {
    size_t start = pos;
    if (allow_sign && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    QPKIT_REQUIRE(pos > digits, "parse_polynomial: expected integer at '" +
                                    s.substr(start) + "'");
    return std::stoll(s.substr(start, pos - start));
  };

  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    QPKIT_REQUIRE(pos < s.size(), "parse_polynomial: dangling sign");
    Int coef = 1;
    IntVec expo = zero_vector(nvars);
    bool saw_factor = false;
    while (true) {
      if (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
        coef *= Int(parse_int(false));
        saw_factor = true;
      } else if (pos + prefix.size() <= s.size() &&
                 s.compare(pos, prefix.size(), prefix) == 0 &&
                 pos + prefix.size() < s.size() &&
                 isdigit(static_cast<unsigned char>(s[pos + prefix.size()]))) {
        pos += prefix.size();
        long long idx = parse_int(false);
        QPKIT_REQUIRE(1 <= idx && idx <= nvars,
                      "parse_polynomial: variable index out of range");
        long long ex = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          ex = parse_int(true);
        }
        expo[static_cast<size_t>(idx - 1)] += static_cast<int>(ex);
        saw_factor = true;
      } else {
        QPKIT_REQUIRE(saw_factor, "parse_polynomial: expected term at '" +
                                      s.substr(pos) + "'");
        break;
      }
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    p.add_term(expo, sign * coef);
  }
  return p;
}

}  // namespace qpkit
