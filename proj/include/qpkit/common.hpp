#pragma once
// Shared numeric types and error plumbing for the qpkit library.
//
// Everything is exact: arbitrary-precision integers for polynomial
// coefficients, arbitrary-precision rationals for linear algebra.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exponent vectors, g-vectors, h-vectors, dimension vectors.
using IntVec = std::vector<int>;

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Always-on invariant/precondition check (independent of NDEBUG).
#define QPKIT_REQUIRE(cond, msg)                                   \
  do {                                                             \
    if (!(cond)) throw ::qpkit::error(std::string("qpkit: ") + (msg)); \
  } while (0)

inline int pos_part(long long x) { return x > 0 ? static_cast<int>(x) : 0; }
inline int neg_part(long long x) { return x < 0 ? static_cast<int>(-x) : 0; }

inline IntVec unit_vector(int n, int j) {
  QPKIT_REQUIRE(0 <= j && j < n, "unit_vector: index out of range");
  IntVec e(n, 0);
  e[j] = 1;
  return e;
}

inline IntVec zero_vector(int n) { return IntVec(n, 0); }

inline IntVec add_vectors(const IntVec& a, const IntVec& b) {
  QPKIT_REQUIRE(a.size() == b.size(), "add_vectors: length mismatch");
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec scale_vector(int c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline std::string vec_to_string(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  s += ")";
  return s;
}

}  // namespace qpkit
