#pragma once
// Integer exchange matrices and their mutation.
//
// An extended exchange matrix is m x n with m = n (principal only) or
// m = 2n (principal part stacked over coefficient rows); the principal part
// is required to be skew-symmetric.  Mutation at direction k transforms
//   b'_{ij} = -b_{ij}                                   if i = k or j = k,
//   b'_{ij} = b_{ij} + [b_{ik}]_+ [b_{kj}]_+ - [-b_{ik}]_+ [-b_{kj}]_+
// and is an involution.

#include <string>
#include <vector>

#include "qpkit/common.hpp"

namespace qpkit {

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<long long> a;  // row-major

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  friend bool operator==(const IntMat&, const IntMat&) = default;
};

inline bool is_skew_symmetric(const IntMat& B) {
  if (B.rows != B.cols) return false;
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j)
      if (B.at(i, j) != -B.at(j, i)) return false;
  return true;
}

struct ExtendedExchangeMatrix {
  IntMat entries;  // m x n, m in {n, 2n}
  int n = 0;

  static ExtendedExchangeMatrix from_matrix(const IntMat& m) {
    QPKIT_REQUIRE(m.rows == m.cols || m.rows == 2 * m.cols,
                  "ExtendedExchangeMatrix: need n x n or 2n x n");
    ExtendedExchangeMatrix B;
    B.entries = m;
    B.n = m.cols;
    IntMat top(B.n, B.n);
    for (int i = 0; i < B.n; ++i)
      for (int j = 0; j < B.n; ++j) top.at(i, j) = m.at(i, j);
    QPKIT_REQUIRE(is_skew_symmetric(top),
                  "ExtendedExchangeMatrix: principal part not skew-symmetric");
    return B;
  }

  IntMat principal_part() const {
    IntMat top(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) top.at(i, j) = entries.at(i, j);
    return top;
  }

  // Column j of the principal part.
  IntVec principal_column(int j) const {
    IntVec c(n);
    for (int i = 0; i < n; ++i) c[i] = static_cast<int>(entries.at(i, j));
    return c;
  }

  friend bool operator==(const ExtendedExchangeMatrix&,
                         const ExtendedExchangeMatrix&) = default;
};

// Principal skew-symmetric matrix stacked over the n x n identity.
inline ExtendedExchangeMatrix principal_extension(const IntMat& B) {
  QPKIT_REQUIRE(is_skew_symmetric(B), "principal_extension: not skew-symmetric");
  IntMat m(2 * B.rows, B.cols);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) m.at(i, j) = B.at(i, j);
  for (int j = 0; j < B.cols; ++j) m.at(B.rows + j, j) = 1;
  return ExtendedExchangeMatrix::from_matrix(m);
}

// Matrix mutation in direction k (0-based).
inline ExtendedExchangeMatrix mutate_matrix(const ExtendedExchangeMatrix& B,
                                            int k) {
  QPKIT_REQUIRE(0 <= k && k < B.n, "mutate_matrix: direction out of range");
  const IntMat& m = B.entries;
  IntMat r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (i == k || j == k) {
        r.at(i, j) = -m.at(i, j);
      } else {
        r.at(i, j) = m.at(i, j) + pos_part(m.at(i, k)) * pos_part(m.at(k, j)) -
                     neg_part(m.at(i, k)) * neg_part(m.at(k, j));
      }
    }
  }
  ExtendedExchangeMatrix out;
  out.entries = r;
  out.n = B.n;
  return out;
}

inline std::string to_string(const IntMat& m) {
  std::string s;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) s += " ";
      s += std::to_string(m.at(i, j));
    }
    s += "\n";
  }
  return s;
}

}  // namespace qpkit
