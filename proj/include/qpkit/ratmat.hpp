#pragma once
// Dense exact rational matrices and the linear algebra used by the
// representation layer: reduced row echelon form, rank, kernel and column
// space, solving, inversion, rank normal form, and seeded choices of
// complements (for constructions that are only well defined up to
// isomorphism, so tests can vary the choices).
//
// Zero-dimensional shapes (0 rows and/or 0 columns) are first-class: empty
// blocks appear constantly as spaces of dimension zero.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/rng.hpp"

namespace qpkit {

struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;  // row-major

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {
    QPKIT_REQUIRE(r >= 0 && c >= 0, "RatMat: negative dimension");
  }

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool is_zero() const {
    for (const Rat& x : a)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const RatMat&, const RatMat&) = default;
};

inline RatMat operator+(const RatMat& x, const RatMat& y) {
  QPKIT_REQUIRE(x.rows == y.rows && x.cols == y.cols, "RatMat +: shape mismatch");
  RatMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

inline RatMat operator-(const RatMat& x) {
  RatMat r = x;
  for (Rat& v : r.a) v = -v;
  return r;
}

inline RatMat operator-(const RatMat& x, const RatMat& y) { return x + (-y); }

inline RatMat operator*(const RatMat& x, const RatMat& y) {
  QPKIT_REQUIRE(x.cols == y.rows, "RatMat *: shape mismatch");
  RatMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Rat& w = y.at(k, j);
        if (w != 0) r.at(i, j) += v * w;
      }
    }
  return r;
}

inline RatMat operator*(const Rat& c, const RatMat& x) {
  RatMat r = x;
  for (Rat& v : r.a) v *= c;
  return r;
}

inline RatMat transpose(const RatMat& x) {
  RatMat r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

// Rows given as integer initializer data (test convenience).
inline RatMat rat_mat(const std::vector<std::vector<long long>>& rows, int cols = -1) {
  int r = static_cast<int>(rows.size());
  int c = cols >= 0 ? cols : (r ? static_cast<int>(rows[0].size()) : 0);
  RatMat m(r, c);
  for (int i = 0; i < r; ++i) {
    QPKIT_REQUIRE(static_cast<int>(rows[i].size()) == c, "rat_mat: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = Rat(rows[i][j]);
  }
  return m;
}

inline RatMat hconcat(const RatMat& x, const RatMat& y) {
  QPKIT_REQUIRE(x.rows == y.rows, "hconcat: row mismatch");
  RatMat r(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

inline RatMat vconcat(const RatMat& x, const RatMat& y) {
  QPKIT_REQUIRE(x.cols == y.cols, "vconcat: column mismatch");
  RatMat r(x.rows + y.rows, x.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
  return r;
}

// Copy src into dst with top-left corner at (i0, j0).
inline void set_block(RatMat& dst, int i0, int j0, const RatMat& src) {
  QPKIT_REQUIRE(i0 >= 0 && j0 >= 0 && i0 + src.rows <= dst.rows &&
                    j0 + src.cols <= dst.cols,
                "set_block: out of range");
  for (int i = 0; i < src.rows; ++i)
    for (int j = 0; j < src.cols; ++j) dst.at(i0 + i, j0 + j) = src.at(i, j);
}

inline RatMat block_of(const RatMat& m, int i0, int j0, int r, int c) {
  QPKIT_REQUIRE(i0 >= 0 && j0 >= 0 && i0 + r <= m.rows && j0 + c <= m.cols,
                "block_of: out of range");
  RatMat out(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) out.at(i, j) = m.at(i0 + i, j0 + j);
  return out;
}

inline RatMat column_of(const RatMat& m, int j) { return block_of(m, 0, j, m.rows, 1); }

// Reduced row echelon form; appends the pivot column indices to *pivots.
inline RatMat rref(RatMat m, std::vector<int>* pivots = nullptr) {
  int lead = 0;
  for (int col = 0; col < m.cols && lead < m.rows; ++col) {
    int piv = -1;
    for (int i = lead; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
    Rat d = m.at(lead, col);
    for (int j = 0; j < m.cols; ++j) m.at(lead, j) /= d;
    for (int i = 0; i < m.rows; ++i) {
      if (i == lead) continue;
      Rat f = m.at(i, col);
      if (f == 0) continue;
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    if (pivots) pivots->push_back(col);
    ++lead;
  }
  return m;
}

inline int rank_of(const RatMat& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return static_cast<int>(piv.size());
}

// Columns of m at its pivot positions: a basis of the column space.
inline RatMat column_space(const RatMat& m) {
  std::vector<int> piv;
  rref(m, &piv);
  RatMat out(m.rows, static_cast<int>(piv.size()));
  for (size_t t = 0; t < piv.size(); ++t)
    for (int i = 0; i < m.rows; ++i) out.at(i, static_cast<int>(t)) = m.at(i, piv[t]);
  return out;
}

// Columns spanning the null space {x : m x = 0} (one per free column).
inline RatMat kernel(const RatMat& m) {
  std::vector<int> piv;
  RatMat r = rref(m, &piv);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  int free_count = m.cols - static_cast<int>(piv.size());
  RatMat out(m.cols, free_count);
  int t = 0;
  for (int col = 0; col < m.cols; ++col) {
    if (is_piv[col]) continue;
    out.at(col, t) = 1;
    for (size_t pr = 0; pr < piv.size(); ++pr)
      out.at(piv[pr], t) = -r.at(static_cast<int>(pr), col);
    ++t;
  }
  return out;
}

// Solve A X = B; nullopt if inconsistent.  When the solution is not unique,
// free variables are set to zero.
inline std::optional<RatMat> solve_matrix(const RatMat& A, const RatMat& B) {
  QPKIT_REQUIRE(A.rows == B.rows, "solve_matrix: row mismatch");
  std::vector<int> piv;
  RatMat r = rref(hconcat(A, B), &piv);
  for (int c : piv)
    if (c >= A.cols) return std::nullopt;  // pivot in the rhs block
  RatMat X(A.cols, B.cols);
  for (size_t pr = 0; pr < piv.size(); ++pr)
    for (int j = 0; j < B.cols; ++j)
      X.at(piv[pr], j) = r.at(static_cast<int>(pr), A.cols + j);
  return X;
}

inline RatMat inverse(const RatMat& A) {
  QPKIT_REQUIRE(A.rows == A.cols, "inverse: not square");
  auto X = solve_matrix(A, RatMat::identity(A.rows));
  QPKIT_REQUIRE(X && rank_of(A) == A.rows, "inverse: singular matrix");
  return *X;
}

inline Rat determinant(RatMat m) {
  QPKIT_REQUIRE(m.rows == m.cols, "determinant: not square");
  Rat det(1);
  for (int c = 0; c < m.cols; ++c) {
    int p = -1;
    for (int r = c; r < m.rows; ++r) {
      if (m.at(r, c) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) return Rat(0);
    if (p != c) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    const Rat inv = Rat(1) / m.at(c, c);
    for (int r = c + 1; r < m.rows; ++r) {
      if (m.at(r, c) == 0) continue;
      const Rat f = m.at(r, c) * inv;
      for (int j = c; j < m.cols; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return det;
}

// Does the column span of `span` contain every column of v?
inline bool span_contains(const RatMat& span, const RatMat& v) {
  QPKIT_REQUIRE(span.rows == v.rows, "span_contains: row mismatch");
  return solve_matrix(span, v).has_value();
}

// Invertible P (m x m) and Q (n x n) with P*C*Q having an identity block of
// size `rank` in the top-left corner and zeros elsewhere.
struct RankNormalForm {
  RatMat p, q;
  int rank = 0;
};

inline RankNormalForm rank_normal_form(const RatMat& C) {
  RankNormalForm f;
  f.p = RatMat::identity(C.rows);
  f.q = RatMat::identity(C.cols);
  RatMat m = C;
  int r = 0;
  while (true) {
    int pi = -1, pj = -1;
    for (int i = r; i < m.rows && pi < 0; ++i)
      for (int j = r; j < m.cols; ++j)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    auto swap_rows = [&](RatMat& x, int a, int b) {
      for (int j = 0; j < x.cols; ++j) std::swap(x.at(a, j), x.at(b, j));
    };
    auto swap_cols = [&](RatMat& x, int a, int b) {
      for (int i = 0; i < x.rows; ++i) std::swap(x.at(i, a), x.at(i, b));
    };
    if (pi != r) {
      swap_rows(m, pi, r);
      swap_rows(f.p, pi, r);
    }
    if (pj != r) {
      swap_cols(m, pj, r);
      swap_cols(f.q, pj, r);
    }
    Rat d = m.at(r, r);
    for (int j = 0; j < m.cols; ++j) m.at(r, j) /= d;
    for (int j = 0; j < f.p.cols; ++j) f.p.at(r, j) /= d;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      Rat fac = m.at(i, r);
      if (fac == 0) continue;
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= fac * m.at(r, j);
      for (int j = 0; j < f.p.cols; ++j) f.p.at(i, j) -= fac * f.p.at(r, j);
    }
    for (int j = 0; j < m.cols; ++j) {
      if (j == r) continue;
      Rat fac = m.at(r, j);
      if (fac == 0) continue;
      for (int i = 0; i < m.rows; ++i) m.at(i, j) -= fac * m.at(i, r);
      for (int i = 0; i < f.q.rows; ++i) f.q.at(i, j) -= fac * f.q.at(i, r);
    }
    ++r;
  }
  f.rank = r;
  return f;
}

// Independent columns, drawn from the columns of `pool` (and, when a seeded
// generator is supplied, random two-column combinations), extending the
// columns of `inside` to a basis of the column span of `pool`.  Requires
// span(inside) to lie in span(pool).  Returns only the added columns.
inline RatMat complement_in(const RatMat& inside, const RatMat& pool,
                            Rng* rng = nullptr) {
  QPKIT_REQUIRE(inside.rows == pool.rows, "complement_in: row mismatch");
  QPKIT_REQUIRE(span_contains(pool, inside), "complement_in: not a subspace");
  int target = rank_of(pool);
  RatMat current = inside;
  int have = rank_of(current);
  RatMat added(pool.rows, 0);

  std::vector<RatMat> candidates;
  for (int j = 0; j < pool.cols; ++j) candidates.push_back(column_of(pool, j));
  if (rng && pool.cols >= 2) {
    int extras = std::min(4, pool.cols);
    for (int t = 0; t < extras; ++t) {
      int j1 = static_cast<int>(rng->uniform(0, pool.cols - 1));
      int j2 = static_cast<int>(rng->uniform(0, pool.cols - 1));
      long long c = rng->nonzero(2);
      candidates.push_back(column_of(pool, j1) +
                           Rat(c) * column_of(pool, j2));
    }
  }
  std::vector<int> order(candidates.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (rng) {
    IntVec perm = rng->permutation(static_cast<int>(order.size()));
    for (size_t i = 0; i < order.size(); ++i) order[i] = perm[i];
  }

  for (int idx : order) {
    if (have == target) break;
    RatMat trial = hconcat(current, candidates[idx]);
    if (rank_of(trial) > have) {
      current = trial;
      added = hconcat(added, candidates[idx]);
      ++have;
    }
  }
  QPKIT_REQUIRE(have == target, "complement_in: pool failed to span");
  return added;
}

inline std::string to_string(const RatMat& m) {
  std::string s;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) s += " ";
      s += m.at(i, j).str();
    }
    s += "\n";
  }
  if (m.rows == 0 || m.cols == 0)
    s = "(" + std::to_string(m.rows) + "x" + std::to_string(m.cols) + ")\n";
  return s;
}

}  // namespace qpkit
