#pragma once
// Paths and finite rational path combinations in a truncated complete path
// algebra.  Composition is right to left: in the word (a_1, ..., a_d) the
// arrow a_d acts first, so the word is composable when t(a_p) = h(a_{p+1}),
// the tail of the path is t(a_d) and the head is h(a_1).  Length-zero
// (lazy) paths carry their base vertex explicitly.
//
// Path combinations are plain maps; the owning quiver and the truncation
// order N are passed to each operation (all stored words have length < N).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/quiver.hpp"

namespace qpkit {

struct Path {
  std::vector<int> word;  // arrow indices, composition right to left
  int base = -1;          // vertex of the lazy path; -1 when word nonempty

  static Path lazy(int vertex) { return Path{{}, vertex}; }
  static Path of_arrow(int arrow_index) { return Path{{arrow_index}, -1}; }

  int length() const { return static_cast<int>(word.size()); }
  bool is_lazy() const { return word.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
};

struct PathLess {
  bool operator()(const Path& x, const Path& y) const {
    if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
    if (x.word != y.word) return x.word < y.word;
    return x.base < y.base;
  }
};

inline int path_head(const Quiver& Q, const Path& p) {
  return p.is_lazy() ? p.base : Q.arrow(p.word.front()).head;
}

inline int path_tail(const Quiver& Q, const Path& p) {
  return p.is_lazy() ? p.base : Q.arrow(p.word.back()).tail;
}

inline bool path_is_valid(const Quiver& Q, const Path& p) {
  if (p.is_lazy()) return 0 <= p.base && p.base < Q.vertex_count();
  if (p.base != -1) return false;
  for (size_t i = 0; i + 1 < p.word.size(); ++i)
    if (Q.arrow(p.word[i]).tail != Q.arrow(p.word[i + 1]).head) return false;
  return true;
}

// Product x*y (x applied after y); nullopt when the endpoints do not match
// (the algebra product is zero).
inline std::optional<Path> try_concat(const Quiver& Q, const Path& x,
                                      const Path& y) {
  if (path_tail(Q, x) != path_head(Q, y)) return std::nullopt;
  if (x.is_lazy()) return y;
  if (y.is_lazy()) return x;
  Path r;
  r.word = x.word;
  r.word.insert(r.word.end(), y.word.begin(), y.word.end());
  return r;
}

using PathVector = std::map<Path, Rat, PathLess>;

inline void pv_add_term(PathVector& v, const Path& p, const Rat& c) {
  if (c == 0) return;
  auto it = v.find(p);
  if (it == v.end()) {
    v.emplace(p, c);
  } else {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

inline PathVector pv_of(const Path& p, const Rat& c = Rat(1)) {
  PathVector v;
  pv_add_term(v, p, c);
  return v;
}

inline PathVector pv_add(const PathVector& x, const PathVector& y) {
  PathVector r = x;
  for (const auto& [p, c] : y) pv_add_term(r, p, c);
  return r;
}

inline PathVector pv_scale(const Rat& c, const PathVector& x) {
  PathVector r;
  if (c == 0) return r;
  for (const auto& [p, co] : x) r.emplace(p, c * co);
  return r;
}

inline PathVector pv_sub(const PathVector& x, const PathVector& y) {
  return pv_add(x, pv_scale(Rat(-1), y));
}

// Product truncated to words of length < N.
inline PathVector pv_mul(const Quiver& Q, int N, const PathVector& x,
                         const PathVector& y) {
  PathVector r;
  for (const auto& [px, cx] : x)
    for (const auto& [py, cy] : y) {
      if (px.length() + py.length() >= N) continue;
      if (auto p = try_concat(Q, px, py)) pv_add_term(r, *p, cx * cy);
    }
  return r;
}

inline PathVector pv_truncate(const PathVector& x, int N) {
  PathVector r;
  for (const auto& [p, c] : x)
    if (p.length() < N) r.emplace(p, c);
  return r;
}

inline int pv_min_degree(const PathVector& x) {  // -1 for the zero vector
  if (x.empty()) return -1;
  return x.begin()->first.length();  // PathLess orders by length first
}

inline int pv_max_degree(const PathVector& x) {
  if (x.empty()) return -1;
  return x.rbegin()->first.length();
}

inline PathVector pv_degree_part(const PathVector& x, int d) {
  PathVector r;
  for (const auto& [p, c] : x)
    if (p.length() == d) r.emplace(p, c);
  return r;
}

// All terms share one (head, tail) pair; nullopt for zero or mixed vectors.
inline std::optional<std::pair<int, int>> pv_uniform_type(const Quiver& Q,
                                                          const PathVector& x) {
  std::optional<std::pair<int, int>> type;
  for (const auto& [p, c] : x) {
    std::pair<int, int> t{path_head(Q, p), path_tail(Q, p)};
    if (!type) {
      type = t;
    } else if (*type != t) {
      return std::nullopt;
    }
  }
  return type;
}

inline std::string to_string(const Quiver& Q, const Path& p) {
  if (p.is_lazy()) return "e" + std::to_string(p.base + 1);
  std::string s;
  for (size_t i = 0; i < p.word.size(); ++i) {
    if (i) s += "*";
    s += Q.arrow(p.word[i]).id;
  }
  return s;
}

inline std::string rat_to_string(const Rat& c) {
  return c.str();  // "p/q" or "p"
}

inline std::string to_string(const Quiver& Q, const PathVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    const Rat& c = it->second;
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? "-" : "+";
    }
    if (mag != 1) s += rat_to_string(mag) + "*";
    s += to_string(Q, it->first);
  }
  return s;
}

}  // namespace qpkit
