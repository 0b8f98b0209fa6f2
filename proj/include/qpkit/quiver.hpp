#pragma once
// Loop-free quivers with string arrow ids.  Arrows are kept sorted by
// (tail, head, construction order); every block structure downstream
// (in/out enumerations, triangle maps) relies on this fixed order.

#include <map>
#include <string>
#include <vector>

#include "qpkit/common.hpp"
#include "qpkit/matrix.hpp"

namespace qpkit {

struct Arrow {
  std::string id;
  int tail = 0;  // t(a)
  int head = 0;  // h(a)

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int n) : n_(n) { QPKIT_REQUIRE(n >= 0, "Quiver: bad size"); }

  int vertex_count() const { return n_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int idx) const {
    QPKIT_REQUIRE(0 <= idx && idx < arrow_count(), "Quiver: bad arrow index");
    return arrows_[static_cast<size_t>(idx)];
  }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  // Insert keeping (tail, head, insertion order); returns the new index.
  int add_arrow(const std::string& id, int tail, int head) {
    QPKIT_REQUIRE(0 <= tail && tail < n_ && 0 <= head && head < n_,
                  "Quiver::add_arrow: vertex out of range");
    QPKIT_REQUIRE(tail != head, "Quiver::add_arrow: loops not allowed");
    QPKIT_REQUIRE(!id.empty(), "Quiver::add_arrow: empty id");
    for (const Arrow& a : arrows_)
      QPKIT_REQUIRE(a.id != id, "Quiver::add_arrow: duplicate id '" + id + "'");
    size_t pos = 0;
    while (pos < arrows_.size() &&
           (arrows_[pos].tail < tail ||
            (arrows_[pos].tail == tail && arrows_[pos].head <= head)))
      ++pos;
    arrows_.insert(arrows_.begin() + static_cast<long>(pos),
                   Arrow{id, tail, head});
    return static_cast<int>(pos);
  }

  bool has_arrow_id(const std::string& id) const {
    for (const Arrow& a : arrows_)
      if (a.id == id) return true;
    return false;
  }

  int arrow_index(const std::string& id) const {
    for (int i = 0; i < arrow_count(); ++i)
      if (arrows_[static_cast<size_t>(i)].id == id) return i;
    throw error("Quiver::arrow_index: no arrow '" + id + "'");
  }

  // Arrow indices with head k, in stored order.
  std::vector<int> in_arrows(int k) const {
    std::vector<int> r;
    for (int i = 0; i < arrow_count(); ++i)
      if (arrows_[static_cast<size_t>(i)].head == k) r.push_back(i);
    return r;
  }

  // Arrow indices with tail k, in stored order.
  std::vector<int> out_arrows(int k) const {
    std::vector<int> r;
    for (int i = 0; i < arrow_count(); ++i)
      if (arrows_[static_cast<size_t>(i)].tail == k) r.push_back(i);
    return r;
  }

  int arrows_between(int tail, int head) const {
    int c = 0;
    for (const Arrow& a : arrows_)
      if (a.tail == tail && a.head == head) ++c;
    return c;
  }

  bool has_two_cycle_through(int k) const {
    for (int j = 0; j < n_; ++j)
      if (j != k && arrows_between(j, k) > 0 && arrows_between(k, j) > 0)
        return true;
    return false;
  }

  bool has_any_two_cycle() const {
    for (int k = 0; k < n_; ++k)
      if (has_two_cycle_through(k)) return true;
    return false;
  }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

// Quiver of a skew-symmetric matrix: [b_{i,j}]_+ arrows from j to i.
// The result has no loops or 2-cycles.
inline Quiver quiver_from_matrix(const IntMat& B) {
  QPKIT_REQUIRE(is_skew_symmetric(B), "quiver_from_matrix: not skew-symmetric");
  Quiver Q(B.rows);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) {
      long long m = B.at(i, j);
      for (long long c = 0; c < m; ++c) {
        std::string id =
            "a" + std::to_string(j + 1) + "_" + std::to_string(i + 1);
        if (m > 1) id += "_" + std::to_string(c + 1);
        Q.add_arrow(id, j, i);
      }
    }
  return Q;
}

// b_{i,j} = #(arrows j -> i) - #(arrows i -> j).
inline IntMat matrix_of(const Quiver& Q) {
  int n = Q.vertex_count();
  IntMat B(n, n);
  for (const Arrow& a : Q.arrows()) {
    B.at(a.head, a.tail) += 1;
    B.at(a.tail, a.head) -= 1;
  }
  return B;
}

inline Quiver opposite_quiver(const Quiver& Q) {
  Quiver R(Q.vertex_count());
  for (const Arrow& a : Q.arrows()) R.add_arrow(a.id, a.head, a.tail);
  return R;
}

inline std::string to_string(const Quiver& Q) {
  std::string s = std::to_string(Q.vertex_count()) + " vertices;";
  for (const Arrow& a : Q.arrows())
    s += " " + a.id + ":" + std::to_string(a.tail + 1) + "->" +
         std::to_string(a.head + 1);
  return s;
}

}  // namespace qpkit
