#pragma once
// Words labelling walks in the n-regular tree: finite sequences over
// {0,...,n-1} (0-based internally; text form is 1-based, comma-separated)
// with no two consecutive labels equal.

#include <string>
#include <vector>

#include "qpkit/common.hpp"

namespace qpkit {

struct TreeWord {
  std::vector<int> labels;  // 0-based

  static TreeWord empty() { return TreeWord{}; }

  void validate(int n) const {
    for (size_t i = 0; i < labels.size(); ++i) {
      QPKIT_REQUIRE(0 <= labels[i] && labels[i] < n,
                    "TreeWord: label out of range");
      QPKIT_REQUIRE(i == 0 || labels[i] != labels[i - 1],
                    "TreeWord: consecutive labels equal");
    }
  }

  size_t size() const { return labels.size(); }

  TreeWord reversed() const {
    TreeWord w = *this;
    std::reverse(w.labels.begin(), w.labels.end());
    return w;
  }

  friend bool operator==(const TreeWord&, const TreeWord&) = default;
};

// Parse "2,1,2,1,2" (1-based labels) into a 0-based word.
inline TreeWord parse_tree_word(const std::string& text) {
  TreeWord w;
  std::string cur;
  auto flush = [&]() {
    QPKIT_REQUIRE(!cur.empty(), "parse_tree_word: empty label");
    w.labels.push_back(std::stoi(cur) - 1);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      QPKIT_REQUIRE(isdigit(static_cast<unsigned char>(ch)),
                    "parse_tree_word: invalid character");
      cur += ch;
    }
  }
  if (!cur.empty() || !w.labels.empty()) {
    if (!cur.empty()) flush();
  }
  return w;
}

inline std::string to_string(const TreeWord& w) {
  std::string s;
  for (size_t i = 0; i < w.labels.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.labels[i] + 1);
  }
  return s;
}

}  // namespace qpkit
