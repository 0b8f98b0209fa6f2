// Walks the two-vertex seed pattern far enough to see its period and
// prints every invariant along the way.

#include <iostream>

#include "qpkit/seed.hpp"

using namespace qpkit;

int main() {
  IntMat b(2, 2);
  b.at(0, 1) = 1;
  b.at(1, 0) = -1;

  const TreeWord word{{1, 0, 1, 0, 1, 0, 1}};
  std::cout << "walking directions " << to_string(word)
            << " from the one-arrow two-vertex matrix\n\n";

  const auto states = invariants_along(b, word);
  for (size_t t = 0; t < states.size(); ++t) {
    const auto& ext = states[t].first;
    const auto& inv = states[t].second;
    std::cout << "t" << t << ":\n";
    for (int i = 0; i < ext.entries.rows; ++i) {
      std::cout << "    [";
      for (int j = 0; j < ext.entries.cols; ++j)
        std::cout << (j ? " " : "") << ext.entries.at(i, j);
      std::cout << "]" << (i + 1 == ext.n ? "  --" : "") << '\n';
    }
    for (int ell = 0; ell < ext.n; ++ell) {
      std::cout << "  slot " << (ell + 1) << ": g = (";
      for (size_t j = 0; j < inv.g[ell].size(); ++j)
        std::cout << (j ? "," : "") << inv.g[ell][j];
      std::cout << ")  F = " << to_string(inv.f[ell]) << "  h = (";
      for (size_t j = 0; j < inv.h[ell].size(); ++j)
        std::cout << (j ? "," : "") << inv.h[ell][j];
      std::cout << ")\n";
    }
  }

  std::cout << "\nstates t5..t6 repeat t0..t1 with the two slots swapped\n";
  return 0;
}
