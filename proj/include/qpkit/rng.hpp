#pragma once
// Deterministic random draws.
//
// std::mt19937_64 is bit-stable across platforms; the bounded-draw helpers
// below avoid std::uniform_int_distribution, whose output is not pinned by
// the standard, so seeded runs reproduce exactly regardless of toolchain.

#include <cstdint>
#include <random>

#include "qpkit/common.hpp"

namespace qpkit {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // Uniform integer in [lo, hi] inclusive. Rejection sampling keeps the
  // draw unbiased and deterministic.
  long long uniform(long long lo, long long hi) {
    QPKIT_REQUIRE(lo <= hi, "Rng::uniform: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long long>(gen_());  // full 64-bit range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = gen_();
    } while (r >= limit);
    return lo + static_cast<long long>(r % span);
  }

  // Nonzero integer in [-mag, mag].
  long long nonzero(long long mag) {
    QPKIT_REQUIRE(mag >= 1, "Rng::nonzero: magnitude must be positive");
    long long v = uniform(1, 2 * mag);
    return v <= mag ? v : mag - v;  // 1..mag, then -1..-mag
  }

  bool coin() { return (gen_() & 1u) != 0; }

  // Fisher-Yates shuffle of index vector 0..n-1.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(uniform(0, i));
      std::swap(p[i], p[j]);
    }
    return p;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qpkit
