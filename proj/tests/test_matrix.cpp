#include <catch2/catch_amalgamated.hpp>

#include "qpkit/matrix.hpp"
#include "qpkit/rng.hpp"

using namespace qpkit;

namespace {

IntMat skew2(long long v) {
  IntMat b(2, 2);
  b.at(0, 1) = v;
  b.at(1, 0) = -v;
  return b;
}

IntMat random_skew(int n, Rng& rng) {
  IntMat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long long v = rng.uniform(-3, 3);
      b.at(i, j) = v;
      b.at(j, i) = -v;
    }
  return b;
}

}  // namespace

TEST_CASE("skew-symmetry recognition") {
  CHECK(is_skew_symmetric(skew2(4)));
  CHECK(is_skew_symmetric(IntMat(3, 3)));
  IntMat bad(2, 2);
  bad.at(0, 1) = 1;
  CHECK_FALSE(is_skew_symmetric(bad));
  IntMat rect(2, 3);
  CHECK_FALSE(is_skew_symmetric(rect));
}

TEST_CASE("extended matrix construction and accessors") {
  const ExtendedExchangeMatrix ext = principal_extension(skew2(1));
  CHECK(ext.n == 2);
  CHECK(ext.entries.rows == 4);
  CHECK(ext.entries.at(2, 0) == 1);
  CHECK(ext.entries.at(3, 1) == 1);
  CHECK(ext.entries.at(2, 1) == 0);
  CHECK(ext.principal_part() == skew2(1));
  CHECK(ext.principal_column(0) == IntVec{0, -1});

  IntMat nonskew(2, 2);
  nonskew.at(0, 0) = 1;
  CHECK_THROWS_AS(ExtendedExchangeMatrix::from_matrix(nonskew), error);
  IntMat odd(3, 2);
  CHECK_THROWS_AS(ExtendedExchangeMatrix::from_matrix(odd), error);
}

TEST_CASE("mutation at one direction, worked 2x2 example") {
  // Extended matrix of [[0,1],[-1,0]] mutated in direction 2, then 1:
  // hand-applied update rule.
  ExtendedExchangeMatrix ext = principal_extension(skew2(1));
  ExtendedExchangeMatrix t1 = mutate_matrix(ext, 1);
  IntMat want1(4, 2);
  want1.at(0, 1) = -1;
  want1.at(1, 0) = 1;
  want1.at(2, 0) = 1;
  want1.at(3, 1) = -1;
  CHECK(t1.entries == want1);

  ExtendedExchangeMatrix t2 = mutate_matrix(t1, 0);
  IntMat want2(4, 2);
  want2.at(0, 1) = 1;
  want2.at(1, 0) = -1;
  want2.at(2, 0) = -1;
  want2.at(3, 1) = -1;
  CHECK(t2.entries == want2);
}

TEST_CASE("mutation is an involution in every direction") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 5));
    const ExtendedExchangeMatrix ext = principal_extension(random_skew(n, rng));
    for (int k = 0; k < n; ++k)
      CHECK(mutate_matrix(mutate_matrix(ext, k), k) == ext);
  }
}

TEST_CASE("mutation preserves principal skew-symmetry") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 5));
    ExtendedExchangeMatrix ext = principal_extension(random_skew(n, rng));
    for (int step = 0; step < 6; ++step) {
      ext = mutate_matrix(ext, static_cast<int>(rng.uniform(0, n - 1)));
      CHECK(is_skew_symmetric(ext.principal_part()));
    }
  }
}

TEST_CASE("mutation direction must be in range") {
  const ExtendedExchangeMatrix ext = principal_extension(skew2(1));
  CHECK_THROWS_AS(mutate_matrix(ext, -1), error);
  CHECK_THROWS_AS(mutate_matrix(ext, 2), error);
}
