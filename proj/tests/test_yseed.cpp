#include <catch2/catch_amalgamated.hpp>

#include "qpkit/yseed.hpp"

using namespace qpkit;

namespace {

IntMat rank2() {
  IntMat b(2, 2);
  b.at(0, 1) = 1;
  b.at(1, 0) = -1;
  return b;
}

IntMat chain3() {
  IntMat b(3, 3);
  b.at(0, 1) = 1;
  b.at(1, 0) = -1;
  b.at(1, 2) = 1;
  b.at(2, 1) = -1;
  return b;
}

// Fraction from polynomial term lists, in two variables.
YFraction frac2(const std::vector<std::pair<IntVec, long long>>& num,
                const std::vector<std::pair<IntVec, long long>>& den) {
  YFraction f{IntPolynomial::zero(2), IntPolynomial::zero(2)};
  for (const auto& [e, c] : num) f.num.add_term(e, c);
  for (const auto& [e, c] : den) f.den.add_term(e, c);
  return f;
}

}  // namespace

TEST_CASE("initial entries are the coordinate functions") {
  YSeed s = initial_y_seed(rank2());
  CHECK(s.b == rank2());
  REQUIRE(s.y.size() == 2);
  CHECK(s.y[0].num == IntPolynomial::variable(2, 0));
  CHECK(s.y[0].den.is_one());
  CHECK(s.y[1].num == IntPolynomial::variable(2, 1));
  CHECK(s.y[1].den.is_one());
  CHECK_THROWS_AS(initial_y_seed(IntMat(2, 3)), error);
}

TEST_CASE("one mutation, both update branches") {
  // Mutating the middle vertex of 1 -> 2 -> 3 hits a positive and a
  // negative entry of row k at once.
  YSeed s = mutate_y_seed(initial_y_seed(chain3()), 1);
  const IntPolynomial y1 = IntPolynomial::variable(3, 0);
  const IntPolynomial y2 = IntPolynomial::variable(3, 1);
  const IntPolynomial y3 = IntPolynomial::variable(3, 2);
  const IntPolynomial one = IntPolynomial::one(3);
  CHECK(y_equal(s.y[1], {one, y2}));
  CHECK(y_equal(s.y[0], {y1 * (y2 + one), one}));
  CHECK(y_equal(s.y[2], {y3 * y2, y2 + one}));
  IntMat want(3, 3);
  want.at(0, 1) = -1;
  want.at(1, 0) = 1;
  want.at(1, 2) = -1;
  want.at(2, 1) = 1;
  want.at(0, 2) = 1;
  want.at(2, 0) = -1;
  CHECK(s.b == want);
}

TEST_CASE("rank-2 walk visits the expected fractions and closes up") {
  YSeed s = initial_y_seed(rank2());
  const std::vector<int> word{1, 0, 1, 0, 1};

  // Hand-applied values after each step.
  const std::vector<std::vector<YFraction>> expected = {
      {frac2({{{1, 1}, 1}, {{1, 0}, 1}}, {{{0, 0}, 1}}),  // y1(y2+1)
       frac2({{{0, 0}, 1}}, {{{0, 1}, 1}})},              // 1/y2
      {frac2({{{0, 0}, 1}}, {{{1, 1}, 1}, {{1, 0}, 1}}),
       frac2({{{1, 1}, 1}, {{1, 0}, 1}, {{0, 0}, 1}}, {{{0, 1}, 1}})},
      {frac2({{{1, 0}, 1}, {{0, 0}, 1}}, {{{1, 1}, 1}}),  // (y1+1)/(y1 y2)
       frac2({{{0, 1}, 1}}, {{{1, 1}, 1}, {{1, 0}, 1}, {{0, 0}, 1}})},
      {frac2({{{1, 1}, 1}}, {{{1, 0}, 1}, {{0, 0}, 1}}),
       frac2({{{0, 0}, 1}}, {{{1, 0}, 1}})},
      {frac2({{{0, 1}, 1}}, {{{0, 0}, 1}}),  // the two coordinates, swapped
       frac2({{{1, 0}, 1}}, {{{0, 0}, 1}})}};

  for (size_t t = 0; t < word.size(); ++t) {
    s = mutate_y_seed(s, word[t]);
    INFO("after step " << t + 1);
    CHECK(y_equal(s.y[0], expected[t][0]));
    CHECK(y_equal(s.y[1], expected[t][1]));
  }
  IntMat neg(2, 2);
  neg.at(0, 1) = -1;
  neg.at(1, 0) = 1;
  CHECK(s.b == neg);

  // Five more steps return to the start.
  for (int t = 4; t >= 0; --t) s = mutate_y_seed(s, word[static_cast<size_t>(t)]);
  CHECK(y_seed_equal(s, initial_y_seed(rank2())));
}

TEST_CASE("mutation is an involution on the seed") {
  for (const IntMat& b : {rank2()}) {
    YSeed s = initial_y_seed(b);
    s = mutate_y_seed(s, 0);  // move off the base point first
    for (int k = 0; k < b.rows; ++k) {
      YSeed twice = mutate_y_seed(mutate_y_seed(s, k), k);
      CHECK(y_seed_equal(twice, s));
    }
  }
  YSeed s3 = mutate_y_seed(initial_y_seed(chain3()), 1);
  for (int k = 0; k < 3; ++k) {
    YSeed twice = mutate_y_seed(mutate_y_seed(s3, k), k);
    CHECK(y_seed_equal(twice, s3));
  }
  CHECK_THROWS_AS(mutate_y_seed(s3, 3), error);
  CHECK_THROWS_AS(mutate_y_seed(s3, -1), error);
}

TEST_CASE("fraction reduction and printing") {
  const IntPolynomial y1 = IntPolynomial::variable(2, 0);
  const IntPolynomial y2 = IntPolynomial::variable(2, 1);
  const IntPolynomial one = IntPolynomial::one(2);

  YFraction r = reduce_fraction({y1 * y2 + y1, y1});
  CHECK(r.num == y2 + one);
  CHECK(r.den.is_one());

  // Integer content is cancelled; a common non-monomial factor is not.
  r = reduce_fraction({(y1 + one) * 2, (y1 * y2 + y2) * 4});
  CHECK(r.num == y1 + one);
  CHECK(r.den == (y1 * y2 + y2) * 2);
  CHECK(y_equal(r, {one, y2 * 2}));

  CHECK(to_string(YFraction{one, y2}) == "1/y2");
  CHECK(to_string(YFraction{y1 * y2 + y1, one}) == "y1*y2+y1");
  CHECK(to_string(YFraction{y1 + one, y2 + one}) == "(y1+1)/(y2+1)");
  CHECK_THROWS_AS(reduce_fraction({one, IntPolynomial::zero(2)}), error);
}
