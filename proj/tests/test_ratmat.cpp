#include <catch2/catch_amalgamated.hpp>

#include "qpkit/ratmat.hpp"

using namespace qpkit;

TEST_CASE("arithmetic and shape helpers") {
  RatMat a = rat_mat({{1, 2}, {3, 4}});
  RatMat b = rat_mat({{0, 1}, {1, 0}});
  CHECK(a + b - b == a);
  CHECK((a * b) == rat_mat({{2, 1}, {4, 3}}));
  CHECK((Rat(2) * a) == rat_mat({{2, 4}, {6, 8}}));
  CHECK(transpose(a) == rat_mat({{1, 3}, {2, 4}}));
  CHECK(RatMat::identity(2) * a == a);
  CHECK_THROWS_AS(a * rat_mat({{1, 2, 3}}), error);

  RatMat h = hconcat(a, b);
  CHECK(h.rows == 2);
  CHECK(h.cols == 4);
  CHECK(block_of(h, 0, 2, 2, 2) == b);
  RatMat v = vconcat(a, b);
  CHECK(v.rows == 4);
  CHECK(column_of(v, 0) == rat_mat({{1}, {3}, {0}, {1}}));
  RatMat d(3, 3);
  set_block(d, 1, 1, rat_mat({{7}}));
  CHECK(d.at(1, 1) == 7);
  CHECK_THROWS_AS(set_block(d, 2, 2, a), error);

  RatMat empty(0, 2);
  CHECK(vconcat(empty, a) == a);
  CHECK(empty.is_zero());
}

TEST_CASE("row reduction, rank, and pivots") {
  RatMat m = rat_mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  std::vector<int> piv;
  RatMat r = rref(m, &piv);
  CHECK(piv == std::vector<int>{0, 1});
  CHECK(r == rat_mat({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  CHECK(rank_of(m) == 2);
  CHECK(rank_of(RatMat(0, 3)) == 0);
  CHECK(rank_of(RatMat::identity(4)) == 4);

  RatMat cs = column_space(m);
  CHECK(cs.cols == 2);
  CHECK(span_contains(cs, m));
  CHECK(span_contains(m, cs));
}

TEST_CASE("kernel columns really annihilate") {
  RatMat m = rat_mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  RatMat k = kernel(m);
  CHECK(k.cols == 1);
  CHECK((m * k).is_zero());
  CHECK(k == rat_mat({{-1}, {-1}, {1}}));
  CHECK(kernel(RatMat::identity(3)).cols == 0);
  CHECK(kernel(RatMat(2, 0)).cols == 0);

  // Wide zero map: the kernel is everything.
  RatMat z(1, 3);
  CHECK(kernel(z) == RatMat::identity(3));
}

TEST_CASE("solving, inversion, and inconsistency") {
  RatMat A = rat_mat({{2, 1}, {1, 3}});
  RatMat B = rat_mat({{5}, {10}});
  auto X = solve_matrix(A, B);
  REQUIRE(X.has_value());
  CHECK(A * *X == B);
  CHECK(*X == rat_mat({{1}, {3}}));

  // Inconsistent right-hand side.
  RatMat S = rat_mat({{1, 1}, {2, 2}});
  CHECK_FALSE(solve_matrix(S, rat_mat({{1}, {0}})).has_value());

  // Underdetermined: free variables are pinned to zero.
  auto Y = solve_matrix(rat_mat({{1, 1}}), rat_mat({{4}}));
  REQUIRE(Y.has_value());
  CHECK(*Y == rat_mat({{4}, {0}}));

  RatMat inv = inverse(A);
  CHECK(A * inv == RatMat::identity(2));
  CHECK(inv * A == RatMat::identity(2));
  CHECK_THROWS_AS(inverse(S), error);
  CHECK_THROWS_AS(inverse(RatMat(2, 3)), error);
}

TEST_CASE("determinants") {
  CHECK(determinant(rat_mat({{1, 2}, {3, 4}})) == Rat(-2));
  CHECK(determinant(rat_mat({{2, 0, 0}, {5, 3, 0}, {1, 1, -1}})) == Rat(-6));
  CHECK(determinant(rat_mat({{0, 1}, {1, 0}})) == Rat(-1));  // one swap
  CHECK(determinant(rat_mat({{1, 1}, {2, 2}})) == Rat(0));
  CHECK(determinant(RatMat::identity(5)) == Rat(1));
  CHECK(determinant(RatMat(0, 0)) == Rat(1));
  RatMat a = rat_mat({{1, 2}, {3, 4}});
  RatMat b = rat_mat({{0, 1}, {-1, 2}});
  CHECK(determinant(a * b) == determinant(a) * determinant(b));
  CHECK_THROWS_AS(determinant(RatMat(2, 3)), error);
}

TEST_CASE("rank normal form gives transforms, not factors") {
  RatMat C = rat_mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  RankNormalForm f = rank_normal_form(C);
  CHECK(f.rank == 2);
  CHECK(rank_of(f.p) == C.rows);
  CHECK(rank_of(f.q) == C.cols);
  RatMat normal = f.p * C * f.q;
  RatMat want(C.rows, C.cols);
  for (int i = 0; i < f.rank; ++i) want.at(i, i) = 1;
  CHECK(normal == want);

  // Degenerate shapes.
  CHECK(rank_normal_form(RatMat(0, 3)).rank == 0);
  CHECK(rank_normal_form(RatMat(2, 2)).rank == 0);
  RankNormalForm id = rank_normal_form(RatMat::identity(3));
  CHECK(id.rank == 3);
}

TEST_CASE("extending a subspace to a basis of a span") {
  RatMat pool = rat_mat({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
  RatMat inside = rat_mat({{1}, {1}, {0}});  // sum of the first two columns
  RatMat added = complement_in(inside, pool);
  CHECK(added.cols == 1);
  RatMat joined = hconcat(inside, added);
  CHECK(rank_of(joined) == 2);
  CHECK(span_contains(pool, joined));
  CHECK(span_contains(joined, pool));

  // Same request with a seeded generator: possibly different columns, same
  // properties.
  Rng rng(42);
  RatMat added2 = complement_in(inside, pool, &rng);
  CHECK(added2.cols == 1);
  CHECK(rank_of(hconcat(inside, added2)) == 2);

  // Starting from the zero subspace returns a full basis.
  RatMat basis = complement_in(RatMat(3, 0), pool);
  CHECK(basis.cols == 2);

  // A vector outside the pool's span is rejected.
  CHECK_THROWS_AS(complement_in(rat_mat({{0}, {0}, {1}}), pool), error);
}
