#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "qpkit/dual.hpp"
#include "qpkit/rep.hpp"

using namespace qpkit;
using testfix::interval_23_rep;
using testfix::three_cycle_qp;
using testfix::three_cycle_quiver;
using testfix::two_cycle_quiver;

TEST_CASE("canonical representations and shape validation") {
  const Quiver Q = three_cycle_quiver();
  DecoratedRep z = zero_rep(Q);
  CHECK(z.dims == std::vector<int>{0, 0, 0});
  CHECK_NOTHROW(validate_rep_shapes(Q, z));

  DecoratedRep s = simple_rep(Q, 1);
  CHECK(s.dims == std::vector<int>{0, 1, 0});
  CHECK(s.arrow_maps[0].rows == 1);  // a: M(1) -> M(2), shape 1 x 0
  CHECK(s.arrow_maps[0].cols == 0);
  CHECK_NOTHROW(validate_rep_shapes(Q, s));

  DecoratedRep neg = negative_simple_rep(Q, 2);
  CHECK(neg.dims == std::vector<int>{0, 0, 0});
  CHECK(neg.dec_dims == std::vector<int>{0, 0, 1});

  DecoratedRep bad = s;
  bad.arrow_maps[1] = RatMat(2, 2);
  CHECK_THROWS_AS(validate_rep_shapes(Q, bad), error);
  bad = s;
  bad.dims[0] = -1;
  CHECK_THROWS_AS(validate_rep_shapes(Q, bad), error);
}

TEST_CASE("path evaluation multiplies the arrow actions in order") {
  const Quiver Q = quiver_from_matrix(testfix::kronecker_matrix());
  DecoratedRep m = testfix::kronecker_rep(2);
  CHECK(evaluate_path(Q, m, Path::lazy(0)) == RatMat::identity(2));
  CHECK(evaluate_path(Q, m, Path::of_arrow(0)) == RatMat::identity(2));
  CHECK(evaluate_path(Q, m, Path::of_arrow(1)) == rat_mat({{0, 1}, {0, 0}}));

  const Quiver tri = three_cycle_quiver();
  DecoratedRep t = interval_23_rep();
  RatMat cb = evaluate_path(tri, t, Path{{2, 1}, -1});
  CHECK(cb.rows == 0);
  CHECK(cb.cols == 1);
  CHECK(evaluate_pv(tri, t, pv_of(Path::of_arrow(1), Rat(4)), 2, 1) ==
        rat_mat({{4}}));
  CHECK_THROWS_AS(evaluate_pv(tri, t, pv_of(Path::of_arrow(1)), 0, 1), error);
}

TEST_CASE("triangle data at each vertex of the cyclic potential") {
  QP qp = three_cycle_qp();
  DecoratedRep m = interval_23_rep();
  REQUIRE(check_relations(qp, m));

  TriangleMaps t1 = triangle_maps(qp, m, 1);
  CHECK(t1.ins == std::vector<int>{0});
  CHECK(t1.outs == std::vector<int>{1});
  CHECK(t1.alpha.rows == 1);   // into M(2) of dimension 1
  CHECK(t1.alpha.cols == 0);   // from M(1) of dimension 0
  CHECK(t1.beta == RatMat::identity(1));
  CHECK(t1.gamma.rows == 0);   // second derivative lands in M(1)
  CHECK((t1.alpha * t1.gamma).is_zero());
  CHECK((t1.gamma * t1.beta).is_zero());

  CHECK(rep_g_vector(qp, m) == IntVec{0, 0, -1});
  CHECK(rep_h_vector(qp, m) == IntVec{0, 0, -1});
}

TEST_CASE("invariants of simple and negative simple representations") {
  QP qp = three_cycle_qp();
  for (int k = 0; k < 3; ++k) {
    DecoratedRep s = simple_rep(qp.quiver, k);
    REQUIRE(check_relations(qp, s));
    IntVec h = rep_h_vector(qp, s);
    for (int j = 0; j < 3; ++j)
      CHECK(h[static_cast<size_t>(j)] == (j == k ? -1 : 0));

    DecoratedRep n = negative_simple_rep(qp.quiver, k);
    REQUIRE(check_relations(qp, n));
    IntVec g = rep_g_vector(qp, n);
    for (int j = 0; j < 3; ++j)
      CHECK(g[static_cast<size_t>(j)] == (j == k ? 1 : 0));
    CHECK(rep_h_vector(qp, n) == IntVec{0, 0, 0});
  }
  CHECK(rep_g_vector(qp, simple_rep(qp.quiver, 0)) == IntVec{-1, 0, 1});
}

TEST_CASE("relation failures are reported with a reason") {
  QP qp = three_cycle_qp();
  DecoratedRep all_id;
  all_id.dims = {1, 1, 1};
  all_id.dec_dims = {0, 0, 0};
  all_id.arrow_maps = {RatMat::identity(1), RatMat::identity(1),
                       RatMat::identity(1)};
  std::string why;
  CHECK_FALSE(check_relations(qp, all_id, &why));
  CHECK(why.find("derivative") != std::string::npos);

  // Without a potential the same shape fails on nilpotency alone.
  QP loopy = make_qp(two_cycle_quiver(), {}, 8);
  DecoratedRep cyc;
  cyc.dims = {1, 1};
  cyc.dec_dims = {0, 0};
  cyc.arrow_maps = {RatMat::identity(1), RatMat::identity(1)};
  why.clear();
  CHECK_FALSE(check_relations(loopy, cyc, &why));
  CHECK(why.find("nilpotent") != std::string::npos);
  CHECK_FALSE(is_nilpotent_rep(loopy.quiver, cyc, 10));

  cyc.arrow_maps[1] = RatMat(1, 1);  // kill the returning arrow
  CHECK(is_nilpotent_rep(loopy.quiver, cyc, 2));
  CHECK(check_relations(loopy, cyc));
}

TEST_CASE("direct sums add dimensions and invariants") {
  QP qp = three_cycle_qp();
  DecoratedRep a = interval_23_rep();
  DecoratedRep b = simple_rep(qp.quiver, 0);
  b.dec_dims[1] = 1;  // mixed decoration comes along for the ride
  DecoratedRep s = direct_sum(qp.quiver, a, b);
  CHECK(s.dims == std::vector<int>{1, 1, 1});
  CHECK(s.dec_dims == std::vector<int>{0, 1, 0});
  REQUIRE(check_relations(qp, s));
  CHECK(rep_g_vector(qp, s) ==
        add_vectors(rep_g_vector(qp, a), rep_g_vector(qp, b)));
  CHECK(rep_h_vector(qp, s) ==
        add_vectors(rep_h_vector(qp, a), rep_h_vector(qp, b)));

  // Block placement: the first summand occupies the leading coordinates.
  CHECK(s.arrow_maps[1].at(0, 0) == Rat(1));  // b-action of the interval
}

TEST_CASE("duals transpose and double duals return") {
  QP qp = three_cycle_qp();
  QP opp = opposite_qp(qp);
  CHECK(opp.quiver.arrow_count() == 3);
  CHECK(opp.quiver.arrow(opp.quiver.arrow_index("a")).tail == 1);
  CHECK(opp.quiver.arrow(opp.quiver.arrow_index("a")).head == 0);
  CHECK(opposite_qp(opp).quiver == qp.quiver);
  CHECK(opposite_qp(opp).potential == qp.potential);

  DecoratedRep m = direct_sum(qp.quiver, interval_23_rep(),
                              negative_simple_rep(qp.quiver, 0));
  DecoratedRep d = dual_rep(qp, m);
  CHECK(d.dims == m.dims);
  CHECK(d.dec_dims == m.dec_dims);
  REQUIRE(check_relations(opp, d));
  DecoratedRep dd = dual_rep(opp, d);
  CHECK(dd == m);
}
