#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "qpkit/hom.hpp"
#include "qpkit/jacobian_algebra.hpp"
#include "qpkit/presentation.hpp"

using namespace qpkit;
using testfix::three_cycle_qp;

namespace {

QP a2_qp() {
  return make_qp(quiver_from_matrix(testfix::rank2_matrix()), PathVector{}, 4);
}

DecoratedRep interval_31_rep() {
  DecoratedRep m;
  m.dims = {1, 0, 1};
  m.dec_dims = {0, 0, 0};
  m.arrow_maps = {RatMat(0, 1), RatMat(1, 0), RatMat::identity(1)};
  return m;
}

DecoratedRep interval_12_rep() {
  DecoratedRep m;
  m.dims = {1, 1, 0};
  m.dec_dims = {0, 0, 0};
  m.arrow_maps = {RatMat::identity(1), RatMat(0, 1), RatMat(1, 0)};
  return m;
}

}  // namespace

TEST_CASE("the algebra of the free two-vertex quiver") {
  JacobianAlgebra alg(a2_qp());
  CHECK(alg.dimension() == 3);
  // Basis order: both lazy paths first, then the arrow.
  CHECK(alg.basis()[0] == Path::lazy(0));
  CHECK(alg.basis()[1] == Path::lazy(1));
  CHECK(alg.basis()[2] == Path::of_arrow(0));
  CHECK(alg.component(0, 1) == std::vector<int>{2});
  CHECK(alg.head_of(2) == 0);
  CHECK(alg.tail_of(2) == 1);
  CHECK(alg.index_of(Path::lazy(1)) == 1);
  CHECK_THROWS_AS(alg.index_of(Path{{0, 0}}), error);

  // Multiplication table: the arrow absorbs its endpoints' idempotents.
  auto entries = alg.product(2, 1);  // a * e2
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].first == 2);
  CHECK(entries[0].second == 1);
  CHECK(alg.product(0, 2).size() == 1);  // e1 * a
  CHECK(alg.product(2, 0).empty());      // incomposable

  CHECK(alg.projective_basis(0) == std::vector<int>{0});
  CHECK(alg.projective_basis(1) == std::vector<int>{1, 2});
}

TEST_CASE("construction refuses an unfaithful truncation") {
  QP open_ended = make_qp(testfix::three_cycle_quiver(), PathVector{}, 6);
  CHECK_THROWS_AS(JacobianAlgebra(open_ended), error);
}

TEST_CASE("projective modules and the covariant hom identification") {
  JacobianAlgebra alg(a2_qp());
  const Quiver& Q = alg.qp().quiver;
  DecoratedRep p1 = projective_module(alg, 0);
  DecoratedRep p2 = projective_module(alg, 1);
  CHECK(p1.dims == std::vector<int>{1, 0});
  CHECK(p2.dims == std::vector<int>{1, 1});
  CHECK(p2.arrow_maps[0] == RatMat::identity(1));

  std::vector<DecoratedRep> probes = {simple_rep(Q, 0), simple_rep(Q, 1), p1,
                                      p2, direct_sum(Q, p2, simple_rep(Q, 0))};
  for (const DecoratedRep& nrep : probes) {
    CHECK(hom_dim(Q, p1, nrep) == nrep.dims[0]);
    CHECK(hom_dim(Q, p2, nrep) == nrep.dims[1]);
  }
}

TEST_CASE("projectives of the triangle algebra are two-dimensional") {
  JacobianAlgebra alg(three_cycle_qp());
  const Quiver& Q = alg.qp().quiver;
  CHECK(alg.dimension() == 6);
  std::vector<DecoratedRep> projs;
  for (int k = 0; k < 3; ++k) {
    DecoratedRep pk = projective_module(alg, k);
    CHECK(pk.dims[static_cast<size_t>(k)] == 1);
    int total = 0;
    for (int d : pk.dims) total += d;
    CHECK(total == 2);
    projs.push_back(pk);
  }
  CHECK(projs[1].dims == testfix::interval_23_rep().dims);

  std::vector<DecoratedRep> probes = {
      simple_rep(Q, 0), simple_rep(Q, 2), testfix::interval_23_rep(),
      interval_31_rep(), projs[0]};
  for (int k = 0; k < 3; ++k)
    for (const DecoratedRep& nrep : probes)
      CHECK(hom_dim(Q, projs[static_cast<size_t>(k)], nrep) ==
            nrep.dims[static_cast<size_t>(k)]);
}

TEST_CASE("splitting a combination of paths at an arrow") {
  Quiver Q = testfix::three_cycle_quiver();
  // Canonical rotation of the 3-cycle: word [a, c, b], a applied last.
  PathVector s = three_cycle_qp().potential;
  auto at_b = delta_split(Q, s, 1);
  REQUIRE(at_b.size() == 1);
  CHECK(at_b[0].left == Path{{0, 2}});
  CHECK(at_b[0].right == Path::lazy(1));
  CHECK(at_b[0].coeff == 1);
  auto at_a = delta_split(Q, s, 0);
  REQUIRE(at_a.size() == 1);
  CHECK(at_a[0].left == Path::lazy(1));
  CHECK(at_a[0].right == Path{{2, 1}});
  CHECK(delta_split(Q, pv_of(Path::lazy(0)), 0).empty());
}

TEST_CASE("the derivative map annihilates commutators") {
  QP qp = three_cycle_qp();
  const Quiver& Q = qp.quiver;
  JacobianAlgebra alg(qp);
  std::vector<DecoratedRep> pool = {
      simple_rep(Q, 0),
      simple_rep(Q, 1),
      testfix::interval_23_rep(),
      interval_31_rep(),
      interval_12_rep(),
      projective_module(alg, 0),
      direct_sum(Q, projective_module(alg, 0), interval_31_rep()),
      direct_sum(Q, projective_module(alg, 1), simple_rep(Q, 0))};
  for (const DecoratedRep& m : pool) CHECK(psi_after_phi_is_zero(qp, m));

  // On the two-cycle with its pairing potential the derivative map itself
  // is visibly nonzero.
  QP tc = make_qp(testfix::two_cycle_quiver(), pv_of(Path{{0, 1}, -1}), 6);
  DecoratedRep flat = zero_rep(tc.quiver);
  flat.dims = {1, 1};
  flat.arrow_maps = {RatMat(1, 1), RatMat(1, 1)};
  RatMat psi = psi_map(tc, flat);
  CHECK(psi.rows == 2);
  CHECK(psi.cols == 2);
  CHECK_FALSE(psi.is_zero());
  CHECK(psi_after_phi_is_zero(tc, flat));
}

TEST_CASE("the canonical sequence is exact for a mixed pool") {
  QP qp = three_cycle_qp();
  const Quiver& Q = qp.quiver;
  JacobianAlgebra alg(qp);
  std::vector<DecoratedRep> pool = {
      simple_rep(Q, 0),           simple_rep(Q, 1),
      simple_rep(Q, 2),           testfix::interval_23_rep(),
      interval_31_rep(),          interval_12_rep(),
      projective_module(alg, 0),  projective_module(alg, 2),
      direct_sum(Q, projective_module(alg, 1), interval_31_rep()),
      direct_sum(Q, simple_rep(Q, 0), interval_12_rep())};
  for (const DecoratedRep& m : pool) {
    CanonicalSequence seq = build_sequence(alg, m);
    int dim_m = 0;
    for (int d : m.dims) dim_m += d;
    CHECK(rank_of(seq.ev) == dim_m);
    CHECK((seq.ev * seq.phi).is_zero());
    CHECK((seq.phi * seq.psi).is_zero());
    CHECK(rank_of(seq.phi) == seq.right_off.back() - dim_m);
    CHECK(rank_of(seq.psi) == seq.mid_off.back() - rank_of(seq.phi));
  }
}

TEST_CASE("minimal presentations of simples over the free two-vertex algebra") {
  JacobianAlgebra alg(a2_qp());
  const Quiver& Q = alg.qp().quiver;
  PresentationData pres = minimal_presentation(alg, simple_rep(Q, 1));
  CHECK(pres.p0_mult == IntVec{0, 1});
  CHECK(pres.p1_mult == IntVec{1, 0});
  CHECK(rank_of(pres.phi_bar) == 1);

  // The other simple is projective: nothing to relate.
  PresentationData flat = minimal_presentation(alg, simple_rep(Q, 0));
  CHECK(flat.p0_mult == IntVec{1, 0});
  CHECK(flat.p1_mult == IntVec{0, 0});

  CHECK(e_proj_dimension(alg, simple_rep(Q, 1), simple_rep(Q, 0)) == 1);
  CHECK(e_proj_dimension(alg, simple_rep(Q, 1), simple_rep(Q, 1)) == 0);
  CHECK(e_proj_dimension(alg, simple_rep(Q, 0), simple_rep(Q, 1)) == 0);
}

TEST_CASE("presentation multiplicities on the triangle are canonical") {
  QP qp = three_cycle_qp();
  const Quiver& Q = qp.quiver;
  JacobianAlgebra alg(qp);

  // The 2-3 interval is itself the projective at vertex 2.
  PresentationData proj = minimal_presentation(alg, testfix::interval_23_rep());
  CHECK(proj.p0_mult == IntVec{0, 1, 0});
  CHECK(proj.p1_mult == IntVec{0, 0, 0});

  PresentationData s1 = minimal_presentation(alg, simple_rep(Q, 0));
  CHECK(s1.p0_mult == IntVec{1, 0, 0});
  CHECK(s1.p1_mult == IntVec{0, 1, 0});

  // Complement choices are free; the multiplicities are not.
  Rng r1(3), r2(999);
  PresentationData a = minimal_presentation(alg, simple_rep(Q, 0), &r1);
  PresentationData b = minimal_presentation(alg, simple_rep(Q, 0), &r2);
  CHECK(a.p0_mult == b.p0_mult);
  CHECK(a.p1_mult == b.p1_mult);
  CHECK(rank_of(a.phi_bar) == rank_of(b.phi_bar));
}

TEST_CASE("projective-side extension dimensions across the whole pool") {
  QP qp = three_cycle_qp();
  const Quiver& Q = qp.quiver;
  JacobianAlgebra alg(qp);
  std::vector<DecoratedRep> pool = {
      simple_rep(Q, 0),          simple_rep(Q, 1),
      simple_rep(Q, 2),          projective_module(alg, 0),
      projective_module(alg, 1), projective_module(alg, 2),
      testfix::interval_23_rep(), interval_31_rep(),
      interval_12_rep()};
  Rng rng(20260823);
  int pairs = 0;
  long long total = 0;
  for (const DecoratedRep& m : pool)
    for (const DecoratedRep& nrep : pool) {
      long long e = 0;
      // Every successful call has already cross-checked the presentation
      // count against the closed dimension formula and the dual invariant.
      REQUIRE_NOTHROW(e = e_proj_dimension(alg, m, nrep, &rng));
      CHECK(e >= 0);
      total += e;
      ++pairs;
    }
  CHECK(pairs == 81);
  CHECK(total > 0);  // the pool is not extension-free

  for (const DecoratedRep& nrep : pool) {
    for (int k = 0; k < 3; ++k)
      CHECK(e_proj_dimension(alg, projective_module(alg, k), nrep) == 0);
  }

  // Decorations pair with dimensions and add to the count.
  CHECK(e_proj_dimension(alg, negative_simple_rep(Q, 0),
                         projective_module(alg, 0)) == 1);

  CHECK(e_proj_dimension(alg, simple_rep(Q, 0), simple_rep(Q, 1)) == 1);
  CHECK(e_proj_dimension(alg, simple_rep(Q, 0), simple_rep(Q, 2)) == 0);
}
