#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "qpkit/qp_mutate.hpp"

using namespace qpkit;
using testfix::three_cycle_qp;
using testfix::three_cycle_quiver;
using testfix::two_cycle_quiver;

namespace {

QP line_qp(int truncation = 8) {
  return make_qp(quiver_from_matrix(testfix::chain3_matrix()), PathVector{},
                 truncation);
}

}  // namespace

TEST_CASE("rewiring a linear quiver at the middle vertex") {
  QP pre = premutate_qp(line_qp(), 1);
  const Quiver& Qt = pre.quiver;
  REQUIRE(Qt.arrow_count() == 3);
  CHECK(Qt.has_arrow_id("[a2_1.a3_2]"));
  CHECK(Qt.has_arrow_id("a2_1'"));
  CHECK(Qt.has_arrow_id("a3_2'"));
  CHECK(Qt.arrow(Qt.arrow_index("[a2_1.a3_2]")).tail == 2);
  CHECK(Qt.arrow(Qt.arrow_index("[a2_1.a3_2]")).head == 0);
  CHECK(Qt.arrow(Qt.arrow_index("a2_1'")).tail == 0);
  CHECK(Qt.arrow(Qt.arrow_index("a3_2'")).head == 2);

  // Potential: exactly the unit triangle through the composite.
  REQUIRE(pre.potential.size() == 1);
  CHECK(pre.potential.begin()->second == Rat(1));
  CHECK(pre.potential.begin()->first.length() == 3);

  // The rewired quiver realizes the mutated exchange matrix.
  CHECK(matrix_of(Qt) ==
        mutate_matrix(ExtendedExchangeMatrix::from_matrix(
                          testfix::chain3_matrix()), 1).entries);

  CHECK_THROWS_AS(premutate_qp(line_qp(), 3), error);
  QP bad = make_qp(two_cycle_quiver(), PathVector{}, 8);
  CHECK_THROWS_AS(premutate_qp(bad, 0), error);
}

TEST_CASE("splitting off a single two-arrow cycle") {
  const Quiver Q = two_cycle_quiver();
  Path ab{{0, 1}, -1};
  SplitReduceResult r = split_reduce(make_qp(Q, pv_of(ab), 8));
  CHECK(r.trivial_pairs == 1);
  CHECK(r.reduced.quiver.arrow_count() == 0);
  CHECK(r.reduced.potential.empty());
  CHECK(r.phi.images == identity_equivalence(Q).images);

  // A non-unit coefficient is normalized away by the equivalence.
  SplitReduceResult r3 = split_reduce(make_qp(Q, pv_of(ab, Rat(3)), 8));
  CHECK(r3.trivial_pairs == 1);
  CHECK(r3.reduced.quiver.arrow_count() == 0);
  PathVector moved =
      cyclic_normalize(Q, apply_equivalence(Q, 8, r3.phi, pv_of(ab, Rat(3))));
  CHECK(moved == cyclic_normalize(Q, pv_of(ab)));
}

TEST_CASE("longer terms through a split pair are absorbed") {
  const Quiver Q = two_cycle_quiver();
  PathVector S = pv_of(Path{{0, 1}, -1});
  pv_add_term(S, Path{{0, 1, 0, 1}, -1}, Rat(1));
  QP qp = make_qp(Q, S, 8);
  SplitReduceResult r = split_reduce(qp);
  CHECK(r.trivial_pairs == 1);
  CHECK(r.reduced.quiver.arrow_count() == 0);
  CHECK(r.reduced.potential.empty());

  // The accumulated equivalence carries the original potential exactly onto
  // the unit cycle.
  PathVector image =
      cyclic_normalize(Q, apply_equivalence(Q, 8, r.phi, qp.potential));
  CHECK(image == cyclic_normalize(Q, pv_of(Path{{0, 1}, -1})));
}

TEST_CASE("independent pairs at different vertex pairs all split") {
  Quiver Q(3);
  Q.add_arrow("a", 0, 1);
  Q.add_arrow("b", 1, 0);
  Q.add_arrow("d", 0, 2);
  Q.add_arrow("e", 2, 0);
  // Stored order: a=0, d=1, b=2, e=3.
  PathVector S = pv_of(Path{{0, 2}, -1});
  pv_add_term(S, Path{{1, 3}, -1}, Rat(1));
  SplitReduceResult r = split_reduce(make_qp(Q, S, 8));
  CHECK(r.trivial_pairs == 2);
  CHECK(r.reduced.quiver.arrow_count() == 0);
  CHECK(r.reduced.potential.empty());
}

TEST_CASE("mutation of the linear quiver produces the reduced triangle") {
  QPMutationResult m = mutate_qp(line_qp(), 1);
  CHECK(m.trivial_pairs == 0);  // nothing to split: no old potential
  CHECK(m.reduced.quiver.arrow_count() == 3);
  REQUIRE(m.reduced.potential.size() == 1);
  CHECK(m.reduced.potential.begin()->second == Rat(1));
  CHECK(is_reduced_potential(m.reduced.potential));

  // Mutating back yields the linear matrix and kills the potential.
  QPMutationResult back = mutate_qp(m.reduced, 1);
  CHECK(back.trivial_pairs == 1);
  CHECK(matrix_of(back.reduced.quiver) == testfix::chain3_matrix());
  CHECK(back.reduced.potential.empty());
}

TEST_CASE("mutation squares to the identity on the exchange matrix") {
  QP qp = three_cycle_qp();
  for (int k = 0; k < 3; ++k) {
    QPMutationResult once = mutate_qp(qp, k);
    QPMutationResult twice = mutate_qp(once.reduced, k);
    CHECK(matrix_of(twice.reduced.quiver) == matrix_of(qp.quiver));
    CHECK(is_reduced_potential(twice.reduced.potential));
  }
}

TEST_CASE("the splitting equivalence separates degrees") {
  // After mutating the triangle, the accumulated equivalence must carry the
  // rewired potential to (unit two-arrow cycles) + (terms of degree >= 3
  // avoiding the split arrows).
  QP qp = three_cycle_qp();
  QPMutationResult m = mutate_qp(qp, 0);
  CHECK(m.trivial_pairs == 1);
  const Quiver& Qp = m.premutated.quiver;
  PathVector image = cyclic_normalize(
      Qp, apply_equivalence(Qp, qp.truncation, m.phi, m.premutated.potential));
  PathVector deg2 = pv_degree_part(image, 2);
  REQUIRE(deg2.size() == 1);
  CHECK(deg2.begin()->second == Rat(1));
  // The remainder is supported away from the split pair.
  std::vector<bool> split(static_cast<size_t>(Qp.arrow_count()), false);
  for (const auto& [p, c] : deg2)
    for (int a : p.word) split[static_cast<size_t>(a)] = true;
  for (const auto& [p, c] : image) {
    if (p.length() == 2) continue;
    CHECK(p.length() >= 3);
    for (int a : p.word) CHECK_FALSE(split[static_cast<size_t>(a)]);
  }
}

TEST_CASE("right-equivalences validate, compose, and invert") {
  const Quiver Q = three_cycle_quiver();
  const int N = 8;
  RightEquivalence phi = identity_equivalence(Q);
  phi.images[0] = pv_add(pv_of(Path::of_arrow(0)),
                         pv_of(Path{{0, 2, 1, 0}, -1}, Rat(2)));
  phi.images[2] = pv_of(Path::of_arrow(2), Rat(3));
  CHECK_NOTHROW(validate_equivalence(Q, phi));

  RightEquivalence psi = invert_equivalence(Q, N, phi);
  for (int a = 0; a < 3; ++a) {
    CHECK(apply_equivalence(Q, N, psi, phi.images[static_cast<size_t>(a)]) ==
          pv_of(Path::of_arrow(a)));
  }
  RightEquivalence comp = compose_equivalence(Q, N, psi, phi);
  PathVector probe = pv_of(Path{{2, 1, 0}, -1});
  CHECK(apply_equivalence(Q, N, comp, probe) == probe);

  // Bad images are rejected: endpoint change, zero image, singular
  // degree-1 block on a parallel pair.
  RightEquivalence bad = identity_equivalence(Q);
  bad.images[0] = pv_of(Path::of_arrow(1));
  CHECK_THROWS_AS(validate_equivalence(Q, bad), error);
  bad = identity_equivalence(Q);
  bad.images[1] = PathVector{};
  CHECK_THROWS_AS(validate_equivalence(Q, bad), error);

  Quiver K = quiver_from_matrix(testfix::kronecker_matrix());
  RightEquivalence merge = identity_equivalence(K);
  merge.images[0] = pv_add(pv_of(Path::of_arrow(0)), pv_of(Path::of_arrow(1)));
  merge.images[1] = pv_add(pv_of(Path::of_arrow(0)), pv_of(Path::of_arrow(1)));
  CHECK_THROWS_AS(validate_equivalence(K, merge), error);
}
