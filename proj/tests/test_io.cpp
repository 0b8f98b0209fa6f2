#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "qpkit/io.hpp"

using namespace qpkit;

namespace {

template <typename Writer>
std::string rendered(Writer w) {
  std::ostringstream out;
  w(out);
  return out.str();
}

}  // namespace

TEST_CASE("matrix text round-trips byte for byte") {
  IntMat b = testfix::rank2_matrix();
  std::string text = rendered([&](std::ostream& o) { write_matrix(o, b); });
  CHECK(text == "2 2\n0 1\n-1 0\n");

  std::istringstream in(text);
  IntMat back = read_matrix(in);
  CHECK(back == b);
  CHECK(rendered([&](std::ostream& o) { write_matrix(o, back); }) == text);

  std::istringstream bad_header("x y\n");
  CHECK_THROWS_AS(read_matrix(bad_header), error);
  std::istringstream short_row("2 2\n0 1\n-1\n");
  CHECK_THROWS_AS(read_matrix(short_row), error);
  std::istringstream truncated("2 2\n0 1\n");
  CHECK_THROWS_AS(read_matrix(truncated), error);
}

TEST_CASE("quiver text lists arrows with 1-based endpoints") {
  Quiver Q = testfix::three_cycle_quiver();
  std::string text = rendered([&](std::ostream& o) { write_quiver(o, Q); });
  CHECK(text == "3\na 1 2\nb 2 3\nc 3 1\n");

  std::istringstream in(text);
  Quiver back = read_quiver(in);
  CHECK(back == Q);
  CHECK(rendered([&](std::ostream& o) { write_quiver(o, back); }) == text);

  std::istringstream zero("0\n");
  CHECK_THROWS_AS(read_quiver(zero), error);
  std::istringstream range("2\na 1 3\n");
  CHECK_THROWS_AS(read_quiver(range), error);
  std::istringstream malformed("2\na 1\n");
  CHECK_THROWS_AS(read_quiver(malformed), error);
}

TEST_CASE("path words print with stars and re-parse") {
  Quiver Q = testfix::three_cycle_quiver();
  Path cb{{2, 1}};
  CHECK(path_to_text(Q, cb) == "c*b");
  CHECK(path_from_text(Q, "c*b") == cb);
  CHECK(path_from_text(Q, "a*c*b") == Path{{0, 2, 1}});

  CHECK_THROWS_AS(path_to_text(Q, Path::lazy(0)), error);
  CHECK_THROWS_AS(path_from_text(Q, "c*a"), error);  // does not compose
  CHECK_THROWS_AS(path_from_text(Q, "a**b"), error);
  CHECK_THROWS_AS(path_from_text(Q, "zz"), error);
  CHECK_THROWS_AS(path_from_text(Q, ""), error);
}

TEST_CASE("potential text carries exact rational coefficients") {
  Quiver Q = testfix::three_cycle_quiver();
  // Use the canonically rotated cycle so the printed word is stable.
  PathVector s = testfix::three_cycle_qp().potential;
  std::string text =
      rendered([&](std::ostream& o) { write_potential(o, Q, s); });
  CHECK(text == "1  a*c*b\n");
  std::istringstream in(text);
  CHECK(read_potential(in, Q) == s);

  Quiver tc = testfix::two_cycle_quiver();
  PathVector half;
  pv_add_term(half, Path{{1, 0}}, Rat(-1, 2));
  std::string ht =
      rendered([&](std::ostream& o) { write_potential(o, tc, half); });
  CHECK(ht == "-1/2  b*a\n");
  std::istringstream hin(ht);
  CHECK(read_potential(hin, tc) == half);

  // Repeated lines accumulate like term addition.
  std::istringstream twice("1  a*c*b\n2  a*c*b\n");
  PathVector merged = read_potential(twice, Q);
  REQUIRE(merged.size() == 1);
  CHECK(merged.begin()->second == 3);
}

TEST_CASE("representation text writes blocks in arrow order") {
  Quiver Q = testfix::three_cycle_quiver();
  DecoratedRep m = testfix::interval_23_rep();
  std::string text = rendered([&](std::ostream& o) { write_rep(o, Q, m); });
  CHECK(text == "dims 0 1 1\ndec 0 0 0\narrow a\narrow b\n1\narrow c\n");
  std::istringstream in(text);
  CHECK(read_rep(in, Q) == m);

  Quiver kq = quiver_from_matrix(testfix::kronecker_matrix());
  DecoratedRep k2 = testfix::kronecker_rep(2);
  k2.arrow_maps[1].at(0, 1) = Rat(1, 3);
  std::string kt = rendered([&](std::ostream& o) { write_rep(o, kq, k2); });
  std::istringstream kin(kt);
  DecoratedRep kback = read_rep(kin, kq);
  CHECK(kback == k2);
  CHECK(rendered([&](std::ostream& o) { write_rep(o, kq, kback); }) == kt);
  CHECK(kt.find("1/3") != std::string::npos);

  std::istringstream wrong_order(
      "dims 0 1 1\ndec 0 0 0\narrow b\n1\narrow a\narrow c\n");
  CHECK_THROWS_AS(read_rep(wrong_order, Q), error);
  std::istringstream negative("dims -1 1 1\ndec 0 0 0\n");
  CHECK_THROWS_AS(read_rep(negative, Q), error);
  std::istringstream missing("dims 0 1 1\n");
  CHECK_THROWS_AS(read_rep(missing, Q), error);
}

TEST_CASE("file helpers load what the writers stored") {
  const std::string path = "qpkit_io_roundtrip.tmp";
  {
    std::ofstream out(path);
    write_matrix(out, testfix::chain3_matrix());
  }
  CHECK(load_matrix(path) == testfix::chain3_matrix());
  {
    std::ofstream out(path);
    write_quiver(out, testfix::three_cycle_quiver());
  }
  Quiver q = load_quiver(path);
  CHECK(q == testfix::three_cycle_quiver());
  {
    std::ofstream out(path);
    write_potential(out, q, testfix::three_cycle_potential());
  }
  CHECK(load_potential(path, q) == testfix::three_cycle_potential());
  {
    std::ofstream out(path);
    write_rep(out, q, testfix::interval_23_rep());
  }
  CHECK(load_rep(path, q) == testfix::interval_23_rep());
  CHECK(slurp_file(path) ==
        "dims 0 1 1\ndec 0 0 0\narrow a\narrow b\n1\narrow c\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_matrix("definitely_not_here.txt"), error);
}
