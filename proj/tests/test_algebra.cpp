#include <doctest.h>

#include "fixtures.hpp"

using namespace homcat;

TEST_CASE("D2: path enumeration modulo x^2") {
  fixtures::D2 d2;
  CHECK(d2.alg.dimension() == 2);
  CHECK(d2.alg.basis()[0].length() == 0);
  CHECK(d2.alg.basis()[1].length() == 1);
  CHECK(d2.alg.path_to_string(d2.alg.basis()[1]) == "x");
  // e*x = x, x*x = 0
  const FieldSpec& f = d2.alg.field();
  CHECK(d2.alg.mult(0, 1)[1] == f.one());
  for (const Scalar& c : d2.alg.mult(1, 1)) CHECK(f.is_zero(c));
}

TEST_CASE("N2: four path classes") {
  fixtures::N2 n2;
  CHECK(n2.alg.dimension() == 4);
  std::size_t trivial = 0, length1 = 0;
  for (const Path& p : n2.alg.basis()) {
    if (p.length() == 0) ++trivial;
    if (p.length() == 1) ++length1;
  }
  CHECK(trivial == 2);
  CHECK(length1 == 2);
}

TEST_CASE("semisimple: one vertex, no arrows") {
  Algebra a = Algebra::build(FieldSpec::gf(2), {"v"}, {}, {}, 3);
  CHECK(a.dimension() == 1);
}

TEST_CASE("free loop is flagged infinite-dimensional") {
  CHECK_THROWS_WITH_AS(Algebra::build(FieldSpec::gf(2), {"v"}, {{"x", 0, 0}}, {}, 4),
                       doctest::Contains("infinite-dimensional-suspected"),
                       std::runtime_error);
}

TEST_CASE("malformed relations are rejected") {
  std::vector<Arrow> arrows{{"x", 0, 0}};
  FieldSpec f = FieldSpec::gf(2);
  CHECK_THROWS_WITH_AS(Algebra::parse_relation(arrows, f, "x*y"), doctest::Contains("unknown arrow"),
                       std::invalid_argument);
  CHECK_THROWS_AS(
      Algebra::build(f, {"v"}, arrows, {Relation{RelationTerm{f.one(), {0}}}}, 4),
      std::invalid_argument);  // length-1 term
  CHECK_THROWS_AS(Algebra::parse_relation(arrows, f, ""), std::invalid_argument);
}

TEST_CASE("commutative square with a non-monomial relation") {
  FieldSpec f = FieldSpec::gf(2);
  std::vector<Arrow> arrows{{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}};
  Algebra alg = Algebra::build(f, {"v1", "v2", "v3", "v4"}, arrows,
                               {Algebra::parse_relation(arrows, f, "a*b + c*d")}, 3);
  // 4 trivial paths + 4 arrows + one class for the identified diagonal.
  CHECK(alg.dimension() == 9);
  // The two length-2 paths have the same class (characteristic 2).
  Path ab{0, 3, {0, 1}}, cd{0, 3, {2, 3}};
  CHECK(alg.path_class(ab) == alg.path_class(cd));
}

TEST_CASE("algebra keys are stable across rebuilds") {
  fixtures::D2 a, b;
  CHECK(a.alg.key() == b.alg.key());
  CHECK(a.alg == b.alg);
}
