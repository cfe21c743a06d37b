#pragma once

// The two running fixtures: D2 = GF(2)[x]/(x^2) (one vertex, one loop) and
// N2 = the two-vertex Nakayama algebra with arrows a: 1 -> 2, b: 2 -> 1 and
// relations ab = ba = 0. Both are self-injective.

#include "homcat/module_ops.hpp"

namespace fixtures {

struct D2 {
  homcat::Algebra alg;
  homcat::Module S, A;  // simple and regular module

  D2()
      : alg(homcat::Algebra::build(
            homcat::FieldSpec::gf(2), {"v"}, {{"x", 0, 0}},
            {homcat::Algebra::parse_relation({{"x", 0, 0}}, homcat::FieldSpec::gf(2), "x*x")}, 4)),
        S(homcat::Module::simple(alg, 0, "S")),
        A(homcat::Module::projective(alg, 0, "A")) {}

  // Socle inclusion S -> A and top projection A -> S.
  homcat::ModuleMorphism socle_inclusion() const {
    return homcat::ModuleMorphism(S, A, {homcat::Matrix::from_rows(alg.field(), {{0}, {1}})});
  }
  homcat::ModuleMorphism top_projection() const {
    return homcat::ModuleMorphism(A, S, {homcat::Matrix::from_rows(alg.field(), {{1, 0}})});
  }
};

struct N2 {
  homcat::Algebra alg;
  homcat::Module S1, S2, P1, P2;

  N2()
      : alg(build()),
        S1(homcat::Module::simple(alg, 0, "S1")),
        S2(homcat::Module::simple(alg, 1, "S2")),
        P1(homcat::Module::projective(alg, 0, "P1")),
        P2(homcat::Module::projective(alg, 1, "P2")) {}

  static homcat::Algebra build() {
    homcat::FieldSpec f = homcat::FieldSpec::gf(2);
    std::vector<homcat::Arrow> arrows{{"a", 0, 1}, {"b", 1, 0}};
    return homcat::Algebra::build(f, {"v1", "v2"}, arrows,
                                  {homcat::Algebra::parse_relation(arrows, f, "a*b"),
                                   homcat::Algebra::parse_relation(arrows, f, "b*a")},
                                  4);
  }
};

}  // namespace fixtures
