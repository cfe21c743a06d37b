#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace homcat;

namespace {

// Exhaustive GF(2) intertwiner count: enumerate every tuple of vertex maps.
std::size_t brute_hom_dim(const Module& m, const Module& n) {
  std::size_t unknowns = ModuleMorphism::coord_dim(m, n);
  REQUIRE(unknowns <= 16);
  Matrix sys = intertwiner_system(m, n);
  oracles::BitMat bits = oracles::to_bits(sys);
  std::size_t count = 0;
  for (unsigned long long mask = 0; mask < (1ULL << unknowns); ++mask) {
    oracles::BitVec x = oracles::nth_vector(unknowns, mask);
    oracles::BitVec y = oracles::matvec(bits, x);
    bool zero = true;
    for (int b : y) zero = zero && b == 0;
    if (zero) ++count;
  }
  return oracles::log2_exact(count);
}

}  // namespace

TEST_CASE("D2 hom dimensions match the exhaustive oracle") {
  fixtures::D2 d2;
  struct Case {
    const Module* m;
    const Module* n;
    std::size_t expect;
  };
  for (const Case& c : {Case{&d2.A, &d2.A, 2}, Case{&d2.S, &d2.A, 1}, Case{&d2.A, &d2.S, 1},
                        Case{&d2.S, &d2.S, 1}}) {
    HomSpace hs = hom_basis(*c.m, *c.n);
    CHECK(hs.dimension == c.expect);
    CHECK(hs.dimension == brute_hom_dim(*c.m, *c.n));
  }
  CHECK(hom_basis(d2.A, Module::zero(d2.alg)).dimension == 0);
}

TEST_CASE("N2 hom dimensions match the exhaustive oracle") {
  fixtures::N2 n2;
  std::vector<const Module*> mods{&n2.S1, &n2.S2, &n2.P1, &n2.P2};
  for (const Module* m : mods)
    for (const Module* n : mods) {
      HomSpace hs = hom_basis(*m, *n);
      CHECK(hs.dimension == brute_hom_dim(*m, *n));
    }
  CHECK(hom_basis(n2.P1, n2.P1).dimension == 1);
  CHECK(hom_basis(n2.P1, n2.S1).dimension == 1);
  CHECK(hom_basis(n2.S1, n2.S2).dimension == 0);
}

TEST_CASE("composition: socle in, top out") {
  fixtures::D2 d2;
  ModuleMorphism inc = d2.socle_inclusion();
  ModuleMorphism prj = d2.top_projection();
  CHECK(compose(prj, inc).is_zero());
  CHECK(compose(ModuleMorphism::identity(d2.A), inc) == inc);
  CHECK(compose(inc, ModuleMorphism::zero(d2.S, d2.S)).is_zero());
  CHECK_THROWS_WITH_AS(compose(prj, prj), doctest::Contains("composability-mismatch"),
                       std::invalid_argument);
}

TEST_CASE("kernels and cokernels") {
  fixtures::D2 d2;
  SUBCASE("kernel of identity is zero") {
    CHECK(kernel(ModuleMorphism::identity(d2.A)).sub.is_zero_module());
  }
  SUBCASE("kernel of the top projection is the socle") {
    SubmoduleResult k = kernel(d2.top_projection());
    CHECK(k.sub == d2.S);
    CHECK(compose(d2.top_projection(), k.inclusion).is_zero());
  }
  SUBCASE("cokernel of the socle inclusion is the top") {
    QuotientResult q = cokernel(d2.socle_inclusion());
    CHECK(q.quot == d2.S);
    CHECK(compose(q.projection, d2.socle_inclusion()).is_zero());
  }
  SUBCASE("image factorization recovers exact ranks") {
    ModuleMorphism f = compose(d2.socle_inclusion(), d2.top_projection());  // A -> S -> A
    ImageResult im = image(f);
    CHECK(im.image == d2.S);
    CHECK(compose(im.inclusion, im.onto_image) == f);
    CHECK(im.onto_image.is_epi());
    CHECK(im.inclusion.is_mono());
  }
}

TEST_CASE("N2: kernel of P1 ->> S1 is S2") {
  fixtures::N2 n2;
  ModuleMorphism cover = projective_cover(n2.S1);
  CHECK(cover.source() == n2.P1);
  CHECK(kernel(cover).sub == n2.S2);
}

TEST_CASE("direct sums") {
  fixtures::D2 d2;
  SUBCASE("empty sum is the zero module") {
    CHECK(direct_sum({}, d2.alg).sum.is_zero_module());
  }
  SUBCASE("S + S") {
    SumResult s = direct_sum({d2.S, d2.S}, d2.alg);
    CHECK(s.sum.dim(0) == 2);
    CHECK(s.sum.action(0).is_zero());
  }
  SUBCASE("projections against injections") {
    SumResult s = direct_sum({d2.S, d2.A}, d2.alg);
    CHECK(s.sum.dim(0) == 3);
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        ModuleMorphism pk = compose(s.projections[j], s.injections[k]);
        if (j == k)
          CHECK(pk == ModuleMorphism::identity(j == 0 ? d2.S : d2.A));
        else
          CHECK(pk.is_zero());
      }
  }
  SUBCASE("hom additivity") {
    SumResult s = direct_sum({d2.S, d2.A}, d2.alg);
    CHECK(hom_basis(s.sum, d2.A).dimension ==
          hom_basis(d2.S, d2.A).dimension + hom_basis(d2.A, d2.A).dimension);
  }
}

TEST_CASE("radical, socle, top") {
  fixtures::D2 d2;
  CHECK(radical(d2.S).sub.is_zero_module());
  CHECK(radical(d2.A).sub == d2.S);
  CHECK(socle(d2.A).sub == d2.S);
  CHECK(top(d2.A).quot == d2.S);
  fixtures::N2 n2;
  CHECK(top(n2.P1).quot == n2.S1);
  CHECK(socle(n2.P2).sub == n2.S1);
}

TEST_CASE("projective covers") {
  fixtures::D2 d2;
  SUBCASE("cover of the simple is the regular module") {
    ModuleMorphism c = projective_cover(d2.S);
    CHECK(c.source() == d2.A);
    CHECK(c.is_epi());
    // Restriction to tops is an isomorphism: the kernel sits inside rad P.
    SubmoduleResult k = kernel(c);
    SubmoduleResult r = radical(c.source());
    for (std::size_t v = 0; v < 1; ++v)
      for (std::size_t j = 0; j < k.inclusion.map(v).cols(); ++j) {
        std::vector<Matrix> rad_cols;
        for (std::size_t jj = 0; jj < r.inclusion.map(v).cols(); ++jj)
          rad_cols.push_back(r.inclusion.map(v).column(jj));
        CHECK(in_span(k.inclusion.map(v).column(j), rad_cols));
      }
  }
  SUBCASE("cover of zero") {
    ModuleMorphism c = projective_cover(Module::zero(d2.alg));
    CHECK(c.source().is_zero_module());
    CHECK(c.target().is_zero_module());
  }
  SUBCASE("cover of a projective is an isomorphism") {
    ModuleMorphism c = projective_cover(d2.A);
    CHECK(c.is_iso());
  }
}

TEST_CASE("injective envelopes") {
  fixtures::N2 n2;
  ModuleMorphism e = injective_envelope(n2.S1);
  CHECK(e.is_mono());
  CHECK(oracles::modules_isomorphic(e.target(), n2.P2));  // N2 self-injective: I(S1) = P2
  fixtures::D2 d2;
  ModuleMorphism e2 = injective_envelope(d2.S);
  CHECK(oracles::modules_isomorphic(e2.target(), d2.A));
  CHECK(injective_envelope(Module::zero(d2.alg)).target().is_zero_module());
}

TEST_CASE("split tests") {
  fixtures::D2 d2;
  SUBCASE("identity splits") {
    auto w = is_split_epi(ModuleMorphism::identity(d2.A));
    CHECK(w.split);
    CHECK(compose(ModuleMorphism::identity(d2.A), *w.witness) == ModuleMorphism::identity(d2.A));
  }
  SUBCASE("A ->> S does not split") {
    CHECK(!is_split_epi(d2.top_projection()).split);
    CHECK(!is_split_mono(d2.socle_inclusion()).split);
  }
  SUBCASE("canonical projection splits") {
    SumResult s = direct_sum({d2.A, d2.S}, d2.alg);
    auto w = is_split_epi(s.projections[1]);
    CHECK(w.split);
    CHECK(compose(s.projections[1], *w.witness) == ModuleMorphism::identity(d2.S));
  }
}

TEST_CASE("hom cache is idempotent") {
  fixtures::D2 d2;
  Cat cat(d2.alg);
  const HomSpace& h1 = cat.hom(d2.S, d2.A);
  const HomSpace& h2 = cat.hom(d2.S, d2.A);
  CHECK(&h1 == &h2);
  CHECK(h1.dimension == 1);
}

TEST_CASE("module validation rejects bad data") {
  fixtures::D2 d2;
  // x-action with x^2 != 0.
  CHECK_THROWS_WITH_AS(
      Module(d2.alg, {1}, {Matrix::from_rows(d2.alg.field(), {{1}})}),
      doctest::Contains("relation violated"), std::invalid_argument);
  CHECK_THROWS_AS(Module(d2.alg, {2}, {Matrix::from_rows(d2.alg.field(), {{0}})}),
                  std::invalid_argument);
}
