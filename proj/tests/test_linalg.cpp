#include <doctest.h>

#include "homcat/matrix.hpp"
#include "oracles.hpp"

using namespace homcat;

namespace {
const FieldSpec F2 = FieldSpec::gf(2);
const FieldSpec F5 = FieldSpec::gf(5);
const FieldSpec Q = FieldSpec::rationals();

Matrix col(const FieldSpec& f, std::vector<long long> entries) {
  Matrix m(entries.size(), 1, f);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, f.from_int(entries[i]));
  return m;
}

// Deterministic pseudo-random fill, good enough to exercise elimination.
Matrix scrambled(std::size_t r, std::size_t c, const FieldSpec& f, unsigned seed) {
  Matrix m(r, c, f);
  unsigned s = seed * 2654435761u + 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      s = s * 1664525u + 1013904223u;
      m.set(i, j, f.from_int(static_cast<long long>((s >> 16) % 7) - 3));
    }
  return m;
}
}  // namespace

TEST_CASE("rational arithmetic is exact") {
  Rational a = Rational::from_string("2/3");
  Rational b = Rational::from_string("-5/7");
  CHECK((a + b).to_string() == "-1/21");
  CHECK((a * b).to_string() == "-10/21");
  CHECK((a / b).to_string() == "-14/15");
  BigInt big = BigInt::from_string("123456789012345678901234567890");
  CHECK(big.to_string() == "123456789012345678901234567890");
  CHECK((big % BigInt(97)).to_string() == (BigInt(52)).to_string());
  CHECK(Rational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
}

TEST_CASE("field spec validation") {
  CHECK_THROWS(FieldSpec::gf(4));
  CHECK_THROWS(FieldSpec::gf(1));
  CHECK(FieldSpec::gf(2147483629).characteristic() == 2147483629);
  CHECK(F2.to_string(F2.inv(F2.one())) == "1");
  CHECK(F5.to_string(F5.inv(F5.from_int(3))) == "2");
}

TEST_CASE("rank: empty, identity, dependent rows") {
  CHECK(Matrix(0, 0, F2).rank() == 0);
  CHECK(Matrix::identity(3, F2).rank() == 3);
  CHECK(Matrix::from_rows(F2, {{1, 1}, {1, 1}}).rank() == 1);
}

TEST_CASE("solve_linear on the named small systems") {
  SUBCASE("identity") {
    auto sol = solve_linear(Matrix::identity(2, F2), col(F2, {1, 0}));
    REQUIRE(sol.solvable());
    CHECK(*sol.particular == col(F2, {1, 0}));
    CHECK(sol.kernel_basis.empty());
  }
  SUBCASE("zero map, inconsistent") {
    auto sol = solve_linear(Matrix::from_rows(F2, {{0}}), col(F2, {1}));
    CHECK(!sol.solvable());
    REQUIRE(sol.kernel_basis.size() == 1);
    CHECK(sol.kernel_basis[0] == col(F2, {1}));
  }
  SUBCASE("one equation, two unknowns") {
    auto sol = solve_linear(Matrix::from_rows(F2, {{1, 1}}), col(F2, {0}));
    REQUIRE(sol.solvable());
    CHECK(*sol.particular == col(F2, {0, 0}));
    REQUIRE(sol.kernel_basis.size() == 1);
    CHECK(sol.kernel_basis[0] == col(F2, {1, 1}));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS(solve_linear(Matrix::identity(2, F2), col(F2, {1})));
  }
}

TEST_CASE("rank-nullity and exact residuals over several fields") {
  for (const FieldSpec& f : {F2, F5, Q}) {
    for (unsigned seed = 0; seed < 12; ++seed) {
      Matrix m = scrambled(3 + seed % 3, 2 + seed % 4, f, seed);
      CHECK(m.rank() + m.kernel_basis().size() == m.cols());
      for (const Matrix& k : m.kernel_basis()) CHECK((m * k).is_zero());
      Matrix x = scrambled(m.cols(), 1, f, seed + 100);
      Matrix b = m * x;
      auto sol = solve_linear(m, b);
      REQUIRE(sol.solvable());
      CHECK(m * *sol.particular == b);
    }
  }
}

TEST_CASE("rref is deterministic") {
  Matrix m = scrambled(4, 5, F5, 7);
  auto a = m.rref();
  auto b = m.rref();
  CHECK(a.reduced == b.reduced);
  CHECK(a.pivot_cols == b.pivot_cols);
}

TEST_CASE("solve_affine_membership: named examples") {
  SUBCASE("vacuous constraint: V the whole space") {
    MembershipConstraint c{Matrix::identity(2, F2), col(F2, {1, 1}), {col(F2, {1, 0}), col(F2, {0, 1})}};
    auto sol = solve_affine_membership(2, F2, {c});
    REQUIRE(sol.solvable());
    CHECK(sol.particular->is_zero());
    CHECK(sol.kernel_basis.size() == 2);
  }
  SUBCASE("forced: L = id, V = 0") {
    MembershipConstraint c{Matrix::identity(2, F5), col(F5, {3, 4}), {}};
    auto sol = solve_affine_membership(2, F5, {c});
    REQUIRE(sol.solvable());
    CHECK(*sol.particular == col(F5, {3, 4}));
    CHECK(sol.kernel_basis.empty());
  }
  SUBCASE("inconsistent") {
    MembershipConstraint c{Matrix::zero(1, 1, F2), col(F2, {1}), {}};
    CHECK(!solve_affine_membership(1, F2, {c}).solvable());
  }
}

TEST_CASE("solve_affine_membership agrees with GF(2) enumeration") {
  // Systems with total unknown dimension <= 12, several constraints each.
  for (unsigned seed = 0; seed < 10; ++seed) {
    std::size_t n = 2 + seed % 4;
    std::vector<MembershipConstraint> cs;
    std::vector<oracles::BitConstraint> bits;
    for (unsigned k = 0; k < 2; ++k) {
      Matrix l = scrambled(2 + (seed + k) % 2, n, F2, seed * 31 + k);
      Matrix c = scrambled(l.rows(), 1, F2, seed * 53 + k);
      std::vector<Matrix> v;
      if ((seed + k) % 3 != 0) v.push_back(scrambled(l.rows(), 1, F2, seed * 71 + k));
      cs.push_back({l, c, v});
      oracles::BitConstraint bc;
      bc.linear = oracles::to_bits(l);
      bc.offset = oracles::to_bits(c)[0].empty() ? oracles::BitVec{} : oracles::BitVec{};
      bc.offset.clear();
      for (std::size_t i = 0; i < c.rows(); ++i)
        bc.offset.push_back(F2.is_zero(c.at(i, 0)) ? 0 : 1);
      for (const Matrix& vv : v) {
        oracles::BitVec b;
        for (std::size_t i = 0; i < vv.rows(); ++i) b.push_back(F2.is_zero(vv.at(i, 0)) ? 0 : 1);
        bc.subspace.push_back(b);
      }
      bits.push_back(bc);
    }
    auto sol = solve_affine_membership(n, F2, cs);
    auto brute = oracles::all_membership_solutions(n, bits);
    CHECK(sol.solvable() == !brute.empty());
    if (sol.solvable()) {
      CHECK((std::size_t{1} << sol.kernel_basis.size()) == brute.size());
      // The particular solution must be one of the enumerated ones.
      oracles::BitVec p;
      for (std::size_t i = 0; i < n; ++i) p.push_back(F2.is_zero(sol.particular->at(i, 0)) ? 0 : 1);
      bool found = false;
      for (const auto& x : brute) found = found || x == p;
      CHECK(found);
    }
  }
}

TEST_CASE("span_basis canonical and in_span consistent") {
  std::vector<Matrix> gens{col(F2, {1, 1, 0}), col(F2, {0, 1, 1}), col(F2, {1, 0, 1})};
  auto basis = span_basis(gens, 3, F2);
  CHECK(basis.size() == 2);
  CHECK(in_span(col(F2, {1, 0, 1}), basis));
  CHECK(!in_span(col(F2, {1, 0, 0}), basis));
  auto basis2 = span_basis({gens[2], gens[0], gens[1]}, 3, F2);
  CHECK(basis.size() == basis2.size());
  for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis[i] == basis2[i]);
}
