#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qmirror/complexes.hpp"
#include "qmirror/module_map.hpp"

using namespace qmirror;

namespace {
LaurentPoly Y(long e = 1) { return LaurentPoly::y(e); }
LaurentPoly ym1() { return LaurentPoly::y_minus_one(); }

LaurentMatrix mat1(const LaurentPoly& a) {
  LaurentMatrix m(1, 1);
  m.at(0, 0) = a;
  return m;
}
}  // namespace

TEST_CASE("rational canonical form and round trip") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(3).str() == "3/1");
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse(Rational(-3, 7).str()) == Rational(-3, 7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("laurent arithmetic, units, euclidean division") {
  LaurentPoly p = Y(2) - Y();  // y^2 - y
  CHECK(p.lo_exp() == 1);
  CHECK(p.spread() == 1);
  CHECK(!p.is_unit());
  CHECK(Y(-3).is_unit());
  CHECK(p.normalized() == ym1());

  auto [q, r] = p.divmod(ym1());
  CHECK(r.is_zero());
  CHECK(q == Y());

  // remainder strictly smaller in spread
  LaurentPoly f = Y(3) + LaurentPoly(1);
  auto [q2, r2] = f.divmod(ym1());
  CHECK(f == q2 * ym1() + r2);
  CHECK((r2.is_zero() || r2.spread() < ym1().spread()));

  CHECK(gcd(p, ym1() * ym1()) == ym1());
  CHECK(gcd(Y(5), ym1()).is_one());

  SECTION("division by units always exact") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      LaurentPoly a = oracle::rand_laurent(rng);
      auto [qq, rr] = a.divmod(Y(-2));
      CHECK(rr.is_zero());
      CHECK(qq * Y(-2) == a);
    }
  }
}

TEST_CASE("snf: spec examples") {
  SECTION("1x1 already diagonal") {
    auto sm = snf(mat1(ym1()));
    CHECK(sm.S.at(0, 0) == ym1());
    CHECK(sm.U.is_identity());
    CHECK(sm.V.is_identity());
  }
  SECTION("2x2 with unit content") {
    LaurentMatrix m(2, 2);
    m.at(0, 0) = Y();
    m.at(0, 1) = LaurentPoly(1);
    m.at(1, 1) = ym1();
    auto sm = snf(m);
    REQUIRE(sm.rank == 2);
    // frozen from the determinantal-divisor oracle: gcd of entries is a
    // unit, the determinant is y(y-1); normalized chain is (1, y-1)
    auto expected = oracle::oracle_invariant_factors(m);
    REQUIRE(expected.size() == 2);
    CHECK(expected[0].is_one());
    CHECK(expected[1] == ym1());
    CHECK(sm.S.at(0, 0) == expected[0]);
    CHECK(sm.S.at(1, 1) == expected[1]);
    CHECK(sm.U * m * sm.V == sm.S);
    CHECK((m.determinant().normalized() == (Y() * ym1()).normalized()));
  }
  SECTION("zero 2x3") {
    auto sm = snf(LaurentMatrix(2, 3));
    CHECK(sm.rank == 0);
    CHECK(sm.S.is_zero());
    CHECK(sm.U.is_identity());
    CHECK(sm.V.is_identity());
  }
}

TEST_CASE("snf contract on 200 random matrices") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    size_t rows = static_cast<size_t>(oracle::rand_range(rng, 1, 5));
    size_t cols = static_cast<size_t>(oracle::rand_range(rng, 1, 5));
    LaurentMatrix m = oracle::rand_matrix(rng, rows, cols);
    auto sm = snf(m);

    CHECK(sm.U * m * sm.V == sm.S);
    CHECK(sm.U.determinant().is_unit());
    CHECK(sm.V.determinant().is_unit());
    CHECK(sm.U.determinant() == sm.detU);
    CHECK(sm.V.determinant() == sm.detV);

    // diagonal, normalized, divisibility chain
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j)
        if (i != j) CHECK(sm.S.at(i, j).is_zero());
    for (size_t i = 0; i < sm.rank; ++i) {
      CHECK(!sm.S.at(i, i).is_zero());
      CHECK(sm.S.at(i, i) == sm.S.at(i, i).normalized());
      if (i + 1 < sm.rank) CHECK(sm.S.at(i, i).divides(sm.S.at(i + 1, i + 1)));
    }
    for (size_t i = sm.rank; i < std::min(rows, cols); ++i) CHECK(sm.S.at(i, i).is_zero());

    // cross-check against determinantal divisors
    auto expected = oracle::oracle_invariant_factors(m);
    REQUIRE(expected.size() == sm.rank);
    for (size_t i = 0; i < sm.rank; ++i) CHECK(sm.S.at(i, i) == expected[i]);
  }
}

TEST_CASE("linear solver and kernel basis") {
  LaurentMatrix a(2, 2);
  a.at(0, 0) = ym1();
  a.at(1, 1) = Y() * ym1();

  LaurentMatrix b(2, 1);
  b.at(0, 0) = ym1() * ym1();
  b.at(1, 0) = Y(2) * ym1();
  auto x = solve_linear(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  LaurentMatrix bad(2, 1);
  bad.at(0, 0) = LaurentPoly(1);
  CHECK(!solve_linear(a, bad).has_value());

  LaurentMatrix k(1, 2);
  k.at(0, 0) = ym1();
  k.at(0, 1) = -ym1();
  LaurentMatrix basis = kernel_basis(k);
  REQUIRE(basis.cols() == 1);
  CHECK((k * basis).is_zero());
}

TEST_CASE("module normal form: spec examples") {
  CHECK(FPModule::free(1).normal_form() == NormalForm{1, {}});
  CHECK(FPModule::cyclic(ym1()).normal_form() == NormalForm{0, {ym1()}});

  // relations columns (y-1, 0) and (1, y)
  LaurentMatrix rel(2, 2);
  rel.at(0, 0) = ym1();
  rel.at(0, 1) = LaurentPoly(1);
  rel.at(1, 1) = Y();
  FPModule m(2, rel);
  // frozen from the snf oracle: invariant chain normalizes to (y-1)
  auto diag = oracle::oracle_invariant_factors(rel);
  std::vector<LaurentPoly> nonunits;
  for (const auto& d : diag)
    if (!d.is_unit()) nonunits.push_back(d);
  CHECK(m.normal_form() == NormalForm{0, nonunits});
  CHECK(m.normal_form() == NormalForm{0, {ym1()}});
  CHECK(m.qdim() == 1);
}

TEST_CASE("normal form is presentation independent") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    size_t g = static_cast<size_t>(oracle::rand_range(rng, 1, 4));
    size_t r = static_cast<size_t>(oracle::rand_range(rng, 0, 4));
    LaurentMatrix rel = oracle::rand_matrix(rng, g, r, -2, 2);
    FPModule m(g, rel);

    LaurentMatrix tweaked = rel;
    for (int ops = 0; ops < 6; ++ops) {
      if (g >= 2) {
        size_t i = static_cast<size_t>(oracle::rand_range(rng, 0, static_cast<long>(g) - 1));
        size_t j = static_cast<size_t>(oracle::rand_range(rng, 0, static_cast<long>(g) - 1));
        if (i != j) tweaked.add_row_multiple(i, j, oracle::rand_laurent(rng, -1, 1));
      }
      if (r >= 2) {
        size_t i = static_cast<size_t>(oracle::rand_range(rng, 0, static_cast<long>(r) - 1));
        size_t j = static_cast<size_t>(oracle::rand_range(rng, 0, static_cast<long>(r) - 1));
        if (i != j) tweaked.add_col_multiple(i, j, oracle::rand_laurent(rng, -1, 1));
      }
      if (r >= 1) tweaked.scale_col(
          static_cast<size_t>(oracle::rand_range(rng, 0, static_cast<long>(r) - 1)), Y(-1));
    }
    CHECK(FPModule(g, tweaked).normal_form() == m.normal_form());
  }
}

TEST_CASE("map_ops: spec examples") {
  FPModule R1 = FPModule::free(1);
  FPModule Q = FPModule::trivial_monodromy_line();

  SECTION("identity on free rank 1") {
    auto ops = map_ops(ModuleMap::identity(R1));
    CHECK(ops.kernel.is_zero_module());
    CHECK(ops.cokernel.is_zero_module());
    CHECK(ops.is_iso);
  }
  SECTION("multiplication by y-1 on free rank 1") {
    auto ops = map_ops(ModuleMap::multiplication(R1, ym1()));
    CHECK(ops.kernel.is_zero_module());
    CHECK(ops.cokernel.normal_form() == Q.normal_form());
    CHECK(!ops.is_iso);
  }
  SECTION("zero map between free rank 1 modules") {
    auto ops = map_ops(ModuleMap::zero(R1, R1));
    CHECK(ops.kernel.normal_form() == NormalForm{1, {}});
    CHECK(ops.cokernel.normal_form() == NormalForm{1, {}});
  }
  SECTION("ill-defined maps are rejected") {
    // Q -> R cannot send the generator to 1: (y-1)*1 != 0 in R
    ModuleMap bad(Q, R1, LaurentMatrix::identity(1));
    CHECK(!bad.is_well_defined());
    CHECK_THROWS_AS(map_ops(bad), std::invalid_argument);
  }
}

TEST_CASE("map_ops rank counting on 100 random maps") {
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 100) {
    size_t gs = static_cast<size_t>(oracle::rand_range(rng, 1, 3));
    size_t gt = static_cast<size_t>(oracle::rand_range(rng, 1, 3));
    FPModule src(gs, oracle::rand_matrix(rng, gs, static_cast<size_t>(oracle::rand_range(rng, 0, 2)), -2, 2));
    FPModule tgt(gt, oracle::rand_matrix(rng, gt, static_cast<size_t>(oracle::rand_range(rng, 0, 2)), -2, 2));
    ModuleMap f(src, tgt, oracle::rand_matrix(rng, gt, gs, -1, 1));
    if (!f.is_well_defined()) continue;
    ++done;

    KernelResult ker = f.kernel();
    ModuleMap incl(ker.module, src, ker.inclusion);
    REQUIRE(incl.is_well_defined());
    CHECK(compose(f, incl).is_zero_map());

    FPModule image = incl.cokernel();
    CHECK(src.normal_form().free_rank ==
          ker.module.normal_form().free_rank + image.normal_form().free_rank);
  }
}

TEST_CASE("complex cohomology: spec examples") {
  SECTION("two-term y-1 complex") {
    FreeComplex c{{1, 1}, {mat1(ym1())}};
    auto h = complex_cohomology(c);
    REQUIRE(h.size() == 2);
    CHECK(h[0].is_zero_module());
    CHECK(h[1].normal_form() == NormalForm{0, {ym1()}});
  }
  SECTION("two-term zero complex") {
    FreeComplex c{{1, 1}, {LaurentMatrix(1, 1)}};
    auto h = complex_cohomology(c);
    CHECK(h[0].normal_form() == NormalForm{1, {}});
    CHECK(h[1].normal_form() == NormalForm{1, {}});
  }
  SECTION("three-term") {
    FreeComplex c{{1, 1, 1}, {mat1(ym1()), LaurentMatrix(1, 1)}};
    auto h = complex_cohomology(c);
    REQUIRE(h.size() == 3);
    CHECK(h[0].is_zero_module());
    CHECK(h[1].normal_form() == NormalForm{0, {ym1()}});
    CHECK(h[2].normal_form() == NormalForm{1, {}});
  }
  SECTION("differentials must square to zero") {
    FreeComplex c{{1, 1, 1}, {mat1(ym1()), mat1(ym1())}};
    CHECK_THROWS_AS(complex_cohomology(c), std::invalid_argument);
  }
  SECTION("shifted identity complex is exact") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      size_t n = static_cast<size_t>(oracle::rand_range(rng, 1, 3));
      FreeComplex c{{n, n}, {LaurentMatrix::identity(n)}};
      for (auto& h : complex_cohomology(c)) CHECK(h.is_zero_module());
    }
  }
}

TEST_CASE("homology_at validates composability") {
  FPModule R1 = FPModule::free(1);
  ModuleMap f = ModuleMap::multiplication(R1, ym1());
  CHECK_THROWS_AS(homology_at(f, f), std::invalid_argument);
}
