#include <doctest.h>

#include <lring/expr.hpp>
#include <lring/motives.hpp>
#include <lring/poly.hpp>
#include <lring/series.hpp>
#include <lring/universal.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace lring;

namespace {

Polynomial P(const std::string& s) { return Polynomial::parse(s); }

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an lring::error");
  return errc::syntax_error;  // unreachable
}

Polynomial load_golden(int g, int r, int p) {
  std::ostringstream name;
  name << GOLDEN_DIR << "/motive_g" << g << "_r" << r << "_p" << p << ".txt";
  std::ifstream in(name.str());
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return Polynomial::parse(buf.str());
}

}  // namespace

TEST_CASE("partitions with hook data") {
  auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0].parts == std::vector<int>{3});
  CHECK(p3[1].parts == std::vector<int>{2, 1});
  CHECK(p3[2].parts == std::vector<int>{1, 1, 1});
  CHECK(p3[1].n() == 3);

  std::vector<int> hooks;
  for (const Cell& c : p3[1].cells) hooks.push_back(c.h);
  CHECK(hooks == std::vector<int>{3, 1, 1});
  CHECK(p3[1].cells[0].a == 1);
  CHECK(p3[1].cells[0].l == 1);

  auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].parts.empty());
  CHECK(p0[0].cells.empty());

  CHECK(partitions_of(8).size() == 22);
  CHECK(code_of([] { partitions_of(9); }) == errc::bound_exceeded);
  CHECK(partitions_of(9, 16).size() == 30);
}

TEST_CASE("moebius function") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(3) == -1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);
  CHECK(code_of([] { moebius(0); }) == errc::bound_exceeded);
}

TEST_CASE("curve context and zeta numerator") {
  UniversalCache u;
  MotiveContext ctx(u, 2);
  CHECK(ctx.genus() == 2);
  CHECK(var_name(ctx.line()) == "L");

  CHECK(ctx.px_coeff(0) == Polynomial(1));
  CHECK(ctx.px_coeff(1) == P("a1_1"));
  CHECK(ctx.px_coeff(2) == P("a1_2"));
  CHECK(ctx.px_coeff(3) == P("L*a1_1"));
  CHECK(ctx.px_coeff(4) == P("L^2"));
  CHECK(code_of([&] { ctx.px_coeff(5); }) == errc::bound_exceeded);

  CHECK(ctx.px_at(Polynomial(1)) == P("1 + a1_1 + a1_2 + L*a1_1 + L^2"));
  CHECK(ctx.px_at(Polynomial(0)) == Polynomial(1));
  CHECK(ctx.px_at(P("L")) ==
        P("1 + a1_1*L + a1_2*L^2 + a1_1*L^4 + L^6"));

  CHECK(ctx.simplify(parse_expr("X1", {"L", "X1"})) == P("1 + a1_1 + L"));
  CHECK(ctx.apply_adams(P("L"), 3) == P("L^3"));

  CHECK(ctx.lambda_cls(MotiveContext::Cls::x, -2).is_zero());
  CHECK(ctx.lambda_cls(MotiveContext::Cls::x, 0) == Polynomial(1));
  CHECK(ctx.lambda_cls(MotiveContext::Cls::x, 1) == P("1 + a1_1 + L"));

  CHECK(code_of([&] { MotiveContext bad(u, 1); }) == errc::bound_exceeded);
}

TEST_CASE("zeta expansion matches lambda powers of the curve class") {
  UniversalCache u;
  for (int g : {2, 3}) {
    MotiveContext ctx(u, g);
    LaurentSeries z = zeta_series(ctx, 1, 0, 2 * g + 3);
    ExprPtr X = ex_gen(1);
    for (int k = 0; k <= 2 * g + 2; ++k)
      CHECK(z.at(k) == ctx.simplify(ex_lam(k, X)));
  }
}

TEST_CASE("zeta expansion windows and substituted arguments") {
  UniversalCache u;
  MotiveContext ctx(u, 2);

  // t -> t^2: only even exponents appear
  LaurentSeries z2 = zeta_series(ctx, 2, 0, 12);
  CHECK(z2.at(0) == Polynomial(1));
  CHECK(z2.at(1).is_zero());
  CHECK(z2.at(3).is_zero());
  CHECK(z2.at(2) == P("1 + a1_1 + L"));

  // t -> t L: each t-degree picks up a matching power of L
  LaurentSeries z1 = zeta_series(ctx, 1, 0, 8);
  LaurentSeries zl = zeta_series(ctx, 1, 1, 8);
  for (int k = 0; k < 8; ++k)
    CHECK(zl.at(k) == z1.at(k).shifted(Monomial::var(
                          ctx.line(), static_cast<std::uint32_t>(k))));

  // numerator support must fit under the precision
  CHECK(code_of([&] { zeta_series(ctx, 2, 0, 5); }) ==
        errc::window_too_small);
  // cached expansions only grow
  const LaurentSeries& c1 = ctx.zeta_cached(1, 0, 6);
  CHECK(c1.prec() >= 6);
  const LaurentSeries& c2 = ctx.zeta_cached(1, 0, 10);
  CHECK(c2.prec() >= 10);
  CHECK(c2.at(1) == P("1 + a1_1 + L"));
}

TEST_CASE("Adams action on series") {
  UniversalCache u;
  MotiveContext ctx(u, 2);

  LaurentSeries m = LaurentSeries::monomial(0, P("L"));
  CHECK(psi_series(ctx, m, 3).at(0) == P("L^3"));
  LaurentSeries t1 = LaurentSeries::monomial(1, Polynomial(1));
  CHECK(psi_series(ctx, t1, 3).at(3) == Polynomial(1));
  CHECK(psi_series(ctx, t1, 3).at(1).is_zero());

  LaurentSeries z = zeta_series(ctx, 1, 0, 5);
  LaurentSeries a = psi_series(ctx, psi_series(ctx, z, 2), 3);
  LaurentSeries b = psi_series(ctx, z, 6);
  CHECK(a.prec() == b.prec());
  for (int e = 0; e < b.prec(); ++e) CHECK(a.at(e) == b.at(e));
}

TEST_CASE("partition series at level one reduces to the zeta factor") {
  UniversalCache u;
  MotiveContext ctx(u, 2);
  int g = ctx.genus();

  for (int p : {1, 2}) {
    LaurentSeries h1 = adhm_Hn(ctx, 1, p, 1 - g, 9);
    LaurentSeries z =
        zeta_series(ctx, 1, 0, 9 - (1 - g)).shifted(1 - g);
    if (p % 2) z = z.scaled(Polynomial(-1));
    for (int e = 1 - g; e < 9; ++e) CHECK(h1.at(e) == z.at(e));
  }

  LaurentSeries h0 = adhm_Hn(ctx, 0, 1, 0, 5);
  CHECK(h0.at(0) == Polynomial(1));
  CHECK(h0.at(3).is_zero());

  // the window floor must admit every partition shift
  CHECK(code_of([&] { adhm_Hn(ctx, 1, 1, 0, 9); }) ==
        errc::window_too_small);
}

TEST_CASE("plethystic-log coefficient at rank one") {
  UniversalCache u;
  MotiveContext ctx(u, 2);
  int g = ctx.genus();
  for (int p : {1, 2}) {
    LaurentSeries hr = plog_Hr(ctx, 1, p, 10);
    // (1-t)(1-Lt) H_1 = (-1)^p t^{1-g} P_X(t)
    for (int k = 0; k <= 2 * g; ++k) {
      Polynomial expect = ctx.px_coeff(k);
      if (p % 2) expect = -expect;
      CHECK(hr.at(1 - g + k) == expect);
    }
    CHECK(hr.at(1 - g + 2 * g + 1).is_zero());
  }
}

TEST_CASE("rank-two plethystic log is a Laurent polynomial") {
  UniversalCache u;
  MotiveContext ctx(u, 2);
  LaurentSeries h2 = plog_Hr(ctx, 2, 1, 20);
  // The lower edge is structural: the two-row partition contributes
  // t^{-p-4(g-1)} = t^{-5}. The upper edge is where every zeta denominator
  // has cancelled, leaving a finite Laurent polynomial.
  REQUIRE(h2.min_nonzero().has_value());
  CHECK(*h2.min_nonzero() == -5);
  CHECK(*h2.max_nonzero() == 7);
  CHECK(h2.zero_on(8, 20));
  CHECK(!h2.zero_on(0, 20));
}

TEST_CASE("both constructions match the recorded motives") {
  UniversalCache u;
  MotiveContext g2(u, 2);
  struct Case { int g, r, p; };
  for (Case c : {Case{2, 1, 1}, Case{2, 1, 2}, Case{2, 2, 1}}) {
    Polynomial want = load_golden(c.g, c.r, c.p);
    CHECK(bb_motive(g2, c.r, c.p) == want);
    CHECK(adhm_motive(g2, c.r, c.p).motive == want);
  }
  UniversalCache u3;
  CHECK(bb_motive(u3, 3, 1, 1) == load_golden(3, 1, 1));
  CHECK(adhm_motive(u3, 3, 1, 1).motive == load_golden(3, 1, 1));
}

TEST_CASE("rank one closes to the Jacobian form") {
  UniversalCache u;
  for (int g : {2, 3}) {
    MotiveContext ctx(u, g);
    for (int p = 1; p <= 3; ++p) {
      int dL = 2 * g - 2 + p;
      Polynomial expect =
          ctx.px_at(Polynomial(1))
              .shifted(Monomial::var(ctx.line(),
                                     static_cast<std::uint32_t>(dL + 1 - g)));
      CHECK(bb_motive(ctx, 1, p) == expect);
    }
  }
}

TEST_CASE("every computed motive is divisible by the Jacobian factor") {
  UniversalCache u;
  MotiveContext ctx(u, 2);
  Polynomial px1 = ctx.px_at(Polynomial(1));
  for (int r = 1; r <= 2; ++r)
    for (int p = 1; p <= 2; ++p) {
      Polynomial m = bb_motive(ctx, r, p);
      Polynomial q = Polynomial::exact_div_main(m, px1, ctx.line());
      CHECK(q * px1 == m);
    }
}

TEST_CASE("specializing a motive to integers stays integral") {
  UniversalCache u;
  MotiveContext ctx(u, 2);
  Polynomial m = bb_motive(ctx, 2, 1);
  std::map<VarId, Rat> pt = {{var_id("L"), Rat(4)},
                             {var_id("a1_1"), Rat(10)},
                             {var_id("a1_2"), Rat(55)}};
  CHECK(m.eval(pt).get_den() == 1);
}

TEST_CASE("window policy") {
  UniversalCache u;
  MotiveContext ctx(u, 2);

  AdhmResult autorun = adhm_motive(ctx, 1, 1);
  CHECK(autorun.retries == 0);
  CHECK(autorun.window_lo == 1 - ctx.genus());

  // widening the window by a quarter cannot change the answer
  int hi = autorun.window_hi + (autorun.window_hi - autorun.window_lo) / 4;
  AdhmResult wide = adhm_motive(ctx, 1, 1, {{autorun.window_lo, hi}});
  CHECK(wide.motive == autorun.motive);
  CHECK(wide.retries == 0);

  // a floor above the series support is rejected
  CHECK(code_of([&] { adhm_motive(ctx, 1, 1, {{0, 30}}); }) ==
        errc::window_too_small);
  // a ceiling inside the support fails the vanishing band
  CHECK(code_of([&] { adhm_motive(ctx, 1, 1, {{-1, 3}}); }) ==
        errc::non_polynomial_h);

  CHECK(code_of([&] { adhm_motive(ctx, 4, 1); }) == errc::bound_exceeded);
  CHECK(code_of([&] { adhm_motive(ctx, 1, 0); }) == errc::bound_exceeded);
}

TEST_CASE("verification pairs the two constructions") {
  UniversalCache u;
  VerifyRow row = verify_pair(u, 2, 1, 1);
  CHECK(row.equal);
  CHECK(row.bb == row.adhm);
  CHECK(row.bb == load_golden(2, 1, 1));
  CHECK(row.g == 2);
  CHECK(row.window_hi > row.window_lo);

  // a corrupted prefactor must be detected as a mismatch
  Polynomial corrupted =
      row.bb.shifted(Monomial::var(var_id("L"), 1));
  CHECK(corrupted != row.adhm);
}
