#include <doctest.h>

#include <lring/expr.hpp>

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace lring;

namespace {

const std::vector<std::string> kGens = {"x", "y"};

ExprPtr parse2(const std::string& s) { return parse_expr(s, kGens); }

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an lring::error");
  return errc::syntax_error;  // unreachable
}

// Random AST over two generators, built through the public constructors so
// all sugar normalizations apply. `budget` caps the node count.
ExprPtr random_ast(std::mt19937& rng, int budget) {
  std::uniform_int_distribution<int> pick(0, 9), kdist(1, 3), gdist(0, 1),
      ldist(-3, 3);
  if (budget <= 1) {
    switch (pick(rng) % 3) {
      case 0: return ex_gen(gdist(rng));
      case 1: return ex_int(ldist(rng));
      default: return ex_one();
    }
  }
  switch (pick(rng)) {
    case 0: return ex_neg(random_ast(rng, budget - 1));
    case 1:
    case 2: {
      int left = 1 + pick(rng) % (budget - 1);
      return ex_add(random_ast(rng, left), random_ast(rng, budget - 1 - left));
    }
    case 3:
    case 4: {
      int left = 1 + pick(rng) % (budget - 1);
      return ex_mul(random_ast(rng, left), random_ast(rng, budget - 1 - left));
    }
    case 5: return ex_lam(kdist(rng), random_ast(rng, budget - 1));
    case 6: return ex_sig(kdist(rng), random_ast(rng, budget - 1));
    case 7: return ex_psi(kdist(rng), random_ast(rng, budget - 1));
    case 8: return ex_gen(gdist(rng));
    default: return ex_int(ldist(rng));
  }
}

}  // namespace

TEST_CASE("parsing builds the expected trees") {
  ExprPtr e = parse_expr("lambda^2(x1 + sigma^3(x2))", {"x1", "x2"});
  CHECK(expr_equal(e, ex_lam(2, ex_add(ex_gen(0), ex_sig(3, ex_gen(1))))));

  ExprPtr m = parse_expr("psi^2(L * X1)", {"L", "X1"});
  CHECK(expr_equal(m, ex_psi(2, ex_mul(ex_gen(0), ex_gen(1)))));

  CHECK(parse2("0")->kind == ExprKind::zero);
  CHECK(parse2("1")->kind == ExprKind::one);
  CHECK(parse2("3")->kind == ExprKind::int_lit);
  CHECK(parse2("3")->lit == 3);
  ExprPtr neg2 = parse2("-2");
  REQUIRE(neg2->kind == ExprKind::neg);
  CHECK(neg2->a->kind == ExprKind::int_lit);
  CHECK(neg2->a->lit == 2);
}

TEST_CASE("sugar normalizes at construction") {
  // '^' on ring elements is repeated multiplication
  CHECK(expr_equal(parse2("x^3"), ex_pow(ex_gen(0), 3)));
  CHECK(expr_nodes(parse2("x^3")) == 5);  // x, x, x and two Mul nodes
  CHECK(expr_equal(parse2("x^1"), ex_gen(0)));
  CHECK(parse2("x^0")->kind == ExprKind::one);

  // unary minus binds tighter than '^'
  CHECK(expr_equal(parse2("-x^2"), ex_pow(ex_neg(ex_gen(0)), 2)));
  CHECK(expr_equal(parse2("-x^2"), ex_mul(ex_neg(ex_gen(0)), ex_neg(ex_gen(0)))));

  // index-0 operations collapse; psi^0 is rejected
  CHECK(parse2("lambda^0(x)")->kind == ExprKind::one);
  CHECK(parse2("sigma^0(x)")->kind == ExprKind::one);
  CHECK(code_of([] { parse2("psi^0(x)"); }) == errc::syntax_error);

  // literal folding
  CHECK(ex_int(0)->kind == ExprKind::zero);
  CHECK(ex_int(1)->kind == ExprKind::one);
  CHECK(ex_int(-1)->kind == ExprKind::neg);
  CHECK(ex_int(5)->lit == 5);
}

TEST_CASE("parse errors carry the right categories") {
  CHECK(code_of([] { parse2("lambda^(x)"); }) == errc::syntax_error);
  CHECK(code_of([] { parse2("lambda^2(w)"); }) == errc::unknown_generator);
  CHECK(code_of([] { parse2("lambda^10001(x)"); }) == errc::bound_exceeded);
  CHECK(code_of([] { parse2("x +"); }) == errc::syntax_error);
  CHECK(code_of([] { parse2("(x"); }) == errc::syntax_error);
  CHECK(code_of([] { parse2(""); }) == errc::syntax_error);
  CHECK(code_of([] { parse2("x^999999999999999999999"); }) ==
        errc::syntax_error);
}

TEST_CASE("rendering inverts parsing") {
  const char* samples[] = {
      "lambda^2(x + sigma^3(y))",
      "psi^2(x * y)",
      "-x^2 + 3",
      "lambda^3(y + sigma^2(x*y)) * lambda^2(x)",
  };
  for (const char* s : samples) {
    ExprPtr e = parse2(s);
    CHECK(expr_equal(parse2(render_expr(e, kGens)), e));
  }

  std::mt19937 rng(314159);
  for (int it = 0; it < 1000; ++it) {
    ExprPtr e = random_ast(rng, 1 + it % 12);
    std::string text = render_expr(e, kGens);
    CHECK(expr_equal(parse_expr(text, kGens), e));
  }
}

TEST_CASE("depth vector worked example and basics") {
  ExprPtr e = parse2("lambda^3(y + sigma^2(x*y) + psi^3(y)) * lambda^2(x)");
  CHECK(depth_vector(e, 2) == std::vector<std::int64_t>{6, 9});

  for (int k = 1; k <= 5; ++k)
    CHECK(depth_vector(ex_lam(k, ex_gen(0)), 1) ==
          std::vector<std::int64_t>{k});

  CHECK(depth_vector(parse2("x*y + x"), 2) == std::vector<std::int64_t>{1, 1});
  CHECK(depth_vector(parse2("3"), 2) == std::vector<std::int64_t>{0, 0});
  CHECK(depth_vector(parse2("x"), 2) == std::vector<std::int64_t>{1, 0});
}

TEST_CASE("depth vector rules on random ASTs") {
  std::mt19937 rng(2718);
  for (int it = 0; it < 1000; ++it) {
    ExprPtr a = random_ast(rng, 1 + it % 8);
    ExprPtr b = random_ast(rng, 1 + (it * 7) % 8);
    auto da = depth_vector(a, 2), db = depth_vector(b, 2);

    auto dadd = depth_vector(ex_add(a, b), 2);
    auto dmul = depth_vector(ex_mul(a, b), 2);
    for (int i = 0; i < 2; ++i) CHECK(dadd[i] == std::max(da[i], db[i]));
    CHECK(dmul == dadd);
    CHECK(depth_vector(ex_add(a, a), 2) == da);
    CHECK(depth_vector(ex_neg(a), 2) == da);

    int k = 1 + it % 3;
    auto dl = depth_vector(ex_lam(k, a), 2);
    auto ds = depth_vector(ex_sig(k, a), 2);
    auto dp = depth_vector(ex_psi(k, a), 2);
    for (int i = 0; i < 2; ++i) {
      CHECK(dl[i] == k * da[i]);
      CHECK(ds[i] == dl[i]);
      CHECK(dp[i] == dl[i]);
    }
  }
  CHECK(depth_vector(ex_one(), 2) == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("depth vector saturates instead of overflowing") {
  ExprPtr e = ex_gen(0);
  for (int i = 0; i < 5; ++i) e = ex_lam(10000, e);  // 10^20 > 2^60
  CHECK(depth_vector(e, 1) == std::vector<std::int64_t>{std::int64_t{1} << 60});
}

TEST_CASE("expression equality and node count") {
  CHECK(expr_equal(parse2("x + y"), ex_add(ex_gen(0), ex_gen(1))));
  CHECK(!expr_equal(parse2("x + y"), parse2("y + x")));
  CHECK(expr_nodes(parse2("x + y")) == 3);
  CHECK(expr_nodes(ex_one()) == 1);
}
