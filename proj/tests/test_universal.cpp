#include <doctest.h>

#include <lring/poly.hpp>
#include <lring/symfunc.hpp>
#include <lring/universal.hpp>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

using namespace lring;

namespace {

Polynomial P(const std::string& s) { return Polynomial::parse(s); }

Polynomial xvar(int k) { return Polynomial::variable(var_id("x" + std::to_string(k))); }

std::vector<Polynomial> family(UniversalCache& u,
                               Polynomial (UniversalCache::*f)(int), int n) {
  std::vector<Polynomial> v;
  for (int k = 1; k <= n; ++k) v.push_back((u.*f)(k));
  return v;
}

// e_n of an arbitrary list of ring elements, by the product expansion DP.
Polynomial elem_of(const std::vector<Polynomial>& items, int n) {
  std::vector<Polynomial> e(n + 1);
  e[0] = Polynomial(1);
  for (const Polynomial& z : items)
    for (int k = n; k >= 1; --k) e[k] += e[k - 1] * z;
  return e[n];
}

std::vector<Polynomial> esyms(const std::vector<VarId>& u, int n) {
  std::vector<Polynomial> v;
  for (int k = 1; k <= n; ++k) v.push_back(elem_sym(k, u));
  return v;
}

}  // namespace

TEST_CASE("small members of each conversion family") {
  UniversalCache u;

  CHECK(u.opposite(0) == Polynomial(1));
  CHECK(u.opposite(1) == P("x1"));
  CHECK(u.opposite(2) == P("x1^2 - x2"));
  CHECK(u.opposite(3) == P("x1^3 - 2*x1*x2 + x3"));

  CHECK(u.newton(1) == P("x1"));
  CHECK(u.newton(2) == P("x1^2 - 2*x2"));
  CHECK(u.newton(3) == P("x1^3 - 3*x1*x2 + 3*x3"));

  CHECK(u.sigma_from_adams(1) == P("x1"));
  CHECK(u.sigma_from_adams(2) == P("(x1^2 - x2)/2"));
  CHECK(u.sigma_from_adams(3) == P("x1^3/6 - x1*x2/2 + x3/3"));

  CHECK(u.lambda_from_adams(1) == P("x1"));
  CHECK(u.lambda_from_adams(2) == P("(x1^2 + x2)/2"));
  CHECK(u.lambda_from_adams(3) == P("x1^3/6 + x1*x2/2 + x3/3"));

  CHECK(u.adams_from_lambda(1) == P("x1"));
  CHECK(u.adams_from_lambda(2) == P("2*x2 - x1^2"));
  CHECK(u.adams_from_lambda(3) == P("3*x3 - 3*x1*x2 + x1^3"));

  CHECK(u.groth_product(1) == P("x1*y1"));
  CHECK(u.groth_product(2) == P("x1^2*y2 + x2*y1^2 - 2*x2*y2"));

  for (int m = 1; m <= 4; ++m) CHECK(u.groth_composite(1, m) == xvar(m));
  for (int n = 1; n <= 4; ++n) CHECK(u.groth_composite(n, 1) == xvar(n));
  CHECK(u.groth_composite(2, 2) == P("x1*x3 - x4"));
}

TEST_CASE("integer coefficients where required") {
  UniversalCache u;
  for (int n = 1; n <= 10; ++n) {
    CHECK(u.opposite(n).is_integral());
    CHECK(u.newton(n).is_integral());
    CHECK(u.adams_from_lambda(n).is_integral());
  }
  CHECK(u.groth_product(4).is_integral());
  CHECK(u.groth_composite(2, 3).is_integral());
}

TEST_CASE("conversion identities up to n = 12") {
  UniversalCache u;
  const int N = 12;
  auto pop = family(u, &UniversalCache::opposite, N);
  auto newt = family(u, &UniversalCache::newton, N);
  auto sfa = family(u, &UniversalCache::sigma_from_adams, N);
  auto lfa = family(u, &UniversalCache::lambda_from_adams, N);

  for (int n = 1; n <= N; ++n) {
    // the opposite transform is an involution
    CHECK(UniversalCache::compose(u.opposite(n), pop) == xvar(n));
    // Adams-from-sigma and sigma-from-Adams invert each other
    CHECK(UniversalCache::compose(u.sigma_from_adams(n), newt) == xvar(n));
    CHECK(UniversalCache::compose(u.newton(n), sfa) == xvar(n));
    // both paths from the lambda basis to Adams powers agree
    CHECK(u.adams_from_lambda(n) ==
          UniversalCache::compose(u.newton(n), pop));
    // and back: lambda-from-Adams is the opposite of sigma-from-Adams
    CHECK(u.lambda_from_adams(n) ==
          UniversalCache::compose(u.opposite(n), sfa));
  }
}

TEST_CASE("splitting oracle for the linear families") {
  UniversalCache u;
  for (int n = 1; n <= 6; ++n) {
    auto uv = alphabet("u", n);
    std::vector<Polynomial> h, e, p;
    for (int k = 1; k <= n; ++k) {
      h.push_back(complete_sym(k, uv));
      e.push_back(elem_sym(k, uv));
      p.push_back(power_sum(k, uv));
    }
    CHECK(UniversalCache::compose(u.opposite(n), h) == elem_sym(n, uv));
    CHECK(UniversalCache::compose(u.newton(n), e) == power_sum(n, uv));
    CHECK(UniversalCache::compose(u.sigma_from_adams(n), p) ==
          elem_sym(n, uv));
    CHECK(UniversalCache::compose(u.lambda_from_adams(n), p) ==
          complete_sym(n, uv));
    CHECK(UniversalCache::compose(u.adams_from_lambda(n), h) ==
          power_sum(n, uv));
  }
}

TEST_CASE("splitting oracle for products") {
  UniversalCache u;
  for (int n = 1; n <= 4; ++n) {
    auto uv = alphabet("u", n);
    auto vv = alphabet("v", n);
    std::vector<Polynomial> items;
    for (VarId a : uv)
      for (VarId b : vv)
        items.push_back(Polynomial::variable(a) * Polynomial::variable(b));
    CHECK(UniversalCache::compose2(u.groth_product(n), esyms(uv, n),
                                   esyms(vv, n)) == elem_of(items, n));
  }
}

TEST_CASE("splitting oracle for compositions") {
  UniversalCache u;
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; n * m <= 8; ++m) {
      int M = n * m;
      auto uv = alphabet("u", M);
      // sigma^m of a sum of M lines: every m-subset contributes a line
      std::vector<Polynomial> items;
      std::vector<int> idx(m);
      std::function<void(int, int)> walk = [&](int from, int depth) {
        if (depth == m) {
          Polynomial prod(1);
          for (int i : idx) prod *= Polynomial::variable(uv[i]);
          items.push_back(prod);
          return;
        }
        for (int i = from; i < M; ++i) {
          idx[depth] = i;
          walk(i + 1, depth + 1);
        }
      };
      walk(0, 0);
      CHECK(UniversalCache::compose(u.groth_composite(n, m), esyms(uv, M)) ==
            elem_of(items, n));
    }
  }
}

TEST_CASE("composition guards missing arguments") {
  UniversalCache u;
  try {
    UniversalCache::compose(u.opposite(3), {P("x1")});
    FAIL("expected an lring::error");
  } catch (const error& e) {
    CHECK(e.code() == errc::bound_exceeded);
  }
}

TEST_CASE("the on-disk store is a pure cache") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "lring_ucache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  Polynomial fresh;
  {
    UniversalCache u(dir.string());
    fresh = u.opposite(5);
  }
  CHECK(!fs::is_empty(dir));

  UniversalCache u2(dir.string());
  CHECK(u2.opposite(5) == fresh);
  UniversalCache plain;
  CHECK(plain.opposite(5) == fresh);

  fs::remove_all(dir);
}
