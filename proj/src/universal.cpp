#include "lring/universal.hpp"

#include <filesystem>
#include <fstream>

#include "lring/poly_json.hpp"
#include "lring/symfunc.hpp"

namespace lring {

namespace {

VarId xvar(int k) { return var_id("x" + std::to_string(k)); }
VarId yvar(int k) { return var_id("y" + std::to_string(k)); }

Polynomial xp(int k) { return Polynomial::variable(xvar(k)); }

void check_args(const Polynomial& u, const char* prefix, std::size_t n) {
  for (VarId v : u.variables()) {
    const std::string& name = var_name(v);
    if (name.size() < 2 || name[0] != prefix[0]) continue;
    std::string rest = name.substr(1);
    if (rest.find_first_not_of("0123456789") != std::string::npos) continue;
    if (std::stoul(rest) > n)
      fail(errc::bound_exceeded, "composition needs " + name + " argument");
  }
}

}  // namespace

Polynomial UniversalCache::cached(const std::string& key,
                                  Polynomial (UniversalCache::*build)(int),
                                  int n) {
  {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (!dir_.empty()) {
      std::filesystem::path f = std::filesystem::path(dir_) / (key + ".json");
      std::ifstream in(f);
      if (in) {
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        Polynomial p = poly_from_json(text);
        memo_.emplace(key, p);
        return p;
      }
    }
  }
  Polynomial p = (this->*build)(n);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto [it, fresh] = memo_.emplace(key, std::move(p));
  if (fresh && !dir_.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ofstream out(std::filesystem::path(dir_) / (key + ".json"));
    out << poly_to_json(it->second) << "\n";
  }
  return it->second;
}

Polynomial UniversalCache::build_opposite(int n) {
  if (n == 0) return Polynomial(1);
  Polynomial acc;
  for (int i = 0; i <= n - 1; ++i) {
    Polynomial piece = opposite(i) * xp(n - i);
    acc += ((n - i + 1) % 2 == 0) ? piece : -piece;
  }
  return acc;
}

Polynomial UniversalCache::build_newton(int n) {
  if (n == 1) return xp(1);
  Polynomial acc = xp(n).scaled(n % 2 == 1 ? n : -n);
  for (int i = 1; i <= n - 1; ++i) {
    Polynomial piece = xp(n - i) * newton(i);
    acc -= ((n - i) % 2 == 0) ? piece : -piece;
  }
  return acc;
}

Polynomial UniversalCache::build_sigma_from_adams(int n) {
  if (n == 1) return xp(1);
  Polynomial acc = (n % 2 == 1) ? xp(n) : -xp(n);
  for (int i = 1; i <= n - 1; ++i) {
    Polynomial piece = sigma_from_adams(n - i) * xp(i);
    acc += (i % 2 == 1) ? piece : -piece;
  }
  return acc.scaled(Rat(1, n));
}

Polynomial UniversalCache::build_lambda_from_adams(int n) {
  if (n == 0) return Polynomial(1);
  Polynomial acc;
  for (int i = 0; i <= n - 1; ++i) {
    Polynomial piece = lambda_from_adams(i) * sigma_from_adams(n - i);
    acc += ((n - i + 1) % 2 == 0) ? piece : -piece;
  }
  return acc;
}

Polynomial UniversalCache::build_adams_from_lambda(int n) {
  std::vector<Polynomial> args;
  args.reserve(n);
  for (int k = 1; k <= n; ++k) args.push_back(opposite(k));
  return compose(newton(n), args);
}

Polynomial UniversalCache::opposite(int n) {
  return cached("pop_" + std::to_string(n), &UniversalCache::build_opposite, n);
}

Polynomial UniversalCache::newton(int n) {
  return cached("newton_" + std::to_string(n), &UniversalCache::build_newton, n);
}

Polynomial UniversalCache::sigma_from_adams(int n) {
  return cached("l_" + std::to_string(n),
                &UniversalCache::build_sigma_from_adams, n);
}

Polynomial UniversalCache::lambda_from_adams(int n) {
  return cached("lop_" + std::to_string(n),
                &UniversalCache::build_lambda_from_adams, n);
}

Polynomial UniversalCache::adams_from_lambda(int n) {
  return cached("nop_" + std::to_string(n),
                &UniversalCache::build_adams_from_lambda, n);
}

Polynomial UniversalCache::groth_product(int n) {
  std::string key = "grothmul_" + std::to_string(n);
  {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  auto us = alphabet("gu", n);
  auto vs = alphabet("gv", n);
  // e_n of the n*n pairwise products u_i v_j
  std::vector<Polynomial> c(n + 1);
  c[0] = Polynomial(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial uv =
          Polynomial::term(1, Monomial::var(us[i]).times(Monomial::var(vs[j])));
      for (int k = n; k >= 1; --k) c[k] += c[k - 1] * uv;
    }
  std::vector<VarId> xs, ys;
  for (int k = 1; k <= n; ++k) xs.push_back(xvar(k)), ys.push_back(yvar(k));
  Polynomial r = sym_to_elementary(c[n], us, xs);
  r = sym_to_elementary(r, vs, ys);
  r.assert_integral("groth_product");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return memo_.emplace(key, std::move(r)).first->second;
}

Polynomial UniversalCache::groth_composite(int n, int m) {
  std::string key = "grothcomp_" + std::to_string(n) + "_" + std::to_string(m);
  {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  int nm = n * m;
  auto us = alphabet("gu", nm);
  // e_n over products of the m-subsets of the alphabet
  std::vector<Polynomial> c(n + 1);
  c[0] = Polynomial(1);
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  for (;;) {
    Monomial prod;
    for (int i : idx) prod = prod.times(Monomial::var(us[i]));
    Polynomial q = Polynomial::term(1, prod);
    for (int k = n; k >= 1; --k) c[k] += c[k - 1] * q;
    // next m-combination of {0..nm-1}
    int i = m - 1;
    while (i >= 0 && idx[i] == nm - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::vector<VarId> xs;
  for (int k = 1; k <= nm; ++k) xs.push_back(xvar(k));
  Polynomial r = sym_to_elementary(c[n], us, xs);
  r.assert_integral("groth_composite");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return memo_.emplace(key, std::move(r)).first->second;
}

Polynomial UniversalCache::compose(const Polynomial& u,
                                   const std::vector<Polynomial>& args) {
  check_args(u, "x", args.size());
  std::map<VarId, Polynomial> sub;
  for (std::size_t k = 0; k < args.size(); ++k)
    sub.emplace(xvar(static_cast<int>(k + 1)), args[k]);
  return u.substitute(sub);
}

Polynomial UniversalCache::compose2(const Polynomial& u,
                                    const std::vector<Polynomial>& xargs,
                                    const std::vector<Polynomial>& yargs) {
  check_args(u, "x", xargs.size());
  check_args(u, "y", yargs.size());
  std::map<VarId, Polynomial> sub;
  for (std::size_t k = 0; k < xargs.size(); ++k)
    sub.emplace(xvar(static_cast<int>(k + 1)), xargs[k]);
  for (std::size_t k = 0; k < yargs.size(); ++k)
    sub.emplace(yvar(static_cast<int>(k + 1)), yargs[k]);
  return u.substitute(sub);
}

}  // namespace lring
