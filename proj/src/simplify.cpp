#include "lring/simplify.hpp"

#include <algorithm>

namespace lring {

Simplifier Simplifier::free_model(UniversalCache& u, int ngens) {
  return Simplifier(u, ngens, {}, false);
}

Simplifier Simplifier::curve_model(UniversalCache& u, std::vector<int> genera) {
  int ngens = static_cast<int>(genera.size()) + 1;
  return Simplifier(u, ngens, std::move(genera), true);
}

Simplifier::Simplifier(UniversalCache& u, int ngens, std::vector<int> genera,
                       bool curve)
    : uni_(u), curve_mode_(curve), ngens_(ngens), genera_(std::move(genera)) {
  nbases_ = curve_mode_ ? static_cast<int>(genera_.size()) : ngens_;
  if (curve_mode_) {
    line_ = var_id("L");
    for (int i = 0; i < nbases_; ++i)
      if (genera_[i] < 0) fail(errc::bound_exceeded, "negative genus");
  }
}

VarId Simplifier::base_var(int i, int j) {
  auto key = std::make_pair(i, j);
  auto it = vars_.find(key);
  if (it != vars_.end()) return it->second;
  std::string name = (curve_mode_ ? "a" : "x") + std::to_string(i + 1) + "_" +
                     std::to_string(j);
  VarId v = var_id(name);
  vars_.emplace(key, v);
  rev_.emplace(v, key);
  return v;
}

Polynomial Simplifier::lambda_power_of_base(int i, int j) {
  if (j == 0) return Polynomial(1);
  if (j < 0) return Polynomial();
  if (!curve_mode_) return Polynomial::variable(base_var(i, j));
  int g = genera_[i];
  // lambda powers of the curve part fold back after genus
  if (j <= g) return Polynomial::variable(base_var(i, j));
  if (j < 2 * g)
    return Polynomial::variable(base_var(i, 2 * g - j))
        .shifted(Monomial::var(line_, static_cast<std::uint32_t>(j - g)));
  if (j == 2 * g)
    return Polynomial::term(1, Monomial::var(line_, static_cast<std::uint32_t>(g)));
  return Polynomial();
}

Polynomial Simplifier::adams_power_of_base(int i, int k) {
  auto key = std::make_pair(i, k);
  auto it = psi_.find(key);
  if (it != psi_.end()) return it->second;
  // Newton recurrence over the lambda table:
  //   psi_n = n lambda^n - sum_{j=1}^{n-1} lambda^j psi_{n-j}.
  // Equivalent to composing the universal Adams-from-lambda polynomial, but
  // the lambda table truncates the sum (curve model: lambda^j = 0 past 2g),
  // so high Adams powers stay cheap.
  int first = 1;
  while (first <= k && psi_.count(std::make_pair(i, first))) ++first;
  for (int n = first; n <= k; ++n) {
    Polynomial acc = lambda_power_of_base(i, n).scaled(Rat(n));
    for (int j = 1; j < n; ++j) {
      Polynomial tj = lambda_power_of_base(i, j);
      if (tj.is_zero()) continue;
      acc -= tj * psi_.at(std::make_pair(i, n - j));
    }
    acc.assert_integral("adams power of generator");
    psi_.emplace(std::make_pair(i, n), std::move(acc));
  }
  return psi_.at(key);
}

Polynomial Simplifier::mu(int i, int a, int b) {
  if (a == 1) return lambda_power_of_base(i, b);
  if (b == 1) return adams_power_of_base(i, a);
  auto key = std::make_tuple(i, a, b);
  auto it = mu_.find(key);
  if (it != mu_.end()) return it->second;
  if (!curve_mode_ && !depth_.empty()) {
    std::int64_t ab = static_cast<std::int64_t>(a) * b;
    if (i < static_cast<int>(depth_.size()) && ab > depth_[i])
      fail(errc::depth_exceeded,
           "mu(" + std::to_string(a) + "," + std::to_string(b) +
               ") exceeds depth bound for generator " + std::to_string(i + 1));
  }
  // psi_a on the b-th lambda power: the lambda-from-Adams polynomial
  // evaluated at psi_{a*1}, psi_{a*2}, ..., psi_{a*b} of the generator.
  std::vector<Polynomial> args;
  args.reserve(b);
  for (int t = 1; t <= b; ++t) args.push_back(adams_power_of_base(i, a * t));
  Polynomial p = UniversalCache::compose(uni_.lambda_from_adams(b), args);
  p.assert_integral("Adams action on lambda power");
  return mu_.emplace(key, std::move(p)).first->second;
}

Polynomial Simplifier::apply_adams(const Polynomial& p, int k) {
  if (k == 1 || p.is_zero()) return p;
  if (k < 1) fail(errc::syntax_error, "Adams index must be >= 1");
  std::map<VarId, Polynomial> sub;
  for (VarId v : p.variables()) {
    if (curve_mode_ && v == line_) {
      sub.emplace(v, Polynomial::variable(line_, static_cast<std::uint32_t>(k)));
      continue;
    }
    auto it = rev_.find(v);
    if (it != rev_.end())
      sub.emplace(v, mu(it->second.first, k, it->second.second));
  }
  return p.substitute(sub);
}

Polynomial Simplifier::eliminate(ExprKind op, int k, const Polynomial& v) {
  std::vector<Polynomial> args;
  args.reserve(k);
  args.push_back(v);
  for (int t = 2; t <= k; ++t) args.push_back(apply_adams(v, t));
  Polynomial u = (op == ExprKind::lam) ? uni_.lambda_from_adams(k)
                                       : uni_.sigma_from_adams(k);
  Polynomial r = UniversalCache::compose(u, args);
  r.assert_integral(op == ExprKind::lam ? "lambda elimination"
                                        : "sigma elimination");
  return r;
}

Polynomial Simplifier::eval(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::zero:
      return Polynomial();
    case ExprKind::one:
      return Polynomial(1);
    case ExprKind::int_lit:
      return Polynomial(Rat(static_cast<long>(e->lit)));
    case ExprKind::gen: {
      if (e->gen >= ngens_)
        fail(errc::unknown_generator,
             "generator index " + std::to_string(e->gen) + " out of range");
      if (!curve_mode_) return Polynomial::variable(base_var(e->gen, 1));
      if (e->gen == 0) return Polynomial::variable(line_);
      // curve class: 1 + a_1 + L
      return Polynomial(1) +
             Polynomial::variable(base_var(e->gen - 1, 1)) +
             Polynomial::variable(line_);
    }
    case ExprKind::neg:
      return -eval(e->a);
    case ExprKind::add:
      return eval(e->a) + eval(e->b);
    case ExprKind::mul:
      return eval(e->a) * eval(e->b);
    case ExprKind::lam:
      if (!curve_mode_ && e->a->kind == ExprKind::gen) {
        if (e->a->gen >= ngens_)
          fail(errc::unknown_generator, "generator index out of range");
        return lambda_power_of_base(e->a->gen, e->k);
      }
      return eliminate(ExprKind::lam, e->k, eval(e->a));
    case ExprKind::sig:
      return eliminate(ExprKind::sig, e->k, eval(e->a));
    case ExprKind::psi: {
      Polynomial r = apply_adams(eval(e->a), e->k);
      r.assert_integral("Adams elimination");
      return r;
    }
  }
  fail(errc::syntax_error, "unhandled node");
}

Polynomial Simplifier::run(const ExprPtr& e) {
  if (!curve_mode_) depth_ = depth_vector(e, ngens_);
  Polynomial p = eval(e);
  if (!curve_mode_) depth_.clear();
  p.assert_integral("simplified form");
  return p;
}

Polynomial Simplifier::sigma_basis(const Polynomial& p) {
  if (curve_mode_) fail(errc::syntax_error, "sigma basis needs the free model");
  std::map<VarId, Polynomial> sub;
  for (VarId v : p.variables()) {
    auto it = rev_.find(v);
    if (it == rev_.end()) continue;
    auto [i, j] = it->second;
    std::vector<Polynomial> args;
    args.reserve(j);
    for (int t = 1; t <= j; ++t)
      args.push_back(Polynomial::variable(var_id(
          "s" + std::to_string(i + 1) + "_" + std::to_string(t))));
    sub.emplace(v, UniversalCache::compose(uni_.opposite(j), args));
  }
  Polynomial r = p.substitute(sub);
  r.assert_integral("sigma basis");
  return r;
}

}  // namespace lring
