#include "lring/symfunc.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace lring {

std::vector<VarId> alphabet(const std::string& prefix, int m) {
  std::vector<VarId> vs;
  vs.reserve(m);
  for (int i = 1; i <= m; ++i) vs.push_back(var_id(prefix + std::to_string(i)));
  return vs;
}

Polynomial elem_sym(int k, const std::vector<VarId>& u) {
  if (k == 0) return Polynomial(1);
  if (k < 0 || k > static_cast<int>(u.size())) return Polynomial();
  // dp[j] = e_j of the processed prefix
  std::vector<Polynomial> dp(k + 1);
  dp[0] = Polynomial(1);
  for (VarId v : u) {
    Polynomial x = Polynomial::variable(v);
    for (int j = k; j >= 1; --j) dp[j] += dp[j - 1] * x;
  }
  return dp[k];
}

Polynomial complete_sym(int k, const std::vector<VarId>& u) {
  if (k == 0) return Polynomial(1);
  if (k < 0 || u.empty()) return Polynomial();
  std::vector<Polynomial> dp(k + 1);
  dp[0] = Polynomial(1);
  for (VarId v : u) {
    Polynomial x = Polynomial::variable(v);
    for (int j = 1; j <= k; ++j) dp[j] += dp[j - 1] * x;  // allows repeats
  }
  return dp[k];
}

Polynomial power_sum(int k, const std::vector<VarId>& u) {
  if (k == 0) return Polynomial(static_cast<int>(u.size()));
  Polynomial s;
  for (VarId v : u) s += Polynomial::variable(v, static_cast<std::uint32_t>(k));
  return s;
}

namespace {

// u-exponent vector of a monomial, indexed like `u`.
std::vector<std::uint32_t> u_part(const Monomial& m,
                                  const std::unordered_map<VarId, int>& pos,
                                  std::size_t width) {
  std::vector<std::uint32_t> a(width, 0);
  for (const auto& f : m.factors()) {
    auto it = pos.find(f.var);
    if (it != pos.end()) a[it->second] = f.exp;
  }
  return a;
}

Polynomial rename_vars(const Polynomial& p, const std::map<VarId, VarId>& ren) {
  std::vector<Term> ts;
  ts.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (const auto& f : t.mono.factors()) {
      auto it = ren.find(f.var);
      m = m.times(Monomial::var(it == ren.end() ? f.var : it->second, f.exp));
    }
    ts.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(std::move(ts));
}

}  // namespace

Polynomial sym_to_elementary(const Polynomial& p, const std::vector<VarId>& u,
                             const std::vector<VarId>& targets) {
  const std::size_t m = u.size();
  if (targets.size() < m)
    fail(errc::syntax_error, "need one target per alphabet variable");
  if (m == 0) return p;

  // Symmetry check: invariance under a transposition and the full cycle
  // generates the whole symmetric group.
  if (m >= 2) {
    std::map<VarId, VarId> tr{{u[0], u[1]}, {u[1], u[0]}};
    if (rename_vars(p, tr) != p)
      fail(errc::not_symmetric, "not invariant under transposition");
    std::map<VarId, VarId> cyc;
    for (std::size_t i = 0; i < m; ++i) cyc[u[i]] = u[(i + 1) % m];
    if (rename_vars(p, cyc) != p)
      fail(errc::not_symmetric, "not invariant under cycle");
  }

  std::unordered_map<VarId, int> pos;
  for (std::size_t i = 0; i < m; ++i) pos[u[i]] = static_cast<int>(i);

  std::vector<Polynomial> e(m + 1);
  for (std::size_t k = 1; k <= m; ++k)
    e[k] = elem_sym(static_cast<int>(k), u);

  const std::size_t max_iter = (p.term_count() + 1) * m;
  std::size_t iter = 0;

  Polynomial rest = p;
  Polynomial out;
  for (;;) {
    // Leading u-exponent vector (lex, u[0] most significant).
    bool found = false;
    std::vector<std::uint32_t> lead;
    for (const auto& t : rest.terms()) {
      auto a = u_part(t.mono, pos, m);
      bool zero = std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; });
      if (zero) continue;
      if (!found || std::lexicographical_compare(lead.begin(), lead.end(),
                                                 a.begin(), a.end())) {
        lead = std::move(a);
        found = true;
      }
    }
    if (!found) {
      out += rest;  // remaining part is alphabet-free
      return out;
    }
    if (++iter > max_iter)
      fail(errc::non_terminating, "elementary reduction exceeded iteration bound");
    for (std::size_t i = 0; i + 1 < m; ++i)
      if (lead[i] < lead[i + 1])
        fail(errc::not_symmetric, "leading exponents not decreasing");

    // Coefficient of the leading u-part (polynomial in the other variables).
    std::vector<Term> cts;
    for (const auto& t : rest.terms()) {
      if (u_part(t.mono, pos, m) != lead) continue;
      Monomial outside;
      for (const auto& f : t.mono.factors())
        if (!pos.count(f.var)) outside = outside.times(Monomial::var(f.var, f.exp));
      cts.push_back({outside, t.coeff});
    }
    Polynomial c = Polynomial::from_terms(std::move(cts));

    Polynomial prod_e(1), prod_t(1);
    for (std::size_t k = 0; k < m; ++k) {
      std::uint32_t delta = lead[k] - (k + 1 < m ? lead[k + 1] : 0);
      if (delta == 0) continue;
      prod_e = prod_e * e[k + 1].pow(delta);
      prod_t = prod_t * Polynomial::variable(targets[k], delta);
    }
    rest -= c * prod_e;
    out += c * prod_t;
  }
}

namespace {

// Dense truncated power series in t over Polynomial, orders 0..K.
using TS = std::vector<Polynomial>;

TS ts_exp(const TS& s, int K) {
  // E' = S' E  =>  n E[n] = sum_{m=1..n} m S[m] E[n-m]
  TS e(K + 1);
  e[0] = Polynomial(1);
  for (int n = 1; n <= K; ++n) {
    Polynomial acc;
    for (int m = 1; m <= n; ++m)
      acc += s[m].scaled(m) * e[n - m];
    e[n] = acc.scaled(Rat(1, n));
  }
  return e;
}

class SplitEval {
 public:
  SplitEval(const std::vector<int>& sizes) : sizes_(sizes) {}

  Polynomial rec(const ExprPtr& e) {
    switch (e->kind) {
      case ExprKind::zero: return Polynomial();
      case ExprKind::one: return Polynomial(1);
      case ExprKind::int_lit: return Polynomial(Rat(static_cast<long>(e->lit)));
      case ExprKind::gen: {
        if (e->gen >= static_cast<int>(sizes_.size()))
          fail(errc::unknown_generator, "generator out of range");
        Polynomial s;
        for (int j = 1; j <= sizes_[e->gen]; ++j)
          s += Polynomial::variable(var_id(
              "u" + std::to_string(e->gen + 1) + "_" + std::to_string(j)));
        return s;
      }
      case ExprKind::neg: return -rec(e->a);
      case ExprKind::add: return rec(e->a) + rec(e->b);
      case ExprKind::mul: return rec(e->a) * rec(e->b);
      case ExprKind::psi: return rec(e->a).exponent_scale(e->k);
      case ExprKind::lam:
      case ExprKind::sig: {
        Polynomial v = rec(e->a);
        int K = e->k;
        TS s(K + 1);
        for (int m = 1; m <= K; ++m) {
          Rat c = Rat(1, m);
          if (e->kind == ExprKind::sig && m % 2 == 0) c = -c;
          s[m] = v.exponent_scale(m).scaled(c);
        }
        return ts_exp(s, K)[K];
      }
    }
    fail(errc::syntax_error, "unhandled node");
  }

 private:
  const std::vector<int>& sizes_;
};

}  // namespace

Polynomial splitting_eval(const ExprPtr& e, const std::vector<int>& sizes) {
  auto need = depth_vector(e, static_cast<int>(sizes.size()));
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] < need[i])
      fail(errc::insufficient_alphabet,
           "generator " + std::to_string(i + 1) + " needs " +
               std::to_string(need[i]) + " line elements, got " +
               std::to_string(sizes[i]));
  return SplitEval(sizes).rec(e);
}

}  // namespace lring
