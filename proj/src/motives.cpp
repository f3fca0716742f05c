#include "lring/motives.hpp"

#include <algorithm>
#include <chrono>
#include <climits>

namespace lring {

namespace {

// Total t-exponent shift a partition contributes outside its zeta factors.
long long partition_shift(const Partition& pa, int p, int g) {
  long long e = 0;
  for (const Cell& c : pa.cells)
    e += static_cast<long long>(p) * (c.a - c.l) +
         static_cast<long long>(1 - g) * (2 * c.l + 1);
  return e;
}

bool is_exact_zero(const LaurentSeries& s) {
  return s.prec() == LaurentSeries::kInfinitePrec && !s.min_nonzero();
}

}  // namespace

int Partition::n() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

std::vector<Partition> partitions_of(int n, int bound) {
  if (n < 0) fail(errc::bound_exceeded, "partition size must be nonnegative");
  if (n > bound)
    fail(errc::bound_exceeded, "partition size " + std::to_string(n) +
                                   " exceeds bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> cur;
  auto emit = [&] {
    Partition pa;
    pa.parts = cur;
    int rows = static_cast<int>(cur.size());
    for (int i = 0; i < rows; ++i)
      for (int j = 1; j <= cur[i]; ++j) {
        int a = cur[i] - j;
        int l = 0;
        for (int i2 = i + 1; i2 < rows; ++i2)
          if (cur[i2] >= j) ++l;
        pa.cells.push_back({a, l, a + l + 1});
      }
    out.push_back(std::move(pa));
  };
  auto rec = [&](auto&& self, int rem, int maxp) -> void {
    if (rem == 0) {
      emit();
      return;
    }
    for (int k = std::min(maxp, rem); k >= 1; --k) {
      cur.push_back(k);
      self(self, rem - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

int moebius(int n) {
  if (n < 1) fail(errc::bound_exceeded, "moebius argument must be positive");
  int mu = 1;
  for (int q = 2; static_cast<long long>(q) * q <= n; ++q) {
    if (n % q) continue;
    n /= q;
    if (n % q == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

MotiveContext::MotiveContext(UniversalCache& u, int genus)
    : uni_(u), g_(genus), simp_(Simplifier::curve_model(u, {genus})) {
  if (genus < 2) fail(errc::bound_exceeded, "genus must be at least 2");
  line_ = simp_.line_var();
  px_.reserve(2 * g_ + 1);
  // lambda powers of h^1 are exactly the numerator coefficients
  for (int k = 0; k <= 2 * g_; ++k) px_.push_back(simp_.lambda_power_of_base(0, k));
}

const Polynomial& MotiveContext::px_coeff(int k) const {
  if (k < 0 || k > 2 * g_)
    fail(errc::bound_exceeded, "zeta numerator coefficient out of range");
  return px_[k];
}

Polynomial MotiveContext::px_at(const Polynomial& arg) const {
  Polynomial r = px_[2 * g_];
  for (int k = 2 * g_ - 1; k >= 0; --k) r = r * arg + px_[k];
  return r;
}

Polynomial MotiveContext::simplify(const ExprPtr& e) { return simp_.run(e); }

Polynomial MotiveContext::apply_adams(const Polynomial& p, int j) {
  return simp_.apply_adams(p, j);
}

const Polynomial& MotiveContext::lambda_cls(Cls c, int k) {
  auto key = std::make_pair(static_cast<int>(c), k);
  auto it = lam_.find(key);
  if (it != lam_.end()) return it->second;
  Polynomial v;
  if (k == 0) {
    v = Polynomial(1);
  } else if (k > 0) {
    ExprPtr base;
    switch (c) {
      case Cls::x:
        base = ex_gen(1);
        break;
      case Cls::x_plus_l2:
        base = ex_add(ex_gen(1), ex_mul(ex_gen(0), ex_gen(0)));
        break;
      case Cls::xl_plus_1:
        base = ex_add(ex_mul(ex_gen(1), ex_gen(0)), ex_one());
        break;
    }
    v = simp_.run(ex_lam(k, base));
  }
  return lam_.emplace(key, std::move(v)).first->second;
}

const LaurentSeries& MotiveContext::zeta_cached(int h, int a, int prec) {
  auto key = std::make_pair(h, a);
  auto it = zeta_.find(key);
  if (it != zeta_.end() && it->second.prec() >= prec) return it->second;
  LaurentSeries s = zeta_series(*this, h, a, prec);
  if (it != zeta_.end()) {
    it->second = std::move(s);
    return it->second;
  }
  return zeta_.emplace(key, std::move(s)).first->second;
}

LaurentSeries zeta_series(MotiveContext& ctx, int h, int a, int prec) {
  if (h < 1) fail(errc::syntax_error, "zeta argument exponent must be >= 1");
  if (a < 0) fail(errc::syntax_error, "zeta argument L-power must be >= 0");
  int g2 = 2 * ctx.genus();
  if (static_cast<long long>(h) * g2 >= prec)
    fail(errc::window_too_small,
         "zeta numerator support reaches t^" + std::to_string(h * g2) +
             ", beyond precision " + std::to_string(prec));
  VarId L = ctx.line();
  LaurentSeries num(0, prec);
  for (int k = 0; k <= g2; ++k)
    num.add_at(h * k, ctx.px_coeff(k).shifted(Monomial::var(
                          L, static_cast<std::uint32_t>(a * k))));
  LaurentSeries geo1(0, prec), geo2(0, prec);
  for (long long e = 0, i = 0; e < prec; e += h, ++i) {
    geo1.add_at(static_cast<int>(e),
                Polynomial::variable(L, static_cast<std::uint32_t>(a * i)));
    geo2.add_at(static_cast<int>(e), Polynomial::variable(
                                         L, static_cast<std::uint32_t>((a + 1) * i)));
  }
  return num * geo1 * geo2;
}

LaurentSeries psi_series(MotiveContext& ctx, const LaurentSeries& s, int j) {
  if (j == 1) return s;
  return s.exponent_scaled(
      j, [&](const Polynomial& c) { return ctx.apply_adams(c, j); });
}

LaurentSeries adhm_Hn(MotiveContext& ctx, int n, int p, int lo, int prec) {
  if (n == 0) return LaurentSeries::monomial(0, Polynomial(1), prec);
  if (n < 0) fail(errc::bound_exceeded, "partition level must be nonnegative");
  LaurentSeries sum(lo, prec);
  for (const Partition& pa : partitions_of(n)) {
    long long shift = partition_shift(pa, p, ctx.genus());
    if (shift < lo)
      fail(errc::window_too_small,
           "partition shift t^" + std::to_string(shift) +
               " falls below window floor " + std::to_string(lo));
    int fprec = prec - static_cast<int>(shift);
    LaurentSeries prod = LaurentSeries::monomial(0, Polynomial(1), fprec);
    long long apow = 0;
    for (const Cell& c : pa.cells) {
      prod = prod * ctx.zeta_cached(c.h, c.a, fprec);
      apow += c.a;
    }
    Rat sign = (static_cast<long long>(p) * n % 2) ? Rat(-1) : Rat(1);
    Polynomial coef = Polynomial::term(
        sign, Monomial::var(ctx.line(),
                            static_cast<std::uint32_t>(p * apow)));
    sum = sum + prod.scaled(coef).shifted(static_cast<int>(shift));
  }
  return sum;
}

LaurentSeries plog_Hr(MotiveContext& ctx, int r, int p, int prec) {
  if (r < 1) fail(errc::bound_exceeded, "rank must be positive");
  if (prec < 1) fail(errc::window_too_small, "precision must be positive");
  int g = ctx.genus();
  std::vector<std::vector<Partition>> parts(r + 1);
  std::vector<int> lo(r + 1, 0);
  std::vector<long long> need(r + 1, 0);
  for (int n = 1; n <= r; ++n) {
    parts[n] = partitions_of(n);
    long long mn = LLONG_MAX;
    for (const Partition& pa : parts[n])
      mn = std::min(mn, partition_shift(pa, p, g));
    lo[n] = static_cast<int>(mn);
  }
  // Precision bookkeeping: the T^r coefficient multiplies series whose
  // exponent floors are j*lo_n, so each factor must individually reach
  // ceil(prec/j) minus the floors of its cofactors.
  for (int j = 1; j <= r; ++j) {
    if (r % j || moebius(j) == 0) continue;
    int m = r / j;
    int cf = (prec + j - 1) / j;
    for (const Partition& pa : parts[m])
      for (std::size_t i = 0; i < pa.parts.size(); ++i) {
        long long others = 0;
        for (std::size_t i2 = 0; i2 < pa.parts.size(); ++i2)
          if (i2 != i) others += lo[pa.parts[i2]];
        need[pa.parts[i]] = std::max(need[pa.parts[i]], cf - others);
      }
  }
  std::vector<LaurentSeries> H(r + 1);
  for (int n = 1; n <= r; ++n)
    H[n] = adhm_Hn(ctx, n, p, lo[n], static_cast<int>(need[n]));

  auto conv = [](const std::vector<LaurentSeries>& A,
                 const std::vector<LaurentSeries>& B, int top) {
    std::vector<LaurentSeries> C(top + 1);
    for (int x = 0; x <= top; ++x) {
      if (is_exact_zero(A[x])) continue;
      for (int y = 1; x + y <= top; ++y) {
        if (is_exact_zero(B[y])) continue;
        C[x + y] = C[x + y] + A[x] * B[y];
      }
    }
    return C;
  };

  LaurentSeries acc;
  for (int j = 1; j <= r; ++j) {
    if (r % j) continue;
    int mu = moebius(j);
    if (mu == 0) continue;
    int m = r / j;
    std::vector<LaurentSeries> base(m + 1);
    for (int n = 1; n <= m; ++n) base[n] = psi_series(ctx, H[n], j);
    std::vector<LaurentSeries> cur = base;
    for (int k = 1; k <= m; ++k) {
      Rat scal = Rat((k % 2) ? mu : -mu) / Rat(static_cast<long>(j) * k);
      if (!is_exact_zero(cur[m])) acc = acc + cur[m].scaled(Polynomial(scal));
      if (k < m) cur = conv(cur, base, m);
    }
  }
  LaurentSeries onemt(0, LaurentSeries::kInfinitePrec);
  onemt.add_at(0, Polynomial(1));
  onemt.add_at(1, Polynomial(-1) - Polynomial::variable(ctx.line()));
  onemt.add_at(2, Polynomial::variable(ctx.line()));
  return acc * onemt;
}

AdhmResult adhm_motive(MotiveContext& ctx, int r, int p,
                       std::optional<std::pair<int, int>> t_window) {
  if (r < 1 || r > 3) fail(errc::bound_exceeded, "rank must be 1, 2 or 3");
  if (p < 1) fail(errc::bound_exceeded, "twist excess p must be positive");
  int g = ctx.genus();
  const int guard = 8;
  bool fixed = t_window.has_value();
  int emax = fixed ? t_window->second : 2 * r * g + p * r + guard;
  AdhmResult res;
  for (;;) {
    LaurentSeries H = plog_Hr(ctx, r, p, emax + 1);
    if (fixed) {
      auto mn = H.min_nonzero();
      if (mn && *mn < t_window->first)
        fail(errc::window_too_small,
             "series support starts at t^" + std::to_string(*mn) +
                 ", below requested window floor");
    }
    // The series is a Laurent polynomial: the negative tail is bounded below
    // by the partition shifts (rank 1 starts exactly at t^{1-g}), so the only
    // thing to certify is that the support is finite on top. An empty guard
    // band at the high end is the evidence; evaluation at t = 1 then sums the
    // entire support.
    if (!H.zero_on(emax + 1 - guard, H.prec())) {
      if (fixed || res.retries >= 3)
        fail(errc::non_polynomial_h,
             "series support still meets the top of the window at t^" +
                 std::to_string(emax));
      ++res.retries;
      emax *= 2;
      continue;
    }
    long long lexp = static_cast<long long>(r) * r * (g - 1) +
                     static_cast<long long>(p) * r * (r + 1) / 2;
    Rat sign = (static_cast<long long>(p) * r % 2) ? Rat(-1) : Rat(1);
    res.motive = H.coeff_sum().shifted(
        Monomial::var(ctx.line(), static_cast<std::uint32_t>(lexp)), sign);
    res.motive.assert_integral("partition-series motive");
    res.window_lo = H.lo();
    res.window_hi = emax;
    return res;
  }
}

AdhmResult adhm_motive(UniversalCache& u, int g, int r, int p,
                       std::optional<std::pair<int, int>> t_window) {
  MotiveContext ctx(u, g);
  return adhm_motive(ctx, r, p, t_window);
}

Polynomial bb_motive(MotiveContext& ctx, int r, int p) {
  if (r < 1 || r > 3) fail(errc::bound_exceeded, "rank must be 1, 2 or 3");
  if (p < 1) fail(errc::bound_exceeded, "twist excess p must be positive");
  int g = ctx.genus();
  VarId L = ctx.line();
  auto Lp = [&](long long k) {
    if (k < 0)
      fail(errc::non_integral_result,
           "closed formula produced a negative Lefschetz exponent");
    return Polynomial::variable(L, static_cast<std::uint32_t>(k));
  };
  auto lam = [&](MotiveContext::Cls c, long long k) -> const Polynomial& {
    if (k < 0)
      fail(errc::non_integral_result,
           "closed formula produced a negative lambda index");
    return ctx.lambda_cls(c, static_cast<int>(k));
  };
  int dL = 2 * g - 2 + p;
  Polynomial px1 = ctx.px_at(Polynomial(1));
  if (r == 1) return Lp(dL + 1 - g) * px1;

  Polynomial pxL = ctx.px_at(Polynomial::variable(L));
  if (r == 2) {
    Polynomial num =
        Lp(4LL * dL + 4 - 4 * g) * (px1 * pxL - Lp(g) * px1 * px1);
    Polynomial den = (Lp(1) - Polynomial(1)) * (Lp(2) - Polynomial(1));
    Polynomial bundles = Polynomial::exact_div_univar(num, den, L);
    Polynomial tail;
    for (int d1 = 1; d1 <= (1 + dL) / 2; ++d1)
      tail += lam(MotiveContext::Cls::x, 1 - 2 * d1 + dL);
    return bundles + Lp(3LL * dL + 2 - 2 * g) * px1 * tail;
  }

  Polynomial pxL2 = ctx.px_at(Polynomial::variable(L, 2));
  Polynomial bracket =
      Lp(3 * g - 1) * (Polynomial(1) + Lp(1) + Lp(2)) * px1 * px1 -
      Lp(2 * g - 1) * (Polynomial(1) + Lp(1)) * (Polynomial(1) + Lp(1)) *
          px1 * pxL +
      pxL * pxL2;
  Polynomial denA = (Lp(1) - Polynomial(1)) * (Lp(2) - Polynomial(1)) *
                    (Lp(2) - Polynomial(1)) * (Lp(3) - Polynomial(1));
  Polynomial bundles = Polynomial::exact_div_univar(
      Lp(9LL * dL + 9 - 9 * g) * px1 * bracket, denA, L);

  // The two middle sums share the prefactor L^{7dL+5-5g} P_X(1)^2 / (L-1);
  // only their combination is divisible, so assemble one numerator.
  Polynomial mid;
  for (int d1 = 1; d1 <= (2 + 3 * dL) / 6; ++d1) {
    long long k = static_cast<long long>(dL) - 2 * d1;
    mid += Lp(d1 + g) * lam(MotiveContext::Cls::x_plus_l2, k) -
           lam(MotiveContext::Cls::xl_plus_1, k);
  }
  for (int d1 = 1; d1 <= (4 + 3 * dL) / 6; ++d1) {
    long long k = static_cast<long long>(dL) - 2 * d1 + 1;
    mid += Lp(d1 + g - 1) * lam(MotiveContext::Cls::x_plus_l2, k) -
           lam(MotiveContext::Cls::xl_plus_1, k);
  }
  Polynomial middle = Polynomial::exact_div_univar(
      Lp(7LL * dL + 5 - 5 * g) * px1 * px1 * mid,
      Lp(1) - Polynomial(1), L);

  Polynomial corner;
  for (int d1 = 1; d1 <= dL; ++d1) {
    int d2lo = std::max(d1 - dL, 1 - d1);
    for (int d2 = d2lo; d2 <= (1 + dL - d1) / 2; ++d2)
      corner += lam(MotiveContext::Cls::x,
                    static_cast<long long>(dL) - d1 + d2) *
                lam(MotiveContext::Cls::x,
                    1LL + dL - d1 - 2 * d2);
  }
  return bundles + middle + Lp(6LL * dL + 3 - 3 * g) * px1 * corner;
}

Polynomial bb_motive(UniversalCache& u, int g, int r, int p) {
  MotiveContext ctx(u, g);
  return bb_motive(ctx, r, p);
}

VerifyRow verify_pair(UniversalCache& u, int g, int r, int p) {
  VerifyRow row;
  row.g = g;
  row.r = r;
  row.p = p;
  MotiveContext ctx(u, g);
  auto t0 = std::chrono::steady_clock::now();
  row.bb = bb_motive(ctx, r, p);
  auto t1 = std::chrono::steady_clock::now();
  AdhmResult a = adhm_motive(ctx, r, p);
  auto t2 = std::chrono::steady_clock::now();
  row.ms_bb =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  row.ms_adhm =
      std::chrono::duration_cast<std::chrono::milliseconds>(t2 - t1).count();
  row.adhm = std::move(a.motive);
  row.window_lo = a.window_lo;
  row.window_hi = a.window_hi;
  row.equal = row.bb == row.adhm;
  return row;
}

}  // namespace lring
