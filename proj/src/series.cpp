#include "lring/series.hpp"

#include <algorithm>

namespace lring {

namespace {

constexpr int kInf = LaurentSeries::kInfinitePrec;

int sat(long long v) {
  if (v >= kInf) return kInf;
  if (v <= -kInf) return -kInf;
  return static_cast<int>(v);
}

}  // namespace

LaurentSeries::LaurentSeries(int lo, int prec) : lo_(lo), prec_(prec) {
  if (prec_ < lo_) fail(errc::window_too_small, "empty series window");
  if (prec_ < kInf) c_.resize(prec_ - lo_);
}

LaurentSeries LaurentSeries::monomial(int e, const Polynomial& c, int prec) {
  LaurentSeries s(e, prec);
  if (prec == kInf) s.c_.resize(1);
  if (e < prec) s.c_[0] = c;
  return s;
}

Polynomial LaurentSeries::at(int e) const {
  if (e >= prec_)
    fail(errc::window_too_small,
         "coefficient of t^" + std::to_string(e) + " is beyond precision " +
             std::to_string(prec_));
  if (e < lo_ || e - lo_ >= static_cast<int>(c_.size())) return Polynomial();
  return c_[e - lo_];
}

void LaurentSeries::add_at(int e, const Polynomial& c) {
  if (e >= prec_) fail(errc::window_too_small, "write beyond precision");
  if (e < lo_) fail(errc::window_too_small, "write below series floor");
  if (e - lo_ >= static_cast<int>(c_.size())) c_.resize(e - lo_ + 1);
  c_[e - lo_] += c;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  LaurentSeries r(std::min(lo_, o.lo_), std::min(prec_, o.prec_));
  if (r.prec_ == kInf)
    r.c_.resize(std::max(lo_ + static_cast<int>(c_.size()),
                         o.lo_ + static_cast<int>(o.c_.size())) -
                r.lo_);
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    int e = lo_ + i;
    if (e >= r.prec_) break;
    if (!c_[i].is_zero()) r.c_[e - r.lo_] += c_[i];
  }
  for (int i = 0; i < static_cast<int>(o.c_.size()); ++i) {
    int e = o.lo_ + i;
    if (e >= r.prec_) break;
    if (!o.c_[i].is_zero()) r.c_[e - r.lo_] += o.c_[i];
  }
  return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  int rlo = sat(static_cast<long long>(lo_) + o.lo_);
  // an exact factor does not limit the product's knowledge at all
  long long b1 = prec_ >= kInf ? kInf : static_cast<long long>(prec_) + o.lo_;
  long long b2 =
      o.prec_ >= kInf ? kInf : static_cast<long long>(o.prec_) + lo_;
  int rprec = sat(std::min(b1, b2));
  LaurentSeries r(rlo, rprec);
  if (rprec == kInf)
    r.c_.resize(std::max<std::size_t>(1, c_.size() + o.c_.size()));
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < static_cast<int>(o.c_.size()); ++j) {
      if (o.c_[j].is_zero()) continue;
      int e = lo_ + i + o.lo_ + j;
      if (e >= r.prec_) break;
      r.c_[e - r.lo_] += c_[i] * o.c_[j];
    }
  }
  return r;
}

LaurentSeries LaurentSeries::scaled(const Polynomial& c) const {
  LaurentSeries r = *this;
  for (auto& p : r.c_) p = p * c;
  return r;
}

LaurentSeries LaurentSeries::shifted(int e) const {
  LaurentSeries r = *this;
  r.lo_ = sat(static_cast<long long>(lo_) + e);
  r.prec_ = prec_ >= kInf ? kInf : sat(static_cast<long long>(prec_) + e);
  return r;
}

LaurentSeries LaurentSeries::truncated(int new_prec) const {
  if (new_prec >= prec_) return *this;
  if (new_prec < lo_) fail(errc::window_too_small, "truncation below series floor");
  LaurentSeries r(lo_, new_prec);
  std::size_t keep = std::min<std::size_t>(c_.size(), new_prec - lo_);
  std::copy(c_.begin(), c_.begin() + keep, r.c_.begin());
  return r;
}

LaurentSeries LaurentSeries::exponent_scaled(
    int j, const std::function<Polynomial(const Polynomial&)>& fn) const {
  if (j < 1) fail(errc::syntax_error, "exponent scale needs j >= 1");
  long long nlo = static_cast<long long>(lo_) * j;
  long long nprec = prec_ >= kInf ? kInf : static_cast<long long>(prec_) * j;
  // exponents strictly between j*(prec-1) and j*prec are known zero
  LaurentSeries r(sat(nlo), sat(std::min<long long>(nprec, kInf)));
  if (r.prec_ == kInf) r.c_.resize(c_.size() ? (c_.size() - 1) * j + 1 : 0);
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (c_[i].is_zero()) continue;
    long long e = static_cast<long long>(lo_ + i) * j;
    if (e >= r.prec_) break;
    r.c_[static_cast<int>(e) - r.lo_] += fn(c_[i]);
  }
  return r;
}

LaurentSeries LaurentSeries::tightened() const {
  int skip = 0;
  while (skip < static_cast<int>(c_.size()) && c_[skip].is_zero()) ++skip;
  if (skip == 0) return *this;
  LaurentSeries r(lo_ + skip, prec_);
  r.c_.assign(c_.begin() + skip, c_.end());
  return r;
}

Polynomial LaurentSeries::coeff_sum() const {
  Polynomial s;
  for (const auto& p : c_) s += p;
  return s;
}

std::optional<int> LaurentSeries::min_nonzero() const {
  for (int i = 0; i < static_cast<int>(c_.size()); ++i)
    if (!c_[i].is_zero()) return lo_ + i;
  return std::nullopt;
}

std::optional<int> LaurentSeries::max_nonzero() const {
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
    if (!c_[i].is_zero()) return lo_ + i;
  return std::nullopt;
}

bool LaurentSeries::zero_on(int a, int b) const {
  if (b > prec_)
    fail(errc::window_too_small, "zero test reaches beyond precision");
  for (int e = std::max(a, lo_); e < std::min(b, lo_ + static_cast<int>(c_.size()));
       ++e)
    if (!c_[e - lo_].is_zero()) return false;
  return true;
}

}  // namespace lring
