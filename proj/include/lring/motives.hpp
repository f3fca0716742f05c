#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lring/expr.hpp"
#include "lring/poly.hpp"
#include "lring/series.hpp"
#include "lring/simplify.hpp"
#include "lring/universal.hpp"

namespace lring {

// Young-diagram cell invariants: arm, leg, hook length.
struct Cell {
  int a;
  int l;
  int h;
};

struct Partition {
  std::vector<int> parts;   // weakly decreasing, positive
  std::vector<Cell> cells;  // row-major over the diagram
  int n() const;
};

// All partitions of n in decreasing lexicographic order, hooks precomputed.
// BoundExceeded past the configured bound.
std::vector<Partition> partitions_of(int n, int bound = 8);

// Moebius function by trial division.
int moebius(int n);

// One smooth projective curve of genus g >= 2 plus the simplification
// machinery over its motive ring Z[L, a_1..a_g]. Variables are named L and
// a1_1..a1_g (curve number 1). The zeta numerator P_X(t) has coefficients
//   c_0 = 1, c_k = a_k (k <= g), c_k = L^{k-g} a_{2g-k} (g < k < 2g),
//   c_{2g} = L^g.
// Instances memoize lambda values and zeta expansions; not thread-safe
// (give each worker its own context over a shared UniversalCache).
class MotiveContext {
 public:
  // Named motive classes whose lambda powers the closed formulas need.
  enum class Cls { x, x_plus_l2, xl_plus_1 };

  MotiveContext(UniversalCache& u, int genus);

  int genus() const { return g_; }
  VarId line() const { return line_; }
  const Polynomial& px_coeff(int k) const;  // 0 <= k <= 2g
  Polynomial px_at(const Polynomial& arg) const;

  // Full expression simplification over generators {L, X1}.
  Polynomial simplify(const ExprPtr& e);
  Polynomial apply_adams(const Polynomial& p, int j);

  // lambda^k of a named class, canonical; k < 0 gives 0, k = 0 gives 1.
  const Polynomial& lambda_cls(Cls c, int k);

  // Cached zeta expansion, at least `prec` coefficients.
  const LaurentSeries& zeta_cached(int h, int a, int prec);

 private:
  UniversalCache& uni_;
  int g_;
  Simplifier simp_;
  VarId line_;
  std::vector<Polynomial> px_;
  std::map<std::pair<int, int>, Polynomial> lam_;
  std::map<std::pair<int, int>, LaurentSeries> zeta_;
};

// Expansion of Z_X(t^h L^a) = P_X(t^h L^a) / ((1 - t^h L^a)(1 - t^h L^{a+1}))
// on the window [0, prec). WindowTooSmall if the numerator support does not
// fit, i.e. unless 2g*h < prec.
LaurentSeries zeta_series(MotiveContext& ctx, int h, int a, int prec);

// Adams operation on a series: coefficients through psi_j, exponents scaled
// t^e -> t^{je}.
LaurentSeries psi_series(MotiveContext& ctx, const LaurentSeries& s, int j);

// Partition sum of cell products of shifted zeta expansions, on the window
// [lo, prec). WindowTooSmall if a partition's exponent shift falls below lo
// or a zeta factor cannot reach the needed precision.
LaurentSeries adhm_Hn(MotiveContext& ctx, int n, int p, int lo, int prec);

// Coefficient of T^r in the plethystic logarithm of 1 + sum H_n T^n,
// multiplied by (1 - t)(1 - L t); series known at least on [*, prec).
LaurentSeries plog_Hr(MotiveContext& ctx, int r, int p, int prec);

struct AdhmResult {
  Polynomial motive;
  int window_lo = 0;
  int window_hi = 0;  // last exponent checked (inclusive)
  int retries = 0;
};

// Conjectural motive via the partition generating series: checks H_r is a
// polynomial (r >= 2: no negative powers of t; always: the top guard band
// of the window vanishes), sums at t = 1, and applies the sign and L-power
// prefactor. Automatic windows widen and retry up to 3 times; an explicit
// window never retries. NonPolynomialH on check failure.
AdhmResult adhm_motive(MotiveContext& ctx, int r, int p,
                       std::optional<std::pair<int, int>> t_window = {});
AdhmResult adhm_motive(UniversalCache& u, int g, int r, int p,
                       std::optional<std::pair<int, int>> t_window = {});

// Closed-form motive from the fixed-point decomposition; r in {1,2,3}.
Polynomial bb_motive(MotiveContext& ctx, int r, int p);
Polynomial bb_motive(UniversalCache& u, int g, int r, int p);

struct VerifyRow {
  int g = 0;
  int r = 0;
  int p = 0;
  bool equal = false;
  Polynomial bb;
  Polynomial adhm;
  long long ms_bb = 0;
  long long ms_adhm = 0;
  int window_lo = 0;
  int window_hi = 0;
};

VerifyRow verify_pair(UniversalCache& u, int g, int r, int p);

}  // namespace lring
