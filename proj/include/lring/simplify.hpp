#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "lring/expr.hpp"
#include "lring/poly.hpp"
#include "lring/universal.hpp"

namespace lring {

// Eliminates lambda/sigma/psi operations innermost-first, producing a
// canonical integer polynomial. Integrality is asserted after every
// elimination. Two generator models share the engine:
//
//  - free model: expression generator i contributes an unbounded family of
//    variables x<i+1>_<j>, one per lambda power, with no relations.
//  - curve model: expression generator 0 is the line class L and generator
//    i >= 1 is the class of a genus-g_i curve, expanding to
//    1 + a<i>_1 + L. Lambda powers of a<i>_1 close over a<i>_1..a<i>_g_i
//    and L; Adams operations send L to L^k.
//
// Adams action on basis variables goes through mu(i, a, b), the canonical
// form of psi_a applied to the b-th lambda power of base generator i,
// assembled from the universal conversion polynomials evaluated at the
// Adams powers psi_{a*t}. Tables are memoized per instance; instances are
// not thread-safe (share the UniversalCache across threads instead).
class Simplifier {
 public:
  static Simplifier free_model(UniversalCache& u, int ngens);
  static Simplifier curve_model(UniversalCache& u, std::vector<int> genera);

  Polynomial run(const ExprPtr& e);

  // psi_k as a substitution on basis variables (plus L -> L^k in the curve
  // model); series code applies this coefficientwise.
  Polynomial apply_adams(const Polynomial& p, int k);

  // Value of lambda^j on base generator i (free: the variable x<i+1>_<j>;
  // curve: the genus-g table entry, possibly 0 or a product with L).
  Polynomial lambda_power_of_base(int i, int j);

  // psi_k of base generator i in canonical form.
  Polynomial adams_power_of_base(int i, int k);

  // Free model only: rewrite the lambda-basis variables x<i>_<j> into
  // sigma-basis variables s<i>_<j>.
  Polynomial sigma_basis(const Polynomial& p);

  int generator_count() const { return ngens_; }
  VarId line_var() const { return line_; }

 private:
  Simplifier(UniversalCache& u, int ngens, std::vector<int> genera, bool curve);

  Polynomial eval(const ExprPtr& e);
  Polynomial eliminate(ExprKind op, int k, const Polynomial& v);
  Polynomial mu(int i, int a, int b);
  VarId base_var(int i, int j);

  UniversalCache& uni_;
  bool curve_mode_;
  int ngens_;                // expression generator count
  int nbases_;               // base generator count (curve model: curves)
  std::vector<int> genera_;  // curve model only
  VarId line_ = 0;
  std::vector<std::int64_t> depth_;  // free model: active depth bounds
  std::map<std::pair<int, int>, VarId> vars_;
  std::map<VarId, std::pair<int, int>> rev_;
  std::map<std::pair<int, int>, Polynomial> psi_;
  std::map<std::tuple<int, int, int>, Polynomial> mu_;
};

}  // namespace lring
