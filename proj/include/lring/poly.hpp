#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lring/errors.hpp"

namespace lring {

using Rat = mpq_class;
using Int = mpz_class;

using VarId = std::uint32_t;

// Process-wide name interner. Ids are stable for the process lifetime.
// Canonical output orders variables by *name*, so id assignment order is an
// internal detail that never reaches rendered or serialized form.
VarId var_id(const std::string& name);
const std::string& var_name(VarId v);

struct VarPow {
  VarId var;
  std::uint32_t exp;
  bool operator==(const VarPow&) const = default;
};

// Product of variable powers; factors sorted by var id, exponents positive.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(VarId v, std::uint32_t e = 1);

  bool is_one() const { return f_.empty(); }
  std::int64_t degree() const;
  std::uint32_t exp_of(VarId v) const;
  const std::vector<VarPow>& factors() const { return f_; }

  Monomial times(const Monomial& o) const;
  Monomial pow(std::uint32_t k) const;      // exponent scale
  Monomial without(VarId v) const;          // drop one variable

  bool operator==(const Monomial&) const = default;
  std::size_t hash() const;

  // Graded-lex compare with variable significance given by `rank`
  // (smaller rank = more significant). Returns <0, 0, >0 for this
  // before/equal/after `o` in *descending* canonical order.
  template <class Rank>
  int cmp(const Monomial& o, Rank rank) const {
    std::int64_t da = degree(), db = o.degree();
    if (da != db) return da > db ? -1 : 1;
    std::size_t i = 0, j = 0;
    while (i < f_.size() && j < o.f_.size()) {
      auto ra = rank(f_[i].var), rb = rank(o.f_[j].var);
      if (ra != rb) return ra < rb ? -1 : 1;
      if (f_[i].exp != o.f_[j].exp) return f_[i].exp > o.f_[j].exp ? -1 : 1;
      ++i, ++j;
    }
    if (i < f_.size()) return -1;
    if (j < o.f_.size()) return 1;
    return 0;
  }

 private:
  friend class Polynomial;
  std::vector<VarPow> f_;
};

struct Term {
  Monomial mono;
  Rat coeff;
  bool operator==(const Term& o) const {
    return mono == o.mono && coeff == o.coeff;
  }
};

// Sparse multivariate polynomial over arbitrary-precision rationals.
// Terms are kept normalized: sorted (graded-lex descending by var id),
// coefficients nonzero. Equality is representation equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int v) : Polynomial(Rat(v)) {}  // NOLINT: implicit by design
  Polynomial(const Rat& c);                  // NOLINT
  static Polynomial variable(VarId v, std::uint32_t e = 1);
  static Polynomial term(const Rat& c, const Monomial& m);
  static Polynomial from_terms(std::vector<Term> ts);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  bool is_variable(VarId v) const;  // exactly 1*v
  // Constant term value (0 if absent); the whole value when constant.
  Rat constant_value() const;
  std::size_t term_count() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  std::int64_t total_degree() const;  // -1 for zero polynomial
  std::int64_t degree_in(VarId v) const;
  std::vector<VarId> variables() const;  // sorted by name

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial scaled(const Rat& c) const;
  Polynomial shifted(const Monomial& m, const Rat& c = 1) const;
  Polynomial pow(std::uint32_t k) const;
  bool operator==(const Polynomial&) const = default;

  // Simultaneous substitution; unmapped variables stay.
  Polynomial substitute(const std::map<VarId, Polynomial>& sub) const;
  // Scale every exponent by k (Frobenius on monomials): m -> m^k.
  Polynomial exponent_scale(std::uint32_t k) const;
  // Full evaluation; every variable present must be mapped.
  Rat eval(const std::map<VarId, Rat>& point) const;

  // Exact division viewing both sides as univariate in `main` with
  // polynomial coefficients; the divisor's leading coefficient in `main`
  // must be a nonzero rational constant. NonExactDivision on any remainder.
  static Polynomial exact_div_main(const Polynomial& p, const Polynomial& d,
                                   VarId main);
  // Same, but requires the divisor to mention no variable other than `main`.
  static Polynomial exact_div_univar(const Polynomial& p, const Polynomial& d,
                                     VarId main);

  bool is_integral() const;
  void assert_integral(const char* what) const;

  // Canonical text: graded-lex descending terms, variables ordered by name.
  std::string str() const;
  // Parses +,-,*,/,^,(),integers,rationals,identifiers. '/' requires a
  // nonzero constant divisor. Accepts everything str() emits.
  static Polynomial parse(const std::string& text);

 private:
  void normalize();
  std::vector<Term> t_;
};

struct MonoHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace lring
