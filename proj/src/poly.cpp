#include "lring/poly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace lring {

namespace {

// names is a deque so that var_name's returned references survive later
// interning (deque growth never moves existing elements).
struct Interner {
  std::mutex mu;
  std::unordered_map<std::string, VarId> ids;
  std::deque<std::string> names;
};

Interner& interner() {
  static Interner in;
  return in;
}

inline std::uint32_t id_rank(VarId v) { return v; }

// Strict total order used for internal storage (graded-lex by var id,
// descending). Canonical rendering re-sorts by name rank instead.
inline bool term_before(const Monomial& a, const Monomial& b) {
  return a.cmp(b, id_rank) < 0;
}

}  // namespace

VarId var_id(const std::string& name) {
  auto& in = interner();
  std::lock_guard<std::mutex> lock(in.mu);
  auto it = in.ids.find(name);
  if (it != in.ids.end()) return it->second;
  VarId v = static_cast<VarId>(in.names.size());
  in.names.push_back(name);
  in.ids.emplace(name, v);
  return v;
}

const std::string& var_name(VarId v) {
  auto& in = interner();
  std::lock_guard<std::mutex> lock(in.mu);
  return in.names.at(v);
}

Monomial Monomial::var(VarId v, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.f_.push_back({v, e});
  return m;
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (const auto& f : f_) d += f.exp;
  return d;
}

std::uint32_t Monomial::exp_of(VarId v) const {
  for (const auto& f : f_)
    if (f.var == v) return f.exp;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    if (f_[i].var == o.f_[j].var) {
      r.f_.push_back({f_[i].var, f_[i].exp + o.f_[j].exp});
      ++i, ++j;
    } else if (f_[i].var < o.f_[j].var) {
      r.f_.push_back(f_[i++]);
    } else {
      r.f_.push_back(o.f_[j++]);
    }
  }
  for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
  for (; j < o.f_.size(); ++j) r.f_.push_back(o.f_[j]);
  return r;
}

Monomial Monomial::pow(std::uint32_t k) const {
  Monomial r;
  if (k == 0) return r;
  r.f_ = f_;
  for (auto& f : r.f_) f.exp *= k;
  return r;
}

Monomial Monomial::without(VarId v) const {
  Monomial r;
  r.f_.reserve(f_.size());
  for (const auto& f : f_)
    if (f.var != v) r.f_.push_back(f);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& f : f_) {
    h = (h ^ f.var) * 0x100000001b3ull;
    h = (h ^ f.exp) * 0x100000001b3ull;
  }
  return h;
}

Polynomial::Polynomial(const Rat& c) {
  if (c != 0) t_.push_back({Monomial(), c});
}

Polynomial Polynomial::variable(VarId v, std::uint32_t e) {
  Polynomial p;
  p.t_.push_back({Monomial::var(v, e), Rat(1)});
  return p;
}

Polynomial Polynomial::term(const Rat& c, const Monomial& m) {
  Polynomial p;
  if (c != 0) p.t_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> ts) {
  Polynomial p;
  p.t_ = std::move(ts);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) {
    return term_before(a.mono, b.mono);
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < t_.size();) {
    Monomial m = t_[i].mono;
    Rat c = t_[i].coeff;
    std::size_t j = i + 1;
    while (j < t_.size() && t_[j].mono == m) c += t_[j++].coeff;
    if (c != 0) t_[out++] = {std::move(m), std::move(c)};
    i = j;
  }
  t_.resize(out);
}

bool Polynomial::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one());
}

bool Polynomial::is_variable(VarId v) const {
  return t_.size() == 1 && t_[0].coeff == 1 && t_[0].mono.factors().size() == 1 &&
         t_[0].mono.factors()[0].var == v && t_[0].mono.factors()[0].exp == 1;
}

Rat Polynomial::constant_value() const {
  for (const auto& t : t_)
    if (t.mono.is_one()) return t.coeff;
  return Rat(0);
}

std::int64_t Polynomial::total_degree() const {
  if (t_.empty()) return -1;
  return t_.front().mono.degree();  // leading term has maximal degree
}

std::int64_t Polynomial::degree_in(VarId v) const {
  std::int64_t d = -1;
  for (const auto& t : t_) d = std::max<std::int64_t>(d, t.mono.exp_of(v));
  return t_.empty() ? -1 : d;
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> vs;
  for (const auto& t : t_)
    for (const auto& f : t.mono.factors()) vs.push_back(f.var);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::sort(vs.begin(), vs.end(),
            [](VarId a, VarId b) { return var_name(a) < var_name(b); });
  return vs;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.t_) t.coeff = -t.coeff;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  std::size_t i = 0, j = 0;
  while (i < a.t_.size() && j < b.t_.size()) {
    int c = a.t_[i].mono.cmp(b.t_[j].mono, id_rank);
    if (c < 0) {
      r.t_.push_back(a.t_[i++]);
    } else if (c > 0) {
      r.t_.push_back(b.t_[j++]);
    } else {
      Rat s = a.t_[i].coeff + b.t_[j].coeff;
      if (s != 0) r.t_.push_back({a.t_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
  for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  *this = *this + o;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  *this = *this - o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (b.t_.size() == 1) return a.shifted(b.t_[0].mono, b.t_[0].coeff);
  if (a.t_.size() == 1) return b.shifted(a.t_[0].mono, a.t_[0].coeff);
  std::unordered_map<Monomial, Rat, MonoHash> acc;
  acc.reserve(a.t_.size() * 2);
  for (const auto& ta : a.t_)
    for (const auto& tb : b.t_) {
      Rat prod = ta.coeff * tb.coeff;
      auto [it, fresh] = acc.try_emplace(ta.mono.times(tb.mono), prod);
      if (!fresh) {
        it->second += prod;
        if (it->second == 0) acc.erase(it);
      }
    }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc) ts.push_back({m, std::move(c)});
  Polynomial r;
  r.t_ = std::move(ts);
  std::sort(r.t_.begin(), r.t_.end(), [](const Term& x, const Term& y) {
    return term_before(x.mono, y.mono);
  });
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  if (c == 0) return Polynomial();
  Polynomial r = *this;
  for (auto& t : r.t_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::shifted(const Monomial& m, const Rat& c) const {
  if (c == 0) return Polynomial();
  Polynomial r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({t.mono.times(m), t.coeff * c});
  // translation by a fixed monomial preserves graded-lex order
  return r;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial r(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& sub) const {
  // Lazily extended power tables, one per substituted variable.
  std::unordered_map<VarId, std::vector<Polynomial>> pows;
  auto power = [&](VarId v, std::uint32_t e) -> const Polynomial& {
    auto& tab = pows[v];
    if (tab.empty()) tab.push_back(sub.at(v));  // tab[0] = base^1
    while (tab.size() < e) tab.push_back(tab.back() * tab.front());
    return tab[e - 1];
  };
  std::vector<Term> out;
  for (const auto& t : t_) {
    Monomial rest;
    Polynomial piece(t.coeff);
    for (const auto& f : t.mono.factors()) {
      if (sub.count(f.var)) {
        piece = piece * power(f.var, f.exp);
      } else {
        rest.f_.push_back(f);
      }
    }
    if (!rest.is_one()) piece = piece.shifted(rest);
    for (auto& pt : piece.t_) out.push_back(std::move(pt));
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::exponent_scale(std::uint32_t k) const {
  Polynomial r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({t.mono.pow(k), t.coeff});
  r.normalize();  // order is preserved, but k==0 collapses monomials
  return r;
}

Rat Polynomial::eval(const std::map<VarId, Rat>& point) const {
  Rat acc(0);
  for (const auto& t : t_) {
    Rat v = t.coeff;
    for (const auto& f : t.mono.factors()) {
      auto it = point.find(f.var);
      if (it == point.end())
        fail(errc::syntax_error, "eval: unmapped variable " + var_name(f.var));
      Rat p(1);
      Rat base = it->second;
      for (std::uint32_t e = f.exp; e; e >>= 1) {
        if (e & 1) p *= base;
        if (e > 1) base *= base;
      }
      v *= p;
    }
    acc += v;
  }
  return acc;
}

namespace {

// Splits p into coefficients of powers of `main`.
std::map<std::int64_t, Polynomial> by_main_power(const Polynomial& p, VarId main) {
  std::map<std::int64_t, Polynomial> co;
  for (const auto& t : p.terms()) {
    std::uint32_t e = t.mono.exp_of(main);
    co[e] += Polynomial::term(t.coeff, t.mono.without(main));
  }
  for (auto it = co.begin(); it != co.end();)
    it = it->second.is_zero() ? co.erase(it) : std::next(it);
  return co;
}

}  // namespace

Polynomial Polynomial::exact_div_main(const Polynomial& p, const Polynomial& d,
                                      VarId main) {
  if (d.is_zero()) fail(errc::non_exact_division, "division by zero");
  if (p.is_zero()) return Polynomial();
  auto dc = by_main_power(d, main);
  std::int64_t dm = dc.rbegin()->first;
  const Polynomial& dlead = dc.rbegin()->second;
  if (!dlead.is_constant())
    fail(errc::non_exact_division,
         "divisor leading coefficient in " + var_name(main) + " is not constant");
  Rat inv = 1 / dlead.constant_value();

  Polynomial rem = p;
  Polynomial quot;
  while (!rem.is_zero()) {
    auto rc = by_main_power(rem, main);
    std::int64_t rm = rc.rbegin()->first;
    if (rm < dm)
      fail(errc::non_exact_division, "nonzero remainder in exact division");
    Polynomial q = rc.rbegin()->second.scaled(inv).shifted(
        Monomial::var(main, static_cast<std::uint32_t>(rm - dm)));
    quot += q;
    rem -= q * d;
  }
  return quot;
}

Polynomial Polynomial::exact_div_univar(const Polynomial& p, const Polynomial& d,
                                        VarId main) {
  for (const auto& t : d.terms())
    for (const auto& f : t.mono.factors())
      if (f.var != main)
        fail(errc::non_exact_division,
             "divisor is not univariate in " + var_name(main));
  return exact_div_main(p, d, main);
}

bool Polynomial::is_integral() const {
  for (const auto& t : t_)
    if (t.coeff.get_den() != 1) return false;
  return true;
}

void Polynomial::assert_integral(const char* what) const {
  if (!is_integral())
    fail(errc::non_integral_result, std::string(what) + ": " + str());
}

std::string Polynomial::str() const {
  if (t_.empty()) return "0";
  // Rank variables by name for canonical ordering.
  std::vector<VarId> vs;
  for (const auto& t : t_)
    for (const auto& f : t.mono.factors()) vs.push_back(f.var);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::sort(vs.begin(), vs.end(),
            [](VarId a, VarId b) { return var_name(a) < var_name(b); });
  std::unordered_map<VarId, std::uint32_t> rank;
  for (std::uint32_t i = 0; i < vs.size(); ++i) rank[vs[i]] = i;

  std::vector<const Term*> ts;
  ts.reserve(t_.size());
  for (const auto& t : t_) ts.push_back(&t);
  auto by_name = [&](VarId v) { return rank.at(v); };
  std::sort(ts.begin(), ts.end(), [&](const Term* a, const Term* b) {
    return a->mono.cmp(b->mono, by_name) < 0;
  });

  std::string out;
  bool first = true;
  for (const Term* t : ts) {
    Rat c = t->coeff;
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    Rat a = abs(c);
    std::vector<const VarPow*> fs;
    for (const auto& f : t->mono.factors()) fs.push_back(&f);
    std::sort(fs.begin(), fs.end(), [&](const VarPow* x, const VarPow* y) {
      return rank.at(x->var) < rank.at(y->var);
    });
    if (fs.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) {
        out += a.get_str();
        out += "*";
      }
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += "*";
        out += var_name(fs[i]->var);
        if (fs[i]->exp > 1) out += "^" + std::to_string(fs[i]->exp);
      }
    }
  }
  return out;
}

namespace {

struct PolyLexer {
  const std::string& s;
  std::size_t i = 0;
  explicit PolyLexer(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string integer() {
    skip();
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) fail(errc::syntax_error, "expected integer at offset " + std::to_string(i));
    return s.substr(b, i - b);
  }
  std::string ident() {
    skip();
    std::size_t b = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    return s.substr(b, i - b);
  }
};

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : lx_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    if (!lx_.eof())
      fail(errc::syntax_error,
           "unexpected trailing input at offset " + std::to_string(lx_.i));
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (lx_.eat('+')) {
        acc += term();
      } else if (lx_.eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (lx_.eat('*')) {
        acc = acc * factor();
      } else if (lx_.eat('/')) {
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero())
          fail(errc::syntax_error, "'/' needs a nonzero constant divisor");
        acc = acc.scaled(1 / d.constant_value());
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    bool neg = lx_.eat('-');
    Polynomial a = atom();
    if (lx_.eat('^')) {
      std::string e = lx_.integer();
      if (e.size() > 6) fail(errc::syntax_error, "exponent too large: " + e);
      a = a.pow(static_cast<std::uint32_t>(std::stoul(e)));
    }
    return neg ? -a : a;
  }

  Polynomial atom() {
    char c = lx_.peek();
    if (c == '(') {
      lx_.eat('(');
      Polynomial p = expr();
      if (!lx_.eat(')')) fail(errc::syntax_error, "expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial(Rat(Int(lx_.integer())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = lx_.ident();
      return Polynomial::variable(var_id(name));
    }
    fail(errc::syntax_error,
         "unexpected character at offset " + std::to_string(lx_.i));
  }

  PolyLexer lx_;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
  return PolyParser(text).run();
}

}  // namespace lring
