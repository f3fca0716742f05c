#include "lring/expr.hpp"

#include <algorithm>
#include <cctype>

namespace lring {

namespace {

ExprPtr make(ExprKind k) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  return e;
}

void check_index(int k) {
  if (k < 0) fail(errc::syntax_error, "negative operation index");
  if (k > kMaxOpIndex)
    fail(errc::bound_exceeded,
         "operation index " + std::to_string(k) + " exceeds guard " +
             std::to_string(kMaxOpIndex));
}

}  // namespace

ExprPtr ex_zero() {
  static const ExprPtr z = make(ExprKind::zero);
  return z;
}

ExprPtr ex_one() {
  static const ExprPtr o = make(ExprKind::one);
  return o;
}

ExprPtr ex_int(long long n) {
  if (n < 0) return ex_neg(ex_int(-n));
  if (n == 0) return ex_zero();
  if (n == 1) return ex_one();
  auto e = make(ExprKind::int_lit);
  const_cast<Expr*>(e.get())->lit = n;
  return e;
}

ExprPtr ex_gen(int i) {
  if (i < 0) fail(errc::unknown_generator, "negative generator index");
  auto e = make(ExprKind::gen);
  const_cast<Expr*>(e.get())->gen = i;
  return e;
}

ExprPtr ex_neg(ExprPtr c) {
  auto e = make(ExprKind::neg);
  const_cast<Expr*>(e.get())->a = std::move(c);
  return e;
}

ExprPtr ex_add(ExprPtr a, ExprPtr b) {
  auto e = make(ExprKind::add);
  const_cast<Expr*>(e.get())->a = std::move(a);
  const_cast<Expr*>(e.get())->b = std::move(b);
  return e;
}

ExprPtr ex_mul(ExprPtr a, ExprPtr b) {
  auto e = make(ExprKind::mul);
  const_cast<Expr*>(e.get())->a = std::move(a);
  const_cast<Expr*>(e.get())->b = std::move(b);
  return e;
}

namespace {

ExprPtr op_node(ExprKind kind, int k, ExprPtr c) {
  check_index(k);
  if (k == 0) {
    if (kind == ExprKind::psi)
      fail(errc::syntax_error, "psi index must be >= 1");
    return ex_one();
  }
  auto e = make(kind);
  const_cast<Expr*>(e.get())->k = k;
  const_cast<Expr*>(e.get())->a = std::move(c);
  return e;
}

}  // namespace

ExprPtr ex_lam(int k, ExprPtr e) { return op_node(ExprKind::lam, k, std::move(e)); }
ExprPtr ex_sig(int k, ExprPtr e) { return op_node(ExprKind::sig, k, std::move(e)); }
ExprPtr ex_psi(int k, ExprPtr e) { return op_node(ExprKind::psi, k, std::move(e)); }

ExprPtr ex_pow(ExprPtr e, int n) {
  if (n < 0) fail(errc::syntax_error, "negative power");
  if (n == 0) return ex_one();
  ExprPtr acc = e;
  for (int i = 1; i < n; ++i) acc = ex_mul(acc, e);
  return acc;
}

bool expr_equal(const ExprPtr& x, const ExprPtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case ExprKind::zero:
    case ExprKind::one:
      return true;
    case ExprKind::int_lit:
      return x->lit == y->lit;
    case ExprKind::gen:
      return x->gen == y->gen;
    case ExprKind::neg:
      return expr_equal(x->a, y->a);
    case ExprKind::add:
    case ExprKind::mul:
      return expr_equal(x->a, y->a) && expr_equal(x->b, y->b);
    case ExprKind::lam:
    case ExprKind::sig:
    case ExprKind::psi:
      return x->k == y->k && expr_equal(x->a, y->a);
  }
  return false;
}

int expr_nodes(const ExprPtr& e) {
  if (!e) return 0;
  switch (e->kind) {
    case ExprKind::zero:
    case ExprKind::one:
    case ExprKind::int_lit:
    case ExprKind::gen:
      return 1;
    case ExprKind::neg:
    case ExprKind::lam:
    case ExprKind::sig:
    case ExprKind::psi:
      return 1 + expr_nodes(e->a);
    case ExprKind::add:
    case ExprKind::mul:
      return 1 + expr_nodes(e->a) + expr_nodes(e->b);
  }
  return 0;
}

namespace {

constexpr std::int64_t kDepthSat = (1ll << 60);

std::int64_t sat_mul(std::int64_t d, int k) {
  if (d == 0) return 0;
  if (d > kDepthSat / k) return kDepthSat;
  return d * k;
}

void depth_rec(const ExprPtr& e, std::vector<std::int64_t>& out, int ngens) {
  switch (e->kind) {
    case ExprKind::zero:
    case ExprKind::one:
    case ExprKind::int_lit:
      std::fill(out.begin(), out.end(), 0);
      return;
    case ExprKind::gen:
      std::fill(out.begin(), out.end(), 0);
      if (e->gen >= ngens)
        fail(errc::unknown_generator,
             "generator index " + std::to_string(e->gen) + " out of range");
      out[e->gen] = 1;
      return;
    case ExprKind::neg:
      depth_rec(e->a, out, ngens);
      return;
    case ExprKind::add:
    case ExprKind::mul: {
      std::vector<std::int64_t> rhs(out.size());
      depth_rec(e->a, out, ngens);
      depth_rec(e->b, rhs, ngens);
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::max(out[i], rhs[i]);
      return;
    }
    case ExprKind::lam:
    case ExprKind::sig:
    case ExprKind::psi:
      depth_rec(e->a, out, ngens);
      for (auto& d : out) d = sat_mul(d, e->k);
      return;
  }
}

}  // namespace

std::vector<std::int64_t> depth_vector(const ExprPtr& e, int ngens) {
  std::vector<std::int64_t> out(ngens, 0);
  depth_rec(e, out, ngens);
  return out;
}

namespace {

struct ExprLexer {
  const std::string& s;
  std::size_t i = 0;

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
  void expect(char c) {
    if (!eat(c))
      fail(errc::syntax_error, std::string("expected '") + c + "' at offset " +
                                   std::to_string(i));
  }
  long long integer() {
    skip();
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i)
      fail(errc::syntax_error, "expected integer at offset " + std::to_string(i));
    if (i - b > 18) fail(errc::syntax_error, "integer literal too large");
    return std::stoll(s.substr(b, i - b));
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

class ExprParser {
 public:
  ExprParser(const std::string& text, const std::vector<std::string>& gens)
      : lx_{text}, gens_(gens) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (!lx_.eof())
      fail(errc::syntax_error,
           "unexpected trailing input at offset " + std::to_string(lx_.i));
    return e;
  }

 private:
  ExprPtr expr() {
    ExprPtr acc = term();
    for (;;) {
      if (lx_.eat('+')) {
        acc = ex_add(acc, term());
      } else if (lx_.eat('-')) {
        acc = ex_add(acc, ex_neg(term()));
      } else {
        return acc;
      }
    }
  }

  ExprPtr term() {
    ExprPtr acc = factor();
    while (lx_.eat('*')) acc = ex_mul(acc, factor());
    return acc;
  }

  ExprPtr factor() {
    bool neg = lx_.eat('-');
    ExprPtr a = atom();
    // unary minus binds tighter than '^': -x^2 squares the negation
    if (neg) a = ex_neg(a);
    if (lx_.eat('^')) {
      long long n = lx_.integer();
      if (n > kMaxOpIndex) fail(errc::bound_exceeded, "power exceeds guard");
      a = ex_pow(a, static_cast<int>(n));
    }
    return a;
  }

  ExprPtr atom() {
    char c = lx_.peek();
    if (c == '(') {
      lx_.eat('(');
      ExprPtr e = expr();
      lx_.expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ex_int(lx_.integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = lx_.ident();
      if (name == "lambda" || name == "sigma" || name == "psi") {
        lx_.expect('^');
        long long k = lx_.integer();
        if (k > kMaxOpIndex)
          fail(errc::bound_exceeded, "operation index exceeds guard");
        lx_.expect('(');
        ExprPtr body = expr();
        lx_.expect(')');
        if (name == "lambda") return ex_lam(static_cast<int>(k), body);
        if (name == "sigma") return ex_sig(static_cast<int>(k), body);
        return ex_psi(static_cast<int>(k), body);
      }
      auto it = std::find(gens_.begin(), gens_.end(), name);
      if (it == gens_.end())
        fail(errc::unknown_generator, "unknown generator '" + name + "'");
      return ex_gen(static_cast<int>(it - gens_.begin()));
    }
    fail(errc::syntax_error,
         "unexpected character at offset " + std::to_string(lx_.i));
  }

  ExprLexer lx_;
  const std::vector<std::string>& gens_;
};

// Rendering obeys the grammar so that parse(render(e)) == e node for node:
// right-nested Add/Mul and composite Neg children get parentheses.
class ExprRenderer {
 public:
  explicit ExprRenderer(const std::vector<std::string>& gens) : gens_(gens) {}

  std::string top(const ExprPtr& e) { return expr(e); }

 private:
  static bool is_atom(const ExprPtr& e) {
    switch (e->kind) {
      case ExprKind::zero:
      case ExprKind::one:
      case ExprKind::int_lit:
      case ExprKind::gen:
      case ExprKind::lam:
      case ExprKind::sig:
      case ExprKind::psi:
        return true;
      default:
        return false;
    }
  }

  std::string expr(const ExprPtr& e) {
    if (e->kind == ExprKind::add) {
      std::string lhs = expr(e->a);
      const ExprPtr& r = e->b;
      if (r->kind == ExprKind::neg) return lhs + " - " + term(r->a);
      return lhs + " + " + term(r);
    }
    return term(e);
  }

  // A term may carry one leading '-'; anything else additive needs parens.
  std::string term(const ExprPtr& e) {
    if (e->kind == ExprKind::neg) return "-" + atom(e->a);
    if (e->kind == ExprKind::mul) return mul_lhs(e->a) + "*" + factor(e->b);
    return factor(e);
  }

  std::string mul_lhs(const ExprPtr& e) {
    if (e->kind == ExprKind::mul) return mul_lhs(e->a) + "*" + factor(e->b);
    return factor(e);
  }

  std::string factor(const ExprPtr& e) {
    if (is_atom(e)) return atom(e);
    return "(" + expr(e) + ")";
  }

  std::string atom(const ExprPtr& e) {
    switch (e->kind) {
      case ExprKind::zero:
        return "0";
      case ExprKind::one:
        return "1";
      case ExprKind::int_lit:
        return std::to_string(e->lit);
      case ExprKind::gen:
        return gens_.at(e->gen);
      case ExprKind::lam:
        return "lambda^" + std::to_string(e->k) + "(" + expr(e->a) + ")";
      case ExprKind::sig:
        return "sigma^" + std::to_string(e->k) + "(" + expr(e->a) + ")";
      case ExprKind::psi:
        return "psi^" + std::to_string(e->k) + "(" + expr(e->a) + ")";
      default:
        return "(" + expr(e) + ")";
    }
  }

  const std::vector<std::string>& gens_;
};

}  // namespace

ExprPtr parse_expr(const std::string& text, const std::vector<std::string>& gens) {
  return ExprParser(text, gens).run();
}

std::string render_expr(const ExprPtr& e, const std::vector<std::string>& gens) {
  return ExprRenderer(gens).top(e);
}

}  // namespace lring
