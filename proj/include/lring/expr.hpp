#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lring/errors.hpp"

namespace lring {

// Expression AST for the operation language. Sugar ('^' powers, literal 0/1)
// is resolved at construction: powers become repeated Mul, 0 and 1 become
// Zero/One, and lambda^0 / sigma^0 normalize to One. IntLit nodes keep
// lit >= 2; negative literals are Neg(IntLit).
enum class ExprKind : std::uint8_t {
  zero,
  one,
  int_lit,
  gen,
  neg,
  add,
  mul,
  lam,
  sig,
  psi,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  long long lit = 0;  // int_lit
  int gen = -1;       // gen: index into the generator list
  int k = 0;          // lam/sig/psi operation index
  ExprPtr a, b;       // children (a for unary, a+b for binary)
};

constexpr int kMaxOpIndex = 10000;

ExprPtr ex_zero();
ExprPtr ex_one();
ExprPtr ex_int(long long n);
ExprPtr ex_gen(int i);
ExprPtr ex_neg(ExprPtr e);
ExprPtr ex_add(ExprPtr a, ExprPtr b);
ExprPtr ex_mul(ExprPtr a, ExprPtr b);
ExprPtr ex_lam(int k, ExprPtr e);
ExprPtr ex_sig(int k, ExprPtr e);
ExprPtr ex_psi(int k, ExprPtr e);
ExprPtr ex_pow(ExprPtr e, int n);  // repeated Mul, n >= 0

bool expr_equal(const ExprPtr& x, const ExprPtr& y);
int expr_nodes(const ExprPtr& e);

// Lambda-weight of the expression in each generator: constants weigh zero,
// a generator weighs one in its own slot, Add/Mul/Neg take the pointwise
// max, and an operation node multiplies its child's weights by its index.
std::vector<std::int64_t> depth_vector(const ExprPtr& e, int ngens);

ExprPtr parse_expr(const std::string& text,
                   const std::vector<std::string>& gens);
std::string render_expr(const ExprPtr& e,
                        const std::vector<std::string>& gens);

}  // namespace lring
