#pragma once

#include <string>
#include <vector>

#include "lring/expr.hpp"
#include "lring/poly.hpp"

namespace lring {

// Interns prefix1..prefixm and returns the ids in order.
std::vector<VarId> alphabet(const std::string& prefix, int m);

Polynomial elem_sym(int k, const std::vector<VarId>& u);
Polynomial complete_sym(int k, const std::vector<VarId>& u);
Polynomial power_sum(int k, const std::vector<VarId>& u);

// Rewrites a polynomial symmetric in the `u` alphabet as a polynomial in
// `targets`, where targets[k-1] stands for e_k(u). Variables outside the
// alphabet ride along in coefficients. Repeated leading-term elimination in
// lex order; NotSymmetric if p isn't invariant under a transposition and the
// full cycle, NonTerminating if elimination outruns (#monomials * m) steps.
Polynomial sym_to_elementary(const Polynomial& p, const std::vector<VarId>& u,
                             const std::vector<VarId>& targets);

// Splitting-principle evaluation, independent of the universal-polynomial
// tables: generator i becomes u(i+1)_1 + ... + u(i+1)_sizes[i], a sum of
// line elements; Adams operations scale line exponents, and sigma/lambda
// powers come from the power-sum exponential. sizes[i] must cover the
// expression's lambda-weight in generator i (InsufficientAlphabet).
Polynomial splitting_eval(const ExprPtr& e, const std::vector<int>& sizes);

}  // namespace lring
