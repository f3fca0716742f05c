#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "lring/poly.hpp"

namespace lring {

// Memoized generator of the universal conversion polynomials. Linear
// families live in variables x1..xn (plus y1..yn for the product family).
// Construction is deterministic, so the memo — and the optional on-disk
// store — is a pure cache. Thread-safe.
class UniversalCache {
 public:
  UniversalCache() = default;
  explicit UniversalCache(std::string dir) : dir_(std::move(dir)) {}

  // sigma^n written in lambda powers (equally: lambda^n in sigma powers).
  Polynomial opposite(int n);
  // Adams psi_n written in sigma powers x_k = sigma^k.
  Polynomial newton(int n);
  // sigma^n written in Adams powers x_k = psi_k (rational coefficients).
  Polynomial sigma_from_adams(int n);
  // lambda^n written in Adams powers (rational coefficients).
  Polynomial lambda_from_adams(int n);
  // Adams psi_n written in lambda powers x_k = lambda^k.
  Polynomial adams_from_lambda(int n);
  // Product rule: sigma^n(xy) over x_k = sigma^k(x), y_k = sigma^k(y).
  Polynomial groth_product(int n);
  // Composition rule: sigma^n(sigma^m(x)) over x_k = sigma^k(x), k <= nm.
  Polynomial groth_composite(int n, int m);

  // Substitutes args[k-1] for x_k (and for groth_product yargs[k-1] for y_k).
  static Polynomial compose(const Polynomial& u,
                            const std::vector<Polynomial>& args);
  static Polynomial compose2(const Polynomial& u,
                             const std::vector<Polynomial>& xargs,
                             const std::vector<Polynomial>& yargs);

 private:
  Polynomial cached(const std::string& key, Polynomial (UniversalCache::*build)(int),
                    int n);
  Polynomial build_opposite(int n);
  Polynomial build_newton(int n);
  Polynomial build_sigma_from_adams(int n);
  Polynomial build_lambda_from_adams(int n);
  Polynomial build_adams_from_lambda(int n);

  std::recursive_mutex mu_;
  std::map<std::string, Polynomial> memo_;
  std::string dir_;
};

}  // namespace lring
