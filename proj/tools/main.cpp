// Command-line front end: universal-polynomial dumps and oracle checks,
// expression simplification, the two motive constructions, and the
// cross-verification sweep. stdout carries the structured result and is
// byte-deterministic; diagnostics go to stderr. Exit codes: 0 success,
// 1 usage error, 2 computation error (the error name is printed first).

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lring/errors.hpp"
#include "lring/expr.hpp"
#include "lring/motives.hpp"
#include "lring/poly.hpp"
#include "lring/poly_json.hpp"
#include "lring/simplify.hpp"
#include "lring/symfunc.hpp"
#include "lring/universal.hpp"

namespace {

using namespace lring;

void print_poly(const Polynomial& p, bool json) {
  if (json)
    std::cout << poly_to_json(p) << "\n";
  else
    std::cout << p.str() << "\n";
}

struct UniversalArgs {
  std::string family;
  int n = 0;
  int m = 0;
  bool json = false;
  bool check = false;
  bool unbounded = false;
};

void require_bound(bool ok, const std::string& what, bool unbounded) {
  if (!ok && !unbounded)
    fail(errc::bound_exceeded, what + " (pass --unbounded to override)");
}

// coeff_{t^n} prod_{i,j} (1 + t u_i v_j): elementary symmetric polynomial
// of the pairwise products, expanded directly over the split alphabets.
Polynomial elem_of_pair_products(int n, const std::vector<VarId>& us,
                                 const std::vector<VarId>& vs) {
  std::vector<Polynomial> c(n + 1);
  c[0] = Polynomial(1);
  for (VarId u : us)
    for (VarId v : vs) {
      Polynomial uv =
          Polynomial::term(1, Monomial::var(u).times(Monomial::var(v)));
      for (int k = n; k >= 1; --k) c[k] += c[k - 1] * uv;
    }
  return c[n];
}

// coeff_{t^n} prod_{j1<...<jm} (1 + t u_{j1}...u_{jm}) over |u| = nm.
Polynomial elem_of_subset_products(int n, int m, const std::vector<VarId>& us) {
  int nm = static_cast<int>(us.size());
  std::vector<Polynomial> c(n + 1);
  c[0] = Polynomial(1);
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  for (;;) {
    Monomial prod;
    for (int i : idx) prod = prod.times(Monomial::var(us[i]));
    Polynomial q = Polynomial::term(1, prod);
    for (int k = n; k >= 1; --k) c[k] += c[k - 1] * q;
    int i = m - 1;
    while (i >= 0 && idx[i] == nm - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return c[n];
}

int run_universal(UniversalCache& uni, const UniversalArgs& a) {
  bool linear = a.family == "pop" || a.family == "newton" || a.family == "l" ||
                a.family == "lop" || a.family == "nop";
  if (a.family == "grothcomp" && a.m < 1)
    fail(errc::syntax_error, "grothcomp requires --m");
  if (linear)
    require_bound(a.n <= 30, "linear families are bounded at n = 30",
                  a.unbounded);
  if (a.family == "grothmul")
    require_bound(a.n <= 6, "grothmul is bounded at n = 6", a.unbounded);
  if (a.family == "grothcomp")
    require_bound(a.n * a.m <= 12, "grothcomp is bounded at n*m = 12",
                  a.unbounded);

  Polynomial p;
  if (a.family == "pop") p = uni.opposite(a.n);
  else if (a.family == "newton") p = uni.newton(a.n);
  else if (a.family == "l") p = uni.sigma_from_adams(a.n);
  else if (a.family == "lop") p = uni.lambda_from_adams(a.n);
  else if (a.family == "nop") p = uni.adams_from_lambda(a.n);
  else if (a.family == "grothmul") p = uni.groth_product(a.n);
  else if (a.family == "grothcomp") p = uni.groth_composite(a.n, a.m);
  else fail(errc::syntax_error, "unknown family '" + a.family + "'");

  if (!a.check) {
    print_poly(p, a.json);
    return 0;
  }

  // Splitting-principle comparison over a minimal line alphabet.
  if (linear)
    require_bound(a.n <= 8, "linear-family checks are bounded at n = 8",
                  a.unbounded);
  if (a.family == "grothmul")
    require_bound(a.n <= 4, "grothmul checks are bounded at n = 4",
                  a.unbounded);
  if (a.family == "grothcomp")
    require_bound(a.n * a.m <= 8, "grothcomp checks are bounded at n*m = 8",
                  a.unbounded);
  Polynomial got, want;
  if (linear) {
    auto u = alphabet("u", a.n);
    auto basis = [&](char which, int k) {
      if (which == 'e') return elem_sym(k, u);
      if (which == 'h') return complete_sym(k, u);
      return power_sum(k, u);
    };
    // source basis substituted for x_k, expected target value
    char src = 0, tgt = 0;
    if (a.family == "pop") src = 'h', tgt = 'e';
    if (a.family == "newton") src = 'e', tgt = 'p';
    if (a.family == "l") src = 'p', tgt = 'e';
    if (a.family == "lop") src = 'p', tgt = 'h';
    if (a.family == "nop") src = 'h', tgt = 'p';
    std::vector<Polynomial> args;
    for (int k = 1; k <= a.n; ++k) args.push_back(basis(src, k));
    got = UniversalCache::compose(p, args);
    want = basis(tgt, a.n);
  } else if (a.family == "grothmul") {
    auto us = alphabet("u", a.n);
    auto vs = alphabet("v", a.n);
    std::vector<Polynomial> xs, ys;
    for (int k = 1; k <= a.n; ++k) {
      xs.push_back(elem_sym(k, us));
      ys.push_back(elem_sym(k, vs));
    }
    got = UniversalCache::compose2(p, xs, ys);
    want = elem_of_pair_products(a.n, us, vs);
  } else {
    auto us = alphabet("u", a.n * a.m);
    std::vector<Polynomial> xs;
    for (int k = 1; k <= a.n * a.m; ++k) xs.push_back(elem_sym(k, us));
    got = UniversalCache::compose(p, xs);
    want = elem_of_subset_products(a.n, a.m, us);
  }
  if (got == want) {
    std::cout << "ok\n";
    return 0;
  }
  std::cout << "mismatch\n";
  std::cerr << "oracle disagrees for family " << a.family << " n=" << a.n
            << (a.family == "grothcomp" ? " m=" + std::to_string(a.m) : "")
            << "\n";
  return 2;
}

struct SimplifyArgs {
  std::string vars;
  std::string expr;
  bool sigma = false;
  bool json = false;
};

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ',')) {
    std::size_t b = cur.find_first_not_of(" \t");
    std::size_t e = cur.find_last_not_of(" \t");
    if (b == std::string::npos)
      fail(errc::syntax_error, "empty generator name in --vars");
    out.push_back(cur.substr(b, e - b + 1));
  }
  if (out.empty()) fail(errc::syntax_error, "--vars names no generators");
  return out;
}

int run_simplify(UniversalCache& uni, const SimplifyArgs& a) {
  std::string text = a.expr;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) fail(errc::syntax_error, "cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  auto gens = split_names(a.vars);
  ExprPtr e = parse_expr(text, gens);
  Simplifier simp =
      Simplifier::free_model(uni, static_cast<int>(gens.size()));
  Polynomial p = simp.run(e);
  if (a.sigma) p = simp.sigma_basis(p);
  print_poly(p, a.json);
  return 0;
}

struct MotiveArgs {
  int g = 0;
  int r = 0;
  int p = 0;
  std::string window;
  bool json = false;
};

std::optional<std::pair<int, int>> parse_window(const std::string& w) {
  if (w.empty()) return {};
  auto colon = w.find(':');
  if (colon == std::string::npos)
    fail(errc::syntax_error, "--t-window wants MIN:MAX");
  try {
    int lo = std::stoi(w.substr(0, colon));
    int hi = std::stoi(w.substr(colon + 1));
    if (lo > hi) fail(errc::syntax_error, "--t-window MIN exceeds MAX");
    return std::make_pair(lo, hi);
  } catch (const std::invalid_argument&) {
    fail(errc::syntax_error, "--t-window wants integers");
  } catch (const std::out_of_range&) {
    fail(errc::syntax_error, "--t-window out of range");
  }
}

int run_bb(UniversalCache& uni, const MotiveArgs& a) {
  print_poly(bb_motive(uni, a.g, a.r, a.p), a.json);
  return 0;
}

int run_adhm(UniversalCache& uni, const MotiveArgs& a) {
  AdhmResult res = adhm_motive(uni, a.g, a.r, a.p, parse_window(a.window));
  std::cerr << "t-window [" << res.window_lo << ", " << res.window_hi
            << "], retries " << res.retries << "\n";
  print_poly(res.motive, a.json);
  return 0;
}

struct VerifyArgs {
  std::string g = "2..4";
  std::string r = "1..3";
  std::string p = "1..4";
  std::string report;
  int jobs = 1;
  bool json = false;
};

std::pair<int, int> parse_range(const std::string& s, const char* what) {
  try {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    int lo = std::stoi(s.substr(0, dots));
    int hi = std::stoi(s.substr(dots + 2));
    if (lo > hi)
      fail(errc::syntax_error, std::string(what) + " range is empty");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    fail(errc::syntax_error, std::string(what) + " wants N or A..B");
  } catch (const std::out_of_range&) {
    fail(errc::syntax_error, std::string(what) + " out of range");
  }
}

nlohmann::json row_json(const VerifyRow& row, bool with_ms) {
  nlohmann::json o;
  o["g"] = row.g;
  o["r"] = row.r;
  o["p"] = row.p;
  o["equal"] = row.equal;
  if (with_ms) {
    o["ms_bb"] = row.ms_bb;
    o["ms_adhm"] = row.ms_adhm;
  }
  o["window"] = {row.window_lo, row.window_hi};
  return o;
}

int run_verify(UniversalCache& uni, const VerifyArgs& a) {
  auto [g0, g1] = parse_range(a.g, "--g");
  auto [r0, r1] = parse_range(a.r, "--r");
  auto [p0, p1] = parse_range(a.p, "--p");
  std::vector<std::tuple<int, int, int>> triples;
  for (int g = g0; g <= g1; ++g)
    for (int r = r0; r <= r1; ++r)
      for (int p = p0; p <= p1; ++p) triples.emplace_back(g, r, p);

  std::vector<VerifyRow> rows(triples.size());
  std::atomic<std::size_t> next{0};
  std::mutex io_mu;
  std::exception_ptr first_error;
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= triples.size()) return;
      auto [g, r, p] = triples[i];
      try {
        rows[i] = verify_pair(uni, g, r, p);
      } catch (...) {
        std::lock_guard<std::mutex> lock(io_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
      std::lock_guard<std::mutex> lock(io_mu);
      std::cerr << "done g=" << g << " r=" << r << " p=" << p << " ("
                << rows[i].ms_bb << " + " << rows[i].ms_adhm << " ms)\n";
    }
  };
  int jobs = std::max(1, a.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  std::size_t ok = 0;
  for (const auto& row : rows) ok += row.equal ? 1 : 0;
  if (a.json) {
    // stdout stays deterministic: timings only go to the report file
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) arr.push_back(row_json(row, false));
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& row : rows)
      std::cout << "g=" << row.g << " r=" << row.r << " p=" << row.p
                << " equal=" << (row.equal ? "yes" : "no") << " window="
                << row.window_lo << ".." << row.window_hi << "\n";
    std::cout << "equal " << ok << "/" << rows.size() << "\n";
  }
  if (!a.report.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) arr.push_back(row_json(row, true));
    std::ofstream out(a.report);
    if (!out) fail(errc::syntax_error, "cannot write " + a.report);
    out << arr.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda-ring simplification and twisted Higgs motives"};
  app.require_subcommand(1);

  std::string cache_dir;
  int jobs = 1;
  bool json = false;
  app.add_option("--cache-dir", cache_dir,
                 "persist universal polynomials under this directory");
  app.add_option("--jobs", jobs, "worker threads for verify");
  app.add_flag("--json", json, "JSON output");

  UniversalArgs ua;
  auto* uc = app.add_subcommand("universal", "dump or check a universal family");
  uc->add_option("--family", ua.family, "pop|newton|l|lop|nop|grothmul|grothcomp")
      ->required();
  uc->add_option("--n", ua.n, "index n")->required();
  uc->add_option("--m", ua.m, "inner index m (grothcomp)");
  uc->add_flag("--json", ua.json, "JSON output");
  uc->add_flag("--check", ua.check, "compare against the splitting oracle");
  uc->add_flag("--unbounded", ua.unbounded, "lift the cost-guard bounds");

  SimplifyArgs sa;
  auto* sc = app.add_subcommand("simplify", "canonical polynomial of an expression");
  sc->add_option("--vars", sa.vars, "comma-separated generator names")->required();
  sc->add_option("--expr", sa.expr, "expression text, or @file")->required();
  sc->add_flag("--sigma-basis", sa.sigma, "rewrite into sigma-basis variables");
  sc->add_flag("--json", sa.json, "JSON output");

  MotiveArgs ba;
  auto* bc = app.add_subcommand("bb", "closed-form motive (fixed-point formula)");
  bc->add_option("--g", ba.g, "genus (>= 2)")->required();
  bc->add_option("--r", ba.r, "rank (1..3)")->required();
  bc->add_option("--p", ba.p, "twist degree (>= 1)")->required();
  bc->add_flag("--json", ba.json, "JSON output");

  MotiveArgs aa;
  auto* ac = app.add_subcommand("adhm", "conjectural motive (partition series)");
  ac->add_option("--g", aa.g, "genus (>= 2)")->required();
  ac->add_option("--r", aa.r, "rank (1..3)")->required();
  ac->add_option("--p", aa.p, "twist degree (>= 1)")->required();
  ac->add_option("--t-window", aa.window, "fixed series window MIN:MAX");
  ac->add_flag("--json", aa.json, "JSON output");

  VerifyArgs va;
  auto* vc = app.add_subcommand("verify", "compare the two constructions");
  vc->add_option("--g", va.g, "genus or range A..B (default 2..4)");
  vc->add_option("--r", va.r, "rank or range (default 1..3)");
  vc->add_option("--p", va.p, "twist or range (default 1..4)");
  vc->add_option("--jobs", va.jobs, "worker threads (default 1)");
  vc->add_option("--report", va.report, "write a JSON report with timings");
  vc->add_flag("--json", va.json, "JSON row output on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  if (json) ua.json = sa.json = ba.json = aa.json = va.json = true;

  try {
    UniversalCache uni(cache_dir);
    if (uc->parsed()) return run_universal(uni, ua);
    if (sc->parsed()) return run_simplify(uni, sa);
    if (bc->parsed()) return run_bb(uni, ba);
    if (ac->parsed()) return run_adhm(uni, aa);
    if (vc->parsed()) {
      if (va.jobs == 1 && jobs != 1) va.jobs = jobs;
      return run_verify(uni, va);
    }
  } catch (const lring::error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "Error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
