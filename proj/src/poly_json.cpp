#include "lring/poly_json.hpp"

#include <json.hpp>

#include <algorithm>
#include <unordered_map>

namespace lring {

using nlohmann::json;

std::string poly_to_json(const Polynomial& p) {
  std::vector<VarId> vs = p.variables();  // sorted by name
  std::unordered_map<VarId, std::size_t> rank;
  for (std::size_t i = 0; i < vs.size(); ++i) rank[vs[i]] = i;

  std::vector<const Term*> ts;
  ts.reserve(p.term_count());
  for (const auto& t : p.terms()) ts.push_back(&t);
  auto by_name = [&](VarId v) { return rank.at(v); };
  std::sort(ts.begin(), ts.end(), [&](const Term* a, const Term* b) {
    return a->mono.cmp(b->mono, by_name) < 0;
  });

  json out;
  out["vars"] = json::array();
  for (VarId v : vs) out["vars"].push_back(var_name(v));
  out["terms"] = json::array();
  for (const Term* t : ts) {
    json jt;
    jt["c"] = t->coeff.get_str();
    std::vector<std::uint32_t> e(vs.size(), 0);
    for (const auto& f : t->mono.factors()) e[rank.at(f.var)] = f.exp;
    jt["e"] = e;
    out["terms"].push_back(std::move(jt));
  }
  return out.dump();
}

Polynomial poly_from_json(const std::string& text) {
  json in = json::parse(text, nullptr, false);
  if (in.is_discarded() || !in.contains("vars") || !in.contains("terms"))
    fail(errc::syntax_error, "malformed polynomial JSON");
  std::vector<VarId> vs;
  for (const auto& name : in["vars"]) vs.push_back(var_id(name.get<std::string>()));
  std::vector<Term> ts;
  for (const auto& jt : in["terms"]) {
    Rat c(jt["c"].get<std::string>());
    c.canonicalize();
    Monomial m;
    const auto& e = jt["e"];
    if (e.size() != vs.size())
      fail(errc::syntax_error, "exponent array length mismatch");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::uint32_t x = e[i].get<std::uint32_t>();
      if (x) m = m.times(Monomial::var(vs[i], x));
    }
    ts.push_back({m, c});
  }
  return Polynomial::from_terms(std::move(ts));
}

}  // namespace lring
