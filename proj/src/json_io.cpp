#include "arborium/json_io.hpp"

#include "arborium/arbor.hpp"
#include "arborium/error.hpp"

namespace arborium {

namespace {

nlohmann::json poly_entry(const MultiPoly& p) {
  nlohmann::json j = poly_to_json(p);
  j["text"] = p.to_string();
  return j;
}

}  // namespace

nlohmann::json poly_to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] != 0) exps[std::string(var_name(static_cast<Var>(i)))] = e[i];
    }
    terms.push_back({{"coeff", c.to_string()}, {"exponents", exps}});
  }
  return {{"terms", terms}};
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw AlgebraError("polynomial JSON must be an object with a 'terms' array");
  }
  MultiPoly out;
  for (const auto& term : j["terms"]) {
    if (!term.contains("coeff") || !term["coeff"].is_string()) throw AlgebraError("term without string 'coeff'");
    Exponents e{};
    if (term.contains("exponents")) {
      for (const auto& [name, power] : term["exponents"].items()) {
        const auto x = parse_var(name);
        if (!x) throw AlgebraError("unknown variable '" + name + "'");
        if (!power.is_number_integer() || power.get<int>() < 0) {
          throw AlgebraError("exponent of " + name + " must be a non-negative integer");
        }
        e[static_cast<std::size_t>(*x)] = power.get<int>();
      }
    }
    out += MultiPoly::monomial(Rat::parse(term["coeff"].get<std::string>()), e);
  }
  return out;
}

nlohmann::json report_to_json(const Report& report) {
  nlohmann::json per_order = nlohmann::json::array();
  for (const auto& e : report.per_order) {
    nlohmann::json entry = {{"n", e.n}, {"pass", e.pass}, {"lhs", e.lhs}, {"rhs", e.rhs}};
    if (!e.pass) entry["diff"] = e.diff;
    per_order.push_back(std::move(entry));
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"theorem", std::string(theorem_name(report.theorem))},
          {"order", report.order},
          {"per_order", per_order},
          {"checks", checks},
          {"overall", report.overall}};
}

nlohmann::json bundle_to_json(const InvariantBundle& b) {
  nlohmann::json j = {{"arbor", serialize_arbor(b.arbor)}, {"size", b.arbor.size()}};
  if (b.zeta) j["zeta"] = poly_entry(*b.zeta);
  if (b.k_poly) j["k"] = poly_entry(*b.k_poly);
  if (b.m_triangle) j["m"] = poly_entry(*b.m_triangle);
  if (b.ehrhart) j["ehrhart"] = poly_entry(*b.ehrhart);
  if (b.laplace) j["laplace"] = poly_entry(*b.laplace);
  if (b.volume) j["volume"] = b.volume->to_string();
  return j;
}

}  // namespace arborium
