#include "propkit/api/json_io.hpp"

#include <cmath>

#include "propkit/activity/nrtl.hpp"

namespace propkit::api {
namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double d : v) a.push_back(number(d));
  return a;
}

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

}  // namespace

json to_json(const Component& c) {
  json j{{"input_smiles", c.input_smiles}, {"canonical_smiles", c.canonical_smiles}};
  j["name"] = c.name ? json(*c.name) : json(nullptr);
  if (c.groups) {
    json g = json::object();
    for (const auto& [id, n] : *c.groups) g[std::to_string(id)] = n;
    j["groups"] = g;
  } else {
    j["groups"] = nullptr;
  }
  j["antoine"] = c.antoine ? to_json(*c.antoine) : json(nullptr);
  return j;
}

json to_json(const AntoineParameterSet& p) {
  return {{"A", number(p.A_declared())},
          {"B_K", number(p.B())},
          {"C_K", number(p.C())},
          {"t_min_K", number(p.t_min().value)},
          {"t_max_K", number(p.t_max().value)},
          {"p_unit", std::string(to_string(p.declared_unit()))}};
}

json to_json(const activity::NrtlParameterSet& p) {
  json j{{"variant", activity::to_int(p.variant)}};
  const auto slots = p.slots();
  for (std::size_t k = 0; k < slots.size(); ++k) j[activity::kNrtlSlotNames[k]] = number(slots[k]);
  return j;
}

json to_json(const activity::ActivityCurve& c) {
  return {{"model", c.model_name},
          {"T_K", number(c.T_K)},
          {"x1", numbers(c.x1)},
          {"ln_gamma1", numbers(c.ln_gamma1)},
          {"ln_gamma2", numbers(c.ln_gamma2)}};
}

json to_json(const vle::EquilibriumPoint& pt) {
  return {{"x1", number(pt.x1)},         {"y1", number(pt.y1)},
          {"T_K", number(pt.T_K)},       {"p_Pa", number(pt.p_Pa)},
          {"gamma1", number(pt.gamma1)}, {"gamma2", number(pt.gamma2)}};
}

json to_json(const vle::ConsistencyReport& r) {
  return {{"passed", r.passed()},
          {"merge_at_pure",
           {{"verdict", vle::to_string(r.merge_at_pure)},
            {"residual_x1_0", number(r.merge_residual_x0)},
            {"residual_x1_1", number(r.merge_residual_x1)}}},
          {"slope_sign_agreement",
           {{"verdict", vle::to_string(r.slope_sign_agreement)},
            {"violation_at", optional_number(r.slope_violation_at)}}},
          {"ordering",
           {{"verdict", vle::to_string(r.ordering)},
            {"violation_at", optional_number(r.ordering_violation_at)}}},
          {"azeotrope_coincidence",
           {{"verdict", vle::to_string(r.azeotrope_coincidence)},
            {"violation_at", optional_number(r.coincidence_violation_at)}}}};
}

json to_json(const vle::VleDiagram& d) {
  json j{{"mode", std::string(to_string(d.mode))}};
  if (d.mode == StateMode::isothermal) j["T_K"] = number(d.fixed_value);
  else j["p_Pa"] = number(d.fixed_value);
  json bubble = json::array(), dew = json::array(), az = json::array();
  for (const auto& p : d.bubble) bubble.push_back(to_json(p));
  for (const auto& p : d.dew) dew.push_back(to_json(p));
  for (const auto& a : d.azeotropes) az.push_back(to_json(a.bubble));
  j["bubble"] = bubble;
  j["dew"] = dew;
  j["azeotrope"] = d.azeotropes.empty() ? json(nullptr) : to_json(d.azeotropes.front().bubble);
  j["azeotropes"] = az;
  j["consistency"] = to_json(d.consistency);
  return j;
}

json to_json(const fit::FitResult& r, const std::vector<activity::ActivityCurve>& targets,
             const fit::FitGrid& grid) {
  json curves = json::array();
  for (std::size_t j = 0; j < grid.J(); ++j) {
    const auto state = activity::nrtl_tau_alpha(r.params, Kelvin{grid.temperatures[j]});
    std::vector<double> g1, g2;
    for (double x : grid.compositions) {
      const auto lg = activity::nrtl_ln_gamma(state, x);
      g1.push_back(lg.ln_gamma1);
      g2.push_back(lg.ln_gamma2);
    }
    curves.push_back({{"T_K", number(grid.temperatures[j])},
                      {"x1", numbers(grid.compositions)},
                      {"ln_gamma1_nrtl", numbers(g1)},
                      {"ln_gamma2_nrtl", numbers(g2)},
                      {"ln_gamma1_target", numbers(targets[j].ln_gamma1)},
                      {"ln_gamma2_target", numbers(targets[j].ln_gamma2)}});
  }
  return {{"variant", activity::to_int(r.params.variant)},
          {"parameters", to_json(r.params)},
          {"loss", number(r.loss)},
          {"n_starts", r.n_starts},
          {"start_losses", numbers(r.start_losses)},
          {"converged", r.converged},
          {"equations", r.equations_text},
          {"grid", {{"N", grid.N()}, {"J", grid.J()}, {"temperatures_K", numbers(grid.temperatures)}}},
          {"curves", curves}};
}

json error_json(const Error& e) {
  json body{{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"module", e.module()}};
  if (e.offset()) body["offset"] = *e.offset();
  if (const auto* ce = dynamic_cast<const vle::ConsistencyError*>(&e)) body["report"] = to_json(ce->report());
  return {{"error", body}};
}

}  // namespace propkit::api
