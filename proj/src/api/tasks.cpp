#include "propkit/api/tasks.hpp"

#include <cmath>

#include "propkit/activity/curve.hpp"
#include "propkit/antoine/antoine.hpp"
#include "propkit/api/json_io.hpp"
#include "propkit/chem/smiles.hpp"
#include "propkit/fit/grid.hpp"
#include "propkit/fit/nrtl_fit.hpp"
#include "propkit/io/csv.hpp"
#include "propkit/io/export.hpp"
#include "propkit/vle/diagram.hpp"

namespace propkit::api {
namespace {

const char* kModule = "api";
const char* kJson = "application/json";
const char* kCsv = "text/csv";

[[noreturn]] void bad_request(const std::string& what) {
  throw Error(Errc::InvalidInput, kModule, what);
}

const json& field(const json& req, const char* name) {
  if (!req.is_object()) bad_request("request body must be a JSON object");
  if (!req.contains(name)) bad_request(std::string("missing field '") + name + "'");
  return req[name];
}

std::optional<double> optional_number(const json& req, const char* name) {
  if (!req.is_object() || !req.contains(name) || req[name].is_null()) return std::nullopt;
  if (!req[name].is_number()) bad_request(std::string("field '") + name + "' must be a number");
  const double v = req[name].get<double>();
  if (!std::isfinite(v)) bad_request(std::string("field '") + name + "' must be finite");
  return v;
}

double positive_number(const json& req, const char* name) {
  const auto v = optional_number(req, name);
  if (!v) bad_request(std::string("missing field '") + name + "'");
  if (!(*v > 0.0)) bad_request(std::string("field '") + name + "' must be positive");
  return *v;
}

std::string text(const json& req, const char* name) {
  const auto& v = field(req, name);
  if (!v.is_string()) bad_request(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

std::string single_smiles(const json& req) {
  const auto& v = field(req, "smiles");
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && v.size() == 1 && v[0].is_string()) return v[0].get<std::string>();
  bad_request("this task takes exactly one SMILES");
}

std::pair<std::string, std::string> smiles_pair(const json& req) {
  const auto& v = field(req, "smiles");
  if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
    bad_request("this task takes exactly two SMILES: \"smiles\": [s1, s2]");
  return {v[0].get<std::string>(), v[1].get<std::string>()};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string warnings_text(const std::vector<antoine::Warning>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ';';
    out += antoine::to_string(w[i]);
  }
  return out;
}

json warnings_json(const std::vector<antoine::Warning>& w) {
  json a = json::array();
  for (auto x : w) a.push_back(std::string(antoine::to_string(x)));
  return a;
}

TaskOutput validate_smiles(const json& req, const ProviderRegistry& registry, OutputFormat fmt) {
  const auto smiles = text(req, "smiles");
  const auto component = register_component(smiles, registry);
  const auto warnings = chem::parse_smiles(smiles).warnings;
  if (fmt == OutputFormat::csv)
    return {"input_smiles,canonical_smiles\n" + smiles + "," + component.canonical_smiles + "\n", kCsv};
  json j = to_json(component);
  j["valid"] = true;
  j["warnings"] = warnings;
  return {dump(j), kJson};
}

struct PairContext {
  Component c1;
  Component c2;
  std::string model_name;
  std::shared_ptr<const activity::ActivityModel> model;
};

PairContext pair_context(const json& req, const ProviderRegistry& registry) {
  const auto [s1, s2] = smiles_pair(req);
  PairContext ctx;
  ctx.c1 = register_component(s1, registry);
  ctx.c2 = register_component(s2, registry);
  ctx.model_name = text(req, "model");
  ctx.model = resolve_activity_model(ctx.model_name, ctx.c1, ctx.c2, registry);
  return ctx;
}

TaskOutput vapor_pressure(const json& req, const ProviderRegistry& registry, OutputFormat fmt) {
  const auto component = register_component(single_smiles(req), registry);
  const double T = positive_number(req, "T_K");
  const auto params = resolve_antoine(component, registry);
  const auto eval = antoine::evaluate(params, Kelvin{T});
  if (fmt == OutputFormat::csv)
    return {"T_K,p_Pa,warnings\n" + io::format_double(T) + "," + io::format_double(eval.p.value) +
                "," + warnings_text(eval.warnings) + "\n",
            kCsv};
  json j{{"canonical_smiles", component.canonical_smiles},
         {"T_K", T},
         {"p_Pa", eval.p.value},
         {"warnings", warnings_json(eval.warnings)},
         {"antoine", to_json(params)}};
  return {dump(j), kJson};
}

TaskOutput boiling_temperature(const json& req, const ProviderRegistry& registry, OutputFormat fmt) {
  const auto component = register_component(single_smiles(req), registry);
  const double p = positive_number(req, "p_Pa");
  const auto params = resolve_antoine(component, registry);
  const auto T = antoine::boiling_temperature(params, Pascal{p});
  const auto warnings = antoine::range_check(params, T);
  if (fmt == OutputFormat::csv)
    return {"p_Pa,T_K,warnings\n" + io::format_double(p) + "," + io::format_double(T.value) + "," +
                warnings_text(warnings) + "\n",
            kCsv};
  json j{{"canonical_smiles", component.canonical_smiles},
         {"p_Pa", p},
         {"T_K", T.value},
         {"warnings", warnings_json(warnings)},
         {"antoine", to_json(params)}};
  return {dump(j), kJson};
}

TaskOutput activity_task(const json& req, const ProviderRegistry& registry, OutputFormat fmt) {
  const auto ctx = pair_context(req, registry);
  const double T = positive_number(req, "T_K");
  const double dx = optional_number(req, "dx").value_or(activity::kDefaultCompositionStep);
  const auto curve = activity::activity_curve(*ctx.model, Kelvin{T}, dx);
  if (fmt == OutputFormat::csv) return {io::activity_csv(curve), kCsv};
  json j = to_json(curve);
  j["smiles"] = {ctx.c1.canonical_smiles, ctx.c2.canonical_smiles};
  return {dump(j), kJson};
}

TaskOutput vle_task(const json& req, const ProviderRegistry& registry, OutputFormat fmt) {
  const auto T = optional_number(req, "T_K");
  const auto p = optional_number(req, "p_Pa");
  if (T.has_value() == p.has_value()) bad_request("give exactly one of 'T_K' (isothermal) or 'p_Pa' (isobaric)");
  if (!(T.value_or(1.0) > 0.0 && p.value_or(1.0) > 0.0)) bad_request("state value must be positive");
  const auto ctx = pair_context(req, registry);
  vle::BinarySystem system{resolve_antoine(ctx.c1, registry), resolve_antoine(ctx.c2, registry),
                           ctx.model};
  const auto spec = T ? StateSpec::isothermal(Kelvin{*T}) : StateSpec::isobaric(Pascal{*p});
  const auto diagram = vle::build_diagram(spec, system);
  if (fmt == OutputFormat::csv) return {io::vle_csv(diagram), kCsv};
  json j = to_json(diagram);
  j["smiles"] = {ctx.c1.canonical_smiles, ctx.c2.canonical_smiles};
  j["model"] = ctx.model_name;
  return {dump(j), kJson};
}

TaskOutput fit_task(const json& req, const ProviderRegistry& registry, OutputFormat fmt) {
  const auto& vj = field(req, "variant");
  if (!vj.is_number_integer()) bad_request("field 'variant' must be 3, 6 or 10");
  const auto variant = activity::nrtl_variant_from_int(vj.get<int>());
  std::optional<Kelvin> T;
  if (auto t = optional_number(req, "T_K")) T = Kelvin{*t};
  std::optional<fit::TemperatureRange> range;
  if (req.contains("T_range_K") && !req["T_range_K"].is_null()) {
    const auto& r = req["T_range_K"];
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
      bad_request("field 'T_range_K' must be [T_lo, T_hi]");
    range = fit::TemperatureRange{Kelvin{r[0].get<double>()}, Kelvin{r[1].get<double>()}};
  }
  const auto grid = fit::build_fit_grid(variant, T, range);
  const auto ctx = pair_context(req, registry);
  const auto targets = fit::compute_targets(*ctx.model, grid);
  const auto result = fit::fit_nrtl(targets, grid);
  if (fmt == OutputFormat::csv) return {io::fit_csv(result, targets, grid), kCsv};
  json j = to_json(result, targets, grid);
  j["smiles"] = {ctx.c1.canonical_smiles, ctx.c2.canonical_smiles};
  j["model"] = ctx.model_name;
  return {dump(j), kJson};
}

}  // namespace

std::string_view to_string(Task t) noexcept {
  switch (t) {
    case Task::validate_smiles: return "validate_smiles";
    case Task::vapor_pressure: return "vapor_pressure";
    case Task::boiling_temperature: return "boiling_temperature";
    case Task::activity: return "activity";
    case Task::vle: return "vle";
    case Task::fit_nrtl: return "nrtl_fit";
  }
  return "unknown";
}

std::optional<Task> task_from_string(std::string_view name) {
  for (auto t : {Task::validate_smiles, Task::vapor_pressure, Task::boiling_temperature,
                 Task::activity, Task::vle, Task::fit_nrtl})
    if (to_string(t) == name) return t;
  return std::nullopt;
}

TaskOutput run_task(Task task, const json& request, const ProviderRegistry& registry,
                    OutputFormat format) {
  switch (task) {
    case Task::validate_smiles: return validate_smiles(request, registry, format);
    case Task::vapor_pressure: return vapor_pressure(request, registry, format);
    case Task::boiling_temperature: return boiling_temperature(request, registry, format);
    case Task::activity: return activity_task(request, registry, format);
    case Task::vle: return vle_task(request, registry, format);
    case Task::fit_nrtl: return fit_task(request, registry, format);
  }
  bad_request("unknown task");
}

TaskOutput models_listing(const ProviderRegistry& registry) {
  json models = json::array();
  for (const auto& m : registry.activity_models())
    models.push_back({{"name", m.name}, {"description", m.description}});
  json sources = json::array();
  for (const auto& s : registry.antoine_sources()) sources.push_back(s->name());
  json tasks = json::array();
  for (auto t : {Task::validate_smiles, Task::vapor_pressure, Task::boiling_temperature,
                 Task::activity, Task::vle, Task::fit_nrtl})
    tasks.push_back(std::string(to_string(t)));
  return {dump({{"activity_models", models}, {"antoine_sources", sources}, {"tasks", tasks}}), kJson};
}

int http_status(const Error& e) noexcept {
  if (e.code() == Errc::RemoteUnavailable || e.code() == Errc::ContractViolation) return 502;
  if (is_input_error(e.code())) return 422;
  return 500;
}

std::string error_body(const Error& e) { return dump(error_json(e)); }

}  // namespace propkit::api
