#include "propkit/api/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "propkit/api/config.hpp"
#include "propkit/api/service.hpp"
#include "propkit/api/tasks.hpp"
#include "propkit/error.hpp"

namespace propkit::api {
namespace {

using nlohmann::json;

struct Options {
  std::vector<std::string> smiles;
  std::string model;
  std::optional<double> T;
  std::optional<double> p;
  std::vector<double> T_range;
  std::optional<int> variant;
  std::optional<double> dx;
  std::string config;
  std::string out;
  bool json = false;
  std::optional<int> port;
};

int fail(const Error& e, std::ostream& err) {
  err << error_body(e);
  return is_input_error(e.code()) ? 2 : 1;
}

json pair_request(const Options& o) {
  json req = json::object();
  if (!o.smiles.empty()) req["smiles"] = o.smiles;
  if (!o.model.empty()) req["model"] = o.model;
  return req;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const ProviderRegistry* injected) {
  CLI::App app{"propkit: vapor pressures, activity coefficients, NRTL fits and VLE diagrams"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "configuration file");
    sub->add_option("--out", o.out, "write the result to this file");
    sub->add_flag("--json", o.json, "JSON output instead of CSV");
  };

  auto* validate = app.add_subcommand("validate", "check and canonicalize a SMILES");
  validate->add_option("smiles", o.smiles, "SMILES")->expected(1);
  common(validate);

  auto* psat = app.add_subcommand("psat", "vapor pressure from the Antoine equation");
  psat->add_option("--smiles", o.smiles, "component")->expected(1);
  psat->add_option("--T", o.T, "temperature in K");
  common(psat);

  auto* tboil = app.add_subcommand("tboil", "boiling temperature at a pressure");
  tboil->add_option("--smiles", o.smiles, "component")->expected(1);
  tboil->add_option("--p", o.p, "pressure in Pa");
  common(tboil);

  auto* activity = app.add_subcommand("activity", "ln gamma over the composition grid");
  activity->add_option("--smiles", o.smiles, "component 1 and 2")->expected(2);
  activity->add_option("--model", o.model, "activity model");
  activity->add_option("--T", o.T, "temperature in K");
  activity->add_option("--dx", o.dx, "composition step");
  common(activity);

  auto* vle = app.add_subcommand("vle", "isothermal or isobaric VLE diagram");
  vle->add_option("--smiles", o.smiles, "component 1 and 2")->expected(2);
  vle->add_option("--model", o.model, "activity model");
  vle->add_option("--T", o.T, "temperature in K (isothermal)");
  vle->add_option("--p", o.p, "pressure in Pa (isobaric)");
  common(vle);

  auto* fit = app.add_subcommand("fit", "fit NRTL to a model's activity curves");
  fit->add_option("--smiles", o.smiles, "component 1 and 2")->expected(2);
  fit->add_option("--model", o.model, "activity model providing the targets");
  fit->add_option("--variant", o.variant, "3, 6 or 10");
  fit->add_option("--T", o.T, "temperature in K (3-parameter variant)");
  fit->add_option("--T-range", o.T_range, "T_lo T_hi in K (6/10-parameter variants)")->expected(2);
  common(fit);

  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP service");
  serve_cmd->add_option("--port", o.port, "TCP port");
  serve_cmd->add_option("--config", o.config, "configuration file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(Error(Errc::InvalidInput, "cli", e.what()), err);
  }

  try {
    ServiceConfig config = o.config.empty() ? default_config() : load_config(o.config);
    apply_env_overrides(config);

    if (serve_cmd->parsed()) {
      if (o.port) config.port = *o.port;
      return serve(config);
    }

    std::optional<ProviderRegistry> owned;
    const ProviderRegistry* registry = injected;
    if (!registry) {
      owned.emplace(build_registry(config));
      registry = &*owned;
    }

    Task task;
    json req = pair_request(o);
    auto format = o.json ? OutputFormat::json : OutputFormat::csv;
    if (validate->parsed()) {
      task = Task::validate_smiles;
      req = {{"smiles", o.smiles.front()}};
      format = OutputFormat::json;
    } else if (psat->parsed() || tboil->parsed()) {
      task = psat->parsed() ? Task::vapor_pressure : Task::boiling_temperature;
      req = json::object();
      if (!o.smiles.empty()) req["smiles"] = o.smiles.front();
    } else if (activity->parsed()) {
      task = Task::activity;
      if (o.dx) req["dx"] = *o.dx;
    } else if (vle->parsed()) {
      task = Task::vle;
    } else {
      task = Task::fit_nrtl;
      if (o.variant) req["variant"] = *o.variant;
      if (!o.T_range.empty()) req["T_range_K"] = o.T_range;
    }
    if (o.T) req["T_K"] = *o.T;
    if (o.p) req["p_Pa"] = *o.p;

    const auto result = run_task(task, req, *registry, format);
    if (o.out.empty()) {
      out << result.body;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      file << result.body;
      if (!file) throw Error(Errc::InvalidInput, "cli", "cannot write " + o.out);
    }
    return 0;
  } catch (const Error& e) {
    return fail(e, err);
  } catch (const std::exception& e) {
    err << error_body(Error(Errc::InvalidInput, "cli", e.what()));
    return 1;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_run(args, std::cout, std::cerr);
}

}  // namespace propkit::api
