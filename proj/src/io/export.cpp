#include "propkit/io/export.hpp"

#include <array>
#include <optional>
#include <sstream>

#include "propkit/error.hpp"
#include "propkit/fit/loss.hpp"
#include "propkit/io/csv.hpp"

namespace propkit::io {
namespace {

void row(std::string& out, std::initializer_list<double> values, std::string_view tail = {}) {
  bool first = true;
  for (double v : values) {
    if (!first) out += ',';
    out += format_double(v);
    first = false;
  }
  if (!tail.empty()) {
    out += ',';
    out += tail;
  }
  out += '\n';
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Errc::MalformedTable, "io", "fit CSV: " + what);
}

// Splits on blank lines.
std::vector<std::string_view> blocks(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = std::string_view::npos, pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const auto line = trim(text.substr(pos, eol - pos));
    if (line.empty()) {
      if (start != std::string_view::npos) out.push_back(text.substr(start, pos - start));
      start = std::string_view::npos;
    } else if (start == std::string_view::npos) {
      start = pos;
    }
    pos = eol + 1;
  }
  if (start != std::string_view::npos) out.push_back(text.substr(start));
  return out;
}

}  // namespace

std::string activity_csv(const activity::ActivityCurve& curve) {
  std::string out = "T_K,x1,ln_gamma1,ln_gamma2\n";
  for (std::size_t i = 0; i < curve.size(); ++i)
    row(out, {curve.T_K, curve.x1[i], curve.ln_gamma1[i], curve.ln_gamma2[i]});
  return out;
}

std::string vle_csv(const vle::VleDiagram& diagram) {
  std::string out = "x1,y1,T_K,p_Pa,gamma1,gamma2,line\n";
  for (const auto& p : diagram.bubble) row(out, {p.x1, p.y1, p.T_K, p.p_Pa, p.gamma1, p.gamma2}, "bubble");
  for (const auto& p : diagram.dew) row(out, {p.x1, p.y1, p.T_K, p.p_Pa, p.gamma1, p.gamma2}, "dew");
  return out;
}

std::string fit_csv(const fit::FitResult& result,
                    const std::vector<activity::ActivityCurve>& targets, const fit::FitGrid& grid) {
  fit::check_targets(targets, grid);
  std::string out = "parameter,value\n";
  out += "variant," + std::to_string(activity::to_int(result.params.variant)) + '\n';
  const auto slots = result.params.slots();
  for (std::size_t k = 0; k < slots.size(); ++k)
    out += std::string(activity::kNrtlSlotNames[k]) + ',' + format_double(slots[k]) + '\n';
  out += "loss," + format_double(result.loss) + '\n';

  out += "\nstart,loss\n";
  for (std::size_t s = 0; s < result.start_losses.size(); ++s)
    out += std::to_string(s) + ',' + format_double(result.start_losses[s]) + '\n';

  out += "\nT_K,x1,ln_gamma1_nrtl,ln_gamma2_nrtl,ln_gamma1_target,ln_gamma2_target\n";
  for (std::size_t j = 0; j < grid.J(); ++j) {
    const auto state = activity::nrtl_tau_alpha(result.params, Kelvin{grid.temperatures[j]});
    for (std::size_t i = 0; i < grid.N(); ++i) {
      const auto lg = activity::nrtl_ln_gamma(state, grid.compositions[i]);
      row(out, {grid.temperatures[j], grid.compositions[i], lg.ln_gamma1, lg.ln_gamma2,
                targets[j].ln_gamma1[i], targets[j].ln_gamma2[i]});
    }
  }
  return out;
}

ParsedFit parse_fit_csv(std::string_view text) {
  const auto parts = blocks(text);
  if (parts.size() != 3) malformed("expected 3 blocks, found " + std::to_string(parts.size()));

  ParsedFit out;
  const auto params = parse_csv(parts[0]);
  if (params.header != std::vector<std::string>{"parameter", "value"}) malformed("bad parameter header");
  std::array<double, 10> slots{};
  std::optional<int> variant;
  std::optional<double> loss;
  for (const auto& r : params.rows) {
    const auto& key = r[0];
    if (key == "variant") {
      variant = parse_int(r[1], "fit CSV variant");
    } else if (key == "loss") {
      loss = parse_double(r[1], "fit CSV loss");
    } else {
      std::size_t k = 0;
      while (k < slots.size() && key != activity::kNrtlSlotNames[k]) ++k;
      if (k == slots.size()) malformed("unknown parameter '" + key + "'");
      slots[k] = parse_double(r[1], "fit CSV parameter");
    }
  }
  if (!variant || !loss) malformed("missing variant or loss");
  out.params = activity::NrtlParameterSet::from_slots(slots, activity::nrtl_variant_from_int(*variant));
  out.loss = *loss;

  const auto starts = parse_csv(parts[1]);
  if (starts.header != std::vector<std::string>{"start", "loss"}) malformed("bad start header");
  for (const auto& r : starts.rows) out.start_losses.push_back(parse_double(r[1], "fit CSV start loss"));

  const auto curves = parse_csv(parts[2]);
  const std::vector<std::string> curve_header{"T_K", "x1", "ln_gamma1_nrtl", "ln_gamma2_nrtl",
                                              "ln_gamma1_target", "ln_gamma2_target"};
  if (curves.header != curve_header) malformed("bad curve header");
  out.grid.variant = out.params.variant;
  for (const auto& r : curves.rows) {
    const double T = parse_double(r[0], "fit CSV T_K");
    const double x = parse_double(r[1], "fit CSV x1");
    if (out.targets.empty() || out.targets.back().T_K != T) {
      out.grid.temperatures.push_back(T);
      out.targets.push_back({});
      out.targets.back().T_K = T;
      out.targets.back().model_name = "target";
    }
    auto& c = out.targets.back();
    c.x1.push_back(x);
    c.ln_gamma1.push_back(parse_double(r[4], "fit CSV target"));
    c.ln_gamma2.push_back(parse_double(r[5], "fit CSV target"));
  }
  if (out.targets.empty()) malformed("no curve rows");
  out.grid.compositions = out.targets.front().x1;
  return out;
}

}  // namespace propkit::io
