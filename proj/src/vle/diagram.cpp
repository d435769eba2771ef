#include "propkit/vle/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "propkit/activity/curve.hpp"
#include "propkit/antoine/antoine.hpp"

namespace propkit::vle {
namespace {

const char* kModule = "vle";
constexpr double kBisectionTol = 1e-8;

struct PointError {
  std::size_t index;
  std::string message;
};

// Solves every grid point, splitting the index range across threads. Output
// order is the grid order regardless of scheduling.
template <class Solve>
std::vector<EquilibriumPoint> solve_line(const std::vector<double>& grid, Solve solve,
                                         const char* line, std::vector<std::string>& failures) {
  std::vector<EquilibriumPoint> out(grid.size());
  std::vector<std::optional<std::string>> errors(grid.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  auto run = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < grid.size(); i += step) {
      try {
        out[i] = solve(grid[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (errors[i]) {
      std::ostringstream os;
      os << line << " point " << i << " (composition " << grid[i] << "): " << *errors[i];
      failures.push_back(os.str());
    }
  }
  return out;
}

EquilibriumPoint bubble_at(const StateSpec& spec, const BinarySystem& system, double x1,
                           const SolverOptions& options) {
  return spec.mode() == StateMode::isothermal
             ? bubble_isothermal(system, spec.temperature(), x1)
             : bubble_isobaric(system, spec.pressure(), x1, options);
}

EquilibriumPoint dew_at(const StateSpec& spec, const BinarySystem& system, double y1,
                        const SolverOptions& options) {
  return spec.mode() == StateMode::isothermal
             ? dew_isothermal(system, spec.temperature(), y1, options)
             : dew_isobaric(system, spec.pressure(), y1, options);
}

double k_difference(const BinarySystem& system, const EquilibriumPoint& pt) {
  const double p1 = antoine::vapor_pressure(system.antoine1, Kelvin{pt.T_K}).value;
  const double p2 = antoine::vapor_pressure(system.antoine2, Kelvin{pt.T_K}).value;
  return pt.gamma1 * p1 - pt.gamma2 * p2;
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

double state_value(StateMode mode, const EquilibriumPoint& pt) {
  return mode == StateMode::isothermal ? pt.p_Pa : pt.T_K;
}

double key(const EquilibriumPoint& pt, bool dew) { return dew ? pt.y1 : pt.x1; }

// Segment slope signs of one line; differences below `zero_tol` count as flat.
std::vector<int> segment_signs(StateMode mode, const std::vector<EquilibriumPoint>& line) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < line.size(); ++i) {
    const double a = state_value(mode, line[i]);
    const double b = state_value(mode, line[i + 1]);
    const double tol = 1e-12 * std::max(std::abs(a), std::abs(b));
    out.push_back(std::abs(b - a) <= tol ? 0 : sign(b - a));
  }
  return out;
}

// Checks the slope signs of both lines on one sub-domain [lo, hi] of the
// composition axis; returns the start of the first offending segment.
std::optional<double> check_subdomain(const std::vector<EquilibriumPoint>& bubble,
                                      const std::vector<EquilibriumPoint>& dew,
                                      const std::vector<int>& sb, const std::vector<int>& sd,
                                      double lo, double hi) {
  int expected = 0;
  auto scan = [&](const std::vector<EquilibriumPoint>& line, const std::vector<int>& signs,
                  bool is_dew) -> std::optional<double> {
    for (std::size_t i = 0; i < signs.size(); ++i) {
      const double a = key(line[i], is_dew);
      const double b = key(line[i + 1], is_dew);
      if (a < lo || b > hi || signs[i] == 0) continue;
      if (expected == 0) expected = signs[i];
      else if (signs[i] != expected) return a;
    }
    return std::nullopt;
  };
  if (auto at = scan(bubble, sb, false)) return at;
  return scan(dew, sd, true);
}

// Nearest non-flat segment sign left (direction -1) or right (+1) of z.
std::optional<int> side_sign(const std::vector<EquilibriumPoint>& line, const std::vector<int>& s,
                             bool is_dew, double z, int direction) {
  if (direction < 0) {
    for (std::size_t i = s.size(); i-- > 0;)
      if (key(line[i + 1], is_dew) <= z && s[i] != 0) return s[i];
  } else {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (key(line[i], is_dew) >= z && s[i] != 0) return s[i];
  }
  return std::nullopt;
}

bool sign_changes(const std::vector<EquilibriumPoint>& line, const std::vector<int>& s,
                  bool is_dew, double z) {
  const auto left = side_sign(line, s, is_dew, z, -1);
  const auto right = side_sign(line, s, is_dew, z, +1);
  if (!left || !right) return true;  // azeotrope too close to a pure end to tell
  return *left == -*right;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

bool ConsistencyReport::passed() const noexcept {
  return merge_at_pure != Verdict::fail && slope_sign_agreement != Verdict::fail &&
         ordering != Verdict::fail && azeotrope_coincidence != Verdict::fail;
}

std::vector<std::string> ConsistencyReport::failures() const {
  std::vector<std::string> out;
  if (merge_at_pure == Verdict::fail) out.emplace_back("merge_at_pure");
  if (slope_sign_agreement == Verdict::fail) out.emplace_back("slope_sign_agreement");
  if (ordering == Verdict::fail) out.emplace_back("ordering");
  if (azeotrope_coincidence == Verdict::fail) out.emplace_back("azeotrope_coincidence");
  return out;
}

std::optional<EquilibriumPoint> VleDiagram::azeotrope() const {
  if (azeotropes.empty()) return std::nullopt;
  return azeotropes.front().bubble;
}

namespace {

std::string describe(const ConsistencyReport& r) {
  std::ostringstream os;
  os << "diagram failed thermodynamic consistency:";
  for (const auto& name : r.failures()) {
    os << ' ' << name;
    std::optional<double> at;
    if (name == "slope_sign_agreement") at = r.slope_violation_at;
    if (name == "ordering") at = r.ordering_violation_at;
    if (name == "azeotrope_coincidence") at = r.coincidence_violation_at;
    if (name == "merge_at_pure")
      os << "(residuals " << r.merge_residual_x0 << ", " << r.merge_residual_x1 << ")";
    if (at) os << "(at composition " << *at << ")";
  }
  return os.str();
}

}  // namespace

ConsistencyError::ConsistencyError(ConsistencyReport report)
    : Error(Errc::ConsistencyViolation, kModule, describe(report)), report_(std::move(report)) {}

std::vector<Azeotrope> detect_azeotropes(const StateSpec& spec, const BinarySystem& system,
                                         const std::vector<EquilibriumPoint>& bubble,
                                         const SolverOptions& options) {
  std::vector<Azeotrope> out;
  if (bubble.size() < 2) return out;
  std::vector<double> d(bubble.size());
  for (std::size_t i = 0; i < bubble.size(); ++i) d[i] = k_difference(system, bubble[i]);

  auto record = [&](double z) {
    out.push_back({bubble_at(spec, system, z, options), dew_at(spec, system, z, options)});
  };

  std::optional<std::size_t> last;  // index of the last nonzero difference
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0.0) continue;
    if (last && sign(d[i]) != sign(d[*last])) {
      if (i - *last > 1) {
        // Exact zeros on grid points between the two signs.
        record(bubble[(*last + i) / 2].x1);
      } else {
        double a = bubble[*last].x1, b = bubble[i].x1;
        const int sa = sign(d[*last]);
        while (b - a > kBisectionTol) {
          const double m = 0.5 * (a + b);
          const double dm = k_difference(system, bubble_at(spec, system, m, options));
          if (dm == 0.0) {
            a = b = m;
            break;
          }
          (sign(dm) == sa ? a : b) = m;
        }
        record(0.5 * (a + b));
      }
    }
    last = i;
  }
  return out;
}

std::optional<Azeotrope> detect_azeotrope(const StateSpec& spec, const BinarySystem& system,
                                          const std::vector<EquilibriumPoint>& bubble,
                                          const SolverOptions& options) {
  auto all = detect_azeotropes(spec, system, bubble, options);
  if (all.empty()) return std::nullopt;
  return all.front();
}

ConsistencyReport check_consistency(const VleDiagram& dg) {
  ConsistencyReport r;
  const auto& bub = dg.bubble;
  const auto& dew = dg.dew;
  const auto mode = dg.mode;
  if (bub.empty() || bub.size() != dew.size()) {
    r.merge_at_pure = r.slope_sign_agreement = r.ordering = Verdict::fail;
    return r;
  }

  // Merge at the pure ends: same state value and composition on both lines.
  auto rel_gap = [&](const EquilibriumPoint& a, const EquilibriumPoint& b) {
    const double va = state_value(mode, a), vb = state_value(mode, b);
    const double comp = std::max(std::abs(a.x1 - b.x1), std::abs(a.y1 - b.y1));
    return std::max(std::abs(va - vb) / std::max(std::abs(va), std::abs(vb)), comp);
  };
  r.merge_residual_x0 = rel_gap(bub.front(), dew.front());
  r.merge_residual_x1 = rel_gap(bub.back(), dew.back());
  r.merge_at_pure = (r.merge_residual_x0 <= 1e-8 && r.merge_residual_x1 <= 1e-8) ? Verdict::pass
                                                                                  : Verdict::fail;

  // Ordering: bubble pressure above dew pressure, or bubble temperature below
  // dew temperature, compared on the common composition grid.
  r.ordering = Verdict::pass;
  for (std::size_t i = 0; i < bub.size(); ++i) {
    const double vb = state_value(mode, bub[i]);
    const double vd = state_value(mode, dew[i]);
    const double tol = 1e-9 * std::max(std::abs(vb), std::abs(vd));
    const bool ok = mode == StateMode::isothermal ? vb >= vd - tol : vb <= vd + tol;
    if (!ok) {
      r.ordering = Verdict::fail;
      r.ordering_violation_at = static_cast<double>(i) / static_cast<double>(bub.size() - 1);
      break;
    }
  }

  // Slope signs, per sub-domain between azeotropes.
  const auto sb = segment_signs(mode, bub);
  const auto sd = segment_signs(mode, dew);
  std::vector<double> cuts{0.0};
  for (const auto& az : dg.azeotropes) cuts.push_back(az.bubble.x1);
  cuts.push_back(1.0);
  r.slope_sign_agreement = Verdict::pass;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (auto at = check_subdomain(bub, dew, sb, sd, cuts[k], cuts[k + 1])) {
      r.slope_sign_agreement = Verdict::fail;
      r.slope_violation_at = *at;
      break;
    }
  }

  // Azeotrope coincidence: x = y on both sides, equal state, and an extremum
  // on both lines.
  if (dg.azeotropes.empty()) {
    r.azeotrope_coincidence = Verdict::not_applicable;
  } else {
    r.azeotrope_coincidence = Verdict::pass;
    for (const auto& az : dg.azeotropes) {
      const double vb = state_value(mode, az.bubble);
      const double vd = state_value(mode, az.dew);
      const bool same_state = std::abs(vb - vd) <= 1e-6 * std::max(std::abs(vb), std::abs(vd));
      const bool same_comp = std::abs(az.bubble.x1 - az.bubble.y1) <= 1e-6 &&
                             std::abs(az.dew.x1 - az.dew.y1) <= 1e-6 &&
                             std::abs(az.bubble.x1 - az.dew.y1) <= 1e-6;
      const double z = az.bubble.x1;
      const bool extremum = sign_changes(bub, sb, false, z) && sign_changes(dew, sd, true, z);
      if (!(same_state && same_comp && extremum)) {
        r.azeotrope_coincidence = Verdict::fail;
        r.coincidence_violation_at = z;
        break;
      }
    }
  }
  return r;
}

VleDiagram compute_diagram(const StateSpec& spec, const BinarySystem& system,
                           const SolverOptions& options) {
  if (!system.activity) throw Error(Errc::InvalidInput, kModule, "binary system has no activity model");
  if (!(spec.value() > 0.0)) throw Error(Errc::InvalidInput, kModule, "state value must be positive");
  const auto grid = activity::composition_grid_points(kDiagramPoints);
  std::vector<std::string> failures;

  VleDiagram dg;
  dg.mode = spec.mode();
  dg.fixed_value = spec.value();
  dg.bubble = solve_line(grid, [&](double x) { return bubble_at(spec, system, x, options); },
                         "bubble", failures);
  dg.dew = solve_line(grid, [&](double y) { return dew_at(spec, system, y, options); }, "dew",
                      failures);
  if (!failures.empty()) {
    std::ostringstream os;
    os << failures.size() << " equilibrium point(s) failed";
    for (const auto& f : failures) os << "; " << f;
    throw Error(Errc::PointFailures, kModule, os.str());
  }
  dg.azeotropes = detect_azeotropes(spec, system, dg.bubble, options);
  dg.consistency = check_consistency(dg);
  return dg;
}

VleDiagram finalize_diagram(VleDiagram diagram) {
  diagram.consistency = check_consistency(diagram);
  if (!diagram.consistency.passed()) throw ConsistencyError(diagram.consistency);
  return diagram;
}

VleDiagram build_diagram(const StateSpec& spec, const BinarySystem& system,
                         const SolverOptions& options) {
  return finalize_diagram(compute_diagram(spec, system, options));
}

}  // namespace propkit::vle
