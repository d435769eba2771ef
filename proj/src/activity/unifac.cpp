#include "propkit/activity/unifac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "propkit/error.hpp"
#include "propkit/io/csv.hpp"

namespace propkit::activity {

namespace detail {

// Group data of one binary pair, flattened for evaluation.
struct UnifacPrepared {
  UnifacVariant variant{};
  std::vector<int> ids;      // union of subgroups, ascending
  std::vector<double> Q;     // per subgroup
  std::vector<double> nu1;   // counts in component 1
  std::vector<double> nu2;   // counts in component 2
  std::vector<UnifacInteraction> energy;  // k * n + l, main(k) acting on main(l)
  double r1 = 0.0, r2 = 0.0, q1 = 0.0, q2 = 0.0;
};

}  // namespace detail

namespace {

using Prepared = detail::UnifacPrepared;

constexpr double kHalfCoordination = 5.0;  // z / 2 with z = 10

const UnifacGroup& require_group(const UnifacParameterTable& table, int id) {
  const UnifacGroup* g = table.find_group(id);
  if (g == nullptr) {
    throw Error(Errc::MissingGroupData, "activity",
                "group " + std::to_string(id) + " is not in the UNIFAC table");
  }
  if (!std::isfinite(g->R) || !std::isfinite(g->Q)) {
    throw Error(Errc::MissingGroupData, "activity",
                "group " + std::to_string(id) + " (" + g->name + ") lacks R or Q");
  }
  return *g;
}

void check_counts(const GroupCounts& counts) {
  if (counts.empty()) {
    throw Error(Errc::MissingGroupData, "activity", "component has no groups");
  }
  for (const auto& [id, n] : counts) {
    if (n <= 0) {
      throw Error(Errc::InvalidInput, "activity", "group counts must be positive");
    }
  }
}

void accumulate_rq(const GroupCounts& counts, const UnifacParameterTable& table,
                   double& r, double& q) {
  r = 0.0;
  q = 0.0;
  for (const auto& [id, n] : counts) {
    const auto& g = require_group(table, id);
    r += n * g.R;
    q += n * g.Q;
  }
}

Prepared prepare(const GroupCounts& groups1, const GroupCounts& groups2,
                 const UnifacParameterTable& table, bool with_energy) {
  check_counts(groups1);
  check_counts(groups2);
  Prepared p;
  p.variant = table.variant();
  accumulate_rq(groups1, table, p.r1, p.q1);
  accumulate_rq(groups2, table, p.r2, p.q2);
  for (const auto& [id, n] : groups1) p.ids.push_back(id);
  for (const auto& [id, n] : groups2) p.ids.push_back(id);
  std::sort(p.ids.begin(), p.ids.end());
  p.ids.erase(std::unique(p.ids.begin(), p.ids.end()), p.ids.end());
  std::vector<int> main;
  for (int id : p.ids) {
    const auto& g = require_group(table, id);
    p.Q.push_back(g.Q);
    main.push_back(g.main_group);
    auto count = [id](const GroupCounts& c) {
      auto it = c.find(id);
      return it == c.end() ? 0.0 : static_cast<double>(it->second);
    };
    p.nu1.push_back(count(groups1));
    p.nu2.push_back(count(groups2));
  }
  if (with_energy) {
    const auto n = p.ids.size();
    p.energy.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        auto e = table.interaction(main[k], main[l]);
        if (!e) {
          std::ostringstream msg;
          msg << "no interaction parameters for main groups (" << main[k] << ", "
              << main[l] << ")";
          throw Error(Errc::ParameterGap, "activity", msg.str());
        }
        p.energy[k * n + l] = *e;
      }
    }
  }
  return p;
}

LnGamma combinatorial(const Prepared& p, double x1) {
  const double x2 = 1.0 - x1;
  const double rx = x1 * p.r1 + x2 * p.r2;
  const double qx = x1 * p.q1 + x2 * p.q2;
  const double V1 = p.r1 / rx;
  const double V2 = p.r2 / rx;
  const double F1 = p.q1 / qx;
  const double F2 = p.q2 / qx;
  double Vp1 = V1;
  double Vp2 = V2;
  if (p.variant == UnifacVariant::modified) {
    const double s1 = std::pow(p.r1, 0.75);
    const double s2 = std::pow(p.r2, 0.75);
    const double sx = x1 * s1 + x2 * s2;
    Vp1 = s1 / sx;
    Vp2 = s2 / sx;
  }
  auto term = [](double Vp, double V, double F, double q) {
    const double ratio = V / F;
    return 1.0 - Vp + std::log(Vp) - kHalfCoordination * q * (1.0 - ratio + std::log(ratio));
  };
  return {term(Vp1, V1, F1, p.q1), term(Vp2, V2, F2, p.q2)};
}

// ln Gamma_k of every subgroup at liquid composition (x1, x2).
std::vector<double> group_ln_gamma(const Prepared& p, double x1, double x2,
                                  const std::vector<double>& psi) {
  const auto n = p.ids.size();
  std::vector<double> X(n);
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    X[k] = p.nu1[k] * x1 + p.nu2[k] * x2;
    total += X[k];
  }
  std::vector<double> theta(n);
  double area = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    theta[k] = p.Q[k] * (X[k] / total);
    area += theta[k];
  }
  for (auto& t : theta) t /= area;

  std::vector<double> S(n, 0.0);  // S_l = sum_m theta_m psi_ml
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t m = 0; m < n; ++m) S[l] += theta[m] * psi[m * n + l];
  }
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double tail = 0.0;
    for (std::size_t m = 0; m < n; ++m) tail += theta[m] * psi[k * n + m] / S[m];
    out[k] = p.Q[k] * (1.0 - std::log(S[k]) - tail);
  }
  return out;
}

LnGamma residual(const Prepared& p, double x1, double T) {
  const auto n = p.ids.size();
  std::vector<double> psi(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const auto& e = p.energy[i];
    const double numerator =
        p.variant == UnifacVariant::modified ? e.a + e.b * T + e.c * T * T : e.a;
    psi[i] = std::exp(-numerator / T);
  }
  const double x2 = 1.0 - x1;
  const auto mix = group_ln_gamma(p, x1, x2, psi);
  const auto pure1 = group_ln_gamma(p, 1.0, 0.0, psi);
  const auto pure2 = group_ln_gamma(p, 0.0, 1.0, psi);
  LnGamma out;
  for (std::size_t k = 0; k < n; ++k) {
    if (p.nu1[k] > 0.0) out.ln_gamma1 += p.nu1[k] * (mix[k] - pure1[k]);
    if (p.nu2[k] > 0.0) out.ln_gamma2 += p.nu2[k] * (mix[k] - pure2[k]);
  }
  return out;
}

void check_x(double x1) {
  if (!(x1 >= 0.0 && x1 <= 1.0)) {
    throw Error(Errc::InvalidInput, "activity", "x1 must lie in [0, 1]");
  }
}

double parse_optional(const std::vector<std::string>& row,
                      std::optional<std::size_t> col, std::string_view ctx) {
  if (!col) return 0.0;
  const auto& field = row[*col];
  if (field.empty()) return 0.0;
  return io::parse_double(field, ctx);
}

}  // namespace

std::string_view to_string(UnifacVariant v) noexcept {
  return v == UnifacVariant::original ? "original" : "modified";
}

UnifacParameterTable::UnifacParameterTable(
    UnifacVariant variant, std::vector<UnifacGroup> groups,
    std::map<std::pair<int, int>, UnifacInteraction> interactions)
    : variant_(variant), groups_(std::move(groups)), interactions_(std::move(interactions)) {
  std::sort(groups_.begin(), groups_.end(),
            [](const UnifacGroup& a, const UnifacGroup& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < groups_.size(); ++i) {
    if (groups_[i].id == groups_[i - 1].id) {
      throw Error(Errc::MalformedTable, "activity",
                  "duplicate UNIFAC group id " + std::to_string(groups_[i].id));
    }
  }
}

UnifacParameterTable UnifacParameterTable::parse(std::string_view groups_csv,
                                                 std::string_view interactions_csv,
                                                 UnifacVariant variant) {
  const auto gt = io::parse_csv(groups_csv);
  const auto c_id = gt.require_column("id", "groups.csv");
  const auto c_name = gt.require_column("name", "groups.csv");
  const auto c_main = gt.require_column("main", "groups.csv");
  const auto c_R = gt.require_column("R", "groups.csv");
  const auto c_Q = gt.require_column("Q", "groups.csv");
  const auto c_pattern = gt.column("pattern");
  const auto c_priority = gt.column("priority");
  std::vector<UnifacGroup> groups;
  for (std::size_t i = 0; i < gt.rows.size(); ++i) {
    const auto& row = gt.rows[i];
    const std::string ctx = "groups.csv line " + std::to_string(gt.line_numbers[i]);
    UnifacGroup g;
    g.id = io::parse_int(row[c_id], ctx);
    g.name = row[c_name];
    g.main_group = io::parse_int(row[c_main], ctx);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    g.R = row[c_R].empty() ? nan : io::parse_double(row[c_R], ctx);
    g.Q = row[c_Q].empty() ? nan : io::parse_double(row[c_Q], ctx);
    if (c_pattern) g.pattern = row[*c_pattern];
    if (c_priority && !row[*c_priority].empty()) {
      g.priority = io::parse_int(row[*c_priority], ctx);
    }
    if (!g.pattern.empty()) chem::compile_group_pattern(g.pattern);
    groups.push_back(std::move(g));
  }

  const auto it = io::parse_csv(interactions_csv);
  const auto c_m = it.require_column("main_m", "interactions.csv");
  const auto c_n = it.require_column("main_n", "interactions.csv");
  const auto c_a = it.require_column("a", "interactions.csv");
  const auto c_b = it.column("b");
  const auto c_c = it.column("c");
  std::map<std::pair<int, int>, UnifacInteraction> interactions;
  for (std::size_t i = 0; i < it.rows.size(); ++i) {
    const auto& row = it.rows[i];
    const std::string ctx = "interactions.csv line " + std::to_string(it.line_numbers[i]);
    const int m = io::parse_int(row[c_m], ctx);
    const int n = io::parse_int(row[c_n], ctx);
    UnifacInteraction e;
    e.a = io::parse_double(row[c_a], ctx);
    e.b = parse_optional(row, c_b, ctx);
    e.c = parse_optional(row, c_c, ctx);
    if (variant == UnifacVariant::original && (e.b != 0.0 || e.c != 0.0)) {
      throw Error(Errc::MalformedTable, "activity",
                  ctx + ": original UNIFAC takes only the a coefficient");
    }
    if (!interactions.emplace(std::make_pair(m, n), e).second) {
      throw Error(Errc::MalformedTable, "activity", ctx + ": duplicate pair");
    }
  }
  return UnifacParameterTable(variant, std::move(groups), std::move(interactions));
}

UnifacParameterTable UnifacParameterTable::load(const std::string& groups_path,
                                                const std::string& interactions_path,
                                                UnifacVariant variant) {
  return parse(io::read_file(groups_path), io::read_file(interactions_path), variant);
}

const UnifacGroup* UnifacParameterTable::find_group(int id) const {
  auto it = std::lower_bound(groups_.begin(), groups_.end(), id,
                             [](const UnifacGroup& g, int v) { return g.id < v; });
  return it != groups_.end() && it->id == id ? &*it : nullptr;
}

std::optional<UnifacInteraction> UnifacParameterTable::interaction(int m, int n) const {
  if (m == n) return UnifacInteraction{};
  auto it = interactions_.find({m, n});
  if (it == interactions_.end()) return std::nullopt;
  return it->second;
}

std::vector<chem::GroupDefinition> UnifacParameterTable::group_definitions() const {
  std::vector<chem::GroupDefinition> defs;
  for (const auto& g : groups_) {
    if (!g.pattern.empty()) defs.push_back({g.id, g.name, g.pattern, g.priority});
  }
  return defs;
}

chem::GroupAssignment decompose_groups(const chem::MolecularGraph& graph,
                                       const UnifacParameterTable& table) {
  const auto defs = table.group_definitions();
  return chem::decompose_groups(graph, defs);
}

LnGamma unifac_combinatorial(const GroupCounts& groups1, const GroupCounts& groups2,
                             const UnifacParameterTable& table, double x1) {
  check_x(x1);
  return combinatorial(prepare(groups1, groups2, table, false), x1);
}

LnGamma unifac_residual(const GroupCounts& groups1, const GroupCounts& groups2,
                        const UnifacParameterTable& table, double x1, Kelvin T) {
  check_x(x1);
  if (!(T.value > 0.0)) {
    throw Error(Errc::InvalidInput, "activity", "temperature must be > 0 K");
  }
  return residual(prepare(groups1, groups2, table, true), x1, T.value);
}

UnifacModel::UnifacModel(std::shared_ptr<const UnifacParameterTable> table,
                         GroupCounts groups1, GroupCounts groups2, std::string name)
    : table_(std::move(table)),
      groups1_(std::move(groups1)),
      groups2_(std::move(groups2)),
      name_(std::move(name)) {
  prepared_ = std::make_shared<const Prepared>(prepare(groups1_, groups2_, *table_, true));
}

LnGamma UnifacModel::ln_gamma(double x1, Kelvin T) const {
  const auto& p = *prepared_;
  check_x(x1);
  const auto c = combinatorial(p, x1);
  const auto r = residual(p, x1, T.value);
  return {c.ln_gamma1 + r.ln_gamma1, c.ln_gamma2 + r.ln_gamma2};
}

}  // namespace propkit::activity
