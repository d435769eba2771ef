// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "propkit/activity/curve.hpp"
#include "propkit/activity/unifac.hpp"
#include "propkit/antoine/antoine.hpp"
#include "propkit/api/config.hpp"
#include "propkit/chem/canonical.hpp"
#include "propkit/chem/smiles.hpp"
#include "propkit/fit/grid.hpp"
#include "propkit/fit/loss.hpp"
#include "propkit/fit/nrtl_fit.hpp"
#include "propkit/vle/diagram.hpp"
#include "systems.hpp"

using namespace propkit;
using activity::NrtlParameterSet;
using activity::NrtlVariant;

namespace {

// Collects failure notes for one criterion.
struct Check {
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
  }
  template <class... T>
  void expect(bool ok, const T&... parts) {
    if (ok) return;
    std::ostringstream os;
    os.precision(17);
    (os << ... << parts);
    notes.push_back(os.str());
  }
};

using Criterion = std::function<void(Check&)>;

double psat(const AntoineParameterSet& a, double T) {
  return oracle::antoine_pa(a.A(), a.B(), a.C(), T);
}

const auto kA1 = testsys::antoine_through(1e5, 350.0, 1500.0, -50.0);
const auto kA2 = testsys::antoine_through(4e4, 350.0, 1650.0, -45.0);

// Largest |x1 dlng1/dx1 + x2 dlng2/dx1| over the 99 interior grid points.
double gibbs_duhem(const activity::ActivityModel& m, Kelvin T) {
  const double h = 1e-5;
  double worst = 0.0;
  for (int i = 1; i < 100; ++i) {
    const double x = i / 100.0;
    const auto up = m.ln_gamma(x + h, T), dn = m.ln_gamma(x - h, T);
    const double d1 = (up.ln_gamma1 - dn.ln_gamma1) / (2 * h);
    const double d2 = (up.ln_gamma2 - dn.ln_gamma2) / (2 * h);
    worst = std::max(worst, std::abs(x * d1 + (1 - x) * d2));
  }
  return worst;
}

void antoine_inverse(Check& c) {
  testsys::Rng rng(1001);
  std::vector<std::pair<AntoineParameterSet, double>> cases;
  for (int k = 0; k < 1000; ++k) {
    auto a = testsys::random_antoine(rng);
    cases.emplace_back(a, testsys::uniform(rng, a.t_min().value, a.t_max().value));
  }
  testsys::Stopwatch sw;
  double worst = 0.0;
  for (const auto& [a, T] : cases) {
    const auto p = antoine::vapor_pressure(a, Kelvin{T});
    const double back = antoine::boiling_temperature(a, p).value;
    worst = std::max(worst, std::abs(back - T) / T);
  }
  const double t = sw.seconds();
  c.expect(worst <= 1e-9, "worst relative T error ", worst);
  c.expect(t < 1.0, "runtime ", t, " s");
}

void gibbs_duhem_residual(Check& c) {
  testsys::Stopwatch sw;
  testsys::Rng rng(2002);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto v = k % 3 == 0 ? NrtlVariant::three : k % 3 == 1 ? NrtlVariant::six : NrtlVariant::ten;
    const activity::NrtlModel m(testsys::random_nrtl(rng, v));
    worst = std::max(worst, gibbs_duhem(m, Kelvin{testsys::uniform(rng, 300.0, 400.0)}));
  }
  c.expect(worst <= 1e-6, "NRTL worst residual ", worst);

  const std::vector<std::pair<std::string, std::string>> pairs{
      {"CCCCCC", "CCO"}, {"c1ccccc1", "Cc1ccccc1"}, {"CCO", "O"}, {"CO", "O"}, {"CCCCCC", "c1ccccc1"}};
  for (const char* model : {"unifac", "unifac-modified"}) {
    for (const auto& [s1, s2] : pairs) {
      const auto m = resolve_activity_model(model, testsys::component(s1), testsys::component(s2),
                                            testsys::demo_registry());
      for (double T : {300.0, 350.0}) {
        const double r = gibbs_duhem(*m, Kelvin{T});
        c.expect(r <= 1e-6, model, " ", s1, "/", s2, " residual ", r);
      }
    }
  }
  const double t = sw.seconds();
  c.expect(t < 10.0, "runtime ", t, " s");
}

void ideal_reduction(Check& c) {
  testsys::Rng rng(3003);
  for (int k = 0; k < 5; ++k) {
    const auto a1 = testsys::random_antoine(rng), a2 = testsys::random_antoine(rng);
    const auto sys = testsys::system(a1, a2, testsys::nrtl(0.0, 0.0, 0.3));
    const double T = 350.0;
    const double p1 = psat(a1, T), p2 = psat(a2, T);
    const auto dg = vle::build_diagram(StateSpec::isothermal(Kelvin{T}), sys);
    c.expect(dg.bubble.size() == 101, "bubble points ", dg.bubble.size());
    for (const auto& pt : dg.bubble) {
      const double raoult = pt.x1 * p1 + (1 - pt.x1) * p2;
      c.expect(std::abs(pt.p_Pa - raoult) <= 1e-12 * raoult, "x1 = ", pt.x1, " p = ", pt.p_Pa,
               " vs ", raoult);
    }
  }
}

void duality(Check& c) {
  testsys::Stopwatch sw;
  testsys::Rng rng(4004);
  int systems = 0;
  while (systems < 20) {
    const auto sys = testsys::system(testsys::random_antoine(rng), testsys::random_antoine(rng),
                                     std::make_shared<activity::NrtlModel>(testsys::random_mild_nrtl(rng)));
    ++systems;
    for (int i = 0; i <= 100; ++i) {
      const double x = i / 100.0;
      const auto b = vle::bubble_isothermal(sys, Kelvin{350.0}, x);
      const auto d = vle::dew_isothermal(sys, Kelvin{350.0}, b.y1);
      c.expect(std::abs(d.p_Pa - b.p_Pa) <= 1e-6 * b.p_Pa && std::abs(d.x1 - x) <= 1e-6,
               "isothermal system ", systems, " x1 = ", x);
      const auto bp = vle::bubble_isobaric(sys, Pascal{6e4}, x);
      const auto dp = vle::dew_isobaric(sys, Pascal{6e4}, bp.y1);
      c.expect(std::abs(dp.T_K - bp.T_K) <= 1e-6 * bp.T_K && std::abs(dp.x1 - x) <= 1e-6,
               "isobaric system ", systems, " x1 = ", x);
    }
  }
  const double t = sw.seconds();
  c.expect(t < 30.0, "runtime ", t, " s");
}

void loss_prefactor(Check& c) {
  const auto ideal = NrtlParameterSet::from_tau_alpha(0.0, 0.0, 0.3);
  const activity::NrtlModel model(ideal);
  const std::vector<fit::FitGrid> grids{
      fit::build_fit_grid(NrtlVariant::three, Kelvin{350.0}, std::nullopt),
      fit::build_fit_grid(NrtlVariant::six, std::nullopt,
                          fit::TemperatureRange{Kelvin{300.0}, Kelvin{400.0}})};
  for (const auto& grid : grids) {
    auto base = fit::compute_targets(model, grid);
    for (double d : {0.1, 0.5, 1.0}) {
      auto shifted = base;
      for (auto& t : shifted) {
        for (auto& v : t.ln_gamma1) v += d;
        for (auto& v : t.ln_gamma2) v += d;
      }
      const double L = fit::evaluate_loss(ideal, shifted, grid);
      c.expect(L == d * d, "N = ", grid.N(), " J = ", grid.J(), " delta = ", d, " L = ", L);
    }
  }
}

void fit_self_consistency(Check& c) {
  testsys::Rng rng(6006);
  const auto g3 = fit::build_fit_grid(NrtlVariant::three, Kelvin{350.0}, std::nullopt);
  for (int k = 0; k < 20; ++k) {
    const auto truth = testsys::random_nrtl(rng, NrtlVariant::three);
    const auto targets = fit::compute_targets(activity::NrtlModel(truth), g3);
    const auto r = fit::fit_nrtl(targets, g3);
    c.expect(r.n_starts <= 8, "starts ", r.n_starts);
    c.expect(r.loss <= 1e-12, "3-parameter system ", k, " L = ", r.loss);
  }
  const fit::TemperatureRange range{Kelvin{300.0}, Kelvin{400.0}};
  for (auto v : {NrtlVariant::six, NrtlVariant::ten}) {
    const auto grid = fit::build_fit_grid(v, std::nullopt, range);
    for (int k = 0; k < 5; ++k) {
      const auto truth = testsys::random_nrtl(rng, v);
      const auto targets = fit::compute_targets(activity::NrtlModel(truth), grid);
      const auto r = fit::fit_nrtl(targets, grid);
      c.expect(r.loss <= 1e-10, activity::to_int(v), "-parameter system ", k, " L = ", r.loss);
    }
  }
}

void grid_contracts(Check& c) {
  const auto sys = testsys::demo_system("CCCCCC", "CCO", "nrtl-demo");
  const auto curve = activity::activity_curve(*sys.activity, Kelvin{350.0});
  c.expect(curve.size() == 101, "activity points ", curve.size());
  for (const auto& spec : {StateSpec::isothermal(Kelvin{400.0}), StateSpec::isobaric(Pascal{101325.0})}) {
    const auto dg = vle::build_diagram(spec, sys);
    c.expect(dg.bubble.size() == 101 && dg.dew.size() == 101, "VLE points ", dg.bubble.size(), "/",
             dg.dew.size());
    for (std::size_t i = 0; i < dg.bubble.size(); ++i)
      c.expect(dg.bubble[i].x1 == curve.x1[i] && dg.dew[i].y1 == curve.x1[i], "grid key at ", i);
  }
  for (auto v : {NrtlVariant::six, NrtlVariant::ten}) {
    const auto g = fit::build_fit_grid(v, std::nullopt, fit::TemperatureRange{Kelvin{300.0}, Kelvin{380.0}});
    c.expect(g.N() == 21 && g.J() == 5, "fit grid N = ", g.N(), " J = ", g.J());
  }
  const auto g3 = fit::build_fit_grid(NrtlVariant::three, Kelvin{350.0}, std::nullopt);
  c.expect(g3.N() == 101 && g3.J() == 1, "3-parameter grid N = ", g3.N(), " J = ", g3.J());
}

// Expects finalize_diagram to withhold `dg` with exactly `name` failing.
void expect_withheld(Check& c, vle::VleDiagram dg, const std::string& name) {
  try {
    vle::finalize_diagram(std::move(dg));
    c.expect(false, name, ": corrupted diagram was returned");
  } catch (const vle::ConsistencyError& e) {
    const auto f = e.report().failures();
    c.expect(f == std::vector<std::string>{name}, name, ": failures reported as '",
             f.empty() ? std::string() : f.front(), "' (", f.size(), " total)");
  }
}

void consistency_gate(Check& c) {
  const auto ideal = vle::compute_diagram(StateSpec::isothermal(Kelvin{350.0}),
                                          testsys::system(kA1, kA2, testsys::nrtl(0, 0, 0.3)));
  c.expect(ideal.consistency.passed(), "clean ideal diagram fails");

  auto crossed = ideal;
  std::swap(crossed.bubble, crossed.dew);
  expect_withheld(c, crossed, "ordering");

  auto split = ideal;
  split.bubble.front().p_Pa *= 1 + 1e-6;
  expect_withheld(c, split, "merge_at_pure");

  auto kinked = ideal;
  kinked.bubble[50].p_Pa *= 1.05;
  expect_withheld(c, kinked, "slope_sign_agreement");

  auto az = vle::compute_diagram(StateSpec::isothermal(Kelvin{350.0}),
                                 testsys::system(kA1, kA1, testsys::nrtl(0.6, 0.6, 0.3)));
  c.expect(az.consistency.passed() && az.azeotropes.size() == 1, "clean azeotropic diagram fails");
  if (!az.azeotropes.empty()) {
    az.azeotropes[0].dew.p_Pa *= 1 + 1e-3;
    expect_withheld(c, az, "azeotrope_coincidence");
  }
}

void azeotrope_localization(Check& c) {
  const auto sym = testsys::system(kA1, kA1, testsys::nrtl(0.6, 0.6, 0.3));
  for (const auto& spec : {StateSpec::isothermal(Kelvin{350.0}), StateSpec::isobaric(Pascal{6e4})}) {
    const auto dg = vle::build_diagram(spec, sym);
    c.expect(dg.azeotropes.size() == 1, "symmetric azeotropes ", dg.azeotropes.size());
    if (!dg.azeotropes.empty())
      c.expect(std::abs(dg.azeotropes[0].bubble.x1 - 0.5) <= 1e-8, "symmetric x_az ",
               dg.azeotropes[0].bubble.x1);
  }

  // Asymmetric surrogate against a brute-force scan of gamma1 p1s - gamma2 p2s.
  const auto& reg = testsys::demo_registry();
  const auto hex = testsys::component("CCCCCC"), eth = testsys::component("CCO");
  const auto a1 = resolve_antoine(hex, reg), a2 = resolve_antoine(eth, reg);
  const auto model = resolve_activity_model("nrtl-demo", hex, eth, reg);
  const auto& p = dynamic_cast<const activity::NrtlModel&>(*model).parameters();
  const double T = 400.0;
  const auto tau = activity::nrtl_tau_alpha(p, Kelvin{T});
  const double p1 = psat(a1, T), p2 = psat(a2, T);
  const auto f = [&](double x) {
    const auto [l1, l2] = oracle::nrtl(tau.tau12, tau.tau21, tau.alpha, x);
    return std::exp(l1) * p1 - std::exp(l2) * p2;
  };
  const auto roots = oracle::scan_roots(f, 0.0, 1.0, 1e-5);
  const auto dg = vle::build_diagram(StateSpec::isothermal(Kelvin{T}), vle::BinarySystem{a1, a2, model});
  c.expect(roots.size() == 1 && dg.azeotropes.size() == 1, "scan roots ", roots.size(),
           ", detected ", dg.azeotropes.size());
  if (roots.size() == 1 && dg.azeotropes.size() == 1)
    c.expect(std::abs(dg.azeotropes[0].bubble.x1 - roots[0]) <= 1e-6, "surrogate x_az ",
             dg.azeotropes[0].bubble.x1, " vs scan ", roots[0]);
}

void figure_shape(Check& c) {
  const auto sys = testsys::demo_system("CCCCCC", "CCO", "nrtl-demo");
  const auto dg = vle::build_diagram(StateSpec::isothermal(Kelvin{400.0}), sys);
  c.expect(dg.azeotropes.size() == 1, "azeotropes ", dg.azeotropes.size());
  int maxima = 0, minima = 0;
  for (std::size_t i = 1; i + 1 < dg.bubble.size(); ++i) {
    const double l = dg.bubble[i - 1].p_Pa, m = dg.bubble[i].p_Pa, r = dg.bubble[i + 1].p_Pa;
    maxima += m > l && m > r;
    minima += m < l && m < r;
  }
  c.expect(maxima == 1 && minima == 0, "bubble line maxima ", maxima, ", minima ", minima);
  c.expect(dg.consistency.merge_at_pure == vle::Verdict::pass, "lines do not merge at the pure ends");
  c.expect(dg.consistency.ordering == vle::Verdict::pass, "bubble line below dew line");
  const double p1 = dg.bubble.back().p_Pa, p2 = dg.bubble.front().p_Pa;
  if (auto az = dg.azeotrope()) {
    c.expect(az->p_Pa > p1 && az->p_Pa > p2, "azeotrope pressure ", az->p_Pa, " not above both ends");
    c.expect(az->x1 > 0.0 && az->x1 < 1.0, "azeotrope composition ", az->x1);
  }
}

void smiles_corpus(Check& c) {
  for (const char* s : {"CCCCCC", "CCO", "Oc1ccccc1", "CCCc1ccccc1N"}) {
    try {
      const auto once = chem::canonical_smiles(s);
      c.expect(chem::canonical_smiles(once) == once, s, " canonical form is not idempotent");
    } catch (const std::exception& e) {
      c.expect(false, s, ": ", e.what());
    }
  }
  const auto cfg = api::default_config();
  const auto table = activity::UnifacParameterTable::load(cfg.unifac_groups, cfg.unifac_interactions,
                                                          activity::UnifacVariant::original);
  const auto named = [&](const std::string& s) {
    std::map<std::string, int> out;
    for (const auto& [id, n] : activity::decompose_groups(chem::parse_smiles(s).graph, table))
      out[table.find_group(id)->name] = n;
    return out;
  };
  const auto hexane = named("CCCCCC");
  const auto ethanol = named("CCO");
  c.expect(hexane == std::map<std::string, int>{{"CH3", 2}, {"CH2", 4}}, "hexane decomposition");
  c.expect(ethanol == std::map<std::string, int>{{"CH3", 1}, {"CH2", 1}, {"OH", 1}},
           "ethanol decomposition");
}

void no_secondary_component(Check& c) {
  namespace fs = std::filesystem;
  const fs::path root = PROPKIT_SOURCE_DIR;
  for (const char* dir : {"src", "include", "tools", "tests"}) {
    if (!fs::exists(root / dir)) continue;
    for (const auto& e : fs::recursive_directory_iterator(root / dir)) {
      const auto name = e.path().filename().string();
      c.expect(name.find("webui") == std::string::npos, "found ", e.path().string());
    }
  }
  for (const char* file : {"CMakeLists.txt", "src/CMakeLists.txt", "tools/CMakeLists.txt"}) {
    std::ifstream in(root / file);
    std::stringstream ss;
    ss << in.rdbuf();
    c.expect(ss.str().find("webui") == std::string::npos, file, " references a web UI target");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria{
      {"antoine inverse round trip", antoine_inverse},
      {"Gibbs-Duhem residual", gibbs_duhem_residual},
      {"ideal-mixture reduction", ideal_reduction},
      {"bubble/dew duality", duality},
      {"loss prefactor identity", loss_prefactor},
      {"fit self-consistency", fit_self_consistency},
      {"grid contracts", grid_contracts},
      {"consistency gate", consistency_gate},
      {"azeotrope localization", azeotrope_localization},
      {"figure shape", figure_shape},
      {"SMILES corpus", smiles_corpus},
      {"no secondary component", no_secondary_component},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    testsys::Stopwatch sw;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.notes.empty();
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << sw.seconds() << " s)\n";
    for (std::size_t i = 0; i < c.notes.size() && i < 10; ++i) std::cout << "    " << c.notes[i] << '\n';
    if (c.notes.size() > 10) std::cout << "    ... " << c.notes.size() - 10 << " more\n";
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size()
            << '\n';
  return failed ? 1 : 0;
}
