#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace oracle {

double antoine_pa(double A, double B, double C, double T) {
  return std::pow(10.0, A - B / (T + C));
}

std::pair<double, double> nrtl(double tau12, double tau21, double alpha, double x1) {
  const double x2 = 1.0 - x1;
  const double G12 = std::exp(-alpha * tau12);
  const double G21 = std::exp(-alpha * tau21);
  const double d1 = x1 + x2 * G21;
  const double d2 = x2 + x1 * G12;
  const double g1 = x2 * x2 * (tau21 * (G21 / d1) * (G21 / d1) + tau12 * G12 / (d2 * d2));
  const double g2 = x1 * x1 * (tau12 * (G12 / d2) * (G12 / d2) + tau21 * G21 / (d1 * d1));
  return {g1, g2};
}

std::pair<double, double> unifac_combinatorial(const std::vector<Subgroup>& groups, double x1,
                                               bool modified) {
  double r1 = 0, r2 = 0, q1 = 0, q2 = 0;
  for (const auto& g : groups) {
    r1 += g.nu1 * g.R;
    r2 += g.nu2 * g.R;
    q1 += g.nu1 * g.Q;
    q2 += g.nu2 * g.Q;
  }
  const double x2 = 1.0 - x1;
  const double z = 10.0;
  if (!modified) {
    const double l1 = z / 2 * (r1 - q1) - (r1 - 1);
    const double l2 = z / 2 * (r2 - q2) - (r2 - 1);
    const double rs = x1 * r1 + x2 * r2;
    const double qs = x1 * q1 + x2 * q2;
    // phi_i / x_i and theta_i / phi_i stay finite at x_i = 0.
    const double phx1 = r1 / rs, phx2 = r2 / rs;
    const double thph1 = (q1 / qs) / (r1 / rs), thph2 = (q2 / qs) / (r2 / rs);
    const double sum_xl = x1 * l1 + x2 * l2;
    return {std::log(phx1) + z / 2 * q1 * std::log(thph1) + l1 - phx1 * sum_xl,
            std::log(phx2) + z / 2 * q2 * std::log(thph2) + l2 - phx2 * sum_xl};
  }
  const double s34 = x1 * std::pow(r1, 0.75) + x2 * std::pow(r2, 0.75);
  const double sr = x1 * r1 + x2 * r2;
  const double sq = x1 * q1 + x2 * q2;
  auto term = [&](double r, double q) {
    const double Vp = std::pow(r, 0.75) / s34;
    const double V = r / sr;
    const double F = q / sq;
    return 1 - Vp + std::log(Vp) - z / 2 * q * (1 - V / F + std::log(V / F));
  };
  return {term(r1, q1), term(r2, q2)};
}

namespace {

// ln Gamma_k for a group mixture with mole numbers n_k.
std::vector<double> ln_big_gamma(const std::vector<Subgroup>& groups, const std::vector<double>& n,
                                 double T, const Energy& energy) {
  const std::size_t G = groups.size();
  const double total = std::accumulate(n.begin(), n.end(), 0.0);
  std::vector<double> X(G), theta(G);
  double qx = 0;
  for (std::size_t k = 0; k < G; ++k) {
    X[k] = n[k] / total;
    qx += groups[k].Q * X[k];
  }
  for (std::size_t k = 0; k < G; ++k) theta[k] = groups[k].Q * X[k] / qx;
  auto psi = [&](std::size_t m, std::size_t k) {
    return std::exp(-energy(groups[m].main, groups[k].main, T) / T);
  };
  std::vector<double> out(G);
  for (std::size_t k = 0; k < G; ++k) {
    double s1 = 0;
    for (std::size_t m = 0; m < G; ++m) s1 += theta[m] * psi(m, k);
    double s2 = 0;
    for (std::size_t m = 0; m < G; ++m) {
      double den = 0;
      for (std::size_t j = 0; j < G; ++j) den += theta[j] * psi(j, m);
      s2 += theta[m] * psi(k, m) / den;
    }
    out[k] = groups[k].Q * (1 - std::log(s1) - s2);
  }
  return out;
}

}  // namespace

std::pair<double, double> unifac_residual(const std::vector<Subgroup>& groups, double x1,
                                          double T, const Energy& energy) {
  const double x2 = 1.0 - x1;
  // ln Gamma_k stays finite for a group with zero mole fraction, so the
  // infinite-dilution ends need no special case.
  std::vector<double> n(groups.size());
  for (std::size_t k = 0; k < groups.size(); ++k)
    n[k] = x1 * groups[k].nu1 + x2 * groups[k].nu2;
  const auto lnG = ln_big_gamma(groups, n, T, energy);
  auto part = [&](bool first) {
    std::vector<Subgroup> own;
    std::vector<double> nu;
    std::vector<std::size_t> where;
    for (std::size_t k = 0; k < groups.size(); ++k) {
      const double c = first ? groups[k].nu1 : groups[k].nu2;
      if (c > 0) {
        own.push_back(groups[k]);
        nu.push_back(c);
        where.push_back(k);
      }
    }
    const auto lnGi = ln_big_gamma(own, nu, T, energy);
    double s = 0;
    for (std::size_t k = 0; k < own.size(); ++k) s += nu[k] * (lnG[where[k]] - lnGi[k]);
    return s;
  };
  return {part(true), part(false)};
}

std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi,
                               double step) {
  std::vector<double> roots;
  const auto n = static_cast<long>(std::llround((hi - lo) / step));
  double xa = lo, fa = f(lo);
  for (long i = 1; i <= n; ++i) {
    const double xb = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    const double fb = f(xb);
    if (fa == 0.0) roots.push_back(xa);
    else if (fa * fb < 0.0) roots.push_back(xa - fa * (xb - xa) / (fb - fa));
    xa = xb;
    fa = fb;
  }
  return roots;
}

Minimum nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                    std::vector<double> x0, std::vector<double> scale, int max_evals) {
  const std::size_t n = x0.size();
  Minimum best{x0, f(x0)};
  int evals = 1;
  for (int restart = 0; restart < 50 && evals < max_evals; ++restart) {
    std::vector<std::vector<double>> s(n + 1, best.x);
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i < n; ++i) s[i + 1][i] += scale[i];
    for (std::size_t i = 0; i <= n; ++i) fs[i] = f(s[i]);
    evals += static_cast<int>(n + 1);
    while (evals < max_evals) {
      std::vector<std::size_t> idx(n + 1);
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return fs[a] < fs[b]; });
      const auto lo = idx.front(), hi = idx.back(), nh = idx[n - 1];
      double size = 0;
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          size = std::max(size, std::abs(s[i][k] - s[lo][k]) / scale[k]);
      if (size < 1e-13) break;
      std::vector<double> c(n, 0.0);
      for (std::size_t i = 0; i <= n; ++i)
        if (i != hi)
          for (std::size_t k = 0; k < n; ++k) c[k] += s[i][k] / static_cast<double>(n);
      auto along = [&](double t) {
        std::vector<double> p(n);
        for (std::size_t k = 0; k < n; ++k) p[k] = c[k] + t * (s[hi][k] - c[k]);
        return p;
      };
      auto xr = along(-1.0);
      const double fr = f(xr);
      ++evals;
      if (fr < fs[lo]) {
        auto xe = along(-2.0);
        const double fe = f(xe);
        ++evals;
        if (fe < fr) s[hi] = xe, fs[hi] = fe;
        else s[hi] = xr, fs[hi] = fr;
      } else if (fr < fs[nh]) {
        s[hi] = xr, fs[hi] = fr;
      } else {
        auto xc = along(fr < fs[hi] ? -0.5 : 0.5);
        const double fc = f(xc);
        ++evals;
        if (fc < std::min(fr, fs[hi])) {
          s[hi] = xc, fs[hi] = fc;
        } else {
          for (std::size_t i = 0; i <= n; ++i) {
            if (i == lo) continue;
            for (std::size_t k = 0; k < n; ++k) s[i][k] = s[lo][k] + 0.5 * (s[i][k] - s[lo][k]);
            fs[i] = f(s[i]);
            ++evals;
          }
        }
      }
    }
    const auto it = std::min_element(fs.begin(), fs.end());
    const auto at = static_cast<std::size_t>(it - fs.begin());
    if (!(*it < best.f)) break;
    best = {s[at], *it};
    for (auto& sc : scale) sc *= 0.5;
  }
  return best;
}

}  // namespace oracle
