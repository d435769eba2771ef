#pragma once

// Reference implementations used as test oracles. None of these call into
// the library's model code; they are written straight from the textbook
// formulas so that agreement means two independent derivations agree.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

double antoine_pa(double A, double B, double C, double T);

// Renon NRTL for constant tau/alpha.
std::pair<double, double> nrtl(double tau12, double tau21, double alpha, double x1);

struct Subgroup {
  int main = 0;
  double R = 0.0;
  double Q = 0.0;
  double nu1 = 0.0;  // occurrences in component 1
  double nu2 = 0.0;  // occurrences in component 2
};

// a(m, n) + b(m, n) T + c(m, n) T^2 for main groups m acting on n.
using Energy = std::function<double(int m, int n, double T)>;

// Staverman-Guggenheim with the l_i form (original) or the r^(3/4) form
// (modified), z = 10.
std::pair<double, double> unifac_combinatorial(const std::vector<Subgroup>& groups, double x1,
                                               bool modified);

// Solution-of-groups residual written out with explicit sums.
std::pair<double, double> unifac_residual(const std::vector<Subgroup>& groups, double x1,
                                          double T, const Energy& energy);

// Scans f on a uniform grid of spacing `step` over [lo, hi] and returns every
// sign change, located by linear interpolation inside the bracketing cell.
std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi,
                               double step);

// Downhill simplex with restarts until a restart no longer improves.
struct Minimum {
  std::vector<double> x;
  double f = 0.0;
};
Minimum nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                    std::vector<double> x0, std::vector<double> scale, int max_evals = 200000);

}  // namespace oracle
