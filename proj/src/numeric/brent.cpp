#include "propkit/numeric/brent.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_roots.h>

#include <cmath>
#include <exception>
#include <memory>
#include <mutex>

namespace propkit::numeric {
namespace {

struct Callback {
  const std::function<double(double)>* f;
  std::exception_ptr error;
};

// GSL is C: exceptions must not cross its frames.
double trampoline(double x, void* data) {
  auto* cb = static_cast<Callback*>(data);
  if (cb->error) return std::nan("");
  try {
    return (*cb->f)(x);
  } catch (...) {
    cb->error = std::current_exception();
    return std::nan("");
  }
}

struct SolverDeleter {
  void operator()(gsl_root_fsolver* s) const { gsl_root_fsolver_free(s); }
};

}  // namespace

std::optional<RootResult> brent_root(const std::function<double(double)>& f, double a, double b,
                                     double x_tol, int max_iter) {
  static std::once_flag quiet;
  std::call_once(quiet, [] { gsl_set_error_handler_off(); });

  const double fa = f(a);
  const double fb = f(b);
  if (!std::isfinite(fa) || !std::isfinite(fb)) return std::nullopt;
  if (fa == 0.0) return RootResult{a, 0, true};
  if (fb == 0.0) return RootResult{b, 0, true};
  if ((fa > 0.0) == (fb > 0.0)) return std::nullopt;

  Callback cb{&f, nullptr};
  gsl_function fn{&trampoline, &cb};
  std::unique_ptr<gsl_root_fsolver, SolverDeleter> solver(
      gsl_root_fsolver_alloc(gsl_root_fsolver_brent));
  if (a > b) std::swap(a, b);
  if (gsl_root_fsolver_set(solver.get(), &fn, a, b) != GSL_SUCCESS) {
    if (cb.error) std::rethrow_exception(cb.error);
    return std::nullopt;
  }
  for (int iter = 1; iter <= max_iter; ++iter) {
    const int status = gsl_root_fsolver_iterate(solver.get());
    if (cb.error) std::rethrow_exception(cb.error);
    if (status != GSL_SUCCESS) return std::nullopt;
    const double x = gsl_root_fsolver_root(solver.get());
    const double lo = gsl_root_fsolver_x_lower(solver.get());
    const double hi = gsl_root_fsolver_x_upper(solver.get());
    if (gsl_root_test_interval(lo, hi, x_tol, 0.0) == GSL_SUCCESS || lo == hi)
      return RootResult{x, iter, true};
  }
  return RootResult{gsl_root_fsolver_root(solver.get()), max_iter, false};
}

}  // namespace propkit::numeric
