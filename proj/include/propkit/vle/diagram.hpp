#pragma once

#include <optional>
#include <string>
#include <vector>

#include "propkit/core/types.hpp"
#include "propkit/error.hpp"
#include "propkit/vle/equilibrium.hpp"

namespace propkit::vle {

inline constexpr std::size_t kDiagramPoints = 101;

enum class Verdict { pass, fail, not_applicable };

std::string_view to_string(Verdict v) noexcept;

struct ConsistencyReport {
  Verdict merge_at_pure = Verdict::pass;
  double merge_residual_x0 = 0.0;  // relative gap between the lines at x1 = 0
  double merge_residual_x1 = 0.0;  // and at x1 = 1

  Verdict slope_sign_agreement = Verdict::pass;
  std::optional<double> slope_violation_at;

  Verdict ordering = Verdict::pass;
  std::optional<double> ordering_violation_at;

  Verdict azeotrope_coincidence = Verdict::not_applicable;
  std::optional<double> coincidence_violation_at;

  bool passed() const noexcept;
  // Names of the failed checks, in report order.
  std::vector<std::string> failures() const;
};

// Both coexisting states at an azeotrope: the bubble solve at x1 = x_az and
// the dew solve at y1 = x_az.
struct Azeotrope {
  EquilibriumPoint bubble;
  EquilibriumPoint dew;
};

struct VleDiagram {
  StateMode mode = StateMode::isothermal;
  double fixed_value = 0.0;  // T in K or p in Pa
  std::vector<EquilibriumPoint> bubble;  // keyed by x1 on the 0.01 grid
  std::vector<EquilibriumPoint> dew;     // keyed by y1 on the 0.01 grid
  std::vector<Azeotrope> azeotropes;     // ascending composition
  ConsistencyReport consistency;

  // The first azeotrope, if any.
  std::optional<EquilibriumPoint> azeotrope() const;
};

// Thrown by finalize_diagram / build_diagram when a check fails. The diagram
// itself is not attached.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(ConsistencyReport report);
  const ConsistencyReport& report() const noexcept { return report_; }

 private:
  ConsistencyReport report_;
};

// Bubble and dew lines plus azeotrope search, consistency evaluated but not
// enforced. Point failures are aggregated into one PointFailures error.
VleDiagram compute_diagram(const StateSpec& spec, const BinarySystem& system,
                           const SolverOptions& options = {});

// Re-runs check_consistency and returns the diagram only if it passes.
VleDiagram finalize_diagram(VleDiagram diagram);

VleDiagram build_diagram(const StateSpec& spec, const BinarySystem& system,
                         const SolverOptions& options = {});

// Sign changes of gamma1 p1s - gamma2 p2s along a computed bubble line, each
// refined by bisection on x1 to 1e-8.
std::vector<Azeotrope> detect_azeotropes(const StateSpec& spec, const BinarySystem& system,
                                         const std::vector<EquilibriumPoint>& bubble,
                                         const SolverOptions& options = {});

std::optional<Azeotrope> detect_azeotrope(const StateSpec& spec, const BinarySystem& system,
                                          const std::vector<EquilibriumPoint>& bubble,
                                          const SolverOptions& options = {});

ConsistencyReport check_consistency(const VleDiagram& diagram);

}  // namespace propkit::vle
