#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "propkit/activity/model.hpp"
#include "propkit/chem/groups.hpp"
#include "propkit/core/types.hpp"
#include "propkit/units.hpp"

namespace propkit::activity {

namespace detail {
struct UnifacPrepared;
}

enum class UnifacVariant { original, modified };

std::string_view to_string(UnifacVariant v) noexcept;

struct UnifacGroup {
  int id = 0;
  std::string name;
  int main_group = 0;
  // NaN marks a value missing from the table.
  double R = 0.0;
  double Q = 0.0;
  std::string pattern;
  int priority = 0;
};

// a in K for the original method; the modified (Dortmund) method uses
// a + b T + c T^2 in the exponent numerator.
struct UnifacInteraction {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// Group volumes/areas and directional main-group interaction parameters.
//
// File format: groups.csv with columns id,name,main,R,Q[,pattern,priority]
// and interactions.csv with columns main_m,main_n,a[,b,c]. A pair that is not
// listed is a gap; gaps are reported, never read as zero.
class UnifacParameterTable {
 public:
  UnifacParameterTable(UnifacVariant variant, std::vector<UnifacGroup> groups,
                       std::map<std::pair<int, int>, UnifacInteraction> interactions);

  // Throws Error{MalformedTable}.
  static UnifacParameterTable parse(std::string_view groups_csv,
                                    std::string_view interactions_csv,
                                    UnifacVariant variant);
  static UnifacParameterTable load(const std::string& groups_path,
                                   const std::string& interactions_path,
                                   UnifacVariant variant);

  UnifacVariant variant() const noexcept { return variant_; }
  const UnifacGroup* find_group(int id) const;
  const std::vector<UnifacGroup>& groups() const noexcept { return groups_; }

  // Interaction of main group m on n. Identical main groups interact with
  // zero energy; nullopt is a table gap.
  std::optional<UnifacInteraction> interaction(int m, int n) const;

  // Pattern definitions for chem::decompose_groups.
  std::vector<chem::GroupDefinition> group_definitions() const;

 private:
  UnifacVariant variant_;
  std::vector<UnifacGroup> groups_;
  std::map<std::pair<int, int>, UnifacInteraction> interactions_;
};

// Decomposes a molecular graph with the patterns shipped in `table`.
chem::GroupAssignment decompose_groups(const chem::MolecularGraph& graph,
                                       const UnifacParameterTable& table);

// Combinatorial part, z = 10. The modified variant uses r^(3/4) in the
// volume-fraction term. Throws MissingGroupData for unknown groups or
// missing R/Q.
LnGamma unifac_combinatorial(const GroupCounts& groups1, const GroupCounts& groups2,
                             const UnifacParameterTable& table, double x1);

// Residual part by the solution-of-groups construction. Throws ParameterGap
// naming the first missing main-group pair, MissingGroupData as above.
LnGamma unifac_residual(const GroupCounts& groups1, const GroupCounts& groups2,
                        const UnifacParameterTable& table, double x1, Kelvin T);

class UnifacModel final : public ActivityModel {
 public:
  // Validates group data and interaction coverage up front.
  UnifacModel(std::shared_ptr<const UnifacParameterTable> table, GroupCounts groups1,
              GroupCounts groups2, std::string name);

  std::string name() const override { return name_; }
  LnGamma ln_gamma(double x1, Kelvin T) const override;

  const UnifacParameterTable& table() const noexcept { return *table_; }

 private:
  std::shared_ptr<const UnifacParameterTable> table_;
  GroupCounts groups1_;
  GroupCounts groups2_;
  std::string name_;
  std::shared_ptr<const detail::UnifacPrepared> prepared_;
};

}  // namespace propkit::activity
