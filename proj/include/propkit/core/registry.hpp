#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "propkit/activity/model.hpp"
#include "propkit/activity/nrtl.hpp"
#include "propkit/activity/unifac.hpp"
#include "propkit/core/types.hpp"

namespace propkit {

// Anything that can supply Antoine parameters for a component.
class AntoineSource {
 public:
  virtual ~AntoineSource() = default;
  virtual std::string name() const = 0;
  // nullopt when the source does not cover the component. Remote sources
  // throw RemoteUnavailable / ContractViolation.
  virtual std::optional<AntoineParameterSet> lookup(const Component& c) const = 0;
};

// File-backed Antoine parameters keyed by canonical SMILES.
// Columns: smiles,A,B,C,t_min_K,t_max_K,p_unit
class AntoineTable final : public AntoineSource {
 public:
  static AntoineTable parse(std::string_view csv, std::string name);
  static AntoineTable load(const std::string& path);

  std::string name() const override { return name_; }
  std::optional<AntoineParameterSet> lookup(const Component& c) const override;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::string name_;
  std::map<std::string, AntoineParameterSet> entries_;
};

// Stored binary NRTL parameters keyed by the canonical pair.
// Columns: smiles1,smiles2,variant,a12,a21,b12,b21,e12,e21,f12,f21,c12,d12
// A pair stored in the opposite order is returned swapped.
class NrtlPairTable {
 public:
  static NrtlPairTable parse(std::string_view csv, std::string name);
  static NrtlPairTable load(const std::string& path);

  std::optional<activity::NrtlParameterSet> lookup(const std::string& canonical1,
                                                   const std::string& canonical2) const;
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  std::map<std::pair<std::string, std::string>, activity::NrtlParameterSet> entries_;
};

using ActivityFactory = std::function<std::shared_ptr<const activity::ActivityModel>(
    const Component&, const Component&)>;

struct ModelInfo {
  std::string name;
  std::string description;
};

// Ordered Antoine sources and named activity-model constructors. Populated
// during startup, read-only afterwards.
class ProviderRegistry {
 public:
  void add_antoine_source(std::shared_ptr<const AntoineSource> source);
  void add_activity_model(std::string name, std::string description, ActivityFactory factory);
  // Table whose group patterns decompose registered components.
  void set_group_table(std::shared_ptr<const activity::UnifacParameterTable> table);

  const std::vector<std::shared_ptr<const AntoineSource>>& antoine_sources() const noexcept {
    return antoine_sources_;
  }
  std::vector<ModelInfo> activity_models() const;
  const ActivityFactory* find_activity_model(std::string_view name) const;
  const activity::UnifacParameterTable* group_table() const noexcept { return group_table_.get(); }

 private:
  std::vector<std::shared_ptr<const AntoineSource>> antoine_sources_;
  std::vector<std::pair<ModelInfo, ActivityFactory>> activity_models_;
  std::shared_ptr<const activity::UnifacParameterTable> group_table_;
};

// Validates and canonicalizes `smiles`, then fills groups and Antoine
// parameters where the registry resolves them. Throws InvalidSmiles with the
// parser's byte offset.
Component register_component(std::string_view smiles, const ProviderRegistry& registry);

// First source that covers the component wins. Throws NotCovered.
AntoineParameterSet resolve_antoine(const Component& c, const ProviderRegistry& registry);

// Throws UnknownModel, or whatever the factory raises (NotCovered,
// DecompositionRequired, ...).
std::shared_ptr<const activity::ActivityModel> resolve_activity_model(
    std::string_view name, const Component& c1, const Component& c2,
    const ProviderRegistry& registry);

ActivityFactory nrtl_factory(std::shared_ptr<const NrtlPairTable> table, std::string model_name);
ActivityFactory unifac_factory(std::shared_ptr<const activity::UnifacParameterTable> table,
                               std::string model_name);

}  // namespace propkit
