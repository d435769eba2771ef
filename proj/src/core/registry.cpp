#include "propkit/core/registry.hpp"

#include <sstream>

#include "propkit/chem/canonical.hpp"
#include "propkit/chem/smiles.hpp"
#include "propkit/error.hpp"
#include "propkit/io/csv.hpp"

namespace propkit {
namespace {

const char* kModule = "core";

std::string canonical_or_throw(std::string_view smiles, const std::string& context) {
  try {
    return chem::canonical_smiles(smiles);
  } catch (const Error& e) {
    throw Error(Errc::MalformedTable, kModule, context + ": " + e.what());
  }
}

std::string row_context(const std::string& source, std::size_t line) {
  std::ostringstream os;
  os << source << ':' << line;
  return os.str();
}

}  // namespace

AntoineTable AntoineTable::parse(std::string_view csv, std::string name) {
  const auto table = io::parse_csv(csv);
  const auto c_smiles = table.require_column("smiles", name);
  const auto c_A = table.require_column("A", name);
  const auto c_B = table.require_column("B", name);
  const auto c_C = table.require_column("C", name);
  const auto c_lo = table.require_column("t_min_K", name);
  const auto c_hi = table.require_column("t_max_K", name);
  const auto c_unit = table.require_column("p_unit", name);

  AntoineTable out;
  out.name_ = std::move(name);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const auto ctx = row_context(out.name_, table.line_numbers[r]);
    const auto key = canonical_or_throw(row[c_smiles], ctx);
    try {
      auto set = AntoineParameterSet::create(
          io::parse_double(row[c_A], ctx), io::parse_double(row[c_B], ctx),
          io::parse_double(row[c_C], ctx), Kelvin{io::parse_double(row[c_lo], ctx)},
          Kelvin{io::parse_double(row[c_hi], ctx)}, parse_pressure_unit(row[c_unit]));
      if (!out.entries_.emplace(key, set).second)
        throw Error(Errc::MalformedTable, kModule, ctx + ": duplicate entry for " + key);
    } catch (const Error& e) {
      if (e.code() == Errc::MalformedTable) throw;
      throw Error(Errc::MalformedTable, kModule, ctx + ": " + e.what());
    }
  }
  return out;
}

AntoineTable AntoineTable::load(const std::string& path) { return parse(io::read_file(path), path); }

std::optional<AntoineParameterSet> AntoineTable::lookup(const Component& c) const {
  const auto it = entries_.find(c.canonical_smiles);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

NrtlPairTable NrtlPairTable::parse(std::string_view csv, std::string name) {
  const auto table = io::parse_csv(csv);
  const auto c1 = table.require_column("smiles1", name);
  const auto c2 = table.require_column("smiles2", name);
  const auto cv = table.require_column("variant", name);
  std::array<std::size_t, 10> slot_cols{};
  for (std::size_t k = 0; k < slot_cols.size(); ++k)
    slot_cols[k] = table.require_column(activity::kNrtlSlotNames[k], name);

  NrtlPairTable out;
  out.name_ = std::move(name);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const auto ctx = row_context(out.name_, table.line_numbers[r]);
    auto k1 = canonical_or_throw(row[c1], ctx);
    auto k2 = canonical_or_throw(row[c2], ctx);
    std::array<double, 10> slots{};
    for (std::size_t k = 0; k < slots.size(); ++k) slots[k] = io::parse_double(row[slot_cols[k]], ctx);
    activity::NrtlParameterSet params;
    try {
      params = activity::NrtlParameterSet::from_slots(
          slots, activity::nrtl_variant_from_int(io::parse_int(row[cv], ctx)));
      params.validate();
    } catch (const Error& e) {
      if (e.code() == Errc::MalformedTable) throw;
      throw Error(Errc::MalformedTable, kModule, ctx + ": " + e.what());
    }
    if (k1 == k2) throw Error(Errc::MalformedTable, kModule, ctx + ": pair of identical components");
    if (out.entries_.contains({k2, k1}) || !out.entries_.emplace(std::pair{k1, k2}, params).second)
      throw Error(Errc::MalformedTable, kModule, ctx + ": duplicate pair " + k1 + " / " + k2);
  }
  return out;
}

NrtlPairTable NrtlPairTable::load(const std::string& path) { return parse(io::read_file(path), path); }

std::optional<activity::NrtlParameterSet> NrtlPairTable::lookup(const std::string& k1,
                                                                const std::string& k2) const {
  if (auto it = entries_.find({k1, k2}); it != entries_.end()) return it->second;
  if (auto it = entries_.find({k2, k1}); it != entries_.end()) return it->second.swapped();
  return std::nullopt;
}

void ProviderRegistry::add_antoine_source(std::shared_ptr<const AntoineSource> source) {
  antoine_sources_.push_back(std::move(source));
}

void ProviderRegistry::add_activity_model(std::string name, std::string description,
                                          ActivityFactory factory) {
  for (auto& [info, f] : activity_models_) {
    if (info.name == name) {
      info.description = std::move(description);
      f = std::move(factory);
      return;
    }
  }
  activity_models_.push_back({ModelInfo{std::move(name), std::move(description)}, std::move(factory)});
}

void ProviderRegistry::set_group_table(std::shared_ptr<const activity::UnifacParameterTable> table) {
  group_table_ = std::move(table);
}

std::vector<ModelInfo> ProviderRegistry::activity_models() const {
  std::vector<ModelInfo> out;
  for (const auto& [info, f] : activity_models_) out.push_back(info);
  return out;
}

const ActivityFactory* ProviderRegistry::find_activity_model(std::string_view name) const {
  for (const auto& [info, f] : activity_models_)
    if (info.name == name) return &f;
  return nullptr;
}

Component register_component(std::string_view smiles, const ProviderRegistry& registry) {
  if (smiles.empty()) throw Error(Errc::InvalidSmiles, "chem", "SMILES is empty", 0);
  Component c;
  c.input_smiles = std::string(smiles);
  chem::ParsedSmiles parsed;
  try {
    parsed = chem::parse_smiles(smiles);
  } catch (const Error& e) {
    throw Error(Errc::InvalidSmiles, e.module(), e.what(), e.offset());
  }
  c.canonical_smiles = chem::canonicalize(parsed.graph);

  if (const auto* table = registry.group_table()) {
    try {
      c.groups = activity::decompose_groups(parsed.graph, *table);
    } catch (const Error& e) {
      if (e.code() != Errc::DecompositionFailed) throw;
    }
  }
  for (const auto& source : registry.antoine_sources()) {
    try {
      if (auto set = source->lookup(c)) {
        c.antoine = *set;
        break;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::RemoteUnavailable && e.code() != Errc::ContractViolation) throw;
    }
  }
  return c;
}

AntoineParameterSet resolve_antoine(const Component& c, const ProviderRegistry& registry) {
  if (c.antoine) return *c.antoine;
  std::vector<std::string> skipped;
  for (const auto& source : registry.antoine_sources()) {
    try {
      if (auto set = source->lookup(c)) return *set;
    } catch (const Error& e) {
      if (e.code() != Errc::RemoteUnavailable && e.code() != Errc::ContractViolation) throw;
      skipped.push_back(source->name() + " (" + std::string(to_string(e.code())) + ")");
    }
  }
  std::string msg = "no Antoine parameters for " + c.canonical_smiles;
  if (!skipped.empty()) {
    msg += "; unavailable sources:";
    for (const auto& s : skipped) msg += " " + s;
  }
  throw Error(Errc::NotCovered, kModule, msg);
}

std::shared_ptr<const activity::ActivityModel> resolve_activity_model(
    std::string_view name, const Component& c1, const Component& c2,
    const ProviderRegistry& registry) {
  const auto* factory = registry.find_activity_model(name);
  if (!factory) {
    std::string msg = "unknown activity model '" + std::string(name) + "'; available:";
    for (const auto& m : registry.activity_models()) msg += " " + m.name;
    throw Error(Errc::UnknownModel, kModule, msg);
  }
  return (*factory)(c1, c2);
}

ActivityFactory nrtl_factory(std::shared_ptr<const NrtlPairTable> table, std::string model_name) {
  return [table = std::move(table), model_name = std::move(model_name)](
             const Component& c1, const Component& c2) -> std::shared_ptr<const activity::ActivityModel> {
    auto params = table->lookup(c1.canonical_smiles, c2.canonical_smiles);
    if (!params)
      throw Error(Errc::NotCovered, kModule,
                  "no " + model_name + " parameters for " + c1.canonical_smiles + " / " +
                      c2.canonical_smiles);
    return std::make_shared<activity::NrtlModel>(*params, model_name);
  };
}

ActivityFactory unifac_factory(std::shared_ptr<const activity::UnifacParameterTable> table,
                               std::string model_name) {
  return [table = std::move(table), model_name = std::move(model_name)](
             const Component& c1, const Component& c2) -> std::shared_ptr<const activity::ActivityModel> {
    for (const auto* c : {&c1, &c2})
      if (!c->groups || c->groups->empty())
        throw Error(Errc::DecompositionRequired, kModule,
                    model_name + " needs a group decomposition of " + c->canonical_smiles);
    return std::make_shared<activity::UnifacModel>(table, *c1.groups, *c2.groups, model_name);
  };
}

}  // namespace propkit
