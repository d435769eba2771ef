#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "propkit/core/registry.hpp"

namespace propkit::api {

// Service and CLI configuration. Text format: one `key = value` per line,
// '#' starts a comment. Keys:
//
//   port, host
//   antoine_file           repeatable; consulted in file order
//   antoine_adapter        URL of a remote Antoine source, consulted last
//   activity_adapter       "<model-name> <URL>", repeatable
//   adapter_timeout_s
//   nrtl_file
//   unifac_groups, unifac_interactions
//   unifac_modified_groups, unifac_modified_interactions
//
// Environment overrides: PROPKIT_PORT, PROPKIT_ANTOINE_FILES (':'-separated),
// PROPKIT_NRTL_FILE, PROPKIT_UNIFAC_GROUPS, PROPKIT_UNIFAC_INTERACTIONS,
// PROPKIT_UNIFAC_MODIFIED_GROUPS, PROPKIT_UNIFAC_MODIFIED_INTERACTIONS.
struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::vector<std::string> antoine_files;
  std::optional<std::string> antoine_adapter;
  std::vector<std::pair<std::string, std::string>> activity_adapters;
  double adapter_timeout_s = 5.0;
  std::string nrtl_file;
  std::string nrtl_demo_file;
  std::string unifac_groups;
  std::string unifac_interactions;
  std::string unifac_modified_groups;
  std::string unifac_modified_interactions;
};

// Paths into the bundled data directory.
ServiceConfig default_config();

// Throws InvalidInput naming the offending line.
ServiceConfig parse_config(std::string_view text, ServiceConfig base = default_config());
ServiceConfig load_config(const std::string& path, ServiceConfig base = default_config());

// Reads the PROPKIT_* variables through `getenv`.
void apply_env_overrides(ServiceConfig& config,
                         const char* (*getenv)(const char*) = nullptr);

// Loads every table and wires the standard model families:
//   nrtl, nrtl-demo, unifac, unifac-modified, plus one entry per activity
//   adapter. Throws MalformedTable for unreadable tables.
ProviderRegistry build_registry(const ServiceConfig& config);

}  // namespace propkit::api
