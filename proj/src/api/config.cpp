#include "propkit/api/config.hpp"

#include <cstdlib>
#include <sstream>

#include "propkit/api/adapter.hpp"
#include "propkit/error.hpp"
#include "propkit/io/csv.hpp"

namespace propkit::api {
namespace {

const char* kModule = "api";

[[noreturn]] void bad_line(std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << "config line " << line << ": " << what;
  throw Error(Errc::InvalidInput, kModule, os.str());
}

const char* default_getenv(const char* name) { return std::getenv(name); }

}  // namespace

ServiceConfig default_config() {
  const std::string data = PROPKIT_DATA_DIR;
  ServiceConfig c;
  c.antoine_files = {data + "/antoine_demo.csv"};
  c.nrtl_file = data + "/nrtl_demo.csv";
  c.nrtl_demo_file = data + "/nrtl_demo.csv";
  c.unifac_groups = data + "/unifac/original/groups.csv";
  c.unifac_interactions = data + "/unifac/original/interactions.csv";
  c.unifac_modified_groups = data + "/unifac/modified/groups.csv";
  c.unifac_modified_interactions = data + "/unifac/modified/interactions.csv";
  return c;
}

ServiceConfig parse_config(std::string_view text, ServiceConfig c) {
  bool antoine_seen = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = io::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) bad_line(line_no, "expected key = value");
    const std::string key(io::trim(line.substr(0, eq)));
    const std::string value(io::trim(line.substr(eq + 1)));
    if (value.empty()) bad_line(line_no, "empty value for " + key);

    try {
      if (key == "port") {
        c.port = io::parse_int(value, "port");
      } else if (key == "host") {
        c.host = value;
      } else if (key == "antoine_file") {
        if (!antoine_seen) c.antoine_files.clear();
        antoine_seen = true;
        c.antoine_files.push_back(value);
      } else if (key == "antoine_adapter") {
        c.antoine_adapter = value;
      } else if (key == "activity_adapter") {
        const auto space = value.find_first_of(" \t");
        if (space == std::string::npos) bad_line(line_no, "activity_adapter needs '<name> <url>'");
        c.activity_adapters.emplace_back(value.substr(0, space),
                                         std::string(io::trim(std::string_view(value).substr(space))));
      } else if (key == "adapter_timeout_s") {
        c.adapter_timeout_s = io::parse_double(value, "adapter_timeout_s");
      } else if (key == "nrtl_file") {
        c.nrtl_file = value;
      } else if (key == "unifac_groups") {
        c.unifac_groups = value;
      } else if (key == "unifac_interactions") {
        c.unifac_interactions = value;
      } else if (key == "unifac_modified_groups") {
        c.unifac_modified_groups = value;
      } else if (key == "unifac_modified_interactions") {
        c.unifac_modified_interactions = value;
      } else {
        bad_line(line_no, "unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::MalformedTable) bad_line(line_no, e.what());
      throw;
    }
  }
  if (c.port < 0 || c.port > 65535) throw Error(Errc::InvalidInput, kModule, "port out of range");
  return c;
}

ServiceConfig load_config(const std::string& path, ServiceConfig base) {
  return parse_config(io::read_file(path), std::move(base));
}

void apply_env_overrides(ServiceConfig& c, const char* (*getenv)(const char*)) {
  if (!getenv) getenv = default_getenv;
  auto str = [&](const char* name, std::string& target) {
    if (const char* v = getenv(name); v && *v) target = v;
  };
  if (const char* v = getenv("PROPKIT_PORT"); v && *v) c.port = io::parse_int(v, "PROPKIT_PORT");
  if (const char* v = getenv("PROPKIT_ANTOINE_FILES"); v && *v) {
    c.antoine_files.clear();
    for (auto part : io::split(v, ':'))
      if (!part.empty()) c.antoine_files.emplace_back(part);
  }
  str("PROPKIT_NRTL_FILE", c.nrtl_file);
  str("PROPKIT_UNIFAC_GROUPS", c.unifac_groups);
  str("PROPKIT_UNIFAC_INTERACTIONS", c.unifac_interactions);
  str("PROPKIT_UNIFAC_MODIFIED_GROUPS", c.unifac_modified_groups);
  str("PROPKIT_UNIFAC_MODIFIED_INTERACTIONS", c.unifac_modified_interactions);
}

ProviderRegistry build_registry(const ServiceConfig& c) {
  ProviderRegistry r;
  for (const auto& path : c.antoine_files)
    r.add_antoine_source(std::make_shared<AntoineTable>(AntoineTable::load(path)));
  if (c.antoine_adapter)
    r.add_antoine_source(std::make_shared<RemoteAntoineSource>(*c.antoine_adapter, c.adapter_timeout_s));

  auto original = std::make_shared<activity::UnifacParameterTable>(activity::UnifacParameterTable::load(
      c.unifac_groups, c.unifac_interactions, activity::UnifacVariant::original));
  auto modified = std::make_shared<activity::UnifacParameterTable>(activity::UnifacParameterTable::load(
      c.unifac_modified_groups, c.unifac_modified_interactions, activity::UnifacVariant::modified));
  r.set_group_table(original);

  r.add_activity_model("nrtl", "NRTL with stored binary parameters",
                       nrtl_factory(std::make_shared<NrtlPairTable>(NrtlPairTable::load(c.nrtl_file)), "nrtl"));
  r.add_activity_model(
      "nrtl-demo", "NRTL demonstration surrogates bundled with the library",
      nrtl_factory(std::make_shared<NrtlPairTable>(NrtlPairTable::load(c.nrtl_demo_file)), "nrtl-demo"));
  r.add_activity_model("unifac", "UNIFAC (original), bundled demonstration table",
                       unifac_factory(original, "unifac"));
  r.add_activity_model("unifac-modified", "modified UNIFAC (Dortmund), bundled demonstration table",
                       unifac_factory(modified, "unifac-modified"));
  for (const auto& [name, url] : c.activity_adapters)
    r.add_activity_model(name, "external activity model at " + url,
                         remote_activity_factory(url, name, c.adapter_timeout_s));
  return r;
}

}  // namespace propkit::api
