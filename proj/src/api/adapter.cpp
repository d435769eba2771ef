#include "propkit/api/adapter.hpp"

#include <cmath>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "propkit/error.hpp"

namespace propkit::api {
namespace {

using nlohmann::json;
const char* kModule = "adapter";

[[noreturn]] void contract(const std::string& what) {
  throw Error(Errc::ContractViolation, kModule, "remote response rejected: " + what);
}

struct Reply {
  int status;
  std::string body;
};

Reply post(const Url& url, const json& request, double timeout_s) {
  httplib::Client client(url.scheme_host_port);
  const auto sec = static_cast<time_t>(timeout_s);
  const auto usec = static_cast<time_t>((timeout_s - static_cast<double>(sec)) * 1e6);
  client.set_connection_timeout(sec, usec);
  client.set_read_timeout(sec, usec);
  client.set_write_timeout(sec, usec);
  auto res = client.Post(url.path, request.dump(), "application/json");
  if (!res) {
    throw Error(Errc::RemoteUnavailable, kModule,
                url.scheme_host_port + url.path + " unreachable: " + httplib::to_string(res.error()));
  }
  if (res->status >= 500) {
    std::ostringstream os;
    os << url.scheme_host_port << url.path << " answered HTTP " << res->status;
    throw Error(Errc::RemoteUnavailable, kModule, os.str());
  }
  return {res->status, res->body};
}

json parse_body(const std::string& body) {
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    contract(std::string("not valid JSON (") + e.what() + ")");
  }
}

double finite_number(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number()) contract(std::string("missing number '") + field + "'");
  const double v = j[field].get<double>();
  if (!std::isfinite(v)) contract(std::string("'") + field + "' is not finite");
  return v;
}

std::vector<double> number_array(const json& j, const char* field, std::size_t n) {
  if (!j.contains(field) || !j[field].is_array()) contract(std::string("missing array '") + field + "'");
  const auto& a = j[field];
  if (a.size() != n) {
    std::ostringstream os;
    os << "'" << field << "' has " << a.size() << " entries, grid has " << n;
    contract(os.str());
  }
  std::vector<double> out;
  out.reserve(n);
  for (const auto& v : a) {
    if (!v.is_number()) contract(std::string("'") + field + "' holds a non-number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) contract(std::string("'") + field + "' holds a non-finite value");
    out.push_back(d);
  }
  return out;
}

}  // namespace

Url parse_url(const std::string& url) {
  const std::string prefix = "http://";
  if (url.rfind(prefix, 0) != 0 || url.size() == prefix.size())
    throw Error(Errc::InvalidInput, kModule, "adapter URL must start with http://: " + url);
  const auto slash = url.find('/', prefix.size());
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

AntoineParameterSet validate_antoine_response(const std::string& body) {
  const auto j = parse_body(body);
  if (!j.is_object()) contract("expected a JSON object");
  const double A = finite_number(j, "A");
  const double B = finite_number(j, "B");
  const double C = finite_number(j, "C");
  const double lo = finite_number(j, "t_min_K");
  const double hi = finite_number(j, "t_max_K");
  if (!j.contains("p_unit") || !j["p_unit"].is_string()) contract("missing string 'p_unit'");
  try {
    return AntoineParameterSet::create(A, B, C, Kelvin{lo}, Kelvin{hi},
                                       parse_pressure_unit(j["p_unit"].get<std::string>()));
  } catch (const Error& e) {
    contract(e.what());
  }
}

std::vector<activity::LnGamma> validate_activity_response(const std::string& body,
                                                          std::span<const double> x1) {
  const auto j = parse_body(body);
  if (!j.is_object()) contract("expected a JSON object");
  const auto g1 = number_array(j, "ln_gamma1", x1.size());
  const auto g2 = number_array(j, "ln_gamma2", x1.size());
  std::vector<activity::LnGamma> out(x1.size());
  for (std::size_t i = 0; i < x1.size(); ++i) {
    if (x1[i] == 1.0 && std::abs(g1[i]) > kNormalizationTol) {
      std::ostringstream os;
      os << "ln_gamma1 at x1 = 1 is " << g1[i] << ", must be 0";
      contract(os.str());
    }
    if (x1[i] == 0.0 && std::abs(g2[i]) > kNormalizationTol) {
      std::ostringstream os;
      os << "ln_gamma2 at x1 = 0 is " << g2[i] << ", must be 0";
      contract(os.str());
    }
    out[i] = {g1[i], g2[i]};
  }
  return out;
}

RemoteAntoineSource::RemoteAntoineSource(std::string url, double timeout_s)
    : url_(std::move(url)), parsed_(parse_url(url_)), timeout_s_(timeout_s) {}

std::optional<AntoineParameterSet> RemoteAntoineSource::lookup(const Component& c) const {
  const auto reply = post(parsed_, json{{"smiles", json::array({c.canonical_smiles})}}, timeout_s_);
  if (reply.status == 404) return std::nullopt;
  if (reply.status != 200) {
    std::ostringstream os;
    os << "unexpected HTTP status " << reply.status;
    contract(os.str());
  }
  return validate_antoine_response(reply.body);
}

RemoteActivityModel::RemoteActivityModel(std::string url, std::string model_name,
                                         std::string smiles1, std::string smiles2, double timeout_s)
    : parsed_(parse_url(url)),
      name_(std::move(model_name)),
      smiles1_(std::move(smiles1)),
      smiles2_(std::move(smiles2)),
      timeout_s_(timeout_s) {}

activity::LnGamma RemoteActivityModel::ln_gamma(double x1, Kelvin T) const {
  const double grid[1] = {x1};
  return ln_gamma_grid(grid, T).front();
}

std::vector<activity::LnGamma> RemoteActivityModel::ln_gamma_grid(std::span<const double> x1,
                                                                  Kelvin T) const {
  json request{{"smiles", json::array({smiles1_, smiles2_})},
               {"T_K", T.value},
               {"x1_grid", std::vector<double>(x1.begin(), x1.end())}};
  const auto reply = post(parsed_, request, timeout_s_);
  if (reply.status == 404)
    throw Error(Errc::NotCovered, kModule, name_ + " does not cover " + smiles1_ + " / " + smiles2_);
  if (reply.status != 200) {
    std::ostringstream os;
    os << "unexpected HTTP status " << reply.status;
    contract(os.str());
  }
  return validate_activity_response(reply.body, x1);
}

ActivityFactory remote_activity_factory(std::string url, std::string model_name, double timeout_s) {
  parse_url(url);
  return [url = std::move(url), model_name = std::move(model_name), timeout_s](
             const Component& c1, const Component& c2) -> std::shared_ptr<const activity::ActivityModel> {
    return std::make_shared<RemoteActivityModel>(url, model_name, c1.canonical_smiles,
                                                 c2.canonical_smiles, timeout_s);
  };
}

}  // namespace propkit::api
