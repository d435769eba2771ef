#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "propkit/activity/model.hpp"
#include "propkit/core/registry.hpp"

namespace propkit::api {

// External model protocol: JSON over HTTP POST.
//
//   Antoine request   {"smiles": ["CCO"]}
//   Antoine response  {"A":..,"B":..,"C":..,"t_min_K":..,"t_max_K":..,"p_unit":"Pa|kPa|bar"}
//                     (HTTP 404 when the component is not covered)
//   Activity request  {"smiles": ["CCCCCC","CCO"], "T_K": 350.0, "x1_grid": [...]}
//   Activity response {"ln_gamma1": [...], "ln_gamma2": [...]}
//
// Responses are checked like native model output and rejected with
// ContractViolation when they break an invariant; transport failures and
// 5xx answers raise RemoteUnavailable.

inline constexpr double kNormalizationTol = 1e-10;

struct Url {
  std::string scheme_host_port;  // e.g. "http://127.0.0.1:9000"
  std::string path;              // e.g. "/antoine"
};

// Throws InvalidInput for anything but http://host[:port][/path].
Url parse_url(const std::string& url);

class RemoteAntoineSource final : public AntoineSource {
 public:
  RemoteAntoineSource(std::string url, double timeout_s = 5.0);
  std::string name() const override { return url_; }
  std::optional<AntoineParameterSet> lookup(const Component& c) const override;

 private:
  std::string url_;
  Url parsed_;
  double timeout_s_;
};

class RemoteActivityModel final : public activity::ActivityModel {
 public:
  RemoteActivityModel(std::string url, std::string model_name, std::string smiles1,
                      std::string smiles2, double timeout_s = 5.0);

  std::string name() const override { return name_; }
  activity::LnGamma ln_gamma(double x1, Kelvin T) const override;
  // One request for the whole grid.
  std::vector<activity::LnGamma> ln_gamma_grid(std::span<const double> x1,
                                               Kelvin T) const override;

 private:
  Url parsed_;
  std::string name_;
  std::string smiles1_;
  std::string smiles2_;
  double timeout_s_;
};

// Validates a remote activity answer against the requested grid.
std::vector<activity::LnGamma> validate_activity_response(const std::string& body,
                                                          std::span<const double> x1);

// Validates a remote Antoine answer.
AntoineParameterSet validate_antoine_response(const std::string& body);

ActivityFactory remote_activity_factory(std::string url, std::string model_name,
                                        double timeout_s = 5.0);

}  // namespace propkit::api
