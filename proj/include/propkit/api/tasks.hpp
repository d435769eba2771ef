#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "propkit/core/registry.hpp"
#include "propkit/error.hpp"

namespace propkit::api {

// The request handlers shared by the HTTP service and the CLI. Both front
// ends build the same JSON request and print the returned body unchanged,
// so their outputs are byte-identical.
//
// Request fields (unknown fields are ignored):
//   validate_smiles      smiles: string
//   vapor_pressure       smiles: string, T_K
//   boiling_temperature  smiles: string, p_Pa
//   activity             smiles: [s1, s2], model, T_K, dx (default 0.01)
//   vle                  smiles: [s1, s2], model, exactly one of T_K / p_Pa
//   fit_nrtl             smiles: [s1, s2], model, variant (3|6|10),
//                        T_K (variant 3) or T_range_K: [lo, hi] (6, 10)
enum class Task { validate_smiles, vapor_pressure, boiling_temperature, activity, vle, fit_nrtl };

std::string_view to_string(Task t) noexcept;
std::optional<Task> task_from_string(std::string_view name);

enum class OutputFormat { json, csv };

struct TaskOutput {
  std::string body;
  std::string content_type;
};

// Throws propkit::Error; InvalidInput for malformed request fields.
TaskOutput run_task(Task task, const nlohmann::json& request, const ProviderRegistry& registry,
                    OutputFormat format);

// Registered activity models and Antoine sources.
TaskOutput models_listing(const ProviderRegistry& registry);

// 422 for input errors, 502 for remote failures, 500 otherwise.
int http_status(const Error& e) noexcept;

// JSON error document, newline-terminated.
std::string error_body(const Error& e);

}  // namespace propkit::api
