#include "propkit/api/service.hpp"

#include <iostream>

#include <httplib.h>
#include <json.hpp>

#include "propkit/api/tasks.hpp"
#include "propkit/error.hpp"

namespace propkit::api {
namespace {

using nlohmann::json;

bool wants_csv(const httplib::Request& req) {
  return req.get_header_value("Accept").find("text/csv") != std::string::npos;
}

void send_error(httplib::Response& res, const Error& e) {
  res.status = http_status(e);
  res.set_content(error_body(e), "application/json");
}

}  // namespace

Service::Service(std::shared_ptr<const ProviderRegistry> registry)
    : registry_(std::move(registry)), server_(std::make_unique<httplib::Server>()) {
  auto& s = *server_;
  s.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("{\"status\":\"ok\"}\n", "application/json");
  });
  s.Get("/v1/models", [this](const httplib::Request&, httplib::Response& res) {
    const auto out = models_listing(*registry_);
    res.set_content(out.body, out.content_type);
  });

  const std::pair<const char*, Task> routes[] = {
      {"/v1/validate-smiles", Task::validate_smiles},
      {"/v1/vapor-pressure", Task::vapor_pressure},
      {"/v1/boiling-temperature", Task::boiling_temperature},
      {"/v1/activity", Task::activity},
      {"/v1/vle", Task::vle},
      {"/v1/fit-nrtl", Task::fit_nrtl},
  };
  for (const auto& [path, task] : routes) {
    s.Post(path, [this, task](const httplib::Request& req, httplib::Response& res) {
      json request;
      try {
        request = json::parse(req.body);
      } catch (const json::exception& e) {
        res.status = 400;
        res.set_content(error_body(Error(Errc::InvalidInput, "api",
                                         std::string("malformed JSON: ") + e.what())),
                        "application/json");
        return;
      }
      try {
        const auto out = run_task(task, request, *registry_,
                                  wants_csv(req) ? OutputFormat::csv : OutputFormat::json);
        res.set_content(out.body, out.content_type);
      } catch (const Error& e) {
        send_error(res, e);
      } catch (const std::exception& e) {
        send_error(res, Error(Errc::InvalidInput, "api", e.what()));
        res.status = 500;
      }
    });
  }
}

Service::~Service() { stop(); }

int Service::bind(const std::string& host, int port) {
  const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0)
    throw Error(Errc::InvalidInput, "api", "cannot bind " + host + ":" + std::to_string(port));
  port_ = bound;
  return bound;
}

void Service::listen() { server_->listen_after_bind(); }

void Service::stop() {
  if (server_) server_->stop();
}

int serve(const ServiceConfig& config) {
  auto registry = std::make_shared<const ProviderRegistry>(build_registry(config));
  Service service(registry);
  const int port = service.bind(config.host, config.port);
  std::cerr << "propkit listening on http://" << config.host << ":" << port << "\n";
  service.listen();
  return 0;
}

}  // namespace propkit::api
