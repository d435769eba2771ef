#pragma once

#include <memory>
#include <string>

#include "propkit/api/config.hpp"
#include "propkit/core/registry.hpp"

namespace httplib {
class Server;
}

namespace propkit::api {

// HTTP front end over the task layer.
//
//   POST /v1/validate-smiles      POST /v1/activity
//   POST /v1/vapor-pressure       POST /v1/vle
//   POST /v1/boiling-temperature  POST /v1/fit-nrtl
//   GET  /v1/models               GET  /healthz
//
// JSON by default; CSV when the request's Accept header names text/csv.
// Malformed JSON answers 400; task errors use http_status().
class Service {
 public:
  explicit Service(std::shared_ptr<const ProviderRegistry> registry);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds `host:port`; port 0 picks a free one. Throws InvalidInput when the
  // address cannot be bound. Returns the bound port.
  int bind(const std::string& host, int port);
  // Blocks serving requests until stop().
  void listen();
  void stop();

  int port() const noexcept { return port_; }

 private:
  std::shared_ptr<const ProviderRegistry> registry_;
  std::unique_ptr<httplib::Server> server_;
  int port_ = -1;
};

// Builds the registry from `config`, binds and serves until stopped.
int serve(const ServiceConfig& config);

}  // namespace propkit::api
