#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "propkit/core/registry.hpp"

namespace propkit::api {

// Command-line front end:
//
//   propkit validate SMILES
//   propkit psat     --smiles S --T 350
//   propkit tboil    --smiles S --p 101325
//   propkit activity --smiles S1 S2 --model unifac --T 350 [--dx 0.01]
//   propkit vle      --smiles S1 S2 --model nrtl-demo (--T 400 | --p 60000)
//   propkit fit      --smiles S1 S2 --model unifac --variant 3 --T 350
//   propkit fit      --smiles S1 S2 --model unifac --variant 6 --T-range 300 400
//   propkit serve    [--port 8080]
//
// Shared flags: --config FILE, --json (JSON instead of CSV), --out FILE.
// Exit status 0 on success, 2 for input errors (diagnostic JSON on stderr,
// identical to the HTTP error body), 1 for other failures.
//
// `registry` replaces the configured one when given (used by tests).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const ProviderRegistry* registry = nullptr);

int cli_main(int argc, char** argv);

}  // namespace propkit::api
