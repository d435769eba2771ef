#include "propkit/api/cli.hpp"

int main(int argc, char** argv) { return propkit::api::cli_main(argc, argv); }
