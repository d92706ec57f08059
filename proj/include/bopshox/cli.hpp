#pragma once

#include <filesystem>

#include "bopshox/params.hpp"

namespace bopshox::cli {

// Command-line front end.  Exit codes: 0 success, 2 configuration or
// validation error, 3 numerical failure.
int run(int argc, const char* const* argv);

// key=value parameter file (keys m, M, omega, Omega, delta; '#' comments).
SystemParams::Raw parse_config_file(const std::filesystem::path& path, SystemParams::Raw base);

}  // namespace bopshox::cli
