#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace ehplab {

/// EHPLAB_DATA_DIR when set, otherwise the data directory of the source tree.
std::filesystem::path default_data_dir();

/// Entry point of the `ehplab` tool. `args` excludes the program name.
/// Returns 0 on success, 1 when a verification check or a computation fails,
/// 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ehplab
