#pragma once

#include <string>
#include <vector>

namespace ftreach {

// Entry point shared by the binary and the tests. Returns the process exit
// code: 0 success, 1 verification mismatch, 2 usage error.
int run_command(const std::vector<std::string> &args);

} // namespace ftreach
