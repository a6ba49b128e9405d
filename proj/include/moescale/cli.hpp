#pragma once

#include <string>
#include <vector>

namespace moescale {

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name. Returns 0 on success, 2 on usage errors, 1 on data or fit
/// errors (reported as a single "error: ..." line on stderr).
int run_command(const std::vector<std::string>& args);

}  // namespace moescale
