#ifndef INVARIANTS_CLI_HPP
#define INVARIANTS_CLI_HPP

#include <string>
#include <vector>

namespace invariants {

/// Entry point behind the binary; returns the process exit code (0 exactly
/// when every asserted inequality passed).
int cli_main(const std::vector<std::string>& args);

}  // namespace invariants

#endif
