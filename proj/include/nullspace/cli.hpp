#ifndef NULLSPACE_CLI_HPP
#define NULLSPACE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nullspace {

/// Runs one command. `args` is argv without the program name; results go to
/// `out` (JSON by default, --format table for the human form), diagnostics to
/// `err`. Returns the process exit code: 0 on success, 1 when an audit run
/// ends RED, 2 on parse or validation errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nullspace

#endif  // NULLSPACE_CLI_HPP
