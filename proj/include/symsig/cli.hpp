#ifndef SYMSIG_CLI_HPP
#define SYMSIG_CLI_HPP

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace symsig::cli {

/// Runs one subcommand end to end. Exit codes: 0 verdict produced (including
/// undecided and refused), 2 input error, 3 resource limit exceeded,
/// 4 internal consistency failure. When `captured_report` is non-null it
/// receives the full report object of the run.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        nlohmann::json* captured_report = nullptr);

}  // namespace symsig::cli

#endif
