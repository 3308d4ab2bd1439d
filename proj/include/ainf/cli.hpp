#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ainf/report.hpp"
#include "ainf/scalar.hpp"

namespace ainf {

struct CliFlags {
  std::optional<std::string> report_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<Scalar> cutoff;
  /// flip:<id>, drop:n+1-factor, drop:n2-twist, drop:unit-twist[:<element>]
  std::vector<std::string> mutations;
};

struct CommandResult {
  int exit_code = 0;   // 0 pass, 1 violation, 2 input error
  Json report;         // full machine-readable report (null on input errors)
  std::string text;    // human-readable output
};

const std::vector<std::string>& cli_commands();

/// Runs one command on the merged spec files. Never throws: input errors
/// become exit code 2 with the message in `text`.
CommandResult run_command(const std::string& command, const std::vector<std::string>& spec_paths,
                          const CliFlags& flags);

/// Full command line (without the program name): parses flags, runs the
/// command, writes --report, prints to out/err and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ainf
