#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamdisc/io.hpp"

namespace hamdisc::cli {

enum class Subcommand { Gen, Solve, Path, Verify, Oracle, Sweep, Diag };

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kInvariant = 3,
};

struct CommandSpec {
  Subcommand subcommand = Subcommand::Solve;
  std::string input = "-";        // graph file, "-" for stdin
  std::string certificate;        // verify / diag
  std::string output;              // empty: stdout
  std::string dump = "hamdisc-dump.txt";
  GraphFormat format = GraphFormat::Auto;
  bool trace = false;
  bool timing = false;
  std::optional<int> target;
  std::optional<std::uint64_t> seed;

  // gen
  std::string construction = "gnd";  // gnd | tournament | oriented | min-degree
  int n = 0;
  int d = 0;

  // verify
  std::optional<bool> spanning;

  // oracle
  int cap = 10;

  // sweep
  std::vector<int> n_values;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  bool oracle = false;
  bool tournaments = false;
  int jobs = 1;

  // diag
  int w = -1;
};

/// Parses arguments (without the program name). Throws PreconditionError
/// with code "usage" on malformed input; `help` receives help text and is set
/// when --help was requested.
CommandSpec parse_command(const std::vector<std::string>& args, std::string* help = nullptr);

/// Parses "a..b", "a,b,c" or "a".
std::vector<int> parse_n_range(const std::string& text);

int run(const CommandSpec& spec, std::ostream& out, std::ostream& err);

/// parse_command + run with exit codes for argument errors.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamdisc::cli
