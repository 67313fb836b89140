#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace castelnuovo::cli {

enum class Status { ok, error };

/// Exit code 0 means every requested check agreed; 1 means a computation ran
/// and a check failed; 2 means the request itself was invalid.
struct CommandResult {
  Status status = Status::ok;
  nlohmann::json payload;
  std::string human_text;
  int exit_code = 0;
};

enum class Method { formula, schubert, tableaux, all };

Method parse_method(const std::string& name);

CommandResult cmd_rho(int g, int r, int d);
CommandResult cmd_count(int g, int r, int d, Method method);
CommandResult cmd_degree(int h, int k);
CommandResult cmd_verify_g13(std::uint64_t seed, int trials);
CommandResult cmd_table(int g_max);
CommandResult cmd_syt(const std::vector<int>& parts);
CommandResult cmd_schubert_power(int a, int N, int c, int repetitions);
CommandResult cmd_solve(const std::string& path);

/// Parses `args` (without the program name), runs the subcommand and writes
/// the human text, or canonical JSON under --json, to `out`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace castelnuovo::cli
