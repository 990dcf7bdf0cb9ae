#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qvitali/rational.hpp"
#include "qvitali/render.hpp"

namespace qvitali::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Rational q{1};
  std::uint64_t seed = 42;
  std::size_t cases = 1000;
  OutputFormat format = OutputFormat::Plain;
  int precision = 12;
};

struct CommandOutput {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// Subcommands are pure: the same arguments always produce the same output.
CommandOutput cmd_eval(const std::string& expr, const RunConfig& config);
CommandOutput cmd_measure(const std::string& set_text, const RunConfig& config);
CommandOutput cmd_translate(const std::string& set_text, const std::string& v, const RunConfig& config);
CommandOutput cmd_scale(const std::string& set_text, const std::string& alpha, const RunConfig& config);
CommandOutput cmd_bounds(const std::string& q_grid, const RunConfig& config);
CommandOutput cmd_enumerate(const RunConfig& config);
CommandOutput cmd_verify(const std::string& suite, const RunConfig& config);

// Full command line without the program name, e.g. {"eval", "1 o+ 2", "--q", "1/2"}.
CommandOutput run(const std::vector<std::string>& args);

} // namespace qvitali::cli
