#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

// Batch front end: one JSON problem in, one JSON document out.
namespace realspin::cli {

using nlohmann::json;

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kInvalidInput = 2 };

json cmd_detsign(const json& spec);
/// subcommand is "enumerate", "act" or "bordism".
json cmd_spin(const json& spec, const std::string& subcommand);
json cmd_picard(const json& spec);
json cmd_loop(const json& spec);

struct VerifyOutcome {
  json report;
  int exit_code = kSuccess;
};
/// With a "curve" in spec, verifies that topology only; otherwise every valid
/// topology with genus <= max_genus. A skipped (invalid) curve exits 2.
VerifyOutcome cmd_verify(const json& spec, std::uint64_t seed, int max_genus);

/// Structured error document written to standard error.
json error_document(const std::string& code, const std::string& message);

/// Full command-line entry point. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace realspin::cli
