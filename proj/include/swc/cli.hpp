#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace swc::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";

enum class Status { Ok, InvalidInput, Inconclusive, InternalError };

const char* to_string(Status s) noexcept;
/// 0 ok, 2 invalid-input, 3 inconclusive, 4 internal-error.
int exit_code(Status s) noexcept;

struct CommandResult {
    Status status = Status::Ok;
    nlohmann::json payload;  // null when nothing is written (e.g. --help)
    std::vector<std::string> diagnostics;
    std::string output_path;  // empty: standard output
    bool pretty = false;
};

/// Parses and runs one command. `args` excludes the program name.
CommandResult dispatch(const std::vector<std::string>& args);

/// Serialized payload exactly as written by run().
std::string render(const CommandResult& result);

/// Full process behaviour: dispatch, write payload and diagnostics, return
/// the exit code.
int run(int argc, const char* const* argv);

}  // namespace swc::cli
