#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

namespace dolbeault::cli {

enum class Status { Ok, DomainError, ConfigError };

struct CommandResult {
  Status status = Status::Ok;
  /// Record mirroring the operation's output; field order is fixed per
  /// subcommand. On error it holds {"error": message}.
  nlohmann::ordered_json payload;

  int exit_code() const;
};

/// Parses `args` (without the program name), runs the subcommand and
/// prints the result to `out` (diagnostics to `err`). `--json` switches to
/// one machine-readable record per invocation.
CommandResult run(std::span<const std::string> args, std::ostream& out,
                  std::ostream& err);

/// Comma-separated integers, optionally bracketed; "[]" is empty.
std::vector<std::int64_t> parse_int_list(const std::string& text);

/// Human-readable rendering of a record: one "key: value" line per field.
std::string render_text(const nlohmann::ordered_json& record);

}  // namespace dolbeault::cli
