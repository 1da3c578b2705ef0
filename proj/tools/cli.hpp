// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace permion::cli {

enum class Status { ok, verification_failed, usage_error };

// 0 / 1 / 2.
int exit_code(Status s) noexcept;

enum class OutputFormat { json, text };

struct CommandResult {
  Status status = Status::ok;
  // Names the payload shape so the text renderer can lay it out.
  std::string kind;
  nlohmann::json payload;
  OutputFormat format = OutputFormat::json;
  // Written to the diagnostic stream: parse errors, help text.
  std::string diagnostics;
};

// Arguments exclude the program name.
CommandResult run(const std::vector<std::string>& args);

// Bytes for the standard stream. JSON is compact with sorted keys and a
// trailing newline.
std::string render(const CommandResult& result, OutputFormat format);
inline std::string render(const CommandResult& result) { return render(result, result.format); }

}  // namespace permion::cli
