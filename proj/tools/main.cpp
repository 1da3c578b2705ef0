// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = permion::cli::run(args);
  std::cout << permion::cli::render(result);
  std::cerr << result.diagnostics;
  return permion::cli::exit_code(result.status);
}
