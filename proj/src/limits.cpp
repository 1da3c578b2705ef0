// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/limits.hpp>

#include <permion/errors.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace permion::caps {

std::size_t effective(std::size_t default_cap) {
  const char* env = std::getenv("PERMION_MAX_N");
  if (env == nullptr || *env == '\0') return default_cap;
  std::size_t lowered = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, lowered);
  if (ec != std::errc{} || ptr != end || lowered == 0) return default_cap;
  return std::min(default_cap, lowered);
}

namespace {

void check(std::size_t value, std::size_t limit, std::string_view what) {
  if (value > limit) {
    throw range_error(std::string(what) + " = " + std::to_string(value) +
                      " exceeds desk-scale cap " + std::to_string(limit));
  }
}

}  // namespace

void require_at_most(std::size_t value, std::size_t cap, std::string_view what) {
  check(value, effective(cap), what);
}

void require_size_at_most(std::size_t value, std::size_t cap, std::string_view what) {
  check(value, cap, what);
}

}  // namespace permion::caps
