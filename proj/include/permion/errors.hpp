// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace permion {

// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (cycle notation, tableau strings, JSON payloads).
class parse_error : public error {
 public:
  using error::error;
};

// Operands whose shapes or degrees do not agree.
class dimension_error : public error {
 public:
  using error::error;
};

// Square matrix with zero determinant passed to an inversion routine.
class singular_matrix_error : public error {
 public:
  using error::error;
};

// Argument outside a desk-scale cap or outside its mathematical domain.
class range_error : public error {
 public:
  using error::error;
};

// Structurally invalid value (non-bijective images, non-standard tableau, ...).
class invalid_argument : public error {
 public:
  using error::error;
};

// An internal consistency check failed on data the caller supplied
// (e.g. a character that is not constant on a conjugacy class).
class verification_error : public error {
 public:
  using error::error;
};

}  // namespace permion
