// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace permion {

// A partition of n drawn as left-justified rows of boxes.
class YoungFrame {
 public:
  // Throws invalid_argument unless rows are positive and weakly decreasing.
  explicit YoungFrame(std::vector<std::size_t> rows);

  const std::vector<std::size_t>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return n_; }
  // Column lengths (the conjugate partition).
  std::vector<std::size_t> columns() const;

  friend auto operator<=>(const YoungFrame&, const YoungFrame&) = default;
  friend bool operator==(const YoungFrame&, const YoungFrame&) = default;

 private:
  std::vector<std::size_t> rows_;
  std::size_t n_ = 0;
};

// A frame whose boxes hold each of 1..n exactly once.
class YoungTableau {
 public:
  // Throws invalid_argument when the row lengths are not a partition or the
  // entries are not a bijection onto {1..n}.
  explicit YoungTableau(std::vector<std::vector<std::size_t>> rows);

  const YoungFrame& frame() const noexcept { return frame_; }
  std::size_t size() const noexcept { return frame_.size(); }
  const std::vector<std::vector<std::size_t>>& rows() const noexcept { return rows_; }
  std::vector<std::vector<std::size_t>> columns() const;
  std::size_t at(std::size_t row, std::size_t col) const { return rows_.at(row).at(col); }

  // Rows increase left to right and columns increase top to bottom.
  bool is_standard() const;

  // Entries read row by row.
  std::vector<std::size_t> reading_word() const;

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;

 private:
  YoungFrame frame_;
  std::vector<std::vector<std::size_t>> rows_;
};

// All partitions of n in reverse-lexicographic order ([n] first).
std::vector<YoungFrame> partitions(std::size_t n);

// Standard tableaux of the frame ordered by reading word.
std::vector<YoungTableau> standard_tableaux(const YoungFrame& f);

// n! / prod(hook lengths).
std::uint64_t tableau_count_hook(const YoungFrame& f);

// "2,1" -> [2,1]. Throws parse_error.
YoungFrame parse_frame(std::string_view text);
// "1,2;3" -> rows (1,2)/(3). Throws parse_error.
YoungTableau parse_tableau(std::string_view text);

std::string format_frame(const YoungFrame& f);
std::string format_tableau(const YoungTableau& t);

}  // namespace permion
