// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/young.hpp>

#include <permion/errors.hpp>
#include <permion/group.hpp>
#include <permion/limits.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace permion {

YoungFrame::YoungFrame(std::vector<std::size_t> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw invalid_argument("Young frame needs at least one row");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] == 0) throw invalid_argument("Young frame rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw invalid_argument("Young frame rows must be weakly decreasing");
  }
  n_ = std::accumulate(rows_.begin(), rows_.end(), std::size_t{0});
}

std::vector<std::size_t> YoungFrame::columns() const {
  std::vector<std::size_t> cols(rows_.front(), 0);
  for (std::size_t r : rows_) {
    for (std::size_t c = 0; c < r; ++c) ++cols[c];
  }
  return cols;
}

namespace {

std::vector<std::size_t> row_lengths(const std::vector<std::vector<std::size_t>>& rows) {
  std::vector<std::size_t> lengths;
  for (const auto& r : rows) lengths.push_back(r.size());
  return lengths;
}

}  // namespace

YoungTableau::YoungTableau(std::vector<std::vector<std::size_t>> rows)
    : frame_(row_lengths(rows)), rows_(std::move(rows)) {
  const std::size_t n = frame_.size();
  std::vector<bool> seen(n + 1, false);
  for (const auto& row : rows_) {
    for (std::size_t v : row) {
      if (v < 1 || v > n || seen[v]) {
        throw invalid_argument("tableau entries must be a bijection onto {1.." + std::to_string(n) + "}");
      }
      seen[v] = true;
    }
  }
}

std::vector<std::vector<std::size_t>> YoungTableau::columns() const {
  std::vector<std::vector<std::size_t>> cols(rows_.front().size());
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
  }
  return cols;
}

bool YoungTableau::is_standard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0 && rows_[r][c] <= rows_[r][c - 1]) return false;
      if (r > 0 && rows_[r][c] <= rows_[r - 1][c]) return false;
    }
  }
  return true;
}

std::vector<std::size_t> YoungTableau::reading_word() const {
  std::vector<std::size_t> word;
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::vector<YoungFrame> partitions(std::size_t n) {
  if (n == 0) throw range_error("partitions need n >= 1");
  caps::require_at_most(n, caps::partitions_degree, "partition size");
  std::vector<YoungFrame> out;
  std::vector<std::size_t> current;
  // Largest first part first, then recursively on the remainder.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<YoungTableau> standard_tableaux(const YoungFrame& f) {
  caps::require_at_most(f.size(), caps::tableaux_degree, "tableau size");
  const auto& shape = f.rows();
  std::vector<std::vector<std::size_t>> filling(shape.size());
  std::vector<YoungTableau> out;
  // Place 1..n in order; k may go at the end of row i when that keeps the
  // filled region a partition.
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k > f.size()) {
      out.emplace_back(filling);
      return;
    }
    for (std::size_t i = 0; i < shape.size(); ++i) {
      const std::size_t len = filling[i].size();
      if (len == shape[i]) continue;
      if (i > 0 && filling[i - 1].size() <= len) continue;
      filling[i].push_back(k);
      rec(k + 1);
      filling[i].pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(),
            [](const YoungTableau& a, const YoungTableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

std::uint64_t tableau_count_hook(const YoungFrame& f) {
  caps::require_at_most(f.size(), caps::hook_degree, "hook formula size");
  const auto cols = f.columns();
  std::uint64_t hooks = 1;
  for (std::size_t r = 0; r < f.rows().size(); ++r) {
    for (std::size_t c = 0; c < f.rows()[r]; ++c) {
      const std::size_t arm = f.rows()[r] - c - 1;
      const std::size_t leg = cols[c] - r - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(f.size()) / hooks;
}

namespace {

std::vector<std::size_t> parse_list(std::string_view text, std::string_view whole) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  for (;;) {
    skip_ws();
    std::size_t value = 0;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
      ++pos;
      if (++digits > 9) throw parse_error("number too large in \"" + std::string(whole) + "\"");
    }
    if (digits == 0) throw parse_error("expected a number in \"" + std::string(whole) + "\"");
    out.push_back(value);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw parse_error("expected ',' in \"" + std::string(whole) + "\"");
    ++pos;
  }
  return out;
}

}  // namespace

YoungFrame parse_frame(std::string_view text) {
  try {
    return YoungFrame(parse_list(text, text));
  } catch (const invalid_argument& e) {
    throw parse_error(e.what());
  }
}

YoungTableau parse_tableau(std::string_view text) {
  std::vector<std::vector<std::size_t>> rows;
  std::string_view rest = text;
  for (;;) {
    const auto semi = rest.find(';');
    rows.push_back(parse_list(rest.substr(0, semi), text));
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  try {
    return YoungTableau(std::move(rows));
  } catch (const invalid_argument& e) {
    throw parse_error(e.what());
  }
}

std::string format_frame(const YoungFrame& f) {
  std::string out;
  for (std::size_t i = 0; i < f.rows().size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(f.rows()[i]);
  }
  return out;
}

std::string format_tableau(const YoungTableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r > 0) out.push_back(';');
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c > 0) out.push_back(',');
      out += std::to_string(t.rows()[r][c]);
    }
  }
  return out;
}

}  // namespace permion
