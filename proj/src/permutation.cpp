// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/permutation.hpp>

#include <permion/errors.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

namespace permion {

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) throw invalid_argument("permutation degree must be positive");
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  return Permutation(raw_tag{}, std::move(img));
}

Permutation::Permutation(const std::vector<std::size_t>& images) {
  const std::size_t n = images.size();
  if (n == 0) throw invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(n, false);
  image_.reserve(n);
  for (std::size_t v : images) {
    if (v < 1 || v > n || seen[v - 1]) {
      throw invalid_argument("images do not form a permutation of {1.." + std::to_string(n) + "}");
    }
    seen[v - 1] = true;
    image_.push_back(static_cast<std::uint32_t>(v - 1));
  }
}

std::size_t Permutation::operator()(std::size_t point) const {
  if (point < 1 || point > image_.size()) {
    throw range_error("point " + std::to_string(point) + " outside 1.." + std::to_string(image_.size()));
  }
  return image_[point - 1] + 1;
}

std::vector<std::size_t> Permutation::images() const {
  std::vector<std::size_t> out(image_.size());
  std::transform(image_.begin(), image_.end(), out.begin(), [](std::uint32_t v) { return std::size_t{v} + 1; });
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

CycleType::CycleType(std::vector<std::size_t> p) : parts(std::move(p)) {
  if (std::find(parts.begin(), parts.end(), 0u) != parts.end()) {
    throw invalid_argument("cycle type parts must be positive");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

std::size_t CycleType::total() const noexcept {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw dimension_error("cannot compose permutations of degree " + std::to_string(a.degree()) + " and " +
                          std::to_string(b.degree()));
  }
  std::vector<std::uint32_t> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.image_[b.image_[i]];
  return Permutation(Permutation::raw_tag{}, std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint32_t> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[p.image_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(Permutation::raw_tag{}, std::move(img));
}

namespace {

// Orbit lengths including fixed points, in order of smallest point.
std::vector<std::vector<std::size_t>> orbits(const Permutation& p) {
  const std::size_t n = p.degree();
  std::vector<bool> visited(n + 1, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t x = start; !visited[x]; x = p(x)) {
      visited[x] = true;
      orbit.push_back(x);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

int sign(const Permutation& p) {
  const std::size_t exponent = p.degree() - orbits(p).size();
  return exponent % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<std::size_t>> cycles(const Permutation& p) {
  auto all = orbits(p);
  std::erase_if(all, [](const auto& c) { return c.size() < 2; });
  return all;
}

CycleType cycle_type(const Permutation& p) {
  std::vector<std::size_t> lengths;
  for (const auto& orbit : orbits(p)) lengths.push_back(orbit.size());
  return CycleType(std::move(lengths));
}

namespace {

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t n) : text_(text), n_(n), used_(n + 1, false) {}

  Permutation parse() {
    std::vector<std::size_t> img(n_);
    std::iota(img.begin(), img.end(), std::size_t{1});
    skip_ws();
    if (at_end()) return Permutation(img);
    if (peek() == 'e') {
      ++pos_;
      skip_ws();
      if (!at_end()) fail("unexpected input after identity 'e'");
      return Permutation(img);
    }
    while (!at_end()) {
      auto cycle = parse_cycle();
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        img[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
      }
      skip_ws();
    }
    return Permutation(img);
  }

 private:
  std::vector<std::size_t> parse_cycle() {
    expect('(');
    // Digit runs grouped into comma-separated fields.
    std::vector<std::vector<std::string>> fields(1);
    for (;;) {
      skip_ws();
      if (at_end()) fail("unterminated cycle");
      const char c = peek();
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == ',') {
        if (fields.back().empty()) fail("missing point before ','");
        fields.emplace_back();
        ++pos_;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string run;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) run.push_back(text_[pos_++]);
        fields.back().push_back(std::move(run));
        continue;
      }
      fail(std::string("unexpected character '") + c + "'");
    }
    if (fields.back().empty()) fail(fields.size() == 1 ? "empty cycle" : "trailing ',' in cycle");

    std::vector<std::size_t> points;
    if (fields.size() == 1) {
      for (const auto& r : fields.front()) {
        for (char d : r) points.push_back(to_point(std::string(1, d)));
      }
    } else {
      for (const auto& f : fields) {
        if (f.size() != 1) fail("multi-digit points must be separated by commas");
        points.push_back(to_point(f.front()));
      }
    }
    for (std::size_t pt : points) {
      if (used_[pt]) fail("point " + std::to_string(pt) + " repeated");
      used_[pt] = true;
    }
    return points;
  }

  std::size_t to_point(const std::string& digits) {
    if (digits.size() > 9) fail("point out of range");
    const std::size_t v = std::stoul(digits);
    if (v < 1 || v > n_) fail("point " + digits + " outside 1.." + std::to_string(n_));
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw parse_error("cycle notation \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
  std::vector<bool> used_;
};

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t n) {
  if (n == 0) throw invalid_argument("permutation degree must be positive");
  return CycleParser(text, n).parse();
}

Permutation parse_word(std::string_view text, std::size_t n) {
  Permutation out = Permutation::identity(n);
  const bool product = text.find('*') != std::string_view::npos;
  for (;;) {
    const auto star = text.find('*');
    const std::string_view factor = text.substr(0, star);
    if (product && std::all_of(factor.begin(), factor.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
      throw parse_error("empty factor in product \"" + std::string(text) + "\"");
    }
    out = out * parse_cycles(factor, n);
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  return out;
}

std::string format_cycles(const Permutation& p) {
  const auto cs = cycles(p);
  if (cs.empty()) return "e";
  std::string out;
  for (const auto& c : cs) {
    const bool wide = std::any_of(c.begin(), c.end(), [](std::size_t x) { return x >= 10; });
    out.push_back('(');
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (wide && k > 0) out.push_back(',');
      out += std::to_string(c[k]);
    }
    out.push_back(')');
  }
  return out;
}

std::size_t lex_rank(const Permutation& p) {
  // Lehmer code read as a factorial-base numeral.
  const auto img = p.images();
  const std::size_t n = img.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += img[j] < img[i];
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

std::string to_string(const CycleType& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(t.parts[i]);
  }
  out.push_back(']');
  return out;
}

}  // namespace permion

std::size_t std::hash<permion::Permutation>::operator()(const permion::Permutation& p) const noexcept {
  std::size_t h = p.degree();
  for (std::size_t v : p.images()) h = h * 1000003u ^ v;
  return h;
}
