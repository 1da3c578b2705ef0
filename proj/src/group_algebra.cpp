// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/group_algebra.hpp>

#include <permion/errors.hpp>
#include <permion/group.hpp>

#include <algorithm>
#include <numeric>

namespace permion {

GroupAlgebraElement::GroupAlgebraElement(std::size_t n) : n_(n) {
  if (n == 0) throw invalid_argument("group algebra degree must be positive");
}

GroupAlgebraElement::GroupAlgebraElement(const Permutation& p, const Rational& c) : n_(p.degree()) {
  add_term(p, c);
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational() : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& c) {
  if (p.degree() != n_) throw dimension_error("group algebra term has the wrong degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (o.n_ != n_) throw dimension_error("group algebra degree mismatch");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  if (o.n_ != n_) throw dimension_error("group algebra degree mismatch");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.degree() != b.degree()) throw dimension_error("group algebra degree mismatch");
  GroupAlgebraElement out(a.degree());
  for (const auto& [p, c] : a.terms()) {
    for (const auto& [q, d] : b.terms()) out.add_term(p * q, c * d);
  }
  return out;
}

GroupAlgebraElement full_symmetrizer(std::size_t n) {
  GroupAlgebraElement out(n);
  for (const auto& g : enumerate_group(n)) out.add_term(g, 1);
  return out;
}

GroupAlgebraElement full_antisymmetrizer(std::size_t n) {
  GroupAlgebraElement out(n);
  for (const auto& g : enumerate_group(n)) out.add_term(g, sign(g));
  return out;
}

namespace {

// Sum over all permutations of the points in block (others fixed),
// optionally sign weighted.
GroupAlgebraElement block_sum(const std::vector<std::size_t>& block, std::size_t n, bool signed_sum) {
  GroupAlgebraElement out(n);
  std::vector<std::size_t> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> arrangement = sorted;
  do {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{1});
    for (std::size_t k = 0; k < sorted.size(); ++k) img[sorted[k] - 1] = arrangement[k];
    const Permutation p(img);
    out.add_term(p, signed_sum ? sign(p) : 1);
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

}  // namespace

GroupAlgebraElement row_symmetrizer(const YoungTableau& t) {
  GroupAlgebraElement out = GroupAlgebraElement::identity(t.size());
  for (const auto& row : t.rows()) out = out * block_sum(row, t.size(), false);
  return out;
}

GroupAlgebraElement col_antisymmetrizer(const YoungTableau& t) {
  GroupAlgebraElement out = GroupAlgebraElement::identity(t.size());
  for (const auto& col : t.columns()) out = out * block_sum(col, t.size(), true);
  return out;
}

GroupAlgebraElement young_operator(const YoungTableau& t) {
  if (!t.is_standard()) throw invalid_argument("Young operator needs a standard tableau, got " + format_tableau(t));
  return col_antisymmetrizer(t) * row_symmetrizer(t);
}

IdempotentReport verify_idempotent(const GroupAlgebraElement& x) {
  IdempotentReport report;
  const GroupAlgebraElement square = x * x;
  if (x.is_zero()) {
    report.is_proportional = true;
    report.constant = Rational(0);
    return report;
  }
  const auto& [p0, c0] = *x.terms().begin();
  const Rational c = square.coefficient(p0) / c0;
  if (square == x * c) {
    report.is_proportional = true;
    report.constant = c;
  }
  return report;
}

Permutation transfer_permutation(const YoungTableau& ta, const YoungTableau& tb) {
  if (ta.frame() != tb.frame()) throw dimension_error("transfer between tableaux of different frames");
  std::vector<std::size_t> img(ta.size());
  for (std::size_t r = 0; r < ta.rows().size(); ++r) {
    for (std::size_t c = 0; c < ta.rows()[r].size(); ++c) img[tb.at(r, c) - 1] = ta.at(r, c);
  }
  return Permutation(img);
}

RationalMatrix ga_to_matrix(const GroupAlgebraElement& x, const Representation& r) {
  if (x.degree() != r.degree()) throw dimension_error("group algebra element and representation degrees differ");
  RationalMatrix out(r.dim(), r.dim());
  for (const auto& [p, c] : x.terms()) out += r.at(p) * c;
  return out;
}

nlohmann::json to_json(const GroupAlgebraElement& x) {
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [p, c] : x.terms()) terms[format_cycles(p)] = c.str();
  return {{"degree", x.degree()}, {"terms", std::move(terms)}};
}

}  // namespace permion
