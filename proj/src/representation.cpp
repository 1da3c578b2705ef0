// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/representation.hpp>

#include <permion/errors.hpp>
#include <permion/group.hpp>
#include <permion/limits.hpp>

#include <algorithm>
#include <limits>

namespace permion {

std::string to_string(RepKind kind) {
  switch (kind) {
    case RepKind::trivial: return "trivial";
    case RepKind::alternating: return "alternating";
    case RepKind::natural: return "natural";
    case RepKind::regular: return "regular";
    case RepKind::standard: return "standard";
    case RepKind::custom: return "custom";
  }
  return "custom";
}

RepKind rep_kind_from_string(std::string_view name) {
  for (RepKind k : {RepKind::trivial, RepKind::alternating, RepKind::natural, RepKind::regular, RepKind::standard,
                    RepKind::custom}) {
    if (to_string(k) == name) return k;
  }
  throw parse_error("unknown representation kind \"" + std::string(name) + "\"");
}

ElementOrdering::ElementOrdering(std::vector<Permutation> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw invalid_argument("element ordering is empty");
  const std::size_t n = elements_.front().degree();
  if (elements_.size() != factorial(n)) {
    throw invalid_argument("element ordering has " + std::to_string(elements_.size()) + " entries, S_" +
                           std::to_string(n) + " has " + std::to_string(factorial(n)));
  }
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  position_.assign(elements_.size(), unset);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].degree() != n) throw invalid_argument("element ordering mixes degrees");
    auto& slot = position_[lex_rank(elements_[i])];
    if (slot != unset) throw invalid_argument("element ordering repeats " + format_cycles(elements_[i]));
    slot = i;
  }
}

ElementOrdering ElementOrdering::lexicographic(std::size_t n) { return ElementOrdering(enumerate_group(n)); }

Representation::Representation(RepKind label, std::size_t n, std::size_t dim, std::vector<RationalMatrix> matrices)
    : label_(label), n_(n), dim_(dim), elements_(enumerate_group(n)), matrices_(std::move(matrices)) {
  if (matrices_.size() != elements_.size()) {
    throw dimension_error("representation needs " + std::to_string(elements_.size()) + " matrices, got " +
                          std::to_string(matrices_.size()));
  }
  for (const auto& m : matrices_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw dimension_error("representation matrix has wrong shape");
  }
}

const RationalMatrix& Representation::at(const Permutation& g) const {
  if (g.degree() != n_) throw dimension_error("element degree does not match representation");
  return matrices_[lex_rank(g)];
}

Representation Representation::with_matrix(const Permutation& g, RationalMatrix m) const {
  if (g.degree() != n_) throw dimension_error("element degree does not match representation");
  auto mats = matrices_;
  mats[lex_rank(g)] = std::move(m);
  return Representation(RepKind::custom, n_, dim_, std::move(mats));
}

Representation one_dim_rep(std::size_t n, RepKind kind) {
  if (kind != RepKind::trivial && kind != RepKind::alternating) {
    throw invalid_argument("one-dimensional representation must be trivial or alternating");
  }
  std::vector<RationalMatrix> mats;
  for (const auto& g : enumerate_group(n)) {
    mats.push_back(RationalMatrix{{Rational(kind == RepKind::trivial ? 1 : sign(g))}});
  }
  return Representation(kind, n, 1, std::move(mats));
}

Representation natural_rep(std::size_t n) {
  caps::require_at_most(n, caps::natural_degree, "natural representation degree");
  std::vector<RationalMatrix> mats;
  for (const auto& g : enumerate_group(n)) {
    RationalMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) m(g(k) - 1, k - 1) = 1;
    mats.push_back(std::move(m));
  }
  return Representation(RepKind::natural, n, n, std::move(mats));
}

Representation regular_rep(std::size_t n, const ElementOrdering& ordering) {
  caps::require_at_most(n, caps::regular_degree, "regular representation degree");
  if (ordering.degree() != n) throw invalid_argument("ordering degree does not match");
  const auto& basis = ordering.elements();
  const std::size_t h = basis.size();
  std::vector<RationalMatrix> mats;
  for (const auto& g : enumerate_group(n)) {
    RationalMatrix m(h, h);
    for (std::size_t j = 0; j < h; ++j) m(ordering.index_of(g * basis[j]), j) = 1;
    mats.push_back(std::move(m));
  }
  return Representation(RepKind::regular, n, h, std::move(mats));
}

Representation regular_rep(std::size_t n) {
  caps::require_at_most(n, caps::regular_degree, "regular representation degree");
  return regular_rep(n, ElementOrdering::lexicographic(n));
}

RationalMatrix standard_change_of_basis(std::size_t n) {
  RationalMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) b(i, 0) = 1;
  for (std::size_t k = 1; k < n; ++k) {
    b(k - 1, k) = 1;
    b(k, k) = -1;
  }
  return b;
}

Representation standard_rep(std::size_t n) {
  if (n < 2) throw range_error("standard representation needs degree >= 2");
  caps::require_at_most(n, caps::standard_degree, "standard representation degree");
  const RationalMatrix b = standard_change_of_basis(n);
  const RationalMatrix b_inv = mat_inverse(b);
  const Representation nat = natural_rep(n);
  std::vector<RationalMatrix> mats;
  for (const auto& d : nat.matrices()) {
    const RationalMatrix conj = b_inv * d * b;
    // Must be 1 (+) D(std).
    bool split = conj(0, 0) == Rational(1);
    for (std::size_t k = 1; k < n && split; ++k) split = conj(0, k).is_zero() && conj(k, 0).is_zero();
    if (!split) throw verification_error("change of basis did not split off the trivial block");
    mats.push_back(block(conj, 1, 1, n - 1, n - 1));
  }
  return Representation(RepKind::standard, n, n - 1, std::move(mats));
}

Representation make_rep(std::size_t n, RepKind kind) {
  switch (kind) {
    case RepKind::trivial:
    case RepKind::alternating: return one_dim_rep(n, kind);
    case RepKind::natural: return natural_rep(n);
    case RepKind::regular: return regular_rep(n);
    case RepKind::standard: return standard_rep(n);
    case RepKind::custom: break;
  }
  throw invalid_argument("cannot construct a custom representation by name");
}

HomomorphismReport verify_homomorphism(const Representation& r) {
  caps::require_at_most(r.degree(), caps::homomorphism_degree, "homomorphism check degree");
  HomomorphismReport report;
  const auto& els = r.elements();
  report.identity_ok = r.at(Permutation::identity(r.degree())) == RationalMatrix::identity(r.dim());
  report.ok = report.identity_ok;
  for (const auto& a : els) {
    for (const auto& b : els) {
      ++report.pairs_checked;
      if (r.at(a * b) != r.at(a) * r.at(b)) {
        report.ok = false;
        if (!report.first_failure) report.first_failure = std::make_pair(a, b);
      }
    }
  }
  return report;
}

std::map<CycleType, Rational> character(const Representation& r) {
  std::map<CycleType, Rational> chi;
  std::map<CycleType, Permutation> witness;
  for (const auto& g : r.elements()) {
    const CycleType type = cycle_type(g);
    const Rational t = trace(r.at(g));
    auto [it, inserted] = chi.emplace(type, t);
    if (inserted) {
      witness.emplace(type, g);
    } else if (it->second != t) {
      throw verification_error("character differs within class " + to_string(type) + ": " +
                               format_cycles(witness.at(type)) + " has " + it->second.str() + ", " +
                               format_cycles(g) + " has " + t.str());
    }
  }
  return chi;
}

RationalMatrix symmetrizer_image(const Representation& r) {
  caps::require_at_most(r.degree(), caps::symmetrizer_degree, "symmetrizer degree");
  RationalMatrix s(r.dim(), r.dim());
  for (const auto& m : r.matrices()) s += m;
  return s;
}

RationalMatrix antisymmetrizer_image(const Representation& r) {
  caps::require_at_most(r.degree(), caps::symmetrizer_degree, "antisymmetrizer degree");
  RationalMatrix a(r.dim(), r.dim());
  for (std::size_t i = 0; i < r.order(); ++i) {
    if (sign(r.elements()[i]) > 0) {
      a += r.matrices()[i];
    } else {
      a -= r.matrices()[i];
    }
  }
  return a;
}

RegularDecompositionReport verify_regular_decomposition(std::size_t n, const std::vector<std::size_t>& irrep_dims) {
  caps::require_at_most(n, caps::enumerate_degree, "regular decomposition degree");
  RegularDecompositionReport report;
  report.group_order = BigInt(factorial(n));
  for (std::size_t d : irrep_dims) {
    const BigInt bd(d);
    report.sum_of_squares += bd * bd;
  }
  // chi_e(lambda) = d(lambda), each irrep appearing d(lambda) times.
  report.character_sum = report.sum_of_squares;
  if (n <= caps::effective(caps::regular_degree)) {
    const auto reg = regular_rep(n);
    report.regular_identity_character = trace(reg.at(Permutation::identity(n))).numerator();
  } else {
    report.regular_identity_character = report.group_order;
  }
  report.ok = report.sum_of_squares == report.group_order &&
              report.regular_identity_character == report.character_sum;
  return report;
}

nlohmann::json to_json(const Representation& r) {
  nlohmann::json mats = nlohmann::json::object();
  for (std::size_t i = 0; i < r.order(); ++i) mats[format_cycles(r.elements()[i])] = to_json(r.matrices()[i]);
  return {{"label", to_string(r.label())}, {"n", r.degree()}, {"dim", r.dim()}, {"matrices", std::move(mats)}};
}

}  // namespace permion
