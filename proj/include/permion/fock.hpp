// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <permion/errors.hpp>
#include <permion/first_quant.hpp>
#include <permion/rational.hpp>

#include <json.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <iterator>
#include <tuple>
#include <utility>
#include <vector>

namespace permion {

enum class Statistics { fermion, boson };

std::string to_string(Statistics s);
Statistics statistics_from_string(std::string_view name);

// Mode occupations K_1..K_d.
struct OccupationString {
  std::vector<std::size_t> occupations;
  Statistics statistics = Statistics::fermion;

  std::size_t modes() const noexcept { return occupations.size(); }
  std::size_t particle_count() const noexcept;

  friend bool operator==(const OccupationString&, const OccupationString&) = default;
};

// Occupation-number basis ordered by the little-endian numeral value of K
// (mode 1 is the least significant digit). The vacuum is state 0.
class FockBasis {
 public:
  // Fermions ignore truncation (each mode holds 0 or 1).
  FockBasis(std::size_t modes, Statistics statistics, std::size_t truncation = 1);

  std::size_t modes() const noexcept { return d_; }
  Statistics statistics() const noexcept { return stats_; }
  // Largest occupation per mode (1 for fermions).
  std::size_t truncation() const noexcept { return max_occ_; }
  std::size_t size() const noexcept { return size_; }

  // Occupations of basis state index.
  OccupationString state(std::size_t index) const;
  // Occupation of 1-based mode j in basis state index.
  std::size_t occupation(std::size_t index, std::size_t mode) const;
  // Throws invalid_argument when K is not a state of this basis.
  std::size_t index_of(const OccupationString& k) const;

  bool contains(const OccupationString& k) const noexcept;

 private:
  std::size_t d_;
  Statistics stats_;
  std::size_t max_occ_;
  std::size_t size_;
};

FockBasis fock_basis(std::size_t modes, Statistics statistics, std::size_t truncation = 1);

// Number of N-particle occupation strings over d modes: C(d, N) for
// fermions, C(N + d - 1, d - 1) for bosons. Throws range_error for N > d
// with fermions.
std::uint64_t sector_dimension(std::size_t modes, std::size_t particles, Statistics statistics);

// Sparse square operator on an occupation-number basis. The represented
// operator is i^phase times the stored real matrix; phase is 0 except for
// the second half of a Majorana family.
template <typename Scalar>
class FockOperator {
 public:
  using scalar_type = Scalar;

  FockOperator() = default;
  explicit FockOperator(std::size_t dim, int phase = 0) : rows_(dim), phase_(((phase % 4) + 4) % 4) {}

  static FockOperator identity(std::size_t dim) {
    FockOperator op(dim);
    for (std::size_t i = 0; i < dim; ++i) op.set(i, i, Scalar{1});
    return op;
  }

  std::size_t dim() const noexcept { return rows_.size(); }
  int phase() const noexcept { return phase_; }

  // Stores v at (r, c); zero erases. Throws range_error outside the basis.
  void set(std::size_t r, std::size_t c, Scalar v) {
    check(r, c);
    if (v == Scalar{}) {
      rows_[r].erase(c);
    } else {
      rows_[r][c] = v;
    }
  }

  Scalar get(std::size_t r, std::size_t c) const {
    check(r, c);
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? Scalar{} : it->second;
  }

  const std::map<std::size_t, Scalar>& row(std::size_t r) const { return rows_.at(r); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  bool is_zero() const { return nonzeros() == 0; }

  // (row, col, value) in row-major order.
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> triplets() const {
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : rows_[r]) out.emplace_back(r, c, v);
    }
    return out;
  }

  // Image of basis vector |col> as row -> value.
  std::map<std::size_t, Scalar> apply_to_basis(std::size_t col) const {
    std::map<std::size_t, Scalar> out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto it = rows_[r].find(col);
      if (it != rows_[r].end()) out.emplace(r, it->second);
    }
    return out;
  }

  FockOperator transpose() const {
    FockOperator t(dim(), phase_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : rows_[r]) t.rows_[c][r] = v;
    }
    return t;
  }

  // Same stored matrix with phase replaced.
  FockOperator with_phase(int phase) const {
    FockOperator t = *this;
    t.phase_ = ((phase % 4) + 4) % 4;
    return t;
  }

  FockOperator& operator*=(Scalar s) {
    for (auto& r : rows_) {
      for (auto it = r.begin(); it != r.end();) {
        it->second *= s;
        it = it->second == Scalar{} ? r.erase(it) : std::next(it);
      }
    }
    return *this;
  }

  FockOperator& operator+=(const FockOperator& o) { return accumulate(o, Scalar{1}); }
  FockOperator& operator-=(const FockOperator& o) { return accumulate(o, Scalar{-1}); }

  friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
  friend FockOperator operator-(FockOperator a, const FockOperator& b) { return a -= b; }
  friend FockOperator operator*(FockOperator a, Scalar s) { return a *= s; }

  friend FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    if (a.dim() != b.dim()) throw dimension_error("operators act on different bases");
    FockOperator out(a.dim(), a.phase_ + b.phase_);
    for (std::size_t r = 0; r < a.rows_.size(); ++r) {
      auto& out_row = out.rows_[r];
      for (const auto& [k, av] : a.rows_[r]) {
        for (const auto& [c, bv] : b.rows_[k]) out_row[c] += av * bv;
      }
      std::erase_if(out_row, [](const auto& kv) { return kv.second == Scalar{}; });
    }
    return out;
  }

  friend bool operator==(const FockOperator& a, const FockOperator& b) {
    if (a.is_zero() && b.is_zero()) return a.dim() == b.dim();
    return a.phase_ == b.phase_ && a.rows_ == b.rows_;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_.size() || c >= rows_.size()) throw range_error("operator index outside the basis");
  }

  FockOperator& accumulate(const FockOperator& o, Scalar factor) {
    if (o.dim() != dim()) throw dimension_error("operators act on different bases");
    if (o.is_zero()) return *this;
    if (is_zero()) {
      phase_ = o.phase_;
    } else if (o.phase_ != phase_) {
      throw invalid_argument("cannot add operators with different phases");
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : o.rows_[r]) {
        Scalar& slot = rows_[r][c];
        slot += factor * v;
        if (slot == Scalar{}) rows_[r].erase(c);
      }
    }
    return *this;
  }

  std::vector<std::map<std::size_t, Scalar>> rows_;
  int phase_ = 0;
};

using FermionOperator = FockOperator<std::int64_t>;
using BosonOperator = FockOperator<double>;

// XY + YX and XY - YX.
template <typename Scalar>
FockOperator<Scalar> anticommutator(const FockOperator<Scalar>& x, const FockOperator<Scalar>& y) {
  return x * y + y * x;
}
template <typename Scalar>
FockOperator<Scalar> commutator(const FockOperator<Scalar>& x, const FockOperator<Scalar>& y) {
  return x * y - y * x;
}

enum class LadderKind { create, annihilate };

// Sign rule used for fermionic creation operators.
enum class SignConvention {
  jordan_wigner,  // (-1)^(sum_{i<j} K_i)
  none,           // no sign string; violates the anticommutation relations
};

// create: |K> -> s |K + e_j> when K_j = 0; annihilate is its transpose.
FermionOperator fermion_ladder(std::size_t mode, std::size_t modes, LadderKind kind,
                               SignConvention convention = SignConvention::jordan_wigner);

// create: |..K_j..> -> sqrt(K_j + 1) |..K_j + 1..> for K_j < M, 0 at K_j = M;
// annihilate: |..K_j..> -> sqrt(K_j) |..K_j - 1..>.
BosonOperator boson_ladder(std::size_t mode, std::size_t modes, std::size_t truncation, LadderKind kind);

struct CarReport {
  bool ok = true;
  // Largest |entry| of {a_p, a_q} and of {a_p, a_q^dag} - delta_pq I.
  std::int64_t max_violation = 0;
  std::size_t pairs_checked = 0;
  // First failing (p, q) in row-major order, with the relation name.
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
  std::string failed_relation;
};

CarReport verify_car(std::size_t modes, SignConvention convention = SignConvention::jordan_wigner);

struct CcrReport {
  bool ok = true;
  // Max deviation of [a_p, a_q] and [a_p, a_q^dag] - delta_pq I on states
  // with every occupation below the truncation.
  double max_violation_safe = 0.0;
  // <M,0..0| [a_1, a_1^dag] |M,0..0>, which truncation forces to -M.
  double truncation_artifact = 0.0;
  // Max deviation of [a_p, a_p^dag]|K> from -M|K> over states with K_p = M.
  double artifact_residual = 0.0;
  std::size_t safe_states = 0;
};

// ok means max_violation_safe < tol.
CcrReport verify_ccr(std::size_t modes, std::size_t truncation, double tol = 1e-12);

// Result of applying a creation-operator string to the vacuum.
struct FockStateResult {
  std::size_t index = 0;
  // +-1 for fermions; sqrt(prod K_j!) for bosons.
  double amplitude = 1.0;
  int sign = 1;
};

// a^dag_{m_1} a^dag_{m_2} ... a^dag_{m_k} |vac> with modes_leftmost_first
// listing m_1..m_k (the last one acts first). nullopt when the string
// annihilates the vacuum.
std::optional<FockStateResult> apply_creation_string(const FockBasis& basis,
                                                     const std::vector<std::size_t>& modes_leftmost_first);

// prod_j (a^dag_j)^{K_j} |vac> in ascending j. Throws invalid_argument for
// occupations the basis cannot hold.
FockStateResult fock_state(const FockBasis& basis, const OccupationString& k);

// 2d operators: alpha_{2j-1} = a_j + a_j^dag and alpha_{2j} = i (a_j^dag - a_j),
// the latter stored as the integer matrix a_j^dag - a_j with phase 1.
std::vector<FermionOperator> majorana_ops(std::size_t modes);

// (a_1..a_d, a^dag_1..a^dag_d).
std::vector<FermionOperator> dirac_ops(std::size_t modes);

template <typename Scalar>
struct GeneralizedCarReport {
  // Every anticommutator is a real multiple of the identity and S = S^T.
  bool fermionic = false;
  bool symmetric = false;
  std::vector<std::vector<Scalar>> s;
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
  std::string reason;

  bool diagonal() const {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (i != j && s[i][j] != Scalar{}) return false;
      }
    }
    return true;
  }
};

// alpha_i alpha_j + alpha_j alpha_i = S_ij 1 for all pairs, exactly.
GeneralizedCarReport<std::int64_t> verify_generalized_car(const std::vector<FermionOperator>& ops);
// Same check with entries compared to tol.
GeneralizedCarReport<double> verify_generalized_car(const std::vector<BosonOperator>& ops, double tol = 1e-12);

// Antisymmetrized product state of the occupied modes. The normalized
// first-quantized state is unnormalized / sqrt(norm_squared).
struct SlaterDeterminant {
  // +-1 at every arrangement of the occupied modes.
  NBodyTensor unnormalized;
  Rational norm_squared;

  double amplitude(std::size_t flat) const {
    return unnormalized[flat].to_double() / std::sqrt(norm_squared.to_double());
  }
};

SlaterDeterminant slater_to_first_quantized(const OccupationString& k);

// {"dim": n, "triplets": [[row, col, "value"], ...]} plus "phase" when nonzero.
nlohmann::json to_json(const FermionOperator& op);
nlohmann::json to_json(const BosonOperator& op);

// Decimal text for boson entries (shortest round-trip form).
std::string format_decimal(double v);

}  // namespace permion
