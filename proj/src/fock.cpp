// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/fock.hpp>

#include <permion/group.hpp>
#include <permion/limits.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <numeric>

namespace permion {

std::string to_string(Statistics s) { return s == Statistics::fermion ? "fermion" : "boson"; }

Statistics statistics_from_string(std::string_view name) {
  if (name == "fermion") return Statistics::fermion;
  if (name == "boson") return Statistics::boson;
  throw parse_error("unknown statistics \"" + std::string(name) + "\"");
}

std::size_t OccupationString::particle_count() const noexcept {
  return std::accumulate(occupations.begin(), occupations.end(), std::size_t{0});
}

FockBasis::FockBasis(std::size_t modes, Statistics statistics, std::size_t truncation)
    : d_(modes), stats_(statistics), max_occ_(statistics == Statistics::fermion ? 1 : truncation), size_(1) {
  if (modes == 0) throw range_error("Fock basis needs at least one mode");
  if (stats_ == Statistics::fermion) {
    caps::require_at_most(modes, caps::fermion_modes, "fermion mode count");
  } else if (max_occ_ == 0) {
    throw range_error("boson truncation must be at least 1");
  }
  for (std::size_t j = 0; j < d_; ++j) {
    if (size_ > caps::boson_states / (max_occ_ + 1)) {
      throw range_error("Fock basis size exceeds cap " + std::to_string(caps::boson_states));
    }
    size_ *= max_occ_ + 1;
  }
}

OccupationString FockBasis::state(std::size_t index) const {
  if (index >= size_) throw range_error("basis index out of range");
  OccupationString k{std::vector<std::size_t>(d_), stats_};
  for (std::size_t j = 0; j < d_; ++j) {
    k.occupations[j] = index % (max_occ_ + 1);
    index /= max_occ_ + 1;
  }
  return k;
}

std::size_t FockBasis::occupation(std::size_t index, std::size_t mode) const {
  if (mode < 1 || mode > d_) throw range_error("mode out of range");
  for (std::size_t j = 1; j < mode; ++j) index /= max_occ_ + 1;
  return index % (max_occ_ + 1);
}

bool FockBasis::contains(const OccupationString& k) const noexcept {
  if (k.statistics != stats_ || k.modes() != d_) return false;
  return std::all_of(k.occupations.begin(), k.occupations.end(), [&](std::size_t x) { return x <= max_occ_; });
}

std::size_t FockBasis::index_of(const OccupationString& k) const {
  if (!contains(k)) throw invalid_argument("occupation string is not a state of this basis");
  std::size_t index = 0;
  for (std::size_t j = d_; j-- > 0;) index = index * (max_occ_ + 1) + k.occupations[j];
  return index;
}

FockBasis fock_basis(std::size_t modes, Statistics statistics, std::size_t truncation) {
  return FockBasis(modes, statistics, truncation);
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  if (c > std::numeric_limits<std::uint64_t>::max()) throw range_error("sector dimension overflows 64 bits");
  return static_cast<std::uint64_t>(c);
}

}  // namespace

std::uint64_t sector_dimension(std::size_t modes, std::size_t particles, Statistics statistics) {
  if (modes == 0) throw range_error("sector dimension needs at least one mode");
  if (statistics == Statistics::fermion) {
    if (particles > modes) {
      throw range_error("fermion sector with N = " + std::to_string(particles) + " > d = " + std::to_string(modes));
    }
    return binomial(modes, particles);
  }
  return binomial(particles + modes - 1, modes - 1);
}

FermionOperator fermion_ladder(std::size_t mode, std::size_t modes, LadderKind kind, SignConvention convention) {
  if (mode < 1 || mode > modes) throw range_error("mode " + std::to_string(mode) + " outside 1.." + std::to_string(modes));
  const FockBasis basis(modes, Statistics::fermion);
  FermionOperator create(basis.size());
  const std::size_t bit = std::size_t{1} << (mode - 1);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k & bit) continue;
    std::int64_t s = 1;
    if (convention == SignConvention::jordan_wigner) {
      const auto below = static_cast<unsigned>(std::popcount(k & (bit - 1)));
      s = below % 2 == 0 ? 1 : -1;
    }
    create.set(k | bit, k, s);
  }
  return kind == LadderKind::create ? create : create.transpose();
}

BosonOperator boson_ladder(std::size_t mode, std::size_t modes, std::size_t truncation, LadderKind kind) {
  if (mode < 1 || mode > modes) throw range_error("mode " + std::to_string(mode) + " outside 1.." + std::to_string(modes));
  if (truncation < 1) throw range_error("boson truncation must be at least 1");
  const FockBasis basis(modes, Statistics::boson, truncation);
  std::size_t stride = 1;
  for (std::size_t j = 1; j < mode; ++j) stride *= truncation + 1;
  BosonOperator op(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const std::size_t occ = basis.occupation(k, mode);
    if (kind == LadderKind::create) {
      if (occ < truncation) op.set(k + stride, k, std::sqrt(static_cast<double>(occ + 1)));
    } else if (occ > 0) {
      op.set(k - stride, k, std::sqrt(static_cast<double>(occ)));
    }
  }
  return op;
}

namespace {

std::int64_t max_abs_deviation(const FermionOperator& x, const FermionOperator& target) {
  const FermionOperator diff = x - target;
  std::int64_t worst = 0;
  for (const auto& [r, c, v] : diff.triplets()) worst = std::max(worst, v < 0 ? -v : v);
  return worst;
}

}  // namespace

CarReport verify_car(std::size_t modes, SignConvention convention) {
  caps::require_at_most(modes, caps::car_modes, "CAR check mode count");
  std::vector<FermionOperator> lower;
  std::vector<FermionOperator> raise;
  for (std::size_t j = 1; j <= modes; ++j) {
    lower.push_back(fermion_ladder(j, modes, LadderKind::annihilate, convention));
    raise.push_back(fermion_ladder(j, modes, LadderKind::create, convention));
  }
  const std::size_t dim = lower.front().dim();
  const FermionOperator zero(dim);
  const FermionOperator id = FermionOperator::identity(dim);
  CarReport report;
  for (std::size_t p = 0; p < modes; ++p) {
    for (std::size_t q = 0; q < modes; ++q) {
      ++report.pairs_checked;
      const std::int64_t v1 = max_abs_deviation(anticommutator(lower[p], lower[q]), zero);
      const std::int64_t v2 = max_abs_deviation(anticommutator(lower[p], raise[q]), p == q ? id : zero);
      report.max_violation = std::max({report.max_violation, v1, v2});
      if ((v1 != 0 || v2 != 0) && !report.first_failure) {
        report.first_failure = std::make_pair(p + 1, q + 1);
        report.failed_relation = v1 != 0 ? "{a_p, a_q} = 0" : "{a_p, a_q^dag} = delta_pq";
      }
    }
  }
  report.ok = report.max_violation == 0;
  return report;
}

CcrReport verify_ccr(std::size_t modes, std::size_t truncation, double tol) {
  const FockBasis basis(modes, Statistics::boson, truncation);
  caps::require_size_at_most(basis.size(), caps::ccr_states, "CCR basis size");
  std::vector<BosonOperator> lower;
  std::vector<BosonOperator> raise;
  for (std::size_t j = 1; j <= modes; ++j) {
    lower.push_back(boson_ladder(j, modes, truncation, LadderKind::annihilate));
    raise.push_back(boson_ladder(j, modes, truncation, LadderKind::create));
  }
  std::vector<std::size_t> safe;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto occ = basis.state(k).occupations;
    if (std::all_of(occ.begin(), occ.end(), [&](std::size_t x) { return x < truncation; })) safe.push_back(k);
  }
  CcrReport report;
  report.safe_states = safe.size();
  // Column deviation of op|k> from expected * |k>.
  auto deviation = [](const BosonOperator& op, std::size_t k, double expected) {
    double worst = 0.0;
    bool diagonal_seen = false;
    for (const auto& [r, v] : op.apply_to_basis(k)) {
      if (r == k) {
        diagonal_seen = true;
        worst = std::max(worst, std::abs(v - expected));
      } else {
        worst = std::max(worst, std::abs(v));
      }
    }
    if (!diagonal_seen) worst = std::max(worst, std::abs(expected));
    return worst;
  };
  for (std::size_t p = 0; p < modes; ++p) {
    for (std::size_t q = 0; q < modes; ++q) {
      const BosonOperator c1 = commutator(lower[p], lower[q]);
      const BosonOperator c2 = commutator(lower[p], raise[q]);
      for (std::size_t k : safe) {
        report.max_violation_safe = std::max(report.max_violation_safe, deviation(c1, k, 0.0));
        report.max_violation_safe = std::max(report.max_violation_safe, deviation(c2, k, p == q ? 1.0 : 0.0));
      }
    }
  }
  const double m = static_cast<double>(truncation);
  for (std::size_t p = 0; p < modes; ++p) {
    const BosonOperator c = commutator(lower[p], raise[p]);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis.occupation(k, p + 1) == truncation) {
        report.artifact_residual = std::max(report.artifact_residual, deviation(c, k, -m));
      }
    }
    if (p == 0) {
      OccupationString top{std::vector<std::size_t>(modes, 0), Statistics::boson};
      top.occupations[0] = truncation;
      const std::size_t k = basis.index_of(top);
      report.truncation_artifact = c.get(k, k);
    }
  }
  report.ok = report.max_violation_safe < tol;
  return report;
}

std::optional<FockStateResult> apply_creation_string(const FockBasis& basis,
                                                     const std::vector<std::size_t>& modes_leftmost_first) {
  const std::size_t d = basis.modes();
  std::map<std::size_t, double> state{{0, 1.0}};
  for (std::size_t step = modes_leftmost_first.size(); step-- > 0;) {
    const std::size_t mode = modes_leftmost_first[step];
    std::map<std::size_t, double> next;
    if (basis.statistics() == Statistics::fermion) {
      const FermionOperator op = fermion_ladder(mode, d, LadderKind::create);
      for (const auto& [k, amp] : state) {
        for (const auto& [r, v] : op.apply_to_basis(k)) next[r] += amp * static_cast<double>(v);
      }
    } else {
      const BosonOperator op = boson_ladder(mode, d, basis.truncation(), LadderKind::create);
      for (const auto& [k, amp] : state) {
        for (const auto& [r, v] : op.apply_to_basis(k)) next[r] += amp * v;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0.0; });
    if (next.empty()) return std::nullopt;
    state = std::move(next);
  }
  // A string of creation operators maps a basis state to a single basis state.
  const auto& [index, amp] = *state.begin();
  FockStateResult out;
  out.index = index;
  out.amplitude = amp;
  out.sign = amp < 0 ? -1 : 1;
  return out;
}

FockStateResult fock_state(const FockBasis& basis, const OccupationString& k) {
  if (!basis.contains(k)) throw invalid_argument("occupation string is not valid for this basis");
  std::vector<std::size_t> modes;
  for (std::size_t j = 0; j < k.modes(); ++j) modes.insert(modes.end(), k.occupations[j], j + 1);
  auto result = apply_creation_string(basis, modes);
  if (!result) throw verification_error("creation string annihilated the vacuum");
  return *result;
}

std::vector<FermionOperator> majorana_ops(std::size_t modes) {
  caps::require_at_most(modes, caps::majorana_modes, "Majorana mode count");
  std::vector<FermionOperator> ops;
  for (std::size_t j = 1; j <= modes; ++j) {
    const FermionOperator a = fermion_ladder(j, modes, LadderKind::annihilate);
    const FermionOperator ad = fermion_ladder(j, modes, LadderKind::create);
    ops.push_back(a + ad);
    ops.push_back((ad - a).with_phase(1));
  }
  return ops;
}

std::vector<FermionOperator> dirac_ops(std::size_t modes) {
  std::vector<FermionOperator> ops;
  for (std::size_t j = 1; j <= modes; ++j) ops.push_back(fermion_ladder(j, modes, LadderKind::annihilate));
  for (std::size_t j = 1; j <= modes; ++j) ops.push_back(fermion_ladder(j, modes, LadderKind::create));
  return ops;
}

namespace {

// c when m == c * I (stored matrix), else nullopt.
template <typename Scalar, typename Close>
std::optional<Scalar> identity_multiple(const FockOperator<Scalar>& m, Close close) {
  const Scalar c = m.get(0, 0);
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (const auto& [col, v] : m.row(r)) {
      if (col != r && !close(v, Scalar{})) return std::nullopt;
    }
    if (!close(m.get(r, r), c)) return std::nullopt;
  }
  return c;
}

template <typename Scalar, typename Close>
GeneralizedCarReport<Scalar> generalized_car(const std::vector<FockOperator<Scalar>>& ops, Close close) {
  GeneralizedCarReport<Scalar> report;
  const std::size_t m = ops.size();
  report.s.assign(m, std::vector<Scalar>(m, Scalar{}));
  if (m == 0) {
    report.fermionic = report.symmetric = true;
    return report;
  }
  for (const auto& op : ops) {
    if (op.dim() != ops.front().dim()) throw dimension_error("operators act on different bases");
  }
  report.fermionic = true;
  for (std::size_t i = 0; i < m && report.fermionic; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto ac = anticommutator(ops[i], ops[j]);
      const auto c = identity_multiple(ac, close);
      if (!c) {
        report.fermionic = false;
        report.first_failure = std::make_pair(i + 1, j + 1);
        report.reason = "anticommutator is not proportional to the identity";
        break;
      }
      // ac represents i^phase * c * 1.
      const int phase = ac.is_zero() ? 0 : ac.phase();
      if (phase % 2 != 0 && !close(*c, Scalar{})) {
        report.fermionic = false;
        report.first_failure = std::make_pair(i + 1, j + 1);
        report.reason = "anticommutator is an imaginary multiple of the identity";
        break;
      }
      report.s[i][j] = phase == 2 ? -*c : *c;
    }
  }
  report.symmetric = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) report.symmetric = report.symmetric && close(report.s[i][j], report.s[j][i]);
  }
  if (report.fermionic && !report.symmetric) {
    report.fermionic = false;
    report.reason = "S is not symmetric";
  }
  return report;
}

}  // namespace

GeneralizedCarReport<std::int64_t> verify_generalized_car(const std::vector<FermionOperator>& ops) {
  return generalized_car(ops, [](std::int64_t a, std::int64_t b) { return a == b; });
}

GeneralizedCarReport<double> verify_generalized_car(const std::vector<BosonOperator>& ops, double tol) {
  return generalized_car(ops, [tol](double a, double b) { return std::abs(a - b) <= tol; });
}

SlaterDeterminant slater_to_first_quantized(const OccupationString& k) {
  if (k.statistics != Statistics::fermion) throw invalid_argument("Slater determinants need a fermionic string");
  for (std::size_t x : k.occupations) {
    if (x > 1) throw invalid_argument("fermionic occupations must be 0 or 1");
  }
  std::vector<std::size_t> occupied;
  for (std::size_t j = 0; j < k.modes(); ++j) {
    if (k.occupations[j] == 1) occupied.push_back(j + 1);
  }
  if (occupied.empty()) throw invalid_argument("Slater determinant needs at least one particle");
  const std::size_t n = occupied.size();
  NBodyTensor psi = antisymmetrize(NBodyTensor::product_state(k.modes(), occupied));
  const auto nfact = static_cast<std::int64_t>(factorial(n));
  psi *= Rational(nfact);
  return {std::move(psi), Rational(nfact)};
}

std::string format_decimal(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) return std::to_string(v);
  return std::string(buf, ptr);
}

namespace {

template <typename Scalar, typename Fmt>
nlohmann::json operator_json(const FockOperator<Scalar>& op, Fmt fmt) {
  nlohmann::json triplets = nlohmann::json::array();
  for (const auto& [r, c, v] : op.triplets()) triplets.push_back({r, c, fmt(v)});
  nlohmann::json out = {{"dim", op.dim()}, {"triplets", std::move(triplets)}};
  if (op.phase() != 0) out["phase"] = op.phase();
  return out;
}

}  // namespace

nlohmann::json to_json(const FermionOperator& op) {
  return operator_json(op, [](std::int64_t v) { return std::to_string(v); });
}

nlohmann::json to_json(const BosonOperator& op) { return operator_json(op, format_decimal); }

}  // namespace permion
