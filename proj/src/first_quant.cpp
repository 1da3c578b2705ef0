// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/first_quant.hpp>

#include <permion/errors.hpp>
#include <permion/group.hpp>
#include <permion/limits.hpp>

#include <limits>

namespace permion {

namespace {

std::size_t checked_power(std::size_t d, std::size_t particles) {
  if (d == 0) throw range_error("single-particle dimension must be positive");
  caps::require_at_most(particles, caps::tensor_particles, "particle count");
  std::size_t size = 1;
  for (std::size_t k = 0; k < particles; ++k) {
    if (size > caps::tensor_size / d) {
      throw range_error("tensor size d^N exceeds cap " + std::to_string(caps::tensor_size));
    }
    size *= d;
  }
  return size;
}

}  // namespace

NBodyTensor::NBodyTensor(std::size_t d, std::size_t particles)
    : d_(d), n_(particles), amps_(checked_power(d, particles)) {}

NBodyTensor::NBodyTensor(std::size_t d, std::size_t particles, std::vector<Rational> amplitudes)
    : d_(d), n_(particles), amps_(std::move(amplitudes)) {
  if (amps_.size() != checked_power(d, particles)) {
    throw dimension_error("tensor needs d^N = " + std::to_string(checked_power(d, particles)) + " amplitudes, got " +
                          std::to_string(amps_.size()));
  }
}

NBodyTensor NBodyTensor::product_state(std::size_t d, const std::vector<std::size_t>& modes) {
  NBodyTensor t(d, modes.size());
  t.at(modes) = 1;
  return t;
}

std::size_t NBodyTensor::flat_index(const std::vector<std::size_t>& coords) const {
  if (coords.size() != n_) throw dimension_error("tensor needs " + std::to_string(n_) + " coordinates");
  std::size_t flat = 0;
  for (std::size_t x : coords) {
    if (x < 1 || x > d_) throw range_error("tensor coordinate outside 1.." + std::to_string(d_));
    flat = flat * d_ + (x - 1);
  }
  return flat;
}

std::vector<std::size_t> NBodyTensor::coords(std::size_t flat) const {
  std::vector<std::size_t> c(n_);
  for (std::size_t k = n_; k-- > 0;) {
    c[k] = flat % d_ + 1;
    flat /= d_;
  }
  return c;
}

const Rational& NBodyTensor::at(const std::vector<std::size_t>& coords) const { return amps_[flat_index(coords)]; }
Rational& NBodyTensor::at(const std::vector<std::size_t>& coords) { return amps_[flat_index(coords)]; }

bool NBodyTensor::is_zero() const {
  for (const auto& a : amps_) {
    if (!a.is_zero()) return false;
  }
  return true;
}

NBodyTensor& NBodyTensor::operator+=(const NBodyTensor& o) {
  if (o.d_ != d_ || o.n_ != n_) throw dimension_error("tensor shape mismatch");
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += o.amps_[i];
  return *this;
}

NBodyTensor& NBodyTensor::operator-=(const NBodyTensor& o) {
  if (o.d_ != d_ || o.n_ != n_) throw dimension_error("tensor shape mismatch");
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] -= o.amps_[i];
  return *this;
}

NBodyTensor& NBodyTensor::operator*=(const Rational& s) {
  for (auto& a : amps_) a *= s;
  return *this;
}

Rational dot(const NBodyTensor& a, const NBodyTensor& b) {
  if (a.local_dim() != b.local_dim() || a.particles() != b.particles()) throw dimension_error("tensor shape mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

NBodyTensor permute_particles(const NBodyTensor& psi, const Permutation& sigma) {
  const std::size_t n = psi.particles();
  if (sigma.degree() != n) throw dimension_error("permutation degree does not match particle count");
  NBodyTensor out(psi.local_dim(), n);
  std::vector<std::size_t> source(n);
  for (std::size_t flat = 0; flat < psi.size(); ++flat) {
    const auto x = psi.coords(flat);
    for (std::size_t k = 0; k < n; ++k) source[k] = x[sigma(k + 1) - 1];
    out[flat] = psi.at(source);
  }
  return out;
}

namespace {

NBodyTensor project(const NBodyTensor& psi, bool antisymmetric) {
  const std::size_t n = psi.particles();
  if (n == 0) return psi;
  NBodyTensor acc(psi.local_dim(), n);
  const auto group = enumerate_group(n);
  for (const auto& sigma : group) {
    const NBodyTensor moved = permute_particles(psi, sigma);
    if (antisymmetric && sign(sigma) < 0) {
      acc -= moved;
    } else {
      acc += moved;
    }
  }
  acc *= Rational(1, static_cast<std::int64_t>(group.size()));
  return acc;
}

}  // namespace

NBodyTensor symmetrize(const NBodyTensor& psi) { return project(psi, false); }
NBodyTensor antisymmetrize(const NBodyTensor& psi) { return project(psi, true); }

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::bosonic: return "bosonic";
    case Symmetry::fermionic: return "fermionic";
    case Symmetry::neither: return "neither";
    case Symmetry::both: return "both";
  }
  return "neither";
}

Symmetry classify_symmetry(const NBodyTensor& psi) {
  const std::size_t n = psi.particles();
  bool bosonic = true;
  bool fermionic = true;
  for (std::size_t k = 1; k < n && (bosonic || fermionic); ++k) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i + 1;
    std::swap(img[k - 1], img[k]);
    const NBodyTensor swapped = permute_particles(psi, Permutation(img));
    if (bosonic && swapped != psi) bosonic = false;
    if (fermionic && swapped != psi * Rational(-1)) fermionic = false;
  }
  if (bosonic && fermionic) return Symmetry::both;
  if (bosonic) return Symmetry::bosonic;
  if (fermionic) return Symmetry::fermionic;
  return Symmetry::neither;
}

nlohmann::json to_json(const NBodyTensor& t) {
  nlohmann::json amps = nlohmann::json::array();
  for (const auto& a : t.amplitudes()) amps.push_back(a.str());
  return {{"d", t.local_dim()}, {"particles", t.particles()}, {"amplitudes", std::move(amps)}};
}

NBodyTensor tensor_from_json(const nlohmann::json& j) {
  try {
    const auto d = j.at("d").get<std::size_t>();
    const auto particles = j.at("particles").get<std::size_t>();
    std::vector<Rational> amps;
    for (const auto& a : j.at("amplitudes")) {
      amps.push_back(a.is_string() ? Rational::parse(a.get<std::string>()) : Rational(a.get<std::int64_t>()));
    }
    return NBodyTensor(d, particles, std::move(amps));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("tensor JSON: ") + e.what());
  }
}

}  // namespace permion
