// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string_view>

// Desk-scale caps. They guard factorial and exponential constructions and are
// configuration constants rather than architectural limits. The environment
// variable PERMION_MAX_N may lower (never raise) every degree/mode cap.

namespace permion::caps {

inline constexpr std::size_t enumerate_degree = 8;
inline constexpr std::size_t table_degree = 6;
inline constexpr std::size_t classes_degree = 7;
inline constexpr std::size_t natural_degree = 8;
inline constexpr std::size_t regular_degree = 4;
inline constexpr std::size_t homomorphism_degree = 4;
inline constexpr std::size_t symmetrizer_degree = 5;
inline constexpr std::size_t standard_degree = 6;
inline constexpr std::size_t partitions_degree = 10;
inline constexpr std::size_t tableaux_degree = 8;
inline constexpr std::size_t hook_degree = 10;
inline constexpr std::size_t schur_weyl_copies = 3;
inline constexpr std::size_t schur_weyl_local_dim = 3;
inline constexpr std::size_t tensor_particles = 6;
inline constexpr std::size_t tensor_size = 1'000'000;
inline constexpr std::size_t fermion_modes = 12;
inline constexpr std::size_t car_modes = 8;
inline constexpr std::size_t majorana_modes = 6;
inline constexpr std::size_t boson_states = 100'000;
inline constexpr std::size_t ccr_states = 10'000;

// min(default_cap, PERMION_MAX_N) when the variable holds a positive integer.
std::size_t effective(std::size_t default_cap);

// Throws range_error naming what when value exceeds effective(cap).
void require_at_most(std::size_t value, std::size_t cap, std::string_view what);

// Same check for state-count caps, which PERMION_MAX_N does not touch.
void require_size_at_most(std::size_t value, std::size_t cap, std::string_view what);

}  // namespace permion::caps
