// Copyright 2026 The Permion Authors
// SPDX-License-Identifier: Apache-2.0

#include <permion/errors.hpp>
