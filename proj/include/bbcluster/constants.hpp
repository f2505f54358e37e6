// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace bbcluster {

//! Physical constants, pinned to the exact 2019 SI defining values.
//! These are definitions, not measurements; they must never be "updated".
inline constexpr double kPlanck = 6.62607015e-34;      // J s
inline constexpr double kLightSpeed = 299792458.0;     // m / s
inline constexpr double kBoltzmann = 1.380649e-23;     // J / K

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace bbcluster
