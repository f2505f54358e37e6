// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace bbcluster {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bbcluster
