// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace bbcluster::verify {

enum class Status { kPass, kFail, kSkip };

struct CheckResult {
  int id;
  std::string name;
  Status status;
  std::string detail;
};

//! Run the acceptance checks in order. The full level includes the
//! million-sample Monte Carlo checks; the fast level marks them
//! skipped. Every check reports a measured quantity in detail.
std::vector<CheckResult> run_acceptance(bool full);

//! True when no executed check failed (skips do not fail).
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace bbcluster::verify
