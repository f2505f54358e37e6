// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>
#include <vector>

namespace bbcluster::io {

//! One CSV cell: text label, float value, or integer value.
using Cell = std::variant<std::string, double, long long>;

//! A rectangular output table: leading '#' metadata lines, exactly one
//! header row, then data rows.
struct Table {
  std::vector<std::string> meta;  // emitted as "# <line>"
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

//! Output float precision: significant digits for CSV values. Defaults
//! to 17 (exact round-trip); the BBCLUSTER_PRECISION environment
//! variable overrides, clamped to [1, 17].
int output_precision();

//! Shortest-faithful rendering: %.Ng with N significant digits.
std::string format_double(double v, int precision);

//! Serialize with '\n' line endings. Floats use the given precision.
std::string to_csv(const Table& table, int precision);

//! Parse a CSV document produced by to_csv, re-typing numeric cells.
//! to_csv(parse_csv(s)) reproduces s byte for byte at full precision.
Table parse_csv(const std::string& text);

//! Standard metadata lines for the '#' block: tool version, command
//! echo, pinned constants.
std::vector<std::string> meta_lines(const std::string& command);

}  // namespace bbcluster::io
