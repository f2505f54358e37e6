// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#include "bbcluster/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "bbcluster/constants.hpp"
#include "bbcluster/version.hpp"

namespace bbcluster::io {

int output_precision() {
  const char* env = std::getenv("BBCLUSTER_PRECISION");
  if (env == nullptr || *env == '\0') return 17;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0') return 17;
  if (v < 1) return 1;
  if (v > 17) return 17;
  return static_cast<int>(v);
}

std::string format_double(double v, int precision) {
  if (v == 0.0) v = 0.0;  // emit negative zero as "0" so integers round-trip
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

namespace {

std::string format_cell(const Cell& cell, int precision) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* d = std::get_if<double>(&cell))
    return format_double(*d, precision);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld", std::get<long long>(cell));
  return buf;
}

Cell retype(const std::string& field) {
  if (field.empty()) return field;
  char* end = nullptr;
  errno = 0;
  const long long ll = std::strtoll(field.c_str(), &end, 10);
  if (errno == 0 && end != field.c_str() && *end == '\0') return ll;
  // No errno test here: strtod flags gradual underflow to subnormals
  // with ERANGE, yet those are valid cells that round-trip. Finite
  // results are accepted; overflow to infinity falls through.
  const double d = std::strtod(field.c_str(), &end);
  if (std::isfinite(d) && end != field.c_str() && *end == '\0') return d;
  return field;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(field);
  return out;
}

}  // namespace

std::string to_csv(const Table& table, int precision) {
  std::ostringstream os;
  for (const auto& m : table.meta) os << "# " << m << '\n';
  for (size_t i = 0; i < table.header.size(); ++i) {
    if (i) os << ',';
    os << table.header[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << format_cell(row[i], precision);
    }
    os << '\n';
  }
  return os.str();
}

Table parse_csv(const std::string& text) {
  Table table;
  std::istringstream is(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] == '#') {
      // Strip "# " (or bare "#") to recover the metadata payload.
      size_t start = 1;
      if (start < line.size() && line[start] == ' ') ++start;
      table.meta.push_back(line.substr(start));
      continue;
    }
    if (!header_seen) {
      table.header = split_csv_line(line);
      header_seen = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(retype(f));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<std::string> meta_lines(const std::string& command) {
  std::vector<std::string> lines;
  lines.push_back(std::string("bbcluster ") + kVersion);
  lines.push_back("command: " + command);
  lines.push_back(std::string("constants: h=") + format_double(kPlanck, 17) +
                  " c=" + format_double(kLightSpeed, 17) +
                  " k_B=" + format_double(kBoltzmann, 17));
  return lines;
}

}  // namespace bbcluster::io
