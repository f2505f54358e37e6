// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#include "bbcluster/thermo.hpp"

#include <cmath>
#include <stdexcept>

#include "bbcluster/constants.hpp"

namespace bbcluster::thermo {

ThermalMode::ThermalMode(double nu_hz, double temp_k)
    : nu_(nu_hz), temp_(temp_k) {
  if (!(nu_hz > 0.0) || !std::isfinite(nu_hz))
    throw std::domain_error("ThermalMode: requires nu > 0");
  if (!(temp_k > 0.0) || !std::isfinite(temp_k))
    throw std::domain_error("ThermalMode: requires T > 0");
}

double ThermalMode::epsilon() const { return kPlanck * nu_; }

double ThermalMode::beta() const { return 1.0 / (kBoltzmann * temp_); }

double ThermalMode::x() const {
  return (kPlanck * nu_) / (kBoltzmann * temp_);
}

dist::DegeneracyParameter degeneracy(const ThermalMode& mode) {
  const double x = mode.x();
  if (x < 1e-300) throw std::domain_error("degeneracy: x is unphysically small");
  // 1/expm1 keeps full precision at small x and underflows cleanly at
  // large x (expm1 overflows to +inf, the ratio to +0).
  return dist::DegeneracyParameter(1.0 / std::expm1(x));
}

double cluster_intensity(const ThermalMode& mode) {
  const double x = mode.x();
  if (x < 1e-300)
    throw std::domain_error("cluster_intensity: x is unphysically small");
  // -log1p(-exp(-x)) stays accurate in both tails: for large x it reduces
  // to exp(-x), for small x the log magnifies no cancellation.
  return -std::log1p(-std::exp(-x));
}

double partition_function(const ThermalMode& mode) {
  const double x = mode.x();
  if (x < 1e-300)
    throw std::domain_error("partition_function: x is unphysically small");
  return -1.0 / std::expm1(-x);
}

RankAverages rank_mode_averages(const ThermalMode& mode, int m) {
  if (m < 1) throw std::domain_error("rank_mode_averages: requires m >= 1");
  const double km = std::exp(-static_cast<double>(m) * mode.x());
  return RankAverages{km / static_cast<double>(m), km, mode.epsilon() * km};
}

double mode_density(double epsilon_j, double delta_epsilon_j) {
  if (!(epsilon_j > 0.0))
    throw std::domain_error("mode_density: requires epsilon > 0");
  if (!(delta_epsilon_j > 0.0))
    throw std::domain_error("mode_density: requires delta_epsilon > 0");
  const double hc = kPlanck * kLightSpeed;
  return 8.0 * kPi * epsilon_j * epsilon_j * delta_epsilon_j / (hc * hc * hc);
}

}  // namespace bbcluster::thermo
