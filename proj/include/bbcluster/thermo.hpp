// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bbcluster/distributions.hpp"

namespace bbcluster::thermo {

//! A radiation mode: frequency and temperature plus the derived
//! dimensionless ratio x = h nu / (k_B T) everything else hangs off.
class ThermalMode {
 public:
  ThermalMode(double nu_hz, double temp_k);

  double nu() const { return nu_; }
  double temperature() const { return temp_; }
  //! Photon energy h nu in joules.
  double epsilon() const;
  //! Inverse thermal energy 1 / (k_B T) in 1/joules.
  double beta() const;
  //! x = beta epsilon, dimensionless.
  double x() const;

 private:
  double nu_;
  double temp_;
};

//! Per-rank mode averages: cluster count eta_m = b^m / m, photon count
//! k_m = b^m, and energy eps_m = epsilon b^m, with b = exp(-x).
struct RankAverages {
  double eta_m;
  double k_m;
  double eps_m;
};

//! Mean photon number per mode, w = 1 / (exp(x) - 1) via expm1.
//! x below 1e-300 is rejected as unphysical; large x underflows to 0.
dist::DegeneracyParameter degeneracy(const ThermalMode& mode);

//! Mean cluster count per mode, eta = -ln(1 - exp(-x)) = ln(1 + w).
double cluster_intensity(const ThermalMode& mode);

//! Photon-gas partition function Z = 1 / (1 - exp(-x)); eta = ln Z.
double partition_function(const ThermalMode& mode);

//! Mode averages for cluster rank m >= 1. Quantities decaying like
//! exp(-m x) underflow to exact zero rather than raising.
RankAverages rank_mode_averages(const ThermalMode& mode, int m);

//! Mode count per unit volume in an energy shell:
//! 8 pi epsilon^2 delta_epsilon / (c^3 h^3), both polarizations included.
double mode_density(double epsilon_j, double delta_epsilon_j);

}  // namespace bbcluster::thermo
