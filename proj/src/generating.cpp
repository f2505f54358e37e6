// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#include "bbcluster/generating.hpp"

#include <cmath>
#include <stdexcept>

#include "bbcluster/numerics.hpp"

namespace bbcluster::gf {

double gf_be(double z, dist::PhaseVolume tau, dist::DegeneracyParameter w) {
  if (!(z >= 0.0)) throw std::domain_error("gf_be: requires z >= 0");
  const double base = 1.0 + w.w() * (1.0 - z);
  if (!(base > 0.0))
    throw std::domain_error("gf_be: z beyond radius of convergence");
  return std::exp(-tau.tau() * std::log(base));
}

double gf_poisson(double z, dist::PhaseVolume tau, double eta) {
  if (!(eta >= 0.0)) throw std::domain_error("gf_poisson: requires eta >= 0");
  return std::exp(eta * tau.tau() * (z - 1.0));
}

double gf_logarithmic(double z, dist::DegeneracyParameter w) {
  if (!(z >= 0.0) || z > 1.0)
    throw std::domain_error("gf_logarithmic: requires z in [0, 1]");
  if (w.w() == 0.0)
    throw std::domain_error("gf_logarithmic: requires w > 0");
  // ln(1-b) = -ln(1+w) exactly; log1p keeps small bz accurate.
  return std::log1p(-w.b() * z) / (-w.eta());
}

double composition_residual(double z, dist::PhaseVolume tau,
                            dist::DegeneracyParameter w) {
  const double lhs = gf_be(z, tau, w);
  const double rhs = gf_poisson(gf_logarithmic(z, w), tau, w.eta());
  return std::abs(lhs - rhs);
}

double gf_series_check(double z, dist::PhaseVolume tau,
                       dist::DegeneracyParameter w, long n_max) {
  if (!(z >= 0.0) || z >= 1.0)
    throw std::domain_error("gf_series_check: requires z in [0, 1)");
  const dist::PmfTable table = dist::be_pmf_table(n_max, tau, w);
  num::KahanSum series;
  double zn = 1.0;
  for (double p : table.probs) {
    series.add(p * zn);
    zn *= z;
  }
  return std::abs(series.value() - gf_be(z, tau, w));
}

}  // namespace bbcluster::gf
