// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#include "bbcluster/spectra.hpp"

#include <cmath>
#include <stdexcept>

#include "bbcluster/constants.hpp"
#include "bbcluster/numerics.hpp"

namespace bbcluster::spectra {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::domain_error(std::string("spectra: requires positive ") + what);
}

void require_rank(int m) {
  if (m < 1) throw std::domain_error("spectra: requires rank m >= 1");
}

double cube(double v) { return v * v * v; }

// Dimensionless window for spectral quadrature. Integrands decay like
// x^3 exp(-x); beyond 60 the tail is below 1e-22 of the total.
constexpr double kQuadLo = 1e-8;
constexpr double kQuadHi = 60.0;

}  // namespace

double u_m_nu(double nu, double temp, int m) {
  require_positive(nu, "nu");
  require_positive(temp, "T");
  require_rank(m);
  const double x = kPlanck * nu / (kBoltzmann * temp);
  return 8.0 * kPi * kPlanck * cube(nu) / cube(kLightSpeed) *
         std::exp(-static_cast<double>(m) * x);
}

double planck_u_nu(double nu, double temp) {
  require_positive(nu, "nu");
  require_positive(temp, "T");
  const double x = kPlanck * nu / (kBoltzmann * temp);
  return 8.0 * kPi * kPlanck * cube(nu) / cube(kLightSpeed) / std::expm1(x);
}

double wien_cluster_peak(int m, double temp) {
  require_rank(m);
  require_positive(temp, "T");
  return 3.0 * kBoltzmann * temp / (static_cast<double>(m) * kPlanck);
}

double sigma_rank(int m) {
  require_rank(m);
  const double m2 = static_cast<double>(m) * static_cast<double>(m);
  return 48.0 * kPi * std::pow(kBoltzmann, 4) /
         (m2 * m2 * cube(kLightSpeed) * cube(kPlanck));
}

double sigma_total() {
  return 8.0 * std::pow(kPi, 5) * std::pow(kBoltzmann, 4) /
         (15.0 * cube(kLightSpeed) * cube(kPlanck));
}

double photon_number_density(int m, double temp) {
  require_rank(m);
  require_positive(temp, "T");
  return 16.0 * kPi * cube(kBoltzmann) * cube(temp) /
         (cube(static_cast<double>(m)) * cube(kLightSpeed) * cube(kPlanck));
}

double u_m_lambda(double lambda, double temp, int m) {
  require_positive(lambda, "lambda");
  require_positive(temp, "T");
  require_rank(m);
  const double hc = kPlanck * kLightSpeed;
  const double y = hc / (lambda * kBoltzmann * temp);
  const double m2 = static_cast<double>(m) * static_cast<double>(m);
  return 8.0 * kPi * hc / (m2 * m2 * std::pow(lambda, 5)) * std::exp(-y);
}

double modified_planck_lambda(double lambda, double temp) {
  require_positive(lambda, "lambda");
  require_positive(temp, "T");
  const double hc = kPlanck * kLightSpeed;
  const double y = hc / (lambda * kBoltzmann * temp);
  return 4.0 * std::pow(kPi, 5) * hc / (45.0 * std::pow(lambda, 5)) *
         std::exp(-y);
}

double planck_lambda(double lambda, double temp) {
  require_positive(lambda, "lambda");
  require_positive(temp, "T");
  const double hc = kPlanck * kLightSpeed;
  const double y = hc / (lambda * kBoltzmann * temp);
  return 8.0 * kPi * hc / std::pow(lambda, 5) / std::expm1(y);
}

ClusterConstants clusterization_constants() {
  ClusterConstants out;
  const double pi4 = std::pow(kPi, 4);
  out.phi = 90.0 / pi4;
  out.theta = 1.0 - out.phi;
  out.zeta3_ratio = num::zeta3();
  out.n_fraction = 1.0 - 1.0 / out.zeta3_ratio;
  out.sigma_total = sigma_total();
  const double n1_per_t3 = photon_number_density(1, 1.0);
  for (int m = 1; m <= 10; ++m) {
    out.sigma_m.push_back(sigma_rank(m));
    out.n_m_per_t3.push_back(n1_per_t3 / cube(static_cast<double>(m)));
  }
  return out;
}

int planck_rank_bound(double x, double tol) {
  if (!(x > 0.0)) throw std::domain_error("planck_rank_bound: requires x > 0");
  if (!(tol > 0.0) || tol >= 1.0)
    throw std::domain_error("planck_rank_bound: requires tol in (0, 1)");
  const double b = std::exp(-x);
  // Truncating the geometric rank sum after M terms leaves a relative
  // error b^M; demand b^M <= tol (1 - b).
  const double m = std::ceil(std::log(tol * (1.0 - b)) / std::log(b));
  return m < 1.0 ? 1 : static_cast<int>(m);
}

LambdaComparison compare_lambda_spectra(double temp) {
  require_positive(temp, "T");
  const double hc = kPlanck * kLightSpeed;
  const double kt = kBoltzmann * temp;

  // Bracket both peaks around the closed-form guesses; the numerical
  // search never consults the analytic peak beyond centering the bracket.
  const double guess_mod = hc / (5.0 * kt);
  const double lambda_mod = num::find_peak(
      [temp](double lam) { return modified_planck_lambda(lam, temp); },
      0.1 * guess_mod, 10.0 * guess_mod);
  const double lambda_planck = num::find_peak(
      [temp](double lam) { return planck_lambda(lam, temp); },
      0.1 * guess_mod, 10.0 * guess_mod);

  // Areas, integrated through the public spectral functions with the
  // substitution lambda = hc / (y k T); the jacobian is hc/(y^2 kT).
  const auto area = [&](auto density) {
    return num::integrate(
        [&](double y) {
          const double lam = hc / (y * kt);
          return density(lam) * hc / (y * y * kt);
        },
        kQuadLo, kQuadHi);
  };
  const double area_mod =
      area([temp](double lam) { return modified_planck_lambda(lam, temp); });
  const double area_planck =
      area([temp](double lam) { return planck_lambda(lam, temp); });

  LambdaComparison cmp;
  cmp.lambda_mod_peak = lambda_mod;
  cmp.lambda_planck_peak = lambda_planck;
  cmp.peak_ratio = modified_planck_lambda(lambda_mod, temp) /
                   planck_lambda(lambda_planck, temp);
  cmp.peak_offset_rel = (lambda_planck - lambda_mod) / lambda_planck;
  cmp.area_rel_diff = std::abs(area_mod - area_planck) / area_planck;
  return cmp;
}

SpectrumCurve sample_curve(const std::string& space,
                           const std::string& rank_label, double temp,
                           double lo, double hi, int npts) {
  require_positive(temp, "T");
  if (space != "nu" && space != "lambda")
    throw std::domain_error("sample_curve: space must be nu or lambda");
  if (npts < 2) throw std::domain_error("sample_curve: requires npts >= 2");
  if (!(lo > 0.0) || !(hi > lo))
    throw std::domain_error("sample_curve: requires 0 < lo < hi");

  int rank = 0;
  if (rank_label == "total") {
    rank = 0;
  } else if (rank_label == "planck") {
    if (space != "lambda")
      throw std::domain_error(
          "sample_curve: planck label applies to lambda space only");
    rank = -1;
  } else {
    if (rank_label.empty() ||
        rank_label.find_first_not_of("0123456789") != std::string::npos ||
        rank_label.size() > 7)
      throw std::domain_error("sample_curve: unknown rank label " +
                              rank_label);
    rank = std::stoi(rank_label);
    if (rank < 1) throw std::domain_error("sample_curve: rank must be >= 1");
  }

  SpectrumCurve curve;
  curve.space = space;
  curve.rank_label = rank_label;
  curve.temp = temp;
  curve.abscissa.reserve(static_cast<size_t>(npts));
  curve.density.reserve(static_cast<size_t>(npts));
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / (npts - 1);
  for (int i = 0; i < npts; ++i) {
    const double a = std::exp(log_lo + step * i);
    double d = 0.0;
    if (space == "nu") {
      d = (rank == 0) ? planck_u_nu(a, temp) : u_m_nu(a, temp, rank);
    } else {
      if (rank == 0)
        d = modified_planck_lambda(a, temp);
      else if (rank == -1)
        d = planck_lambda(a, temp);
      else
        d = u_m_lambda(a, temp, rank);
    }
    curve.abscissa.push_back(a);
    curve.density.push_back(d);
  }
  return curve;
}

}  // namespace bbcluster::spectra
