// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace bbcluster::spectra {

//! Per-rank radiated energy density in frequency space:
//! u_m(nu) = (8 pi h nu^3 / c^3) exp(-m h nu / k T), in J m^-3 Hz^-1.
double u_m_nu(double nu, double temp, int m);

//! Total blackbody energy density per unit frequency (all ranks):
//! (8 pi h nu^3 / c^3) / (exp(x) - 1), evaluated with expm1.
double planck_u_nu(double nu, double temp);

//! Closed-form peak frequency of u_m_nu: 3 k T / (m h).
double wien_cluster_peak(int m, double temp);

//! Per-rank radiation constant sigma_m = 48 pi k^4 / (m^4 c^3 h^3),
//! in J m^-3 K^-4. The integral of u_m_nu over nu equals sigma_m T^4.
double sigma_rank(int m);

//! Sum of sigma_m over all ranks: 8 pi^5 k^4 / (15 c^3 h^3), the
//! radiation energy constant.
double sigma_total();

//! Photon number density carried by rank-m clusters:
//! N_m = 16 pi k^3 T^3 / (m^3 c^3 h^3), photons per m^3.
double photon_number_density(int m, double temp);

//! Per-rank energy density in wavelength space:
//! u_m(lambda) = (8 pi h c / (m^4 lambda^5)) exp(-h c / (lambda k T)).
//! Shape is m-independent; amplitude scales as 1/m^4.
double u_m_lambda(double lambda, double temp, int m);

//! Cluster-aware total wavelength spectrum:
//! (4 pi^5 h c / (45 lambda^5)) exp(-h c / (lambda k T)).
double modified_planck_lambda(double lambda, double temp);

//! Standard wavelength spectrum (8 pi h c / lambda^5) / (exp(y) - 1).
double planck_lambda(double lambda, double temp);

//! Universal constants of the cluster decomposition. All fields are
//! temperature-independent; N_m enters as the coefficient N_m / T^3
//! so the record stays free of an arbitrary reference temperature.
struct ClusterConstants {
  double phi;          // rank-1 energy share, 90 / pi^4
  double theta;        // energy share of ranks >= 2, 1 - phi
  double zeta3_ratio;  // sum_m N_m / N_1
  double n_fraction;   // photon-number share in ranks >= 2, 1 - 1/zeta(3)
  std::vector<double> sigma_m;   // ranks 1..10
  double sigma_total;
  std::vector<double> n_m_per_t3;  // N_m / T^3, ranks 1..10
};

ClusterConstants clusterization_constants();

//! Comparison record between the standard and the cluster-aware
//! wavelength spectra. All fields are dimensionless and T-independent.
struct LambdaComparison {
  double peak_ratio;       // max(modified) / max(planck_lambda)
  double peak_offset_rel;  // (lambda_planck_peak - lambda_mod_peak) / lambda_planck_peak
  double area_rel_diff;    // |integral difference| / planck integral
  double lambda_planck_peak;
  double lambda_mod_peak;
};

//! Numerical comparison at temperature T: peaks located by golden
//! section plus parabolic polish, areas by adaptive quadrature in the
//! dimensionless variable.
LambdaComparison compare_lambda_spectra(double temp);

//! Number of ranks needed so the truncated rank sum reproduces the
//! Planck density at x = h nu / k T within relative tol.
int planck_rank_bound(double x, double tol);

//! Sampled spectrum column. rank_label is "1", "2", ... for single
//! ranks, "total" for the full law, or "planck" for the standard
//! wavelength law in lambda space.
struct SpectrumCurve {
  std::string space;  // "nu" or "lambda"
  std::string rank_label;
  double temp;
  std::vector<double> abscissa;
  std::vector<double> density;
};

//! Sample one curve on a log-spaced grid of npts points over [lo, hi].
SpectrumCurve sample_curve(const std::string& space,
                           const std::string& rank_label, double temp,
                           double lo, double hi, int npts);

}  // namespace bbcluster::spectra
