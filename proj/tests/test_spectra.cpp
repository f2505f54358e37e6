// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "bbcluster/constants.hpp"
#include "bbcluster/numerics.hpp"
#include "bbcluster/spectra.hpp"

using namespace bbcluster;

// All reference numbers below were computed with 40-digit arithmetic
// from the 2019 SI values of h, c, and k_B.

TEST_CASE("frequency-space densities at reference points") {
  CHECK(spectra::planck_u_nu(3.5e14, 6000.0) ==
        doctest::Approx(1.7165802466601654e-15).epsilon(1e-13));
  CHECK(spectra::planck_u_nu(5e14, 6000.0) ==
        doctest::Approx(1.4423579307119372e-15).epsilon(1e-13));
  CHECK(spectra::u_m_nu(5e14, 6000.0, 1) ==
        doctest::Approx(1.4159235548931258e-15).epsilon(1e-13));
  CHECK(spectra::u_m_nu(5e14, 6000.0, 2) ==
        doctest::Approx(2.5949907844495745e-17).epsilon(1e-13));
}

TEST_CASE("rank densities sum to the planck law") {
  for (double nu : {1e13, 1e14, 5e14, 2e15}) {
    const double x = kPlanck * nu / (kBoltzmann * 6000.0);
    const int m_hi = spectra::planck_rank_bound(x, 1e-12);
    num::KahanSum sum;
    for (int m = m_hi; m >= 1; --m) sum.add(spectra::u_m_nu(nu, 6000.0, m));
    CHECK(sum.value() ==
          doctest::Approx(spectra::planck_u_nu(nu, 6000.0)).epsilon(1e-11));
  }
}

TEST_CASE("rank bound shrinks deep in the wien regime") {
  CHECK(spectra::planck_rank_bound(30.0, 1e-10) == 1);
  CHECK(spectra::planck_rank_bound(0.03, 1e-10) > 100);
  // Tighter tolerance can only demand more ranks.
  CHECK(spectra::planck_rank_bound(1.0, 1e-12) >=
        spectra::planck_rank_bound(1.0, 1e-6));
}

TEST_CASE("wien displacement prototype peaks") {
  CHECK(spectra::wien_cluster_peak(1, 6000.0) ==
        doctest::Approx(3.7505914421989631e14).epsilon(1e-14));
  // Triple intensity maximum: numerical argmax agrees with 3kT/mh.
  for (int m : {1, 3}) {
    const double closed = spectra::wien_cluster_peak(m, 6000.0);
    const double numeric = num::find_peak(
        [m](double nu) { return spectra::u_m_nu(nu, 6000.0, m); },
        0.2 * closed, 5.0 * closed);
    CHECK(numeric == doctest::Approx(closed).epsilon(1e-9));
  }
  // The peak scales as 1/m.
  CHECK(spectra::wien_cluster_peak(4, 6000.0) ==
        doctest::Approx(spectra::wien_cluster_peak(1, 6000.0) / 4.0)
            .epsilon(1e-15));
}

TEST_CASE("per-rank radiation constants") {
  CHECK(spectra::sigma_rank(1) ==
        doctest::Approx(6.9902714961944789e-16).epsilon(1e-13));
  CHECK(spectra::sigma_total() ==
        doctest::Approx(7.5657332502800046e-16).epsilon(1e-13));
  // Exact 1 : 1/16 : 1/81 ladder.
  CHECK(spectra::sigma_rank(1) / spectra::sigma_rank(2) ==
        doctest::Approx(16.0).epsilon(1e-14));
  CHECK(spectra::sigma_rank(1) / spectra::sigma_rank(3) ==
        doctest::Approx(81.0).epsilon(1e-14));

  // sigma_1 integrates the rank-1 density: quadrature cross-check.
  const double temp = 6000.0;
  const double scale = kBoltzmann * temp / kPlanck;
  const double integral = num::integrate(
      [temp, scale](double x) {
        return spectra::u_m_nu(scale * x, temp, 1) * scale;
      },
      1e-8, 60.0);
  CHECK(integral ==
        doctest::Approx(spectra::sigma_rank(1) * std::pow(temp, 4))
            .epsilon(1e-9));

  // Total radiation density at 6000 K, the a T^4 law.
  CHECK(spectra::sigma_total() * std::pow(6000.0, 4) ==
        doctest::Approx(0.98051902923628860).epsilon(1e-13));
}

TEST_CASE("clusterization constants record") {
  const auto cc = spectra::clusterization_constants();
  CHECK(cc.phi == doctest::Approx(0.92393840292159017).epsilon(1e-14));
  CHECK(cc.theta == doctest::Approx(0.076061597078409833).epsilon(1e-12));
  CHECK(cc.phi + cc.theta == 1.0);
  CHECK(cc.zeta3_ratio ==
        doctest::Approx(1.2020569031595943).epsilon(1e-14));
  CHECK(cc.n_fraction ==
        doctest::Approx(0.16809262741929253).epsilon(1e-12));
  REQUIRE(cc.sigma_m.size() == 10);
  CHECK(cc.sigma_m[0] == spectra::sigma_rank(1));
  CHECK(cc.sigma_m[9] == spectra::sigma_rank(10));
  CHECK(cc.sigma_total == spectra::sigma_total());
  REQUIRE(cc.n_m_per_t3.size() == 10);
  // N_m / T^3 coefficients restore the density at any temperature.
  CHECK(cc.n_m_per_t3[0] * std::pow(2.725, 3) ==
        doctest::Approx(spectra::photon_number_density(1, 2.725))
            .epsilon(1e-14));
}

TEST_CASE("photon number density per rank") {
  CHECK(spectra::photon_number_density(1, 2.725) ==
        doctest::Approx(341498677.48810372).epsilon(1e-13));
  // 1/m^3 ladder and T^3 scaling.
  CHECK(spectra::photon_number_density(3, 2.725) ==
        doctest::Approx(341498677.48810372 / 27.0).epsilon(1e-13));
  CHECK(spectra::photon_number_density(1, 5.45) ==
        doctest::Approx(8.0 * 341498677.48810372).epsilon(1e-13));
}

TEST_CASE("wavelength-space densities at reference points") {
  CHECK(spectra::u_m_lambda(5e-7, 6000.0, 1) ==
        doctest::Approx(1320151.3020878352).epsilon(1e-13));
  CHECK(spectra::u_m_lambda(5e-7, 6000.0, 2) ==
        doctest::Approx(82509.456380489702).epsilon(1e-13));
  // Amplitude falls as 1/m^4 with an m-independent shape.
  CHECK(spectra::u_m_lambda(5e-7, 6000.0, 2) * 16.0 ==
        doctest::Approx(spectra::u_m_lambda(5e-7, 6000.0, 1)).epsilon(1e-14));
  CHECK(spectra::modified_planck_lambda(5e-7, 6000.0) ==
        doctest::Approx(1428830.4262636755).epsilon(1e-13));
  CHECK(spectra::planck_lambda(5e-7, 6000.0) ==
        doctest::Approx(1331151.0945607192).epsilon(1e-13));
}

TEST_CASE("wavelength comparison record") {
  const auto cmp = spectra::compare_lambda_spectra(6000.0);
  CHECK(cmp.peak_ratio ==
        doctest::Approx(1.0749031193843347).epsilon(1e-10));
  CHECK(cmp.peak_offset_rel ==
        doctest::Approx(0.0069771536511447393).epsilon(1e-7));
  CHECK(cmp.area_rel_diff < 1e-8);
  CHECK(cmp.lambda_mod_peak < cmp.lambda_planck_peak);

  // Dimensionless outputs do not depend on temperature.
  const auto cold = spectra::compare_lambda_spectra(300.0);
  CHECK(std::abs(cold.peak_ratio - cmp.peak_ratio) < 1e-10);
  CHECK(std::abs(cold.peak_offset_rel - cmp.peak_offset_rel) < 1e-10);
  // The peak positions themselves scale as 1/T.
  CHECK(cold.lambda_planck_peak ==
        doctest::Approx(cmp.lambda_planck_peak * 20.0).epsilon(1e-9));
}

TEST_CASE("sampled spectrum curves") {
  const auto curve = spectra::sample_curve("nu", "2", 6000.0, 1e13, 1e15, 50);
  CHECK(curve.space == "nu");
  CHECK(curve.rank_label == "2");
  REQUIRE(curve.abscissa.size() == 50);
  REQUIRE(curve.density.size() == 50);
  CHECK(curve.abscissa.front() == doctest::Approx(1e13).epsilon(1e-12));
  CHECK(curve.abscissa.back() == doctest::Approx(1e15).epsilon(1e-12));
  // Log-spaced grid: constant ratio between neighbors.
  const double ratio = curve.abscissa[1] / curve.abscissa[0];
  CHECK(curve.abscissa[26] / curve.abscissa[25] ==
        doctest::Approx(ratio).epsilon(1e-10));
  for (size_t i = 0; i < curve.abscissa.size(); i += 13)
    CHECK(curve.density[i] ==
          doctest::Approx(spectra::u_m_nu(curve.abscissa[i], 6000.0, 2))
              .epsilon(1e-13));

  const auto total =
      spectra::sample_curve("lambda", "total", 6000.0, 1e-7, 1e-5, 20);
  CHECK(total.density[10] ==
        doctest::Approx(spectra::modified_planck_lambda(total.abscissa[10],
                                                        6000.0))
            .epsilon(1e-13));
  const auto planck =
      spectra::sample_curve("lambda", "planck", 6000.0, 1e-7, 1e-5, 20);
  CHECK(planck.density[5] ==
        doctest::Approx(spectra::planck_lambda(planck.abscissa[5], 6000.0))
            .epsilon(1e-13));
}

TEST_CASE("spectra domain validation") {
  CHECK_THROWS_AS(spectra::u_m_nu(5e14, 6000.0, 0), std::domain_error);
  CHECK_THROWS_AS(spectra::u_m_nu(0.0, 6000.0, 1), std::domain_error);
  CHECK_THROWS_AS(spectra::planck_u_nu(5e14, -1.0), std::domain_error);
  CHECK_THROWS_AS(spectra::sigma_rank(0), std::domain_error);
  CHECK_THROWS_AS(spectra::planck_rank_bound(0.0, 1e-10), std::domain_error);
  CHECK_THROWS_AS(spectra::planck_rank_bound(1.0, 2.0), std::domain_error);
  // planck is a wavelength-space label only.
  CHECK_THROWS_AS(spectra::sample_curve("nu", "planck", 6000.0, 1e13, 1e15, 5),
                  std::domain_error);
  CHECK_THROWS_AS(
      spectra::sample_curve("energy", "1", 6000.0, 1e13, 1e15, 5),
      std::domain_error);
  CHECK_THROWS_AS(spectra::sample_curve("nu", "1", 6000.0, 1e13, 1e15, 1),
                  std::domain_error);
  CHECK_THROWS_AS(spectra::sample_curve("nu", "zero", 6000.0, 1e13, 1e15, 5),
                  std::domain_error);
}
