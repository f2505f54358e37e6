// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "bbcluster/distributions.hpp"
#include "bbcluster/stirling.hpp"

using namespace bbcluster;

TEST_CASE("stirling triangle small values") {
  stirling::StirlingTriangle tri(10);
  CHECK(tri.s(0, 0) == 1);
  CHECK(tri.s(1, 1) == 1);
  CHECK(tri.s(3, 1) == 2);
  CHECK(tri.s(3, 2) == 3);
  CHECK(tri.s(3, 3) == 1);
  CHECK(tri.s(5, 2) == 50);
  CHECK(tri.s(10, 3) == 1172700);
  CHECK(tri.s(2, 3) == 0);  // k > n
  CHECK(tri.s(4, 0) == 0);  // no permutation of 4 items has zero cycles
}

TEST_CASE("stirling row sums are factorials") {
  stirling::StirlingTriangle tri(30);
  stirling::BigInt factorial = 1;
  for (int n = 1; n <= 30; ++n) {
    factorial *= n;
    CHECK(tri.row_sum(n) == factorial);
  }
}

TEST_CASE("single stirling number helper matches the triangle") {
  stirling::StirlingTriangle tri(12);
  for (int n = 0; n <= 12; n += 3)
    for (int k = 0; k <= n; ++k) CHECK(stirling::stirling_first(n, k) == tri.s(n, k));
}

TEST_CASE("rising factorial coefficients reproduce the polynomial") {
  // tau(tau+1)...(tau+5) at tau = 2 is 7!/1! = 5040.
  const auto coeffs = stirling::rising_factorial_coeffs(6);
  REQUIRE(coeffs.size() == 6);
  stirling::BigInt value = 0;
  stirling::BigInt power = 1;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    power *= 2;  // tau^k at tau = 2, starting from tau^1
    value += coeffs[k] * power;
  }
  CHECK(value == 5040);
}

TEST_CASE("column sums converge to powers of the cluster intensity") {
  // sum_n b^n S(n,k) / n! -> ln^k(1/(1-b)) / k!; b = 1/2 gives ln 2.
  const double log2 = std::log(2.0);
  CHECK(std::abs(stirling::column_sum(1, 0.5, 80) - log2) < 1e-14);
  CHECK(std::abs(stirling::column_sum(2, 0.5, 80) - log2 * log2 / 2.0) <
        1e-14);
  double kfact = 1.0;
  for (int k = 1; k <= 12; ++k) {
    kfact *= k;
    CHECK(std::abs(stirling::column_sum(k, 0.5, 80) -
                   std::pow(log2, k) / kfact) < 1e-10);
  }
}

TEST_CASE("column sums increase monotonically in the cutoff") {
  double prev = 0.0;
  for (int n_max = 3; n_max <= 60; n_max += 3) {
    const double cur = stirling::column_sum(3, 0.6, n_max);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("stirling route reproduces the poisson cluster law") {
  for (double t : {0.5, 1.0, 2.0}) {
    for (double wv : {0.5, 1.0}) {
      dist::PhaseVolume tau(t);
      dist::DegeneracyParameter w(wv);
      for (int k = 0; k <= 6; ++k) {
        const double via_stirling =
            stirling::cluster_stats_from_stirling(k, t, wv, 200);
        const double direct = dist::cluster_count_pmf(k, tau, w);
        CHECK(via_stirling == doctest::Approx(direct).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("exact coefficients match their defining ratio") {
  // c_nk = b^n S(n,k) / n! for n = 6, b = 0.5: check k = 1 and k = n.
  const auto c = stirling::exact_cnk(6, 0.5);
  REQUIRE(c.size() == 6);
  // S(6,1) = 120, 6! = 720, b^6 = 1/64.
  CHECK(c[0] == doctest::Approx(120.0 / 720.0 / 64.0).epsilon(1e-15));
  CHECK(c[5] == doctest::Approx(1.0 / 720.0 / 64.0).epsilon(1e-15));
}

TEST_CASE("vandermonde recovery of the polynomial coefficients") {
  // Sampling q_n(tau) at tau = 1..n pins the polynomial exactly; the
  // recovered coefficients match b^n S(n,k)/n! to rounding.
  for (int n = 1; n <= 8; ++n) {
    const double wv = 1.0;
    const auto recovered = stirling::vandermonde_cnk(n, wv);
    const auto exact = stirling::exact_cnk(n, 0.5);
    REQUIRE(recovered.size() == static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
      CHECK(recovered[static_cast<size_t>(k)] ==
            doctest::Approx(exact[static_cast<size_t>(k)]).epsilon(1e-9));
  }
}

TEST_CASE("two-photon relative probability is quadratic in tau") {
  // q_2(tau) = c_21 tau + c_22 tau^2 with both coefficients positive.
  const auto c = stirling::vandermonde_cnk(2, 1.0);
  REQUIRE(c.size() == 2);
  CHECK(c[0] > 0.0);
  CHECK(c[1] > 0.0);
  // b = 1/2: c_21 = b^2/2 = 1/8, c_22 = b^2/2 = 1/8.
  CHECK(c[0] == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(c[1] == doctest::Approx(0.125).epsilon(1e-12));
  dist::PhaseVolume tau(3.0);
  dist::DegeneracyParameter w(1.0);
  CHECK(dist::relative_prob(2, tau, w) ==
        doctest::Approx(c[0] * 3.0 + c[1] * 9.0).epsilon(1e-12));
}

TEST_CASE("stirling domain validation") {
  stirling::StirlingTriangle tri(5);
  CHECK_THROWS_AS(tri.s(-1, 0), std::domain_error);
  CHECK_THROWS_AS(tri.s(0, -1), std::domain_error);
  CHECK_THROWS_AS(tri.s(6, 2), std::domain_error);
  CHECK_THROWS_AS(stirling::vandermonde_cnk(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(stirling::vandermonde_cnk(13, 1.0), std::domain_error);
  CHECK_THROWS_AS(stirling::column_sum(0, 0.5, 10), std::domain_error);
  CHECK_THROWS_AS(stirling::column_sum(1, 1.5, 10), std::domain_error);
}
