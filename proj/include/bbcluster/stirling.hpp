// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace bbcluster::stirling {

using BigInt = boost::multiprecision::cpp_int;

//! Exact table of unsigned Stirling numbers of the first kind,
//! S(n, k) for 0 <= k <= n <= n_max, built by the recurrence
//! S(n+1, k) = S(n, k-1) + n S(n, k). Immutable once built.
class StirlingTriangle {
 public:
  explicit StirlingTriangle(int n_max);

  int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  //! S(n, k); zero for k > n, domain error for negative indices or
  //! n beyond the table.
  const BigInt& s(int n, int k) const;
  //! Exact row sum, equals n!.
  BigInt row_sum(int n) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_;
};

//! Single unsigned Stirling number of the first kind via the recurrence.
BigInt stirling_first(int n, int k);

//! Coefficients [S(n,1), ..., S(n,n)] of the rising factorial:
//! tau (tau+1) ... (tau+n-1) = sum_k S(n,k) tau^k.
std::vector<BigInt> rising_factorial_coeffs(int n);

//! Partial column sum sum_{n=k}^{n_max} b^n S(n,k) / n!.
//! Monotone increasing in n_max; converges to ln^k(1/(1-b)) / k!.
double column_sum(int k, double b, int n_max);

//! Cluster-count probability assembled through the Stirling route:
//! g_0(tau) tau^k column_sum(k, b, n_max). Converges to the Poisson
//! cluster law as n_max grows.
double cluster_stats_from_stirling(int k, double tau, double w, int n_max);

//! Exact coefficients c_nk = b^n S(n,k) / n! for k = 1..n, evaluated
//! from exact integers (b enters as the exact rational value of the
//! double argument).
std::vector<double> exact_cnk(int n, double b);

//! Recover c_nk from floating-point samples of the relative photon
//! probability q_n(tau) at tau = 1..n, solving the exact rational
//! Vandermonde system for the polynomial coefficients. Meaningful for
//! n <= 8; conditioning erodes the digits beyond that.
std::vector<double> vandermonde_cnk(int n, double w);

}  // namespace bbcluster::stirling
