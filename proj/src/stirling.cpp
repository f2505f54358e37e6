// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#include "bbcluster/stirling.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>

#include "bbcluster/distributions.hpp"
#include "bbcluster/numerics.hpp"

namespace bbcluster::stirling {

using BigRat = boost::multiprecision::cpp_rational;

StirlingTriangle::StirlingTriangle(int n_max) : zero_(0) {
  if (n_max < 0)
    throw std::domain_error("StirlingTriangle: requires n_max >= 0");
  rows_.resize(static_cast<size_t>(n_max) + 1);
  rows_[0] = {BigInt(1)};
  for (int n = 0; n < n_max; ++n) {
    const auto& prev = rows_[static_cast<size_t>(n)];
    auto& next = rows_[static_cast<size_t>(n) + 1];
    next.assign(static_cast<size_t>(n) + 2, BigInt(0));
    for (int k = 1; k <= n + 1; ++k) {
      BigInt v = (k <= n) ? BigInt(n) * prev[static_cast<size_t>(k)] : BigInt(0);
      if (k - 1 <= n) v += prev[static_cast<size_t>(k) - 1];
      next[static_cast<size_t>(k)] = v;
    }
  }
}

const BigInt& StirlingTriangle::s(int n, int k) const {
  if (n < 0 || k < 0 || n > n_max())
    throw std::domain_error("StirlingTriangle: index out of range");
  if (k > n) return zero_;
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

BigInt StirlingTriangle::row_sum(int n) const {
  if (n < 0 || n > n_max())
    throw std::domain_error("StirlingTriangle: index out of range");
  BigInt sum = 0;
  for (const auto& v : rows_[static_cast<size_t>(n)]) sum += v;
  return sum;
}

BigInt stirling_first(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::domain_error("stirling_first: requires 0 <= k <= n");
  StirlingTriangle tri(n);
  return tri.s(n, k);
}

std::vector<BigInt> rising_factorial_coeffs(int n) {
  if (n < 1)
    throw std::domain_error("rising_factorial_coeffs: requires n >= 1");
  StirlingTriangle tri(n);
  std::vector<BigInt> coeffs;
  coeffs.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) coeffs.push_back(tri.s(n, k));
  return coeffs;
}

double column_sum(int k, double b, int n_max) {
  if (k < 1) throw std::domain_error("column_sum: requires k >= 1");
  if (!(b > 0.0) || !(b < 1.0))
    throw std::domain_error("column_sum: requires b in (0, 1)");
  if (n_max < k) return 0.0;
  StirlingTriangle tri(n_max);
  // Terms are b^n S(n,k)/n!, all positive. The ratio S(n,k)/n! is formed
  // in exact rational arithmetic so no intermediate overflows double even
  // when S(n,k) and n! individually would.
  BigInt factorial = 1;
  for (int n = 2; n <= k; ++n) factorial *= n;
  num::KahanSum sum;
  double bn = std::pow(b, k);
  for (int n = k; n <= n_max; ++n) {
    if (n > k) factorial *= n;
    const BigRat ratio(tri.s(n, k), factorial);
    sum.add(bn * ratio.convert_to<double>());
    bn *= b;
  }
  return sum.value();
}

double cluster_stats_from_stirling(int k, double tau, double w, int n_max) {
  if (k < 0) throw std::domain_error("cluster_stats_from_stirling: k >= 0");
  dist::DegeneracyParameter dp(w);
  dist::PhaseVolume pv(tau);
  const double g0 = std::exp(-tau * dp.eta());
  if (k == 0) return g0;
  return g0 * std::pow(tau, k) * column_sum(k, dp.b(), n_max);
}

std::vector<double> exact_cnk(int n, double b) {
  if (n < 1) throw std::domain_error("exact_cnk: requires n >= 1");
  StirlingTriangle tri(n);
  BigInt factorial = 1;
  for (int i = 2; i <= n; ++i) factorial *= i;
  // The double b is itself a rational number; powers of it stay exact.
  BigRat bq(b);
  BigRat bn = 1;
  for (int i = 0; i < n; ++i) bn *= bq;
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const BigRat c = bn * BigRat(tri.s(n, k), factorial);
    out.push_back(c.convert_to<double>());
  }
  return out;
}

std::vector<double> vandermonde_cnk(int n, double w) {
  if (n < 1 || n > 12)
    throw std::domain_error("vandermonde_cnk: requires 1 <= n <= 12");
  dist::DegeneracyParameter dp(w);
  // q_n(tau) is a degree-n polynomial with zero constant term, so n
  // samples at tau = 1..n determine the n unknown coefficients. The
  // samples are doubles; everything after that is exact rational.
  const int m = n;
  std::vector<std::vector<BigRat>> a(
      static_cast<size_t>(m), std::vector<BigRat>(static_cast<size_t>(m) + 1));
  for (int i = 0; i < m; ++i) {
    const BigRat tau(i + 1);
    BigRat pow_tau = tau;
    for (int j = 0; j < m; ++j) {
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = pow_tau;
      pow_tau *= tau;
    }
    const double q = dist::relative_prob(
        n, dist::PhaseVolume(static_cast<double>(i + 1)), dp);
    a[static_cast<size_t>(i)][static_cast<size_t>(m)] = BigRat(q);
  }
  // Exact Gaussian elimination with partial pivoting by magnitude.
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int r = col + 1; r < m; ++r) {
      if (abs(a[static_cast<size_t>(r)][static_cast<size_t>(col)]) >
          abs(a[static_cast<size_t>(pivot)][static_cast<size_t>(col)]))
        pivot = r;
    }
    std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(pivot)]);
    const BigRat diag = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
    if (diag == 0) throw std::runtime_error("vandermonde_cnk: singular");
    for (int r = col + 1; r < m; ++r) {
      const BigRat factor =
          a[static_cast<size_t>(r)][static_cast<size_t>(col)] / diag;
      for (int j = col; j <= m; ++j)
        a[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
            factor * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
    }
  }
  std::vector<BigRat> x(static_cast<size_t>(m));
  for (int r = m - 1; r >= 0; --r) {
    BigRat rhs = a[static_cast<size_t>(r)][static_cast<size_t>(m)];
    for (int j = r + 1; j < m; ++j)
      rhs -= a[static_cast<size_t>(r)][static_cast<size_t>(j)] *
             x[static_cast<size_t>(j)];
    x[static_cast<size_t>(r)] =
        rhs / a[static_cast<size_t>(r)][static_cast<size_t>(r)];
  }
  std::vector<double> out;
  out.reserve(static_cast<size_t>(m));
  for (const auto& v : x) out.push_back(v.convert_to<double>());
  return out;
}

}  // namespace bbcluster::stirling
