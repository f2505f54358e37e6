// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#include "bbcluster/distributions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bbcluster/numerics.hpp"

namespace bbcluster::dist {

namespace {

constexpr long kDirectProductMax = 20;
constexpr double kTailTarget = 1e-12;

void require_count(long n, const char* who) {
  if (n < 0) throw std::domain_error(std::string(who) + ": requires n >= 0");
}

}  // namespace

DegeneracyParameter::DegeneracyParameter(double w) : w_(w) {
  if (!(w >= 0.0) || !std::isfinite(w))
    throw std::domain_error("DegeneracyParameter: requires w >= 0");
}

double DegeneracyParameter::eta() const { return std::log1p(w_); }

double DegeneracyParameter::log_b() const {
  // b = w/(1+w): for w > 1 write ln b = -ln(1 + 1/w), else ln w - ln(1+w).
  if (w_ > 1.0) return -std::log1p(1.0 / w_);
  return std::log(w_) - std::log1p(w_);
}

PhaseVolume::PhaseVolume(double tau) : tau_(tau) {
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw std::domain_error("PhaseVolume: requires tau > 0");
}

double be_pmf(long n, PhaseVolume tau, DegeneracyParameter w) {
  require_count(n, "be_pmf");
  const double t = tau.tau();
  if (w.w() == 0.0) return n == 0 ? 1.0 : 0.0;
  const double p0 = std::exp(-t * w.eta());
  if (n <= kDirectProductMax) {
    // p_n = p_0 * prod_{i=0}^{n-1} b (tau + i) / (i + 1); short products
    // avoid the lgamma cancellation entirely.
    double r = p0;
    const double b = w.b();
    for (long i = 0; i < n; ++i)
      r *= b * (t + static_cast<double>(i)) / static_cast<double>(i + 1);
    return r;
  }
  const double dn = static_cast<double>(n);
  const double log_p = std::lgamma(t + dn) - std::lgamma(dn + 1.0) -
                       std::lgamma(t) + dn * w.log_b() - t * w.eta();
  return std::exp(log_p);
}

PmfTable be_pmf_table(long n_max, PhaseVolume tau, DegeneracyParameter w) {
  require_count(n_max, "be_pmf_table");
  const double t = tau.tau();
  PmfTable table;
  table.probs.reserve(static_cast<size_t>(n_max) + 1);

  if (w.w() == 0.0) {
    table.probs.push_back(1.0);
    table.tail_mass = 0.0;
    return table;
  }

  const double b = w.b();
  double p = std::exp(-t * w.eta());
  num::KahanSum cum;
  long n = 0;
  while (true) {
    table.probs.push_back(p);
    cum.add(p);
    if (n == n_max || cum.value() >= 1.0 - kTailTarget) break;
    p *= (t + static_cast<double>(n)) * b / static_cast<double>(n + 1);
    ++n;
  }
  table.tail_mass = std::max(0.0, 1.0 - cum.value());
  return table;
}

double nbd_pmf(long n, PhaseVolume tau, double p) {
  require_count(n, "nbd_pmf");
  if (!(p > 0.0) || p > 1.0)
    throw std::domain_error("nbd_pmf: requires p in (0, 1]");
  const double t = tau.tau();
  const double q = 1.0 - p;
  if (q == 0.0) return n == 0 ? 1.0 : 0.0;
  if (n <= kDirectProductMax) {
    double r = std::exp(t * std::log(p));
    for (long i = 0; i < n; ++i)
      r *= q * (t + static_cast<double>(i)) / static_cast<double>(i + 1);
    return r;
  }
  const double dn = static_cast<double>(n);
  const double log_p = std::lgamma(t + dn) - std::lgamma(dn + 1.0) -
                       std::lgamma(t) + dn * std::log(q) + t * std::log(p);
  return std::exp(log_p);
}

double cluster_count_pmf(long k, PhaseVolume tau, DegeneracyParameter w) {
  require_count(k, "cluster_count_pmf");
  const double mu = w.eta() * tau.tau();
  if (mu == 0.0) return k == 0 ? 1.0 : 0.0;
  if (k <= kDirectProductMax) {
    double r = std::exp(-mu);
    for (long i = 1; i <= k; ++i) r *= mu / static_cast<double>(i);
    return r;
  }
  const double dk = static_cast<double>(k);
  return std::exp(dk * std::log(mu) - mu - std::lgamma(dk + 1.0));
}

double cluster_size_pmf(long k, DegeneracyParameter w) {
  if (k < 1) throw std::domain_error("cluster_size_pmf: requires k >= 1");
  if (w.w() == 0.0)
    throw std::domain_error("cluster_size_pmf: requires w > 0");
  const double dk = static_cast<double>(k);
  return std::exp(dk * w.log_b()) / (dk * w.eta());
}

double relative_prob(long n, PhaseVolume tau, DegeneracyParameter w) {
  require_count(n, "relative_prob");
  if (n == 0) return 1.0;
  if (w.w() == 0.0) return 0.0;
  const double t = tau.tau();
  if (n <= kDirectProductMax) {
    double r = 1.0;
    const double b = w.b();
    for (long i = 0; i < n; ++i)
      r *= b * (t + static_cast<double>(i)) / static_cast<double>(i + 1);
    return r;
  }
  const double dn = static_cast<double>(n);
  return std::exp(std::lgamma(t + dn) - std::lgamma(t) -
                  std::lgamma(dn + 1.0) + dn * w.log_b());
}

double mean_photons_per_cluster(double w, bool limit_at_zero) {
  if (w == 0.0 && limit_at_zero) return 1.0;
  if (!(w > 0.0))
    throw std::domain_error("mean_photons_per_cluster: requires w > 0");
  return w / std::log1p(w);
}

}  // namespace bbcluster::dist
