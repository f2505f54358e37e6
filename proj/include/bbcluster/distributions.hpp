// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace bbcluster::dist {

//! Mean photon number per coherence volume, with the derived quantities
//! used throughout: success probability p, cluster base b, and cluster
//! intensity per unit phase volume eta.
class DegeneracyParameter {
 public:
  explicit DegeneracyParameter(double w);

  double w() const { return w_; }
  //! p = 1 / (1 + w), in (0, 1].
  double p() const { return 1.0 / (1.0 + w_); }
  //! b = w / (1 + w), in [0, 1). Satisfies b + p = 1.
  double b() const { return w_ / (1.0 + w_); }
  //! eta = ln(1 + w) >= 0.
  double eta() const;
  //! ln b, evaluated without cancellation for both small and large w.
  double log_b() const;

 private:
  double w_;
};

//! Phase-space volume in coherence-volume units; any positive real.
class PhaseVolume {
 public:
  explicit PhaseVolume(double tau);
  double tau() const { return tau_; }

 private:
  double tau_;
};

//! Finite pmf prefix over n = 0..size()-1 plus the unallocated tail mass.
struct PmfTable {
  std::vector<double> probs;
  double tail_mass = 0.0;

  long size() const { return static_cast<long>(probs.size()); }
};

//! Photon-count probability p_n = C(tau+n-1, n) w^n / (1+w)^(n+tau).
//! Log-gamma evaluation with a direct-product fallback for n <= 20.
//! w = 0 is the degenerate point mass at n = 0.
double be_pmf(long n, PhaseVolume tau, DegeneracyParameter w);

//! Tabulate be_pmf by the ratio recurrence p_{n+1} = p_n (tau+n) b / (n+1).
//! Stops at n_max or once cumulative mass reaches 1 - 1e-12, whichever
//! comes first; the remaining mass is reported, never dropped.
PmfTable be_pmf_table(long n_max, PhaseVolume tau, DegeneracyParameter w);

//! Negative binomial pmf C(tau+n-1, n) p^tau (1-p)^n over real tau.
//! Evaluated independently of be_pmf so the two paths cross-check.
double nbd_pmf(long n, PhaseVolume tau, double p);

//! Cluster-count law: Poisson with mean eta * tau.
double cluster_count_pmf(long k, PhaseVolume tau, DegeneracyParameter w);

//! Cluster-size law: logarithmic distribution f_k = b^k / (k eta), k >= 1.
double cluster_size_pmf(long k, DegeneracyParameter w);

//! Probability of n photons relative to the vacuum term:
//! q_n = p_n / p_0 = (b^n / n!) tau (tau+1) ... (tau+n-1).
double relative_prob(long n, PhaseVolume tau, DegeneracyParameter w);

//! Mean cluster size w / ln(1+w); strictly above 1 for w > 0.
//! The w -> 0 limit equals 1 and is returned only when limit_at_zero is
//! set; otherwise w <= 0 is a domain error.
double mean_photons_per_cluster(double w, bool limit_at_zero = false);

}  // namespace bbcluster::dist
