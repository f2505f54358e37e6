// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bbcluster/distributions.hpp"
#include "bbcluster/philox.hpp"

namespace bbcluster::mc {

//! Deterministic sampling run descriptor. Identical configs produce
//! bit-identical reports, independent of sharding or thread count.
struct SamplerConfig {
  double tau;
  double w;
  long n_samples;
  std::uint64_t seed;
};

struct Chi2Result {
  double stat;
  long dof;
  double p_value;
};

//! Outcome of a sampling run, with distances against the exact law.
struct SampleReport {
  SamplerConfig config;
  dist::PmfTable empirical;          // empirical pmf, tail_mass = 0
  std::vector<long> counts;          // raw histogram over n
  std::vector<long> cluster_counts;  // histogram over K; empty for direct
  double tvd = 0.0;
  double chi2_stat = 0.0;
  long chi2_dof = 0;
  double chi2_p = 0.0;
  double empirical_mean = 0.0;
};

//! Inverse-CDF table for the logarithmic size law f_k = b^k / (k eta).
//! Truncated at cumulative mass 1 - 1e-12 (capped at 2^22 entries);
//! the tail bucket lands on the truncation index.
class LogarithmicTable {
 public:
  explicit LogarithmicTable(dist::DegeneracyParameter w);
  long draw(rng::Philox4x64& gen) const;
  long k_max() const { return static_cast<long>(cum_.size()); }

 private:
  std::vector<double> cum_;
};

//! One Poisson draw. CDF inversion below mean 10, unit-rate exponential
//! interarrival counting above.
long poisson_draw(rng::Philox4x64& gen, double mu);

//! One compound draw for sample index i: cluster count K from
//! Poisson(mu), K sizes from the table, photon count = their sum.
//! The stream key is (seed, index), so any sharding of the index range
//! reproduces the same draws.
std::pair<long, long> compound_draw(std::uint64_t seed, std::uint64_t index,
                                    double mu, const LogarithmicTable& table);

//! Sample the compound process and report distances against the exact
//! photon-count law.
SampleReport sample_compound(const SamplerConfig& config);

//! Sample the photon-count law directly by inverse CDF with tail
//! completion; the comparison twin of sample_compound.
SampleReport sample_nbd_direct(const SamplerConfig& config);

//! iid draws from the logarithmic size law; one stream per draw.
std::vector<long> logarithmic_sampler(double w, std::uint64_t seed,
                                      long count);

//! Total variation distance between a sample histogram and the exact
//! photon-count law at (tau, w).
double tvd_vs_exact(const std::vector<long>& counts, long n_samples,
                    dist::PhaseVolume tau, dist::DegeneracyParameter w);

//! Pearson goodness-of-fit against an arbitrary pmf prefix + tail.
//! Bins are pooled left to right until each expected count reaches 5;
//! dof = pools - 1.
Chi2Result chi2_goodness(const std::vector<long>& counts,
                         const std::vector<double>& probs, double tail_prob);

//! Two-sample Pearson test on a pair of histograms; bins pooled until
//! the combined count reaches 10.
Chi2Result chi2_two_sample(const std::vector<long>& a,
                           const std::vector<long>& b);

}  // namespace bbcluster::mc
