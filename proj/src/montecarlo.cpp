// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#include "bbcluster/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bbcluster/numerics.hpp"

namespace bbcluster::mc {

namespace {

constexpr double kTableMassTarget = 1e-12;
constexpr long kTableCap = 1L << 22;

void validate(const SamplerConfig& config) {
  if (config.n_samples < 1)
    throw std::domain_error("SamplerConfig: requires n_samples >= 1");
}

// pmf prefix p_0..p_n by the ratio recurrence, no early stop.
std::vector<double> pmf_prefix(long n_hi, double tau,
                               dist::DegeneracyParameter w) {
  std::vector<double> probs;
  probs.reserve(static_cast<size_t>(n_hi) + 1);
  if (w.w() == 0.0) {
    probs.assign(static_cast<size_t>(n_hi) + 1, 0.0);
    probs[0] = 1.0;
    return probs;
  }
  const double b = w.b();
  double p = std::exp(-tau * w.eta());
  for (long n = 0; n <= n_hi; ++n) {
    probs.push_back(p);
    p *= (tau + static_cast<double>(n)) * b / static_cast<double>(n + 1);
  }
  return probs;
}

void bump(std::vector<long>& hist, long value) {
  if (value >= static_cast<long>(hist.size()))
    hist.resize(static_cast<size_t>(value) + 1, 0);
  ++hist[static_cast<size_t>(value)];
}

SampleReport finish_report(const SamplerConfig& config,
                           std::vector<long> counts,
                           std::vector<long> cluster_counts) {
  dist::PhaseVolume tau(config.tau);
  dist::DegeneracyParameter w(config.w);
  SampleReport report;
  report.config = config;
  report.counts = std::move(counts);
  report.cluster_counts = std::move(cluster_counts);

  const double n = static_cast<double>(config.n_samples);
  report.empirical.probs.reserve(report.counts.size());
  long long weighted = 0;
  for (size_t i = 0; i < report.counts.size(); ++i) {
    report.empirical.probs.push_back(static_cast<double>(report.counts[i]) / n);
    weighted += static_cast<long long>(i) * report.counts[i];
  }
  report.empirical.tail_mass = 0.0;
  report.empirical_mean = static_cast<double>(weighted) / n;
  report.tvd = tvd_vs_exact(report.counts, config.n_samples, tau, w);

  const long n_hi = static_cast<long>(report.counts.size()) - 1;
  const std::vector<double> probs = pmf_prefix(n_hi, config.tau, w);
  num::KahanSum mass;
  for (double p : probs) mass.add(p);
  const Chi2Result gof = chi2_goodness(report.counts, probs,
                                       std::max(0.0, 1.0 - mass.value()));
  report.chi2_stat = gof.stat;
  report.chi2_dof = gof.dof;
  report.chi2_p = gof.p_value;
  return report;
}

}  // namespace

LogarithmicTable::LogarithmicTable(dist::DegeneracyParameter w) {
  if (w.w() == 0.0)
    throw std::domain_error("LogarithmicTable: requires w > 0");
  const double b = w.b();
  const double eta = w.eta();
  double term = b / eta;
  num::KahanSum cum;
  for (long k = 1; k <= kTableCap; ++k) {
    cum.add(term);
    cum_.push_back(cum.value());
    if (cum.value() >= 1.0 - kTableMassTarget) break;
    term *= b * static_cast<double>(k) / static_cast<double>(k + 1);
  }
}

long LogarithmicTable::draw(rng::Philox4x64& gen) const {
  const double u = gen.next_u01();
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  if (it == cum_.end()) return k_max();  // tail bucket
  return static_cast<long>(it - cum_.begin()) + 1;
}

long poisson_draw(rng::Philox4x64& gen, double mu) {
  if (!(mu >= 0.0)) throw std::domain_error("poisson_draw: requires mu >= 0");
  if (mu == 0.0) return 0;
  if (mu < 10.0) {
    const double u = gen.next_u01();
    double p = std::exp(-mu);
    double cum = p;
    long k = 0;
    while (u > cum && k < 2000) {
      ++k;
      p *= mu / static_cast<double>(k);
      cum += p;
    }
    return k;
  }
  long k = 0;
  double acc = 0.0;
  while (true) {
    acc += -std::log1p(-gen.next_u01());
    if (acc > mu) break;
    ++k;
  }
  return k;
}

std::pair<long, long> compound_draw(std::uint64_t seed, std::uint64_t index,
                                    double mu, const LogarithmicTable& table) {
  rng::Philox4x64 gen(seed, index);
  const long k = poisson_draw(gen, mu);
  long n = 0;
  for (long j = 0; j < k; ++j) n += table.draw(gen);
  return {k, n};
}

SampleReport sample_compound(const SamplerConfig& config) {
  validate(config);
  dist::PhaseVolume tau(config.tau);
  dist::DegeneracyParameter w(config.w);
  const double mu = w.eta() * tau.tau();

  std::vector<long> counts{0};
  std::vector<long> cluster_counts{0};
  if (mu == 0.0) {
    counts[0] = config.n_samples;
    cluster_counts[0] = config.n_samples;
    return finish_report(config, std::move(counts), std::move(cluster_counts));
  }
  const LogarithmicTable table(w);
  for (long i = 0; i < config.n_samples; ++i) {
    const auto [k, n] =
        compound_draw(config.seed, static_cast<std::uint64_t>(i), mu, table);
    bump(counts, n);
    bump(cluster_counts, k);
  }
  return finish_report(config, std::move(counts), std::move(cluster_counts));
}

SampleReport sample_nbd_direct(const SamplerConfig& config) {
  validate(config);
  dist::PhaseVolume tau(config.tau);
  dist::DegeneracyParameter w(config.w);

  // Inverse CDF over the tabulated pmf. The table holds cumulative mass
  // 1 - 1e-12; draws beyond it extend the recurrence until covered.
  const double t = tau.tau();
  const double b = w.b();
  std::vector<double> cum;
  double p = std::exp(-t * w.eta());
  num::KahanSum mass;
  long n = 0;
  while (true) {
    mass.add(p);
    cum.push_back(mass.value());
    if (mass.value() >= 1.0 - kTableMassTarget || n >= kTableCap) break;
    p *= (t + static_cast<double>(n)) * b / static_cast<double>(n + 1);
    ++n;
  }
  const double last_p = p;
  const long last_n = n;

  std::vector<long> counts{0};
  for (long i = 0; i < config.n_samples; ++i) {
    rng::Philox4x64 gen(config.seed, static_cast<std::uint64_t>(i));
    const double u = gen.next_u01();
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    long value;
    if (it != cum.end()) {
      value = static_cast<long>(it - cum.begin());
    } else {
      // Tail completion: continue the recurrence past the table.
      double pp = last_p;
      double cc = cum.back();
      value = last_n;
      while (u >= cc && value < kTableCap + 2000) {
        pp *= (t + static_cast<double>(value)) * b /
              static_cast<double>(value + 1);
        ++value;
        cc += pp;
      }
    }
    bump(counts, value);
  }
  return finish_report(config, std::move(counts), {});
}

std::vector<long> logarithmic_sampler(double w, std::uint64_t seed,
                                      long count) {
  if (count < 0)
    throw std::domain_error("logarithmic_sampler: requires count >= 0");
  dist::DegeneracyParameter dp(w);
  if (dp.w() == 0.0)
    throw std::domain_error("logarithmic_sampler: requires w > 0");
  const LogarithmicTable table(dp);
  std::vector<long> out;
  out.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) {
    rng::Philox4x64 gen(seed, static_cast<std::uint64_t>(i));
    out.push_back(table.draw(gen));
  }
  return out;
}

double tvd_vs_exact(const std::vector<long>& counts, long n_samples,
                    dist::PhaseVolume tau, dist::DegeneracyParameter w) {
  if (n_samples < 1) throw std::domain_error("tvd_vs_exact: n_samples >= 1");
  const long n_hi = static_cast<long>(counts.size()) - 1;
  const std::vector<double> probs = pmf_prefix(n_hi, tau.tau(), w);
  num::KahanSum acc;
  num::KahanSum mass;
  const double n = static_cast<double>(n_samples);
  for (size_t i = 0; i < probs.size(); ++i) {
    const double emp =
        i < counts.size() ? static_cast<double>(counts[i]) / n : 0.0;
    acc.add(std::abs(emp - probs[i]));
    mass.add(probs[i]);
  }
  // Everything beyond the observed support is missed exact mass.
  acc.add(std::max(0.0, 1.0 - mass.value()));
  return 0.5 * acc.value();
}

Chi2Result chi2_goodness(const std::vector<long>& counts,
                         const std::vector<double>& probs, double tail_prob) {
  if (counts.size() != probs.size())
    throw std::domain_error("chi2_goodness: size mismatch");
  long n_total = 0;
  for (long c : counts) n_total += c;
  if (n_total < 1) throw std::domain_error("chi2_goodness: empty sample");
  const double n = static_cast<double>(n_total);

  // Pool adjacent bins until each pool's expected count reaches 5. The
  // final pool absorbs the tail mass (observed tail count is zero since
  // counts covers the full observed support).
  std::vector<double> obs_pool, exp_pool;
  double obs_acc = 0.0, exp_acc = 0.0;
  for (size_t i = 0; i < counts.size(); ++i) {
    obs_acc += static_cast<double>(counts[i]);
    exp_acc += n * probs[i];
    if (exp_acc >= 5.0) {
      obs_pool.push_back(obs_acc);
      exp_pool.push_back(exp_acc);
      obs_acc = exp_acc = 0.0;
    }
  }
  exp_acc += n * tail_prob;
  if (!obs_pool.empty()) {
    obs_pool.back() += obs_acc;
    exp_pool.back() += exp_acc;
  } else {
    obs_pool.push_back(obs_acc);
    exp_pool.push_back(exp_acc);
  }

  Chi2Result r;
  r.dof = static_cast<long>(obs_pool.size()) - 1;
  num::KahanSum stat;
  for (size_t i = 0; i < obs_pool.size(); ++i) {
    const double d = obs_pool[i] - exp_pool[i];
    stat.add(d * d / exp_pool[i]);
  }
  r.stat = stat.value();
  r.p_value = r.dof >= 1 ? num::chi2_sf(r.stat, r.dof) : 1.0;
  return r;
}

Chi2Result chi2_two_sample(const std::vector<long>& a,
                           const std::vector<long>& b) {
  const size_t len = std::max(a.size(), b.size());
  double na = 0.0, nb = 0.0;
  for (long v : a) na += static_cast<double>(v);
  for (long v : b) nb += static_cast<double>(v);
  if (na < 1.0 || nb < 1.0)
    throw std::domain_error("chi2_two_sample: empty sample");

  std::vector<double> pool_a, pool_b;
  double acc_a = 0.0, acc_b = 0.0;
  for (size_t i = 0; i < len; ++i) {
    acc_a += i < a.size() ? static_cast<double>(a[i]) : 0.0;
    acc_b += i < b.size() ? static_cast<double>(b[i]) : 0.0;
    if (acc_a + acc_b >= 10.0) {
      pool_a.push_back(acc_a);
      pool_b.push_back(acc_b);
      acc_a = acc_b = 0.0;
    }
  }
  if (acc_a + acc_b > 0.0) {
    if (!pool_a.empty()) {
      pool_a.back() += acc_a;
      pool_b.back() += acc_b;
    } else {
      pool_a.push_back(acc_a);
      pool_b.push_back(acc_b);
    }
  }

  Chi2Result r;
  r.dof = static_cast<long>(pool_a.size()) - 1;
  num::KahanSum stat;
  for (size_t i = 0; i < pool_a.size(); ++i) {
    const double total = pool_a[i] + pool_b[i];
    const double d = nb * pool_a[i] - na * pool_b[i];
    stat.add(d * d / (na * nb * total));
  }
  r.stat = stat.value();
  r.p_value = r.dof >= 1 ? num::chi2_sf(r.stat, r.dof) : 1.0;
  return r;
}

}  // namespace bbcluster::mc
