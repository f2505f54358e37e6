// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bbcluster/distributions.hpp"

namespace bbcluster::gf {

//! Generating function of the photon-count law: P(z) = (1+w-wz)^(-tau).
//! Defined for z below the radius of convergence 1 + 1/w; the checks in
//! this project evaluate it on [0, 1] plus a small margin for centered
//! derivative stencils at z = 1.
double gf_be(double z, dist::PhaseVolume tau, dist::DegeneracyParameter w);

//! Generating function of the Poisson cluster-count law:
//! G(z) = exp(eta tau (z-1)). Entire in z.
double gf_poisson(double z, dist::PhaseVolume tau, double eta);

//! Generating function of the logarithmic size law:
//! F(z) = ln(1-bz) / ln(1-b), with F(0) = 0 and F(1) = 1.
double gf_logarithmic(double z, dist::DegeneracyParameter w);

//! | P(z) - G(F(z)) |, the residual of the compound-process identity.
double composition_residual(double z, dist::PhaseVolume tau,
                            dist::DegeneracyParameter w);

//! | sum_{n<=n_max} p_n z^n - P(z) |, series vs closed form.
double gf_series_check(double z, dist::PhaseVolume tau,
                       dist::DegeneracyParameter w, long n_max);

}  // namespace bbcluster::gf
