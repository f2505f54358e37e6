// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace bbcluster::num {

//! Compensated (Kahan) accumulator for long sums of small terms.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

//! Integrate f over [a, b] by composite 16-point Gauss-Legendre panels,
//! doubling the panel count until two refinements agree to rel_tol.
//! Intended for smooth integrands; panels start at 8 and stop at 4096.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-13);

//! Locate the maximum of a smooth unimodal f on [a, b].
//! Golden-section search narrows the bracket to ~sqrt(eps); a pair of
//! Richardson-extrapolated three-point parabolic fits then polishes the
//! abscissa to ~1e-12 relative, well past the flat-top limit of plain
//! golden section.
double find_peak(const std::function<double(double)>& f, double a, double b);

//! zeta(3) by partial sum plus Euler-Maclaurin tail; no special-function
//! dependency. Accurate to full double precision.
double zeta3();

//! Regularized lower incomplete gamma P(a, x); series branch for x < a+1,
//! Lentz continued fraction otherwise.
double gamma_p(double a, double x);
//! Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);
//! Chi-squared survival function: probability of exceeding stat at dof.
double chi2_sf(double stat, long dof);

//! Solve x = 5 (1 - exp(-x)) for the positive root by fixed-point
//! iteration (contraction factor ~0.03 near the root).
double wien_lambda_root();

}  // namespace bbcluster::num
