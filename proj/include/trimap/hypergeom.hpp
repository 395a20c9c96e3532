#pragma once

#include <complex>

#include "trimap/rational.hpp"
#include "trimap/rational_series.hpp"

namespace trimap {

/// Parameters (a, b; c) of a Gauss hypergeometric series. c must not be
/// zero or a negative integer.
struct HypParams {
  Rational a;
  Rational b;
  Rational c;
};

/// Exact coefficients of F(a,b;c;z) through z^order, via the term
/// recurrence (c+k)(k+1) t_{k+1} = (a+k)(b+k) t_k, t_0 = 1.
RationalSeries hyp_series(const HypParams& p, int order);

/// Partial sum of F(a,b;c;z) with an estimated tail below tol (geometric
/// bound on the term ratio). Refuses |z| > 0.95.
std::complex<double> hyp_eval_numeric(const HypParams& p,
                                      std::complex<double> z, double tol);

/// Gamma function for positive real arguments (Lanczos approximation);
/// relative error well under 1e-12 on [0.05, 10].
double gamma_numeric(double x);

/// F(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)); requires
/// c-a-b > 0.
double gauss_value(const HypParams& p);

}  // namespace trimap
