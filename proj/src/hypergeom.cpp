#include "trimap/hypergeom.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace trimap {

namespace {

void require_regular_c(const Rational& c) {
  if (c.is_integer() && c.sign() <= 0) {
    throw std::domain_error("singular parameter c");
  }
}

}  // namespace

RationalSeries hyp_series(const HypParams& p, int order) {
  require_regular_c(p.c);
  if (order < 0) throw std::invalid_argument("negative series order");
  std::vector<Rational> coeffs(static_cast<size_t>(order) + 1);
  Rational term(1);
  coeffs[0] = term;
  for (int k = 0; k < order; ++k) {
    const Rational kk(k);
    term = term * (p.a + kk) * (p.b + kk) / ((p.c + kk) * Rational(k + 1));
    coeffs[static_cast<size_t>(k) + 1] = term;
  }
  return RationalSeries(std::move(coeffs));
}

std::complex<double> hyp_eval_numeric(const HypParams& p,
                                      std::complex<double> z, double tol) {
  const double r = std::abs(z);
  if (r > 0.95) throw std::domain_error("outside supported evaluation disc");
  const double a = p.a.to_double();
  const double b = p.b.to_double();
  const double c = p.c.to_double();

  if (r == 0.0) return {1.0, 0.0};

  // Past k_safe the term-ratio modulus is bounded by q < 1, which turns
  // |t_k| * q / (1 - q) into a valid geometric tail bound. The ratio
  // factor satisfies |(a+k)(b+k)/((c+k)(k+1)) - 1| <= 2(A + C/k)/k for
  // k >= 2|c| + 2, a decreasing majorant.
  const double q = 0.5 * (1.0 + r);
  const double slack = (q / r) - 1.0;  // > 0 since r <= 0.95
  const double A = std::fabs(a + b - c - 1.0);
  const double C = std::fabs(a * b - c);
  double k_safe = std::max(4.0 + 2.0 * (std::fabs(a) + std::fabs(b)),
                           2.0 * std::fabs(c) + 2.0);
  while (2.0 * (A + C / k_safe) / k_safe > slack) k_safe *= 2.0;

  std::complex<double> term(1.0, 0.0);
  std::complex<double> sum(1.0, 0.0);
  const long limit = 2000000;
  for (long k = 0; k < limit; ++k) {
    const double kd = static_cast<double>(k);
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
    sum += term;
    if (term == std::complex<double>(0.0, 0.0)) return sum;  // terminating
    if (kd + 1.0 >= k_safe && std::abs(term) * q / (1.0 - q) < tol) {
      return sum;
    }
  }
  throw std::runtime_error("hypergeometric sum did not converge");
}

double gamma_numeric(double x) {
  if (!(x > 0.0)) throw std::domain_error("unsupported argument");
  if (x < 0.5) return gamma_numeric(x + 1.0) / x;

  // Lanczos, g = 7, 9 terms.
  static const double kCoeff[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,       -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  const double xm1 = x - 1.0;
  double acc = kCoeff[0];
  for (int i = 1; i < 9; ++i) acc += kCoeff[i] / (xm1 + static_cast<double>(i));
  const double t = xm1 + 7.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, xm1 + 0.5) *
         std::exp(-t) * acc;
}

double gauss_value(const HypParams& p) {
  const Rational excess = p.c - p.a - p.b;
  if (excess.sign() <= 0) throw std::domain_error("divergent at z=1");
  const double gc = gamma_numeric(p.c.to_double());
  const double ge = gamma_numeric(excess.to_double());
  const double gca = gamma_numeric((p.c - p.a).to_double());
  const double gcb = gamma_numeric((p.c - p.b).to_double());
  return gc * ge / (gca * gcb);
}

}  // namespace trimap
