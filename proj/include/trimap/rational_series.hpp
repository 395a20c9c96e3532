#pragma once

#include <vector>

#include "trimap/rational.hpp"

namespace trimap {

/// Truncated power series with exact rational coefficients.
///
/// A series of order N carries the coefficients of z^0..z^N; nothing is
/// known about z^{N+1} and beyond. Every binary operation truncates its
/// result at the minimum order of its inputs so that no coefficient is
/// ever fabricated. Series are immutable values; operations return fresh
/// series.
class RationalSeries {
 public:
  /// Zero series of the given order.
  explicit RationalSeries(int order);

  /// Takes coefficients of z^0..z^N; order becomes N = coeffs.size()-1.
  explicit RationalSeries(std::vector<Rational> coeffs);

  static RationalSeries constant(const Rational& value, int order);
  /// The series z (compose-identity, revert fixed point).
  static RationalSeries identity(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  const std::vector<Rational>& coefficients() const { return c_; }

  friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const RationalSeries& a, const RationalSeries& b) {
    return a.c_ != b.c_;
  }

 private:
  std::vector<Rational> c_;
};

/// Coefficient-wise sum/difference, truncated at min(order(f), order(g)).
RationalSeries operator+(const RationalSeries& f, const RationalSeries& g);
RationalSeries operator-(const RationalSeries& f, const RationalSeries& g);
RationalSeries operator-(const RationalSeries& f);

/// Cauchy product, truncated at min(order(f), order(g)).
RationalSeries operator*(const RationalSeries& f, const RationalSeries& g);

RationalSeries operator*(const Rational& s, const RationalSeries& f);

inline RationalSeries series_add(const RationalSeries& f,
                                 const RationalSeries& g) {
  return f + g;
}

inline RationalSeries series_mul(const RationalSeries& f,
                                 const RationalSeries& g) {
  return f * g;
}

/// Multiplicative inverse of a unit series (f(0) != 0), same order as f.
RationalSeries series_recip(const RationalSeries& f);

/// f^k with f^0 = 1, same order as f.
RationalSeries series_pow(const RationalSeries& f, unsigned k);

/// f(g(z)); requires g(0) = 0; truncated at min(order(f), order(g)).
RationalSeries series_compose(const RationalSeries& f, const RationalSeries& g);

/// Compositional inverse of f = z + a2 z^2 + ...; requires f(0) = 0 and
/// f'(0) = 1. The result g satisfies f(g(u)) = u and g(f(z)) = z through
/// the truncation order, with g(0) = 0, g'(0) = 1.
RationalSeries series_revert(const RationalSeries& f);

}  // namespace trimap
