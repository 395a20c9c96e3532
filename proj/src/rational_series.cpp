#include "trimap/rational_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace trimap {

namespace {

int min_order(const RationalSeries& f, const RationalSeries& g) {
  return std::min(f.order(), g.order());
}

}  // namespace

RationalSeries::RationalSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

RationalSeries::RationalSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("series needs a constant term");
}

RationalSeries RationalSeries::constant(const Rational& value, int order) {
  RationalSeries s(order);
  s.c_[0] = value;
  return s;
}

RationalSeries RationalSeries::identity(int order) {
  if (order < 1) throw std::invalid_argument("identity needs order >= 1");
  RationalSeries s(order);
  s.c_[1] = Rational(1);
  return s;
}

RationalSeries operator+(const RationalSeries& f, const RationalSeries& g) {
  const int n = min_order(f, g);
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = f[k] + g[k];
  return RationalSeries(std::move(c));
}

RationalSeries operator-(const RationalSeries& f, const RationalSeries& g) {
  const int n = min_order(f, g);
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = f[k] - g[k];
  return RationalSeries(std::move(c));
}

RationalSeries operator-(const RationalSeries& f) {
  std::vector<Rational> c(static_cast<size_t>(f.order()) + 1);
  for (int k = 0; k <= f.order(); ++k) c[static_cast<size_t>(k)] = -f[k];
  return RationalSeries(std::move(c));
}

RationalSeries operator*(const RationalSeries& f, const RationalSeries& g) {
  const int n = min_order(f, g);
  std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    if (f[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (g[j].is_zero()) continue;
      c[static_cast<size_t>(i + j)] += f[i] * g[j];
    }
  }
  return RationalSeries(std::move(c));
}

RationalSeries operator*(const Rational& s, const RationalSeries& f) {
  std::vector<Rational> c(static_cast<size_t>(f.order()) + 1);
  for (int k = 0; k <= f.order(); ++k) c[static_cast<size_t>(k)] = s * f[k];
  return RationalSeries(std::move(c));
}

RationalSeries series_recip(const RationalSeries& f) {
  if (f[0].is_zero()) throw std::domain_error("not a unit");
  const int n = f.order();
  std::vector<Rational> g(static_cast<size_t>(n) + 1);
  const Rational inv0 = f[0].reciprocal();
  g[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += f[j] * g[static_cast<size_t>(k - j)];
    g[static_cast<size_t>(k)] = -(inv0 * acc);
  }
  return RationalSeries(std::move(g));
}

RationalSeries series_pow(const RationalSeries& f, unsigned k) {
  RationalSeries result = RationalSeries::constant(Rational(1), f.order());
  RationalSeries base = f;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

RationalSeries series_compose(const RationalSeries& f, const RationalSeries& g) {
  if (!g[0].is_zero()) {
    throw std::domain_error("inner series must vanish at 0");
  }
  const int n = min_order(f, g);
  // Horner in g, every product truncated at order n.
  RationalSeries acc = RationalSeries::constant(f[n], n);
  RationalSeries inner(std::vector<Rational>(g.coefficients().begin(),
                                             g.coefficients().begin() + n + 1));
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * inner;
    acc = acc + RationalSeries::constant(f[k], n);
  }
  return acc;
}

RationalSeries series_revert(const RationalSeries& f) {
  const int n = f.order();
  if (n < 1 || !f[0].is_zero() || !f[1].is_one()) {
    throw std::domain_error("series not normalized for reversion");
  }
  // Triangular solve for g with g(f(z)) = z: precompute powers f^k, whose
  // leading coefficient [z^k] f^k is 1, then peel off g_n order by order.
  std::vector<RationalSeries> powers;
  powers.reserve(static_cast<size_t>(n));
  powers.push_back(f);
  for (int k = 2; k <= n; ++k) powers.push_back(powers.back() * f);

  std::vector<Rational> g(static_cast<size_t>(n) + 1, Rational(0));
  g[1] = Rational(1);
  for (int m = 2; m <= n; ++m) {
    Rational acc(0);
    for (int k = 1; k < m; ++k) {
      const Rational& fk_m = powers[static_cast<size_t>(k - 1)][m];
      if (!fk_m.is_zero()) acc += g[static_cast<size_t>(k)] * fk_m;
    }
    g[static_cast<size_t>(m)] = -acc;
  }
  return RationalSeries(std::move(g));
}

}  // namespace trimap
