#include "trimap/triangle_map.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trimap {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(pi*x) for rational x in (0, 2), reflected into [0, 1/2] so the
// argument reduction happens in exact arithmetic.
double sin_pi(const Rational& x) {
  Rational y = x;
  if (y > Rational(1)) y = Rational(2) - y;  // sin(pi(2-y)) = -sin(pi y): unused range guard
  if (y > Rational(1, 2)) y = Rational(1) - y;
  return std::sin(kPi * y.to_double());
}

// cos(pi*x) for rational x in (0, 1).
double cos_pi(const Rational& x) {
  if (x == Rational(1, 2)) return 0.0;
  if (x > Rational(1, 2)) return -std::cos(kPi * (Rational(1) - x).to_double());
  return std::cos(kPi * x.to_double());
}

// tanh(acosh(x)/2) without the intermediate acosh.
double tanh_half_acosh(double x) { return std::sqrt((x - 1.0) / (x + 1.0)); }

}  // namespace

void validate_signature(const TriangleSignature& sig) {
  const mpz_class m = sig.m, n = sig.n, p = sig.p;
  if (sig.m < 2 || sig.n < 2 || sig.p < 2 ||
      n * p + m * p + m * n >= m * n * p) {
    throw std::domain_error("not hyperbolic: requires 1/m + 1/n + 1/p < 1 "
                            "with integer orders >= 2");
  }
}

AngleParams derive_params(const TriangleSignature& sig) {
  validate_signature(sig);
  AngleParams ap;
  ap.alpha = Rational(1, sig.m);
  ap.beta = Rational(1, sig.n);
  ap.gamma = Rational(1, sig.p);
  const Rational one(1), two(2);
  ap.denom_params.a = (one - ap.alpha + ap.beta - ap.gamma) / two;
  ap.denom_params.b = (one - ap.alpha - ap.beta - ap.gamma) / two;
  ap.denom_params.c = one - ap.alpha;
  ap.numer_params.a = ap.denom_params.a - ap.denom_params.c + one;
  ap.numer_params.b = ap.denom_params.b - ap.denom_params.c + one;
  ap.numer_params.c = two - ap.denom_params.c;
  return ap;
}

BranchSeries phi_series(const TriangleSignature& sig, int order) {
  const AngleParams ap = derive_params(sig);
  const RationalSeries numer = hyp_series(ap.numer_params, order);
  const RationalSeries denom = hyp_series(ap.denom_params, order);
  return {sig.m, numer * series_recip(denom)};
}

double nu_value(const TriangleSignature& sig) {
  const AngleParams ap = derive_params(sig);
  const Rational &a = ap.denom_params.a, &b = ap.denom_params.b,
                 &c = ap.denom_params.c;
  const Rational &a2 = ap.numer_params.a, &b2 = ap.numer_params.b,
                 &c2 = ap.numer_params.c;
  // All four sines are positive: a, b, a', b' lie in (0, 1) for hyperbolic
  // signatures.
  const double trig =
      std::sqrt((sin_pi(a2) * sin_pi(b2)) / (sin_pi(a) * sin_pi(b)));
  const double gammas =
      gamma_numeric(a2.to_double()) * gamma_numeric(b2.to_double()) *
      gamma_numeric(c.to_double()) /
      (gamma_numeric(c2.to_double()) * gamma_numeric(a.to_double()) *
       gamma_numeric(b.to_double()));
  return trig * gammas;
}

VertexGeometry vertex_geometry(const TriangleSignature& sig) {
  const AngleParams ap = derive_params(sig);
  const double ca = cos_pi(ap.alpha), cb = cos_pi(ap.beta),
               cg = cos_pi(ap.gamma);
  const double sa = sin_pi(ap.alpha), sb = sin_pi(ap.beta),
               sg = sin_pi(ap.gamma);

  VertexGeometry g;
  // Hyperbolic law of cosines: the side opposite one angle from the other
  // two.  Each cosh exceeds 1 exactly when the angle sum is below pi.
  const double cosh_ab = (cg + ca * cb) / (sa * sb);
  const double cosh_ac = (cb + ca * cg) / (sa * sg);
  const double cosh_bc = (ca + cb * cg) / (sb * sg);
  g.side_ab = std::acosh(cosh_ab);
  g.side_ac = std::acosh(cosh_ac);
  g.side_bc = std::acosh(cosh_bc);
  g.nu = nu_value(sig);

  g.pos_a = 0.0;
  // B sits at disc radius tanh(d(A,B)/2), direction halfway round the
  // angle at A; C sits on the positive real axis at the ratio of the two
  // hypergeometric values at z = 1.
  g.pos_b = std::polar(tanh_half_acosh(cosh_ab) / g.nu, kPi / sig.m);
  g.pos_c = gauss_value(ap.numer_params) / gauss_value(ap.denom_params);
  return g;
}

TriangleSignature cycle_signature(const TriangleSignature& sig, Vertex v) {
  switch (v) {
    case Vertex::A:
      return sig;
    case Vertex::B:
      return {sig.n, sig.p, sig.m};
    case Vertex::C:
    default:
      return {sig.p, sig.m, sig.n};
  }
}

MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g) {
  return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
          f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
}

RiemannPoint moebius_apply(const MoebiusMap& map, const RiemannPoint& z) {
  const std::complex<double> zero(0.0, 0.0);
  if (z.at_infinity) {
    if (map.c == zero) return RiemannPoint::infinity();
    return {map.a / map.c, false};
  }
  const std::complex<double> den = map.c * z.value + map.d;
  if (den == zero) return RiemannPoint::infinity();
  return {(map.a * z.value + map.b) / den, false};
}

VertexFrame vertex_frame(const TriangleSignature& sig, Vertex v) {
  const VertexGeometry g = vertex_geometry(sig);

  VertexFrame f;
  f.vertex_label = v;
  f.signature = sig;
  f.cycled_signature = cycle_signature(sig, v);
  f.nu = g.nu;
  f.nu_cycled = v == Vertex::A ? g.nu : nu_value(f.cycled_signature);

  switch (v) {
    case Vertex::A:
      f.d = 0.0;
      f.t = 0.0;
      f.T = MoebiusMap::identity();
      break;
    case Vertex::B: {
      f.d = g.pos_b;
      // S(0) must land on the positive real axis: the old A becomes the
      // cycled frame's C.
      f.t = kPi - kPi / sig.m;
      f.T = {{0.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}};  // -1/(z-1)
      break;
    }
    case Vertex::C: {
      f.d = g.pos_c;
      // S(pos_b) must land on the positive real axis: the old B becomes
      // the cycled frame's C.  Work in scaled coordinates where S is a
      // disc automorphism.
      const std::complex<double> bh = g.nu * g.pos_b;
      const std::complex<double> ch = g.nu * g.pos_c;
      f.t = -std::arg((bh - ch) / (1.0 - std::conj(ch) * bh));
      f.T = {{1.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};  // (z-1)/z
      break;
    }
  }

  f.d_tilde = std::conj(f.d) * g.nu * g.nu;
  const std::complex<double> rot = std::polar(1.0, f.t);
  f.S = {rot, -rot * f.d, -f.d_tilde, {1.0, 0.0}};
  return f;
}

MoebiusMap scaled_frame_map(const VertexFrame& frame) {
  const std::complex<double> v = frame.nu * frame.d;
  const std::complex<double> rot = std::polar(1.0, frame.t);
  return {rot, -rot * v, -std::conj(v), {1.0, 0.0}};
}

std::complex<double> phi_eval_numeric(const TriangleSignature& sig,
                                      std::complex<double> z, double tol) {
  const AngleParams ap = derive_params(sig);
  if (z == std::complex<double>(0.0, 0.0)) return 0.0;
  const std::complex<double> numer = hyp_eval_numeric(ap.numer_params, z, tol);
  const std::complex<double> denom = hyp_eval_numeric(ap.denom_params, z, tol);
  return std::pow(z, 1.0 / sig.m) * numer / denom;
}

}  // namespace trimap
