#pragma once

#include <complex>

#include "trimap/hypergeom.hpp"
#include "trimap/rational.hpp"
#include "trimap/rational_series.hpp"

namespace trimap {

// Reflection orders (m, n, p) of a triangle with interior angles
// pi/m, pi/n, pi/p at vertices A, B, C.
struct TriangleSignature {
  int m = 2;
  int n = 3;
  int p = 7;

  bool operator==(const TriangleSignature&) const = default;
};

// Throws std::domain_error unless m, n, p describe a hyperbolic triangle,
// i.e. 1/m + 1/n + 1/p < 1 (checked in exact integer arithmetic).
void validate_signature(const TriangleSignature& sig);

enum class Vertex { A, B, C };

inline char vertex_name(Vertex v) {
  return v == Vertex::A ? 'A' : (v == Vertex::B ? 'B' : 'C');
}

// Hypergeometric parameter sets attached to a signature.  The triangle map
// is z^(1/m) times the ratio of the numer_params series to the denom_params
// series.
struct AngleParams {
  Rational alpha, beta, gamma;  // 1/m, 1/n, 1/p
  HypParams denom_params;       // {a, b, c}
  HypParams numer_params;       // {a - c + 1, b - c + 1, 2 - c}
};

AngleParams derive_params(const TriangleSignature& sig);

// The triangle map phi(z) = z^(1/branch_order) * unit_part(z), with
// unit_part(0) = 1 and exact rational coefficients.
struct BranchSeries {
  int branch_order = 1;
  RationalSeries unit_part;
};

// unit_part truncated after z^order.
BranchSeries phi_series(const TriangleSignature& sig, int order);

// Scale factor nu mapping natural coordinates onto the unit disc: w is a
// triangle-map value, nu*w lies in the Poincare disc with vertex A at 0.
double nu_value(const TriangleSignature& sig);

// Vertex positions in natural coordinates (multiply by nu for the disc
// model) and hyperbolic side lengths.
struct VertexGeometry {
  double nu = 0.0;
  double side_ab = 0.0, side_ac = 0.0, side_bc = 0.0;
  std::complex<double> pos_a, pos_b, pos_c;
};

VertexGeometry vertex_geometry(const TriangleSignature& sig);

// Signature seen from a given vertex: recentring at B or C rotates the
// angle orders so the new first entry is the local branch order.
TriangleSignature cycle_signature(const TriangleSignature& sig, Vertex v);

// Point on the Riemann sphere.
struct RiemannPoint {
  std::complex<double> value{0.0, 0.0};
  bool at_infinity = false;

  static RiemannPoint infinity() { return {{0.0, 0.0}, true}; }
};

// Moebius transformation z -> (a z + b) / (c z + d).
struct MoebiusMap {
  std::complex<double> a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static MoebiusMap identity() { return {}; }

  std::complex<double> determinant() const { return a * d - b * c; }

  // Inverse up to an irrelevant scalar (the adjugate matrix).
  MoebiusMap inverse() const { return {d, -b, -c, a}; }

  // Finite-input evaluation; use moebius_apply for sphere semantics.
  std::complex<double> operator()(std::complex<double> z) const {
    return (a * z + b) / (c * z + d);
  }
};

// Composition: (f * g)(z) = f(g(z)).
MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g);

RiemannPoint moebius_apply(const MoebiusMap& map, const RiemannPoint& z);

// Data needed to recentre the triangle map at a vertex: S is the disc
// automorphism (in natural coordinates) sending the vertex to the origin
// and aligning the image with the cycled signature's own triangle; T is
// the sphere map carrying half-plane preimages between the two frames.
struct VertexFrame {
  Vertex vertex_label = Vertex::A;
  TriangleSignature signature;
  TriangleSignature cycled_signature;
  double nu = 0.0;         // scale of the original signature
  double nu_cycled = 0.0;  // scale of the cycled signature
  std::complex<double> d;        // vertex position, natural coordinates
  std::complex<double> d_tilde;  // conj(d) * nu^2
  double t = 0.0;                // rotation angle of S
  MoebiusMap S;
  MoebiusMap T;
};

VertexFrame vertex_frame(const TriangleSignature& sig, Vertex v);

// frame.S conjugated by w -> nu*w: a unit-disc automorphism acting on
// scaled coordinates, S_hat(w) = e^(it) (w - v) / (1 - conj(v) w) with
// v = nu * frame.d.
MoebiusMap scaled_frame_map(const VertexFrame& frame);

// Floating-point triangle map via hypergeometric evaluation; principal
// branch of z^(1/m).  Requires |z| within the supported evaluation disc.
std::complex<double> phi_eval_numeric(const TriangleSignature& sig,
                                      std::complex<double> z, double tol);

}  // namespace trimap
