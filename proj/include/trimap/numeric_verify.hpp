#pragma once

#include <array>
#include <complex>
#include <vector>

#include "trimap/inverse_coeffs.hpp"
#include "trimap/triangle_map.hpp"

namespace trimap {

// Hyperbolic line in the unit disc: a diameter, or a circular arc meeting
// the unit circle at right angles (|center|^2 = radius^2 + 1).
struct Geodesic {
  bool is_diameter = true;
  std::complex<double> direction{1.0, 0.0};  // unit chord direction (diameter)
  std::complex<double> center{0.0, 0.0};     // arc centre
  double radius = 0.0;                       // arc radius
};

// The geodesic through two distinct points of the open disc.
Geodesic geodesic_through(std::complex<double> z1, std::complex<double> z2);

// Reflection of the disc across the geodesic: conjugation for a diameter,
// inversion z -> center + radius^2 / conj(z - center) for an arc.  The arc
// centre itself has no image.
std::complex<double> reflect_geodesic(const Geodesic& g,
                                      std::complex<double> z);

// One triangle of the tiling, vertices in disc coordinates.  Vertex labels
// survive reflection, so every tile keeps angle pi/m at a, pi/n at b,
// pi/p at c.  sides[0] joins a-b, sides[1] b-c, sides[2] c-a.
struct TriangleTile {
  std::complex<double> a, b, c;
  std::array<Geodesic, 3> sides;
  int depth = 0;  // least number of reflections from the base tile
};

// The base tile (A at the origin, C on the positive real axis) and every
// tile reachable by at most `depth` reflections across tile sides, each
// exactly once, ordered by depth and then by vertex coordinates.
// depth is capped at 8.
std::vector<TriangleTile> tiling(const TriangleSignature& sig, int depth);

// Interior angles at the tile's stored vertices, each in (0, pi/2].
std::array<double, 3> tile_angles(const TriangleTile& tile);

// Inverse series followed by the floating-point triangle map, measured
// against the identity: max over samples of |phi(psi(w)) - w|.  Samples
// are natural-coordinate points with |w| <= 0.05 and |arg w| <= pi/m (the
// principal sector), and nu*|w| within 0.85 of the scaled convergence
// radius.
double roundtrip_check(const TriangleSignature& sig, int order,
                       const std::vector<std::complex<double>>& samples);

// 32 points: four radii up to min(0.05, 0.75 R/nu), eight arguments
// spanning [-0.9 pi/m, 0.9 pi/m].
std::vector<std::complex<double>> default_roundtrip_samples(
    const TriangleSignature& sig);

// Recentring consistency at a vertex: transporting the inverse through the
// frame automorphism must match the cycled signature's own inverse,
//   psi_cycled(S_hat(w) / nu') = T(psi(w / nu)).
// Returns the max discrepancy over the scaled samples w.  Each sample must
// keep both |w| and |S_hat(w)| within 0.85 of the respective scaled
// convergence radii.
double vertex_consistency_check(
    const TriangleSignature& sig, Vertex v, int order,
    const std::vector<std::complex<double>>& samples);

// Eight scaled points on the segment from the origin towards the vertex,
// chosen so both preconditions of vertex_consistency_check hold.
std::vector<std::complex<double>> default_consistency_samples(
    const TriangleSignature& sig, Vertex v);

// |nu * pos_c - tanh(d(A,C)/2)|: the hypergeometric value placing C and
// the law-of-cosines side length must agree on C's disc position.
double nu_crosscheck(const TriangleSignature& sig);

}  // namespace trimap
