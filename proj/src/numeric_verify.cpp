#include "trimap/numeric_verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

namespace trimap {

namespace {

constexpr double kPi = std::numbers::pi;

// Scaled convergence radius of the vertex-A inverse: distance to the
// nearer of the two singular vertices.
double scaled_radius(const VertexGeometry& g) {
  return std::min(std::tanh(0.5 * g.side_ab), std::tanh(0.5 * g.side_ac));
}

// Fraction of the convergence radius samples may use, with slop so that
// boundary samples from the default generators are not rejected.
constexpr double kSampleCap = 0.85;
constexpr double kCapSlop = 1.0 + 1e-9;

std::array<long long, 6> tile_key(const TriangleTile& t) {
  std::array<std::pair<long long, long long>, 3> pts;
  const std::complex<double>* vs[3] = {&t.a, &t.b, &t.c};
  for (int i = 0; i < 3; ++i) {
    pts[i] = {std::llround(vs[i]->real() * 1e9),
              std::llround(vs[i]->imag() * 1e9)};
  }
  std::sort(pts.begin(), pts.end());
  return {pts[0].first, pts[0].second, pts[1].first,
          pts[1].second, pts[2].first, pts[2].second};
}

TriangleTile make_tile(std::complex<double> a, std::complex<double> b,
                       std::complex<double> c, int depth) {
  TriangleTile t;
  t.a = a;
  t.b = b;
  t.c = c;
  t.sides = {geodesic_through(a, b), geodesic_through(b, c),
             geodesic_through(c, a)};
  t.depth = depth;
  return t;
}

// Unit tangent (up to sign) of a side at one of its endpoints.
std::complex<double> side_tangent(const Geodesic& g, std::complex<double> v) {
  if (g.is_diameter) return g.direction;
  const std::complex<double> t =
      std::complex<double>(0.0, 1.0) * (v - g.center);
  return t / std::abs(t);
}

}  // namespace

Geodesic geodesic_through(std::complex<double> z1, std::complex<double> z2) {
  const std::complex<double> chord = z2 - z1;
  if (std::abs(chord) < 1e-12) {
    throw std::invalid_argument("geodesic requires two distinct points");
  }
  // The arc centre q solves 2 Re(conj(q) z) = |z|^2 + 1 for both points;
  // the system degenerates exactly when the points are collinear with the
  // origin, in which case the geodesic is a diameter.
  const double det = z1.real() * z2.imag() - z1.imag() * z2.real();
  if (std::abs(det) < 1e-12) {
    Geodesic g;
    g.is_diameter = true;
    g.direction = chord / std::abs(chord);
    return g;
  }
  const double b1 = std::norm(z1) + 1.0;
  const double b2 = std::norm(z2) + 1.0;
  Geodesic g;
  g.is_diameter = false;
  g.center = {(b1 * z2.imag() - b2 * z1.imag()) / (2.0 * det),
              (b2 * z1.real() - b1 * z2.real()) / (2.0 * det)};
  g.radius = std::sqrt(std::max(0.0, std::norm(g.center) - 1.0));
  return g;
}

std::complex<double> reflect_geodesic(const Geodesic& g,
                                      std::complex<double> z) {
  if (g.is_diameter) {
    return g.direction * g.direction * std::conj(z);
  }
  const std::complex<double> offset = z - g.center;
  if (offset == std::complex<double>(0.0, 0.0)) {
    throw std::domain_error("reflection undefined at the arc centre");
  }
  return g.center + g.radius * g.radius / std::conj(offset);
}

std::vector<TriangleTile> tiling(const TriangleSignature& sig, int depth) {
  validate_signature(sig);
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (depth > 8) {
    throw std::domain_error("tiling too deep: depth is capped at 8");
  }

  const VertexGeometry g = vertex_geometry(sig);
  const TriangleTile base =
      make_tile(0.0, g.nu * g.pos_b, g.nu * g.pos_c, 0);

  std::vector<TriangleTile> out;
  std::set<std::array<long long, 6>> seen;
  std::queue<TriangleTile> frontier;
  out.push_back(base);
  seen.insert(tile_key(base));
  frontier.push(base);

  while (!frontier.empty()) {
    const TriangleTile tile = frontier.front();
    frontier.pop();
    if (tile.depth == depth) continue;
    for (int side = 0; side < 3; ++side) {
      // Reflect the off-side vertex; the side's endpoints stay fixed.
      TriangleTile next;
      switch (side) {
        case 0:
          next = make_tile(tile.a, tile.b,
                           reflect_geodesic(tile.sides[0], tile.c),
                           tile.depth + 1);
          break;
        case 1:
          next = make_tile(reflect_geodesic(tile.sides[1], tile.a), tile.b,
                           tile.c, tile.depth + 1);
          break;
        default:
          next = make_tile(tile.a, reflect_geodesic(tile.sides[2], tile.b),
                           tile.c, tile.depth + 1);
          break;
      }
      if (seen.insert(tile_key(next)).second) {
        out.push_back(next);
        frontier.push(next);
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const TriangleTile& x, const TriangleTile& y) {
              if (x.depth != y.depth) return x.depth < y.depth;
              return tile_key(x) < tile_key(y);
            });
  return out;
}

std::array<double, 3> tile_angles(const TriangleTile& tile) {
  const auto corner = [&](std::complex<double> v, int side1, int side2) {
    const std::complex<double> t1 = side_tangent(tile.sides[side1], v);
    const std::complex<double> t2 = side_tangent(tile.sides[side2], v);
    // Tangent signs are arbitrary; tile angles never exceed pi/2, so the
    // unsigned cosine identifies the angle.
    const double c = std::abs(t1.real() * t2.real() + t1.imag() * t2.imag());
    return std::acos(std::min(1.0, c));
  };
  return {corner(tile.a, 0, 2), corner(tile.b, 0, 1), corner(tile.c, 1, 2)};
}

double roundtrip_check(const TriangleSignature& sig, int order,
                       const std::vector<std::complex<double>>& samples) {
  const PsiSeries psi = psi_series(sig, Vertex::A, order);
  const VertexGeometry g = vertex_geometry(sig);
  const double natural_cap = 0.05 * kCapSlop;
  const double scaled_cap = kSampleCap * scaled_radius(g) * kCapSlop;
  const double sector_cap = kPi / sig.m * kCapSlop;

  double max_error = 0.0;
  for (const std::complex<double> w : samples) {
    if (std::abs(w) > natural_cap || g.nu * std::abs(w) > scaled_cap ||
        std::fabs(std::arg(w)) > sector_cap) {
      throw std::domain_error(
          "sample outside region: round-trip samples must satisfy "
          "|w| <= 0.05, |arg w| <= pi/m, and stay inside the inverse's "
          "convergence disc");
    }
    const std::complex<double> z = psi_eval_numeric(psi, w);
    const std::complex<double> back = phi_eval_numeric(sig, z, 1e-15);
    max_error = std::max(max_error, std::abs(back - w));
  }
  return max_error;
}

std::vector<std::complex<double>> default_roundtrip_samples(
    const TriangleSignature& sig) {
  const VertexGeometry g = vertex_geometry(sig);
  const double r_cap = std::min(0.05, 0.75 * scaled_radius(g) / g.nu);
  std::vector<std::complex<double>> samples;
  samples.reserve(32);
  for (int i = 1; i <= 4; ++i) {
    const double r = r_cap * i / 4.0;
    for (int j = 0; j < 8; ++j) {
      const double theta = (-0.9 + 1.8 * j / 7.0) * kPi / sig.m;
      samples.push_back(std::polar(r, theta));
    }
  }
  return samples;
}

double vertex_consistency_check(
    const TriangleSignature& sig, Vertex v, int order,
    const std::vector<std::complex<double>>& samples) {
  const PsiSeries psi_here = psi_series(sig, Vertex::A, order);
  const PsiSeries psi_cycled = psi_series(sig, v, order);
  const VertexFrame frame = vertex_frame(sig, v);
  const MoebiusMap s_hat = scaled_frame_map(frame);
  const double r_left =
      kSampleCap * scaled_radius(vertex_geometry(sig)) * kCapSlop;
  const double r_right =
      kSampleCap * scaled_radius(vertex_geometry(frame.cycled_signature)) *
      kCapSlop;

  double max_error = 0.0;
  for (const std::complex<double> w : samples) {
    const std::complex<double> image = s_hat(w);
    if (std::abs(w) > r_left || std::abs(image) > r_right) {
      throw std::domain_error(
          "sample outside region: consistency samples must keep both the "
          "point and its recentred image within the convergence discs");
    }
    const std::complex<double> left =
        frame.T(psi_eval_numeric(psi_here, w / frame.nu));
    const std::complex<double> right =
        psi_eval_numeric(psi_cycled, image / frame.nu_cycled);
    max_error = std::max(max_error, std::abs(left - right));
  }
  return max_error;
}

std::vector<std::complex<double>> default_consistency_samples(
    const TriangleSignature& sig, Vertex v) {
  const VertexGeometry g = vertex_geometry(sig);
  const double r_a = scaled_radius(g);
  const double r_b = scaled_radius(vertex_geometry(cycle_signature(sig, v)));
  const double dist =
      v == Vertex::A ? 0.0 : (v == Vertex::B ? g.side_ab : g.side_ac);

  // Window on the segment towards the vertex where the sample stays inside
  // this frame's disc and its image inside the cycled frame's disc.  Widen
  // the usable fraction if the triangle is too stretched for the default.
  double r_lo = 0.0, r_hi = 0.0;
  bool found = false;
  for (const double f : {0.75, 0.80, 0.85}) {
    r_hi = f * r_a;
    const double slack = dist - 2.0 * std::atanh(f * r_b);
    r_lo = slack <= 0.0 ? 0.0 : std::tanh(0.5 * slack);
    if (r_lo < r_hi * (1.0 - 1e-9)) {
      found = true;
      break;
    }
  }
  if (!found) {
    throw std::domain_error(
        "no admissible sample window: the vertex is too far from the "
        "origin relative to the convergence discs");
  }

  const std::complex<double> dir =
      v == Vertex::B ? std::polar(1.0, kPi / sig.m) : std::complex<double>(1.0);
  std::vector<std::complex<double>> samples;
  samples.reserve(8);
  for (int j = 1; j <= 8; ++j) {
    samples.push_back(dir * (r_lo + (r_hi - r_lo) * j / 8.0));
  }
  return samples;
}

double nu_crosscheck(const TriangleSignature& sig) {
  const VertexGeometry g = vertex_geometry(sig);
  return std::abs(g.nu * g.pos_c -
                  std::complex<double>(std::tanh(0.5 * g.side_ac)));
}

}  // namespace trimap
