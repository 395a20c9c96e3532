#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "trimap/numeric_verify.hpp"
#include "trimap/triangle_map.hpp"

using trimap::Geodesic;
using trimap::TriangleSignature;
using trimap::Vertex;

namespace {

const TriangleSignature kRefs[] = {{2, 3, 7}, {2, 4, 5}, {3, 3, 4}, {5, 5, 5}};

std::complex<double> random_interior(std::mt19937& rng, double rmax = 0.95) {
  std::uniform_real_distribution<double> radius(0.0, rmax);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  return std::polar(radius(rng), angle(rng));
}

}  // namespace

TEST_CASE("geodesic through symmetric points is a diameter") {
  const Geodesic g = trimap::geodesic_through({0.3, 0.2}, {-0.6, -0.4});
  CHECK(g.is_diameter);
  // direction parallel to the chord
  const std::complex<double> chord{0.9, 0.6};
  const double cross = g.direction.real() * chord.imag() -
                       g.direction.imag() * chord.real();
  CHECK(std::fabs(cross) <= 1e-12);
}

TEST_CASE("geodesic arcs meet the unit circle at right angles") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    const std::complex<double> z1 = random_interior(rng);
    const std::complex<double> z2 = random_interior(rng);
    if (std::abs(z1 - z2) < 1e-6) continue;
    const Geodesic g = trimap::geodesic_through(z1, z2);
    if (g.is_diameter) continue;
    // orthogonality to the boundary circle
    CHECK(std::norm(g.center) ==
          doctest::Approx(g.radius * g.radius + 1.0).epsilon(1e-9));
    // passes through both defining points
    CHECK(std::abs(z1 - g.center) == doctest::Approx(g.radius).epsilon(1e-9));
    CHECK(std::abs(z2 - g.center) == doctest::Approx(g.radius).epsilon(1e-9));
  }
}

TEST_CASE("reflection is an involution fixing the geodesic") {
  std::mt19937 rng(161803);
  for (int trial = 0; trial < 40; ++trial) {
    const std::complex<double> z1 = random_interior(rng, 0.8);
    const std::complex<double> z2 = random_interior(rng, 0.8);
    if (std::abs(z1 - z2) < 1e-6) continue;
    const Geodesic g = trimap::geodesic_through(z1, z2);

    CHECK(std::abs(trimap::reflect_geodesic(g, z1) - z1) <= 1e-10);
    CHECK(std::abs(trimap::reflect_geodesic(g, z2) - z2) <= 1e-10);

    const std::complex<double> w = random_interior(rng, 0.9);
    if (!g.is_diameter && std::abs(w - g.center) < 1e-3) continue;
    const std::complex<double> back =
        trimap::reflect_geodesic(g, trimap::reflect_geodesic(g, w));
    CHECK(std::abs(back - w) <= 1e-10);
    // reflections of interior points stay in the disc
    CHECK(std::abs(trimap::reflect_geodesic(g, w)) < 1.0 + 1e-12);
  }
}

TEST_CASE("reflecting the arc centre is rejected") {
  const Geodesic g = trimap::geodesic_through({0.5, 0.1}, {0.4, 0.4});
  REQUIRE_FALSE(g.is_diameter);
  CHECK_THROWS_WITH_AS(trimap::reflect_geodesic(g, g.center),
                       "reflection undefined at the arc centre",
                       std::domain_error);
}

TEST_CASE("degenerate geodesic input is rejected") {
  CHECK_THROWS_WITH_AS(trimap::geodesic_through({0.25, 0.1}, {0.25, 0.1}),
                       "geodesic requires two distinct points",
                       std::invalid_argument);
}

TEST_CASE("tiling depth zero is the base tile") {
  for (const TriangleSignature& sig : kRefs) {
    const auto tiles = trimap::tiling(sig, 0);
    REQUIRE(tiles.size() == 1);
    CHECK(tiles[0].depth == 0);
    CHECK(std::abs(tiles[0].a) <= 1e-15);
    CHECK(std::fabs(tiles[0].c.imag()) <= 1e-15);
    const trimap::VertexGeometry g = trimap::vertex_geometry(sig);
    CHECK(std::abs(tiles[0].b - g.nu * g.pos_b) <= 1e-14);
    CHECK(std::abs(tiles[0].c - g.nu * g.pos_c) <= 1e-14);
  }
}

TEST_CASE("one reflection ring has exactly three new tiles") {
  for (const TriangleSignature& sig : kRefs) {
    const auto tiles = trimap::tiling(sig, 1);
    CHECK(tiles.size() == 4);
    CHECK(tiles[0].depth == 0);
    for (std::size_t i = 1; i < tiles.size(); ++i) CHECK(tiles[i].depth == 1);
  }
}

TEST_CASE("tile count matches the brute-force word enumeration") {
  for (const TriangleSignature& sig : kRefs) {
    const trimap::VertexGeometry g = trimap::vertex_geometry(sig);
    const oracles::WordTiling words(sig.m, g.nu * g.pos_b, g.nu * g.pos_c);
    for (int depth : {2, 3}) {
      CHECK(trimap::tiling(sig, depth).size() == words.count(depth));
    }
  }
}

TEST_CASE("every tile keeps the signature angles and stays in the disc") {
  for (const TriangleSignature& sig : {TriangleSignature{2, 3, 7}, {3, 3, 4}}) {
    const auto tiles = trimap::tiling(sig, 4);
    for (const auto& tile : tiles) {
      const auto angles = trimap::tile_angles(tile);
      CHECK(std::fabs(angles[0] - M_PI / sig.m) <= 1e-6);
      CHECK(std::fabs(angles[1] - M_PI / sig.n) <= 1e-6);
      CHECK(std::fabs(angles[2] - M_PI / sig.p) <= 1e-6);
      for (const auto v : {tile.a, tile.b, tile.c}) {
        CHECK(std::abs(v) <= 1.0 + 1e-9);
      }
      CHECK(tile.depth >= 0);
      CHECK(tile.depth <= 4);
    }
  }
}

TEST_CASE("tiling depth limits") {
  CHECK_THROWS_WITH_AS(trimap::tiling({2, 3, 7}, 9),
                       "tiling too deep: depth is capped at 8",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(trimap::tiling({2, 3, 7}, -1), "depth must be nonnegative",
                       std::invalid_argument);
}

TEST_CASE("round trips stay below 1e-9 on the default samples") {
  for (const TriangleSignature& sig : kRefs) {
    const auto samples = trimap::default_roundtrip_samples(sig);
    CHECK(samples.size() == 32);
    const double err = trimap::roundtrip_check(sig, 40, samples);
    CHECK(err <= 1e-9);
  }
}

TEST_CASE("higher truncation order does not hurt the round trip") {
  // Both orders are deep enough that the tail sits below float noise, so
  // allow the comparison a little slack instead of strict monotonicity.
  const TriangleSignature sig{2, 3, 7};
  const auto samples = trimap::default_roundtrip_samples(sig);
  const double coarse = trimap::roundtrip_check(sig, 5, samples);
  const double fine = trimap::roundtrip_check(sig, 40, samples);
  CHECK(fine <= coarse + 1e-12);
}

TEST_CASE("round-trip samples outside the region are rejected") {
  const TriangleSignature sig{2, 3, 7};
  const char expected[] =
      "sample outside region: round-trip samples must satisfy |w| <= 0.05, "
      "|arg w| <= pi/m, and stay inside the inverse's convergence disc";
  CHECK_THROWS_WITH_AS(
      trimap::roundtrip_check(sig, 20, {{0.06, 0.0}}), expected,
      std::domain_error);
  CHECK_THROWS_WITH_AS(
      trimap::roundtrip_check(sig, 20, {std::polar(0.03, 0.8 * M_PI)}),
      expected, std::domain_error);
}

TEST_CASE("vertex recentring consistency at both vertices") {
  const TriangleSignature sig{2, 3, 7};
  for (const Vertex v : {Vertex::B, Vertex::C}) {
    const auto samples = trimap::default_consistency_samples(sig, v);
    REQUIRE(samples.size() == 8);
    const double err = trimap::vertex_consistency_check(sig, v, 60, samples);
    CHECK(err <= 1e-6);
  }
}

TEST_CASE("consistency holds across the reference signatures") {
  for (const TriangleSignature& sig : kRefs) {
    for (const Vertex v : {Vertex::B, Vertex::C}) {
      const auto samples = trimap::default_consistency_samples(sig, v);
      const double err = trimap::vertex_consistency_check(sig, v, 60, samples);
      CHECK(err <= 1e-6);
    }
  }
}

TEST_CASE("consistency samples outside either disc are rejected") {
  const TriangleSignature sig{2, 3, 7};
  CHECK_THROWS_AS(
      trimap::vertex_consistency_check(sig, Vertex::B, 30, {{0.9, 0.0}}),
      std::domain_error);
}

TEST_CASE("nu cross-check ties the two placements of vertex C") {
  for (const TriangleSignature& sig : kRefs) {
    CHECK(trimap::nu_crosscheck(sig) <= 1e-9);
  }
}
