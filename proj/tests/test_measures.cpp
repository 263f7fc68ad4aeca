#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hilbcover/measures.hpp"
#include "hilbcover/rng.hpp"

using namespace hilbcover;

namespace {

ConvexBody random_symmetric_body(int dim, int n, std::uint64_t seed) {
  return symmetrize(recentered(make_random_hull(dim, n, seed)), SymmetrizeMode::Union);
}

ConvexBody random_body_with_origin(int dim, int n, std::uint64_t seed) {
  return recentered(make_random_hull(dim, n, seed));
}

}  // namespace

TEST_CASE("minkowski HT volume") {
  ConvexBody disk = make_ngon(256);
  CHECK(ht_volume_minkowski(disk, disk).value == doctest::Approx(M_PI).epsilon(1e-3));

  ConvexBody sq = make_cube(2);
  CHECK(ht_volume_minkowski(sq, sq).value == doctest::Approx(8.0 / M_PI).epsilon(1e-12));

  // homogeneity of degree d
  ConvexBody u3 = sq.scaled(3.0);
  CHECK(ht_volume_minkowski(sq, u3).value ==
        doctest::Approx(9.0 * ht_volume_minkowski(sq, sq).value).epsilon(1e-12));

  CHECK_THROWS_AS(ht_volume_minkowski(make_simplex(2), sq), Error);
}

TEST_CASE("minkowski HT area: direct, duality, cauchy") {
  ConvexBody disk = make_ngon(256);
  CHECK(ht_area_minkowski(disk, disk).value == doctest::Approx(2 * M_PI).epsilon(1e-3));
  CHECK(ht_area_minkowski_cauchy(disk, disk).value == doctest::Approx(2 * M_PI).epsilon(1e-3));

  ConvexBody sq = make_cube(2);
  CHECK(ht_area_minkowski(sq, sq).value == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(ht_area_minkowski_cauchy(sq, sq).value == doctest::Approx(8.0).epsilon(1e-12));

  // area_D(C) = area_{C°}(D°) and the Cauchy formula cross-oracle
  for (int i = 0; i < 20; ++i) {
    ConvexBody d = random_symmetric_body(2, 9, 4000 + i);
    ConvexBody c = random_symmetric_body(2, 11, 4100 + i);
    double direct = ht_area_minkowski(d, c).value;
    double dual = ht_area_minkowski(polar(c), polar(d)).value;
    double cauchy = ht_area_minkowski_cauchy(d, c).value;
    CHECK(std::abs(direct - dual) / direct <= 1e-6);
    CHECK(std::abs(direct - cauchy) / direct <= 1e-6);
  }

  // scaling area_D(tC) = t^{d-1} area_D(C)
  ConvexBody c2 = random_symmetric_body(2, 9, 4500);
  CHECK(ht_area_minkowski(sq, c2.scaled(2.5)).value ==
        doctest::Approx(2.5 * ht_area_minkowski(sq, c2).value).epsilon(1e-12));

  // 3D: cube/cube = 48/pi both routes
  ConvexBody c3 = make_cube(3);
  CHECK(ht_area_minkowski(c3, c3).value == doctest::Approx(48.0 / M_PI).epsilon(1e-9));
  CHECK(ht_area_minkowski_cauchy(c3, c3).value == doctest::Approx(48.0 / M_PI).epsilon(1e-9));

  // 3D duality on cross/cube pair
  ConvexBody cr3 = make_cross(3);
  CHECK(ht_area_minkowski(c3, cr3).value ==
        doctest::Approx(ht_area_minkowski(polar(cr3), polar(c3)).value).epsilon(1e-9));
}

TEST_CASE("funk volume density against direct polar volume") {
  CounterRng rng(91);
  for (int i = 0; i < 10; ++i) {
    ConvexBody K = random_body_with_origin(2, 10, 5000 + i);
    Vec x = 0.4 * K.vertices()[0];
    double direct = polar(K.translated(-x)).volume() / M_PI;
    CHECK(funk_volume_density(K, x) == doctest::Approx(direct).epsilon(1e-10));
  }
  // 3D
  ConvexBody K3 = random_body_with_origin(3, 16, 5100);
  Vec x3 = 0.3 * K3.vertices()[0];
  double direct3 = polar(K3.translated(-x3)).volume() / unit_ball_volume(3);
  CHECK(funk_volume_density(K3, x3) == doctest::Approx(direct3).epsilon(1e-9));
}

TEST_CASE("hilbert volume density equals polar of the finsler ball") {
  CounterRng rng(93);
  for (int i = 0; i < 6; ++i) {
    ConvexBody K = random_body_with_origin(2, 9, 5200 + i);
    Vec x = 0.35 * K.vertices()[1];
    // oracle: polar of the radially sampled hilbert finsler ball; the sampled
    // ball is inscribed, so the oracle overshoots by the corner-cut error of
    // the fan resolution
    FinslerBall fb = hilbert_finsler_ball(K, x, 2048);
    ConvexBody ball = fb.to_body();
    double oracle = polar(ball).volume() / M_PI;
    double got = hilbert_volume_density(K, x);
    CHECK(got <= oracle * (1 + 1e-9));
    CHECK(got == doctest::Approx(oracle).epsilon(2e-3));
  }
}

TEST_CASE("monte carlo finsler volume: determinism and hyperbolic oracle") {
  ConvexBody disk = make_ngon(128);
  ConvexBody ball = hilbert_ball(disk, Vec::Zero(), 1.0, 128).to_body();
  MeasureEstimate a = ht_volume_finsler(GeometryTag::Hilbert, disk, ball, 20000, 42);
  MeasureEstimate b = ht_volume_finsler(GeometryTag::Hilbert, disk, ball, 20000, 42);
  CHECK(a.value == b.value);  // bit-for-bit
  CHECK(a.std_error == b.std_error);

  // Klein-model oracle: hilbert ball of radius r has area 2*pi*(cosh r - 1)
  double expect = 2 * M_PI * (std::cosh(1.0) - 1.0);
  CHECK(std::abs(a.value - expect) <= 3 * a.std_error + 3e-3 * expect);

  // quadrature route agrees tightly
  MeasureEstimate q = ht_volume_finsler_quadrature(GeometryTag::Hilbert, disk, ball, 3);
  CHECK(std::abs(q.value - expect) / expect < 2e-3);

  CHECK_THROWS_AS(ht_volume_finsler(GeometryTag::Hilbert, disk, make_cube(2).scaled(2.0), 100, 1), Error);
}

TEST_CASE("funk volume duality on random pairs") {
  for (int i = 0; i < 8; ++i) {
    ConvexBody K = random_body_with_origin(2, 10, 5300 + i);
    ConvexBody G = random_body_with_origin(2, 8, 5350 + i).scaled(0.45);
    // G inside K with clearance
    bool inside = true;
    for (const Vec& v : G.vertices())
      if (!K.is_interior(v, 0.05)) inside = false;
    if (!inside) continue;
    MeasureEstimate lhs = ht_volume_finsler(GeometryTag::Funk, K, G, 20000, 7 + i);
    MeasureEstimate rhs = ht_volume_finsler(GeometryTag::Funk, polar(G), polar(K), 20000, 99 + i);
    CHECK(estimates_agree(lhs, rhs, 3.0));
  }
}

TEST_CASE("finsler area: hyperbolic circumference oracle and duality") {
  // hilbert area of a concentric ball in the disk: 2*pi*sinh(r)
  ConvexBody disk = make_ngon(256);
  double r = 0.8;
  ConvexBody ball = hilbert_ball(disk, Vec::Zero(), r, 256).to_body();
  double got = ht_area_finsler(GeometryTag::Hilbert, disk, ball).value;
  double expect = 2 * M_PI * std::sinh(r);
  CHECK(std::abs(got - expect) / expect < 1e-2);

  // funk area duality: area_{F,K}(G) = area_{F,G°}(K°)
  for (int i = 0; i < 10; ++i) {
    ConvexBody K = random_body_with_origin(2, 9, 5400 + i);
    ConvexBody G = random_body_with_origin(2, 9, 5450 + i).scaled(0.45);
    bool inside = true;
    for (const Vec& v : G.vertices())
      if (!K.is_interior(v, 0.05)) inside = false;
    if (!inside) continue;
    double lhs = ht_area_finsler(GeometryTag::Funk, K, G).value;
    double rhs = ht_area_finsler(GeometryTag::Funk, polar(G), polar(K)).value;
    CHECK(std::abs(lhs - rhs) / lhs < 1e-6);

    // hilbert areas in 2D: polarity is an equality (beta_1 = 1)
    double hl = ht_area_finsler(GeometryTag::Hilbert, K, G).value;
    double hr = ht_area_finsler(GeometryTag::Hilbert, polar(G), polar(K)).value;
    CHECK(std::abs(hl - hr) / hl < 1e-6);
    // and the funk/hilbert area densities coincide in 2D
    CHECK(std::abs(hl - lhs) / hl < 1e-9);
  }
}

TEST_CASE("busemann measures") {
  // normalization vol_Bus(D) = omega_d
  for (int i = 0; i < 5; ++i) {
    ConvexBody d2 = random_symmetric_body(2, 9, 5500 + i);
    CHECK(busemann_volume(d2, d2).value == doctest::Approx(M_PI).epsilon(1e-12));
  }
  ConvexBody c3 = make_cube(3);
  CHECK(busemann_volume(c3, c3).value == doctest::Approx(4 * M_PI / 3).epsilon(1e-12));

  // cube-halfspace cut: ratio of cut area to boundary area = 1/(2d)
  ConvexBody sq = make_cube(2);
  Surface cut2 = {SurfacePatch{Vec(1, 0, 0), {Vec(0, -1, 0), Vec(0, 1, 0)}}};
  double ratio2 = busemann_area_surface(sq, cut2).value / busemann_area(sq, sq).value;
  CHECK(ratio2 == doctest::Approx(0.25).epsilon(1e-12));

  Surface cut3 = {SurfacePatch{
      Vec(1, 0, 0), {Vec(0, -1, -1), Vec(0, 1, -1), Vec(0, 1, 1), Vec(0, -1, 1)}}};
  double ratio3 = busemann_area_surface(c3, cut3).value / busemann_area(c3, c3).value;
  CHECK(ratio3 == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  // linear invariance
  CounterRng rng(97);
  for (int i = 0; i < 8; ++i) {
    ConvexBody d = random_symmetric_body(2, 8, 5600 + i);
    ConvexBody u = random_body_with_origin(2, 7, 5650 + i);
    Mat L = Mat::Identity();
    L(0, 0) = 1.3;
    L(0, 1) = rng.uniform(-0.5, 0.5, i, 0);
    L(1, 1) = 0.8;
    CHECK(busemann_volume(d.linear_image(L), u.linear_image(L)).value ==
          doctest::Approx(busemann_volume(d, u).value).epsilon(1e-9));
  }

  // ratio vol_D / vol_Bus_D equals the volume product exactly
  ConvexBody d = random_symmetric_body(2, 10, 5700);
  ConvexBody u = random_body_with_origin(2, 7, 5750);
  double lhs = ht_volume_minkowski(d, u).value / busemann_volume(d, u).value;
  CHECK(lhs == doctest::Approx(volume_product(d)).epsilon(1e-12));
}

TEST_CASE("volume product") {
  CHECK(volume_product(make_ngon(512)) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(volume_product(make_cube(2)) == doctest::Approx(8.0 / (M_PI * M_PI)).epsilon(1e-12));
  // linear invariance under shear
  ConvexBody sq = make_cube(2);
  Mat shear = Mat::Identity();
  shear(0, 1) = 0.7;
  CHECK(volume_product(sq.linear_image(shear)) == doctest::Approx(volume_product(sq)).epsilon(1e-9));
}

TEST_CASE("ball growth profiles") {
  std::vector<double> radii;
  for (int i = 0; i < 8; ++i) radii.push_back(0.05 * std::pow(20.0, i / 7.0));

  GrowthProfile mink = ball_growth_minkowski(make_cube(2), radii);
  CHECK(mink.slope_vol == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(mink.slope_area == doctest::Approx(1.0).epsilon(1e-9));

  GrowthProfile hilb = ball_growth_hilbert(make_ngon(96), Vec::Zero(), radii, 128);
  CHECK(hilb.slope_vol > 1.9);
  CHECK(hilb.slope_vol < 2.1);
  CHECK(hilb.slope_area > 0.9);
  CHECK(hilb.slope_area < 1.1);

  // hyperbolic oracles for the disk: vol = 2*pi*(cosh r - 1), area = 2*pi*sinh r
  for (const GrowthRow& row : hilb.rows) {
    CHECK(std::abs(row.vol - 2 * M_PI * (std::cosh(row.r) - 1)) / row.vol < 2e-2);
    CHECK(std::abs(row.area - 2 * M_PI * std::sinh(row.r)) / row.area < 2e-2);
  }
}

TEST_CASE("HT measures are monotone under inclusion") {
  for (int i = 0; i < 6; ++i) {
    ConvexBody K = random_body_with_origin(2, 10, 5800 + i);
    ConvexBody G2 = random_body_with_origin(2, 8, 5850 + i).scaled(0.5);
    ConvexBody G1 = G2.scaled(0.6);
    bool inside = true;
    for (const Vec& v : G2.vertices())
      if (!K.is_interior(v, 0.05)) inside = false;
    if (!inside) continue;
    MeasureEstimate v1 = ht_volume_finsler(GeometryTag::Hilbert, K, G1, 8000, 3 + i);
    MeasureEstimate v2 = ht_volume_finsler(GeometryTag::Hilbert, K, G2, 8000, 5 + i);
    CHECK(v1.value <= v2.value + 3 * (v1.std_error + v2.std_error));
    double a1 = ht_area_finsler(GeometryTag::Hilbert, K, G1).value;
    double a2 = ht_area_finsler(GeometryTag::Hilbert, K, G2).value;
    CHECK(a1 <= a2 * (1 + 1e-9));
    double m1 = ht_area_minkowski(make_cube(2), G1).value;
    double m2 = ht_area_minkowski(make_cube(2), G2).value;
    CHECK(m1 <= m2 * (1 + 1e-9));
  }
}

TEST_CASE("3D finsler densities and measures") {
  // at the symmetry center the funk and hilbert densities coincide
  ConvexBody cube3 = make_cube(3);
  CHECK(funk_volume_density(cube3, Vec::Zero()) ==
        doctest::Approx(hilbert_volume_density(cube3, Vec::Zero())).epsilon(1e-9));
  // cube at center: polar of (K-0) is the cross-polytope, density 4/3 / (4pi/3)
  CHECK(funk_volume_density(cube3, Vec::Zero()) ==
        doctest::Approx((4.0 / 3.0) / (4.0 * M_PI / 3.0)).epsilon(1e-12));

  // asymmetric point: funk <= hilbert (difference body contains the polar)
  Vec x(0.4, -0.2, 0.3);
  CHECK(funk_volume_density(cube3, x) <= hilbert_volume_density(cube3, x) * (1 + 1e-12));

  // 3D funk volume duality by monte carlo
  ConvexBody K = recentered(make_random_hull(3, 14, 9200));
  ConvexBody G = recentered(make_random_hull(3, 10, 9250)).scaled(0.35);
  bool inside = true;
  for (const Vec& v : G.vertices())
    if (!K.is_interior(v, 0.03)) inside = false;
  if (inside) {
    MeasureEstimate lhs = ht_volume_finsler(GeometryTag::Funk, K, G, 12000, 3);
    MeasureEstimate rhs = ht_volume_finsler(GeometryTag::Funk, polar(G), polar(K), 12000, 4);
    CHECK(estimates_agree(lhs, rhs, 3.5));
  }

  // 3D funk area duality via facet quadrature (triangle rule; loose tolerance)
  ConvexBody Ks = symmetrize(recentered(make_random_hull(3, 12, 9300)), SymmetrizeMode::Union);
  ConvexBody Gs = make_cross(3).scaled(0.3);
  double a1 = ht_area_finsler(GeometryTag::Funk, Ks, Gs).value;
  double a2 = ht_area_finsler(GeometryTag::Funk, polar(Gs), polar(Ks)).value;
  CHECK(std::abs(a1 - a2) / a1 < 2e-2);
}
