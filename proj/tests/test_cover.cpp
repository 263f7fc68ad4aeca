#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hilbcover/cover.hpp"
#include "hilbcover/rng.hpp"

using namespace hilbcover;

namespace {

ConvexBody random_body_with_origin(int dim, int n, std::uint64_t seed) {
  return recentered(make_random_hull(dim, n, seed));
}

// (G, K) pair with clearance: G ⊂ 0.5*K-ish
std::pair<ConvexBody, ConvexBody> random_pair(std::uint64_t seed) {
  ConvexBody K = random_body_with_origin(2, 11, seed);
  ConvexBody G = random_body_with_origin(2, 9, seed + 5000).scaled(0.4);
  ConvexBody Kin = K.scaled(0.55);
  return {intersect(Kin, G), K};  // guarantees G inside 0.55*K
}

}  // namespace

TEST_CASE("minkowski expansion") {
  ConvexBody sq = make_cube(2);
  ConvexBody c = make_scaled_cube(2, 0.5);
  CHECK(hausdorff_distance(expand_minkowski(c, sq, 0.0), c) == 0.0);

  ConvexBody e = expand_minkowski(c, sq, 0.3);
  CHECK(hausdorff_distance(e, make_scaled_cube(2, 0.8)) < 1e-12);

  // 1D sharp instance
  double a = 0.25;
  ConvexBody cp = expand_minkowski(make_interval(-a / 2, a / 2), make_interval(-1, 1), a);
  CHECK(cp.vertices()[0].x() == doctest::Approx(-1.5 * a));
  CHECK(cp.vertices()[1].x() == doctest::Approx(1.5 * a));

  // C strictly inside the expansion
  for (const Vec& v : c.vertices()) CHECK(e.is_interior(v, 1e-6));
}

TEST_CASE("hilbert expansion: 1D tanh instance and disk oracle") {
  // K=[-1,1], G=[-tanh(a/2), tanh(a/2)] -> G+ = [-tanh(3a/2), tanh(3a/2)]
  for (double alpha : {0.2, 0.5, 1.0}) {
    ConvexBody K = make_interval(-1, 1);
    ConvexBody G = make_interval(-std::tanh(alpha / 2), std::tanh(alpha / 2));
    ConvexBody gp = expand_hilbert(K, G, alpha, 2, 1e-12);
    CHECK(gp.vertices()[1].x() == doctest::Approx(std::tanh(1.5 * alpha)).epsilon(1e-9));
    CHECK(gp.vertices()[0].x() == doctest::Approx(-std::tanh(1.5 * alpha)).epsilon(1e-9));
  }

  // disk: G = ball of hyperbolic radius rho -> expansion = ball of radius rho+alpha
  ConvexBody disk = make_ngon(192);
  double rho = 0.6, alpha = 0.4;
  ConvexBody G = hilbert_ball(disk, Vec::Zero(), rho, 192).to_body();
  ConvexBody gp = expand_hilbert(disk, G, alpha, 128, 1e-10);
  double expect = std::tanh(rho + alpha);
  for (const Vec& v : gp.vertices()) CHECK(std::abs(v.norm() - expect) <= 2e-4);

  // alpha -> 0: expansion hugs G
  ConvexBody tiny = expand_hilbert(disk, G, 1e-3, 128, 1e-10);
  CHECK(hausdorff_distance(tiny, G) < 2e-3);

  // containment chain G ⊂ int(G+) ⊂ int(K)
  auto [g2, k2] = random_pair(7100);
  ConvexBody gp2 = expand_hilbert(k2, g2, 0.5, 256, 1e-9);
  for (const Vec& v : g2.vertices()) CHECK(gp2.is_interior(v, 1e-9));
  for (const Vec& v : gp2.vertices()) CHECK(k2.is_interior(v, 1e-9));
  CHECK_THROWS_AS(expand_hilbert(k2, g2, 1.5, 64, 1e-9), Error);

  // convexity certificate: independently re-solved level points lie on the
  // hull of the sampled expansion (none strictly inside beyond eps)
  Vec anchor2 = g2.centroid();
  DirectionFan fan2 = make_fan(2, 64);
  int on_hull = 0;
  for (int k = 0; k < fan2.size(); ++k) {
    const Vec& u = fan2.dirs[k];
    double lo = g2.ray_exit(anchor2, u).second;
    double hi = k2.ray_exit(anchor2, u).second * (1 - 1e-9);
    for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
      double mid = 0.5 * (lo + hi);
      (distance_to_set_hilbert(k2, anchor2 + mid * u, g2, 1e-9) <= 0.5 ? lo : hi) = mid;
    }
    Vec level_point = anchor2 + 0.5 * (lo + hi) * u;
    if (std::abs(gp2.interior_margin(level_point)) < 1e-7) ++on_hull;
  }
  CHECK(on_hull == fan2.size());
}

TEST_CASE("polarity-expansion stability: distances grow by at most 2*alpha") {
  CounterRng rng(7500);
  for (int i = 0; i < 5; ++i) {
    auto [G, K] = random_pair(7200 + i);
    double alpha = 0.2 + 0.2 * rng.u01(i, 0);
    ConvexBody gplus = expand_hilbert(K, G, alpha, 512, 1e-10);
    ConvexBody pk = polar(K), pg = polar(G), pgp = polar(gplus);
    for (int j = 0; j < 20; ++j) {
      // points on the boundary of polar K
      Vec p = pk.ray_exit(Vec::Zero(), Vec(std::cos(rng.u01(20 * i + j, 1) * 2 * M_PI),
                                           std::sin(rng.u01(20 * i + j, 1) * 2 * M_PI), 0))
                  .first;
      Vec q = pk.ray_exit(Vec::Zero(), Vec(std::cos(rng.u01(20 * i + j, 2) * 2 * M_PI),
                                           std::sin(rng.u01(20 * i + j, 2) * 2 * M_PI), 0))
                  .first;
      // pull strictly inside the polar of the expansion
      p *= 1 - 1e-9;
      q *= 1 - 1e-9;
      double before = hilbert_distance(pg, p, q);
      double after = hilbert_distance(pgp, p, q);
      CHECK(after <= before + 2 * alpha + 1e-6);
    }
  }
}

TEST_CASE("maximal separated nets") {
  // 1D packing bracket: C=[0,1], D=[-1,1], alpha=0.1 -> between 6 and 11
  MetricSpace m1 = minkowski_space(make_interval(-1, 1));
  std::vector<Vec> ground = interior_sample_grid(m1, make_interval(0, 1), 0.1);
  for (std::uint64_t s : {1ull, 2ull, 3ull}) {
    Net net = maximal_separated_net(m1, ground, 0.1, s);
    CHECK(net.separated);
    CHECK(net.centers.size() >= 6);
    CHECK(net.centers.size() <= 11);
  }

  // alpha >= diameter -> single center
  MetricSpace m2 = minkowski_space(make_cube(2));
  std::vector<Vec> g2 = interior_sample_grid(m2, make_scaled_cube(2, 0.5), 3.0);
  Net big = maximal_separated_net(m2, g2, 3.0, 9);
  CHECK(big.centers.size() == 1);

  // separation certificate on a hilbert instance
  auto [G, K] = random_pair(7300);
  MetricSpace mh = hilbert_space(K);
  std::vector<Vec> g3 = interior_sample_grid(mh, G, 0.4, 30000);
  Net net3 = maximal_separated_net(mh, g3, 0.4, 5);
  CHECK(net3.separated);
  CHECK(net3.centers.size() >= 1);

  CHECK_THROWS_AS(maximal_separated_net(m1, {}, 0.1, 1), Error);
}

TEST_CASE("covering estimates") {
  // alpha >= diameter -> upper = 1
  MetricSpace m2 = minkowski_space(make_cube(2));
  CoverEstimate one = covering_estimate(m2, make_scaled_cube(2, 0.5), TargetKind::Body, 2.0, 11);
  CHECK(one.upper == 1);
  CHECK(one.lower >= 1);

  // 1D hilbert: exact count ceil(artanh(g)/alpha)
  MetricSpace mh1 = hilbert_space(make_interval(-1, 1));
  double R = std::atanh(0.9);
  CoverEstimate c1 = covering_estimate(mh1, make_interval(-0.9, 0.9), TargetKind::Body, 0.25, 3);
  CHECK(c1.exact);
  CHECK(c1.upper == static_cast<long>(std::ceil(R / 0.25)));
  CHECK(c1.lower == c1.upper);

  // monotone in alpha (medians over seeds)
  auto [G, K] = random_pair(7400);
  MetricSpace mh = hilbert_space(K);
  long prev = std::numeric_limits<long>::max();
  for (double alpha : {0.25, 0.5, 1.0}) {
    CoverEstimate est = covering_estimate(mh, G, TargetKind::Body, alpha, 21);
    CHECK(est.lower <= est.upper);
    CHECK(est.upper <= prev);
    prev = est.upper;
  }

  // boundary covering: log-log slope of upper(alpha) near 1 in 2D
  std::vector<double> alphas = {0.1, 0.2, 0.4, 0.8};
  std::vector<double> lx, ly;
  for (double a : alphas) {
    CoverEstimate est = covering_estimate(mh, G, TargetKind::Boundary, a, 31);
    lx.push_back(std::log(a));
    ly.push_back(std::log(static_cast<double>(est.upper)));
  }
  double sxy = 0, sxx = 0, mx = 0, my = 0;
  for (size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= lx.size();
  my /= ly.size();
  for (size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  double slope = -sxy / sxx;
  CHECK(slope > 0.8);
  CHECK(slope < 1.2);
}

TEST_CASE("boundary transfer") {
  // 1D-like: thin strip uses the closed form; use the tanh instance in 2D via a disk
  ConvexBody disk = make_ngon(160);
  ConvexBody G = hilbert_ball(disk, Vec::Zero(), 0.5, 160).to_body();
  BoundaryTransferResult r = boundary_transfer_hilbert(disk, G, 0.3, 25, 99, 1e-5, 2048);
  CHECK(r.pass);

  ConvexBody C = random_body_with_origin(2, 9, 7500);
  BoundaryTransferResult rm = boundary_transfer_minkowski(C, make_cube(2), 0.2, 50, 7);
  CHECK(rm.pass);
}

TEST_CASE("fatness") {
  // minkowski expansion is relatively alpha-fat with fraction >= 2^-d
  ConvexBody C = random_body_with_origin(2, 8, 7600);
  ConvexBody D = symmetrize(random_body_with_origin(2, 8, 7650), SymmetrizeMode::Union);
  double alpha = 0.3;
  ConvexBody cplus = expand_minkowski(C, D, alpha);
  MetricSpace m = minkowski_space(D);
  FatnessResult f = fatness_check(m, cplus, alpha, 0.25 - 0.02, 40, 3);
  CHECK(f.pass);
  CHECK(f.min_volume_fraction >= 0.23);

  // thin needle fails a generous threshold
  ConvexBody needle = ConvexBody::from_vertices(
      2, {Vec(-1, -0.01, 0), Vec(1, -0.01, 0), Vec(1, 0.01, 0), Vec(-1, 0.01, 0)});
  FatnessResult fn = fatness_check(minkowski_space(make_cube(2)), needle, 0.1, 0.2, 40, 3);
  CHECK(!fn.pass);

  // flat boundary point: a ball centered there is bisected, fraction 1/2
  ConvexBody wedge = clip(make_ngon(128), Halfspace{Vec(1, 0, 0), 0.0});
  ConvexBody ball = make_cube(2).scaled(0.05);  // small: sees only the flat piece
  ConvexBody capb = intersect(ball, wedge);
  CHECK(capb.volume() / ball.volume() == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("relative isoperimetry") {
  // cube ball, halfplane cut through the center: mu = 1/2, busemann beta = 1/4
  ConvexBody sq = make_cube(2);
  ConvexBody halfplane = ConvexBody::from_vertices(
      2, {Vec(0, -5, 0), Vec(0, 5, 0), Vec(-5, 5, 0), Vec(-5, -5, 0)});
  IsoperimetrySample s =
      relative_isoperimetry_minkowski(sq, Vec::Zero(), 1.0, halfplane, AreaNormalization::Busemann);
  CHECK(s.mu == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(s.beta == doctest::Approx(0.25).epsilon(1e-9));

  // degenerate cut when E contains the ball
  ConvexBody big = make_scaled_cube(2, 3.0);
  CHECK_THROWS_AS(relative_isoperimetry_minkowski(sq, Vec::Zero(), 1.0, big), Error);

  // random halfplane cuts: beta/min(mu,1-mu) > 0
  CounterRng rng(7700);
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 25; ++i) {
    ConvexBody D = symmetrize(random_body_with_origin(2, 9, 7800 + i), SymmetrizeMode::Union);
    double ang = 2 * M_PI * rng.u01(i, 0);
    double off = 0.4 * (rng.u01(i, 1) - 0.5);
    Vec n(std::cos(ang), std::sin(ang), 0);
    // halfplane {<n,x> <= off} as a big clipped box
    ConvexBody world = make_scaled_cube(2, 6.0);
    ConvexBody E = clip(world, Halfspace{n, off});
    try {
      IsoperimetrySample smp = relative_isoperimetry_minkowski(D, Vec::Zero(), 1.0, E);
      double ratio = smp.beta / std::min(smp.mu, 1 - smp.mu);
      worst = std::min(worst, ratio);
    } catch (const Error&) {
      continue;  // degenerate cut
    }
  }
  CHECK(worst > 0.0);

  // hilbert: anchored cut through the ball center
  ConvexBody disk = make_ngon(96);
  ConvexBody E = clip(make_scaled_cube(2, 0.9), Halfspace{Vec(1, 0, 0), 0.0});
  IsoperimetrySample sh = relative_isoperimetry_hilbert(disk, Vec::Zero(), 0.8, E, 5);
  CHECK(sh.mu == doctest::Approx(0.5).epsilon(1e-2));
  CHECK(sh.beta > 0.1);
}

TEST_CASE("complementary chords") {
  // disk: chord perpendicular to h (supporting lines parallel to h)
  ConvexBody disk = make_ngon(256);
  ChordResult r = complementary_chord_2d(disk, Vec::Zero(), Halfspace{Vec(0, 1, 0), 0.0}, 1e-6);
  CHECK(std::abs(r.residual) <= 1e-6);
  // endpoints near ±e2 up to polygon resolution: the chord is orthogonal to h
  CHECK(std::abs(std::abs(r.a.y()) - 1.0) < 1e-2);

  // centrally symmetric body about x: supporting lines parallel, meet h at infinity
  ConvexBody sym = symmetrize(random_body_with_origin(2, 9, 7900), SymmetrizeMode::Union);
  ChordResult r2 = complementary_chord_2d(sym, Vec::Zero(), Halfspace{Vec(0, 1, 0), 0.0}, 1e-6);
  CHECK(std::abs(r2.residual) <= 1e-6);

  // random polygons, random interior points and lines
  CounterRng rng(8000);
  int found = 0;
  for (int i = 0; i < 40; ++i) {
    ConvexBody K = random_body_with_origin(2, 7 + static_cast<int>(rng.index(8, i, 0)), 8100 + i);
    Vec x = 0.5 * K.centroid() + 0.3 * K.vertices()[0];
    if (!K.is_interior(x, 1e-6)) continue;
    double ang = 2 * M_PI * rng.u01(i, 1);
    Vec n(std::cos(ang), std::sin(ang), 0);
    ChordResult rr = complementary_chord_2d(K, x, Halfspace{n, n.dot(x)}, 1e-6);
    CHECK(std::abs(rr.residual) <= 1e-6);
    ++found;
  }
  CHECK(found >= 35);
}

TEST_CASE("3D covering smoke") {
  ConvexBody K = recentered(make_random_hull(3, 12, 9600));
  ConvexBody G = make_cross(3).scaled(0.25);
  bool inside = true;
  for (const Vec& v : G.vertices())
    if (!K.is_interior(v, 0.02)) inside = false;
  if (!inside) return;
  MetricSpace m = hilbert_space(K);
  CoverEstimate body = covering_estimate(m, G, TargetKind::Body, 0.6, 5, 1);
  CHECK(body.lower <= body.upper);
  CHECK(body.upper >= 1);
  CoverEstimate bd = covering_estimate(m, G, TargetKind::Boundary, 0.6, 5, 1);
  CHECK(bd.lower <= bd.upper);

  MetricSpace mm = minkowski_space(make_cube(3));
  CoverEstimate mb = covering_estimate(mm, G, TargetKind::Body, 0.2, 5, 1);
  CHECK(mb.lower <= mb.upper);
  CHECK(mb.upper >= mb.lower);
}

TEST_CASE("1D transfer instance and self-dual covering ratio") {
  // 1D: x = tanh(a/2) and y = tanh(3a/2) are exactly distance a apart
  ConvexBody iv = make_interval(-1, 1);
  for (double a : {0.2, 0.45, 0.9}) {
    double d = hilbert_distance(iv, Vec(std::tanh(a / 2), 0, 0), Vec(std::tanh(1.5 * a), 0, 0));
    CHECK(d == doctest::Approx(a).epsilon(1e-12));
  }

  // self-dual disk instance: covering G = disk/2 inside the disk matches the
  // polar problem (disk inside 2*disk) up to net randomness
  ConvexBody disk = make_ngon(96);
  ConvexBody G = disk.scaled(0.5);
  MetricSpace primal = hilbert_space(disk);
  MetricSpace dual = hilbert_space(polar(G));  // = 2*disk up to polygon duality
  ConvexBody pk = polar(disk);
  for (double alpha : {0.3, 0.6}) {
    CoverEstimate a = covering_estimate(primal, G, TargetKind::Body, alpha, 3);
    CoverEstimate b = covering_estimate(dual, pk, TargetKind::Body, alpha, 3);
    double ratio = static_cast<double>(a.upper) / static_cast<double>(b.upper);
    CHECK(ratio > 0.55);
    CHECK(ratio < 1.8);
  }
}
