#include "hilbcover/checks.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "hilbcover/rng.hpp"

namespace hilbcover {

const Tolerances& tolerances() {
  static Tolerances t;
  return t;
}

ConvexBody random_centered_body(int dim, int n, std::uint64_t seed) {
  return recentered(make_random_hull(dim, n, seed));
}

std::pair<ConvexBody, ConvexBody> random_nested_pair(int dim, std::uint64_t seed) {
  ConvexBody K = random_centered_body(dim, dim == 3 ? 14 : 11, seed);
  ConvexBody G0 = random_centered_body(dim, dim == 3 ? 12 : 9, seed + 65537).scaled(0.4);
  ConvexBody G = intersect(K.scaled(0.55), G0);
  return {G, K};
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
  }
};

std::string describe(const CheckConfig& cfg, int n_instances) {
  std::ostringstream os;
  os << "dim=" << cfg.dim << " alpha=" << cfg.alpha << " instances=" << n_instances
     << " seed=" << cfg.seed;
  return os.str();
}

int instances_or(const CheckConfig& cfg, int dflt) {
  return cfg.n_instances > 0 ? cfg.n_instances : dflt;
}

Vec random_direction_2d(const CounterRng& rng, std::uint64_t k, std::uint64_t stream) {
  double a = 2 * M_PI * rng.u01(k, stream);
  return Vec(std::cos(a), std::sin(a), 0);
}

Vec random_point_in(const ConvexBody& body, const CounterRng& rng, std::uint64_t k, double pull) {
  Vec c = body.centroid();
  const auto& V = body.vertices();
  Vec p = Vec::Zero();
  double total = 0;
  for (size_t i = 0; i < V.size(); ++i) {
    double w = rng.u01(k, 100 + i);
    p += w * V[i];
    total += w;
  }
  p /= total;
  return c + pull * (p - c);
}

// --- individual checks -------------------------------------------------------

CheckReport check_polar_involution(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 8);
  double worst = 0;
  for (int dim = 1; dim <= 3; ++dim)
    for (int i = 0; i < n; ++i) {
      ConvexBody K = random_centered_body(dim, dim == 3 ? 14 : 10, cfg.seed + 10 * dim + i);
      worst = std::max(worst, hausdorff_distance(polar(polar(K)), K));
    }
  r.lhs = worst;
  r.rhs = 0;
  r.ratio = 0;
  r.tolerance = tolerances().exact;
  r.pass = worst <= r.tolerance;
  r.inputs = describe(cfg, 3 * n);
  return r;
}

CheckReport check_slice_project_dual(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 50);
  CounterRng rng(cfg.seed);
  double worst = 0;
  int count = 0;
  for (int i = 0; i < n; ++i) {
    for (int dim : {2, 3}) {
      ConvexBody K = random_centered_body(dim, dim == 3 ? 14 : 10, cfg.seed + 100 + 2 * i + dim);
      // random subspace: a line (and in 3D also a plane)
      Vec u = Vec::Zero();
      for (int k = 0; k < dim; ++k) u[k] = rng.uniform(-1, 1, 7 * i + dim, k);
      if (u.norm() < 0.1) u = Vec(1, 0, 0);
      std::vector<Subspace> spaces = {Subspace::span(dim, {u})};
      if (dim == 3) {
        Vec v(rng.uniform(-1, 1, 7 * i + dim, 5), rng.uniform(-1, 1, 7 * i + dim, 6), 1.0);
        spaces.push_back(Subspace::span(3, {u, v}));
      }
      for (const Subspace& E : spaces) {
        ConvexBody lhs = polar(slice_in_subspace(K, E));
        ConvexBody rhs = project_to_subspace(polar(K), E);
        worst = std::max(worst, hausdorff_distance(lhs, rhs));
        ++count;
      }
    }
  }
  r.lhs = worst;
  r.rhs = 0;
  r.tolerance = tolerances().dual_hausdorff;
  r.pass = worst <= r.tolerance;
  r.inputs = describe(cfg, count);
  return r;
}

CheckReport check_funk_variational(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 200);
  CounterRng rng(cfg.seed);
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    ConvexBody K = random_centered_body(2, 9, cfg.seed + 300 + i);
    ConvexBody pk = polar(K);
    Vec x = random_point_in(K, rng, 2 * i, 0.8);
    Vec y = random_point_in(K, rng, 2 * i + 1, 0.8);
    worst = std::max(worst, std::abs(funk_distance(K, x, y) - funk_distance_variational(K, pk, x, y)));
  }
  r.lhs = worst;
  r.tolerance = tolerances().cross;
  r.pass = worst <= r.tolerance;
  r.inputs = describe(cfg, n);
  return r;
}

CheckReport check_hilbert_additivity(const CheckConfig& cfg) {
  CheckReport r;
  ConvexBody iv = make_interval(-1, 1);
  double d1 = hilbert_distance(iv, Vec(0, 0, 0), Vec(0.3, 0, 0));
  double d2 = hilbert_distance(iv, Vec(0.3, 0, 0), Vec(0.6, 0, 0));
  double d3 = hilbert_distance(iv, Vec(0, 0, 0), Vec(0.6, 0, 0));
  double worst = std::abs(d1 + d2 - d3);
  // artanh oracle values
  worst = std::max(worst, std::abs(d3 - std::atanh(0.6)));
  // random 2D collinear triples
  int n = instances_or(cfg, 50);
  CounterRng rng(cfg.seed);
  for (int i = 0; i < n; ++i) {
    ConvexBody K = random_centered_body(2, 10, cfg.seed + 400 + i);
    Vec x = random_point_in(K, rng, 3 * i, 0.8);
    Vec z = random_point_in(K, rng, 3 * i + 1, 0.8);
    Vec y = x + rng.u01(i, 9) * (z - x);
    worst = std::max(worst, std::abs(hilbert_distance(K, x, y) + hilbert_distance(K, y, z) -
                                     hilbert_distance(K, x, z)));
  }
  r.lhs = worst;
  r.tolerance = 1e-10;
  r.pass = worst <= r.tolerance;
  r.inputs = describe(cfg, n + 1);
  return r;
}

CheckReport check_sandwich(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 20);
  CounterRng rng(cfg.seed);
  double min_sigma = std::numeric_limits<double>::infinity();
  double max_tau = 0;
  bool ok = true;
  int used = 0;
  for (int i = 0; i < n; ++i) {
    ConvexBody K = random_centered_body(2, 10, cfg.seed + 500 + i);
    Vec x = random_point_in(K, rng, i, 0.95);
    DirectionFan fan = make_fan(2, 64);
    double aniso = 1;
    for (int k = 0; k < fan.size(); ++k) {
      auto [sm, sp] = K.line_exits(x, fan.dirs[k]);
      aniso = std::max(aniso, sp / -sm);
    }
    if (aniso < 1.4) continue;
    ++used;
    double rr = 0.2 + 0.4 * rng.u01(i, 5);
    auto [sig, tau] = sandwich_estimate(K, x, rr, cfg.n_dir);
    min_sigma = std::min(min_sigma, sig);
    max_tau = std::max(max_tau, tau);
    if (!(sig > 0 && sig <= 1.0 && tau * (1 + 1e-9) >= 1.0 && sig <= tau)) ok = false;
  }
  r.lhs = min_sigma;
  r.rhs = max_tau;
  r.ratio = max_tau / min_sigma;
  r.tolerance = 0;
  r.pass = ok && used > 0;
  r.inputs = describe(cfg, used);
  r.note = "per-instance sandwich ratios on anisotropic base points";
  return r;
}

CheckReport check_finsler_sandwich(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 20);
  CounterRng rng(cfg.seed);
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    ConvexBody K = random_centered_body(2, 10, cfg.seed + 600 + i);
    Vec x = random_point_in(K, rng, i, 0.9);
    FinslerBall ball = hilbert_finsler_ball(K, x, 256);
    for (int k = 0; k < ball.fan.size(); ++k) {
      auto [sm, sp] = K.line_exits(x, ball.fan.dirs[k]);
      double mac = std::min(sp, -sm);
      worst = std::max(worst, mac - ball.radii[k]);            // A(y) inside the ball
      worst = std::max(worst, ball.radii[k] - 2 * mac);        // ball inside 2 A(y)
    }
  }
  r.lhs = worst;
  r.tolerance = 1e-12;
  r.pass = worst <= r.tolerance;
  r.inputs = describe(cfg, n);
  return r;
}

CheckReport check_polar_sum_gauge(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 20);
  CounterRng rng(cfg.seed);
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    ConvexBody C = symmetrize(random_centered_body(2, 8, cfg.seed + 700 + i), SymmetrizeMode::Union);
    ConvexBody D = symmetrize(random_centered_body(2, 8, cfg.seed + 750 + i), SymmetrizeMode::Union);
    double a = 0.2 + rng.u01(i, 0);
    ConvexBody psum = polar(minkowski_sum(C, D.scaled(a)));
    ConvexBody pc = polar(C), pd = polar(D);
    for (int j = 0; j < 20; ++j) {
      Vec u = random_direction_2d(rng, 20 * i + j, 1);
      worst = std::max(worst, std::abs(psum.gauge(u) - pc.gauge(u) - a * pd.gauge(u)));
    }
  }
  r.lhs = worst;
  r.tolerance = tolerances().exact;
  r.pass = worst <= r.tolerance;
  r.inputs = describe(cfg, n);
  return r;
}

CheckReport check_mink_stability_sharp(const CheckConfig& cfg) {
  CheckReport r;
  double alpha = cfg.alpha;
  ConvexBody D = make_interval(-1, 1);
  ConvexBody C = make_interval(-alpha / 2, alpha / 2);
  ConvexBody Cp = expand_minkowski(C, D, alpha);
  ConvexBody pc = polar(C), pcp = polar(Cp);
  Vec p(1, 0, 0), x(-1, 0, 0);
  r.lhs = pc.gauge(p - x);
  r.rhs = pcp.gauge(p - x);
  r.ratio = r.rhs / r.lhs;
  r.tolerance = tolerances().exact;
  r.pass = std::abs(r.ratio - 3.0) <= r.tolerance && std::abs(r.lhs - alpha) <= r.tolerance;
  std::ostringstream os;
  os << "alpha=" << alpha << " 1D sharp instance";
  r.inputs = os.str();
  return r;
}

CheckReport check_hilb_stability_sharp(const CheckConfig& cfg) {
  CheckReport r;
  double alpha = cfg.alpha;
  ConvexBody K = make_interval(-1, 1);
  double a = std::tanh(alpha / 2);
  ConvexBody G = make_interval(-a, a);
  ConvexBody Gp = expand_hilbert(K, G, alpha, 2, 1e-13);
  ConvexBody pg = polar(G), pgp = polar(Gp);
  Vec p(1, 0, 0), x(-1, 0, 0);
  r.lhs = hilbert_distance(pg, p, x);
  r.rhs = hilbert_distance(pgp, p, x);
  r.ratio = r.rhs / r.lhs;
  r.tolerance = tolerances().exact;
  r.pass = std::abs(r.ratio - 3.0) <= r.tolerance && std::abs(r.lhs - alpha) <= r.tolerance;
  std::ostringstream os;
  os << "alpha=" << alpha << " 1D sharp instance";
  r.inputs = os.str();
  return r;
}

CheckReport check_funk_vol_duality(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 20);
  double worst_sig = 0;
  bool ok = true;
  for (int i = 0; i < n; ++i) {
    auto [G, K] = random_nested_pair(2, cfg.seed + 800 + i);
    MeasureEstimate lhs = ht_volume_finsler(GeometryTag::Funk, K, G, cfg.n_samples, cfg.seed + i);
    MeasureEstimate rhs =
        ht_volume_finsler(GeometryTag::Funk, polar(G), polar(K), cfg.n_samples, cfg.seed + 7777 + i);
    double sig = std::abs(lhs.value - rhs.value) / (lhs.std_error + rhs.std_error + 1e-300);
    worst_sig = std::max(worst_sig, sig);
    if (!estimates_agree(lhs, rhs, tolerances().mc_sigma)) ok = false;
    r.lhs = lhs.value;
    r.rhs = rhs.value;
  }
  r.ratio = worst_sig;
  r.tolerance = tolerances().mc_sigma;
  r.pass = ok;
  r.inputs = describe(cfg, n);
  r.note = "ratio = worst |lhs-rhs| / (se_lhs+se_rhs)";
  return r;
}

CheckReport check_funk_area_duality(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 20);
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    auto [G, K] = random_nested_pair(2, cfg.seed + 900 + i);
    double lhs = ht_area_finsler(GeometryTag::Funk, K, G).value;
    double rhs = ht_area_finsler(GeometryTag::Funk, polar(G), polar(K)).value;
    worst = std::max(worst, std::abs(lhs - rhs) / lhs);
    r.lhs = lhs;
    r.rhs = rhs;
  }
  r.ratio = worst;
  r.tolerance = tolerances().area_duality_rel;
  r.pass = worst <= r.tolerance;
  r.inputs = describe(cfg, n);
  r.note = "ratio = worst relative residual";
  return r;
}

CheckReport check_hilb_measure_polarity_beta(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 10);
  const double beta2 = 1.5, beta1 = 1.0;
  const double slack = tolerances().beta_slack;
  bool ok = true;
  double worst_vol_ratio = 1, worst_area_ratio = 1;
  for (int i = 0; i < n; ++i) {
    auto [G, K] = random_nested_pair(2, cfg.seed + 1000 + i);
    MeasureEstimate v1 = ht_volume_finsler(GeometryTag::Hilbert, K, G, cfg.n_samples, cfg.seed + i);
    MeasureEstimate v2 =
        ht_volume_finsler(GeometryTag::Hilbert, polar(G), polar(K), cfg.n_samples, cfg.seed + 31 + i);
    double vr = v1.value / v2.value;
    worst_vol_ratio = std::max({worst_vol_ratio, vr, 1 / vr});
    if (vr > beta2 * slack || vr < 1 / (beta2 * slack)) ok = false;
    double a1 = ht_area_finsler(GeometryTag::Hilbert, K, G).value;
    double a2 = ht_area_finsler(GeometryTag::Hilbert, polar(G), polar(K)).value;
    double ar = a1 / a2;
    worst_area_ratio = std::max({worst_area_ratio, ar, 1 / ar});
    if (ar > beta1 * slack || ar < 1 / (beta1 * slack)) ok = false;
  }
  r.lhs = worst_vol_ratio;
  r.rhs = worst_area_ratio;
  r.ratio = worst_vol_ratio;
  r.tolerance = beta2 * slack;
  r.pass = ok;
  r.inputs = describe(cfg, n);
  r.note = "lhs = worst volume polarity ratio (band 3/2), rhs = worst area ratio (band 1)";
  return r;
}

CheckReport check_mink_measure_duality(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 20);
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    ConvexBody D = symmetrize(random_centered_body(2, 9, cfg.seed + 1100 + i), SymmetrizeMode::Union);
    ConvexBody C = symmetrize(random_centered_body(2, 11, cfg.seed + 1150 + i), SymmetrizeMode::Union);
    double v1 = ht_volume_minkowski(D, C).value;
    double v2 = ht_volume_minkowski(polar(C), polar(D)).value;
    double a1 = ht_area_minkowski(D, C).value;
    double a2 = ht_area_minkowski(polar(C), polar(D)).value;
    worst = std::max({worst, std::abs(v1 - v2) / v1, std::abs(a1 - a2) / a1});
    r.lhs = a1;
    r.rhs = a2;
  }
  r.ratio = worst;
  r.tolerance = tolerances().quad_rel;
  r.pass = worst <= r.tolerance;
  r.inputs = describe(cfg, n);
  r.note = "ratio = worst relative residual over volume and area identities";
  return r;
}

CheckReport check_cauchy_area(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 20);
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    ConvexBody D = symmetrize(random_centered_body(2, 9, cfg.seed + 1200 + i), SymmetrizeMode::Union);
    ConvexBody C = random_centered_body(2, 10, cfg.seed + 1250 + i);
    double direct = ht_area_minkowski(D, C).value;
    double cauchy = ht_area_minkowski_cauchy(D, C).value;
    worst = std::max(worst, std::abs(direct - cauchy) / direct);
    r.lhs = direct;
    r.rhs = cauchy;
  }
  r.ratio = worst;
  r.tolerance = tolerances().quad_rel;
  r.pass = worst <= r.tolerance;
  r.inputs = describe(cfg, n);
  return r;
}

CheckReport check_busemann_cube_halfspace(const CheckConfig& cfg) {
  (void)cfg;
  CheckReport r;
  double worst = 0;
  for (int d = 2; d <= 3; ++d) {
    ConvexBody cube = make_cube(d);
    ConvexBody world = make_scaled_cube(d, 5.0);
    ConvexBody E = clip(world, Halfspace{Vec(1, 0, 0), 0.0});
    IsoperimetrySample s =
        relative_isoperimetry_minkowski(cube, Vec::Zero(), 1.0, E, AreaNormalization::Busemann);
    worst = std::max(worst, std::abs(s.beta - 1.0 / (2 * d)));
    worst = std::max(worst, std::abs(s.mu - 0.5));
    if (d == 2) {
      r.lhs = s.beta;
      r.rhs = 0.25;
    }
  }
  r.ratio = worst;
  r.tolerance = tolerances().exact;
  r.pass = worst <= r.tolerance;
  r.inputs = "cube halfspace cut, dims 2 and 3";
  return r;
}

CheckReport check_jacobian_symmetry(const CheckConfig& cfg) {
  CheckReport r;
  long n = cfg.n_samples > 0 ? cfg.n_samples : 10000;
  if (n < 10000) n = 10000;
  CounterRng rng(cfg.seed);
  double worst = 0;
  for (long i = 0; i < n; ++i) {
    int dim = 1 + static_cast<int>(i % 3);
    double range = 0.7 / std::sqrt(static_cast<double>(dim));  // keeps <x,y> < 1
    Vec x = Vec::Zero(), y = Vec::Zero();
    for (int k = 0; k < dim; ++k) {
      x[k] = rng.uniform(-range, range, i, k);
      y[k] = rng.uniform(-range, range, i, 3 + k);
    }
    auto fwd = projective_polar_map(dim, x, y);
    auto bwd = projective_polar_map(dim, y, x);
    worst = std::max(worst, std::abs(fwd.det - bwd.det));
  }
  r.lhs = worst;
  r.tolerance = tolerances().jacobian;
  r.pass = worst <= r.tolerance;
  std::ostringstream os;
  os << "pairs=" << n << " dims 1-3, seed=" << cfg.seed;
  r.inputs = os.str();
  return r;
}

CheckReport check_ball_growth(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 5);
  std::vector<double> radii;
  for (int i = 0; i < 8; ++i) radii.push_back(0.05 * std::pow(20.0, i / 7.0));
  double lo_v = 10, hi_v = 0, lo_a = 10, hi_a = 0;
  bool ok = true;
  // minkowski slopes are exact by homogeneity
  GrowthProfile mink = ball_growth_minkowski(make_cube(2), radii);
  if (std::abs(mink.slope_vol - 2.0) > 1e-9 || std::abs(mink.slope_area - 1.0) > 1e-9) ok = false;
  for (int i = 0; i < n; ++i) {
    ConvexBody K = random_centered_body(2, 10, cfg.seed + 1300 + i);
    GrowthProfile prof = ball_growth_hilbert(K, Vec::Zero(), radii, 256);
    lo_v = std::min(lo_v, prof.slope_vol);
    hi_v = std::max(hi_v, prof.slope_vol);
    lo_a = std::min(lo_a, prof.slope_area);
    hi_a = std::max(hi_a, prof.slope_area);
    if (prof.slope_vol < 1.9 || prof.slope_vol > 2.1) ok = false;
    if (prof.slope_area < 0.9 || prof.slope_area > 1.1) ok = false;
  }
  r.lhs = lo_v;
  r.rhs = hi_v;
  r.ratio = hi_a;
  r.tolerance = 0.1;
  r.pass = ok;
  r.inputs = describe(cfg, n);
  r.note = "lhs/rhs = volume slope range; ratio = max area slope";
  return r;
}

CheckReport check_expansion_fatness(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 5);
  CounterRng rng(cfg.seed);
  double min_mink = 1, min_hilb = 1;
  for (int i = 0; i < n; ++i) {
    ConvexBody C = random_centered_body(2, 8, cfg.seed + 1400 + i);
    ConvexBody D = symmetrize(random_centered_body(2, 8, cfg.seed + 1450 + i), SymmetrizeMode::Union);
    double alpha = 0.2 + 0.2 * rng.u01(i, 0);
    ConvexBody cplus = expand_minkowski(C, D, alpha);
    FatnessResult f = fatness_check(minkowski_space(D), cplus, alpha, 0.25 - 0.02, 30,
                                    cfg.seed + 2 * i);
    min_mink = std::min(min_mink, f.min_volume_fraction);

    auto [G, K] = random_nested_pair(2, cfg.seed + 1500 + i);
    double beta = 0.3 + 0.3 * rng.u01(i, 1);
    ConvexBody gplus = expand_hilbert(K, G, beta, 512, 1e-10);
    FatnessResult fh = fatness_check(hilbert_space(K), gplus, beta, 0.1, 15, cfg.seed + 2 * i + 1);
    min_hilb = std::min(min_hilb, fh.min_volume_fraction);
  }
  r.lhs = min_mink;
  r.rhs = min_hilb;
  r.tolerance = 0.25 - 0.02;
  r.pass = min_mink >= 0.25 - 0.02 && min_hilb > 0.1;
  r.inputs = describe(cfg, n);
  r.note = "lhs = min minkowski volume fraction (threshold 2^-d - 0.02); rhs = min hilbert fraction";
  return r;
}

CheckReport check_boundary_transfer(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 10);
  int probes_per = 20;
  CounterRng rng(cfg.seed);
  int attained = 0, total = 0;
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    auto [G, K] = random_nested_pair(2, cfg.seed + 1600 + i);
    double alpha = 0.2 + 0.5 * rng.u01(i, 0);
    BoundaryTransferResult res = boundary_transfer_hilbert(K, G, alpha, probes_per, cfg.seed + i,
                                                           tolerances().boundary_transfer, 4096);
    attained += res.attained;
    total += res.probes;
    worst = std::max(worst, res.max_deviation);
  }
  r.lhs = static_cast<double>(attained);
  r.rhs = static_cast<double>(total);
  r.ratio = worst;
  r.tolerance = tolerances().boundary_transfer;
  r.pass = attained == total;
  r.inputs = describe(cfg, n);
  r.note = "ratio = worst |min-dist - alpha| over probes";
  return r;
}

CheckReport check_complementary_chord(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 100);
  CounterRng rng(cfg.seed);
  double worst = 0;
  int done = 0;
  for (int i = 0; i < n; ++i) {
    ConvexBody K =
        random_centered_body(2, 6 + static_cast<int>(rng.index(7, i, 0)), cfg.seed + 1700 + i);
    Vec x = random_point_in(K, rng, i, 0.7);
    Vec nrm = random_direction_2d(rng, i, 1);
    ChordResult res = complementary_chord_2d(K, x, Halfspace{nrm, nrm.dot(x)}, tolerances().chord);
    worst = std::max(worst, std::abs(res.residual));
    ++done;
  }
  r.lhs = worst;
  r.tolerance = tolerances().chord;
  r.pass = done == n && worst <= r.tolerance;
  r.inputs = describe(cfg, n);
  return r;
}

CheckReport check_rogers_shephard_union(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 50);
  bool ok = true;
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    ConvexBody C = random_centered_body(2, 9, cfg.seed + 1800 + i);
    double binom = 6.0;  // C(4,2)
    double vol = C.volume();
    double vu = symmetrize(C, SymmetrizeMode::Union).volume();
    double vd = symmetrize(C, SymmetrizeMode::Difference).volume();
    worst = std::max({worst, vu / vol, vd / vol});
    if (vu > binom * vol || vd > binom * vol) ok = false;
  }
  r.lhs = worst;
  r.rhs = 6.0;
  r.ratio = worst / 6.0;
  r.tolerance = 0;
  r.pass = ok;
  r.inputs = describe(cfg, n);
  r.note = "lhs = worst volume amplification of the symmetric union / difference body";
  return r;
}

CheckReport check_core_cover_volume(const CheckConfig& cfg) {
  CheckReport r;
  int n = instances_or(cfg, 50);
  double worst = 1;
  for (int i = 0; i < n; ++i) {
    ConvexBody D = random_centered_body(2, 9, cfg.seed + 1900 + i);
    double ratio = symmetrize(D, SymmetrizeMode::Core).volume() / D.volume();
    worst = std::min(worst, ratio);
  }
  r.lhs = worst;
  r.rhs = 0.25;  // 2^-d for centered bodies
  r.ratio = worst / 0.25;
  r.tolerance = tolerances().exact;
  r.pass = worst >= 0.25 - r.tolerance;
  r.inputs = describe(cfg, n);
  r.note = "lhs = min core/body volume ratio over centered instances";
  return r;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> reg = {
      {"polar_involution", "polar(polar(K)) = K for bodies with the origin interior",
       check_polar_involution},
      {"slice_project_dual", "the polar of a central slice equals the projection of the polar",
       check_slice_project_dual},
      {"funk_variational",
       "funk distance equals log sup over the polar of (1-<z,x>)/(1-<z,y>)",
       check_funk_variational},
      {"hilbert_additivity", "hilbert distance is additive along collinear triples",
       check_hilbert_additivity},
      {"sandwich", "scaled macbeath regions sandwich hilbert balls: M(x,sr) in B(x,r) in M(x,tr)",
       check_sandwich},
      {"finsler_sandwich", "A(y) inside the hilbert finsler ball inside 2 A(y)",
       check_finsler_sandwich},
      {"polar_sum_gauge", "gauge identity |u|_{(C+aD)*} = |u|_{C*} + a |u|_{D*}",
       check_polar_sum_gauge},
      {"mink_stability_sharp",
       "1D minkowski polarity-expansion distortion attains the sharp factor 3",
       check_mink_stability_sharp},
      {"hilb_stability_sharp",
       "1D hilbert polarity-expansion distortion attains the sharp factor 3",
       check_hilb_stability_sharp},
      {"funk_vol_duality", "funk holmes-thompson volume duality vol_K(G) = vol_{G*}(K*)",
       check_funk_vol_duality},
      {"funk_area_duality", "funk holmes-thompson area duality area_K(G) = area_{G*}(K*)",
       check_funk_area_duality},
      {"hilb_measure_polarity_beta",
       "hilbert holmes-thompson polarity within the binomial band beta_k = C(2k,k)/2^k",
       check_hilb_measure_polarity_beta},
      {"mink_measure_duality",
       "minkowski holmes-thompson duality vol_D(C) = vol_{C*}(D*), area_D(C) = area_{C*}(D*)",
       check_mink_measure_duality},
      {"cauchy_area", "cauchy projection formula for minkowski holmes-thompson area",
       check_cauchy_area},
      {"busemann_cube_halfspace",
       "busemann area fraction of a central halfspace cut of the cube equals 1/(2d)",
       check_busemann_cube_halfspace},
      {"jacobian_symmetry", "det J_{x,y} = det J_{y,x} for the projective polar map",
       check_jacobian_symmetry},
      {"ball_growth", "hilbert ball volume/area grow like r^d and r^{d-1} at bounded radii",
       check_ball_growth},
      {"expansion_fatness",
       "alpha-expansions are relatively alpha-fat: boundary balls capture a constant fraction",
       check_expansion_fatness},
      {"boundary_transfer",
       "every boundary point of G has a point of the expansion boundary at distance exactly alpha",
       check_boundary_transfer},
      {"complementary_chord",
       "every line through an interior point admits a complementary chord",
       check_complementary_chord},
      {"rogers_shephard_union",
       "symmetric union and difference body volumes are within C(2d,d) of the body",
       check_rogers_shephard_union},
      {"core_cover_volume", "the symmetric core of a centered body keeps a 2^-d volume fraction",
       check_core_cover_volume},
  };
  return reg;
}

std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const CheckInfo& c : check_registry()) out.push_back(c.id);
  return out;
}

const CheckInfo& find_check(const std::string& id) {
  for (const CheckInfo& c : check_registry())
    if (c.id == id) return c;
  fail(ErrorCode::UnknownCheck, id);
}

CheckReport run_check(const std::string& id, const CheckConfig& cfg) {
  const CheckInfo& info = find_check(id);
  Timer t;
  CheckReport r = info.run(cfg);
  r.check_id = id;
  r.seed = cfg.seed;
  r.dim = cfg.dim;
  r.alpha = cfg.alpha;
  r.runtime_ms = t.ms();
  return r;
}

}  // namespace hilbcover
