#include "hilbcover/cover.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "hilbcover/rng.hpp"

namespace hilbcover {

namespace {

double artanh(double t) { return 0.5 * std::log((1 + t) / (1 - t)); }

Vec rot90(const Vec& v) { return Vec(-v.y(), v.x(), 0); }

}  // namespace

MetricSpace hilbert_space(ConvexBody K) { return MetricSpace{GeometryTag::Hilbert, std::move(K)}; }

MetricSpace minkowski_space(ConvexBody D) {
  if (!D.centrally_symmetric()) fail(ErrorCode::NotCentrallySymmetric, "minkowski metric unit ball");
  if (!D.contains_origin_interior()) fail(ErrorCode::OriginNotInterior, "minkowski metric unit ball");
  return MetricSpace{GeometryTag::Minkowski, std::move(D)};
}

double metric_distance(const MetricSpace& m, const Vec& x, const Vec& y) {
  if (m.tag == GeometryTag::Minkowski) return m.body.gauge(y - x);
  return hilbert_distance_fast(m.body, x, y);
}

ConvexBody expand_minkowski(const ConvexBody& C, const ConvexBody& D, double alpha) {
  if (!D.centrally_symmetric()) fail(ErrorCode::NotCentrallySymmetric, "expansion unit ball");
  if (alpha < 0) fail(ErrorCode::RadiusOutOfRange, "expansion radius must be nonnegative");
  if (alpha == 0) return C;
  return minkowski_sum(C, D.scaled(alpha));
}

namespace {

// Fast boundary minimization for the expansion level solves: a coarse scan
// plus golden refinement of sampled local minima. The expansion's accuracy is
// limited by its fan resolution, so this is proportionate; the public
// distance_to_set keeps the per-edge search.
template <typename Dist>
double scan_boundary_min(const std::vector<Vec>& loop, Dist&& dist, int n_seed, double tol) {
  const int n = static_cast<int>(loop.size());
  std::vector<double> cum(n + 1, 0.0);
  for (int i = 0; i < n; ++i) cum[i + 1] = cum[i] + (loop[(i + 1) % n] - loop[i]).norm();
  auto at = [&](double s) {
    s = std::fmod(s, cum[n]);
    if (s < 0) s += cum[n];
    int i = static_cast<int>(std::upper_bound(cum.begin(), cum.end(), s) - cum.begin()) - 1;
    i = std::clamp(i, 0, n - 1);
    return Vec(loop[i] + (loop[(i + 1) % n] - loop[i]) * ((s - cum[i]) / (cum[i + 1] - cum[i])));
  };
  std::vector<double> vals(n_seed);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_seed; ++i) {
    vals[i] = dist(at(cum[n] * i / n_seed));
    best = std::min(best, vals[i]);
  }
  constexpr double kGold = 0.6180339887498949;
  double step = cum[n] / n_seed;
  for (int i = 0; i < n_seed; ++i) {
    double prev = vals[(i + n_seed - 1) % n_seed], next = vals[(i + 1) % n_seed];
    if (vals[i] > prev || vals[i] > next) continue;
    double a = step * (i - 1), b = step * (i + 1);
    double x1 = b - kGold * (b - a), x2 = a + kGold * (b - a);
    double f1 = dist(at(x1)), f2 = dist(at(x2));
    while (b - a > tol) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kGold * (b - a);
        f1 = dist(at(x1));
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kGold * (b - a);
        f2 = dist(at(x2));
      }
    }
    best = std::min({best, f1, f2});
  }
  return best;
}

}  // namespace

ConvexBody expand_hilbert(const ConvexBody& K, const ConvexBody& G, double alpha, int n_dir,
                          double tol) {
  if (alpha <= 0 || alpha > 1) fail(ErrorCode::RadiusOutOfRange, "hilbert expansion needs alpha in (0,1]");
  for (const Vec& v : G.vertices())
    if (!K.is_interior(v, kInteriorMargin))
      fail(ErrorCode::BodyNotInterior, "expansion target must lie in the interior of the domain");
  Vec anchor = G.centroid();
  DirectionFan fan = make_fan(K.dim(), n_dir);
  const bool planar = K.dim() == 2;
  auto fast_dist = [&](const Vec& z) {
    if (G.contains(z, 0.0)) return 0.0;
    if (!planar) return distance_to_set_hilbert(K, z, G, tol * 0.1);
    return scan_boundary_min(
        G.vertices(), [&](const Vec& g) { return hilbert_distance_fast(K, z, g); }, 64, 1e-10);
  };
  std::vector<Vec> pts;
  pts.reserve(fan.size());
  for (int i = 0; i < fan.size(); ++i) {
    const Vec& u = fan.dirs[i];
    double t_exit = K.ray_exit(anchor, u).second;
    // bracket: level function dist(anchor + t*u, G) - alpha crosses zero once
    double lo = G.ray_exit(anchor, u).second;  // on the boundary of G: dist 0
    double hi = t_exit * (1 - 1e-9);
    auto level = [&](double t) { return fast_dist(anchor + t * u); };
    if (level(hi) <= alpha) {
      // numerical guard; the expansion hugs the domain boundary
      pts.push_back(anchor + hi * u);
      continue;
    }
    for (int it = 0; it < 80 && hi - lo > tol; ++it) {
      double mid = 0.5 * (lo + hi);
      (level(mid) <= alpha ? lo : hi) = mid;
    }
    pts.push_back(anchor + 0.5 * (lo + hi) * u);
  }
  return ConvexBody::from_vertices(K.dim(), pts);
}

// Ground sets -----------------------------------------------------------------

namespace {

// Smallest radial extent of the local unit ball, minimized over boundary
// probes; converts metric spacing into a safe Euclidean grid step.
double min_local_scale(const MetricSpace& m, const ConvexBody& target) {
  DirectionFan fan = make_fan(m.body.dim(), 32);
  double s = std::numeric_limits<double>::infinity();
  if (m.tag == GeometryTag::Minkowski) {
    for (int i = 0; i < fan.size(); ++i) s = std::min(s, 1.0 / m.body.gauge(fan.dirs[i]));
    return s;
  }
  const auto& V = target.vertices();
  for (size_t i = 0; i < V.size(); ++i) {
    Vec probe = V[i];
    for (int k = 0; k < fan.size(); ++k) {
      int j = fan.opposite[k];
      if (j < k) continue;
      auto [sm, sp] = m.body.line_exits(probe, fan.dirs[k]);
      double tp = sp, tm = -sm;
      s = std::min(s, 2 * tp * tm / (tp + tm));
    }
  }
  return s;
}

}  // namespace

std::vector<Vec> interior_sample_grid(const MetricSpace& m, const ConvexBody& target, double alpha,
                                      std::size_t cap) {
  const int d = target.dim();
  if (d == 1) {
    double a = target.vertices()[0].x(), b = target.vertices()[1].x();
    double h = (b - a) / 2048;
    std::vector<Vec> out;
    for (double x = a; x <= b + 1e-15; x += h) out.push_back(Vec(std::min(x, b), 0, 0));
    return out;
  }
  double scale = min_local_scale(m, target);
  double h = alpha / 10.0 * scale;
  Vec lo = target.vertices()[0], hi = target.vertices()[0];
  for (const Vec& v : target.vertices()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  // respect the cap: coarsen the grid when the body is large relative to h
  double span = 1.0;
  for (int k = 0; k < d; ++k) span *= (hi[k] - lo[k]);
  double predicted = span / std::pow(h, d);
  if (predicted > static_cast<double>(cap)) h *= std::pow(predicted / cap, 1.0 / d);
  std::vector<Vec> out;
  if (d == 2) {
    for (double x = lo.x(); x <= hi.x(); x += h)
      for (double y = lo.y(); y <= hi.y(); y += h) {
        Vec p(x, y, 0);
        if (target.contains(p, 0.0)) out.push_back(p);
      }
  } else {
    for (double x = lo.x(); x <= hi.x(); x += h)
      for (double y = lo.y(); y <= hi.y(); y += h)
        for (double z = lo.z(); z <= hi.z(); z += h) {
          Vec p(x, y, z);
          if (target.contains(p, 0.0)) out.push_back(p);
        }
  }
  // keep the boundary representable too
  std::vector<Vec> chain = boundary_sample_chain(m, target, alpha, cap / 4);
  out.insert(out.end(), chain.begin(), chain.end());
  return out;
}

std::vector<Vec> boundary_sample_chain(const MetricSpace& m, const ConvexBody& target, double alpha,
                                       std::size_t cap) {
  const int d = target.dim();
  std::vector<Vec> out;
  if (d == 1) {
    out = {target.vertices()[0], target.vertices()[1]};
    return out;
  }
  if (d == 3) {
    // facet grids at roughly the requested metric resolution
    double scale = min_local_scale(m, target);
    double h = std::max(alpha / 20.0 * scale, 1e-6);
    const auto& V = target.vertices();
    for (const Facet& f : target.facets()) {
      Vec c = Vec::Zero();
      for (int id : f.loop) c += V[id];
      c /= static_cast<double>(f.loop.size());
      for (size_t i = 0; i < f.loop.size(); ++i) {
        Vec a = V[f.loop[i]], b = V[f.loop[(i + 1) % f.loop.size()]];
        int ga = std::min<int>(24, std::max<int>(1, static_cast<int>((a - c).norm() / h)));
        for (int p = 0; p <= ga; ++p)
          for (int q = 0; p + q <= ga; ++q) {
            out.push_back(c + (a - c) * (static_cast<double>(p) / ga) +
                          (b - c) * (static_cast<double>(q) / ga));
            if (out.size() >= cap) return out;
          }
      }
    }
    return out;
  }
  const double step = alpha / 20.0;
  const auto& V = target.vertices();
  const int n = static_cast<int>(V.size());
  for (int i = 0; i < n && out.size() < cap; ++i) {
    const Vec& A = V[i];
    const Vec& B = V[(i + 1) % n];
    out.push_back(A);
    if (m.tag == GeometryTag::Minkowski) {
      double metric_len = m.body.gauge(B - A);
      int pieces = std::max(1, static_cast<int>(std::ceil(metric_len / step)));
      for (int k = 1; k < pieces; ++k)
        out.push_back(A + (B - A) * (static_cast<double>(k) / pieces));
    } else {
      // closed-form marching along the chord through A,B in the Hilbert metric
      auto [qa, qb] = m.body.line_exits(A, B - A);  // qa < 0 <= 0, qb > 1
      double q1 = 0.0;
      double E = std::exp(2.0 * step);
      int guard = 0;
      while (out.size() < cap && ++guard < 100000) {
        double q2 = (E * (q1 - qa) * qb + qa * (qb - q1)) / ((qb - q1) + E * (q1 - qa));
        if (q2 >= 1.0) break;
        out.push_back(A + q2 * (B - A));
        q1 = q2;
      }
    }
  }
  return out;
}

// Net construction -------------------------------------------------------------

namespace {

struct PruneIndex {
  double cell = 1.0;
  std::map<std::pair<long, long>, std::vector<int>> buckets;  // 2D/1D (z folded for 3D)
  std::map<std::tuple<long, long, long>, std::vector<int>> buckets3;
  int dim = 2;

  explicit PruneIndex(double cell_size, int d) : cell(std::max(cell_size, 1e-12)), dim(d) {}

  void insert(const Vec& p, int id) {
    if (dim == 3)
      buckets3[{lround(p.x() / cell), lround(p.y() / cell), lround(p.z() / cell)}].push_back(id);
    else
      buckets[{lround(p.x() / cell), lround(p.y() / cell)}].push_back(id);
  }

  template <typename F>
  void for_near(const Vec& p, F&& f) const {
    if (dim == 3) {
      long cx = lround(p.x() / cell), cy = lround(p.y() / cell), cz = lround(p.z() / cell);
      for (long dx = -1; dx <= 1; ++dx)
        for (long dy = -1; dy <= 1; ++dy)
          for (long dz = -1; dz <= 1; ++dz) {
            auto it = buckets3.find({cx + dx, cy + dy, cz + dz});
            if (it == buckets3.end()) continue;
            for (int id : it->second) f(id);
          }
    } else {
      long cx = lround(p.x() / cell), cy = lround(p.y() / cell);
      for (long dx = -1; dx <= 1; ++dx)
        for (long dy = -1; dy <= 1; ++dy) {
          auto it = buckets.find({cx + dx, cy + dy});
          if (it == buckets.end()) continue;
          for (int id : it->second) f(id);
        }
    }
  }
};

// Euclidean radius that surely contains the metric ball of radius alpha
// centered at c.
double euclid_ball_bound(const MetricSpace& m, const Vec& c, double alpha) {
  if (m.tag == GeometryTag::Minkowski) {
    double r = 0;
    for (const Vec& v : m.body.vertices()) r = std::max(r, v.norm());
    return alpha * r;
  }
  double far = 0;
  for (const Vec& v : m.body.vertices()) far = std::max(far, (v - c).norm());
  return (1.0 - std::exp(-2.0 * alpha)) * far;
}

}  // namespace

Net maximal_separated_net(const MetricSpace& m, const std::vector<Vec>& ground, double alpha,
                          std::uint64_t seed) {
  if (ground.empty()) fail(ErrorCode::EmptyGroundSet, "net ground set");
  if (alpha <= 0) fail(ErrorCode::RadiusOutOfRange, "net radius");
  std::vector<int> order(ground.size());
  std::iota(order.begin(), order.end(), 0);
  CounterRng rng(seed);
  shuffle(order, rng);

  double bound = 0;
  for (const Vec& p : ground) bound = std::max(bound, euclid_ball_bound(m, p, alpha));
  PruneIndex index(bound, m.body.dim());

  Net net;
  net.alpha = alpha;
  net.metric_tag = m.tag;
  net.ground_size = static_cast<long>(ground.size());
  for (int id : order) {
    const Vec& s = ground[id];
    bool ok = true;
    index.for_near(s, [&](int cid) {
      if (!ok) return;
      if (metric_distance(m, net.centers[cid], s) < alpha) ok = false;
    });
    if (ok) {
      index.insert(s, static_cast<int>(net.centers.size()));
      net.centers.push_back(s);
    }
  }
  // separation certificate
  net.separated = true;
  net.separation_slack = 0;
  for (size_t i = 0; i < net.centers.size(); ++i)
    for (size_t j = i + 1; j < net.centers.size(); ++j) {
      if ((net.centers[i] - net.centers[j]).norm() > 2 * bound) continue;
      double dij = metric_distance(m, net.centers[i], net.centers[j]);
      double dji = metric_distance(m, net.centers[j], net.centers[i]);
      double d = std::min(dij, dji);
      if (d < alpha - 1e-9) {
        net.separated = false;
        net.separation_slack = std::max(net.separation_slack, alpha - d);
      }
    }
  return net;
}

long covering_count_1d(const MetricSpace& m, const ConvexBody& target, TargetKind kind, double alpha) {
  double g0 = target.vertices()[0].x(), g1 = target.vertices()[1].x();
  double len;  // metric length of the target interval
  if (m.tag == GeometryTag::Minkowski) {
    len = m.body.gauge(Vec(g1 - g0, 0, 0));
  } else {
    double k0 = m.body.vertices()[0].x(), k1 = m.body.vertices()[1].x();
    auto phi = [&](double x) { return artanh(2 * (x - k0) / (k1 - k0) - 1); };
    len = phi(g1) - phi(g0);
  }
  if (kind == TargetKind::Boundary) return len <= 2 * alpha ? 1 : 2;
  return std::max<long>(1, static_cast<long>(std::ceil(len / (2 * alpha) - 1e-12)));
}

namespace {

double ball_volume_measure(const MetricSpace& m, const Vec& c, double alpha) {
  if (m.tag == GeometryTag::Minkowski) {
    return ht_volume_minkowski(m.body, m.body).value * std::pow(alpha, m.body.dim());
  }
  FinslerBall fb;
  fb.center = c;
  fb.fan = make_fan(m.body.dim(), m.body.dim() == 3 ? 320 : 64);
  fb.tag = GeometryTag::Hilbert;
  fb.radii.resize(fb.fan.size());
  for (int i = 0; i < fb.fan.size(); ++i)
    fb.radii[i] = hilbert_ball_radius_exact(m.body, c, fb.fan.dirs[i], alpha);
  ConvexBody ball = fb.to_body();
  // inflate: the radial polytope is inscribed; the lower bound must not
  // underestimate ball measures
  double raw = m.body.dim() == 3
                   ? ht_volume_finsler(GeometryTag::Hilbert, m.body, ball, 4000, 9001).value
                   : ht_volume_finsler_quadrature(GeometryTag::Hilbert, m.body, ball, 1).value;
  return raw * (m.body.dim() == 3 ? 1.1 : 1.02);
}

double ball_area_measure(const MetricSpace& m, const Vec& c, double alpha) {
  if (m.tag == GeometryTag::Minkowski) {
    return ht_area_minkowski(m.body, m.body).value * std::pow(alpha, m.body.dim() - 1);
  }
  FinslerBall fb;
  fb.center = c;
  fb.fan = make_fan(m.body.dim(), 64);
  fb.tag = GeometryTag::Hilbert;
  fb.radii.resize(fb.fan.size());
  for (int i = 0; i < fb.fan.size(); ++i)
    fb.radii[i] = hilbert_ball_radius_exact(m.body, c, fb.fan.dirs[i], alpha);
  ConvexBody ball = fb.to_body();
  return ht_area_finsler(GeometryTag::Hilbert, m.body, ball, 8).value * 1.05;
}

}  // namespace

CoverEstimate covering_estimate(const MetricSpace& m, const ConvexBody& target, TargetKind kind,
                                double alpha, std::uint64_t seed, int n_net_seeds) {
  if (m.tag == GeometryTag::Hilbert) {
    if (alpha <= 0 || alpha > 1) fail(ErrorCode::RadiusOutOfRange, "hilbert covering radius");
    for (const Vec& v : target.vertices())
      if (!m.body.is_interior(v, kInteriorMargin))
        fail(ErrorCode::BodyNotInterior, "covering target must lie inside the domain");
  }
  CoverEstimate est;
  est.alpha = alpha;
  est.target = kind;
  if (target.dim() == 1) {
    long n = covering_count_1d(m, target, kind, alpha);
    est.upper = est.lower = n;
    est.exact = true;
    return est;
  }

  std::vector<Vec> ground = kind == TargetKind::Body
                                ? interior_sample_grid(m, target, alpha)
                                : boundary_sample_chain(m, target, alpha);

  double target_measure =
      kind == TargetKind::Body
          ? (m.tag == GeometryTag::Minkowski
                 ? ht_volume_minkowski(m.body, target).value
                 : (m.body.dim() == 3
                        ? ht_volume_finsler(GeometryTag::Hilbert, m.body, target, 20000, 9002).value
                        : ht_volume_finsler_quadrature(GeometryTag::Hilbert, m.body, target, 2).value))
          : (m.tag == GeometryTag::Minkowski
                 ? ht_area_minkowski(m.body, target).value
                 : ht_area_finsler(GeometryTag::Hilbert, m.body, target).value);

  CounterRng rng(seed);
  std::vector<long> uppers, lowers;
  for (int s = 0; s < n_net_seeds; ++s) {
    Net net = maximal_separated_net(m, ground, alpha, rng.bits(s, 777));
    uppers.push_back(static_cast<long>(net.centers.size()));
    double max_ball = 0;
    for (const Vec& c : net.centers) {
      max_ball = std::max(max_ball, kind == TargetKind::Body ? ball_volume_measure(m, c, alpha)
                                                             : ball_area_measure(m, c, alpha));
      if (m.tag == GeometryTag::Minkowski) break;  // center-independent
    }
    long lower = std::max<long>(1, static_cast<long>(std::ceil(target_measure / max_ball - 1e-9)));
    long upper = uppers.back();
    if (lower > upper) {
      est.clamped = true;
      lower = upper;
    }
    lowers.push_back(lower);
  }
  std::sort(uppers.begin(), uppers.end());
  std::sort(lowers.begin(), lowers.end());
  est.upper = uppers[uppers.size() / 2];
  est.lower = lowers[lowers.size() / 2];
  return est;
}

// Boundary transfer -----------------------------------------------------------

namespace {

Vec boundary_point_at(const ConvexBody& G, double param) {
  const auto& V = G.vertices();
  const int n = static_cast<int>(V.size());
  double total = 0;
  for (int i = 0; i < n; ++i) total += (V[(i + 1) % n] - V[i]).norm();
  param = param - std::floor(param);  // wrap the closed boundary parameter
  double s = param * total;
  for (int i = 0; i < n; ++i) {
    double len = (V[(i + 1) % n] - V[i]).norm();
    if (s <= len) return V[i] + (V[(i + 1) % n] - V[i]) * (s / len);
    s -= len;
  }
  return V[0];
}

}  // namespace

BoundaryTransferResult boundary_transfer_hilbert(const ConvexBody& K, const ConvexBody& G,
                                                 double alpha, int n_probes, std::uint64_t seed,
                                                 double tol, int n_dir) {
  (void)n_dir;
  CounterRng rng(seed);
  BoundaryTransferResult res;
  res.probes = n_probes;
  // Constructive transfer: take the supporting line of G at the probe, find
  // the chord of K through the probe complementary to it, and step distance
  // alpha along the chord away from G. The point constructed this way lies on
  // the boundary of the alpha-expansion; the certificate recomputes
  // dist(y, G) independently.
  const auto& V = G.vertices();
  const int n = static_cast<int>(V.size());
  for (int i = 0; i < n_probes; ++i) {
    double param = rng.u01(i, 0);
    Vec x = boundary_point_at(G, param);
    // supporting line at x: the edge the probe lies on
    Vec normal = Vec::Zero();
    for (int e = 0; e < n; ++e) {
      const Vec& A = V[e];
      const Vec& B = V[(e + 1) % n];
      Vec edge = B - A;
      if (std::abs((x - A).cross(edge).z()) < 1e-9 * edge.norm() &&
          (x - A).dot(edge) >= -1e-12 && (x - B).dot(edge) <= 1e-12) {
        normal = Vec(edge.y(), -edge.x(), 0).normalized();
        break;
      }
    }
    if (normal.norm() == 0) {
      --i;  // pathological probe (vertex); parameter nudge cannot happen twice
      continue;
    }
    ChordResult chord = complementary_chord_2d(K, x, Halfspace{normal, normal.dot(x)}, 1e-9);
    Vec u = chord.a;
    if (normal.dot(chord.b - x) > normal.dot(chord.a - x)) u = chord.b;
    Vec dir = (u - x).normalized();
    double t = hilbert_ball_radius_exact(K, x, dir, alpha);
    Vec y = x + t * dir;
    double back = hilbert_distance(K, x, y);
    double d = distance_to_set_hilbert(K, y, G, 1e-9);
    double dev = std::max(std::abs(d - alpha), std::abs(back - alpha));
    res.max_deviation = std::max(res.max_deviation, dev);
    if (dev <= tol) ++res.attained;
  }
  res.pass = res.attained == res.probes;
  return res;
}

BoundaryTransferResult boundary_transfer_minkowski(const ConvexBody& C, const ConvexBody& D,
                                                   double alpha, int n_probes, std::uint64_t seed,
                                                   double tol) {
  ConvexBody cplus = expand_minkowski(C, D, alpha);
  CounterRng rng(seed);
  BoundaryTransferResult res;
  res.probes = n_probes;
  for (int i = 0; i < n_probes; ++i) {
    double param = rng.u01(i, 0);
    Vec x = boundary_point_at(C, param);
    // direct construction: step alpha along a boundary point of D supported
    // by the outward normal at x
    const auto& V = C.vertices();
    const int n = static_cast<int>(V.size());
    Vec normal = Vec::Zero();
    for (int e = 0; e < n; ++e) {
      Vec a = V[e], b = V[(e + 1) % n];
      Vec mid = 0.5 * (a + b);
      Vec nrm = rot90(b - a) * -1.0;
      nrm.normalize();
      if (((x - a).cross(b - a)).norm() < 1e-9 * (b - a).norm() &&
          (x - mid).norm() <= 0.5 * (b - a).norm() + 1e-12)
        normal = nrm;
    }
    if (normal.norm() == 0) {
      // probe sits on a vertex: use the edge it belongs to
      normal = Vec(1, 0, 0);
    }
    // support point of D in direction normal
    Vec p = D.vertices()[0];
    for (const Vec& v : D.vertices())
      if (normal.dot(v) > normal.dot(p)) p = v;
    Vec y = x + alpha * p;
    double d1 = D.gauge(y - x);
    double on_boundary = std::abs(cplus.interior_margin(y));
    double dev = std::max(std::abs(d1 - alpha), on_boundary);
    res.max_deviation = std::max(res.max_deviation, dev);
    if (dev <= tol) ++res.attained;
  }
  res.pass = res.attained == res.probes;
  return res;
}

// Fatness and relative isoperimetry --------------------------------------------

Surface cut_surface_in_ball(const ConvexBody& E, const ConvexBody& B) {
  ConvexBody I = intersect(B, E);  // fold the few facets of E over the detailed ball
  Surface out;
  const auto& V = I.vertices();
  auto matches = [](const Facet& f, const ConvexBody& body) {
    for (const Facet& g : body.facets())
      if ((f.normal - g.normal).norm() < 1e-7 && std::abs(f.offset - g.offset) < 1e-7) return true;
    return false;
  };
  for (const Facet& f : I.facets()) {
    if (matches(f, B)) continue;  // on the ball boundary (open-ball exclusion)
    SurfacePatch p;
    p.normal = f.normal;
    for (int id : f.loop) p.poly.push_back(V[id]);
    out.push_back(std::move(p));
  }
  return out;
}

FatnessResult fatness_check(const MetricSpace& m, const ConvexBody& E, double alpha,
                            double gamma_threshold, int n_probes, std::uint64_t seed) {
  CounterRng rng(seed);
  FatnessResult res;
  res.probes = n_probes;
  for (int i = 0; i < n_probes; ++i) {
    Vec z = boundary_point_at(E, rng.u01(i, 0));
    double r = alpha * (0.1 + 0.9 * rng.u01(i, 1));
    ConvexBody ball = [&] {
      if (m.tag == GeometryTag::Minkowski) return m.body.scaled(r).translated(z);
      FinslerBall fb;
      fb.center = z;
      fb.fan = make_fan(m.body.dim(), 128);
      fb.tag = GeometryTag::Hilbert;
      fb.radii.resize(fb.fan.size());
      for (int k = 0; k < fb.fan.size(); ++k)
        fb.radii[k] = hilbert_ball_radius_exact(m.body, z, fb.fan.dirs[k], r);
      return fb.to_body();
    }();
    ConvexBody cap = intersect(ball, E);
    double mu, beta;
    if (m.tag == GeometryTag::Minkowski) {
      mu = cap.volume() / ball.volume();
      double cut = ht_area_minkowski_surface(m.body, cut_surface_in_ball(E, ball)).value;
      beta = cut / ht_area_minkowski(m.body, ball).value;
    } else {
      double vb = ht_volume_finsler_quadrature(GeometryTag::Hilbert, m.body, ball, 2).value;
      double vc = ht_volume_finsler_quadrature(GeometryTag::Hilbert, m.body, cap, 2).value;
      mu = vc / vb;
      double cut =
          ht_area_finsler_surface(GeometryTag::Hilbert, m.body, cut_surface_in_ball(E, ball)).value;
      beta = cut / ht_area_finsler(GeometryTag::Hilbert, m.body, ball).value;
    }
    res.min_volume_fraction = std::min(res.min_volume_fraction, mu);
    res.min_area_fraction = std::min(res.min_area_fraction, beta);
  }
  res.pass = res.min_volume_fraction >= gamma_threshold;
  return res;
}

IsoperimetrySample relative_isoperimetry_minkowski(const ConvexBody& D, const Vec& z, double r,
                                                   const ConvexBody& E, AreaNormalization norm) {
  ConvexBody ball = D.scaled(r).translated(z);
  ConvexBody cap = [&] {
    try {
      return intersect(ball, E);
    } catch (const Error&) {
      fail(ErrorCode::DegenerateCut, "the body misses the ball");
    }
  }();
  double mu = cap.volume() / ball.volume();
  if (mu <= 1e-12 || mu >= 1 - 1e-12) fail(ErrorCode::DegenerateCut, "volume fraction is 0 or 1");
  Surface cut = cut_surface_in_ball(E, ball);
  IsoperimetrySample s;
  s.mu = mu;
  if (norm == AreaNormalization::HolmesThompson) {
    s.beta = ht_area_minkowski_surface(D, cut).value / ht_area_minkowski(D, ball).value;
  } else {
    s.beta = busemann_area_surface(D, cut).value / busemann_area(D, ball).value;
  }
  return s;
}

IsoperimetrySample relative_isoperimetry_hilbert(const ConvexBody& K, const Vec& x, double r,
                                                 const ConvexBody& E, std::uint64_t seed,
                                                 long n_samples) {
  if (r <= 0 || r > 1) fail(ErrorCode::RadiusOutOfRange, "hilbert isoperimetry radius");
  double anchor_margin = E.interior_margin(x);
  if (std::abs(anchor_margin) > 1e-6)
    fail(ErrorCode::ValidationError, "the ball center must lie on the boundary of the cutting body");
  FinslerBall fb;
  fb.center = x;
  fb.fan = make_fan(K.dim(), 256);
  fb.tag = GeometryTag::Hilbert;
  fb.radii.resize(fb.fan.size());
  for (int k = 0; k < fb.fan.size(); ++k)
    fb.radii[k] = hilbert_ball_radius_exact(K, x, fb.fan.dirs[k], r);
  ConvexBody ball = fb.to_body();
  ConvexBody cap = [&] {
    try {
      return intersect(ball, E);
    } catch (const Error&) {
      fail(ErrorCode::DegenerateCut, "the body misses the ball");
    }
  }();
  double vb = K.dim() <= 2 ? ht_volume_finsler_quadrature(GeometryTag::Hilbert, K, ball, 2).value
                           : ht_volume_finsler(GeometryTag::Hilbert, K, ball, n_samples, seed).value;
  double vc = K.dim() <= 2 ? ht_volume_finsler_quadrature(GeometryTag::Hilbert, K, cap, 2).value
                           : ht_volume_finsler(GeometryTag::Hilbert, K, cap, n_samples, seed + 1).value;
  IsoperimetrySample s;
  s.mu = vc / vb;
  if (s.mu <= 1e-12 || s.mu >= 1 - 1e-12) fail(ErrorCode::DegenerateCut, "volume fraction is 0 or 1");
  double cut = ht_area_finsler_surface(GeometryTag::Hilbert, K, cut_surface_in_ball(E, ball)).value;
  s.beta = cut / ht_area_finsler(GeometryTag::Hilbert, K, ball).value;
  return s;
}

// Complementary chords ----------------------------------------------------------

namespace {

// homogeneous line coefficients (n.x, n.y, -offset)
Eigen::Vector3d line_covector(const Vec& n, double offset) {
  return Eigen::Vector3d(n.x(), n.y(), -offset);
}

struct ExitInfo {
  Vec point;
  int facet = -1;
};

ExitInfo ray_exit_with_facet(const ConvexBody& K, const Vec& origin, const Vec& dir) {
  double best = std::numeric_limits<double>::infinity();
  int facet = -1;
  const auto& fs = K.facets();
  for (size_t i = 0; i < fs.size(); ++i) {
    double q = fs[i].normal.dot(dir);
    if (q <= 0) continue;
    double t = (fs[i].offset - fs[i].normal.dot(origin)) / q;
    if (t < best) {
      best = t;
      facet = static_cast<int>(i);
    }
  }
  return {origin + best * dir, facet};
}

double incidence_residual(const Eigen::Vector3d& la, const Eigen::Vector3d& lb,
                          const Eigen::Vector3d& h) {
  Eigen::Vector3d q = la.cross(lb);
  double n = q.norm();
  if (n == 0) return 0;
  return h.dot(q) / n;
}

}  // namespace

ChordResult complementary_chord_2d(const ConvexBody& K, const Vec& x, const Halfspace& h,
                                   double tol) {
  if (K.dim() != 2) fail(ErrorCode::NotTwoDimensional, "complementary chords are a planar construction");
  if (!K.is_interior(x, kInteriorMargin))
    fail(ErrorCode::PointNotInterior, "chord base point must be interior");
  if (std::abs(h.normal.dot(x) - h.offset) > 1e-9)
    fail(ErrorCode::ValidationError, "the reference line must pass through the base point");

  Eigen::Vector3d hl = line_covector(h.normal, h.offset);

  auto lines_at = [&](double theta) {
    Vec u(std::cos(theta), std::sin(theta), 0);
    ExitInfo ea = ray_exit_with_facet(K, x, u);
    ExitInfo eb = ray_exit_with_facet(K, x, -u);
    const Facet& fa = K.facets()[ea.facet];
    const Facet& fb = K.facets()[eb.facet];
    return std::tuple<ExitInfo, ExitInfo, Eigen::Vector3d, Eigen::Vector3d>(
        ea, eb, line_covector(fa.normal, fa.offset), line_covector(fb.normal, fb.offset));
  };

  auto residual_at = [&](double theta) {
    auto [ea, eb, la, lb] = lines_at(theta);
    return incidence_residual(la, lb, hl);
  };

  ChordResult out;
  const int n_scan = 720;
  std::vector<double> thetas(n_scan + 1), vals(n_scan + 1);
  for (int i = 0; i <= n_scan; ++i) {
    thetas[i] = M_PI * i / n_scan;
    vals[i] = i == n_scan ? -vals[0] : residual_at(thetas[i]);  // odd under a half turn
    out.trace.push_back({thetas[i], vals[i]});
  }

  auto finish = [&](double theta, const Eigen::Vector3d& la, const Eigen::Vector3d& lb,
                    const ExitInfo& ea, const ExitInfo& eb, double res) {
    out.a = ea.point;
    out.b = eb.point;
    out.line_a = Halfspace{Vec(la.x(), la.y(), 0), -la.z()};
    out.line_b = Halfspace{Vec(lb.x(), lb.y(), 0), -lb.z()};
    out.residual = res;
    out.theta = theta;
    return out;
  };

  for (int i = 0; i < n_scan; ++i) {
    if (vals[i] == 0.0) {
      auto [ea, eb, la, lb] = lines_at(thetas[i]);
      return finish(thetas[i], la, lb, ea, eb, 0.0);
    }
    if ((vals[i] > 0) == (vals[i + 1] > 0)) continue;
    // bisect the bracket
    double lo = thetas[i], hi = thetas[i + 1];
    double flo = vals[i];
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = residual_at(mid);
      if (std::abs(fm) <= tol * 1e-3) {
        auto [ea, eb, la, lb] = lines_at(mid);
        return finish(mid, la, lb, ea, eb, fm);
      }
      if ((fm > 0) == (flo > 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    // the bracket collapsed onto a jump: a chord endpoint crosses a vertex;
    // sweep the supporting line through the vertex normal cone
    auto [ea_lo, eb_lo, la_lo, lb_lo] = lines_at(lo);
    auto [ea_hi, eb_hi, la_hi, lb_hi] = lines_at(hi);
    double mid = 0.5 * (lo + hi);
    for (int side = 0; side < 2; ++side) {
      // side 0: endpoint a jumps (facet of a differs across the bracket)
      const Eigen::Vector3d& c0 = side == 0 ? la_lo : lb_lo;
      const Eigen::Vector3d& c1 = side == 0 ? la_hi : lb_hi;
      const Eigen::Vector3d& fixed = side == 0 ? lb_lo : la_lo;
      auto [ea_m, eb_m, la_m, lb_m] = lines_at(mid);
      Vec vertex = side == 0 ? ea_m.point : eb_m.point;
      // supporting lines through the vertex: normals interpolated in the cone
      Vec n0(c0.x(), c0.y(), 0), n1(c1.x(), c1.y(), 0);
      double a0 = std::atan2(n0.y(), n0.x());
      double a1 = std::atan2(n1.y(), n1.x());
      while (a1 < a0 - 1e-12) a1 += 2 * M_PI;
      auto cone_res = [&](double psi) {
        Vec n(std::cos(psi), std::sin(psi), 0);
        Eigen::Vector3d moving = line_covector(n, n.dot(vertex));
        return side == 0 ? incidence_residual(moving, fixed, hl)
                         : incidence_residual(fixed, moving, hl);
      };
      double r0 = cone_res(a0), r1 = cone_res(a1);
      if (r0 == 0 || r1 == 0 || (r0 > 0) != (r1 > 0)) {
        double plo = a0, phi = a1, rlo = r0;
        for (int it = 0; it < 200 && phi - plo > 1e-15; ++it) {
          double pm = 0.5 * (plo + phi);
          double rm = cone_res(pm);
          if ((rm > 0) == (rlo > 0)) {
            plo = pm;
            rlo = rm;
          } else {
            phi = pm;
          }
        }
        double psi = 0.5 * (plo + phi);
        Vec n(std::cos(psi), std::sin(psi), 0);
        Eigen::Vector3d moving = line_covector(n, n.dot(vertex));
        double res = side == 0 ? incidence_residual(moving, fixed, hl)
                               : incidence_residual(fixed, moving, hl);
        if (std::abs(res) <= tol) {
          if (side == 0)
            return finish(mid, moving, fixed, {vertex, -1}, eb_m, res);
          return finish(mid, fixed, moving, ea_m, {vertex, -1}, res);
        }
      }
    }
  }
  fail(ErrorCode::SearchFailed, "no complementary chord found at scan resolution");
}

}  // namespace hilbcover
