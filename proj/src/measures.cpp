#include "hilbcover/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hilbcover/rng.hpp"

namespace hilbcover {

namespace {

// Gauss-Legendre nodes/weights on [-1,1], order 8.
constexpr double kGL8X[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                             -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                             0.7966664774136267,  0.9602898564975363};
constexpr double kGL8W[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                             0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                             0.2223810344533745, 0.1012285362903763};

// Degree-5 seven-point triangle rule (barycentric points, weights sum to 1).
struct TriNode {
  double l1, l2, l3, w;
};
constexpr double kTA = 0.4701420641051151;
constexpr double kTB = 0.1012865073234563;
constexpr TriNode kTri7[7] = {
    {1.0 / 3, 1.0 / 3, 1.0 / 3, 0.225},
    {kTA, kTA, 1 - 2 * kTA, 0.1323941527885062},
    {kTA, 1 - 2 * kTA, kTA, 0.1323941527885062},
    {1 - 2 * kTA, kTA, kTA, 0.1323941527885062},
    {kTB, kTB, 1 - 2 * kTB, 0.1259391805448271},
    {kTB, 1 - 2 * kTB, kTB, 0.1259391805448271},
    {1 - 2 * kTB, kTB, kTB, 0.1259391805448271},
};

double polygon_area(const std::vector<Vec>& p) {
  double a2 = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    const Vec& u = p[i];
    const Vec& v = p[(i + 1) % p.size()];
    a2 += u.x() * v.y() - v.x() * u.y();
  }
  return 0.5 * a2;
}

// Vertices of (K-x)°: duals of the facets of K shifted to x. In 2D the facet
// order is the edge order, so the result is CCW.
void polar_local_vertices(const ConvexBody& K, const Vec& x, std::vector<Vec>& out) {
  out.clear();
  out.reserve(K.facets().size());
  for (const Facet& f : K.facets()) {
    double off = f.offset - f.normal.dot(x);
    out.push_back(f.normal / off);
  }
}

int lowest_vertex(const std::vector<Vec>& p) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(p.size()); ++i) {
    if (p[i].y() < p[best].y() || (p[i].y() == p[best].y() && p[i].x() < p[best].x())) best = i;
  }
  return best;
}

// Minkowski sum of convex CCW polygons by edge merge; O(m+n).
std::vector<Vec> convex_polygon_sum(const std::vector<Vec>& A, const std::vector<Vec>& B) {
  const int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());
  int sa = lowest_vertex(A), sb = lowest_vertex(B);
  auto angle = [](const Vec& e) {
    double a = std::atan2(e.y(), e.x());
    if (a < -1e-15) a += 2 * M_PI;
    return a;
  };
  std::vector<Vec> out;
  out.reserve(na + nb);
  Vec cur = A[sa] + B[sb];
  int i = 0, j = 0;
  while (i < na || j < nb) {
    out.push_back(cur);
    if (j >= nb) {
      cur += A[(sa + i + 1) % na] - A[(sa + i) % na];
      ++i;
    } else if (i >= na) {
      cur += B[(sb + j + 1) % nb] - B[(sb + j) % nb];
      ++j;
    } else {
      Vec ea = A[(sa + i + 1) % na] - A[(sa + i) % na];
      Vec eb = B[(sb + j + 1) % nb] - B[(sb + j) % nb];
      if (angle(ea) <= angle(eb)) {
        cur += ea;
        ++i;
      } else {
        cur += eb;
        ++j;
      }
    }
  }
  return out;
}

// Area of (P + (-P))/2 for a convex CCW polygon P. Negation is a half-turn in
// the plane, so -P keeps the CCW order.
double half_difference_area(const std::vector<Vec>& P) {
  std::vector<Vec> half(P), neg(P.size());
  for (Vec& v : half) v *= 0.5;
  for (size_t i = 0; i < P.size(); ++i) neg[i] = -half[i];
  return polygon_area(convex_polygon_sum(half, neg));
}

void require_symmetric(const ConvexBody& D, const char* who) {
  if (!D.centrally_symmetric()) fail(ErrorCode::NotCentrallySymmetric, who);
  if (!D.contains_origin_interior()) fail(ErrorCode::OriginNotInterior, who);
}

void require_region_interior(const ConvexBody& K, const ConvexBody& U) {
  if (K.dim() != U.dim()) fail(ErrorCode::DimensionMismatch, "finsler measure region");
  for (const Vec& v : U.vertices())
    if (!K.is_interior(v, kInteriorMargin))
      fail(ErrorCode::RegionNotInterior, "region must lie in the interior of the domain");
}

void plane_basis(const Vec& n, Vec& e1, Vec& e2) {
  e1 = std::abs(n.x()) < 0.9 ? Vec(1, 0, 0) : Vec(0, 1, 0);
  e1 = (e1 - n.dot(e1) * n).normalized();
  e2 = n.cross(e1);
}

// lambda_{d-1} of the orthogonal projection of a vertex set onto the plane
// with unit normal n (3D).
double projected_hull_area(const std::vector<Vec>& pts, const Vec& n) {
  Vec e1, e2;
  plane_basis(n, e1, e2);
  std::vector<Vec> plane;
  plane.reserve(pts.size());
  for (const Vec& p : pts) plane.push_back(Vec(e1.dot(p), e2.dot(p), 0));
  ConvexBody hull = ConvexBody::from_vertices(2, plane);
  return hull.volume();
}

// Local Holmes-Thompson area density at x for a patch with unit normal n:
// lambda_{d-1}(proj(P, n^perp)) / omega_{d-1} where P is the polar of the
// local unit ball (projection-section duality turns the slice polar into a
// projection).
double finsler_area_density(GeometryTag tag, const ConvexBody& K, const Vec& x, const Vec& n,
                            std::vector<Vec>& scratch) {
  const int d = K.dim();
  if (d == 1) return 1.0;
  if (d == 2) {
    Vec t(-n.y(), n.x(), 0);
    double sp = 0, sm = 0;
    for (const Facet& f : K.facets()) {
      double off = f.offset - f.normal.dot(x);
      double q = f.normal.dot(t) / off;
      sp = std::max(sp, q);
      sm = std::max(sm, -q);
    }
    // Funk and Hilbert tangent slices have polars of equal length
    (void)tag;
    return 0.5 * (sp + sm);
  }
  polar_local_vertices(K, x, scratch);
  if (tag == GeometryTag::Hilbert) {
    // projection commutes with Minkowski sums: proj((P-P)/2) = (projP - projP)/2
    Vec e1, e2;
    plane_basis(n, e1, e2);
    std::vector<Vec> plane;
    plane.reserve(scratch.size());
    for (const Vec& p : scratch) plane.push_back(Vec(e1.dot(p), e2.dot(p), 0));
    ConvexBody hull = ConvexBody::from_vertices(2, plane);
    return half_difference_area(hull.vertices()) / M_PI;
  }
  return projected_hull_area(scratch, n) / M_PI;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  const double n = static_cast<double>(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double num = 0, den = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return num / den;
}

}  // namespace

double unit_ball_volume(int d) {
  switch (d) {
    case 0: return 1.0;
    case 1: return 2.0;
    case 2: return M_PI;
    case 3: return 4.0 * M_PI / 3.0;
  }
  fail(ErrorCode::ValidationError, "unit ball volume defined for d <= 3");
}

Surface boundary_surface(const ConvexBody& C) {
  Surface s;
  const auto& V = C.vertices();
  for (const Facet& f : C.facets()) {
    SurfacePatch p;
    p.normal = f.normal;
    for (int id : f.loop) p.poly.push_back(V[id]);
    s.push_back(std::move(p));
  }
  return s;
}

double patch_measure(int dim, const SurfacePatch& p) {
  if (dim == 1) return 1.0;  // counting measure
  if (dim == 2) return (p.poly[1] - p.poly[0]).norm();
  double area = 0.0;
  const Vec& p0 = p.poly[0];
  for (size_t i = 1; i + 1 < p.poly.size(); ++i)
    area += 0.5 * (p.poly[i] - p0).cross(p.poly[i + 1] - p0).dot(p.normal);
  return area;
}

double surface_measure(int dim, const Surface& s) {
  double total = 0.0;
  for (const SurfacePatch& p : s) total += patch_measure(dim, p);
  return total;
}

double funk_volume_density(const ConvexBody& K, const Vec& x) {
  const int d = K.dim();
  std::vector<Vec> P;
  polar_local_vertices(K, x, P);
  if (d == 1) return (std::abs(P[0].x()) + std::abs(P[1].x())) / 2.0;
  if (d == 2) return polygon_area(P) / M_PI;
  return ConvexBody::from_vertices(3, P).volume() / unit_ball_volume(3);
}

double hilbert_volume_density(const ConvexBody& K, const Vec& x) {
  const int d = K.dim();
  std::vector<Vec> P;
  polar_local_vertices(K, x, P);
  if (d == 1) return (std::abs(P[0].x()) + std::abs(P[1].x())) / 2.0;
  if (d == 2) return half_difference_area(P) / M_PI;
  std::vector<Vec> diff;
  diff.reserve(P.size() * P.size());
  for (const Vec& a : P)
    for (const Vec& b : P) diff.push_back(0.5 * (a - b));
  return ConvexBody::from_vertices(3, diff).volume() / unit_ball_volume(3);
}

MeasureEstimate ht_volume_minkowski(const ConvexBody& D, const ConvexBody& U) {
  require_symmetric(D, "minkowski volume unit ball");
  if (D.dim() != U.dim()) fail(ErrorCode::DimensionMismatch, "ht_volume_minkowski");
  ConvexBody pd = polar(D);
  MeasureEstimate m;
  m.value = pd.volume() / unit_ball_volume(D.dim()) * U.volume();
  m.method = MeasureMethod::Exact;
  m.geometry = GeometryTag::Minkowski;
  return m;
}

MeasureEstimate ht_area_minkowski_surface(const ConvexBody& D, const Surface& S) {
  require_symmetric(D, "minkowski area unit ball");
  const int d = D.dim();
  ConvexBody pd = polar(D);
  MeasureEstimate m;
  m.method = MeasureMethod::Exact;
  m.geometry = GeometryTag::Minkowski;
  double total = 0.0;
  for (const SurfacePatch& p : S) {
    double density;
    if (d == 1) {
      density = 1.0;
    } else if (d == 2) {
      Vec t(-p.normal.y(), p.normal.x(), 0);
      density = 0.5 * (pd.support(t) + pd.support(-t));
    } else {
      density = projected_hull_area(pd.vertices(), p.normal) / M_PI;
    }
    total += density * patch_measure(d, p);
  }
  m.value = total;
  return m;
}

MeasureEstimate ht_area_minkowski(const ConvexBody& D, const ConvexBody& C) {
  if (D.dim() != C.dim()) fail(ErrorCode::DimensionMismatch, "ht_area_minkowski");
  return ht_area_minkowski_surface(D, boundary_surface(C));
}

MeasureEstimate ht_area_minkowski_cauchy(const ConvexBody& D, const ConvexBody& C) {
  require_symmetric(D, "minkowski area unit ball");
  if (D.dim() != C.dim()) fail(ErrorCode::DimensionMismatch, "ht_area_minkowski_cauchy");
  const int d = D.dim();
  ConvexBody pd = polar(D);
  MeasureEstimate m;
  m.method = MeasureMethod::Exact;
  m.geometry = GeometryTag::Minkowski;
  if (d == 1) {
    m.value = 2.0;
    return m;
  }
  double total = 0.0;
  for (const Facet& f : pd.facets()) {
    SurfacePatch patch;
    patch.normal = f.normal;
    for (int id : f.loop) patch.poly.push_back(pd.vertices()[id]);
    double piece = patch_measure(d, patch);
    double proj;
    if (d == 2) {
      Vec t(-f.normal.y(), f.normal.x(), 0);
      proj = C.support(t) + C.support(-t);  // width of C across the normal
    } else {
      proj = projected_hull_area(C.vertices(), f.normal);
    }
    total += piece * proj;
  }
  m.value = total / unit_ball_volume(d - 1);
  return m;
}

MeasureEstimate ht_volume_finsler(GeometryTag tag, const ConvexBody& K, const ConvexBody& U,
                                  long n_samples, std::uint64_t seed) {
  if (tag == GeometryTag::Minkowski)
    fail(ErrorCode::ValidationError, "use ht_volume_minkowski for translation-invariant geometries");
  require_region_interior(K, U);
  MeasureEstimate m;
  m.method = MeasureMethod::MonteCarlo;
  m.geometry = tag;
  m.seed = seed;
  if (U.volume() <= kEpsGeom) return m;  // zero-measure region

  // Precondition to near-isotropic when box rejection would be wasteful; Funk
  // and Hilbert measures are invariant under invertible linear maps applied to
  // both bodies.
  ConvexBody Kw = K, Uw = U;
  const int d = K.dim();
  Vec lo = Vec::Zero(), hi = Vec::Zero();
  auto boxof = [&](const ConvexBody& b, Vec& l, Vec& h) {
    l = h = b.vertices()[0];
    for (const Vec& v : b.vertices()) {
      l = l.cwiseMin(v);
      h = h.cwiseMax(v);
    }
  };
  auto boxvol = [&](const Vec& l, const Vec& h) {
    double b = 1.0;
    for (int k = 0; k < d; ++k) b *= (h[k] - l[k]);
    return b;
  };
  boxof(Uw, lo, hi);
  if (U.volume() / boxvol(lo, hi) < 0.1) {
    Mat cov = U.covariance();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        Eigen::MatrixXd(cov.topLeftCorner(d, d)));
    Eigen::MatrixXd L = es.operatorInverseSqrt();  // L cov L^T = I
    Mat L3 = Mat::Identity();
    L3.topLeftCorner(d, d) = L;
    Kw = K.linear_image(L3);
    Uw = U.linear_image(L3);
    boxof(Uw, lo, hi);
  }

  CounterRng rng(seed);
  double sum = 0.0, sumsq = 0.0;
  long accepted = 0;
  std::uint64_t counter = 0;
  const std::uint64_t max_draws = 1000ull * static_cast<std::uint64_t>(n_samples) + 1000000ull;
  while (accepted < n_samples && counter < max_draws) {
    Vec p = Vec::Zero();
    for (int k = 0; k < d; ++k) p[k] = rng.uniform(lo[k], hi[k], counter, k);
    ++counter;
    if (!Uw.contains(p, 0.0)) continue;
    double w = tag == GeometryTag::Funk ? funk_volume_density(Kw, p) : hilbert_volume_density(Kw, p);
    sum += w;
    sumsq += w * w;
    ++accepted;
  }
  if (accepted < n_samples) fail(ErrorCode::ValidationError, "rejection sampling failed to converge");
  double mean = sum / accepted;
  double var = std::max(0.0, sumsq / accepted - mean * mean);
  m.value = mean * Uw.volume();
  m.std_error = std::sqrt(var / accepted) * Uw.volume();
  m.n_samples = accepted;
  return m;
}

namespace {

double finsler_density(GeometryTag tag, const ConvexBody& K, const Vec& p) {
  return tag == GeometryTag::Funk ? funk_volume_density(K, p) : hilbert_volume_density(K, p);
}

double quad_triangle(GeometryTag tag, const ConvexBody& K, const Vec& a, const Vec& b, const Vec& c,
                     int depth) {
  if (depth <= 0) {
    double area = 0.5 * std::abs((b - a).x() * (c - a).y() - (c - a).x() * (b - a).y());
    double s = 0.0;
    for (const TriNode& n : kTri7) s += n.w * finsler_density(tag, K, n.l1 * a + n.l2 * b + n.l3 * c);
    return area * s;
  }
  Vec ab = 0.5 * (a + b), bc = 0.5 * (b + c), ca = 0.5 * (c + a);
  return quad_triangle(tag, K, a, ab, ca, depth - 1) + quad_triangle(tag, K, ab, b, bc, depth - 1) +
         quad_triangle(tag, K, ca, bc, c, depth - 1) + quad_triangle(tag, K, ab, bc, ca, depth - 1);
}

double quad_volume_2d(GeometryTag tag, const ConvexBody& K, const ConvexBody& U, int depth) {
  Vec c = U.centroid();
  const auto& V = U.vertices();
  double total = 0.0;
  for (size_t i = 0; i < V.size(); ++i)
    total += quad_triangle(tag, K, c, V[i], V[(i + 1) % V.size()], depth);
  return total;
}

}  // namespace

MeasureEstimate ht_volume_finsler_quadrature(GeometryTag tag, const ConvexBody& K,
                                             const ConvexBody& U, int depth) {
  if (tag == GeometryTag::Minkowski)
    fail(ErrorCode::ValidationError, "use ht_volume_minkowski for translation-invariant geometries");
  require_region_interior(K, U);
  MeasureEstimate m;
  m.method = MeasureMethod::Quadrature;
  m.geometry = tag;
  const int d = K.dim();
  if (d == 3) fail(ErrorCode::ValidationError, "quadrature volume implemented for dim <= 2");
  if (d == 1) {
    double a = U.vertices()[0].x(), b = U.vertices()[1].x();
    int pieces = 1 << depth;
    double total = 0.0;
    for (int i = 0; i < pieces; ++i) {
      double x0 = a + (b - a) * i / pieces, x1 = a + (b - a) * (i + 1) / pieces;
      for (int g = 0; g < 8; ++g) {
        double x = 0.5 * (x0 + x1) + 0.5 * (x1 - x0) * kGL8X[g];
        total += 0.5 * (x1 - x0) * kGL8W[g] * finsler_density(tag, K, Vec(x, 0, 0));
      }
    }
    m.value = total;
    return m;
  }
  double coarse = quad_volume_2d(tag, K, U, depth - 1);
  double fine = quad_volume_2d(tag, K, U, depth);
  m.value = fine;
  m.std_error = std::abs(fine - coarse);
  return m;
}

namespace {

// Edge parameters where the supporting facet of the exit ray (along ±t)
// changes: the exit passes a vertex of K.
std::vector<double> edge_breakpoints(const ConvexBody& K, const Vec& A, const Vec& B, const Vec& t) {
  std::vector<double> cuts = {0.0, 1.0};
  Vec e = B - A;
  double den = e.x() * t.y() - e.y() * t.x();
  if (std::abs(den) > 1e-14) {
    for (const Vec& w : K.vertices()) {
      Vec r = w - A;
      double s = (r.x() * t.y() - r.y() * t.x()) / den;
      if (s > 1e-12 && s < 1 - 1e-12) cuts.push_back(s);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

}  // namespace

MeasureEstimate ht_area_finsler_surface(GeometryTag tag, const ConvexBody& K, const Surface& S,
                                        int quad_order) {
  if (tag == GeometryTag::Minkowski)
    fail(ErrorCode::ValidationError, "use ht_area_minkowski for translation-invariant geometries");
  (void)quad_order;  // fixed GL8 nodes
  const int d = K.dim();
  MeasureEstimate m;
  m.method = d == 1 ? MeasureMethod::Exact : MeasureMethod::Quadrature;
  m.geometry = tag;
  std::vector<Vec> scratch;
  double total = 0.0;
  for (const SurfacePatch& p : S) {
    for (const Vec& v : p.poly)
      if (!K.is_interior(v, kInteriorMargin))
        fail(ErrorCode::RegionNotInterior, "surface must lie in the interior of the domain");
    if (d == 1) {
      total += 1.0;
    } else if (d == 2) {
      const Vec &A = p.poly[0], &B = p.poly[1];
      Vec t(-p.normal.y(), p.normal.x(), 0);
      double len = (B - A).norm();
      std::vector<double> cuts = edge_breakpoints(K, A, B, t);
      for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        // composite GL8: the integrand is rational with poles off the edge;
        // short panels keep the rule accurate
        const int panels = 6;
        for (int q = 0; q < panels; ++q) {
          double s0 = cuts[i] + (cuts[i + 1] - cuts[i]) * q / panels;
          double s1 = cuts[i] + (cuts[i + 1] - cuts[i]) * (q + 1) / panels;
          for (int g = 0; g < 8; ++g) {
            double s = 0.5 * (s0 + s1) + 0.5 * (s1 - s0) * kGL8X[g];
            Vec x = A + s * (B - A);
            total +=
                0.5 * (s1 - s0) * len * kGL8W[g] * finsler_area_density(tag, K, x, p.normal, scratch);
          }
        }
      }
    } else {
      const Vec& p0 = p.poly[0];
      for (size_t i = 1; i + 1 < p.poly.size(); ++i) {
        Vec a = p0, b = p.poly[i], c = p.poly[i + 1];
        Vec ab = 0.5 * (a + b), bc = 0.5 * (b + c), ca = 0.5 * (c + a);
        std::array<std::array<Vec, 3>, 4> tris = {
            {{a, ab, ca}, {ab, b, bc}, {ca, bc, c}, {ab, bc, ca}}};
        for (const auto& tr : tris) {
          double area = 0.5 * (tr[1] - tr[0]).cross(tr[2] - tr[0]).norm();
          for (const TriNode& n : kTri7) {
            Vec x = n.l1 * tr[0] + n.l2 * tr[1] + n.l3 * tr[2];
            total += area * n.w * finsler_area_density(tag, K, x, p.normal, scratch);
          }
        }
      }
    }
  }
  m.value = total;
  return m;
}

MeasureEstimate ht_area_finsler(GeometryTag tag, const ConvexBody& K, const ConvexBody& G,
                                int quad_order) {
  require_region_interior(K, G);
  return ht_area_finsler_surface(tag, K, boundary_surface(G), quad_order);
}

MeasureEstimate busemann_volume(const ConvexBody& D, const ConvexBody& U) {
  require_symmetric(D, "busemann volume unit ball");
  if (D.dim() != U.dim()) fail(ErrorCode::DimensionMismatch, "busemann_volume");
  MeasureEstimate m;
  m.method = MeasureMethod::Exact;
  m.geometry = GeometryTag::Minkowski;
  m.value = unit_ball_volume(D.dim()) / D.volume() * U.volume();
  return m;
}

MeasureEstimate busemann_area_surface(const ConvexBody& D, const Surface& S) {
  require_symmetric(D, "busemann area unit ball");
  const int d = D.dim();
  MeasureEstimate m;
  m.method = MeasureMethod::Exact;
  m.geometry = GeometryTag::Minkowski;
  double total = 0.0;
  for (const SurfacePatch& p : S) {
    double density;
    if (d == 1) {
      density = 1.0;
    } else if (d == 2) {
      Vec t(-p.normal.y(), p.normal.x(), 0);
      double chord = 1.0 / D.gauge(t) + 1.0 / D.gauge(-t);
      density = unit_ball_volume(1) / chord;
    } else {
      Vec e1, e2;
      plane_basis(p.normal, e1, e2);
      Subspace tangent;
      tangent.dim_ambient = 3;
      tangent.basis = {e1, e2};
      ConvexBody sl = slice_in_subspace(D, tangent);
      density = unit_ball_volume(2) / sl.volume();
    }
    total += density * patch_measure(d, p);
  }
  m.value = total;
  return m;
}

MeasureEstimate busemann_area(const ConvexBody& D, const ConvexBody& C) {
  if (D.dim() != C.dim()) fail(ErrorCode::DimensionMismatch, "busemann_area");
  return busemann_area_surface(D, boundary_surface(C));
}

double volume_product(const ConvexBody& D) {
  if (!D.contains_origin_interior())
    fail(ErrorCode::OriginNotInterior, "volume product needs the origin interior");
  ConvexBody pd = polar(D);
  double w = unit_ball_volume(D.dim());
  return D.volume() * pd.volume() / (w * w);
}

GrowthProfile ball_growth_minkowski(const ConvexBody& D, const std::vector<double>& radii) {
  require_symmetric(D, "ball growth unit ball");
  GrowthProfile prof;
  double vol1 = ht_volume_minkowski(D, D).value;
  double area1 = ht_area_minkowski(D, D).value;
  const int d = D.dim();
  std::vector<double> lx, lv, la;
  for (double r : radii) {
    if (r <= 0) fail(ErrorCode::RadiusOutOfRange, "ball growth radius");
    GrowthRow row;
    row.r = r;
    row.vol = vol1 * std::pow(r, d);
    row.area = area1 * std::pow(r, d - 1);
    prof.rows.push_back(row);
    lx.push_back(std::log(r));
    lv.push_back(std::log(row.vol));
    if (d > 1) la.push_back(std::log(row.area));
  }
  prof.slope_vol = least_squares_slope(lx, lv);
  prof.slope_area = d > 1 ? least_squares_slope(lx, la) : 0.0;
  return prof;
}

GrowthProfile ball_growth_hilbert(const ConvexBody& K, const Vec& x, const std::vector<double>& radii,
                                  int n_dir) {
  GrowthProfile prof;
  std::vector<double> lx, lv, la;
  for (double r : radii) {
    if (r <= 0 || r > kRPlus) fail(ErrorCode::RadiusOutOfRange, "ball growth radius");
    FinslerBall fb = hilbert_ball(K, x, r, n_dir);
    ConvexBody ball = fb.to_body();
    GrowthRow row;
    row.r = r;
    row.vol = K.dim() == 3 ? ht_volume_finsler(GeometryTag::Hilbert, K, ball, 4000, 17).value
                           : ht_volume_finsler_quadrature(GeometryTag::Hilbert, K, ball, 2).value;
    row.area = K.dim() == 1 ? 2.0 : ht_area_finsler(GeometryTag::Hilbert, K, ball).value;
    prof.rows.push_back(row);
    lx.push_back(std::log(r));
    lv.push_back(std::log(row.vol));
    if (K.dim() > 1) la.push_back(std::log(row.area));
  }
  prof.slope_vol = least_squares_slope(lx, lv);
  prof.slope_area = K.dim() > 1 ? least_squares_slope(lx, la) : 0.0;
  return prof;
}

bool estimates_agree(const MeasureEstimate& a, const MeasureEstimate& b, double k, double abs_tol) {
  return std::abs(a.value - b.value) <= k * (a.std_error + b.std_error) + abs_tol;
}

}  // namespace hilbcover
