#include "hilbcover/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hilbcover/rng.hpp"

namespace hilbcover {

namespace {

bool lex_less(const Vec& a, const Vec& b) {
  if (a.x() != b.x()) return a.x() < b.x();
  if (a.y() != b.y()) return a.y() < b.y();
  return a.z() < b.z();
}

// Merge points closer than kEpsGeom; lexicographic order makes the result
// deterministic.
std::vector<Vec> dedup_points(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  std::vector<Vec> out;
  for (const Vec& p : pts) {
    bool dup = false;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      if (p.x() - it->x() > kEpsGeom) break;
      if ((p - *it).norm() <= kEpsGeom) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  return out;
}

double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Monotone chain; collinear points are dropped.
std::vector<Vec> hull2d(std::vector<Vec> pts, double eps) {
  std::sort(pts.begin(), pts.end(), lex_less);
  const int n = static_cast<int>(pts.size());
  if (n < 3) return {};
  std::vector<Vec> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= eps) --k;
    h[k++] = pts[i];
  }
  for (int i = n - 2, lo = k + 1; i >= 0; --i) {
    while (k >= lo && cross2(h[k - 2], h[k - 1], pts[i]) <= eps) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;  // CCW
}

struct Tri {
  int a, b, c;
  Vec n;      // unit outward normal
  double d;   // offset
};

Vec tri_normal(const Vec& a, const Vec& b, const Vec& c) { return (b - a).cross(c - a); }

// Incremental 3D hull. Input points must be deduplicated. Returns an empty
// vector when the point set is not full-dimensional.
std::vector<Tri> hull3d(const std::vector<Vec>& pts, double eps) {
  const int n = static_cast<int>(pts.size());
  if (n < 4) return {};

  // initial simplex: spread-out quadruple
  int i0 = 0;
  for (int i = 1; i < n; ++i)
    if (lex_less(pts[i], pts[i0])) i0 = i;
  int i1 = -1;
  double best = eps;
  for (int i = 0; i < n; ++i) {
    double d = (pts[i] - pts[i0]).norm();
    if (d > best) best = d, i1 = i;
  }
  if (i1 < 0) return {};
  int i2 = -1;
  best = eps;
  for (int i = 0; i < n; ++i) {
    double d = (pts[i] - pts[i0]).cross(pts[i] - pts[i1]).norm();
    if (d > best) best = d, i2 = i;
  }
  if (i2 < 0) return {};
  int i3 = -1;
  best = eps;
  Vec n012 = tri_normal(pts[i0], pts[i1], pts[i2]).normalized();
  for (int i = 0; i < n; ++i) {
    double d = std::abs(n012.dot(pts[i] - pts[i0]));
    if (d > best) best = d, i3 = i;
  }
  if (i3 < 0) return {};

  auto make_tri = [&](int a, int b, int c, const Vec& inside) {
    Tri t{a, b, c, Vec::Zero(), 0.0};
    Vec nn = tri_normal(pts[a], pts[b], pts[c]);
    if (nn.dot(inside - pts[a]) > 0) {
      std::swap(t.b, t.c);
      nn = -nn;
    }
    t.n = nn.normalized();
    t.d = t.n.dot(pts[a]);
    return t;
  };

  Vec inside = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;
  std::vector<Tri> faces = {make_tri(i0, i1, i2, inside), make_tri(i0, i1, i3, inside),
                            make_tri(i0, i2, i3, inside), make_tri(i1, i2, i3, inside)};

  std::vector<char> used(n, 0);
  used[i0] = used[i1] = used[i2] = used[i3] = 1;

  for (int p = 0; p < n; ++p) {
    if (used[p]) continue;
    used[p] = 1;
    std::vector<char> visible(faces.size(), 0);
    bool any = false;
    for (size_t f = 0; f < faces.size(); ++f) {
      if (faces[f].n.dot(pts[p]) - faces[f].d > eps) {
        visible[f] = 1;
        any = true;
      }
    }
    if (!any) continue;
    // horizon: directed edges of visible faces whose reverse is not visible
    std::set<std::pair<int, int>> vis_edges;
    for (size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      const Tri& t = faces[f];
      vis_edges.insert({t.a, t.b});
      vis_edges.insert({t.b, t.c});
      vis_edges.insert({t.c, t.a});
    }
    std::vector<std::pair<int, int>> horizon;
    for (const auto& e : vis_edges)
      if (!vis_edges.count({e.second, e.first})) horizon.push_back(e);
    std::vector<Tri> next;
    for (size_t f = 0; f < faces.size(); ++f)
      if (!visible[f]) next.push_back(faces[f]);
    for (const auto& e : horizon) next.push_back(make_tri(e.first, e.second, p, inside));
    faces.swap(next);
  }
  return faces;
}

}  // namespace

// Subspace -------------------------------------------------------------------

Subspace Subspace::span(int dim_ambient, const std::vector<Vec>& vectors) {
  Subspace E;
  E.dim_ambient = dim_ambient;
  for (Vec v : vectors) {
    for (const Vec& b : E.basis) v -= b.dot(v) * b;
    double n = v.norm();
    if (n > 1e-12) E.basis.push_back(v / n);
  }
  if (E.basis.empty()) fail(ErrorCode::ValidationError, "subspace basis is empty");
  return E;
}

Vec Subspace::to_coords(const Vec& p) const {
  Vec c = Vec::Zero();
  for (size_t i = 0; i < basis.size(); ++i) c[static_cast<int>(i)] = basis[i].dot(p);
  return c;
}

Vec Subspace::from_coords(const Vec& c) const {
  Vec p = Vec::Zero();
  for (size_t i = 0; i < basis.size(); ++i) p += c[static_cast<int>(i)] * basis[i];
  return p;
}

// ConvexBody ----------------------------------------------------------------

ConvexBody ConvexBody::from_vertices(int dim, const std::vector<Vec>& points, std::string name,
                                     bool normalize) {
  if (dim < 1 || dim > 3) fail(ErrorCode::ValidationError, "dimension must be 1, 2 or 3");
  for (const Vec& p : points)
    for (int k = dim; k < 3; ++k)
      if (std::abs(p[k]) > kEpsGeom)
        fail(ErrorCode::ValidationError, "point has nonzero coordinate beyond dimension");

  ConvexBody body;
  body.dim_ = dim;
  body.name_ = std::move(name);
  std::vector<Vec> pts = dedup_points(points);

  double radius = 0.0;
  for (const Vec& p : pts) radius = std::max(radius, p.norm());
  if (normalize && radius > kMaxCircumradius) {
    body.scale_factor_ = kMaxCircumradius / radius;
    for (Vec& p : pts) p *= body.scale_factor_;
  }

  if (dim == 1) {
    if (pts.size() < 2) fail(ErrorCode::DegenerateBody, "1D body needs two distinct endpoints");
    double lo = pts.front().x(), hi = pts.back().x();
    if (hi - lo <= kEpsGeom) fail(ErrorCode::DegenerateBody, "interval has zero length");
    body.vertices_ = {Vec(lo, 0, 0), Vec(hi, 0, 0)};
  } else if (dim == 2) {
    std::vector<Vec> h = hull2d(pts, 0.5 * kEpsGeom);
    if (h.size() < 3) fail(ErrorCode::DegenerateBody, "2D hull is not full-dimensional");
    body.vertices_ = std::move(h);
  } else {
    std::vector<Tri> tris = hull3d(pts, 1e-10 * std::max(1.0, radius));
    if (tris.empty()) fail(ErrorCode::DegenerateBody, "3D hull is not full-dimensional");
    // merge edge-adjacent coplanar triangles into facets (union-find)
    const int nt = static_cast<int>(tris.size());
    std::vector<int> parent(nt);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    std::map<std::pair<int, int>, int> edge_owner;
    for (int i = 0; i < nt; ++i) {
      std::array<std::pair<int, int>, 3> es = {
          std::minmax(tris[i].a, tris[i].b), std::minmax(tris[i].b, tris[i].c),
          std::minmax(tris[i].c, tris[i].a)};
      for (const auto& e : es) {
        auto it = edge_owner.find(e);
        if (it == edge_owner.end()) {
          edge_owner[e] = i;
        } else {
          int j = it->second;
          if ((tris[i].n - tris[j].n).norm() < 1e-9) parent[find(i)] = find(j);
        }
      }
    }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < nt; ++i) groups[find(i)].push_back(i);
    // Each facet polygon is the 2D hull of its group in the facet plane;
    // points that sit on a facet without being extreme (mesh leftovers from
    // coplanar inputs) drop out here, and the body's vertex set is rebuilt
    // from the facet polygons.
    struct RawFacet {
      Vec n;
      std::vector<Vec> poly;
    };
    std::vector<RawFacet> raw;
    for (const auto& [root, ids] : groups) {
      (void)root;
      Vec n = Vec::Zero();
      std::set<int> vset;
      for (int i : ids) {
        n += tris[i].n;
        vset.insert(tris[i].a);
        vset.insert(tris[i].b);
        vset.insert(tris[i].c);
      }
      n.normalize();
      Vec any = pts[*vset.begin()];
      Vec e1 = std::abs(n.x()) < 0.9 ? Vec(1, 0, 0) : Vec(0, 1, 0);
      e1 = (e1 - n.dot(e1) * n).normalized();
      Vec e2 = n.cross(e1);
      std::vector<Vec> plane;
      for (int v : vset) plane.push_back(Vec(e1.dot(pts[v]), e2.dot(pts[v]), 0));
      std::vector<Vec> h2 = hull2d(plane, 0.5 * kEpsGeom);
      if (h2.size() < 3) continue;
      RawFacet rf;
      rf.n = n;
      double lift = n.dot(any);
      for (const Vec& q : h2) rf.poly.push_back(q.x() * e1 + q.y() * e2 + lift * n);
      raw.push_back(std::move(rf));
    }
    // rebuild the vertex list from facet corners
    std::vector<Vec> corners;
    for (const RawFacet& rf : raw)
      corners.insert(corners.end(), rf.poly.begin(), rf.poly.end());
    body.vertices_ = dedup_points(corners);
    auto index_of = [&](const Vec& p) {
      for (size_t i = 0; i < body.vertices_.size(); ++i)
        if ((body.vertices_[i] - p).norm() <= 2 * kEpsGeom) return static_cast<int>(i);
      fail(ErrorCode::ValidationError, "facet corner lost in deduplication");
    };
    for (const RawFacet& rf : raw) {
      Facet f;
      f.normal = rf.n;
      double d = 0;
      for (const Vec& p : rf.poly) {
        f.loop.push_back(index_of(p));
        d += rf.n.dot(p);
      }
      f.offset = d / static_cast<double>(rf.poly.size());
      body.facets_.push_back(std::move(f));
    }
  }
  body.finalize();
  return body;
}

void ConvexBody::finalize() {
  if (dim_ == 1) {
    facets_ = {Facet{Vec(1, 0, 0), vertices_[1].x(), {1}}, Facet{Vec(-1, 0, 0), -vertices_[0].x(), {0}}};
    volume_ = vertices_[1].x() - vertices_[0].x();
    boundary_measure_ = 2.0;
    centroid_ = 0.5 * (vertices_[0] + vertices_[1]);
  } else if (dim_ == 2) {
    facets_.clear();
    const int n = static_cast<int>(vertices_.size());
    double area2 = 0.0;
    Vec c = Vec::Zero();
    boundary_measure_ = 0.0;
    for (int i = 0; i < n; ++i) {
      const Vec& a = vertices_[i];
      const Vec& b = vertices_[(i + 1) % n];
      Vec e = b - a;
      Vec nrm(e.y(), -e.x(), 0);
      nrm.normalize();
      facets_.push_back(Facet{nrm, nrm.dot(a), {i, (i + 1) % n}});
      double cr = a.x() * b.y() - b.x() * a.y();
      area2 += cr;
      c += cr * (a + b);
      boundary_measure_ += e.norm();
    }
    volume_ = 0.5 * area2;
    centroid_ = c / (3.0 * area2);
  } else {
    // facets already built; divergence theorem for the volume, tetrahedra for
    // the centroid
    volume_ = 0.0;
    boundary_measure_ = 0.0;
    Vec c = Vec::Zero();
    for (const Facet& f : facets_) {
      double area = 0.0;
      const auto& L = f.loop;
      const Vec& p0 = vertices_[L[0]];
      for (size_t i = 1; i + 1 < L.size(); ++i) {
        const Vec& p1 = vertices_[L[i]];
        const Vec& p2 = vertices_[L[i + 1]];
        area += 0.5 * (p1 - p0).cross(p2 - p0).dot(f.normal);
        double vt = (p0.cross(p1)).dot(p2) / 6.0;  // signed tet (O,p0,p1,p2)
        volume_ += vt;
        c += vt * (p0 + p1 + p2) / 4.0;
      }
      boundary_measure_ += area;
    }
    centroid_ = c / volume_;
  }
  if (volume_ <= kEpsGeom) fail(ErrorCode::DegenerateBody, "volume below tolerance");

  contains_origin_interior_ = true;
  for (const Facet& f : facets_)
    if (f.offset <= kEpsGeom) contains_origin_interior_ = false;

  centrally_symmetric_ = true;
  for (const Vec& v : vertices_) {
    bool found = false;
    for (const Vec& w : vertices_)
      if ((v + w).norm() <= 10 * kEpsGeom) {
        found = true;
        break;
      }
    if (!found) {
      centrally_symmetric_ = false;
      break;
    }
  }
}

double ConvexBody::circumradius() const {
  double r = 0.0;
  for (const Vec& v : vertices_) r = std::max(r, v.norm());
  return r;
}

double ConvexBody::support(const Vec& u) const {
  double s = -std::numeric_limits<double>::infinity();
  for (const Vec& v : vertices_) s = std::max(s, u.dot(v));
  return s;
}

double ConvexBody::gauge(const Vec& u) const {
  if (!contains_origin_interior_) fail(ErrorCode::OriginNotInterior, "gauge needs the origin interior");
  if (u.norm() == 0.0) return 0.0;
  double g = 0.0;
  for (const Facet& f : facets_) g = std::max(g, f.normal.dot(u) / f.offset);
  return g;
}

bool ConvexBody::contains(const Vec& p, double tol) const {
  for (const Facet& f : facets_)
    if (f.normal.dot(p) > f.offset + tol) return false;
  return true;
}

bool ConvexBody::is_interior(const Vec& p, double margin) const {
  for (const Facet& f : facets_)
    if (f.normal.dot(p) >= f.offset - margin) return false;
  return true;
}

double ConvexBody::interior_margin(const Vec& p) const {
  double m = std::numeric_limits<double>::infinity();
  for (const Facet& f : facets_) m = std::min(m, f.offset - f.normal.dot(p));
  return m;
}

std::pair<Vec, double> ConvexBody::ray_exit(const Vec& origin, const Vec& direction) const {
  if (direction.norm() == 0.0) fail(ErrorCode::ZeroDirection, "ray direction is zero");
  if (!is_interior(origin, kInteriorMargin))
    fail(ErrorCode::OriginNotInterior, "ray origin is not strictly interior");
  double t = std::numeric_limits<double>::infinity();
  for (const Facet& f : facets_) {
    double q = f.normal.dot(direction);
    if (q > 0) t = std::min(t, (f.offset - f.normal.dot(origin)) / q);
  }
  return {origin + t * direction, t};
}

std::pair<double, double> ConvexBody::line_exits(const Vec& p, const Vec& v) const {
  double splus = std::numeric_limits<double>::infinity();
  double sminus = -std::numeric_limits<double>::infinity();
  for (const Facet& f : facets_) {
    double q = f.normal.dot(v);
    double r = f.offset - f.normal.dot(p);
    if (q > 1e-300) splus = std::min(splus, r / q);
    else if (q < -1e-300) sminus = std::max(sminus, r / q);
  }
  return {sminus, splus};
}

ConvexBody ConvexBody::translated(const Vec& t) const {
  std::vector<Vec> pts(vertices_);
  for (Vec& p : pts) p += t;
  return from_vertices(dim_, pts, name_);
}

ConvexBody ConvexBody::scaled(double s) const {
  if (std::abs(s) <= kEpsGeom) fail(ErrorCode::DegenerateBody, "scaling factor too small");
  std::vector<Vec> pts(vertices_);
  for (Vec& p : pts) p *= s;
  return from_vertices(dim_, pts, name_);
}

ConvexBody ConvexBody::scaled_about(const Vec& c, double s) const {
  if (std::abs(s) <= kEpsGeom) fail(ErrorCode::DegenerateBody, "scaling factor too small");
  std::vector<Vec> pts(vertices_);
  for (Vec& p : pts) p = c + s * (p - c);
  return from_vertices(dim_, pts, name_);
}

ConvexBody ConvexBody::linear_image(const Mat& L) const {
  Mat M = Mat::Identity();
  M.topLeftCorner(dim_, dim_) = L.topLeftCorner(dim_, dim_);
  if (std::abs(M.determinant()) <= kEpsGeom)
    fail(ErrorCode::DegenerateBody, "linear map is nearly singular");
  std::vector<Vec> pts(vertices_);
  for (Vec& p : pts) p = M * p;
  return from_vertices(dim_, pts, name_);
}

std::vector<std::pair<int, int>> ConvexBody::edges() const {
  std::vector<std::pair<int, int>> out;
  if (dim_ == 1) {
    out.push_back({0, 1});
  } else if (dim_ == 2) {
    const int n = static_cast<int>(vertices_.size());
    for (int i = 0; i < n; ++i) out.push_back({i, (i + 1) % n});
  } else {
    std::set<std::pair<int, int>> seen;
    for (const Facet& f : facets_) {
      const auto& L = f.loop;
      for (size_t i = 0; i < L.size(); ++i) {
        int a = L[i], b = L[(i + 1) % L.size()];
        if (a > b) std::swap(a, b);
        seen.insert({a, b});
      }
    }
    out.assign(seen.begin(), seen.end());
  }
  return out;
}

Mat ConvexBody::covariance() const {
  Mat m = Mat::Zero();
  if (dim_ == 1) {
    double len = volume_;
    m(0, 0) = len * len / 12.0;
    return m;
  }
  if (dim_ == 2) {
    const int n = static_cast<int>(vertices_.size());
    double A = volume_;
    double sxx = 0, syy = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
      const Vec& a = vertices_[i];
      const Vec& b = vertices_[(i + 1) % n];
      double cr = a.x() * b.y() - b.x() * a.y();
      sxx += cr * (a.x() * a.x() + a.x() * b.x() + b.x() * b.x());
      syy += cr * (a.y() * a.y() + a.y() * b.y() + b.y() * b.y());
      sxy += cr * (2 * a.x() * a.y() + a.x() * b.y() + b.x() * a.y() + 2 * b.x() * b.y());
    }
    double exx = sxx / (12.0 * A), eyy = syy / (12.0 * A), exy = sxy / (24.0 * A);
    Vec c = centroid_;
    m(0, 0) = exx - c.x() * c.x();
    m(1, 1) = eyy - c.y() * c.y();
    m(0, 1) = m(1, 0) = exy - c.x() * c.y();
    return m;
  }
  // 3D: tetrahedra fanned from the origin; E[x x^T] over a tet (0,a,b,c) is
  // (1/20)(a a^T + b b^T + c c^T + s s^T), s = a+b+c.
  Mat second = Mat::Zero();
  double vol = 0.0;
  for (const Facet& f : facets_) {
    const auto& L = f.loop;
    const Vec& p0 = vertices_[L[0]];
    for (size_t i = 1; i + 1 < L.size(); ++i) {
      const Vec& p1 = vertices_[L[i]];
      const Vec& p2 = vertices_[L[i + 1]];
      double vt = (p0.cross(p1)).dot(p2) / 6.0;
      Vec s = p0 + p1 + p2;
      Mat e = (p0 * p0.transpose() + p1 * p1.transpose() + p2 * p2.transpose() + s * s.transpose()) / 20.0;
      second += vt * e;
      vol += vt;
    }
  }
  second /= vol;
  return second - centroid_ * centroid_.transpose();
}

// Free operations -------------------------------------------------------------

ConvexBody polar(const ConvexBody& K) {
  if (!K.contains_origin_interior())
    fail(ErrorCode::OriginNotInterior, "polar needs the origin strictly interior");
  std::vector<Vec> pts;
  pts.reserve(K.facets().size());
  for (const Facet& f : K.facets()) pts.push_back(f.normal / f.offset);
  return ConvexBody::from_vertices(K.dim(), pts, K.name().empty() ? "" : K.name() + "*");
}

ConvexBody clip(const ConvexBody& K, const Halfspace& h) {
  std::vector<Vec> pts;
  const auto& V = K.vertices();
  std::vector<double> s(V.size());
  for (size_t i = 0; i < V.size(); ++i) s[i] = h.normal.dot(V[i]) - h.offset;
  for (size_t i = 0; i < V.size(); ++i)
    if (s[i] <= kEpsGeom) pts.push_back(V[i]);
  for (const auto& [a, b] : K.edges()) {
    if ((s[a] > 0) == (s[b] > 0)) continue;
    double t = s[a] / (s[a] - s[b]);
    pts.push_back(V[a] + t * (V[b] - V[a]));
  }
  if (pts.empty()) fail(ErrorCode::DegenerateBody, "clip produced an empty set");
  return ConvexBody::from_vertices(K.dim(), pts);
}

ConvexBody intersect(const ConvexBody& A, const ConvexBody& B) {
  if (A.dim() != B.dim()) fail(ErrorCode::DimensionMismatch, "intersect");
  ConvexBody out = A;
  for (const Facet& f : B.facets()) out = clip(out, Halfspace{f.normal, f.offset});
  return out;
}

ConvexBody hull_of(const ConvexBody& A, const ConvexBody& B) {
  if (A.dim() != B.dim()) fail(ErrorCode::DimensionMismatch, "hull_of");
  std::vector<Vec> pts(A.vertices());
  pts.insert(pts.end(), B.vertices().begin(), B.vertices().end());
  return ConvexBody::from_vertices(A.dim(), pts);
}

ConvexBody minkowski_sum(const ConvexBody& A, const ConvexBody& B) {
  if (A.dim() != B.dim()) fail(ErrorCode::DimensionMismatch, "minkowski_sum");
  std::vector<Vec> pts;
  pts.reserve(A.vertices().size() * B.vertices().size());
  for (const Vec& a : A.vertices())
    for (const Vec& b : B.vertices()) pts.push_back(a + b);
  return ConvexBody::from_vertices(A.dim(), pts);
}

ConvexBody macbeath(const ConvexBody& K, const Vec& x, double lambda) {
  if (!K.is_interior(x, kInteriorMargin))
    fail(ErrorCode::PointNotInterior, "macbeath base point must be interior");
  if (lambda < 0) fail(ErrorCode::RadiusOutOfRange, "macbeath scale must be nonnegative");
  if (lambda <= kEpsGeom)
    fail(ErrorCode::DegenerateBody, "macbeath region degenerates to a point");
  ConvexBody m = intersect(K, K.reflected_about(x));
  if (lambda == 1.0) return m;
  return m.scaled_about(x, lambda);
}

ConvexBody symmetrize(const ConvexBody& C, SymmetrizeMode mode) {
  if (!C.contains(Vec::Zero(), kEpsGeom))
    fail(ErrorCode::OriginNotMember, "symmetrization needs the origin in the body");
  switch (mode) {
    case SymmetrizeMode::Core: {
      if (!C.contains_origin_interior())
        fail(ErrorCode::DegenerateBody, "symmetric core needs the origin interior");
      return intersect(C, C.negated());
    }
    case SymmetrizeMode::Union:
      return hull_of(C, C.negated());
    case SymmetrizeMode::Difference:
      return minkowski_sum(C, C.negated());
  }
  fail(ErrorCode::ValidationError, "unknown symmetrize mode");
}

namespace {

double point_segment_distance(const Vec& p, const Vec& a, const Vec& b) {
  Vec ab = b - a;
  double t = ab.squaredNorm() > 0 ? (p - a).dot(ab) / ab.squaredNorm() : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

}  // namespace

double point_body_distance(const Vec& p, const ConvexBody& B) {
  if (B.contains(p, 0.0)) return 0.0;
  const auto& V = B.vertices();
  if (B.dim() == 1) {
    return std::max({V[0].x() - p.x(), p.x() - V[1].x(), 0.0});
  }
  if (B.dim() == 2) {
    double d = std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(V.size());
    for (int i = 0; i < n; ++i) d = std::min(d, point_segment_distance(p, V[i], V[(i + 1) % n]));
    return d;
  }
  double d = std::numeric_limits<double>::infinity();
  for (const Facet& f : B.facets()) {
    // candidate on the facet plane
    Vec q = p - (f.normal.dot(p) - f.offset) * f.normal;
    bool in_facet = true;
    const auto& L = f.loop;
    for (size_t i = 0; i < L.size(); ++i) {
      const Vec& a = V[L[i]];
      const Vec& b = V[L[(i + 1) % L.size()]];
      if ((b - a).cross(q - a).dot(f.normal) < -kEpsGeom) {
        in_facet = false;
        break;
      }
    }
    if (in_facet) d = std::min(d, (p - q).norm());
    for (size_t i = 0; i < L.size(); ++i)
      d = std::min(d, point_segment_distance(p, V[L[i]], V[L[(i + 1) % L.size()]]));
  }
  return d;
}

double hausdorff_distance(const ConvexBody& A, const ConvexBody& B) {
  double d = 0.0;
  for (const Vec& v : A.vertices()) d = std::max(d, point_body_distance(v, B));
  for (const Vec& v : B.vertices()) d = std::max(d, point_body_distance(v, A));
  return d;
}

ConvexBody slice_in_subspace(const ConvexBody& K, const Subspace& E) {
  if (E.dim_ambient != K.dim()) fail(ErrorCode::DimensionMismatch, "slice subspace");
  if (!K.contains_origin_interior())
    fail(ErrorCode::OriginNotInterior, "slice needs the origin interior");
  const int k = E.dim();
  if (k < 1 || k >= K.dim()) fail(ErrorCode::ValidationError, "subspace dimension must be 1..dim-1");
  if (k == 1) {
    const Vec& e = E.basis[0];
    double tp = K.ray_exit(Vec::Zero(), e).second;
    double tm = K.ray_exit(Vec::Zero(), -e).second;
    return ConvexBody::from_vertices(1, {Vec(-tm, 0, 0), Vec(tp, 0, 0)});
  }
  // 2D cross-section of a 3D body through the origin
  Vec n = E.basis[0].cross(E.basis[1]).normalized();
  std::vector<Vec> pts;
  const auto& V = K.vertices();
  for (const auto& [a, b] : K.edges()) {
    double sa = n.dot(V[a]), sb = n.dot(V[b]);
    if (std::abs(sa) <= kEpsGeom) pts.push_back(E.to_coords(V[a]));
    if (std::abs(sb) <= kEpsGeom) pts.push_back(E.to_coords(V[b]));
    if ((sa > 0) != (sb > 0) && std::abs(sa) > kEpsGeom && std::abs(sb) > kEpsGeom) {
      double t = sa / (sa - sb);
      pts.push_back(E.to_coords(V[a] + t * (V[b] - V[a])));
    }
  }
  return ConvexBody::from_vertices(2, pts);
}

ConvexBody project_to_subspace(const ConvexBody& K, const Subspace& E) {
  if (E.dim_ambient != K.dim()) fail(ErrorCode::DimensionMismatch, "projection subspace");
  const int k = E.dim();
  if (k < 1 || k >= K.dim()) fail(ErrorCode::ValidationError, "subspace dimension must be 1..dim-1");
  std::vector<Vec> pts;
  pts.reserve(K.vertices().size());
  for (const Vec& v : K.vertices()) pts.push_back(E.to_coords(v));
  if (k == 1) {
    double lo = pts[0].x(), hi = pts[0].x();
    for (const Vec& p : pts) {
      lo = std::min(lo, p.x());
      hi = std::max(hi, p.x());
    }
    return ConvexBody::from_vertices(1, {Vec(lo, 0, 0), Vec(hi, 0, 0)});
  }
  return ConvexBody::from_vertices(2, pts);
}

// Generators -----------------------------------------------------------------

ConvexBody make_cube(int dim) { return make_scaled_cube(dim, 1.0); }

ConvexBody make_scaled_cube(int dim, double r) {
  std::vector<Vec> pts;
  for (int m = 0; m < (1 << dim); ++m) {
    Vec p = Vec::Zero();
    for (int k = 0; k < dim; ++k) p[k] = (m >> k) & 1 ? r : -r;
    pts.push_back(p);
  }
  return ConvexBody::from_vertices(dim, pts, "cube", true);
}

ConvexBody make_cross(int dim) {
  std::vector<Vec> pts;
  for (int k = 0; k < dim; ++k) {
    Vec p = Vec::Zero();
    p[k] = 1;
    pts.push_back(p);
    p[k] = -1;
    pts.push_back(p);
  }
  if (dim == 1) return make_interval(-1, 1);
  return ConvexBody::from_vertices(dim, pts, "cross", true);
}

ConvexBody make_simplex(int dim) {
  std::vector<Vec> pts = {Vec::Zero()};
  for (int k = 0; k < dim; ++k) {
    Vec p = Vec::Zero();
    p[k] = 1;
    pts.push_back(p);
  }
  if (dim == 1) return make_interval(0, 1);
  return ConvexBody::from_vertices(dim, pts, "simplex", true);
}

ConvexBody make_ngon(int k) {
  if (k < 3) fail(ErrorCode::ValidationError, "ngon needs k >= 3");
  std::vector<Vec> pts;
  for (int i = 0; i < k; ++i) {
    double a = 2.0 * M_PI * i / k;
    pts.push_back(Vec(std::cos(a), std::sin(a), 0));
  }
  return ConvexBody::from_vertices(2, pts, "ngon:" + std::to_string(k), true);
}

ConvexBody make_interval(double a, double b) {
  if (b < a) std::swap(a, b);
  return ConvexBody::from_vertices(1, {Vec(a, 0, 0), Vec(b, 0, 0)}, "interval", true);
}

ConvexBody make_random_hull(int dim, int n, std::uint64_t seed) {
  if (n < dim + 1) fail(ErrorCode::ValidationError, "random hull needs at least dim+1 points");
  CounterRng rng(seed);
  std::vector<Vec> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vec p = Vec::Zero();
    for (int k = 0; k < dim; ++k) p[k] = rng.uniform(-1.0, 1.0, i, k);
    pts.push_back(p);
  }
  return ConvexBody::from_vertices(dim, pts,
                                   "random_hull:" + std::to_string(n) + ",seed=" + std::to_string(seed),
                                   true);
}

ConvexBody recentered(const ConvexBody& body) {
  return body.translated(-body.centroid());
}

}  // namespace hilbcover
