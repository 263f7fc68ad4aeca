#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hilbcover/error.hpp"

namespace hilbcover {

// Points live in R^3 with coordinates beyond the body dimension pinned to zero.
using Vec = Eigen::Vector3d;
using Mat = Eigen::Matrix3d;

inline constexpr double kEpsGeom = 1e-9;          // absolute tolerance on coordinates
inline constexpr double kMaxCircumradius = 10.0;  // bodies are rescaled to fit at construction
inline constexpr double kInteriorMargin = 1e-12;  // metric ops reject points closer to the boundary

// {x : <normal,x> <= offset}, normal is unit length.
struct Halfspace {
  Vec normal = Vec::Zero();
  double offset = 0.0;
};

// A facet of a polytope: supporting halfspace plus the boundary cycle of vertex
// indices (2 indices in 2D, 1 in 1D; CCW seen from outside in 3D).
struct Facet {
  Vec normal = Vec::Zero();
  double offset = 0.0;
  std::vector<int> loop;
};

// Linear subspace through the origin, given by an orthonormal basis.
struct Subspace {
  int dim_ambient = 3;
  std::vector<Vec> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  static Subspace span(int dim_ambient, const std::vector<Vec>& vectors);
  Vec to_coords(const Vec& p) const;    // coordinates in the basis (padded with zeros)
  Vec from_coords(const Vec& c) const;  // embed back into the ambient space
};

// Vertex-represented full-dimensional convex polytope in dimension 1, 2 or 3,
// with a cached facet representation. Immutable after construction; all
// operations are pure.
class ConvexBody {
 public:
  // Builds the hull of the given points. Throws DegenerateBody if the hull is
  // not full-dimensional (volume <= kEpsGeom). Points closer than kEpsGeom are
  // merged. With normalize set (used when bodies enter from outside: parsing
  // and generators), bodies larger than kMaxCircumradius are rescaled and the
  // factor applied is recorded in scale_factor(); derived bodies keep raw
  // coordinates so that exact identities (polar involution, gauge sums)
  // survive.
  static ConvexBody from_vertices(int dim, const std::vector<Vec>& points, std::string name = "",
                                  bool normalize = false);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::string& name() const { return name_; }
  double scale_factor() const { return scale_factor_; }
  bool contains_origin_interior() const { return contains_origin_interior_; }
  bool centrally_symmetric() const { return centrally_symmetric_; }

  double volume() const { return volume_; }
  // Boundary measure: perimeter (2D), facet area (3D), counting measure 2 (1D).
  double boundary_measure() const { return boundary_measure_; }
  Vec centroid() const { return centroid_; }
  double circumradius() const;

  double support(const Vec& u) const;
  // Minkowski functional of the body; requires the origin in the interior.
  double gauge(const Vec& u) const;
  bool contains(const Vec& p, double tol = kEpsGeom) const;
  bool is_interior(const Vec& p, double margin = kEpsGeom) const;
  // Largest margin m such that p is m-interior (min over facets of offset - <n,p>).
  double interior_margin(const Vec& p) const;

  // Boundary point hit by the ray origin + t*direction, together with t > 0.
  std::pair<Vec, double> ray_exit(const Vec& origin, const Vec& direction) const;
  // Both boundary parameters of the full line p + s*v (s_minus < 0 < s_plus
  // when p is interior).
  std::pair<double, double> line_exits(const Vec& p, const Vec& v) const;

  ConvexBody translated(const Vec& t) const;
  ConvexBody scaled(double s) const;  // about the origin; s may be negative (negation)
  ConvexBody scaled_about(const Vec& c, double s) const;
  ConvexBody negated() const { return scaled(-1.0); }
  ConvexBody reflected_about(const Vec& c) const { return scaled_about(c, -1.0); }
  ConvexBody linear_image(const Mat& L) const;

  // Edges as index pairs (unique, 3D derives them from facet loops).
  std::vector<std::pair<int, int>> edges() const;

  // Covariance of the uniform measure on the body (exact; used for
  // near-isotropic preconditioning).
  Mat covariance() const;

 private:
  ConvexBody() = default;
  void finalize();  // computes facets, measures, flags

  int dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Facet> facets_;
  std::string name_;
  double scale_factor_ = 1.0;
  bool contains_origin_interior_ = false;
  bool centrally_symmetric_ = false;
  double volume_ = 0.0;
  double boundary_measure_ = 0.0;
  Vec centroid_ = Vec::Zero();
};

// Polar body {y : <x,y> <= 1 for all x in K}; requires the origin strictly
// interior. Vertices of the output are duals of input facets and vice versa.
ConvexBody polar(const ConvexBody& K);

ConvexBody clip(const ConvexBody& K, const Halfspace& h);
ConvexBody intersect(const ConvexBody& A, const ConvexBody& B);
ConvexBody hull_of(const ConvexBody& A, const ConvexBody& B);
ConvexBody minkowski_sum(const ConvexBody& A, const ConvexBody& B);

// Scaled Macbeath region x + lambda*((K-x) ∩ (x-K)).
ConvexBody macbeath(const ConvexBody& K, const Vec& x, double lambda);

enum class SymmetrizeMode { Core, Union, Difference };
ConvexBody symmetrize(const ConvexBody& C, SymmetrizeMode mode);

double point_body_distance(const Vec& p, const ConvexBody& B);
// Hausdorff distance between convex bodies (exact for polytopes: attained at
// vertices).
double hausdorff_distance(const ConvexBody& A, const ConvexBody& B);

// K ∩ E and proj(K, E) expressed in E-coordinates as bodies of dimension
// E.dim(). Slicing requires the origin interior to K.
ConvexBody slice_in_subspace(const ConvexBody& K, const Subspace& E);
ConvexBody project_to_subspace(const ConvexBody& K, const Subspace& E);

// Generators ---------------------------------------------------------------

ConvexBody make_cube(int dim);
ConvexBody make_scaled_cube(int dim, double r);
ConvexBody make_cross(int dim);
ConvexBody make_simplex(int dim);
ConvexBody make_ngon(int k);
ConvexBody make_interval(double a, double b);
ConvexBody make_random_hull(int dim, int n, std::uint64_t seed);
// Translate so the centroid sits at the origin.
ConvexBody recentered(const ConvexBody& body);

}  // namespace hilbcover
