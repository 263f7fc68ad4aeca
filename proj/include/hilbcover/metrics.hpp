#pragma once

#include <optional>

#include "hilbcover/fan.hpp"
#include "hilbcover/geometry.hpp"

namespace hilbcover {

// Localization radius: operations taking Hilbert radii reject r > kRPlus.
inline constexpr double kRPlus = 8.0;

enum class GeometryTag { Funk, Hilbert, Minkowski };

// Centered star-shaped polytope given by radial values over a direction fan.
struct FinslerBall {
  Vec center = Vec::Zero();
  DirectionFan fan;
  std::vector<double> radii;
  GeometryTag tag = GeometryTag::Hilbert;

  // Hull of the radial points (throws DegenerateBody for zero radii).
  ConvexBody to_body() const;
  // Radial polygon convexity defect: max inward deviation of a radial point
  // from the hull of the others (0 for convex data).
  double convexity_defect() const;
  bool centrally_symmetric_radii(double tol = 1e-9) const;
};

// Asymmetric Funk distance ln(|x-y'| / |y-y'|); x, y interior to K.
double funk_distance(const ConvexBody& K, const Vec& x, const Vec& y);

// Funk distance through the polar-form variational formula
// log sup_{z in K°} (1-<z,x>)/(1-<z,y>); the supremum is attained at a vertex
// of the polar.
double funk_distance_variational(const ConvexBody& K, const ConvexBody& polarK, const Vec& x,
                                 const Vec& y);
double funk_distance_variational(const ConvexBody& K, const Vec& x, const Vec& y);

// Projectively invariant symmetrization: (funk(x,y) + funk(y,x)) / 2.
double hilbert_distance(const ConvexBody& K, const Vec& x, const Vec& y);

// Single-pass variant used in hot loops (one facet scan per call; symmetric up
// to rounding, unlike hilbert_distance which is symmetric bit for bit).
double hilbert_distance_fast(const ConvexBody& K, const Vec& x, const Vec& y);

// Exact radius along u at which the Hilbert distance from x reaches r
// (cross-ratio solved in closed form). Used as the oracle for the bisection
// path and in performance-critical ball constructions.
double hilbert_ball_radius_exact(const ConvexBody& K, const Vec& x, const Vec& u, double r);

// Hilbert metric ball by per-direction bisection on the monotone map
// t -> d_H(x, x+tu).
FinslerBall hilbert_ball(const ConvexBody& K, const Vec& x, double r, int n_dir);

// Funk Finsler unit ball at x, i.e. K - x sampled radially.
FinslerBall funk_finsler_ball(const ConvexBody& K, const Vec& x, int n_dir);

// Hilbert Finsler unit ball: per direction the harmonic mean of the two
// boundary distances t+ and t-.
FinslerBall hilbert_finsler_ball(const ConvexBody& K, const Vec& x, int n_dir);

struct ProjectiveMapResult {
  Vec image = Vec::Zero();
  Mat jacobian = Mat::Identity();
  double det = 1.0;
};

// P_x(y) = y / (1 - <x,y>) with its Jacobian
// J = (1-<x,y>)^{-2} ((1-<x,y>) I + y x^T) and determinant.
ProjectiveMapResult projective_polar_map(int dim, const Vec& x, const Vec& y);

// inf_{g in G} dist(z, g); 0 when z is a member. 2D minimizes over the
// boundary by a coarse scan plus golden-section refinement; the result never
// exceeds the distance to any evaluated boundary point.
double distance_to_set_hilbert(const ConvexBody& K, const Vec& z, const ConvexBody& G,
                               double tol = 1e-6);
double distance_to_set_minkowski(const ConvexBody& D, const Vec& z, const ConvexBody& G,
                                 double tol = 1e-6);

// Per-instance Macbeath sandwich ratios: the largest sigma and smallest tau
// with M_K(x, sigma*r) ⊆ B_H(x,r) ⊆ M_K(x, tau*r) along the sampled fan.
std::pair<double, double> sandwich_estimate(const ConvexBody& K, const Vec& x, double r,
                                            int n_dir = 720);

inline int default_n_dir(int dim) { return dim == 3 ? 1280 : 720; }

}  // namespace hilbcover
