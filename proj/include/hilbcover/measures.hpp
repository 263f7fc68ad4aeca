#pragma once

#include <cstdint>
#include <vector>

#include "hilbcover/geometry.hpp"
#include "hilbcover/metrics.hpp"

namespace hilbcover {

// Lebesgue volume of the d-dimensional Euclidean unit ball, d <= 3.
double unit_ball_volume(int d);

enum class MeasureMethod { Exact, Quadrature, MonteCarlo };

struct MeasureEstimate {
  double value = 0.0;
  double std_error = 0.0;  // 0 for exact methods
  long n_samples = 0;
  MeasureMethod method = MeasureMethod::Exact;
  GeometryTag geometry = GeometryTag::Minkowski;
  std::uint64_t seed = 0;
};

// A flat (d-1)-dimensional boundary piece: a segment in 2D, a planar CCW
// polygon in 3D, a single point in 1D.
struct SurfacePatch {
  Vec normal = Vec::Zero();
  std::vector<Vec> poly;
};
using Surface = std::vector<SurfacePatch>;

Surface boundary_surface(const ConvexBody& C);
double patch_measure(int dim, const SurfacePatch& p);
double surface_measure(int dim, const Surface& s);

// Exact local Holmes-Thompson densities (Lebesgue volume of the polar of the
// local Finsler unit ball, normalized by omega_d).
double funk_volume_density(const ConvexBody& K, const Vec& x);
double hilbert_volume_density(const ConvexBody& K, const Vec& x);

// vol_D(U) = lambda(D°)/omega_d * lambda(U); exact.
MeasureEstimate ht_volume_minkowski(const ConvexBody& D, const ConvexBody& U);

// Holmes-Thompson boundary area in the Minkowski geometry of D; exact for
// polytopes (the density is constant on each facet).
MeasureEstimate ht_area_minkowski(const ConvexBody& D, const ConvexBody& C);
MeasureEstimate ht_area_minkowski_surface(const ConvexBody& D, const Surface& S);

// Cauchy-formula route: integrate projection areas of C over the boundary of
// D°. Independent of the direct per-facet evaluation.
MeasureEstimate ht_area_minkowski_cauchy(const ConvexBody& D, const ConvexBody& C);

// Monte Carlo Holmes-Thompson volume of U in the Funk/Hilbert geometry of K.
// Rejection sampling from the bounding box with exact per-sample densities;
// counter-based seeding makes the result a pure function of (inputs, seed).
MeasureEstimate ht_volume_finsler(GeometryTag tag, const ConvexBody& K, const ConvexBody& U,
                                  long n_samples, std::uint64_t seed);

// Deterministic alternative (fan triangulation + degree-5 rule, dim <= 2).
MeasureEstimate ht_volume_finsler_quadrature(GeometryTag tag, const ConvexBody& K,
                                             const ConvexBody& U, int depth = 3);

// Gauss-Legendre quadrature of the local area density over the boundary of G
// (2D: per-edge with exact breakpoints where the supporting facet of the ray
// exit changes, so the integrand is smooth on every subinterval).
MeasureEstimate ht_area_finsler(GeometryTag tag, const ConvexBody& K, const ConvexBody& G,
                                int quad_order = 8);
MeasureEstimate ht_area_finsler_surface(GeometryTag tag, const ConvexBody& K, const Surface& S,
                                        int quad_order = 8);

// Busemann measures with the normalization vol_Bus_D(D) = omega_d.
MeasureEstimate busemann_volume(const ConvexBody& D, const ConvexBody& U);
MeasureEstimate busemann_area(const ConvexBody& D, const ConvexBody& C);
MeasureEstimate busemann_area_surface(const ConvexBody& D, const Surface& S);

// lambda(D) lambda(D°) / omega_d^2.
double volume_product(const ConvexBody& D);

struct GrowthRow {
  double r = 0.0;
  double vol = 0.0;
  double area = 0.0;
};

struct GrowthProfile {
  std::vector<GrowthRow> rows;
  double slope_vol = 0.0;   // least-squares log-log slope
  double slope_area = 0.0;
};

// Ball growth in the Minkowski geometry of D (exact powers) or the Hilbert
// geometry of K at center x (quadrature volumes/areas of radial ball
// polytopes).
GrowthProfile ball_growth_minkowski(const ConvexBody& D, const std::vector<double>& radii);
GrowthProfile ball_growth_hilbert(const ConvexBody& K, const Vec& x, const std::vector<double>& radii,
                                  int n_dir = 256);

// |a-b| within k*(se_a+se_b); exact methods contribute zero spread.
bool estimates_agree(const MeasureEstimate& a, const MeasureEstimate& b, double k = 3.0,
                     double abs_tol = 1e-12);

}  // namespace hilbcover
