#pragma once

#include <cstdint>
#include <vector>

#include "hilbcover/geometry.hpp"
#include "hilbcover/measures.hpp"
#include "hilbcover/metrics.hpp"

namespace hilbcover {

// The ambient metric structure: the Hilbert geometry of body (= K) or the
// Minkowski geometry with unit ball body (= D, centrally symmetric).
struct MetricSpace {
  GeometryTag tag = GeometryTag::Minkowski;
  ConvexBody body;
};

MetricSpace hilbert_space(ConvexBody K);
MetricSpace minkowski_space(ConvexBody D);

double metric_distance(const MetricSpace& m, const Vec& x, const Vec& y);

// C + alpha*D.
ConvexBody expand_minkowski(const ConvexBody& C, const ConvexBody& D, double alpha);

// {x : dist_H(x, G) <= alpha}, built radially from an interior anchor of G by
// bisecting the level set along each fan direction.
ConvexBody expand_hilbert(const ConvexBody& K, const ConvexBody& G, double alpha, int n_dir = 720,
                          double tol = 1e-9);

struct Net {
  std::vector<Vec> centers;
  double alpha = 0.0;
  GeometryTag metric_tag = GeometryTag::Minkowski;
  bool separated = false;       // pairwise >= alpha - tol certificate
  double separation_slack = 0;  // worst violation found when certifying
  long ground_size = 0;
  double ground_resolution = 0;  // metric spacing of the ground set
};

enum class TargetKind { Body, Boundary };

// Dense deterministic samples of a body (metric-aware grid, capped) or of its
// boundary (metric arc-length chain at resolution about alpha/20).
std::vector<Vec> interior_sample_grid(const MetricSpace& m, const ConvexBody& target, double alpha,
                                      std::size_t cap = 300000);
std::vector<Vec> boundary_sample_chain(const MetricSpace& m, const ConvexBody& target, double alpha,
                                       std::size_t cap = 60000);

// Greedy insertion over a shuffled ground set; pairwise separation is
// certified after construction.
Net maximal_separated_net(const MetricSpace& m, const std::vector<Vec>& ground, double alpha,
                          std::uint64_t seed);

struct CoverEstimate {
  long upper = 0;  // net size (median over net seeds)
  long lower = 0;  // measure bound
  double alpha = 0.0;
  TargetKind target = TargetKind::Body;
  bool clamped = false;  // lower was cut down to upper (estimation noise)
  bool exact = false;    // 1D sweep construction
};

// Upper bound from a maximal net on the target, lower bound from
// measure(target) / max ball measure over the net centers. In 1D both bounds
// collapse to the exact sweep count.
CoverEstimate covering_estimate(const MetricSpace& m, const ConvexBody& target, TargetKind kind,
                                double alpha, std::uint64_t seed, int n_net_seeds = 5);

// Exact 1D covering count (interval sweep in metric coordinates).
long covering_count_1d(const MetricSpace& m, const ConvexBody& target, TargetKind kind, double alpha);

struct BoundaryTransferResult {
  int probes = 0;
  int attained = 0;          // |min-dist - alpha| <= tol
  double max_deviation = 0;  // worst |min-dist - alpha|
  bool pass = false;
};

// For probes x on the boundary of G, the distance from x to the boundary of
// the alpha-expansion must equal alpha.
BoundaryTransferResult boundary_transfer_hilbert(const ConvexBody& K, const ConvexBody& G,
                                                 double alpha, int n_probes, std::uint64_t seed,
                                                 double tol = 1e-5, int n_dir = 4096);
BoundaryTransferResult boundary_transfer_minkowski(const ConvexBody& C, const ConvexBody& D,
                                                   double alpha, int n_probes, std::uint64_t seed,
                                                   double tol = 1e-9);

struct FatnessResult {
  double min_volume_fraction = 1.0;
  double min_area_fraction = 1.0;
  int probes = 0;
  bool pass = false;
};

// Samples boundary points and radii r <= alpha; reports the worst captured
// volume and boundary-area fractions of metric balls centered on the boundary.
FatnessResult fatness_check(const MetricSpace& m, const ConvexBody& E, double alpha,
                            double gamma_threshold, int n_probes, std::uint64_t seed);

enum class AreaNormalization { HolmesThompson, Busemann };

struct IsoperimetrySample {
  double mu = 0.0;    // volume fraction of E inside the ball
  double beta = 0.0;  // area fraction of the cut inside the open ball
};

IsoperimetrySample relative_isoperimetry_minkowski(const ConvexBody& D, const Vec& z, double r,
                                                   const ConvexBody& E,
                                                   AreaNormalization norm = AreaNormalization::HolmesThompson);
IsoperimetrySample relative_isoperimetry_hilbert(const ConvexBody& K, const Vec& x, double r,
                                                 const ConvexBody& E, std::uint64_t seed,
                                                 long n_samples = 20000);

struct ChordResult {
  Vec a = Vec::Zero(), b = Vec::Zero();
  Halfspace line_a, line_b;  // supporting lines at the endpoints
  double residual = 0.0;     // signed incidence of line_a ∩ line_b with h
  double theta = 0.0;
  std::vector<std::pair<double, double>> trace;  // (angle, residual) scan
};

// Finds a chord through x whose endpoint supporting lines meet on the line h
// (or are parallel to it). The residual function is odd under a half-turn of
// the chord, so a sign change always exists; jumps at polygon vertices are
// resolved by sweeping the supporting line through the vertex normal cone.
ChordResult complementary_chord_2d(const ConvexBody& K, const Vec& x, const Halfspace& h,
                                   double tol = 1e-6);

// Facets of intersect(E, B) that lie on the boundary of E but not on the
// boundary of B (the cut strictly inside the open ball).
Surface cut_surface_in_ball(const ConvexBody& E, const ConvexBody& B);

}  // namespace hilbcover
