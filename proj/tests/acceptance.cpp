// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "hilbcover/body_io.hpp"
#include "hilbcover/checks.hpp"
#include "hilbcover/experiment.hpp"
#include "hilbcover/rng.hpp"

using namespace hilbcover;

namespace {

struct Outcome {
  int id;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;  // 0 = unbudgeted
  std::string detail;
};

std::vector<Outcome> outcomes;

template <typename F>
void criterion(int id, const std::string& title, double budget_seconds, F&& body) {
  Outcome o;
  o.id = id;
  o.title = title;
  o.budget_seconds = budget_seconds;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [pass, detail] = body();
    o.pass = pass;
    o.detail = detail;
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  o.seconds =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count() /
      1000.0;
  if (o.budget_seconds > 0 && o.seconds > o.budget_seconds) {
    o.pass = false;
    o.detail += " [over runtime budget]";
  }
  std::printf("[%s] criterion %2d: %-46s (%7.2f s)  %s\n", o.pass ? "PASS" : "FAIL", o.id,
              o.title.c_str(), o.seconds, o.detail.c_str());
  std::fflush(stdout);
  outcomes.push_back(o);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

int main() {
  std::printf("acceptance suite\n================\n");

  criterion(1, "sharp distortion, minkowski (ratio 3 exactly)", 1.0, [] {
    bool ok = true;
    double worst = 0;
    for (double alpha : {0.1, 0.2, 0.5}) {
      CheckConfig cfg;
      cfg.alpha = alpha;
      CheckReport r = run_check("mink_stability_sharp", cfg);
      worst = std::max(worst, std::abs(r.ratio - 3.0));
      ok = ok && r.pass;
    }
    return std::pair(ok && worst <= 1e-9, "max |ratio-3| = " + fmt(worst));
  });

  criterion(2, "sharp distortion, hilbert (ratio 3 exactly)", 1.0, [] {
    bool ok = true;
    double worst = 0;
    for (double alpha : {0.1, 0.3, 0.5}) {
      CheckConfig cfg;
      cfg.alpha = alpha;
      CheckReport r = run_check("hilb_stability_sharp", cfg);
      worst = std::max(worst, std::abs(r.ratio - 3.0));
      ok = ok && r.pass;
    }
    return std::pair(ok && worst <= 1e-9, "max |ratio-3| = " + fmt(worst));
  });

  criterion(3, "funk measure duality (volume MC, area quadrature)", 120.0, [] {
    CheckConfig cfg;
    cfg.n_instances = 20;
    cfg.n_samples = 20000;
    CheckReport vol = run_check("funk_vol_duality", cfg);
    CheckReport area = run_check("funk_area_duality", cfg);
    return std::pair(vol.pass && area.pass, "worst vol residual = " + fmt(vol.ratio) +
                                                " se units; worst area rel = " + fmt(area.ratio));
  });

  criterion(4, "hilbert measure polarity band (beta2 = 3/2, beta1 = 1)", 120.0, [] {
    CheckConfig cfg;
    cfg.n_instances = 10;
    cfg.n_samples = 20000;
    CheckReport r = run_check("hilb_measure_polarity_beta", cfg);
    return std::pair(r.pass, "worst vol ratio = " + fmt(r.lhs) + ", worst area ratio = " + fmt(r.rhs));
  });

  criterion(5, "minkowski HT duality (exact, 1e-6 relative)", 10.0, [] {
    CheckConfig cfg;
    cfg.n_instances = 20;
    CheckReport r = run_check("mink_measure_duality", cfg);
    return std::pair(r.pass, "worst relative residual = " + fmt(r.ratio));
  });

  criterion(6, "cube-halfspace busemann isoperimetry (1/2d exact)", 0, [] {
    CheckConfig cfg;
    CheckReport r = run_check("busemann_cube_halfspace", cfg);
    return std::pair(r.pass, "worst residual = " + fmt(r.ratio));
  });

  criterion(7, "jacobian symmetry (1e4 pairs, 1e-12)", 0, [] {
    CheckConfig cfg;
    cfg.n_samples = 10000;
    CheckReport r = run_check("jacobian_symmetry", cfg);
    return std::pair(r.pass, "max |det fwd - det bwd| = " + fmt(r.lhs));
  });

  criterion(8, "projection-section duality (100+ subspaces, 1e-6)", 0, [] {
    CheckConfig cfg;
    cfg.n_instances = 50;  // 50 * (1 line + 1 line + 1 plane) = 150 cases
    CheckReport r = run_check("slice_project_dual", cfg);
    return std::pair(r.pass, "max hausdorff residual = " + fmt(r.lhs));
  });

  criterion(9, "hilbert ball growth slopes (2D, r in [0.05,1])", 120.0, [] {
    CheckConfig cfg;
    cfg.n_instances = 5;
    CheckReport r = run_check("ball_growth", cfg);
    return std::pair(r.pass, "volume slopes in [" + fmt(r.lhs) + ", " + fmt(r.rhs) +
                                 "], max area slope = " + fmt(r.ratio));
  });

  criterion(10, "expansion fatness (mink >= 2^-d - 0.02; hilbert logged)", 0, [] {
    CheckConfig cfg;
    cfg.n_instances = 5;
    CheckReport r = run_check("expansion_fatness", cfg);
    return std::pair(r.pass, "min mink fraction = " + fmt(r.lhs) +
                                 ", min hilbert fraction = " + fmt(r.rhs));
  });

  criterion(11, "boundary transfer (200 probes attain alpha at 1e-5)", 0, [] {
    CheckConfig cfg;
    cfg.n_instances = 10;  // x 20 probes
    CheckReport r = run_check("boundary_transfer", cfg);
    std::ostringstream os;
    os << static_cast<long>(r.lhs) << "/" << static_cast<long>(r.rhs)
       << " attained, worst deviation = " << fmt(r.ratio);
    return std::pair(r.pass, os.str());
  });

  criterion(12, "complementary chords (100 triples, residual 1e-6)", 0, [] {
    CheckConfig cfg;
    cfg.n_instances = 100;
    CheckReport r = run_check("complementary_chord", cfg);
    return std::pair(r.pass, "worst incidence residual = " + fmt(r.lhs));
  });

  criterion(13, "covering duality envelope (2D suites + 1D exact)", 600.0, [] {
    std::ostringstream os;
    bool ok = true;

    SweepConfig h2;
    h2.dim = 2;
    h2.mode = "hilbert";
    h2.n_instances = 10;
    h2.alphas = {0.1, 0.2, 0.5, 1.0};
    h2.n_seeds = 5;
    h2.seed = 1;
    SweepResult rh = run_duality_sweep(h2);
    ok = ok && rh.summary.max_ratio_vol <= 64.0 && rh.summary.max_ratio_bd <= 64.0;
    os << "hilbert2d ratios vol/bd = " << fmt(rh.summary.max_ratio_vol) << "/"
       << fmt(rh.summary.max_ratio_bd);

    SweepConfig m2 = h2;
    m2.mode = "minkowski";
    m2.seed = 2;
    SweepResult rm = run_duality_sweep(m2);
    ok = ok && rm.summary.max_ratio_vol <= 64.0 && rm.summary.max_ratio_bd <= 64.0;
    os << "; mink2d = " << fmt(rm.summary.max_ratio_vol) << "/" << fmt(rm.summary.max_ratio_bd);

    // 1D: the sweep counts must match an independent greedy covering oracle
    SweepConfig h1 = h2;
    h1.dim = 1;
    h1.seed = 3;
    SweepResult r1 = run_duality_sweep(h1);
    ok = ok && r1.summary.max_ratio_vol <= 3.0 && r1.summary.max_ratio_bd <= 3.0;
    bool oracle_ok = true;
    for (int i = 0; i < 10 && oracle_ok; ++i) {
      CounterRng rng(3 * 1000003ULL + i);
      double k0 = -1 - rng.u01(0, 0), k1 = 1 + rng.u01(0, 1);
      double g0 = k0 * (0.3 + 0.5 * rng.u01(0, 2));
      double g1 = k1 * (0.3 + 0.5 * rng.u01(0, 3));
      ConvexBody K = make_interval(k0, k1), G = make_interval(g0, g1);
      MetricSpace m = hilbert_space(K);
      auto phi = [&](double x) { return std::atanh(2 * (x - k0) / (k1 - k0) - 1); };
      for (double alpha : h1.alphas) {
        long exact = covering_count_1d(m, G, TargetKind::Body, alpha);
        long oracle = 0;
        double pos = phi(g0), right = phi(g1);
        while (true) {
          ++oracle;
          if (pos + 2 * alpha >= right - 1e-12) break;
          pos += 2 * alpha;
        }
        if (exact != oracle) oracle_ok = false;
      }
    }
    ok = ok && oracle_ok;
    os << "; 1D " << (oracle_ok ? "matches brute-force oracle" : "ORACLE MISMATCH");
    return std::pair(ok, os.str());
  });

  criterion(14, "rogers-shephard symmetrization (50 bodies, exact)", 0, [] {
    CheckConfig cfg;
    cfg.n_instances = 50;
    CheckReport r = run_check("rogers_shephard_union", cfg);
    return std::pair(r.pass, "worst amplification = " + fmt(r.lhs) + " <= C(4,2) = 6");
  });

  criterion(15, "sweep determinism (byte-identical CSV)", 0, [] {
    SweepConfig cfg;
    cfg.dim = 2;
    cfg.mode = "hilbert";
    cfg.n_instances = 4;
    cfg.alphas = {0.2, 0.5};
    cfg.n_seeds = 3;
    cfg.seed = 77;
    std::string a = sweep_csv(run_duality_sweep(cfg));
    std::string b = sweep_csv(run_duality_sweep(cfg));
    bool same = a == b;
    return std::pair(same, same ? "identical bytes (SHA-256 equality follows)" : "MISMATCH");
  });

  int failed = 0;
  for (const Outcome& o : outcomes) failed += o.pass ? 0 : 1;
  std::printf("================\n%zu criteria, %d failed\n", outcomes.size(), failed);
  return failed == 0 ? 0 : 1;
}
