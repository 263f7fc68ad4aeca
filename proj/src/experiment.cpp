#include "hilbcover/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <thread>

#include "hilbcover/rng.hpp"

namespace hilbcover {

void parallel_for(long n, const std::function<void(long)>& f) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 4;
  if (const char* env = std::getenv("HILBCOVER_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(std::max<long>(n, 1)));
  if (workers <= 1) {
    for (long i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<long> next(0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        long i = next.fetch_add(1);
        if (i >= n) return;
        f(i);
      }
    });
  for (auto& t : pool) t.join();
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Translative covering bounds for centered (possibly asymmetric) D: the cover
// condition is gauge_D(z - c) <= alpha. Boundary lower bounds measure with the
// symmetric core of D so that monotonicity applies.
struct TranslativeSuite {
  ConvexBody C, D, Dcore;
  ConvexBody pC, pD, pDcore;  // polar side: cover polar(D) by translates of alpha*polar(C)

  TranslativeSuite(ConvexBody c, ConvexBody d)
      : C(std::move(c)),
        D(std::move(d)),
        Dcore(symmetrize(D, SymmetrizeMode::Core)),
        pC(polar(C)),
        pD(polar(D)),
        pDcore(symmetrize(pC, SymmetrizeMode::Core)) {}
};

std::vector<Vec> translative_ground(const ConvexBody& target, const ConvexBody& gauge_body,
                                    TargetKind kind, double alpha, std::size_t cap) {
  MetricSpace m = minkowski_space(symmetrize(gauge_body, SymmetrizeMode::Core));
  return kind == TargetKind::Body ? interior_sample_grid(m, target, alpha, cap)
                                  : boundary_sample_chain(m, target, alpha, cap);
}

long translative_upper(const std::vector<Vec>& ground, const ConvexBody& D, double alpha,
                       std::uint64_t seed) {
  std::vector<int> order(ground.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  CounterRng rng(seed);
  shuffle(order, rng);
  double reach = 0;
  for (const Vec& v : D.vertices()) reach = std::max(reach, v.norm());
  reach *= alpha;
  std::vector<Vec> centers;
  for (int id : order) {
    const Vec& s = ground[id];
    bool covered = false;
    for (const Vec& c : centers) {
      if ((s - c).norm() > reach) continue;
      if (D.gauge(s - c) <= alpha) {
        covered = true;
        break;
      }
    }
    if (!covered) centers.push_back(s);
  }
  return static_cast<long>(centers.size());
}

long translative_lower(const TranslativeSuite& suite, bool polar_side, TargetKind kind,
                       double alpha) {
  const ConvexBody& target = polar_side ? suite.pD : suite.C;
  const ConvexBody& ball = polar_side ? suite.pC : suite.D;
  const ConvexBody& core = polar_side ? suite.pDcore : suite.Dcore;
  const int d = target.dim();
  double measure, per_ball;
  if (kind == TargetKind::Body) {
    measure = target.volume();
    per_ball = std::pow(alpha, d) * ball.volume();
  } else {
    measure = ht_area_minkowski(core, target).value;
    per_ball = std::pow(alpha, d - 1) * ht_area_minkowski(core, ball).value;
  }
  return std::max<long>(1, static_cast<long>(std::ceil(measure / per_ball - 1e-9)));
}

struct CellKey {
  std::string instance;
  double alpha;
  bool operator<(const CellKey& o) const {
    if (instance != o.instance) return instance < o.instance;
    return alpha < o.alpha;
  }
};

long median_of(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

SweepResult run_duality_sweep(const SweepConfig& cfg) {
  SweepResult out;
  out.config = cfg;
  const bool hilbert_mode = cfg.mode == "hilbert";
  if (!hilbert_mode && cfg.mode != "minkowski")
    fail(ErrorCode::ValidationError, "sweep mode must be hilbert or minkowski");
  for (double a : cfg.alphas)
    if (a <= 0 || (hilbert_mode && a > 1))
      fail(ErrorCode::RadiusOutOfRange, "hilbert sweeps need radii in (0,1]");

  // instances
  struct Instance {
    std::string name;
    ConvexBody primal_target, primal_ambient;  // (G, K) or (C, D)
    ConvexBody dual_target, dual_ambient;      // (K*, G*) or (D*, C*)
  };
  std::vector<Instance> instances;
  for (int i = 0; i < cfg.n_instances; ++i) {
    std::uint64_t s = cfg.seed * 1000003ULL + i;
    if (cfg.dim == 1) {
      CounterRng rng(s);
      double k0 = -1 - rng.u01(0, 0), k1 = 1 + rng.u01(0, 1);
      double g0 = k0 * (0.3 + 0.5 * rng.u01(0, 2));
      double g1 = k1 * (0.3 + 0.5 * rng.u01(0, 3));
      ConvexBody K = make_interval(k0, k1), G = make_interval(g0, g1);
      if (hilbert_mode) {
        instances.push_back({"i" + std::to_string(i), G, K, polar(K), polar(G)});
      } else {
        ConvexBody C = symmetrize(recentered(G), SymmetrizeMode::Union);
        ConvexBody D = symmetrize(recentered(K), SymmetrizeMode::Union);
        instances.push_back({"i" + std::to_string(i), C, D, polar(D), polar(C)});
      }
    } else if (hilbert_mode) {
      auto [G, K] = random_nested_pair(cfg.dim, s);
      instances.push_back({"i" + std::to_string(i), G, K, polar(K), polar(G)});
    } else {
      ConvexBody C = random_centered_body(cfg.dim, 9, s);
      ConvexBody D = random_centered_body(cfg.dim, 9, s + 131071);
      instances.push_back({"i" + std::to_string(i), C, D, polar(D), polar(C)});
    }
  }

  const long n_rows = static_cast<long>(instances.size() * cfg.alphas.size() * cfg.n_seeds);
  out.rows.resize(n_rows);

  parallel_for(n_rows, [&](long row) {
    long per_inst = static_cast<long>(cfg.alphas.size()) * cfg.n_seeds;
    int inst = static_cast<int>(row / per_inst);
    int rem = static_cast<int>(row % per_inst);
    int ai = rem / cfg.n_seeds;
    int si = rem % cfg.n_seeds;
    const Instance& I = instances[inst];
    double alpha = cfg.alphas[ai];
    std::uint64_t row_seed = cfg.seed + 7919 * (si + 1);

    SweepRow& R = out.rows[row];
    R.instance = I.name;
    R.dim = cfg.dim;
    R.alpha = alpha;
    R.seed = row_seed;

    if (hilbert_mode) {
      MetricSpace mp = hilbert_space(I.primal_ambient);
      MetricSpace md = hilbert_space(I.dual_ambient);
      CoverEstimate vp = covering_estimate(mp, I.primal_target, TargetKind::Body, alpha, row_seed, 1);
      CoverEstimate vd = covering_estimate(md, I.dual_target, TargetKind::Body, alpha, row_seed, 1);
      CoverEstimate bp =
          covering_estimate(mp, I.primal_target, TargetKind::Boundary, alpha, row_seed, 1);
      CoverEstimate bd =
          covering_estimate(md, I.dual_target, TargetKind::Boundary, alpha, row_seed, 1);
      R.up_vol_primal = vp.upper;
      R.lo_vol_primal = vp.lower;
      R.up_vol_dual = vd.upper;
      R.lo_vol_dual = vd.lower;
      R.up_bd_primal = bp.upper;
      R.lo_bd_primal = bp.lower;
      R.up_bd_dual = bd.upper;
      R.lo_bd_dual = bd.lower;
      R.clamped = vp.clamped || vd.clamped || bp.clamped || bd.clamped;
    } else {
      TranslativeSuite suite(I.primal_target, I.primal_ambient);
      if (cfg.dim == 1) {
        MetricSpace mp = minkowski_space(suite.Dcore);
        MetricSpace md = minkowski_space(suite.pDcore);
        R.up_vol_primal = R.lo_vol_primal =
            covering_count_1d(mp, suite.C, TargetKind::Body, alpha);
        R.up_vol_dual = R.lo_vol_dual = covering_count_1d(md, suite.pD, TargetKind::Body, alpha);
        R.up_bd_primal = R.lo_bd_primal =
            covering_count_1d(mp, suite.C, TargetKind::Boundary, alpha);
        R.up_bd_dual = R.lo_bd_dual = covering_count_1d(md, suite.pD, TargetKind::Boundary, alpha);
      } else {
        auto run_side = [&](bool polar_side, TargetKind kind, long& up, long& lo) {
          const ConvexBody& target = polar_side ? suite.pD : suite.C;
          const ConvexBody& ball = polar_side ? suite.pC : suite.D;
          std::vector<Vec> ground = translative_ground(target, ball, kind, alpha, 200000);
          up = translative_upper(ground, ball, alpha, row_seed);
          lo = translative_lower(suite, polar_side, kind, alpha);
          if (lo > up) {
            lo = up;
            R.clamped = true;
          }
        };
        run_side(false, TargetKind::Body, R.up_vol_primal, R.lo_vol_primal);
        run_side(true, TargetKind::Body, R.up_vol_dual, R.lo_vol_dual);
        run_side(false, TargetKind::Boundary, R.up_bd_primal, R.lo_bd_primal);
        run_side(true, TargetKind::Boundary, R.up_bd_dual, R.lo_bd_dual);
      }
    }
  });

  // summary: per-(instance, alpha) medians over seeds
  std::map<CellKey, std::vector<const SweepRow*>> cells;
  for (const SweepRow& r : out.rows) cells[{r.instance, r.alpha}].push_back(&r);
  long clamped = 0;
  for (const SweepRow& r : out.rows) clamped += r.clamped ? 1 : 0;
  out.summary.clamp_rate = n_rows > 0 ? static_cast<double>(clamped) / n_rows : 0.0;
  for (const auto& [key, rows] : cells) {
    std::vector<long> upv, lov, upv2, lov2, upb, lob, upb2, lob2;
    for (const SweepRow* r : rows) {
      upv.push_back(r->up_vol_primal);
      lov.push_back(r->lo_vol_primal);
      upv2.push_back(r->up_vol_dual);
      lov2.push_back(r->lo_vol_dual);
      upb.push_back(r->up_bd_primal);
      lob.push_back(r->lo_bd_primal);
      upb2.push_back(r->up_bd_dual);
      lob2.push_back(r->lo_bd_dual);
    }
    SweepCell cell;
    cell.instance = key.instance;
    cell.alpha = key.alpha;
    cell.ratio_vol =
        std::max(static_cast<double>(median_of(upv)) / median_of(lov2),
                 static_cast<double>(median_of(upv2)) / median_of(lov));
    cell.ratio_bd = std::max(static_cast<double>(median_of(upb)) / median_of(lob2),
                             static_cast<double>(median_of(upb2)) / median_of(lob));
    out.summary.cells.push_back(cell);
    out.summary.max_ratio_vol = std::max(out.summary.max_ratio_vol, cell.ratio_vol);
    out.summary.max_ratio_bd = std::max(out.summary.max_ratio_bd, cell.ratio_bd);
  }
  out.summary.c_hat_vol = std::pow(out.summary.max_ratio_vol, 1.0 / cfg.dim);
  out.summary.c_hat_bd = std::pow(out.summary.max_ratio_bd, 1.0 / cfg.dim);
  return out;
}

std::string sweep_csv(const SweepResult& r) {
  std::string s =
      "instance,dim,mode,alpha,seed,up_vol_primal,lo_vol_primal,up_vol_dual,lo_vol_dual,"
      "up_bd_primal,lo_bd_primal,up_bd_dual,lo_bd_dual,ratio_vol_row,ratio_bd_row,clamped\n";
  for (const SweepRow& row : r.rows) {
    double rv = std::max(static_cast<double>(row.up_vol_primal) / row.lo_vol_dual,
                         static_cast<double>(row.up_vol_dual) / row.lo_vol_primal);
    double rb = std::max(static_cast<double>(row.up_bd_primal) / row.lo_bd_dual,
                         static_cast<double>(row.up_bd_dual) / row.lo_bd_primal);
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s,%d,%s,%s,%llu,%ld,%ld,%ld,%ld,%ld,%ld,%ld,%ld,%s,%s,%d\n",
                  row.instance.c_str(), row.dim, r.config.mode.c_str(),
                  fmt_double(row.alpha).c_str(), static_cast<unsigned long long>(row.seed),
                  row.up_vol_primal, row.lo_vol_primal, row.up_vol_dual, row.lo_vol_dual,
                  row.up_bd_primal, row.lo_bd_primal, row.up_bd_dual, row.lo_bd_dual,
                  fmt_double(rv).c_str(), fmt_double(rb).c_str(), row.clamped ? 1 : 0);
    s += buf;
  }
  return s;
}

std::string sweep_summary_json(const SweepResult& r) {
  std::string s = "{\n";
  s += "  \"mode\": \"" + r.config.mode + "\",\n";
  s += "  \"dim\": " + std::to_string(r.config.dim) + ",\n";
  s += "  \"seed\": " + std::to_string(r.config.seed) + ",\n";
  s += "  \"rows\": " + std::to_string(r.rows.size()) + ",\n";
  s += "  \"max_ratio_vol\": " + fmt_double(r.summary.max_ratio_vol) + ",\n";
  s += "  \"max_ratio_bd\": " + fmt_double(r.summary.max_ratio_bd) + ",\n";
  s += "  \"c_hat_vol\": " + fmt_double(r.summary.c_hat_vol) + ",\n";
  s += "  \"c_hat_bd\": " + fmt_double(r.summary.c_hat_bd) + ",\n";
  s += "  \"clamp_rate\": " + fmt_double(r.summary.clamp_rate) + ",\n";
  s += "  \"cells\": [\n";
  for (size_t i = 0; i < r.summary.cells.size(); ++i) {
    const SweepCell& c = r.summary.cells[i];
    s += "    {\"instance\": \"" + c.instance + "\", \"alpha\": " + fmt_double(c.alpha) +
         ", \"ratio_vol\": " + fmt_double(c.ratio_vol) +
         ", \"ratio_bd\": " + fmt_double(c.ratio_bd) + "}";
    s += i + 1 < r.summary.cells.size() ? ",\n" : "\n";
  }
  s += "  ]\n}\n";
  return s;
}

std::string reports_csv(const std::vector<CheckReport>& reports) {
  if (reports.empty()) fail(ErrorCode::IoError, "no reports to emit");
  std::string s = "check_id,dim,alpha,seed,lhs,rhs,ratio,std_error,pass,runtime_ms\n";
  for (const CheckReport& r : reports) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s,%d,%s,%llu,%s,%s,%s,%s,%d,0\n", r.check_id.c_str(), r.dim,
                  fmt_double(r.alpha).c_str(), static_cast<unsigned long long>(r.seed),
                  fmt_double(r.lhs).c_str(), fmt_double(r.rhs).c_str(), fmt_double(r.ratio).c_str(),
                  fmt_double(r.std_error).c_str(), r.pass ? 1 : 0);
    s += buf;
  }
  return s;
}

std::string reports_json(const std::vector<CheckReport>& reports) {
  if (reports.empty()) fail(ErrorCode::IoError, "no reports to emit");
  std::string s = "[\n";
  for (size_t i = 0; i < reports.size(); ++i) {
    const CheckReport& r = reports[i];
    s += "  {\"check_id\": \"" + r.check_id + "\", \"inputs\": \"" + r.inputs + "\"";
    s += ", \"dim\": " + std::to_string(r.dim);
    s += ", \"alpha\": " + fmt_double(r.alpha);
    s += ", \"seed\": " + std::to_string(r.seed);
    s += ", \"lhs\": " + fmt_double(r.lhs);
    s += ", \"rhs\": " + fmt_double(r.rhs);
    s += ", \"ratio\": " + fmt_double(r.ratio);
    s += ", \"std_error\": " + fmt_double(r.std_error);
    s += ", \"tolerance\": " + fmt_double(r.tolerance);
    s += std::string(", \"pass\": ") + (r.pass ? "true" : "false");
    s += ", \"runtime_ms\": 0";
    if (!r.note.empty()) s += ", \"note\": \"" + r.note + "\"";
    s += "}";
    s += i + 1 < reports.size() ? ",\n" : "\n";
  }
  s += "]\n";
  return s;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path);
  out << content;
  if (!out) fail(ErrorCode::IoError, "failed writing " + path);
}

}  // namespace hilbcover
