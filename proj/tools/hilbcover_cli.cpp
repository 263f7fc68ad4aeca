// Command-line front end: body generation and inspection, distances, balls,
// measures, covering estimates, named verification checks, duality sweeps.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "hilbcover/body_io.hpp"
#include "hilbcover/checks.hpp"
#include "hilbcover/experiment.hpp"

using namespace hilbcover;

namespace {

Vec parse_point(const std::string& s, int dim) {
  Vec p = Vec::Zero();
  std::stringstream ss(s);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= dim) fail(ErrorCode::ParseError, "too many coordinates in point: " + s);
    p[k++] = std::stod(item);
  }
  if (k != dim) fail(ErrorCode::ParseError, "point arity mismatch: " + s);
  return p;
}

GeometryTag parse_tag(const std::string& s) {
  if (s == "funk") return GeometryTag::Funk;
  if (s == "hilbert") return GeometryTag::Hilbert;
  if (s == "minkowski") return GeometryTag::Minkowski;
  fail(ErrorCode::ParseError, "unknown geometry: " + s);
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content << std::endl;
  else
    write_text_file(out_path, content);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Funk/Hilbert/Minkowski convex geometry toolkit"};
  app.require_subcommand(1);
  app.fallthrough(true);

  int dim = 2;
  std::uint64_t seed = 1;
  double alpha = 0.2;
  long samples = 20000;
  int ndir = 720;
  std::string out_path, format = "json";
  app.add_option("--dim", dim, "ambient dimension (1-3)")->capture_default_str();
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--alpha", alpha, "radius / expansion parameter")->capture_default_str();
  app.add_option("--samples", samples, "Monte Carlo sample count")->capture_default_str();
  app.add_option("--ndir", ndir, "direction fan resolution")->capture_default_str();
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format, "json | csv")->capture_default_str();

  // body
  auto* cmd_body = app.add_subcommand("body", "parse or generate a body and print it");
  std::string body_spec;
  cmd_body->add_option("spec", body_spec, "JSON or generator spec")->required();

  // dist
  auto* cmd_dist = app.add_subcommand("dist", "distance between two points");
  std::string dist_body, dist_metric = "hilbert", dist_from, dist_to;
  cmd_dist->add_option("--body", dist_body, "ambient body (K or D)")->required();
  cmd_dist->add_option("--metric", dist_metric, "funk | hilbert | minkowski");
  cmd_dist->add_option("--from", dist_from, "point x as comma-separated coords")->required();
  cmd_dist->add_option("--to", dist_to, "point y")->required();

  // ball
  auto* cmd_ball = app.add_subcommand("ball", "metric or Finsler ball as a radial polytope");
  std::string ball_body, ball_kind = "hilbert", ball_center = "";
  double ball_r = 0.5;
  cmd_ball->add_option("--body", ball_body, "ambient body")->required();
  cmd_ball->add_option("--kind", ball_kind, "hilbert | funk-finsler | hilbert-finsler");
  cmd_ball->add_option("--center", ball_center, "center point (default: origin)");
  cmd_ball->add_option("--r", ball_r, "radius (hilbert balls)");

  // measure
  auto* cmd_measure = app.add_subcommand("measure", "volumes and boundary areas");
  std::string ms_kind = "lebesgue", ms_body, ms_region, ms_geometry = "hilbert";
  cmd_measure->add_option("--kind", ms_kind,
                          "lebesgue | ht_vol_mink | ht_area_mink | ht_area_mink_cauchy | "
                          "ht_vol_finsler | ht_area_finsler | busemann_vol | busemann_area | "
                          "volume_product | ball_growth");
  cmd_measure->add_option("--body", ms_body, "unit ball D or domain K")->required();
  cmd_measure->add_option("--region", ms_region, "measured region/body");
  cmd_measure->add_option("--geometry", ms_geometry, "funk | hilbert (finsler kinds)");

  // cover
  auto* cmd_cover = app.add_subcommand("cover", "covering estimates");
  std::string cv_body, cv_target, cv_metric = "hilbert", cv_kind = "body";
  cmd_cover->add_option("--body", cv_body, "ambient body (K or D)")->required();
  cmd_cover->add_option("--target", cv_target, "target body")->required();
  cmd_cover->add_option("--metric", cv_metric, "hilbert | minkowski");
  cmd_cover->add_option("--targetkind", cv_kind, "body | boundary");

  // check
  auto* cmd_check = app.add_subcommand("check", "run a named verification check");
  std::string check_id;
  bool check_all = false;
  cmd_check->add_option("id", check_id, "check id (see list-checks)");
  cmd_check->add_flag("--all", check_all, "run the whole registry");

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "covering duality experiment");
  std::string sw_mode = "hilbert", sw_alphas = "0.1,0.2,0.5,1.0", sw_summary;
  int sw_instances = 10, sw_seeds = 5;
  cmd_sweep->add_option("--mode", sw_mode, "hilbert | minkowski");
  cmd_sweep->add_option("--instances", sw_instances, "instance count");
  cmd_sweep->add_option("--alphas", sw_alphas, "comma-separated radii");
  cmd_sweep->add_option("--seeds", sw_seeds, "net seeds per cell");
  cmd_sweep->add_option("--summary", sw_summary, "also write a summary JSON to this path");

  auto* cmd_list = app.add_subcommand("list-checks", "print check ids and their anchors");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_body) {
      ConvexBody b = parse_body_spec(body_spec, dim);
      emit(body_to_json(b), out_path);
      return 0;
    }
    if (*cmd_dist) {
      ConvexBody b = parse_body_spec(dist_body, dim);
      Vec x = parse_point(dist_from, b.dim());
      Vec y = parse_point(dist_to, b.dim());
      double d;
      if (dist_metric == "funk") d = funk_distance(b, x, y);
      else if (dist_metric == "hilbert") d = hilbert_distance(b, x, y);
      else if (dist_metric == "minkowski") d = b.gauge(y - x);
      else fail(ErrorCode::ParseError, "unknown metric: " + dist_metric);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      emit(buf, out_path);
      return 0;
    }
    if (*cmd_ball) {
      ConvexBody b = parse_body_spec(ball_body, dim);
      Vec c = ball_center.empty() ? Vec(Vec::Zero()) : parse_point(ball_center, b.dim());
      FinslerBall ball;
      if (ball_kind == "hilbert") ball = hilbert_ball(b, c, ball_r, ndir);
      else if (ball_kind == "funk-finsler") ball = funk_finsler_ball(b, c, ndir);
      else if (ball_kind == "hilbert-finsler") ball = hilbert_finsler_ball(b, c, ndir);
      else fail(ErrorCode::ParseError, "unknown ball kind: " + ball_kind);
      emit(body_to_json(ball.to_body()), out_path);
      return 0;
    }
    if (*cmd_measure) {
      ConvexBody b = parse_body_spec(ms_body, dim);
      auto region = [&] { return parse_body_spec(ms_region.empty() ? ms_body : ms_region, dim); };
      if (ms_kind == "lebesgue") {
        ConvexBody r = region();
        char buf[128];
        std::snprintf(buf, sizeof buf, "{\"volume\": %.17g, \"boundary\": %.17g}", r.volume(),
                      r.boundary_measure());
        emit(buf, out_path);
        return 0;
      }
      MeasureEstimate m;
      if (ms_kind == "ht_vol_mink") m = ht_volume_minkowski(b, region());
      else if (ms_kind == "ht_area_mink") m = ht_area_minkowski(b, region());
      else if (ms_kind == "ht_area_mink_cauchy") m = ht_area_minkowski_cauchy(b, region());
      else if (ms_kind == "ht_vol_finsler")
        m = ht_volume_finsler(parse_tag(ms_geometry), b, region(), samples, seed);
      else if (ms_kind == "ht_area_finsler") m = ht_area_finsler(parse_tag(ms_geometry), b, region());
      else if (ms_kind == "busemann_vol") m = busemann_volume(b, region());
      else if (ms_kind == "busemann_area") m = busemann_area(b, region());
      else if (ms_kind == "volume_product") {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", volume_product(b));
        emit(buf, out_path);
        return 0;
      } else if (ms_kind == "ball_growth") {
        std::vector<double> radii;
        for (int i = 0; i < 8; ++i) radii.push_back(0.05 * std::pow(20.0, i / 7.0));
        GrowthProfile prof = ms_geometry == "minkowski"
                                 ? ball_growth_minkowski(b, radii)
                                 : ball_growth_hilbert(b, Vec::Zero(), radii, ndir);
        std::string s = "r,vol,area\n";
        for (const GrowthRow& row : prof.rows) {
          char buf[128];
          std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", row.r, row.vol, row.area);
          s += buf;
        }
        char buf[128];
        std::snprintf(buf, sizeof buf, "# slope_vol=%.6f slope_area=%.6f\n", prof.slope_vol,
                      prof.slope_area);
        s += buf;
        emit(s, out_path);
        return 0;
      } else {
        fail(ErrorCode::ParseError, "unknown measure kind: " + ms_kind);
      }
      emit(measure_to_json(m), out_path);
      return 0;
    }
    if (*cmd_cover) {
      ConvexBody ambient = parse_body_spec(cv_body, dim);
      ConvexBody target = parse_body_spec(cv_target, dim);
      MetricSpace m = cv_metric == "hilbert" ? hilbert_space(ambient) : minkowski_space(ambient);
      TargetKind kind = cv_kind == "boundary" ? TargetKind::Boundary : TargetKind::Body;
      CoverEstimate est = covering_estimate(m, target, kind, alpha, seed);
      emit(cover_to_json(est), out_path);
      return 0;
    }
    if (*cmd_list) {
      for (const CheckInfo& c : check_registry()) std::printf("%-28s %s\n", c.id.c_str(), c.anchor.c_str());
      return 0;
    }
    if (*cmd_check) {
      CheckConfig cfg;
      cfg.dim = dim;
      cfg.alpha = alpha;
      cfg.n_samples = samples;
      cfg.n_dir = ndir;
      cfg.seed = seed;
      std::vector<CheckReport> reports;
      if (check_all || check_id == "all") {
        for (const CheckInfo& c : check_registry()) reports.push_back(run_check(c.id, cfg));
      } else if (!check_id.empty()) {
        reports.push_back(run_check(check_id, cfg));
      } else {
        fail(ErrorCode::UnknownCheck, "give a check id or --all");
      }
      bool all_pass = true;
      for (const CheckReport& r : reports) {
        all_pass = all_pass && r.pass;
        std::fprintf(stderr, "[%s] %-28s lhs=%.6g rhs=%.6g ratio=%.6g tol=%.3g (%ld ms)\n",
                     r.pass ? "PASS" : "FAIL", r.check_id.c_str(), r.lhs, r.rhs, r.ratio,
                     r.tolerance, r.runtime_ms);
      }
      emit(format == "csv" ? reports_csv(reports) : reports_json(reports), out_path);
      return all_pass ? 0 : 1;
    }
    if (*cmd_sweep) {
      SweepConfig cfg;
      cfg.dim = dim;
      cfg.mode = sw_mode;
      cfg.n_instances = sw_instances;
      cfg.n_seeds = sw_seeds;
      cfg.seed = seed;
      cfg.n_dir = ndir;
      cfg.n_samples = samples;
      cfg.alphas.clear();
      std::stringstream ss(sw_alphas);
      std::string item;
      while (std::getline(ss, item, ',')) cfg.alphas.push_back(std::stod(item));
      SweepResult res = run_duality_sweep(cfg);
      emit(sweep_csv(res), out_path);
      if (!sw_summary.empty()) write_text_file(sw_summary, sweep_summary_json(res));
      std::fprintf(stderr, "max_ratio_vol=%.3f max_ratio_bd=%.3f c_hat_vol=%.3f c_hat_bd=%.3f\n",
                   res.summary.max_ratio_vol, res.summary.max_ratio_bd, res.summary.c_hat_vol,
                   res.summary.c_hat_bd);
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
