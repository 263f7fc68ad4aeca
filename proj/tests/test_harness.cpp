#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hilbcover/body_io.hpp"
#include "hilbcover/checks.hpp"
#include <nlohmann/json.hpp>

#include "hilbcover/experiment.hpp"

using namespace hilbcover;

TEST_CASE("parse_body_spec: generators and JSON") {
  ConvexBody cube = parse_body_spec("cube", 2);
  CHECK(cube.volume() == doctest::Approx(4.0));

  ConvexBody iv = parse_body_spec("{\"dim\":1,\"vertices\":[[-1],[1]]}");
  CHECK(iv.dim() == 1);
  CHECK(iv.volume() == doctest::Approx(2.0));

  ConvexBody r1 = parse_body_spec("random_hull:12,seed=7", 2);
  ConvexBody r2 = parse_body_spec("random_hull:12,seed=7", 2);
  REQUIRE(r1.vertices().size() == r2.vertices().size());
  for (size_t i = 0; i < r1.vertices().size(); ++i)
    CHECK((r1.vertices()[i] - r2.vertices()[i]).norm() == 0.0);

  ConvexBody ngon = parse_body_spec("ngon:7");
  CHECK(ngon.vertices().size() == 7);
  ConvexBody seg = parse_body_spec("interval:-1.5,0.5");
  CHECK(seg.vertices()[0].x() == doctest::Approx(-1.5));

  CHECK_THROWS_AS(parse_body_spec("pyramid", 2), Error);
  CHECK_THROWS_AS(parse_body_spec("{\"dim\":2}", 2), Error);
  CHECK_THROWS_AS(parse_body_spec("{\"dim\":2,\"vertices\":[[0,0],[1,0],[2,0]]}", 2), Error);
  CHECK_THROWS_AS(parse_body_spec("ngon:abc", 2), Error);
}

TEST_CASE("body json round trip") {
  ConvexBody b = parse_body_spec("random_hull:9,seed=3", 2);
  std::string j = body_to_json(b);
  ConvexBody b2 = parse_body_spec(j, 2);
  CHECK(hausdorff_distance(b, b2) < 1e-12);
}

TEST_CASE("registry covers the required checks and anchors") {
  std::vector<std::string> required = {
      "polar_involution",   "slice_project_dual",   "funk_variational",
      "hilbert_additivity", "sandwich",             "finsler_sandwich",
      "polar_sum_gauge",    "mink_stability_sharp", "hilb_stability_sharp",
      "funk_vol_duality",   "funk_area_duality",    "hilb_measure_polarity_beta",
      "mink_measure_duality", "cauchy_area",        "busemann_cube_halfspace",
      "jacobian_symmetry",  "ball_growth",          "expansion_fatness",
      "boundary_transfer",  "complementary_chord",  "rogers_shephard_union",
      "core_cover_volume"};
  for (const std::string& id : required) {
    const CheckInfo& info = find_check(id);
    CHECK(!info.anchor.empty());
  }
  CHECK_THROWS_AS(find_check("nonexistent_check"), Error);
}

TEST_CASE("run_check determinism and sharp values") {
  CheckConfig cfg;
  cfg.alpha = 0.2;
  cfg.seed = 5;
  CheckReport a = run_check("mink_stability_sharp", cfg);
  CheckReport b = run_check("mink_stability_sharp", cfg);
  CHECK(a.lhs == b.lhs);
  CHECK(a.rhs == b.rhs);
  CHECK(a.ratio == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(a.pass);

  cfg.alpha = 0.3;
  CheckReport h = run_check("hilb_stability_sharp", cfg);
  CHECK(h.ratio == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(h.pass);
}

TEST_CASE("report emission: stable bytes, runtime excluded") {
  CheckConfig cfg;
  cfg.seed = 11;
  std::vector<CheckReport> reports = {run_check("polar_involution", cfg),
                                      run_check("jacobian_symmetry", cfg)};
  reports[0].runtime_ms = 123;  // must not leak into files
  reports[1].runtime_ms = 456;
  std::string csv1 = reports_csv(reports);
  reports[0].runtime_ms = 999;
  std::string csv2 = reports_csv(reports);
  CHECK(csv1 == csv2);
  CHECK(csv1.find("123") == std::string::npos);
  std::string json = reports_json(reports);
  CHECK(json.find("\"runtime_ms\": 0") != std::string::npos);

  CHECK_THROWS_AS(reports_csv({}), Error);
  CHECK_THROWS_AS(reports_json({}), Error);
}

TEST_CASE("report json roundtrip preserves fields") {
  CheckConfig cfg;
  cfg.seed = 13;
  cfg.alpha = 0.4;
  std::vector<CheckReport> reports = {run_check("mink_stability_sharp", cfg)};
  auto parsed = nlohmann::json::parse(reports_json(reports));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["check_id"] == "mink_stability_sharp");
  CHECK(parsed[0]["lhs"].get<double>() == reports[0].lhs);
  CHECK(parsed[0]["rhs"].get<double>() == reports[0].rhs);
  CHECK(parsed[0]["ratio"].get<double>() == reports[0].ratio);
  CHECK(parsed[0]["seed"].get<std::uint64_t>() == reports[0].seed);
  CHECK(parsed[0]["pass"].get<bool>() == reports[0].pass);
}

TEST_CASE("sweep determinism and 1D exactness") {
  SweepConfig cfg;
  cfg.dim = 1;
  cfg.n_instances = 4;
  cfg.n_seeds = 2;
  cfg.alphas = {0.1, 0.3};
  cfg.seed = 17;
  SweepResult r1 = run_duality_sweep(cfg);
  SweepResult r2 = run_duality_sweep(cfg);
  CHECK(sweep_csv(r1) == sweep_csv(r2));
  // 1D both sides agree exactly (projective invariance of the cross ratio)
  for (const SweepRow& row : r1.rows) {
    CHECK(row.up_vol_primal == row.up_vol_dual);
    CHECK(row.lo_vol_primal == row.up_vol_primal);
  }
  CHECK(r1.summary.max_ratio_vol == doctest::Approx(1.0));

  // 1D brute-force covering oracle: greedy sweep over a fine sample
  ConvexBody K = make_interval(-1, 1);
  ConvexBody G = make_interval(-std::tanh(1.2), std::tanh(1.2));
  MetricSpace m = hilbert_space(K);
  for (double alpha : {0.1, 0.25, 0.6}) {
    long exact = covering_count_1d(m, G, TargetKind::Body, alpha);
    // oracle: walk from the left edge placing centers greedily
    long oracle = 0;
    double left = -std::tanh(1.2);
    double right = std::tanh(1.2);
    double pos = left;
    while (true) {
      ++oracle;
      // center at hilbert distance alpha from pos; ball covers up to +alpha more
      double c = std::tanh(std::atanh(pos) + alpha);
      double reach = std::tanh(std::atanh(c) + alpha);
      if (reach >= right - 1e-12) break;
      pos = reach;
    }
    CHECK(exact == oracle);
  }
}

TEST_CASE("2D sweep smoke: ratios within budget, clamp rate low") {
  SweepConfig cfg;
  cfg.dim = 2;
  cfg.n_instances = 3;
  cfg.n_seeds = 3;
  cfg.alphas = {0.2, 0.5};
  cfg.seed = 23;
  SweepResult r = run_duality_sweep(cfg);
  CHECK(r.summary.max_ratio_vol <= 64.0);
  CHECK(r.summary.max_ratio_bd <= 64.0);
  CHECK(r.summary.clamp_rate < 0.05);
  for (const SweepRow& row : r.rows) {
    CHECK(row.lo_vol_primal <= row.up_vol_primal);
    CHECK(row.lo_bd_primal <= row.up_bd_primal);
  }

  SweepConfig mc = cfg;
  mc.mode = "minkowski";
  SweepResult rm = run_duality_sweep(mc);
  CHECK(rm.summary.max_ratio_vol <= 64.0);
  CHECK(rm.summary.max_ratio_bd <= 64.0);
}

TEST_CASE("covering scale property: upper(r) <= 16 (r'/r)^2 upper(r')") {
  auto [G, K] = random_nested_pair(2, 31);
  MetricSpace m = hilbert_space(K);
  for (double r : {0.15, 0.25}) {
    for (double factor : {2.0, 4.0}) {
      double rp = r * factor;
      if (rp > 1.0) continue;
      CoverEstimate fine = covering_estimate(m, G, TargetKind::Body, r, 41);
      CoverEstimate coarse = covering_estimate(m, G, TargetKind::Body, rp, 41);
      CHECK(static_cast<double>(fine.upper) <=
            16.0 * factor * factor * static_cast<double>(coarse.upper));
    }
  }
}
