#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hilbcover/cover.hpp"

namespace hilbcover {

// Central tolerance table. Exact computations are held to `exact`; quadrature
// results to `quad_rel` relative; Monte Carlo comparisons to mc_sigma standard
// errors.
struct Tolerances {
  double exact = 1e-9;
  double quad_rel = 1e-6;
  double mc_sigma = 3.0;
  double cross = 1e-8;
  double dual_hausdorff = 1e-6;
  double metric = 1e-9;
  double chord = 1e-6;
  double boundary_transfer = 1e-5;
  double jacobian = 1e-12;
  double area_duality_rel = 1e-3;
  double beta_slack = 1.05;  // Monte Carlo slack multiplier on polarity bands
};

const Tolerances& tolerances();

struct CheckConfig {
  int dim = 2;
  double alpha = 0.2;
  long n_samples = 20000;
  int n_dir = 720;
  int n_instances = 0;  // 0: per-check default
  std::uint64_t seed = 1;
};

struct CheckReport {
  std::string check_id;
  std::string inputs;  // serialized instance summary
  int dim = 2;
  double alpha = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double std_error = 0.0;  // nonzero only for Monte Carlo backed checks
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  long runtime_ms = 0;  // wall time; written as 0 in emitted files
  std::string note;
};

struct CheckInfo {
  std::string id;
  std::string anchor;  // the verified statement, in plain words
  std::function<CheckReport(const CheckConfig&)> run;
};

const std::vector<CheckInfo>& check_registry();
std::vector<std::string> check_ids();
const CheckInfo& find_check(const std::string& id);
CheckReport run_check(const std::string& id, const CheckConfig& cfg);

// Shared instance generators (deterministic in the seed).
ConvexBody random_centered_body(int dim, int n, std::uint64_t seed);
// G inside K with clearance, origin interior to both.
std::pair<ConvexBody, ConvexBody> random_nested_pair(int dim, std::uint64_t seed);

}  // namespace hilbcover
