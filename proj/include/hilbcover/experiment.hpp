#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilbcover/checks.hpp"

namespace hilbcover {

// env HILBCOVER_THREADS caps worker count; runs f(i) for i in [0, n).
void parallel_for(long n, const std::function<void(long)>& f);

struct SweepConfig {
  int dim = 2;
  std::string mode = "hilbert";  // hilbert | minkowski
  int n_instances = 10;
  std::vector<double> alphas = {0.1, 0.2, 0.5, 1.0};
  int n_seeds = 5;
  std::uint64_t seed = 1;  // master seed: instances and net orders derive from it
  int n_dir = 720;
  long n_samples = 20000;
};

struct SweepRow {
  std::string instance;
  int dim = 2;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  // primal: cover the target in the primal geometry; dual: cover the polar
  // configuration
  long up_vol_primal = 0, lo_vol_primal = 0, up_vol_dual = 0, lo_vol_dual = 0;
  long up_bd_primal = 0, lo_bd_primal = 0, up_bd_dual = 0, lo_bd_dual = 0;
  bool clamped = false;
};

struct SweepCell {  // per (instance, alpha): medians over seeds
  std::string instance;
  double alpha = 0.0;
  double ratio_vol = 0.0;  // max(medU_primal/medL_dual, medU_dual/medL_primal)
  double ratio_bd = 0.0;
};

struct SweepSummary {
  double max_ratio_vol = 0.0;
  double max_ratio_bd = 0.0;
  double c_hat_vol = 0.0;  // max_ratio^(1/d)
  double c_hat_bd = 0.0;
  double clamp_rate = 0.0;
  std::vector<SweepCell> cells;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

SweepResult run_duality_sweep(const SweepConfig& cfg);

// Byte-stable serializations (runtime fields are never embedded).
std::string sweep_csv(const SweepResult& r);
std::string sweep_summary_json(const SweepResult& r);
std::string reports_csv(const std::vector<CheckReport>& reports);
std::string reports_json(const std::vector<CheckReport>& reports);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hilbcover
