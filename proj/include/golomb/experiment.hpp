#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "golomb/estimators.hpp"
#include "golomb/ga.hpp"
#include "golomb/ranging.hpp"
#include "golomb/rulers.hpp"

namespace golomb::harness {

// Batch Monte Carlo ranging experiment. The noise grid is sigma_dphi for
// PDoA (converted to kappa per mark) and sigma_tau seconds for ToA;
// kappa_grid may be given instead for PDoA.
struct ExperimentSpec {
  std::vector<int> marks;     // inline ruler (absolute marks)
  std::string ruler_file;     // alternative source
  ranging::Mode mode = ranging::Mode::kPdoa;
  double delta_f_hz = 25e3;
  std::vector<double> sigma_grid;
  std::vector<double> kappa_grid;
  std::vector<std::string> estimators{"music", "rootmusic", "average"};
  bool expanded = true;
  double distance_m = 20.0;
  long trials = 1000;
  std::uint64_t seed = 1;
  bool multipoint = false;
  double music_grid = est::kDefaultGridStep;
  double max_distance_m = 100.0;  // ToA phase-scale reference
  int snapshots = 1;
};

/// Parses the JSON spec text; unknown fields are rejected.
ExperimentSpec parse_spec_json(const std::string& text);

struct TrialAggregate {
  double sigma = 0.0;
  std::string estimator;
  bool expanded = false;
  double rmse_m = 0.0;
  double bias_m = 0.0;
  long failures = 0;
  double sqrt_crlb_m = 0.0;
  long trials = 0;
  std::uint64_t seed = 0;
};

// T trials per noise level: sample marks, optionally expand, run each
// estimator, aggregate RMSE/bias against the true distance. Failures are
// counted and excluded from the error statistics. Trial i draws its stream
// from (seed, global trial index), so results are schedule-independent.
std::vector<TrialAggregate> run_experiment(const ExperimentSpec& spec,
                                           const Ruler& ruler);

struct MultipointResult {
  std::vector<std::vector<TrialAggregate>> per_ruler;
  std::vector<TrialAggregate> group_mean;
};

/// run_experiment per group ruler over a shared noise grid; the group must
/// pass check_group first.
MultipointResult run_multipoint(const ExperimentSpec& spec, const RulerGroup& group);

inline constexpr const char* kExperimentCsvHeader =
    "sigma,estimator,expanded,rmse_m,bias_m,failures,sqrt_crlb_m,trials,seed";

void write_experiment_csv(const std::string& path,
                          const std::vector<TrialAggregate>& rows);

struct BenchRow {
  int order = 0;
  int optimal_length = 0;
  int runs = 0;
  int failures = 0;
  double eta_mean = 0.0;  // over feasible runs
};

// Seeded synthesize_ruler sweeps per order with the admissible range
// {0..3*N_opt}; orders must lie in the 5..15 table.
std::vector<BenchRow> benchmark_ga(int order_lo, int order_hi, int runs,
                                   const ga::GaConfig& config, std::uint64_t seed);

void write_bench_csv(const std::string& path, const std::vector<BenchRow>& rows);

}  // namespace golomb::harness
