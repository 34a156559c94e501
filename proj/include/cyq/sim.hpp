#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "cyq/model.hpp"

namespace cyq {

enum class ServiceDistribution { exponential, deterministic };

// Fraction of the horizon discarded as warmup when no explicit value is
// given.
inline constexpr double kDefaultWarmupFraction = 0.1;

// One closed-loop run: window_n requests cycle FCFS through S_1..S_K; after
// completing at the host a request either re-enters S_1 immediately (Z = 0)
// or sits in a think stage first. The distribution tag applies to every
// service stage and, when Z > 0, to the think delays as well.
struct SimConfig {
  ServiceProfile profile;
  long window_n = 1;       // N, constant during the run
  double think_time = 0;   // Z, seconds
  ServiceDistribution distribution = ServiceDistribution::exponential;
  double horizon = 10000;  // simulated seconds
  double warmup = 1000;    // simulated seconds discarded
  int replications = 1;
  std::uint64_t seed = 0;
};

// Raw statistics of a single replication, measured over (warmup, horizon].
struct RepStats {
  double throughput = 0;    // host completions per second
  double elapsed_mean = 0;  // mean S_1..S_K residence per cycle, seconds
  Eigen::ArrayXd utilization;  // per-server busy fraction
  std::vector<long> completions;  // per-server completion counts
};

// Replication aggregate; half-widths are 95% Student-t intervals across
// replications (0 when only one replication ran).
struct SimResult {
  double throughput_mean = 0;
  double throughput_halfwidth = 0;
  double elapsed_mean = 0;
  double elapsed_halfwidth = 0;
  Eigen::ArrayXd utilization;  // per-server means
  int replications = 0;
};

// Runs one replication. The stream is derived from (config.seed,
// replication_index), so any subset of replications can be reproduced
// independently and merging is order-free.
RepStats run_replication(const SimConfig& config, int replication_index);

// Runs config.replications independent replications and aggregates.
// Deterministic: identical (seed, config) gives an identical SimResult.
SimResult simulate(const SimConfig& config);

// Two-sided 95% Student-t quantile used for the confidence intervals.
double student_t_975(int degrees_of_freedom);

}  // namespace cyq
