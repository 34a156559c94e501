#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "cyq/errors.hpp"

namespace cyq {

// Ordered mean service times for the cyclic link S_1..S_K; the last entry is
// the knowledge-base host. Construction rejects empty profiles and
// nonpositive or nonfinite entries. Indices on the public surface are
// 1-based, matching the S_i naming; times() exposes the raw 0-based array
// for vectorized math.
class ServiceProfile {
 public:
  explicit ServiceProfile(Eigen::ArrayXd service_times);

  Eigen::Index size() const { return times_.size(); }
  const Eigen::ArrayXd& times() const { return times_; }

  // 1-based access; throws IndexOutOfRange.
  double service_time(Eigen::Index server) const;

 private:
  Eigen::ArrayXd times_;
};

// Derived aggregates of one profile.
struct SystemSummary {
  double sigma = 0;                   // sigma(s), seconds
  double s_max = 0;                   // slowest server's time, seconds
  Eigen::Index bottleneck_index = 0;  // 1-based; smallest index on ties
  double gamma_min = 0;               // 1/sigma, requests/second
  double gamma_max = 0;               // 1/s_max, requests/second
};

// User-side workload parameters. workstations_m == 0 means "not supplied";
// the window bound N <= M is only enforced when M is given.
struct WorkloadSpec {
  long window_n = 0;        // N, requests kept inside the system
  long workstations_m = 0;  // M, total users
  double think_time = 0;    // T(u), seconds
  int transactions = 1;     // n, transactions per session
};

ServiceProfile validate_profile(const std::vector<double>& raw_times);
void validate_workload(const WorkloadSpec& spec);

SystemSummary summarize(const ServiceProfile& profile);

// New profile with entries i and j exchanged (1-based); the input is left
// untouched.
ServiceProfile swap_servers(const ServiceProfile& profile, Eigen::Index i,
                            Eigen::Index j);

// (index, service time) pairs sorted slowest first; ties broken by ascending
// index, so the first entry is the bottleneck.
std::vector<std::pair<Eigen::Index, double>> ranked_servers(
    const ServiceProfile& profile);

}  // namespace cyq
