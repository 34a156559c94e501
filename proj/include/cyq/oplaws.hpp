#pragma once

#include <utility>
#include <vector>

#include "cyq/model.hpp"

namespace cyq {

enum class Source { approximate, exact };

// One responsiveness evaluation R = sigma / (sigma + elapsed), kept as a
// fraction in (0, 1]; rendering to percent happens at the presentation
// layer.
struct ResponsivenessPoint {
  long window_n = 0;       // N the point was computed for
  double elapsed = 0;      // E(N) used, seconds
  double responsiveness = 0;
  Source source = Source::approximate;
};

// Congestion limits: N* requests inside the system, M* connected users.
struct CriticalPoints {
  long n_star = 0;
  long m_star = 0;
};

// Utilization law rho = throughput * service_time. Values above 1 signal an
// infeasible input rate and are returned unclamped for diagnosis.
double utilization(double throughput, double service_time);

// (1/sigma, 1/s_max): the range the mean system throughput is confined to.
std::pair<double, double> throughput_bounds(const SystemSummary& summary);

// Saturated-regime estimate E(N) ~= N * s_max.
double elapsed_asymptotic(const SystemSummary& summary, long window_n);

ResponsivenessPoint responsiveness_exact(const SystemSummary& summary,
                                         double elapsed, long window_n = 0);

ResponsivenessPoint responsiveness_approx(const SystemSummary& summary,
                                          long window_n);

// One approximate point per N in [n_from, n_to].
std::vector<ResponsivenessPoint> responsiveness_table(
    const SystemSummary& summary, long n_from, long n_to);

// N* = ceil(sigma / s_max) * n. The ceiling is applied to the ratio before
// scaling by the transactions count.
long critical_request_count(const SystemSummary& summary, int transactions);

// M* = N* + ceil(T(u) * n / s_max).
long critical_user_count(long n_star, double think_time, int transactions,
                         double s_max);

// Both limits for one workload; m_star >= n_star always.
CriticalPoints critical_points(const SystemSummary& summary,
                               const WorkloadSpec& workload);

// Mean input rate (M - N) / (T(u) * n) generated by the M - N thinking
// users.
double input_rate(long workstations_m, long window_n, double think_time,
                  int transactions);

}  // namespace cyq
