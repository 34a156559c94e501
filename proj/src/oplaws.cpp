#include "cyq/oplaws.hpp"

#include <cmath>

namespace cyq {

namespace {

// Ceiling that first snaps values sitting within 1e-9 (relative) of an
// integer, so ratios that are exact in real arithmetic (identical servers,
// rescaled profiles) are not pushed up a step by accumulation noise.
long ceil_snapped(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x)))
    return static_cast<long>(r);
  return static_cast<long>(std::ceil(x));
}

}  // namespace

double utilization(double throughput, double service_time) {
  if (throughput < 0) throw InvalidArgument("throughput must be >= 0");
  if (service_time < 0) throw InvalidArgument("service time must be >= 0");
  return throughput * service_time;
}

std::pair<double, double> throughput_bounds(const SystemSummary& summary) {
  return {summary.gamma_min, summary.gamma_max};
}

double elapsed_asymptotic(const SystemSummary& summary, long window_n) {
  if (window_n < 0) throw InvalidArgument("window size N must be >= 0");
  return static_cast<double>(window_n) * summary.s_max;
}

ResponsivenessPoint responsiveness_exact(const SystemSummary& summary,
                                         double elapsed, long window_n) {
  if (elapsed < 0) throw InvalidArgument("elapsed time must be >= 0");
  return {window_n, elapsed, summary.sigma / (summary.sigma + elapsed),
          Source::exact};
}

ResponsivenessPoint responsiveness_approx(const SystemSummary& summary,
                                          long window_n) {
  const double elapsed = elapsed_asymptotic(summary, window_n);
  return {window_n, elapsed, summary.sigma / (summary.sigma + elapsed),
          Source::approximate};
}

std::vector<ResponsivenessPoint> responsiveness_table(
    const SystemSummary& summary, long n_from, long n_to) {
  if (n_from < 0 || n_from > n_to)
    throw InvalidArgument("window range must satisfy 0 <= from <= to");
  std::vector<ResponsivenessPoint> table;
  table.reserve(static_cast<std::size_t>(n_to - n_from + 1));
  for (long n = n_from; n <= n_to; ++n)
    table.push_back(responsiveness_approx(summary, n));
  return table;
}

long critical_request_count(const SystemSummary& summary, int transactions) {
  if (transactions < 1)
    throw InvalidArgument("transactions per session n must be >= 1");
  return ceil_snapped(summary.sigma / summary.s_max) * transactions;
}

long critical_user_count(long n_star, double think_time, int transactions,
                         double s_max) {
  if (s_max <= 0) throw InvalidArgument("s_max must be > 0");
  if (n_star < 0) throw InvalidArgument("N* must be >= 0");
  if (think_time < 0) throw InvalidArgument("think time must be >= 0");
  if (transactions < 1)
    throw InvalidArgument("transactions per session n must be >= 1");
  return n_star + ceil_snapped(think_time * transactions / s_max);
}

CriticalPoints critical_points(const SystemSummary& summary,
                               const WorkloadSpec& workload) {
  CriticalPoints points;
  points.n_star = critical_request_count(summary, workload.transactions);
  points.m_star = critical_user_count(points.n_star, workload.think_time,
                                      workload.transactions, summary.s_max);
  return points;
}

double input_rate(long workstations_m, long window_n, double think_time,
                  int transactions) {
  if (workstations_m < window_n)
    throw InvalidArgument("M must be >= N");
  if (!(think_time > 0))
    throw InvalidArgument("think time must be > 0");
  if (transactions < 1)
    throw InvalidArgument("transactions per session n must be >= 1");
  return static_cast<double>(workstations_m - window_n) /
         (think_time * transactions);
}

}  // namespace cyq
