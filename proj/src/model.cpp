#include "cyq/model.hpp"

#include <algorithm>
#include <cmath>

namespace cyq {

ServiceProfile::ServiceProfile(Eigen::ArrayXd service_times)
    : times_(std::move(service_times)) {
  if (times_.size() == 0) throw EmptyProfile();
  for (Eigen::Index i = 0; i < times_.size(); ++i) {
    if (!(times_[i] > 0.0) || !std::isfinite(times_[i]))
      throw InvalidServiceTime(i + 1, times_[i]);
  }
}

double ServiceProfile::service_time(Eigen::Index server) const {
  if (server < 1 || server > times_.size())
    throw IndexOutOfRange(server, times_.size());
  return times_[server - 1];
}

ServiceProfile validate_profile(const std::vector<double>& raw_times) {
  return ServiceProfile(Eigen::Map<const Eigen::ArrayXd>(
      raw_times.data(), static_cast<Eigen::Index>(raw_times.size())));
}

void validate_workload(const WorkloadSpec& spec) {
  if (spec.window_n < 0) throw InvalidArgument("window size N must be >= 0");
  if (spec.workstations_m < 0)
    throw InvalidArgument("workstation count M must be >= 0");
  if (spec.workstations_m > 0 && spec.window_n > spec.workstations_m)
    throw InvalidArgument("window size N cannot exceed workstation count M");
  if (!(spec.think_time >= 0) || !std::isfinite(spec.think_time))
    throw InvalidArgument("think time T(u) must be finite and >= 0");
  if (spec.transactions < 1)
    throw InvalidArgument("transactions per session n must be >= 1");
}

SystemSummary summarize(const ServiceProfile& profile) {
  const Eigen::ArrayXd& s = profile.times();
  SystemSummary out;
  out.sigma = s.sum();
  // Explicit scan keeps the tie rule (smallest index wins) independent of
  // Eigen's visitor internals.
  Eigen::Index arg = 0;
  for (Eigen::Index i = 1; i < s.size(); ++i)
    if (s[i] > s[arg]) arg = i;
  out.s_max = s[arg];
  out.bottleneck_index = arg + 1;
  out.gamma_min = 1.0 / out.sigma;
  out.gamma_max = 1.0 / out.s_max;
  return out;
}

ServiceProfile swap_servers(const ServiceProfile& profile, Eigen::Index i,
                            Eigen::Index j) {
  const Eigen::Index k = profile.size();
  if (i < 1 || i > k) throw IndexOutOfRange(i, k);
  if (j < 1 || j > k) throw IndexOutOfRange(j, k);
  Eigen::ArrayXd t = profile.times();
  std::swap(t[i - 1], t[j - 1]);
  return ServiceProfile(std::move(t));
}

std::vector<std::pair<Eigen::Index, double>> ranked_servers(
    const ServiceProfile& profile) {
  const Eigen::ArrayXd& s = profile.times();
  std::vector<std::pair<Eigen::Index, double>> order;
  order.reserve(static_cast<std::size_t>(s.size()));
  for (Eigen::Index i = 0; i < s.size(); ++i) order.emplace_back(i + 1, s[i]);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  return order;
}

}  // namespace cyq
