#include "cyq/mva.hpp"

namespace cyq {

MvaSolution solve_mva(const ServiceProfile& profile, long max_population,
                      double think_time) {
  if (max_population < 1)
    throw InvalidArgument("population must be >= 1");
  if (think_time < 0)
    throw InvalidArgument("think time must be >= 0");

  const Eigen::ArrayXd& s = profile.times();
  const std::size_t count = static_cast<std::size_t>(max_population);

  MvaSolution out;
  out.think_time_ = think_time;
  out.waits_.reserve(count);
  out.queues_.reserve(count);
  out.throughput_.resize(max_population);
  out.elapsed_.resize(max_population);

  Eigen::ArrayXd queues = Eigen::ArrayXd::Zero(s.size());
  for (long n = 1; n <= max_population; ++n) {
    Eigen::ArrayXd waits = s * (1.0 + queues);
    const double elapsed = waits.sum();
    const double x = static_cast<double>(n) / (think_time + elapsed);
    queues = x * waits;
    out.throughput_[n - 1] = x;
    out.elapsed_[n - 1] = elapsed;
    out.waits_.push_back(std::move(waits));
    out.queues_.push_back(queues);
  }
  return out;
}

double elapsed_exact(const MvaSolution& solution, long n) {
  return solution.elapsed(n);
}

std::vector<std::pair<long, double>> throughput_curve(
    const ServiceProfile& profile, long max_population, double think_time) {
  const MvaSolution solution = solve_mva(profile, max_population, think_time);
  std::vector<std::pair<long, double>> curve;
  curve.reserve(static_cast<std::size_t>(max_population));
  for (long n = 1; n <= max_population; ++n)
    curve.emplace_back(n, solution.throughput(n));
  return curve;
}

}  // namespace cyq
