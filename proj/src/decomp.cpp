#include "cyq/decomp.hpp"

#include <cmath>
#include <limits>

#include "cyq/mva.hpp"

namespace cyq {

FesCurve::FesCurve(Eigen::ArrayXd rates, double gamma_star)
    : rates_(std::move(rates)), gamma_star_(gamma_star) {
  if (rates_.size() == 0)
    throw InvalidArgument("flow-equivalent curve cannot be empty");
  for (Eigen::Index j = 0; j < rates_.size(); ++j)
    if (!(rates_[j] > 0) || !std::isfinite(rates_[j]))
      throw InvalidArgument("flow-equivalent rates must be positive");
}

double FesCurve::rate(long j) const {
  if (j < 1 || j > max_population())
    throw IndexOutOfRange(j, max_population());
  return rates_[j - 1];
}

ServiceProfile subnetwork(const ServiceProfile& profile,
                          Eigen::Index host_index) {
  const Eigen::Index k = profile.size();
  if (host_index < 1 || host_index > k) throw IndexOutOfRange(host_index, k);
  if (k < 2) throw DegenerateDecomposition();
  Eigen::ArrayXd rest(k - 1);
  rest.head(host_index - 1) = profile.times().head(host_index - 1);
  rest.tail(k - host_index) = profile.times().tail(k - host_index);
  return ServiceProfile(std::move(rest));
}

double fes_max_throughput(const ServiceProfile& subprofile) {
  return 1.0 / subprofile.times().maxCoeff();
}

FesCurve fes_curve(const ServiceProfile& subprofile, long max_population) {
  const MvaSolution solution = solve_mva(subprofile, max_population, 0.0);
  Eigen::ArrayXd rates(max_population);
  for (long j = 1; j <= max_population; ++j)
    rates[j - 1] = solution.throughput(j);
  return FesCurve(std::move(rates), fes_max_throughput(subprofile));
}

FlowBalanceReport balanced_host_utilization(double gamma_e_star,
                                            double fraction,
                                            double host_service) {
  if (!(fraction > 0) || fraction > 1)
    throw InvalidArgument("fraction phi must lie in (0, 1]");
  if (!(host_service > 0))
    throw InvalidArgument("host service time must be > 0");
  if (!(gamma_e_star > 0))
    throw InvalidArgument("gamma_e* must be > 0");

  FlowBalanceReport report;
  report.host_service = host_service;
  report.subnet_bottleneck = 1.0 / gamma_e_star;
  report.gamma_e_star = gamma_e_star;
  report.assumed_fraction = fraction;
  report.lambda_k = fraction * gamma_e_star;
  report.rho_k_new = report.lambda_k * host_service;
  report.steady_state = report.rho_k_new < 1.0;
  return report;
}

NortonPoint norton_solve(const FesCurve& curve, double host_service,
                         long population) {
  if (population < 1) throw InvalidArgument("population must be >= 1");
  if (!(host_service > 0))
    throw InvalidArgument("host service time must be > 0");
  if (curve.max_population() < population)
    throw CurveTooShort(population, curve.max_population());

  // p_prev[j] = p(j | n-1); starts at p(0 | 0) = 1.
  Eigen::ArrayXd p_prev = Eigen::ArrayXd::Zero(population + 1);
  p_prev[0] = 1.0;
  double host_queue = 0.0;
  NortonPoint point;
  for (long n = 1; n <= population; ++n) {
    double wait_fes = 0.0;
    for (long j = 1; j <= n; ++j)
      wait_fes += static_cast<double>(j) / curve.rate(j) * p_prev[j - 1];
    const double wait_host = host_service * (1.0 + host_queue);
    const double x = static_cast<double>(n) / (wait_fes + wait_host);

    Eigen::ArrayXd p = Eigen::ArrayXd::Zero(population + 1);
    for (long j = 1; j <= n; ++j)
      p[j] = x / curve.rate(j) * p_prev[j - 1];
    p[0] = 1.0 - p.tail(population).sum();
    p_prev = std::move(p);

    host_queue = x * wait_host;
    point.throughput = x;
    point.elapsed = wait_fes + wait_host;
  }
  return point;
}

bool flow_balance_check(double lambda_k, double gamma_e, double tolerance) {
  if (lambda_k < 0 || gamma_e < 0)
    throw InvalidArgument("flow rates must be >= 0");
  const double scale = std::max(
      {lambda_k, gamma_e, std::numeric_limits<double>::min()});
  return std::abs(lambda_k - gamma_e) <= tolerance * scale;
}

}  // namespace cyq
