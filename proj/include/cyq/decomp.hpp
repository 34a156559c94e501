#pragma once

#include <Eigen/Core>

#include "cyq/model.hpp"

namespace cyq {

// Population-indexed throughput of the composite server standing in for the
// K-1 relaying servers: rate(j) is the subnetwork throughput with j requests
// present. gamma_star is the asymptotic cap 1/s_max of the subnetwork.
class FesCurve {
 public:
  FesCurve(Eigen::ArrayXd rates, double gamma_star);

  long max_population() const { return static_cast<long>(rates_.size()); }
  double rate(long j) const;  // 1-based; throws IndexOutOfRange
  const Eigen::ArrayXd& rates() const { return rates_; }
  double gamma_star() const { return gamma_star_; }

 private:
  Eigen::ArrayXd rates_;
  double gamma_star_;
};

// Flow-balance summary for the host: the arrival rate lambda_K granted to it
// and the utilization that rate produces.
struct FlowBalanceReport {
  Eigen::Index host_index = 0;   // 1-based; 0 when not tied to a profile
  double host_service = 0;       // s_K, seconds
  double subnet_bottleneck = 0;  // s_max of the K-1 subnetwork, seconds
  double gamma_e_star = 0;       // max subnetwork throughput, requests/second
  double assumed_fraction = 0;   // phi in (0, 1]
  double lambda_k = 0;           // phi * gamma_e_star, requests/second
  double rho_k_new = 0;          // lambda_k * s_K
  bool steady_state = false;     // rho_k_new < 1
};

struct NortonPoint {
  double throughput = 0;  // X(n), requests/second
  double elapsed = 0;     // E(n), seconds
};

// The K-1 profile with the host removed, order preserved. Throws
// DegenerateDecomposition for K = 1.
ServiceProfile subnetwork(const ServiceProfile& profile,
                          Eigen::Index host_index);

// gamma_e* ~= 1/s_max of the subnetwork.
double fes_max_throughput(const ServiceProfile& subprofile);

// Exact curve: rate(j) is the subnetwork MVA throughput X(j), Z = 0.
FesCurve fes_curve(const ServiceProfile& subprofile, long max_population);

// Heuristic flow balance: grant the host lambda_K = fraction * gamma_e_star
// and report the resulting utilization.
FlowBalanceReport balanced_host_utilization(double gamma_e_star,
                                            double fraction,
                                            double host_service);

// Exact load-dependent MVA on the two-station network {FES, host}. Keeps the
// marginal queue-length probabilities p(j | n) at the FES:
//   W_fes(n)  = sum_j (j / rate(j)) * p(j-1 | n-1)
//   W_host(n) = s_K * (1 + Q_host(n-1))
//   X(n)      = n / (W_fes + W_host)
//   p(j | n)  = (X(n) / rate(j)) * p(j-1 | n-1), p(0 | n) by normalization
// For a product-form network the resulting throughput equals the full
// K-station MVA throughput at the same population.
NortonPoint norton_solve(const FesCurve& curve, double host_service,
                         long population);

// |lambda_k - gamma_e| <= tolerance * max(lambda_k, gamma_e, eps).
bool flow_balance_check(double lambda_k, double gamma_e, double tolerance);

}  // namespace cyq
