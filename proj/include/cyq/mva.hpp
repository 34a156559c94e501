#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "cyq/model.hpp"

namespace cyq {

// Full exact mean-value-analysis trace of a closed cyclic network with one
// visit per server and population n = 1..max_population. The recursion keeps
// every intermediate population because throughput curves and the
// flow-equivalent decomposition both consume them.
class MvaSolution {
 public:
  long max_population() const { return static_cast<long>(elapsed_.size()); }
  double think_time() const { return think_time_; }

  // All accessors take the population n, 1-based; throw IndexOutOfRange.
  double throughput(long n) const { return throughput_[check(n)]; }  // X(n)
  double elapsed(long n) const { return elapsed_[check(n)]; }        // E(n)
  const Eigen::ArrayXd& waits(long n) const { return waits_[check(n)]; }
  const Eigen::ArrayXd& queues(long n) const { return queues_[check(n)]; }

 private:
  friend MvaSolution solve_mva(const ServiceProfile&, long, double);

  std::size_t check(long n) const {
    if (n < 1 || n > max_population())
      throw IndexOutOfRange(n, max_population());
    return static_cast<std::size_t>(n - 1);
  }

  std::vector<Eigen::ArrayXd> waits_;   // W_i(n), seconds
  std::vector<Eigen::ArrayXd> queues_;  // Q_i(n), requests
  Eigen::ArrayXd throughput_;           // X(n), requests/second
  Eigen::ArrayXd elapsed_;              // E(n) = sum_i W_i(n), seconds
  double think_time_ = 0;               // Z, seconds
};

// Exact MVA recursion:
//   W_i(n) = s_i * (1 + Q_i(n-1)),  Q_i(0) = 0
//   X(n)   = n / (Z + sum_i W_i(n))
//   Q_i(n) = X(n) * W_i(n)
// Finite and deterministic; no convergence iteration is involved.
MvaSolution solve_mva(const ServiceProfile& profile, long max_population,
                      double think_time = 0.0);

// E(n) from a solved trace.
double elapsed_exact(const MvaSolution& solution, long n);

// (n, X(n)) for n = 1..max_population.
std::vector<std::pair<long, double>> throughput_curve(
    const ServiceProfile& profile, long max_population,
    double think_time = 0.0);

}  // namespace cyq
