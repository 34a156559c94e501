#include "cyq/sim.hpp"

#include <cmath>
#include <deque>
#include <queue>
#include <random>

namespace cyq {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent per-replication stream: mix the master seed with the
// replication index so streams never depend on execution order.
std::uint64_t stream_seed(std::uint64_t seed, int replication) {
  return splitmix64(seed + 0x9e3779b97f4a7c15ULL *
                               static_cast<std::uint64_t>(replication + 1));
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, ServiceDistribution distribution)
      : gen_(seed), distribution_(distribution) {}

  double draw(double mean) {
    if (distribution_ == ServiceDistribution::deterministic) return mean;
    // Inverse transform on a [0,1) uniform built from the top 53 bits;
    // mt19937_64 output is fully specified, so runs are portable.
    const double u =
        static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return -mean * std::log1p(-u);
  }

 private:
  std::mt19937_64 gen_;
  ServiceDistribution distribution_;
};

struct Event {
  double time;
  std::uint64_t seq;  // insertion order; makes simultaneous events stable
  int kind;           // 0 = service completion, 1 = think end
  int target;         // station for completions, job for think ends
};

struct EventAfter {
  bool operator()(const Event& a, const Event& b) const {
    if (a.time != b.time) return a.time > b.time;
    return a.seq > b.seq;
  }
};

struct Station {
  std::deque<int> fifo;  // head is in service
  double service_start = 0;
  double busy = 0;  // busy seconds inside (warmup, horizon]
  long completions = 0;
};

class Replication {
 public:
  Replication(const SimConfig& config, int index)
      : config_(config),
        sampler_(stream_seed(config.seed, index), config.distribution),
        stations_(static_cast<std::size_t>(config.profile.size())),
        cycle_start_(static_cast<std::size_t>(config.window_n), 0.0) {}

  RepStats run() {
    for (int job = 0; job < config_.window_n; ++job) arrive(job, 0, 0.0);

    while (!events_.empty() && events_.top().time <= config_.horizon) {
      const Event ev = events_.top();
      events_.pop();
      if (ev.kind == 0)
        complete(ev.target, ev.time);
      else
        start_cycle(ev.target, ev.time);
    }

    // Account for services still running at the horizon.
    for (auto& st : stations_)
      if (!st.fifo.empty())
        st.busy += clip(st.service_start, config_.horizon);

    return collect();
  }

 private:
  double clip(double start, double end) const {
    const double lo = std::max(start, config_.warmup);
    const double hi = std::min(end, config_.horizon);
    return std::max(0.0, hi - lo);
  }

  void schedule(double time, int kind, int target) {
    events_.push(Event{time, next_seq_++, kind, target});
  }

  void begin_service(int station, double now) {
    stations_[station].service_start = now;
    const double s = config_.profile.times()[station];
    schedule(now + sampler_.draw(s), 0, station);
  }

  void arrive(int job, int station, double now) {
    auto& st = stations_[static_cast<std::size_t>(station)];
    st.fifo.push_back(job);
    if (st.fifo.size() == 1) begin_service(station, now);
  }

  void start_cycle(int job, double now) {
    cycle_start_[static_cast<std::size_t>(job)] = now;
    arrive(job, 0, now);
  }

  void complete(int station, double now) {
    auto& st = stations_[static_cast<std::size_t>(station)];
    st.busy += clip(st.service_start, now);
    if (now > config_.warmup) ++st.completions;

    const int job = st.fifo.front();
    st.fifo.pop_front();
    if (!st.fifo.empty()) begin_service(station, now);

    if (station + 1 < config_.profile.size()) {
      arrive(job, station + 1, now);
      return;
    }
    // Full cycle through the link.
    if (now > config_.warmup) {
      ++cycles_;
      elapsed_sum_ += now - cycle_start_[static_cast<std::size_t>(job)];
    }
    if (config_.think_time > 0)
      schedule(now + sampler_.draw(config_.think_time), 1, job);
    else
      start_cycle(job, now);
  }

  RepStats collect() const {
    const double window = config_.horizon - config_.warmup;
    RepStats stats;
    stats.utilization.resize(config_.profile.size());
    stats.completions.reserve(stations_.size());
    for (Eigen::Index i = 0; i < config_.profile.size(); ++i) {
      const auto& st = stations_[static_cast<std::size_t>(i)];
      stats.utilization[i] = st.busy / window;
      stats.completions.push_back(st.completions);
    }
    const long host_done = stations_.back().completions;
    stats.throughput = static_cast<double>(host_done) / window;
    stats.elapsed_mean =
        cycles_ > 0 ? elapsed_sum_ / static_cast<double>(cycles_) : 0.0;
    return stats;
  }

  const SimConfig& config_;
  Sampler sampler_;
  std::vector<Station> stations_;
  std::vector<double> cycle_start_;
  std::priority_queue<Event, std::vector<Event>, EventAfter> events_;
  std::uint64_t next_seq_ = 0;
  long cycles_ = 0;
  double elapsed_sum_ = 0;
};

void validate(const SimConfig& config) {
  if (!(config.warmup >= 0) || !(config.horizon > config.warmup))
    throw InvalidHorizon("require horizon > warmup >= 0");
  if (config.window_n < 0)
    throw InvalidArgument("window size N must be >= 0");
  if (config.think_time < 0)
    throw InvalidArgument("think time must be >= 0");
  if (config.replications < 1)
    throw InvalidArgument("replications must be >= 1");
}

}  // namespace

double student_t_975(int degrees_of_freedom) {
  static constexpr double table[30] = {
      12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
      2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
      2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
  if (degrees_of_freedom < 1) return 0.0;
  if (degrees_of_freedom <= 30) return table[degrees_of_freedom - 1];
  if (degrees_of_freedom <= 40) return 2.021;
  if (degrees_of_freedom <= 60) return 2.000;
  if (degrees_of_freedom <= 120) return 1.980;
  return 1.960;
}

RepStats run_replication(const SimConfig& config, int replication_index) {
  validate(config);
  return Replication(config, replication_index).run();
}

SimResult simulate(const SimConfig& config) {
  validate(config);
  const int reps = config.replications;

  std::vector<double> throughput(static_cast<std::size_t>(reps));
  std::vector<double> elapsed(static_cast<std::size_t>(reps));
  Eigen::ArrayXd utilization = Eigen::ArrayXd::Zero(config.profile.size());
  for (int r = 0; r < reps; ++r) {
    const RepStats stats = Replication(config, r).run();
    throughput[static_cast<std::size_t>(r)] = stats.throughput;
    elapsed[static_cast<std::size_t>(r)] = stats.elapsed_mean;
    utilization += stats.utilization;
  }

  const auto mean_halfwidth = [reps](const std::vector<double>& xs) {
    double mean = 0;
    for (double x : xs) mean += x;
    mean /= reps;
    if (reps < 2) return std::pair<double, double>{mean, 0.0};
    double ss = 0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / (reps - 1));
    return std::pair<double, double>{
        mean, student_t_975(reps - 1) * sd / std::sqrt(reps)};
  };

  SimResult result;
  std::tie(result.throughput_mean, result.throughput_halfwidth) =
      mean_halfwidth(throughput);
  std::tie(result.elapsed_mean, result.elapsed_halfwidth) =
      mean_halfwidth(elapsed);
  result.utilization = utilization / static_cast<double>(reps);
  result.replications = reps;
  return result;
}

}  // namespace cyq
