#include "gcsim/sim/sweep.h"

#include <atomic>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gcsim/sim/csv.h"
#include "gcsim/sim/simulator.h"

namespace gcsim::sim {

Estimate estimate(const std::vector<double>& values) {
  Estimate e;
  if (values.empty()) return e;
  double sum = 0;
  for (double v : values) sum += v;
  const double n = static_cast<double>(values.size());
  e.mean = sum / n;
  if (values.size() < 2) return e;
  double ss = 0;
  for (double v : values) ss += (v - e.mean) * (v - e.mean);
  const double sd = std::sqrt(ss / (n - 1));
  boost::math::students_t dist(n - 1);
  e.half_width = boost::math::quantile(boost::math::complement(dist, 0.025)) * sd / std::sqrt(n);
  return e;
}

SweepResult sweep(const SweepSpec& spec) {
  if (spec.group_sizes.empty() || spec.strategies.empty() || spec.seeds.empty()) {
    throw std::invalid_argument("sweep: group sizes, strategies and seeds must be nonempty");
  }
  std::vector<SimConfig> jobs;
  for (auto kind : spec.strategies) {
    for (int size : spec.group_sizes) {
      for (auto seed : spec.seeds) {
        SimConfig c = spec.base;
        c.strategy = kind;
        c.group_size = size;
        c.seed = seed;
        jobs.push_back(std::move(c));
      }
    }
  }

  std::vector<MetricsReport> reports(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::string error;

  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      const SimConfig& c = jobs[k];
      try {
        reports[k] = run(c).report;
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (!failed.exchange(true)) {
          error = "sweep run failed (strategy=" + std::string(access::to_string(c.strategy)) +
                  ", group_size=" + std::to_string(c.group_size) +
                  ", seed=" + std::to_string(c.seed) + "): " + e.what();
        }
      }
    }
  };

  unsigned threads = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed) throw std::runtime_error(error);
  return summarize(std::move(reports));
}

SweepResult summarize(std::vector<MetricsReport> runs) {
  SweepResult out;
  out.runs = std::move(runs);

  // Cells keep first-appearance order.
  std::vector<std::pair<std::string, int>> order;
  std::map<std::pair<std::string, int>, std::vector<const MetricsReport*>> cells;
  for (const auto& r : out.runs) {
    auto key = std::make_pair(r.strategy, r.group_size);
    auto [it, inserted] = cells.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back(&r);
  }
  for (const auto& key : order) {
    const auto& rs = cells.at(key);
    auto collect = [&](auto getter) {
      std::vector<double> v;
      for (const MetricsReport* r : rs) v.push_back(static_cast<double>(getter(*r)));
      return estimate(v);
    };
    SummaryRow s;
    s.strategy = key.first;
    s.group_size = key.second;
    s.seeds = static_cast<int>(rs.size());
    s.group_capacity = collect([](const MetricsReport& r) { return r.group_capacity; });
    s.capacity_ratio = collect([](const MetricsReport& r) { return r.capacity_ratio; });
    s.mean_prbs_per_packet = collect([](const MetricsReport& r) { return r.mean_prbs_per_packet; });
    s.retx_prb_share = collect([](const MetricsReport& r) { return r.retx_prb_share; });
    s.residual_loss = collect([](const MetricsReport& r) { return r.residual_loss; });
    s.mean_delay = collect([](const MetricsReport& r) { return r.mean_delay; });
    s.cell_capacity_unique_bps =
        collect([](const MetricsReport& r) { return r.cell_capacity_unique_bps; });
    out.summary.push_back(s);
  }

  std::map<int, double> plain;
  std::map<int, double> coded;
  for (const auto& s : out.summary) {
    if (s.strategy == access::to_string(access::StrategyKind::kScPtm)) {
      plain[s.group_size] = s.group_capacity.mean;
    }
    if (s.strategy == access::to_string(access::StrategyKind::kScPtmIc)) {
      coded[s.group_size] = s.group_capacity.mean;
    }
  }
  for (auto& s : out.summary) {
    auto p = plain.find(s.group_size);
    auto c = coded.find(s.group_size);
    if (p != plain.end() && c != coded.end() && p->second > 0) {
      s.ic_capacity_ratio = c->second / p->second;
    }
  }
  return out;
}

std::string_view sweep_header() {
  return "row,strategy,group_size,seed,seeds,group_capacity,group_capacity_hw,capacity_ratio,"
         "capacity_ratio_hw,mean_prbs_per_packet,mean_prbs_per_packet_hw,retx_prb_share,"
         "retx_prb_share_hw,residual_loss,residual_loss_hw,mean_delay,mean_delay_hw,"
         "cell_capacity_unique_bps,cell_capacity_unique_bps_hw,ic_capacity_ratio";
}

std::string sweep_to_csv(const SweepResult& result) {
  std::string out(sweep_header());
  out += '\n';
  auto d = [](double v) { return format_double(v); };
  for (const auto& r : result.runs) {
    out += "run," + r.strategy + ',' + std::to_string(r.group_size) + ',' +
           std::to_string(r.seed) + ",1," + std::to_string(r.group_capacity) + ",," +
           d(r.capacity_ratio) + ",," + d(r.mean_prbs_per_packet) + ",," + d(r.retx_prb_share) +
           ",," + d(r.residual_loss) + ",," + d(r.mean_delay) + ",," +
           d(r.cell_capacity_unique_bps) + ",,\n";
  }
  auto pair = [&](const Estimate& e) { return d(e.mean) + ',' + d(e.half_width); };
  for (const auto& s : result.summary) {
    out += "summary," + s.strategy + ',' + std::to_string(s.group_size) + ",," +
           std::to_string(s.seeds) + ',' + pair(s.group_capacity) + ',' + pair(s.capacity_ratio) +
           ',' + pair(s.mean_prbs_per_packet) + ',' + pair(s.retx_prb_share) + ',' +
           pair(s.residual_loss) + ',' + pair(s.mean_delay) + ',' +
           pair(s.cell_capacity_unique_bps) + ',' +
           (s.ic_capacity_ratio ? d(*s.ic_capacity_ratio) : std::string()) + '\n';
  }
  return out;
}

}  // namespace gcsim::sim
