#include "selset/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <string_view>
#include <tuple>

#include "selset/error.hpp"

namespace selset {

BenchReport run_bench(std::span<const BenchInstance> instances, const BenchOptions& options) {
  BenchReport report;
  const std::size_t reps = std::max<std::size_t>(options.repetitions, 1);
  for (const BenchInstance& instance : instances) {
    const std::size_t lower_bound = block_lower_bound(instance.graph);
    const UnitIntervalInstance* intervals = instance.intervals ? &*instance.intervals : nullptr;
    for (SolverKind solver : options.solvers) {
      SelectiveSubset answer;
      std::vector<std::int64_t> times;
      try {
        for (std::size_t r = 0; r < reps; ++r) {
          const auto start = std::chrono::steady_clock::now();
          answer = solve(solver, instance.graph, intervals, options.solve);
          const auto stop = std::chrono::steady_clock::now();
          times.push_back(std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count());
        }
      } catch (const PreconditionError& e) {
        report.skipped.push_back({instance.id, solver, e.what()});
        continue;
      }
      if (!is_selective(instance.graph, answer.members)) {
        throw VerificationError(std::string(to_string(solver)) + " answer on instance " + instance.id);
      }
      std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
      report.records.push_back(BenchRecord{instance.id, instance.graph.num_vertices(), instance.graph.num_edges(),
                                           instance.graph.num_colors(), solver, answer.size(), lower_bound,
                                           options.measure_time ? times[times.size() / 2] : 0, true});
    }
  }
  auto key = [](const auto& r) { return std::make_tuple(std::string_view(r.instance), to_string(r.solver)); };
  std::stable_sort(report.records.begin(), report.records.end(),
                   [&](const BenchRecord& a, const BenchRecord& b) { return key(a) < key(b); });
  std::stable_sort(report.skipped.begin(), report.skipped.end(),
                   [&](const SkippedRun& a, const SkippedRun& b) { return key(a) < key(b); });
  return report;
}

std::vector<ScalingFit> fit_scaling(const BenchReport& report) {
  // solver -> n -> (sum of times, count)
  std::map<SolverKind, std::map<std::size_t, std::pair<double, std::size_t>>> samples;
  for (const BenchRecord& r : report.records) {
    if (r.time_us <= 0) continue;
    auto& slot = samples[r.solver][r.n];
    slot.first += static_cast<double>(r.time_us);
    ++slot.second;
  }
  std::vector<ScalingFit> fits;
  for (const auto& [solver, by_n] : samples) {
    if (by_n.size() < 2) continue;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, acc] : by_n) {
      const double x = std::log(static_cast<double>(n));
      const double y = std::log(acc.first / static_cast<double>(acc.second));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const auto k = static_cast<double>(by_n.size());
    fits.push_back({solver, (k * sxy - sx * sy) / (k * sxx - sx * sx), by_n.size()});
  }
  return fits;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
  out << "instance,n,m,c,solver,size,lower_bound,time_us,verified\n";
  for (const BenchRecord& r : report.records) {
    out << r.instance << ',' << r.n << ',' << r.m << ',' << r.c << ',' << to_string(r.solver) << ',' << r.size << ','
        << r.lower_bound << ',' << r.time_us << ',' << (r.verified ? "true" : "false") << '\n';
  }
  for (const SkippedRun& s : report.skipped) {
    out << "# skipped instance=" << s.instance << " solver=" << to_string(s.solver) << " reason=" << s.reason << '\n';
  }
  for (const ScalingFit& fit : fit_scaling(report)) {
    out << "# scaling solver=" << to_string(fit.solver) << " slope=" << fit.slope << " points=" << fit.points << '\n';
  }
}

}  // namespace selset
