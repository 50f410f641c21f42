#include "blochgeom/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "blochgeom/direction.hpp"
#include "blochgeom/sampling.hpp"

namespace blochgeom {

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

StrataScanResult strata_scan(int dim, std::size_t count_per_rank, std::uint64_t seed,
                             unsigned threads, double zero_tol) {
  StrataScanResult result{dim, {}, {}};
  result.rows.reserve(count_per_rank * static_cast<std::size_t>(dim));
  for (int rank = 1; rank <= dim; ++rank) {
    const SamplerConfig cfg{seed, dim, rank, count_per_rank};
    cfg.validate();
    std::vector<StratumReport> reports(count_per_rank);
    parallel_for(count_per_rank, threads, [&](std::size_t i) {
      reports[i] = stratum_report(sample_state(cfg, i), zero_tol);
    });

    RankSummary s{rank, dim - rank};
    s.count = count_per_rank;
    s.min_slack = std::numeric_limits<double>::infinity();
    const double radius = s.expected_p == 0 ? 0.0 : stratum_radius(dim, s.expected_p);
    for (std::size_t i = 0; i < count_per_rank; ++i) {
      const StratumReport& r = reports[i];
      const double slack = r.distance - radius;
      s.min_slack = std::min(s.min_slack, slack);
      if (slack < -tol::kOnSphere) ++s.violations;
      if (r.p != s.expected_p) ++s.zero_count_mismatches;
      result.rows.push_back({rank, i, r});
    }
    if (count_per_rank == 0) s.min_slack = 0.0;
    result.summary.push_back(s);
  }
  return result;
}

std::vector<DirectionScanRow> direction_scan(const BasisSet& basis, std::size_t count,
                                             std::uint64_t seed, unsigned threads) {
  std::vector<DirectionScanRow> rows(count);
  const int dim_v = static_cast<int>(basis.size());
  parallel_for(count, threads, [&](std::size_t i) {
    const DirectionReport rep = direction_report(basis, sample_direction(seed, dim_v, i));
    rows[i] = DirectionScanRow{i, rep.mu_min(), rep.mu_max(), rep.max_length, rep.cap_zero_count,
                               rep.cap_spectrum.min()};
  });
  return rows;
}

}  // namespace blochgeom
