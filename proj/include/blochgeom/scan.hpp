#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "blochgeom/basis.hpp"
#include "blochgeom/stratification.hpp"

namespace blochgeom {

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index
/// is visited exactly once; body must only write to slot i of its output.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

struct StrataScanRow {
  int rank;
  std::uint64_t index;
  StratumReport report;
};

struct RankSummary {
  int rank;
  int expected_p;  // N - rank
  std::size_t count = 0;
  double min_slack = 0.0;  // min over samples of d - r_{N-rank}
  std::size_t violations = 0;  // slack < -tol::kOnSphere
  std::size_t zero_count_mismatches = 0;  // detected p != N - rank
};

struct StrataScanResult {
  int dim;
  std::vector<StrataScanRow> rows;  // rank-major, then index
  std::vector<RankSummary> summary;
};

/// Samples count_per_rank states of every rank 1..N and reports each one
/// against its stratification sphere.
StrataScanResult strata_scan(int dim, std::size_t count_per_rank, std::uint64_t seed,
                             unsigned threads = 1, double zero_tol = tol::kZero);

struct DirectionScanRow {
  std::uint64_t index;
  double mu_min;
  double mu_max;
  double max_length;
  int cap_zero_count;
  double cap_lambda_min;
};

std::vector<DirectionScanRow> direction_scan(const BasisSet& basis, std::size_t count,
                                             std::uint64_t seed, unsigned threads = 1);

}  // namespace blochgeom
