#ifndef SCP_BENCH_HPP
#define SCP_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scp/solver.hpp"

namespace scp {

/// One benchmark family: a generator spec applied across the size grid.
/// "single-component" is equal-components with s = n.
struct BenchFamily {
  std::string name;   // random | conjugate-pair | equal-components |
                      // few-large | mixed | single-component
  std::size_t s = 0;  // fixed component size, 0 = family default
  std::size_t k = 0;  // fixed component count, 0 = family default
};

/// Parses "name[:s=INT][:k=INT]", e.g. "equal-components:s=64".
BenchFamily parse_bench_family(const std::string& spec);

struct BenchRecord {
  std::string family;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t k = 0;       // component count of side a
  std::size_t s = 0;       // largest component size of side a
  std::string strategy;
  double seconds = 0.0;    // median solve wall time over the repetitions
};

struct BenchOptions {
  std::vector<BenchFamily> families;
  std::vector<std::size_t> sizes;
  std::size_t d = 3;
  std::size_t reps = 5;
  std::uint64_t seed = 1;
  StrategyConfig config;
};

/// Generates each (family, n) instance deterministically from the seed and
/// times solve (generation and parsing excluded), median of `reps` runs on
/// a monotonic clock.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

/// Header "family,n,d,k,s,strategy,seconds" plus one row per record.
void write_bench_csv(std::ostream& out,
                     const std::vector<BenchRecord>& records);

/// Least-squares slope of log(seconds) against log(n) for one family's
/// records; the empirical scaling exponent. Requires at least two distinct
/// sizes.
double fit_log_slope(const std::vector<BenchRecord>& records);

} // namespace scp

#endif // SCP_BENCH_HPP
