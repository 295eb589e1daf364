#include "scp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "scp/generate.hpp"

namespace scp {

BenchFamily parse_bench_family(const std::string& spec) {
  BenchFamily family;
  std::istringstream ss(spec);
  std::string token;
  if (!std::getline(ss, token, ':'))
    throw std::invalid_argument("empty bench family spec");
  family.name = token;
  while (std::getline(ss, token, ':')) {
    std::size_t* slot = nullptr;
    if (token.rfind("s=", 0) == 0)
      slot = &family.s;
    else if (token.rfind("k=", 0) == 0)
      slot = &family.k;
    else
      throw std::invalid_argument("bad bench family option '" + token + "'");
    *slot = std::stoull(token.substr(2));
  }
  return family;
}

namespace {

GenParams family_params(const BenchFamily& family, std::size_t n,
                        std::size_t d, std::uint64_t seed) {
  GenParams p;
  p.n = n;
  p.d = d;
  p.seed = seed;
  if (family.name == "single-component") {
    p.family = "equal-components";
    p.s = n;
  } else {
    p.family = family.name;
    if (family.s)
      p.s = family.s;
    if (family.k)
      p.k = family.k;
  }
  return p;
}

double median_solve_seconds(const PermTuple& a, const PermTuple& b,
                            const StrategyConfig& cfg, std::size_t reps) {
  using clock = std::chrono::steady_clock;
  std::vector<double> times;
  times.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto start = clock::now();
    const ScpResult result = solve(a, b, cfg);
    const auto stop = clock::now();
    (void)result;
    times.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  std::vector<BenchRecord> records;
  std::uint64_t instance_index = 0;
  for (const auto& family : options.families) {
    for (std::size_t n : options.sizes) {
      const Instance inst = generate(family_params(
          family, n, options.d, options.seed + instance_index++));

      const ComponentDecomposition dec = decompose(inst.a);
      std::size_t largest = 0;
      for (std::uint32_t c = 0; c < dec.component_count(); ++c)
        largest = std::max(largest, dec.members(c).size());

      BenchRecord rec;
      rec.family = family.name;
      rec.n = n;
      rec.d = options.d;
      rec.k = dec.component_count();
      rec.s = largest;
      rec.strategy = to_string(options.config.mode);
      rec.seconds = median_solve_seconds(inst.a, *inst.b, options.config,
                                         std::max<std::size_t>(1, options.reps));
      records.push_back(std::move(rec));
    }
  }
  return records;
}

void write_bench_csv(std::ostream& out,
                     const std::vector<BenchRecord>& records) {
  out << "family,n,d,k,s,strategy,seconds\n";
  for (const auto& r : records) {
    std::ostringstream row;
    row.precision(9);
    row << r.family << ',' << r.n << ',' << r.d << ',' << r.k << ',' << r.s
        << ',' << r.strategy << ',' << r.seconds << '\n';
    out << row.str();
  }
}

double fit_log_slope(const std::vector<BenchRecord>& records) {
  std::vector<std::pair<double, double>> points;
  for (const auto& r : records)
    if (r.seconds > 0.0)
      points.emplace_back(std::log(static_cast<double>(r.n)),
                          std::log(r.seconds));
  if (points.size() < 2)
    throw std::invalid_argument("fit_log_slope: need at least two points");

  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= static_cast<double>(points.size());
  mean_y /= static_cast<double>(points.size());

  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mean_x) * (x - mean_x);
    sxy += (x - mean_x) * (y - mean_y);
  }
  if (sxx == 0.0)
    throw std::invalid_argument("fit_log_slope: sizes are all equal");
  return sxy / sxx;
}

} // namespace scp
