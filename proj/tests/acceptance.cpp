// Acceptance suite: runs every release criterion at its pinned threshold
// and prints one pass/fail line per criterion. Exits nonzero on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "scp/bench.hpp"
#include "scp/canonical.hpp"
#include "scp/generate.hpp"
#include "scp/instance_io.hpp"
#include "scp/oracle.hpp"
#include "scp/solver.hpp"

using namespace scp;

namespace {

PermTuple random_tuple(Rng& rng, std::size_t n, std::size_t d) {
  std::vector<Permutation> perms;
  perms.reserve(d);
  for (std::size_t j = 0; j < d; ++j)
    perms.push_back(random_permutation(rng, n));
  return PermTuple(std::move(perms));
}

PermTuple random_connected_tuple(Rng& rng, std::size_t n, std::size_t d) {
  for (;;) {
    PermTuple t = random_tuple(rng, n, d);
    if (decompose(t).component_count() == 1)
      return t;
  }
}

StrategyConfig config(Strategy mode) {
  StrategyConfig cfg;
  cfg.mode = mode;
  return cfg;
}

// --- criterion 1 -----------------------------------------------------------
// 1000 random instances, n <= 7, d <= 2, at least 300 constructed-conjugate:
// solve agrees with the brute-force oracle on every boolean and every YES
// witness verifies.
bool oracle_equivalence(std::string& detail) {
  Rng rng(1001);
  int agreements = 0, yes_seen = 0;
  const int total = 1000, constructed = 350;
  for (int i = 0; i < total; ++i) {
    const std::size_t n = 1 + uniform_below(rng, 7);
    const std::size_t d = 1 + uniform_below(rng, 2);
    const PermTuple a = random_tuple(rng, n, d);
    const PermTuple b = i < constructed
                            ? conjugate_tuple(a, random_permutation(rng, n))
                            : random_tuple(rng, n, d);
    const ScpResult r = solve(a, b);
    const bool oracle_yes = brute_force_scp(a, b).has_value();
    if (r.conjugate != oracle_yes)
      return false;
    if (r.conjugate) {
      if (!r.witness || !verify_conjugacy(a, b, *r.witness))
        return false;
      ++yes_seen;
    }
    ++agreements;
  }
  std::ostringstream ss;
  ss << agreements << "/" << total << " agree, " << yes_seen
     << " verified witnesses (" << constructed << " constructed-conjugate)";
  detail = ss.str();
  return agreements == total && yes_seen >= constructed;
}

// --- criterion 2 -----------------------------------------------------------
// Connected canonicity, both directions: 500 random connected tuples
// (n <= 30, d <= 4) invariant under 20 conjugations each; 200 oracle-
// certified non-conjugate connected pairs at n <= 7 get distinct labels.
bool connected_canonicity(std::string& detail) {
  Rng rng(1002);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + uniform_below(rng, 30);
    const std::size_t d = 1 + uniform_below(rng, 4);
    const PermTuple a = random_connected_tuple(rng, n, d);
    const Code label = canonical_label_connected(a).label;
    for (int j = 0; j < 20; ++j) {
      const PermTuple image = conjugate_tuple(a, random_permutation(rng, n));
      if (canonical_label_connected(image).label != label)
        return false;
    }
  }

  int distinct = 0;
  while (distinct < 200) {
    const std::size_t n = 2 + uniform_below(rng, 6);
    const std::size_t d = 1 + uniform_below(rng, 4);
    const PermTuple a = random_connected_tuple(rng, n, d);
    const PermTuple b = random_connected_tuple(rng, n, d);
    if (brute_force_scp(a, b).has_value())
      continue; // need a certified non-conjugate pair
    if (canonical_label_connected(a).label ==
        canonical_label_connected(b).label)
      return false;
    ++distinct;
  }
  detail = "500x20 invariance, 200 separations";
  return true;
}

// --- criterion 3 -----------------------------------------------------------
// Whole-graph label invariance under 20 random relabelings for 200 random
// disconnected tuples with n <= 60.
bool graph_label_invariance(std::string& detail) {
  Rng rng(1003);
  for (int i = 0; i < 200; ++i) {
    GenParams params;
    params.family = "mixed";
    params.n = 2 + uniform_below(rng, 59);
    params.d = 1 + uniform_below(rng, 4);
    params.seed = rng();
    const PermTuple a = generate(params).a;
    const GraphLabel label = canonical_label_graph(a);
    for (int j = 0; j < 20; ++j) {
      const GraphLabel image = canonical_label_graph(
          conjugate_tuple(a, random_permutation(rng, a.size())));
      if (image != label || image.render() != label.render())
        return false;
    }
  }
  detail = "200x20 exact label equalities";
  return true;
}

// --- criterion 4 -----------------------------------------------------------
// label, pairwise and auto agree on the boolean for 500 random instances
// with mixed component structure, n <= 200, d <= 4.
bool strategy_agreement(std::string& detail) {
  Rng rng(1004);
  const char* families[] = {"mixed", "equal-components", "few-large",
                            "random", "conjugate-pair"};
  int yes = 0, no = 0;
  for (int i = 0; i < 500; ++i) {
    GenParams params;
    params.family = families[i % 5];
    params.d = 1 + uniform_below(rng, 4);
    params.seed = rng();
    if (params.family == std::string("equal-components")) {
      const std::size_t s = 1 + uniform_below(rng, 25);
      params.s = s;
      params.n = s * (1 + uniform_below(rng, 200 / s));
    } else if (params.family == std::string("few-large")) {
      const std::size_t k = 1 + uniform_below(rng, 4);
      params.k = k;
      params.n = k * (1 + uniform_below(rng, 200 / k));
    } else {
      params.n = 2 + uniform_below(rng, 199);
    }
    Instance inst = generate(params);
    // Half the grid: replace b with an independent draw so both answers
    // occur; the size structure usually still matches.
    if (i % 2 == 1) {
      params.seed = rng();
      inst.b = generate(params).a;
    }

    const bool auto_ans = solve(inst.a, *inst.b, config(Strategy::kAuto))
                              .conjugate;
    const bool label_ans = solve(inst.a, *inst.b, config(Strategy::kLabel))
                               .conjugate;
    const bool pairwise_ans =
        solve(inst.a, *inst.b, config(Strategy::kPairwise)).conjugate;
    if (auto_ans != label_ans || auto_ans != pairwise_ans)
      return false;
    (auto_ans ? yes : no)++;
  }
  std::ostringstream ss;
  ss << "500 agreements (" << yes << " YES, " << no << " NO)";
  detail = ss.str();
  return yes > 0 && no > 0;
}

// --- criteria 5 and 6 ------------------------------------------------------

double bench_slope(const std::string& family_spec,
                   const std::vector<std::size_t>& sizes, Strategy mode,
                   std::string& detail) {
  BenchOptions options;
  options.families = {parse_bench_family(family_spec)};
  options.sizes = sizes;
  options.d = 3;
  options.reps = 5;
  options.seed = 2024;
  options.config = config(mode);
  const auto records = run_bench(options);
  const double slope = fit_log_slope(records);

  std::ostringstream ss;
  ss << "slope=" << slope << " over n=" << sizes.front() << ".."
     << sizes.back() << " (" << to_string(mode) << ")";
  detail = ss.str();
  return slope;
}

// Equal small components, s = 64 fixed, d = 3, n = 2^10..2^16: time grows
// like d*n*s, so the fitted exponent must sit in [0.8, 1.3].
bool small_component_scaling(std::string& detail) {
  const double slope =
      bench_slope("equal-components:s=64",
                  {1u << 10, 1u << 11, 1u << 12, 1u << 13, 1u << 14,
                   1u << 15, 1u << 16},
                  Strategy::kAuto, detail);
  return slope >= 0.8 && slope <= 1.3;
}

// One component, d = 3, n = 2^8..2^12 under the label strategy: the
// connected labeling is Theta(d n^2), so the exponent must sit in
// [1.7, 2.2]. This pins the quadratic baseline of the single-component
// worst case.
bool connected_quadratic_baseline(std::string& detail) {
  const double slope =
      bench_slope("single-component",
                  {1u << 8, 1u << 9, 1u << 10, 1u << 11, 1u << 12},
                  Strategy::kLabel, detail);
  return slope >= 1.7 && slope <= 2.2;
}

// --- criterion 7 -----------------------------------------------------------
// Radix sort equals a comparison sort on 1000 random multisets of
// equal-length codes.
bool radix_equals_comparison(std::string& detail) {
  Rng rng(1007);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t alphabet = 1 + uniform_below(rng, 9);
    const std::size_t length = (1 + uniform_below(rng, 4)) * alphabet;
    const std::size_t count = uniform_below(rng, 33);
    std::vector<Code> codes(count);
    for (auto& c : codes) {
      c.symbols.reserve(length);
      for (std::size_t i = 0; i < length; ++i)
        c.symbols.push_back(static_cast<Vertex>(uniform_below(rng, alphabet)));
    }

    std::vector<std::uint32_t> expected(count);
    std::iota(expected.begin(), expected.end(), 0);
    std::stable_sort(expected.begin(), expected.end(),
                     [&](std::uint32_t x, std::uint32_t y) {
                       return codes[x] < codes[y];
                     });
    if (radix_sort_order(codes, alphabet) != expected)
      return false;
  }
  detail = "1000 multisets, identical orders";
  return true;
}

// --- criterion 8 -----------------------------------------------------------
// Solving any instance twice produces byte-identical output; fixed seeds
// reproduce generated instances byte-identically.
bool determinism(std::string& detail) {
  Rng rng(1008);
  const char* families[] = {"random", "conjugate-pair", "equal-components",
                            "few-large", "mixed"};
  for (int i = 0; i < 50; ++i) {
    GenParams params;
    params.family = families[i % 5];
    params.d = 1 + uniform_below(rng, 3);
    params.seed = rng();
    if (params.family == std::string("equal-components")) {
      params.s = 1 + uniform_below(rng, 8);
      params.n = *params.s * (1 + uniform_below(rng, 8));
    } else if (params.family == std::string("few-large")) {
      params.n = 2 * (1 + uniform_below(rng, 32));
    } else {
      params.n = 2 + uniform_below(rng, 63);
    }

    const Instance first = generate(params);
    const Instance again = generate(params);
    if (render_instance(first) != render_instance(again))
      return false;

    const std::string out1 = render_solve_report(solve(first.a, *first.b));
    const std::string out2 = render_solve_report(solve(first.a, *first.b));
    if (out1 != out2)
      return false;
  }
  detail = "50 instances, byte-identical reports and files";
  return true;
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 oracle-equivalence", oracle_equivalence},
      {"2 connected-canonicity", connected_canonicity},
      {"3 graph-label-invariance", graph_label_invariance},
      {"4 strategy-agreement", strategy_agreement},
      {"5 small-component-scaling", small_component_scaling},
      {"6 connected-quadratic-baseline", connected_quadratic_baseline},
      {"7 radix-vs-comparison-sort", radix_equals_comparison},
      {"8 determinism", determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("%s %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", criterion.name,
                seconds, detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!ok)
      ++failures;
  }
  return failures == 0 ? 0 : 1;
}
