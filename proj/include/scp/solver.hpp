#ifndef SCP_SOLVER_HPP
#define SCP_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scp/canonical.hpp"
#include "scp/digraph.hpp"
#include "scp/perm.hpp"

namespace scp {

enum class Strategy { kAuto, kLabel, kPairwise };

std::string to_string(Strategy s);
std::optional<Strategy> strategy_from_string(const std::string& name);

/// Component size at or above which a component counts as large for a
/// ground set of n vertices: n / max(1, floor(log2 n)). At most ~log2 n
/// components can clear it, which keeps the pairwise branch's total cost
/// near the label branch's.
std::size_t default_large_threshold(std::size_t n);

struct StrategyConfig {
  Strategy mode = Strategy::kAuto;
  /// Maps n to the smallest component size classified as large. Must be
  /// monotone in the component size (it is: classification is a simple
  /// threshold comparison).
  std::function<std::size_t(std::size_t)> large_threshold =
      default_large_threshold;
};

struct SizeClassStats {
  std::size_t size = 0;
  std::size_t count = 0;      // components per side
  Strategy used = Strategy::kLabel;
  double seconds = 0.0;
};

struct ScpResult {
  bool conjugate = false;
  std::optional<Permutation> witness; // verified whenever conjugate is true
  std::vector<SizeClassStats> stats;
};

/// Decides the simultaneous conjugacy problem: is there one tau with
/// b_j = tau^-1 a_j tau for all j? Components are matched per size class,
/// by canonical label or by pairwise propagation depending on the
/// strategy; the witness is assembled from the per-pair local conjugators
/// and verified before returning. Throws std::invalid_argument on
/// dimension mismatch.
ScpResult solve(const PermTuple& a, const PermTuple& b,
                const StrategyConfig& cfg = {});

/// Tests two connected tuples of equal size and degree for simultaneous
/// conjugacy by growing, for each candidate image w of vertex 0, the
/// unique color-preserving map with phi(0) = w. Propagation assigns
/// phi(x^{a_k}) = phi(x)^{b_k} and fails on any conflict or collision.
/// Returns the first success, scanning w in ascending order; d*m per
/// candidate, O(dm^2) total. Throws std::invalid_argument on mismatched
/// dimensions or disconnected input.
std::optional<Permutation> pairwise_iso(const PermTuple& ha,
                                        const PermTuple& hb);

/// A labeled component of one side: its canonical label plus everything
/// needed to turn a per-pair match into a global witness.
struct LabeledComponent {
  std::size_t size = 0;
  Code label;
  Permutation gamma;       // witness relabeling of the local tuple
  std::uint32_t comp = 0;  // component id; ids ascend with smallest member
};

/// Deterministic multiset matching: sorts both sides by
/// (size, label, component id) and zips. Yields index pairs
/// (a-side, b-side) iff the (size, label) multisets agree; nullopt
/// otherwise.
std::optional<std::vector<std::pair<std::uint32_t, std::uint32_t>>>
match_components(std::span<const LabeledComponent> side_a,
                 std::span<const LabeledComponent> side_b);

} // namespace scp

#endif // SCP_SOLVER_HPP
