#ifndef SCP_ORACLE_HPP
#define SCP_ORACLE_HPP

#include <optional>

#include "scp/canonical.hpp"
#include "scp/perm.hpp"

namespace scp {

/// Ground-truth search over the problem definition: tries all n!
/// permutations tau in lexicographic order and returns the first with
/// b_j = tau^-1 a_j tau for all j, or nullopt. Shares nothing with the
/// solver beyond the permutation primitives. Throws std::invalid_argument
/// when n exceeds `cap` (factorial blowup guard) or on dimension mismatch.
std::optional<Permutation> brute_force_scp(const PermTuple& a,
                                           const PermTuple& b,
                                           std::size_t cap = 8);

/// Naive re-implementation of the connected canonical label (minimum over
/// all start vertices of the BFS-relabeled code), written independently of
/// the optimized path so the two can cross-check each other. Throws on
/// disconnected input.
Code brute_force_connected_label(const PermTuple& a);

} // namespace scp

#endif // SCP_ORACLE_HPP
