#ifndef SCP_DIGRAPH_HPP
#define SCP_DIGRAPH_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "scp/perm.hpp"

namespace scp {

/// One arc of the permutation digraph, materialized on demand only.
struct Arc {
  Vertex ini;
  Vertex ter;
  std::uint32_t color; // 0-based
};

/// The d arcs leaving v, in color order.
std::vector<Arc> out_arcs(const PermTuple& a, Vertex v);

/// Partition of the ground set into the connected components of the
/// permutation digraph, with local<->global index maps. Component c's
/// local vertices 0..n_c-1 are its members in ascending global order;
/// component ids increase with the smallest member.
class ComponentDecomposition {
public:
  std::size_t component_count() const { return members_.size(); }

  std::uint32_t component_of(Vertex v) const { return comp_of_[v]; }

  /// Global members of component c, sorted ascending.
  const std::vector<Vertex>& members(std::uint32_t c) const {
    return members_[c];
  }

  /// The induced action of the tuple on component c, renumbered to
  /// {0,...,n_c-1}. Always a transitive tuple.
  const PermTuple& local_tuple(std::uint32_t c) const { return locals_[c]; }

  /// Position of v within its component's member list.
  Vertex to_local(Vertex v) const { return local_index_[v]; }

  Vertex to_global(std::uint32_t c, Vertex local) const {
    return members_[c][local];
  }

  /// Component size -> ids of the components with that size, ascending.
  const std::map<std::size_t, std::vector<std::uint32_t>>& size_classes()
      const {
    return size_classes_;
  }

private:
  friend ComponentDecomposition decompose(const PermTuple& a);

  std::vector<std::uint32_t> comp_of_;
  std::vector<Vertex> local_index_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<PermTuple> locals_;
  std::map<std::size_t, std::vector<std::uint32_t>> size_classes_;
};

/// Orbit partition of the group generated by the tuple, via BFS over
/// out-arcs (for permutations, forward reachability already yields the
/// full orbit). O(dn).
ComponentDecomposition decompose(const PermTuple& a);

/// Sorted (component size, multiplicity) pairs, ascending by size.
std::vector<std::pair<std::size_t, std::size_t>>
size_multiset(const ComponentDecomposition& dec);

} // namespace scp

#endif // SCP_DIGRAPH_HPP
