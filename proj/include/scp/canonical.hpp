#ifndef SCP_CANONICAL_HPP
#define SCP_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scp/digraph.hpp"
#include "scp/perm.hpp"

namespace scp {

/// Outcome of the breadth-first relabeling from a start vertex.
struct RelabelResult {
  /// Old label -> new label; the start vertex maps to 0.
  Permutation gamma;
  /// (gamma^-1 a_1 gamma, ..., gamma^-1 a_d gamma).
  PermTuple relabeled;
};

/// Relabels a connected tuple in BFS order from v, scanning out-neighbours
/// in ascending color order. O(dn). Connectivity is a precondition; it is
/// detected rather than assumed, and a BFS that stalls before visiting
/// every vertex throws std::invalid_argument ("not transitive").
RelabelResult relabel(const PermTuple& a, Vertex v);

/// The code of an m-vertex tuple: the d image rows concatenated, color
/// 0 first. A string of length d*m over {0,...,m-1}; each color block is
/// itself a bijection. Compared positionwise as integers.
struct Code {
  std::vector<Vertex> symbols;

  bool operator==(const Code&) const = default;
  auto operator<=>(const Code&) const = default;
};

Code code(const PermTuple& a);

/// Canonical label of a connected tuple with the witness that realizes it.
struct ConnectedLabel {
  Code label;            // minimum of code(relabel(a, v)) over all v
  Vertex best_vertex;    // smallest start vertex achieving the minimum
  Permutation gamma;     // the relabeling from best_vertex
};

/// Minimizes code(relabel(a, v).relabeled) over every start vertex.
/// O(dn^2) with O(dn) working memory: only the current minimum and its
/// witness are retained. Ties go to the smallest start vertex; the tie
/// break affects only the witness, never the label.
ConnectedLabel canonical_label_connected(const PermTuple& a);

/// Assembles a conjugator from two connected labelings with equal labels:
/// tau = gamma_u gamma_w^-1 maps old a-labels through the canonical form
/// into old b-labels. Verified against (a, b) before returning; throws
/// std::invalid_argument when the labels differ and std::logic_error if
/// verification ever fails.
Permutation extract_conjugator(const ConnectedLabel& la,
                               const ConnectedLabel& lb, const PermTuple& a,
                               const PermTuple& b);

/// Whole-graph canonical label: the multiset of per-component connected
/// labels, as length-prefixed parts sorted ascending by (size, label).
struct GraphLabel {
  struct Part {
    std::size_t size;
    Code label;

    bool operator==(const Part&) const = default;
    auto operator<=>(const Part&) const = default;
  };

  std::size_t degree = 0;
  std::vector<Part> parts;

  /// Canonical decimal text rendering, the on-disk/printed label format:
  /// "[n_i:d:(s1,s2,...)]" per part with 1-based symbols. Injective, and
  /// the reference rendering for equality and hashing.
  std::string render() const;

  bool operator==(const GraphLabel&) const = default;
};

/// Decomposes, labels every component, orders parts by ascending size and
/// (via radix sort within each size class) by label.
GraphLabel canonical_label_graph(const PermTuple& a);

/// Stable LSD radix sort of equal-length codes over alphabet
/// {0,...,alphabet-1}. Returns the sorted order as indices into `codes`;
/// ties keep their input order. O(length * (count + alphabet)). Agrees
/// with a comparison sort.
std::vector<std::uint32_t> radix_sort_order(std::span<const Code> codes,
                                            std::size_t alphabet);

} // namespace scp

#endif // SCP_CANONICAL_HPP
