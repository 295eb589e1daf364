#ifndef SCP_PERM_HPP
#define SCP_PERM_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

namespace scp {

/// Vertex / point index. Internal indexing is 0-based; the 1-based
/// convention of the text formats is converted at the I/O boundary.
using Vertex = std::uint32_t;

/// A permutation of {0,...,n-1} stored as its image sequence:
/// images[i] is the image of i. Values are immutable after construction.
class Permutation {
public:
  Permutation() = default;

  /// Validates that `images` is a bijection on {0,...,n-1}; throws
  /// std::invalid_argument otherwise. Use for untrusted input.
  explicit Permutation(std::vector<Vertex> images);

  /// Skips validation. For internally produced values that are
  /// bijections by construction.
  static Permutation unchecked(std::vector<Vertex> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }

  /// Image of i, no bounds check.
  Vertex operator[](Vertex i) const { return images_[i]; }

  /// Image of i; throws std::invalid_argument if i is out of range.
  Vertex apply(Vertex i) const;

  Permutation inverse() const;

  bool is_identity() const;

  const std::vector<Vertex>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<Vertex> images_;
};

/// Left-to-right composition: i^(gh) = (i^g)^h.
Permutation compose(const Permutation& g, const Permutation& h);

std::ostream& operator<<(std::ostream& os, const Permutation& g);

/// An ordered d-tuple of permutations on a common ground set {0,...,n-1}.
/// Equivalently the permutation digraph with an arc i -> i^{a_j} of color j
/// for every i and j; arcs are implicit, never stored.
class PermTuple {
public:
  /// Requires d >= 1, n >= 1 and all permutations of equal size.
  explicit PermTuple(std::vector<Permutation> perms);

  /// d copies of the identity on n points.
  static PermTuple identity(std::size_t n, std::size_t d);

  std::size_t size() const { return n_; }
  std::size_t degree() const { return perms_.size(); }

  /// 0-based color index.
  const Permutation& perm(std::size_t j) const { return perms_[j]; }
  const std::vector<Permutation>& perms() const { return perms_; }

  bool operator==(const PermTuple&) const = default;

private:
  std::size_t n_ = 0;
  std::vector<Permutation> perms_;
};

/// (t^-1 g t) under the left-to-right action.
Permutation conjugate(const Permutation& g, const Permutation& t);

/// (t^-1 a_1 t, ..., t^-1 a_d t); throws on mismatched ground sets.
PermTuple conjugate_tuple(const PermTuple& a, const Permutation& t);

/// True iff b_j = t^-1 a_j t for all j. Runs in O(dn) without allocating.
bool verify_conjugacy(const PermTuple& a, const PermTuple& b,
                      const Permutation& t);

} // namespace scp

#endif // SCP_PERM_HPP
