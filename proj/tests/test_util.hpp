#ifndef SCP_TEST_UTIL_HPP
#define SCP_TEST_UTIL_HPP

#include <initializer_list>
#include <vector>

#include "scp/digraph.hpp"
#include "scp/generate.hpp"
#include "scp/perm.hpp"

namespace scptest {

// The spec values and the paper are 1-based; tests build and read
// everything through these conversions.

inline scp::Permutation perm(std::initializer_list<unsigned> one_based) {
  std::vector<scp::Vertex> images;
  images.reserve(one_based.size());
  for (unsigned x : one_based)
    images.push_back(static_cast<scp::Vertex>(x - 1));
  return scp::Permutation(std::move(images));
}

inline scp::PermTuple
tuple(std::initializer_list<std::initializer_list<unsigned>> rows) {
  std::vector<scp::Permutation> perms;
  perms.reserve(rows.size());
  for (const auto& row : rows)
    perms.push_back(perm(row));
  return scp::PermTuple(std::move(perms));
}

inline std::vector<unsigned> one_based(const std::vector<scp::Vertex>& xs) {
  std::vector<unsigned> out;
  out.reserve(xs.size());
  for (scp::Vertex x : xs)
    out.push_back(x + 1);
  return out;
}

inline std::vector<unsigned> one_based(const scp::Permutation& g) {
  return one_based(g.images());
}

inline scp::PermTuple random_tuple(scp::Rng& rng, std::size_t n,
                                   std::size_t d) {
  std::vector<scp::Permutation> perms;
  perms.reserve(d);
  for (std::size_t j = 0; j < d; ++j)
    perms.push_back(scp::random_permutation(rng, n));
  return scp::PermTuple(std::move(perms));
}

// Rejection sampling keeps the conditional uniform distribution.
inline scp::PermTuple random_connected_tuple(scp::Rng& rng, std::size_t n,
                                             std::size_t d) {
  for (;;) {
    scp::PermTuple t = random_tuple(rng, n, d);
    if (scp::decompose(t).component_count() == 1)
      return t;
  }
}

} // namespace scptest

#endif // SCP_TEST_UTIL_HPP
