#ifndef SCP_GENERATE_HPP
#define SCP_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "scp/instance_io.hpp"
#include "scp/perm.hpp"

namespace scp {

/// All generation runs on mt19937_64 with hand-rolled bounded sampling,
/// so a fixed seed reproduces instances byte-identically everywhere.
using Rng = std::mt19937_64;

/// Uniform draw from {0,...,bound-1} by rejection; bound >= 1.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

Permutation random_permutation(Rng& rng, std::size_t n);

struct GenParams {
  std::string family; // random | conjugate-pair | equal-components |
                      // few-large | mixed
  std::size_t n = 0;
  std::size_t d = 1;
  std::optional<std::size_t> s; // component size (equal-components)
  std::optional<std::size_t> k; // component count (few-large, default 2)
  std::uint64_t seed = 0;
};

/// Builds an instance pair deterministically from the seed.
///
/// random:          both sides independent uniform tuples.
/// conjugate-pair:  uniform a, uniform sigma, b = sigma^-1 a sigma.
/// equal-components: blocks of s vertices; on each block color 1 is a
///                  uniform s-cycle (so the block is one component) and
///                  every further color an independent uniform permutation
///                  of the block; b is a uniform conjugate of a, which
///                  keeps the component structure. Requires s | n.
/// few-large:       equal-components with s = n/k (default k = 2).
/// mixed:           blocks of varied random sizes, at least two components
///                  for n >= 2, built and conjugated the same way.
///
/// Throws std::invalid_argument on unknown family or inconsistent
/// parameters.
Instance generate(const GenParams& params);

} // namespace scp

#endif // SCP_GENERATE_HPP
