#include "scp/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace scp {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0)
    throw std::invalid_argument("uniform_below: bound must be positive");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t i = n; i > 1; --i)
    std::swap(images[i - 1], images[uniform_below(rng, i)]);
  return Permutation::unchecked(std::move(images));
}

namespace {

// A uniform s-cycle on the block starting at `offset`: lay the block's
// vertices out in random order and close the cycle. Each cycle arises
// from exactly s orderings, so the draw is uniform.
void write_random_cycle(Rng& rng, std::vector<Vertex>& images, Vertex offset,
                        std::size_t s) {
  std::vector<Vertex> ring(s);
  std::iota(ring.begin(), ring.end(), offset);
  for (std::size_t i = s; i > 1; --i)
    std::swap(ring[i - 1], ring[uniform_below(rng, i)]);
  for (std::size_t i = 0; i < s; ++i)
    images[ring[i]] = ring[(i + 1) % s];
}

// A uniform permutation of the block, in place.
void write_random_block_perm(Rng& rng, std::vector<Vertex>& images,
                             Vertex offset, std::size_t s) {
  std::vector<Vertex> block(s);
  std::iota(block.begin(), block.end(), offset);
  for (std::size_t i = s; i > 1; --i)
    std::swap(block[i - 1], block[uniform_below(rng, i)]);
  for (std::size_t i = 0; i < s; ++i)
    images[offset + i] = block[i];
}

PermTuple random_tuple(Rng& rng, std::size_t n, std::size_t d) {
  std::vector<Permutation> perms;
  perms.reserve(d);
  for (std::size_t j = 0; j < d; ++j)
    perms.push_back(random_permutation(rng, n));
  return PermTuple(std::move(perms));
}

// Tuple whose components are exactly the given consecutive blocks: color 1
// is a forced cycle on each block, further colors are uniform block
// permutations.
PermTuple block_tuple(Rng& rng, std::size_t n, std::size_t d,
                      const std::vector<std::size_t>& block_sizes) {
  std::vector<std::vector<Vertex>> rows(d, std::vector<Vertex>(n));
  Vertex offset = 0;
  for (std::size_t s : block_sizes) {
    write_random_cycle(rng, rows[0], offset, s);
    for (std::size_t j = 1; j < d; ++j)
      write_random_block_perm(rng, rows[j], offset, s);
    offset += static_cast<Vertex>(s);
  }
  std::vector<Permutation> perms;
  perms.reserve(d);
  for (auto& row : rows)
    perms.push_back(Permutation::unchecked(std::move(row)));
  return PermTuple(std::move(perms));
}

Instance conjugated_pair(Rng& rng, PermTuple a) {
  const Permutation sigma = random_permutation(rng, a.size());
  PermTuple b = conjugate_tuple(a, sigma);
  return Instance{std::move(a), std::move(b)};
}

std::vector<std::size_t> mixed_block_sizes(Rng& rng, std::size_t n) {
  std::vector<std::size_t> sizes;
  std::size_t rem = n;
  while (rem > 0) {
    // Cap the first block below n so the digraph has >= 2 components.
    std::size_t cap = (rem == n && n >= 2) ? rem - 1 : rem;
    std::size_t s = uniform_below(rng, 2) == 0
                        ? 1 + uniform_below(rng, std::min<std::size_t>(cap, 8))
                        : 1 + uniform_below(rng, cap);
    sizes.push_back(s);
    rem -= s;
  }
  return sizes;
}

} // namespace

Instance generate(const GenParams& p) {
  if (p.n < 1 || p.d < 1)
    throw std::invalid_argument("generate: need n >= 1 and d >= 1");
  Rng rng(p.seed);

  if (p.family == "random") {
    PermTuple a = random_tuple(rng, p.n, p.d);
    PermTuple b = random_tuple(rng, p.n, p.d);
    return Instance{std::move(a), std::move(b)};
  }
  if (p.family == "conjugate-pair")
    return conjugated_pair(rng, random_tuple(rng, p.n, p.d));
  if (p.family == "equal-components") {
    if (!p.s || *p.s == 0 || p.n % *p.s != 0)
      throw std::invalid_argument(
          "generate: equal-components requires s with s | n");
    std::vector<std::size_t> sizes(p.n / *p.s, *p.s);
    return conjugated_pair(rng, block_tuple(rng, p.n, p.d, sizes));
  }
  if (p.family == "few-large") {
    const std::size_t k = p.k.value_or(2);
    if (k == 0 || p.n % k != 0)
      throw std::invalid_argument("generate: few-large requires k with k | n");
    std::vector<std::size_t> sizes(k, p.n / k);
    return conjugated_pair(rng, block_tuple(rng, p.n, p.d, sizes));
  }
  if (p.family == "mixed")
    return conjugated_pair(
        rng, block_tuple(rng, p.n, p.d, mixed_block_sizes(rng, p.n)));

  throw std::invalid_argument("generate: unknown family '" + p.family + "'");
}

} // namespace scp
