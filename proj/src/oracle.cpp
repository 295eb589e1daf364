#include "scp/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace scp {

std::optional<Permutation> brute_force_scp(const PermTuple& a,
                                           const PermTuple& b,
                                           std::size_t cap) {
  if (a.size() != b.size() || a.degree() != b.degree())
    throw std::invalid_argument("brute_force_scp: dimension mismatch");
  if (a.size() > cap)
    throw std::invalid_argument("brute_force_scp: ground set above cap");

  std::vector<Vertex> images(a.size());
  std::iota(images.begin(), images.end(), 0);
  do {
    Permutation tau = Permutation::unchecked(images);
    if (verify_conjugacy(a, b, tau))
      return tau;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

namespace {

// Deliberately plain BFS relabeling, kept separate from the optimized
// implementation: maps via std::map, queue via std::deque.
std::vector<Vertex> naive_bfs_code(const PermTuple& a, Vertex start) {
  const std::size_t n = a.size();
  std::map<Vertex, Vertex> new_label; // old -> new
  std::deque<Vertex> queue;
  new_label[start] = 0;
  queue.push_back(start);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < a.degree(); ++k) {
      Vertex w = a.perm(k).apply(u);
      if (!new_label.count(w)) {
        new_label[w] = static_cast<Vertex>(new_label.size());
        queue.push_back(w);
      }
    }
  }
  if (new_label.size() != n)
    throw std::invalid_argument("not transitive");

  std::vector<Vertex> old_of(n);
  for (const auto& [old_v, new_v] : new_label)
    old_of[new_v] = old_v;

  std::vector<Vertex> symbols;
  for (std::size_t k = 0; k < a.degree(); ++k)
    for (Vertex i = 0; i < n; ++i)
      symbols.push_back(new_label.at(a.perm(k).apply(old_of[i])));
  return symbols;
}

} // namespace

Code brute_force_connected_label(const PermTuple& a) {
  std::optional<std::vector<Vertex>> best;
  for (Vertex v = 0; v < a.size(); ++v) {
    std::vector<Vertex> candidate = naive_bfs_code(a, v);
    if (!best || candidate < *best)
      best = std::move(candidate);
  }
  return Code{std::move(*best)};
}

} // namespace scp
