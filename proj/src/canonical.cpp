#include "scp/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace scp {

namespace {

constexpr Vertex kUnvisited = ~Vertex{0};

// BFS from v in out-neighbour color order; writes the relabeling into
// gamma (old -> new) and its inverse into order (new -> old). Returns the
// number of vertices reached. Both buffers must have size n; gamma must be
// pre-filled with kUnvisited.
std::size_t bfs_labels(const PermTuple& a, Vertex v, std::vector<Vertex>& gamma,
                       std::vector<Vertex>& order) {
  const std::size_t d = a.degree();
  gamma[v] = 0;
  order[0] = v;
  std::size_t visited = 1;
  for (std::size_t head = 0; head < visited; ++head) {
    const Vertex u = order[head];
    for (std::size_t k = 0; k < d; ++k) {
      const Vertex w = a.perm(k)[u];
      if (gamma[w] == kUnvisited) {
        gamma[w] = static_cast<Vertex>(visited);
        order[visited] = w;
        ++visited;
      }
    }
  }
  return visited;
}

} // namespace

RelabelResult relabel(const PermTuple& a, Vertex v) {
  const std::size_t n = a.size();
  if (v >= n)
    throw std::invalid_argument("start vertex out of range");

  std::vector<Vertex> gamma(n, kUnvisited);
  std::vector<Vertex> order(n);
  if (bfs_labels(a, v, gamma, order) != n)
    throw std::invalid_argument("not transitive");

  // relabeled_j[i] = gamma(a_j(gamma^-1(i)))
  std::vector<Permutation> perms;
  perms.reserve(a.degree());
  for (std::size_t j = 0; j < a.degree(); ++j) {
    const auto& aj = a.perm(j);
    std::vector<Vertex> images(n);
    for (std::size_t i = 0; i < n; ++i)
      images[i] = gamma[aj[order[i]]];
    perms.push_back(Permutation::unchecked(std::move(images)));
  }
  return RelabelResult{Permutation::unchecked(std::move(gamma)),
                       PermTuple(std::move(perms))};
}

Code code(const PermTuple& a) {
  Code c;
  c.symbols.reserve(a.size() * a.degree());
  for (const auto& g : a.perms())
    c.symbols.insert(c.symbols.end(), g.images().begin(), g.images().end());
  return c;
}

ConnectedLabel canonical_label_connected(const PermTuple& a) {
  const std::size_t n = a.size();
  const std::size_t d = a.degree();

  std::vector<Vertex> gamma(n, kUnvisited);
  std::vector<Vertex> order(n);
  std::vector<Vertex> best(d * n);
  std::vector<Vertex> candidate(d * n);
  Vertex best_vertex = 0;

  for (Vertex v = 0; v < n; ++v) {
    std::fill(gamma.begin(), gamma.end(), kUnvisited);
    if (bfs_labels(a, v, gamma, order) != n)
      throw std::invalid_argument("not transitive");

    // Emit the candidate code row by row, comparing against the best so
    // far as soon as it is complete. Only two codes are ever held.
    for (std::size_t j = 0; j < d; ++j) {
      const auto& aj = a.perm(j);
      Vertex* out = candidate.data() + j * n;
      for (std::size_t i = 0; i < n; ++i)
        out[i] = gamma[aj[order[i]]];
    }
    if (v == 0 || std::lexicographical_compare(candidate.begin(),
                                               candidate.end(), best.begin(),
                                               best.end())) {
      best.swap(candidate);
      best_vertex = v;
    }
  }

  RelabelResult winner = relabel(a, best_vertex);
  return ConnectedLabel{Code{std::move(best)}, best_vertex,
                        std::move(winner.gamma)};
}

Permutation extract_conjugator(const ConnectedLabel& la,
                               const ConnectedLabel& lb, const PermTuple& a,
                               const PermTuple& b) {
  if (la.gamma.size() != lb.gamma.size() || la.label != lb.label)
    throw std::invalid_argument("extract_conjugator: labels differ");
  Permutation tau = compose(la.gamma, lb.gamma.inverse());
  if (!verify_conjugacy(a, b, tau))
    throw std::logic_error("extract_conjugator: witness failed verification");
  return tau;
}

std::vector<std::uint32_t> radix_sort_order(std::span<const Code> codes,
                                            std::size_t alphabet) {
  const std::size_t count = codes.size();
  std::vector<std::uint32_t> order(count);
  for (std::size_t i = 0; i < count; ++i)
    order[i] = static_cast<std::uint32_t>(i);
  if (count < 2)
    return order;

  const std::size_t length = codes[0].symbols.size();
  for (const auto& c : codes)
    if (c.symbols.size() != length)
      throw std::invalid_argument("radix_sort_order: unequal code lengths");

  std::vector<std::uint32_t> next(count);
  std::vector<std::size_t> bucket(alphabet);
  for (std::size_t pos = length; pos-- > 0;) {
    std::fill(bucket.begin(), bucket.end(), 0);
    for (std::uint32_t idx : order)
      ++bucket[codes[idx].symbols[pos]];
    std::size_t total = 0;
    for (std::size_t s = 0; s < alphabet; ++s) {
      const std::size_t c = bucket[s];
      bucket[s] = total;
      total += c;
    }
    for (std::uint32_t idx : order)
      next[bucket[codes[idx].symbols[pos]]++] = idx;
    order.swap(next);
  }
  return order;
}

GraphLabel canonical_label_graph(const PermTuple& a) {
  const ComponentDecomposition dec = decompose(a);

  std::vector<Code> labels(dec.component_count());
  for (std::uint32_t c = 0; c < dec.component_count(); ++c)
    labels[c] = canonical_label_connected(dec.local_tuple(c)).label;

  GraphLabel out;
  out.degree = a.degree();
  out.parts.reserve(dec.component_count());
  for (const auto& [size, ids] : dec.size_classes()) {
    std::vector<Code> class_codes;
    class_codes.reserve(ids.size());
    for (std::uint32_t c : ids)
      class_codes.push_back(labels[c]);
    for (std::uint32_t i : radix_sort_order(class_codes, size))
      out.parts.push_back(
          GraphLabel::Part{size, std::move(class_codes[i])});
  }
  return out;
}

std::string GraphLabel::render() const {
  std::string s;
  for (const auto& part : parts) {
    s += '[';
    s += std::to_string(part.size);
    s += ':';
    s += std::to_string(degree);
    s += ":(";
    for (std::size_t i = 0; i < part.label.symbols.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(part.label.symbols[i] + 1);
    }
    s += ")]";
  }
  return s;
}

} // namespace scp
