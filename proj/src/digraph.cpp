#include "scp/digraph.hpp"

namespace scp {

std::vector<Arc> out_arcs(const PermTuple& a, Vertex v) {
  std::vector<Arc> arcs;
  arcs.reserve(a.degree());
  for (std::size_t j = 0; j < a.degree(); ++j)
    arcs.push_back(Arc{v, a.perm(j)[v], static_cast<std::uint32_t>(j)});
  return arcs;
}

ComponentDecomposition decompose(const PermTuple& a) {
  const std::size_t n = a.size();
  constexpr std::uint32_t unassigned = ~std::uint32_t{0};

  ComponentDecomposition dec;
  dec.comp_of_.assign(n, unassigned);
  dec.local_index_.resize(n);

  std::vector<Vertex> queue;
  queue.reserve(n);
  std::uint32_t k = 0;
  for (Vertex seed = 0; seed < n; ++seed) {
    if (dec.comp_of_[seed] != unassigned)
      continue;
    queue.clear();
    queue.push_back(seed);
    dec.comp_of_[seed] = k;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (std::size_t j = 0; j < a.degree(); ++j) {
        const Vertex w = a.perm(j)[u];
        if (dec.comp_of_[w] == unassigned) {
          dec.comp_of_[w] = k;
          queue.push_back(w);
        }
      }
    }
    ++k;
  }

  // One ascending scan yields members sorted by global id and the
  // local index of every vertex.
  dec.members_.resize(k);
  for (Vertex v = 0; v < n; ++v) {
    auto& m = dec.members_[dec.comp_of_[v]];
    dec.local_index_[v] = static_cast<Vertex>(m.size());
    m.push_back(v);
  }

  dec.locals_.reserve(k);
  for (std::uint32_t c = 0; c < k; ++c) {
    const auto& m = dec.members_[c];
    std::vector<Permutation> local;
    local.reserve(a.degree());
    for (std::size_t j = 0; j < a.degree(); ++j) {
      std::vector<Vertex> images(m.size());
      for (std::size_t i = 0; i < m.size(); ++i)
        images[i] = dec.local_index_[a.perm(j)[m[i]]];
      local.push_back(Permutation::unchecked(std::move(images)));
    }
    dec.locals_.push_back(PermTuple(std::move(local)));
    dec.size_classes_[m.size()].push_back(c);
  }
  return dec;
}

std::vector<std::pair<std::size_t, std::size_t>>
size_multiset(const ComponentDecomposition& dec) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(dec.size_classes().size());
  for (const auto& [size, ids] : dec.size_classes())
    out.emplace_back(size, ids.size());
  return out;
}

} // namespace scp
