#include "scp/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <utility>

namespace scp {

std::string to_string(Strategy s) {
  switch (s) {
  case Strategy::kAuto:
    return "auto";
  case Strategy::kLabel:
    return "label";
  case Strategy::kPairwise:
    return "pairwise";
  }
  return "?";
}

std::optional<Strategy> strategy_from_string(const std::string& name) {
  if (name == "auto")
    return Strategy::kAuto;
  if (name == "label")
    return Strategy::kLabel;
  if (name == "pairwise")
    return Strategy::kPairwise;
  return std::nullopt;
}

std::size_t default_large_threshold(std::size_t n) {
  const std::size_t log2n = n == 0 ? 0 : std::bit_width(n) - 1;
  return n / std::max<std::size_t>(1, log2n);
}

std::optional<Permutation> pairwise_iso(const PermTuple& ha,
                                        const PermTuple& hb) {
  if (ha.size() != hb.size() || ha.degree() != hb.degree())
    throw std::invalid_argument("pairwise_iso: dimension mismatch");
  const std::size_t m = ha.size();
  const std::size_t d = ha.degree();

  // Connectivity is a precondition; flag violations instead of silently
  // reporting non-isomorphic.
  if (decompose(ha).component_count() != 1 ||
      decompose(hb).component_count() != 1)
    throw std::invalid_argument("not transitive");

  constexpr Vertex kUndef = ~Vertex{0};
  std::vector<Vertex> phi(m), queue(m);
  std::vector<bool> used(m);

  for (Vertex w = 0; w < m; ++w) {
    std::fill(phi.begin(), phi.end(), kUndef);
    std::fill(used.begin(), used.end(), false);
    phi[0] = w;
    used[w] = true;
    queue[0] = 0;
    std::size_t visited = 1;
    bool ok = true;
    for (std::size_t head = 0; ok && head < visited; ++head) {
      const Vertex x = queue[head];
      for (std::size_t k = 0; ok && k < d; ++k) {
        const Vertex y = ha.perm(k)[x];
        const Vertex t = hb.perm(k)[phi[x]];
        if (phi[y] == kUndef) {
          if (used[t]) {
            ok = false; // two vertices would map to t
          } else {
            phi[y] = t;
            used[t] = true;
            queue[visited++] = y;
          }
        } else if (phi[y] != t) {
          ok = false;
        }
      }
    }
    // Every arc was checked during propagation, so success here is a
    // complete color-isomorphism.
    if (ok && visited == m)
      return Permutation::unchecked(phi);
  }
  return std::nullopt;
}

std::optional<std::vector<std::pair<std::uint32_t, std::uint32_t>>>
match_components(std::span<const LabeledComponent> side_a,
                 std::span<const LabeledComponent> side_b) {
  if (side_a.size() != side_b.size())
    return std::nullopt;

  auto sorted_order = [](std::span<const LabeledComponent> side) {
    std::vector<std::uint32_t> order(side.size());
    for (std::uint32_t i = 0; i < side.size(); ++i)
      order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t x, std::uint32_t y) {
                const auto& cx = side[x];
                const auto& cy = side[y];
                return std::tie(cx.size, cx.label, cx.comp) <
                       std::tie(cy.size, cy.label, cy.comp);
              });
    return order;
  };

  const auto oa = sorted_order(side_a);
  const auto ob = sorted_order(side_b);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairing;
  pairing.reserve(oa.size());
  for (std::size_t i = 0; i < oa.size(); ++i) {
    const auto& ca = side_a[oa[i]];
    const auto& cb = side_b[ob[i]];
    if (ca.size != cb.size || ca.label != cb.label)
      return std::nullopt;
    pairing.emplace_back(oa[i], ob[i]);
  }
  return pairing;
}

namespace {

// Writes the local conjugator of a matched component pair into the global
// witness: tau(global_a(x)) = global_b(phi(local_a(x))).
void embed_witness(const ComponentDecomposition& da,
                   const ComponentDecomposition& db, std::uint32_t comp_a,
                   std::uint32_t comp_b, const Permutation& phi,
                   std::vector<Vertex>& tau) {
  const auto& ma = da.members(comp_a);
  const auto& mb = db.members(comp_b);
  for (std::size_t x = 0; x < ma.size(); ++x)
    tau[ma[x]] = mb[phi[static_cast<Vertex>(x)]];
}

// Label strategy for one size class: canonically label every component on
// both sides, match the label multisets, extract per-pair conjugators.
bool match_class_by_label(const ComponentDecomposition& da,
                          const ComponentDecomposition& db,
                          const std::vector<std::uint32_t>& ids_a,
                          const std::vector<std::uint32_t>& ids_b,
                          std::size_t size, std::vector<Vertex>& tau) {
  auto label_side = [size](const ComponentDecomposition& dec,
                           const std::vector<std::uint32_t>& ids) {
    std::vector<LabeledComponent> out;
    out.reserve(ids.size());
    for (std::uint32_t c : ids) {
      ConnectedLabel cl = canonical_label_connected(dec.local_tuple(c));
      out.push_back(LabeledComponent{size, std::move(cl.label),
                                     std::move(cl.gamma), c});
    }
    return out;
  };

  const auto side_a = label_side(da, ids_a);
  const auto side_b = label_side(db, ids_b);
  const auto pairing = match_components(side_a, side_b);
  if (!pairing)
    return false;

  for (const auto& [ia, ib] : *pairing) {
    // tau_local = gamma_u gamma_w^-1, as in extract_conjugator; the global
    // witness is verified once at the end of solve.
    const Permutation phi =
        compose(side_a[ia].gamma, side_b[ib].gamma.inverse());
    embed_witness(da, db, side_a[ia].comp, side_b[ib].comp, phi, tau);
  }
  return true;
}

// Pairwise strategy for one size class: greedily match each a-component to
// the first remaining b-component it is isomorphic to. Greedy suffices
// because color-isomorphism between components is an equivalence relation.
bool match_class_pairwise(const ComponentDecomposition& da,
                          const ComponentDecomposition& db,
                          const std::vector<std::uint32_t>& ids_a,
                          const std::vector<std::uint32_t>& ids_b,
                          std::vector<Vertex>& tau) {
  std::vector<bool> taken(ids_b.size(), false);
  for (std::uint32_t ca : ids_a) {
    bool matched = false;
    for (std::size_t i = 0; i < ids_b.size() && !matched; ++i) {
      if (taken[i])
        continue;
      if (auto phi = pairwise_iso(da.local_tuple(ca),
                                  db.local_tuple(ids_b[i]))) {
        taken[i] = true;
        embed_witness(da, db, ca, ids_b[i], *phi, tau);
        matched = true;
      }
    }
    if (!matched)
      return false;
  }
  return true;
}

} // namespace

ScpResult solve(const PermTuple& a, const PermTuple& b,
                const StrategyConfig& cfg) {
  if (a.size() != b.size() || a.degree() != b.degree())
    throw std::invalid_argument("solve: dimension mismatch");
  using clock = std::chrono::steady_clock;

  const ComponentDecomposition da = decompose(a);
  const ComponentDecomposition db = decompose(b);

  ScpResult result;
  // Equal numbers of components of every size is necessary; it also makes
  // the per-class counts below agree on both sides.
  if (size_multiset(da) != size_multiset(db))
    return result;

  const std::size_t large_at = cfg.large_threshold(a.size());
  std::vector<Vertex> tau(a.size());

  auto ib = db.size_classes().begin();
  for (const auto& [size, ids_a] : da.size_classes()) {
    const std::vector<std::uint32_t>& ids_b = ib->second;
    ++ib;

    Strategy used = cfg.mode;
    if (used == Strategy::kAuto)
      used = size >= large_at ? Strategy::kPairwise : Strategy::kLabel;

    const auto start = clock::now();
    const bool ok =
        used == Strategy::kPairwise
            ? match_class_pairwise(da, db, ids_a, ids_b, tau)
            : match_class_by_label(da, db, ids_a, ids_b, size, tau);
    const double seconds =
        std::chrono::duration<double>(clock::now() - start).count();
    result.stats.push_back(SizeClassStats{size, ids_a.size(), used, seconds});
    if (!ok)
      return result;
  }

  Permutation witness = Permutation::unchecked(std::move(tau));
  if (!verify_conjugacy(a, b, witness))
    throw std::logic_error("solve: assembled witness failed verification");
  result.conjugate = true;
  result.witness = std::move(witness);
  return result;
}

} // namespace scp
