#include "scp/perm.hpp"

#include <stdexcept>
#include <utility>

namespace scp {

Permutation::Permutation(std::vector<Vertex> images)
    : images_(std::move(images)) {
  const std::size_t n = images_.size();
  std::vector<bool> seen(n, false);
  for (Vertex x : images_) {
    if (x >= n || seen[x])
      throw std::invalid_argument("image sequence is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::unchecked(std::vector<Vertex> images) {
  Permutation g;
  g.images_ = std::move(images);
  return g;
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<Vertex>(i);
  return unchecked(std::move(images));
}

Vertex Permutation::apply(Vertex i) const {
  if (i >= images_.size())
    throw std::invalid_argument("point out of range");
  return images_[i];
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Vertex>(i);
  return unchecked(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.size() != h.size())
    throw std::invalid_argument("composing permutations of different size");
  std::vector<Vertex> images(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    images[i] = h[g[static_cast<Vertex>(i)]];
  return Permutation::unchecked(std::move(images));
}

std::ostream& operator<<(std::ostream& os, const Permutation& g) {
  os << '(';
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i)
      os << ' ';
    os << g[static_cast<Vertex>(i)] + 1;
  }
  return os << ')';
}

PermTuple::PermTuple(std::vector<Permutation> perms)
    : perms_(std::move(perms)) {
  if (perms_.empty())
    throw std::invalid_argument("tuple degree must be at least 1");
  n_ = perms_[0].size();
  if (n_ == 0)
    throw std::invalid_argument("ground set must be nonempty");
  for (const auto& g : perms_)
    if (g.size() != n_)
      throw std::invalid_argument("tuple entries act on different ground sets");
}

PermTuple PermTuple::identity(std::size_t n, std::size_t d) {
  return PermTuple(std::vector<Permutation>(d, Permutation::identity(n)));
}

Permutation conjugate(const Permutation& g, const Permutation& t) {
  if (g.size() != t.size())
    throw std::invalid_argument("conjugating by permutation of different size");
  // (t^-1 g t)[i] = t[g[t^-1[i]]]; evaluate without forming t^-1 by
  // writing the image of t[i] directly.
  std::vector<Vertex> images(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    images[t[static_cast<Vertex>(i)]] = t[g[static_cast<Vertex>(i)]];
  return Permutation::unchecked(std::move(images));
}

PermTuple conjugate_tuple(const PermTuple& a, const Permutation& t) {
  if (t.size() != a.size())
    throw std::invalid_argument("conjugator acts on a different ground set");
  std::vector<Permutation> perms;
  perms.reserve(a.degree());
  for (const auto& g : a.perms())
    perms.push_back(conjugate(g, t));
  return PermTuple(std::move(perms));
}

bool verify_conjugacy(const PermTuple& a, const PermTuple& b,
                      const Permutation& t) {
  if (a.size() != b.size() || a.degree() != b.degree() ||
      t.size() != a.size())
    throw std::invalid_argument("verify_conjugacy: dimension mismatch");
  // b_j = t^-1 a_j t  iff  (i^{a_j})^t = (i^t)^{b_j} for all i, j.
  for (std::size_t j = 0; j < a.degree(); ++j) {
    const auto& aj = a.perm(j);
    const auto& bj = b.perm(j);
    for (Vertex i = 0; i < a.size(); ++i)
      if (t[aj[i]] != bj[t[i]])
        return false;
  }
  return true;
}

} // namespace scp
