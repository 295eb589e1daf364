#include <doctest.h>

#include <stdexcept>

#include "scp/perm.hpp"
#include "test_util.hpp"

using namespace scptest;
using scp::Permutation;
using scp::PermTuple;

TEST_CASE("apply reads the image sequence") {
  CHECK(Permutation::identity(3).apply(1) == 1);
  CHECK(perm({2, 3, 1}).apply(2) == 0);    // 1-based: 3 -> 1
  CHECK(perm({2, 1, 4, 3}).apply(3) == 2); // 1-based: 4 -> 3
}

TEST_CASE("apply rejects out-of-range points") {
  CHECK_THROWS_AS(perm({2, 3, 1}).apply(3), std::invalid_argument);
}

TEST_CASE("construction validates bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
  CHECK_NOTHROW(Permutation({1, 0}));
  // unchecked skips the scan; the caller vouches for the input
  CHECK(Permutation::unchecked({1, 0}) == perm({2, 1}));
}

TEST_CASE("compose multiplies left to right") {
  const Permutation h = perm({3, 1, 2});
  CHECK(compose(Permutation::identity(3), h) == h);
  CHECK(compose(perm({2, 3, 1}), perm({2, 3, 1})) == perm({3, 1, 2}));
  CHECK(compose(perm({2, 1}), perm({2, 1})) == Permutation::identity(2));
  CHECK_THROWS_AS(compose(Permutation::identity(2), h),
                  std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(Permutation::identity(4).inverse() == Permutation::identity(4));
  CHECK(perm({2, 3, 1}).inverse() == perm({3, 1, 2}));
  CHECK(perm({2, 1, 4, 3}).inverse() == perm({2, 1, 4, 3}));
}

TEST_CASE("inverse composes to the identity both ways") {
  scp::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + scp::uniform_below(rng, 12);
    const Permutation g = scp::random_permutation(rng, n);
    CHECK(compose(g, g.inverse()).is_identity());
    CHECK(compose(g.inverse(), g).is_identity());
  }
}

TEST_CASE("action is associative: i^(gh) = (i^g)^h") {
  scp::Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + scp::uniform_below(rng, 12);
    const Permutation g = scp::random_permutation(rng, n);
    const Permutation h = scp::random_permutation(rng, n);
    const Permutation gh = compose(g, h);
    for (scp::Vertex i = 0; i < n; ++i)
      CHECK(gh.apply(i) == h.apply(g.apply(i)));
  }
}

TEST_CASE("conjugate_tuple") {
  const PermTuple a = tuple({{2, 3, 1}});

  SUBCASE("identity conjugator is a no-op") {
    CHECK(conjugate_tuple(a, Permutation::identity(3)) == a);
  }
  SUBCASE("an element commutes with itself") {
    CHECK(conjugate_tuple(a, perm({2, 3, 1})) == a);
  }
  SUBCASE("hand-computed transposition case") {
    CHECK(conjugate_tuple(tuple({{2, 1, 3}}), perm({1, 3, 2})) ==
          tuple({{3, 2, 1}}));
  }
  SUBCASE("mismatched ground set") {
    CHECK_THROWS_AS(conjugate_tuple(a, Permutation::identity(4)),
                    std::invalid_argument);
  }
}

TEST_CASE("conjugate agrees with the definitional route") {
  // Independent route: compose(t^-1, compose(g, t)).
  scp::Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + scp::uniform_below(rng, 10);
    const Permutation g = scp::random_permutation(rng, n);
    const Permutation t = scp::random_permutation(rng, n);
    CHECK(scp::conjugate(g, t) == compose(t.inverse(), compose(g, t)));
  }
}

TEST_CASE("verify_conjugacy") {
  const PermTuple a = tuple({{2, 3, 1}});
  CHECK(verify_conjugacy(a, a, Permutation::identity(3)));
  CHECK_FALSE(verify_conjugacy(a, PermTuple::identity(3, 1),
                               Permutation::identity(3)));
  CHECK_THROWS_AS(verify_conjugacy(a, PermTuple::identity(4, 1),
                                   Permutation::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("conjugation round trips through verify_conjugacy") {
  scp::Rng rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + scp::uniform_below(rng, 9);
    const std::size_t d = 1 + scp::uniform_below(rng, 3);
    const PermTuple a = random_tuple(rng, n, d);
    const Permutation t = scp::random_permutation(rng, n);
    CHECK(verify_conjugacy(a, conjugate_tuple(a, t), t));
  }
}

TEST_CASE("conjugation composes: (a^s)^t = a^(st)") {
  scp::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + scp::uniform_below(rng, 9);
    const PermTuple a = random_tuple(rng, n, 2);
    const Permutation s = scp::random_permutation(rng, n);
    const Permutation t = scp::random_permutation(rng, n);
    CHECK(conjugate_tuple(conjugate_tuple(a, s), t) ==
          conjugate_tuple(a, compose(s, t)));
  }
}

TEST_CASE("tuple construction enforces the invariants") {
  CHECK_THROWS_AS(PermTuple({}), std::invalid_argument);
  CHECK_THROWS_AS(
      PermTuple({Permutation::identity(3), Permutation::identity(2)}),
      std::invalid_argument);
  CHECK_THROWS_AS(PermTuple({Permutation::identity(0)}),
                  std::invalid_argument);
}
