#include "doctest.h"

#include "carterlink/root_system.hpp"

#include <random>

using namespace carterlink;

TEST_CASE("root counts match the classical table up to rank 10") {
  for (int l = 1; l <= 10; ++l) {
    const RootSystem& a = get_root_system({'A', l});
    CHECK(static_cast<long long>(a.roots().size()) == classical_root_count({'A', l}));
  }
  for (int l = 4; l <= 10; ++l) {
    const RootSystem& d = get_root_system({'D', l});
    CHECK(static_cast<long long>(d.roots().size()) == classical_root_count({'D', l}));
  }
  CHECK(get_root_system({'E', 6}).roots().size() == 72);
  CHECK(get_root_system({'E', 7}).roots().size() == 126);
  CHECK(get_root_system({'E', 8}).roots().size() == 240);
}

TEST_CASE("A_1 is {+tau_1, -tau_1}") {
  const RootSystem& a1 = get_root_system({'A', 1});
  REQUIRE(a1.roots().size() == 2);
  CHECK(a1.roots()[0] == Coord{-1});
  CHECK(a1.roots()[1] == Coord{1});
  CHECK(a1.maximal_root() == Coord{1});
}

TEST_CASE("D_9 count via closure equals 2l(l-1)") {
  CHECK(get_root_system({'D', 9}).roots().size() == 144);
}

TEST_CASE("invalid ids are rejected") {
  CHECK_THROWS(RootSystem({'D', 3}));
  CHECK_THROWS(RootSystem({'E', 9}));
  CHECK_THROWS(RootSystem({'B', 4}));
}

TEST_CASE("inner products") {
  const RootSystem& a2 = get_root_system({'A', 2});
  CHECK(a2.inner(a2.simple_root(0), a2.simple_root(1)) == -1);
  for (const Coord& r : a2.roots()) CHECK(a2.inner(r, r) == 2);

  // (e_1+e_2, e_1-e_2) = 0 expanded over the simple-root basis
  const RootSystem& d5 = get_root_system({'D', 5});
  Coord p = d5.from_euclidean({1, 1, 0, 0, 0});
  Coord m = d5.from_euclidean({1, -1, 0, 0, 0});
  REQUIRE(d5.contains(p));
  REQUIRE(d5.contains(m));
  CHECK(d5.inner(p, m) == 0);
}

TEST_CASE("off-diagonal inner products lie in {-2..2}, +/-2 only on +/-r") {
  for (RootSystemId id : {RootSystemId{'A', 4}, RootSystemId{'D', 5}, RootSystemId{'E', 6}}) {
    const RootSystem& sys = get_root_system(id);
    for (const Coord& r : sys.roots())
      for (const Coord& s : sys.roots()) {
        long long ip = sys.inner(r, s);
        CHECK(ip >= -2);
        CHECK(ip <= 2);
        if (ip == 2) CHECK(r == s);
        if (ip == -2) CHECK(r == negate(s));
      }
  }
}

TEST_CASE("maximal roots") {
  CHECK(get_root_system({'E', 8}).maximal_root() == Coord{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(get_root_system({'E', 7}).maximal_root() == Coord{2, 2, 3, 4, 3, 2, 1});
  CHECK(get_root_system({'E', 6}).maximal_root() == Coord{1, 2, 2, 3, 2, 1});
  CHECK(get_root_system({'D', 6}).maximal_root() == Coord{1, 2, 2, 2, 1, 1});
  CHECK(get_root_system({'A', 5}).maximal_root() == Coord{1, 1, 1, 1, 1});
}

TEST_CASE("maximal root is orthogonal to all simple roots but one") {
  for (RootSystemId id :
       {RootSystemId{'E', 6}, RootSystemId{'E', 7}, RootSystemId{'E', 8}, RootSystemId{'D', 7}}) {
    const RootSystem& sys = get_root_system(id);
    int attached = 0;
    for (int i = 0; i < sys.rank(); ++i) {
      long long ip = sys.inner(sys.maximal_root(), sys.simple_root(i));
      if (ip != 0) {
        ++attached;
        CHECK(ip == 1);
      }
    }
    CHECK(attached == 1);
  }
}

TEST_CASE("reflections") {
  const RootSystem& a3 = get_root_system({'A', 3});
  // s_{e1-e2}(e2-e3) = e1-e3
  Coord e12 = a3.from_euclidean({1, -1, 0, 0});
  Coord e23 = a3.from_euclidean({0, 1, -1, 0});
  Coord e13 = a3.from_euclidean({1, 0, -1, 0});
  CHECK(a3.reflect(e23, e12) == e13);
  // self-reflection negates
  CHECK(a3.reflect(e12, e12) == negate(e12));

  std::mt19937 rng(7);
  for (RootSystemId id : {RootSystemId{'D', 5}, RootSystemId{'E', 6}}) {
    const RootSystem& sys = get_root_system(id);
    std::uniform_int_distribution<size_t> pick(0, sys.roots().size() - 1);
    for (int t = 0; t < 200; ++t) {
      const Coord& v = sys.roots()[pick(rng)];
      const Coord& m = sys.roots()[pick(rng)];
      Coord r = sys.reflect(v, m);
      CHECK(sys.contains(r));            // reflection-closed
      CHECK(sys.reflect(r, m) == v);     // involution
    }
  }
}

TEST_CASE("roots closed under negation") {
  const RootSystem& d4 = get_root_system({'D', 4});
  for (const Coord& r : d4.roots()) CHECK(d4.contains(negate(r)));
}
