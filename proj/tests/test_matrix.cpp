#include "doctest.h"

#include "carterlink/matrix.hpp"

#include <random>

using namespace carterlink;

TEST_CASE("identity and inverse round trip") {
  RatMatrix id3 = RatMatrix::identity(3);
  CHECK(*id3.inverse() == id3);
  CHECK(id3.determinant() == 1);
}

TEST_CASE("exact inverse of a small rational matrix") {
  RatMatrix m(2);
  m.at(0, 0) = Rat(1, 2);
  m.at(0, 1) = Rat(1, 3);
  m.at(1, 0) = Rat(1, 4);
  m.at(1, 1) = Rat(1, 5);
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(m.mul(*inv) == RatMatrix::identity(2));
  CHECK(m.determinant() == Rat(1, 10) - Rat(1, 12));
}

TEST_CASE("singular matrix reports no inverse and zero determinant") {
  RatMatrix m(2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  CHECK(m.determinant() == 0);
  CHECK(!m.inverse().has_value());
}

TEST_CASE("random integer matrices: Bareiss det vs inverse consistency") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 6;
    RatMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    Rat det = m.determinant();
    auto inv = m.inverse();
    if (det == 0) {
      CHECK(!inv.has_value());
    } else {
      REQUIRE(inv.has_value());
      CHECK(m.mul(*inv) == RatMatrix::identity(n));
      CHECK(inv->determinant() * det == 1);
    }
  }
}

TEST_CASE("solve") {
  RatMatrix m = RatMatrix::from_int_rows({{2, -1}, {-1, 2}});
  auto x = solve(m, {Rat(1), Rat(0)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(2, 3));
  CHECK((*x)[1] == Rat(1, 3));
}

TEST_CASE("qform and positive definiteness") {
  RatMatrix m = RatMatrix::from_int_rows({{2, -1}, {-1, 2}});
  CHECK(m.positive_definite());
  CHECK(m.qform(std::vector<int>{1, 1}) == 2);
  RatMatrix bad = RatMatrix::from_int_rows({{1, 2}, {2, 1}});
  CHECK(!bad.positive_definite());
}

TEST_CASE("common denominator layout") {
  RatMatrix m(2);
  m.at(0, 0) = Rat(1, 2);
  m.at(0, 1) = Rat(3, 4);
  m.at(1, 0) = Rat(-1, 4);
  m.at(1, 1) = Rat(5, 2);
  CHECK(m.common_denominator() == 4);
}
