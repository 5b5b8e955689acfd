#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "tautorder/group_orders.hpp"

using namespace tautorder;

namespace {

// #SL(2, Z/n) = #Sp(2, Z/n) by enumeration.
std::uint64_t count_sl2(unsigned n) {
  std::uint64_t count = 0;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        for (unsigned d = 0; d < n; ++d)
          if ((a * d + n * n - (b * c) % n) % n == 1) ++count;
  return count;
}

// #Sp(4, F_2) by enumerating all 4x4 matrices M with M^T J M = J.
std::uint64_t count_sp4_f2() {
  const int j[4][4] = {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  std::uint64_t count = 0;
  for (unsigned bits = 0; bits < (1u << 16); ++bits) {
    int m[4][4];
    for (int i = 0; i < 16; ++i) m[i / 4][i % 4] = (bits >> i) & 1;
    bool ok = true;
    for (int r = 0; r < 4 && ok; ++r) {
      for (int c = 0; c < 4 && ok; ++c) {
        int s = 0;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) s += m[a][r] * j[a][b] * m[b][c];
        ok = (s & 1) == j[r][c];
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("sp_order examples") {
  CHECK(sp_order(1, 3).order == 24);
  CHECK(sp_order(1, 2).order == 6);
  CHECK(sp_order(2, 2).order == 720);
  CHECK(sp_order(1, 4).order == 48);
  CHECK_THROWS_AS(sp_order(1, 1), std::invalid_argument);
}

TEST_CASE("sp_order against enumeration") {
  for (unsigned n = 2; n <= 12; ++n) REQUIRE(sp_order(1, n).order == count_sl2(n));
  CHECK(sp_order(2, 2).order == count_sp4_f2());
}

TEST_CASE("sp_order local factors multiply to the order") {
  auto r = sp_order(2, 12);
  BigInt product = 1;
  for (const auto& [p, local] : r.local_factors) product *= local;
  CHECK(product == r.order);
  CHECK(r.local_factors.at(2) == sp_order(2, 4).order);
  CHECK(r.local_factors.at(3) == sp_order(2, 3).order);
}

TEST_CASE("sp_order is multiplicative over coprime levels") {
  for (unsigned g = 1; g <= 3; ++g) {
    for (std::uint64_t a = 2; a <= 30; ++a) {
      for (std::uint64_t b = 2; a * b <= 30; ++b) {
        if (std::gcd(a, b) != 1) continue;
        REQUIRE(sp_order(g, a * b).order == sp_order(g, a).order * sp_order(g, b).order);
      }
    }
  }
}

TEST_CASE("degree integrality") {
  CHECK(degree_integrality(1, 3).degree == ExactRational(1));
  CHECK(degree_integrality(2, 3).degree == ExactRational(9));
  CHECK(degree_integrality(1, 4).degree == ExactRational(2));
  for (unsigned g = 1; g <= 5; ++g) {
    for (std::uint64_t n = 3; n <= 7; ++n) REQUIRE(degree_integrality(g, n).integral);
  }
  CHECK_THROWS_WITH_AS(degree_integrality(1, 2), "integrality only claimed for n >= 3", std::invalid_argument);
}

TEST_CASE("koblitz coefficient") {
  CHECK(koblitz_coefficient(1, 2) == 1);
  CHECK(koblitz_coefficient(2, 2) == 3);
  CHECK(koblitz_coefficient(3, 3) == 416);
  CHECK_THROWS_AS(koblitz_coefficient(2, 4), std::invalid_argument);
  for (unsigned g = 1; g <= 6; ++g) {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      BigInt expected = g % 2 == 0 ? BigInt(1) : BigInt(static_cast<long>(p) - 1);
      BigInt residue = koblitz_coefficient(g, p) % static_cast<unsigned long>(p);
      REQUIRE(residue == expected % static_cast<unsigned long>(p));
    }
  }
}
