#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "tautorder/bernoulli_zeta.hpp"
#include "tautorder/torsion_orders.hpp"

using namespace tautorder;

TEST_CASE("n_g from local rules") {
  auto n1 = ng_local(1);
  CHECK(n1.value == 24);
  CHECK(n1.factors == std::vector<PrimeLocalOrder>{{2, 3}, {3, 1}});
  auto n3 = ng_local(3);
  CHECK(n3.value == 504);
  CHECK(n3.factors == std::vector<PrimeLocalOrder>{{2, 3}, {3, 2}, {7, 1}});
  auto n4 = ng_local(4);
  CHECK(n4.value == 480);
  CHECK(n4.factors == std::vector<PrimeLocalOrder>{{2, 5}, {3, 1}, {5, 1}});
  CHECK(ng_local(2).value == 240);
  CHECK(ng_local(6).value == 65520);
  CHECK_THROWS_AS(ng_local(0), std::invalid_argument);
}

TEST_CASE("NgDecomposition invariants") {
  for (unsigned g = 1; g <= 50; ++g) {
    auto d = ng_local(g);
    BigInt product = 1;
    for (const auto& f : d.factors) {
      REQUIRE(f.exponent() >= 1);
      if (f.prime() != 2) REQUIRE((2 * g) % (f.prime() - 1) == 0);
      product *= f.value();
    }
    REQUIRE(product == d.value);
    REQUIRE(d.factors.front().prime() == 2);
    REQUIRE(d.factors.front().exponent() >= 3);
    for (std::uint64_t p : primes_up_to(2 * g + 1)) {
      if (p == 2 || (2 * g) % (p - 1) != 0) continue;
      bool present = false;
      for (const auto& f : d.factors) present = present || f.prime() == p;
      REQUIRE(present);
    }
    REQUIRE(d.value % 8 == 0);
    // n_g divides p^{2g} - 1 for primes above 2g + 1.
    for (std::uint64_t p : primes_above(2 * g + 1, 20)) {
      BigInt term = pow(BigInt(static_cast<unsigned long>(p)), 2 * g) - 1;
      REQUIRE(term % d.value == 0);
    }
  }
}

TEST_CASE("gcd oracle") {
  CHECK(ng_oracle(1, 100, 50) == 24);
  CHECK(ng_oracle(2, 100, 50) == 240);
  CHECK(ng_oracle(1, 2, 2) == 24);
  for (unsigned g = 1; g <= 8; ++g) REQUIRE(ng_oracle(g) == ng_local(g).value);
}

TEST_CASE("gcd oracle reports non-stabilization") {
  // Primes 7, 11 give 2400 then 240.
  CHECK_THROWS_WITH_AS(ng_oracle(2, 2, 2), doctest::Contains("increase prime_count"), std::runtime_error);
  CHECK_THROWS_AS(ng_oracle(6, 3, 2), std::runtime_error);
  CHECK_THROWS_AS(ng_oracle(1, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(ng_oracle(1, 3, 5), std::invalid_argument);
}

TEST_CASE("product identity") {
  auto r1 = product_identity_check(1);
  CHECK(r1.lhs == 24);
  CHECK(r1.rhs == 24);
  CHECK(r1.equal);
  auto r2 = product_identity_check(2);
  CHECK(r2.lhs == 5760);
  CHECK(r2.rhs == 128 * 9 * 5);
  CHECK(r2.equal);
  for (unsigned g = 1; g <= 16; ++g) {
    auto r = product_identity_check(g);
    REQUIRE(r.equal);
    REQUIRE(r.tail_trivial);
  }
}

TEST_CASE("denominator corollary") {
  CHECK(denominator_corollary_check(1));
  CHECK(denominator_corollary_check(2));
  CHECK(proportionality(1).denominator == ng_product(1));
  CHECK(proportionality(2).denominator == ng_product(2));
  for (unsigned g = 1; g <= 12; ++g) REQUIRE(denominator_corollary_check(g));
}

TEST_CASE("torsion report") {
  auto r1 = torsion_report(1);
  CHECK(r1.stack_upper_bound == 24);
  CHECK(r1.lower_bound_lambda == 12);
  CHECK(torsion_report(2).stack_upper_bound == 24 * 240);
  auto r3 = torsion_report(3);
  CHECK(r3.stack_upper_bound == 5806080);
  CHECK(r3.scheme_upper_bound == 2 * 504);
  CHECK(r3.r_orders.at(1) == 12);
  CHECK(r3.r_orders.at(2) == 120);
  CHECK(r3.r_orders.at(3) == 252);
  for (unsigned g = 1; g <= 20; ++g) {
    auto r = torsion_report(g);
    REQUIRE(r.n_g % 2 == 0);
    REQUIRE(r.stack_upper_bound % r.lower_bound_lambda == 0);
    REQUIRE(r.stack_upper_bound % r.scheme_upper_bound == 0);
    REQUIRE(r.r_orders.size() == g);
  }
}

TEST_CASE("boundary coefficient") {
  CHECK(boundary_coefficient(1).value == ExactRational(12));
  CHECK(boundary_coefficient(2).value == ExactRational(120));
  CHECK(boundary_coefficient(3).value == ExactRational(252));
  for (unsigned g = 1; g <= 20; ++g) {
    auto bc = boundary_coefficient(g);
    REQUIRE(bc.value.sign() > 0);
    REQUIRE(bc.value * zeta_neg(g).abs() == ExactRational(1));
    REQUIRE(bc.value.numerator() == ng_local(g).value / 2);
  }
  for (unsigned g : {1u, 2u, 3u, 4u, 5u, 7u}) {
    CHECK(boundary_coefficient(g).is_integer);
    CHECK(boundary_coefficient(g).value == ExactRational(BigInt(ng_local(g).value / 2)));
  }
  // B_12 and B_16 have numerators 691 and 3617.
  CHECK_FALSE(boundary_coefficient(6).is_integer);
  CHECK(boundary_coefficient(6).value == ExactRational(32760, 691));
  CHECK_FALSE(boundary_coefficient(8).is_integer);
}

TEST_CASE("GRR coefficient chain") {
  for (unsigned g = 1; g <= 10; ++g) REQUIRE(grr_chain_check(g));
}

TEST_CASE("lambda square order note") {
  CHECK(lambda_square_order_note(1) == 12);
  CHECK(lambda_square_order_note(3) == 252);
  CHECK(lambda_square_order_note(4) == 240);
}
