#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tautorder/finite_field_checks.hpp"

using namespace tautorder;

namespace {

// Leibniz expansion; independent of the elimination routine.
ExactRational leibniz_determinant(const std::vector<std::vector<ExactRational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ExactRational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    ExactRational term(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("ModPPolynomial basics") {
  ModPPolynomial p(3, {1, 3, 2, 0, 0});
  CHECK(p.degree() == 2);
  CHECK(p.coefficients() == std::vector<std::uint64_t>{1, 0, 2});
  CHECK(p.to_string() == "1 + 2*x^2");
  CHECK(ModPPolynomial(5).is_zero());
  CHECK(ModPPolynomial(5).degree() == -1);
  CHECK(ModPPolynomial(2, {1, 1}).pow(4) == ModPPolynomial(2, {1, 0, 0, 0, 1}));
  CHECK_THROWS_AS(ModPPolynomial(4, {1}), std::invalid_argument);
  CHECK_THROWS_AS(ModPPolynomial(3, {1}) * ModPPolynomial(5, {1}), std::invalid_argument);
}

TEST_CASE("hurwitz genus") {
  CHECK(hurwitz_genus(3, 1).genus == 1);
  CHECK(hurwitz_genus(5, 1).genus == 2);
  CHECK(hurwitz_genus(2, 3).genus == 1);
  CHECK(hurwitz_genus(3, 2).genus == 3);
  CHECK(hurwitz_genus(7, 1).genus == 3);
  CHECK(hurwitz_genus(2, 4).genus == 2);
  for (std::uint64_t l : {3, 5, 7, 11, 13}) {
    for (unsigned k = 1; k <= 3; ++k) {
      auto h = hurwitz_genus(l, k);
      CHECK(h.riemann_hurwitz_consistent);
      CHECK(2 * h.genus == cyclotomic_chern_check(l, k).top_degree);
    }
  }
  // For l = 2 the Riemann-Hurwitz genus is twice the closed form.
  CHECK(hurwitz_genus(2, 3).riemann_hurwitz_genus == 2);
  CHECK_FALSE(hurwitz_genus(2, 3).riemann_hurwitz_consistent);
  CHECK_THROWS_WITH_AS(hurwitz_genus(2, 2), doctest::Contains(doctest::Contains("k >= 3")), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_genus(9, 1), std::invalid_argument);
}

TEST_CASE("cyclotomic chern product") {
  CHECK(cyclotomic_chern_product(3, 1) == ModPPolynomial(3, {1, 0, 2}));
  CHECK(cyclotomic_chern_product(2, 3) == ModPPolynomial(2, {1, 0, 0, 0, 1}));
  CHECK(cyclotomic_chern_product(3, 2) == ModPPolynomial(3, {1, 0, 0, 0, 0, 0, 2}));
}

TEST_CASE("cyclotomic chern check") {
  auto r31 = cyclotomic_chern_check(3, 1);
  CHECK(r31.equal);
  CHECK(r31.top_degree == 2);
  CHECK(r31.top_coefficient_nonzero);
  CHECK_FALSE(r31.literal_equal);
  auto r51 = cyclotomic_chern_check(5, 1);
  CHECK(r51.equal);
  CHECK(r51.top_degree == 4);
  CHECK(r51.product == ModPPolynomial(5, {1, 0, 0, 0, 4}));
  auto r24 = cyclotomic_chern_check(2, 4);
  CHECK(r24.equal);
  CHECK(r24.literal_equal);
  CHECK(r24.top_degree == 8);
  for (std::uint64_t l : {2, 3, 5, 7, 11, 13}) {
    for (unsigned k = 1; k <= 3; ++k) {
      auto r = cyclotomic_chern_check(l, k);
      REQUIRE(r.equal);
      REQUIRE(r.product.degree() == static_cast<long>(r.top_degree));
      REQUIRE(r.top_coefficient_nonzero);
    }
    // Wilson: the product of the units of F_l is -1.
    REQUIRE(cyclotomic_chern_product(l, 1) == ModPPolynomial(l, {1}) + ModPPolynomial::monomial(l, l - 1, l - 1));
  }
}

TEST_CASE("cyclotomic field arithmetic") {
  auto field = std::make_shared<const CyclotomicField>(3, 2);
  CHECK(field->level() == 9);
  CHECK(field->degree() == 6);
  auto zeta = CyclotomicElement::zeta_power(field, 1);
  CHECK(zeta.pow(9) == CyclotomicElement::from_rational(field, 1));
  CHECK(zeta.pow(3) != CyclotomicElement::from_rational(field, 1));
  CHECK(zeta * zeta.conjugate() == CyclotomicElement::from_rational(field, 1));
  auto a = zeta + CyclotomicElement::from_rational(field, ExactRational(2, 3));
  CHECK(a * a.inverse() == CyclotomicElement::from_rational(field, 1));
  // Tr(zeta^j) is phi when 9 | j, -3 when 3 || j, and 0 otherwise.
  CHECK(CyclotomicElement::from_rational(field, 1).trace() == ExactRational(6));
  CHECK(zeta.trace() == ExactRational(0));
  CHECK(zeta.pow(3).trace() == ExactRational(-3));
  CHECK_THROWS_AS(CyclotomicElement::from_rational(field, 0).inverse(), std::domain_error);
}

TEST_CASE("determinant") {
  std::vector<std::vector<ExactRational>> m{{0, 2, 1}, {1, ExactRational(1, 2), 3}, {4, 0, -1}};
  CHECK(determinant(m) == leibniz_determinant(m));
  CHECK(determinant({{1, 2}, {2, 4}}) == ExactRational(0));
}

TEST_CASE("symplectic pairing") {
  auto r31 = symplectic_pairing_check(3, 1);
  CHECK(r31.rank == 2);
  CHECK(r31.integral);
  CHECK(r31.skew);
  CHECK(r31.invariant);
  CHECK(r31.gram_determinant.abs() == ExactRational(1));
  CHECK(r31.gram[0][1] == ExactRational(-1));

  for (auto [l, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{5, 1}, {7, 1}, {3, 2}}) {
    auto r = symplectic_pairing_check(l, k);
    CHECK(r.rank == (l - 1) * (k == 2 ? l : 1));
    CHECK(r.integral);
    CHECK(r.skew);
    CHECK(r.invariant);
    CHECK(r.gram_determinant == leibniz_determinant(r.gram));
    CHECK(r.corrected.perfect());
    CHECK(r.corrected.determinant == leibniz_determinant(r.corrected.gram));
    if (k == 1) CHECK(r.gram_determinant.abs() == ExactRational(1));
  }
}

TEST_CASE("pairing determinant against the discriminant") {
  // |disc Q(zeta_{l^k})| = l^{l^{k-1}(k l - k - 1)}; pi = zeta - zeta^{-1} has norm l.
  for (auto [l, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
    CAPTURE(l);
    CAPTURE(k);
    std::uint64_t step = k == 1 ? 1 : l;
    unsigned disc_exp = static_cast<unsigned>(step * (k * l - k - 1));
    CHECK(different_exponent(l, k) == disc_exp);
    auto trace_form = pairing_gram(l, k, 0, 32);
    CHECK(trace_form.determinant.abs() == ExactRational(pow(BigInt(static_cast<long>(l)), disc_exp)));
    for (unsigned e : {1u, 2u, disc_exp}) {
      if (e > disc_exp) continue;
      auto g = pairing_gram(l, k, e, 32);
      CHECK(g.integral);
      CHECK(g.determinant.abs() == ExactRational(pow(BigInt(static_cast<long>(l)), disc_exp - e)));
    }
  }
  // Literal exponent l^k - l^{k-1} - 1 = 5 at (3, 2) leaves index 3^4.
  CHECK(symplectic_pairing_check(3, 2).gram_determinant.abs() == ExactRational(81));
  CHECK(symplectic_pairing_check(3, 2).corrected.exponent == 9);
}

TEST_CASE("pairing argument checks") {
  CHECK_THROWS_AS(symplectic_pairing_check(2, 3), std::invalid_argument);
  CHECK_THROWS_WITH_AS(symplectic_pairing_check(17, 1, 10), doctest::Contains("rank cap"), std::invalid_argument);
}
