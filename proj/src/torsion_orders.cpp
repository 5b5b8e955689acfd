#include "tautorder/torsion_orders.hpp"

#include <stdexcept>

#include "tautorder/bernoulli_zeta.hpp"

namespace tautorder {

namespace {

void require_genus(unsigned g) {
  if (g == 0) throw std::invalid_argument("g must be >= 1");
}

// p-part of m!.
BigInt factorial_p_part(std::uint64_t m, std::uint64_t p) {
  return pow(BigInt(static_cast<unsigned long>(p)), factorial_p_valuation(m, p));
}

}  // namespace

NgDecomposition ng_local(unsigned g) {
  require_genus(g);
  const std::uint64_t two_g = 2ull * g;
  NgDecomposition result{g, {}, 1};

  unsigned k2 = 2;
  while (two_g % (1ull << (k2 - 1)) == 0) ++k2;
  result.factors.emplace_back(2, k2);

  for (std::uint64_t p : primes_up_to(two_g + 1)) {
    if (p == 2 || two_g % (p - 1) != 0) continue;
    unsigned k = 1;
    std::uint64_t modulus = p - 1;
    while (two_g % (modulus * p) == 0) {
      modulus *= p;
      ++k;
    }
    result.factors.emplace_back(p, k);
  }
  for (const auto& f : result.factors) result.value *= f.value();
  return result;
}

BigInt ng_oracle(unsigned g, std::size_t prime_count, std::size_t stabilization_window) {
  require_genus(g);
  if (stabilization_window < 2 || prime_count < stabilization_window) {
    throw std::invalid_argument("ng_oracle needs prime_count >= stabilization_window >= 2");
  }
  BigInt running = 0;
  BigInt window_value = 0;
  const std::size_t window_start = prime_count - stabilization_window;
  auto primes = primes_above(2 * static_cast<std::int64_t>(g) + 1, prime_count);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    BigInt term = pow(BigInt(static_cast<unsigned long>(primes[i])), 2 * g) - 1;
    running = gcd(running, term);
    if (i == window_start) {
      window_value = running;
    } else if (i > window_start && running != window_value) {
      throw std::runtime_error("gcd not stabilized within the window; increase prime_count");
    }
  }
  return running;
}

BigInt ng_product(unsigned g) {
  BigInt product = 1;
  for (unsigned i = 1; i <= g; ++i) product *= ng_local(i).value;
  return product;
}

ProductIdentityReport product_identity_check(unsigned g) {
  require_genus(g);
  const std::uint64_t two_g = 2ull * g;
  ProductIdentityReport report{ng_product(g), 1, false, true};
  // For p > 2g+1, floor(2gp/(p-1)) = 2g and (2g)! has no p-part.
  for (std::uint64_t p : primes_up_to(2 * two_g + 4)) {
    BigInt factor = factorial_p_part(two_g * p / (p - 1), p);
    if (p <= two_g + 1) {
      report.rhs *= factor;
    } else if (factor != 1) {
      report.tail_trivial = false;
    }
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

bool denominator_corollary_check(unsigned g) {
  BigInt den = proportionality(g).denominator;
  return mpz_divisible_p(ng_product(g).get_mpz_t(), den.get_mpz_t()) != 0;
}

TorsionReport torsion_report(unsigned g) {
  require_genus(g);
  TorsionReport report;
  report.g = g;
  report.n_g = ng_local(g).value;
  report.lower_bound_lambda = report.n_g / 2;
  report.scheme_upper_bound = factorial(g - 1) * report.n_g;
  BigInt product = 1;
  for (unsigned i = 1; i <= g; ++i) {
    BigInt n_i = ng_local(i).value;
    product *= n_i;
    report.r_orders.emplace(i, n_i / 2);
  }
  report.stack_upper_bound = factorial(g - 1) * product;
  return report;
}

BoundaryCoefficient boundary_coefficient(unsigned g) {
  require_genus(g);
  ExactRational value = ExactRational(g % 2 == 0 ? 1 : -1) / zeta_neg(g);
  return {value, value.is_integer()};
}

bool grr_chain_check(unsigned g) {
  require_genus(g);
  ExactRational chain = bernoulli(2 * g) * ExactRational(2 * g - 1) * ExactRational(factorial(2 * g - 2)) /
                        ExactRational(factorial(2 * g));
  return chain.abs() == zeta_neg(g).abs();
}

BigInt lambda_square_order_note(unsigned g) { return ng_local(g).value / 2; }

}  // namespace tautorder
