#pragma once

#include <map>
#include <vector>

#include "tautorder/exact_arith.hpp"

namespace tautorder {

// n_g = gcd of p^{2g} - 1 over all primes p > 2g + 1, as a product of
// local prime powers.
struct NgDecomposition {
  unsigned g;
  std::vector<PrimeLocalOrder> factors;  // ascending primes, exponents >= 1
  BigInt value;
};

// Local rule: for odd p the exponent is the largest k with
// p^{k-1}(p-1) | 2g (zero when (p-1) does not divide 2g); for p = 2 it
// is the largest k with 2^{k-2} | 2g.
NgDecomposition ng_local(unsigned g);

inline constexpr std::size_t kDefaultOraclePrimeCount = 100;
inline constexpr std::size_t kDefaultOracleWindow = 50;

// Running gcd of p^{2g} - 1 over the first prime_count primes above 2g + 1.
// Throws std::runtime_error("... increase prime_count") if the gcd moved
// within the final stabilization_window primes.
BigInt ng_oracle(unsigned g, std::size_t prime_count = kDefaultOraclePrimeCount,
                 std::size_t stabilization_window = kDefaultOracleWindow);

struct ProductIdentityReport {
  BigInt lhs;  // prod_{i<=g} n_i
  BigInt rhs;  // prod_{p <= 2g+1} ([2gp/(p-1)]!)_p
  bool equal;
  // Factors for 2g+1 < p <= 4g+4 were computed and all equal 1.
  bool tail_trivial;
};

ProductIdentityReport product_identity_check(unsigned g);

// prod_{i<=g} n_i from ng_local.
BigInt ng_product(unsigned g);

// denominator(|p(g)|) divides prod_{i<=g} n_i.
bool denominator_corollary_check(unsigned g);

struct TorsionReport {
  unsigned g;
  BigInt n_g;
  BigInt lower_bound_lambda;   // n_g / 2
  BigInt scheme_upper_bound;   // (g-1)! n_g
  BigInt stack_upper_bound;    // (g-1)! prod_{i<=g} n_i
  std::map<unsigned, BigInt> r_orders;  // i -> n_i / 2, the order of r_{2i}
};

TorsionReport torsion_report(unsigned g);

struct BoundaryCoefficient {
  ExactRational value;  // (-1)^g / zeta(1 - 2g)
  bool is_integer;
};

BoundaryCoefficient boundary_coefficient(unsigned g);

// |b_{2g} (2g-1) (2g-2)! / (2g)!| == |zeta(1 - 2g)|.
bool grr_chain_check(unsigned g);

// n_g / 2: the order of r_{2g} = lambda_g^2, hence a lower bound for the
// order of lambda_g.
BigInt lambda_square_order_note(unsigned g);

}  // namespace tautorder
