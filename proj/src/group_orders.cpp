#include "tautorder/group_orders.hpp"

#include <stdexcept>

#include "tautorder/bernoulli_zeta.hpp"

namespace tautorder {

SpOrderResult sp_order(unsigned g, std::uint64_t n) {
  if (g == 0) throw std::invalid_argument("g must be >= 1");
  if (n < 2) throw std::invalid_argument("sp_order needs n >= 2");
  SpOrderResult result{g, n, 1, {}};
  const unsigned long dim = static_cast<unsigned long>(g) * (2 * g + 1);
  for (const auto& factor : factorize(n)) {
    BigInt p(static_cast<unsigned long>(factor.prime()));
    BigInt local = pow(p, (factor.exponent() - 1) * dim + static_cast<unsigned long>(g) * g);
    for (unsigned i = 1; i <= g; ++i) local *= pow(p, 2 * i) - 1;
    result.order *= local;
    result.local_factors.emplace(factor.prime(), std::move(local));
  }
  return result;
}

DegreeIntegrality degree_integrality(unsigned g, std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("integrality only claimed for n >= 3");
  ExactRational degree = ExactRational(sp_order(g, n).order) * proportionality(g).absolute_value;
  return {degree, degree.is_integer()};
}

BigInt koblitz_coefficient(unsigned g, std::uint64_t p) {
  if (g == 0) throw std::invalid_argument("g must be >= 1");
  require_prime(p);
  BigInt prime(static_cast<unsigned long>(p));
  BigInt result = 1;
  for (unsigned i = 1; i <= g; ++i) result *= pow(prime, i) - 1;
  return result;
}

}  // namespace tautorder
