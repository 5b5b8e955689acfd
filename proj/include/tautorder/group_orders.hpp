#pragma once

#include <map>

#include "tautorder/exact_arith.hpp"

namespace tautorder {

struct SpOrderResult {
  unsigned g;
  std::uint64_t n;
  BigInt order;
  // prime -> #Sp(2g, Z/p^k) for the exact prime power p^k || n
  std::map<std::uint64_t, BigInt> local_factors;
};

// #Sp(2g, Z/p^k) = p^{(k-1) g(2g+1)} p^{g^2} prod_{i<=g} (p^{2i} - 1),
// multiplied over the prime powers of n.
SpOrderResult sp_order(unsigned g, std::uint64_t n);

struct DegreeIntegrality {
  ExactRational degree;  // #Sp(2g, Z/n) * |p(g)|
  bool integral;
};

// Only meaningful for n >= 3 (fine moduli); throws otherwise.
DegreeIntegrality degree_integrality(unsigned g, std::uint64_t n);

// (p - 1)(p^2 - 1)...(p^g - 1).
BigInt koblitz_coefficient(unsigned g, std::uint64_t p);

}  // namespace tautorder
