#pragma once

#include <map>
#include <vector>

#include "tautorder/exact_arith.hpp"

namespace tautorder {

// Snapshot of Bernoulli numbers B_0, B_1 and every even index up to
// max_index. Odd indices >= 3 are zero and are not stored.
class BernoulliTable {
 public:
  explicit BernoulliTable(unsigned max_index);

  unsigned max_index() const { return max_index_; }
  const std::map<unsigned, ExactRational>& values() const { return values_; }
  ExactRational at(unsigned m) const;

 private:
  unsigned max_index_;
  std::map<unsigned, ExactRational> values_;
};

// B_m with B_1 = -1/2, i.e. the coefficients of t/(e^t - 1) = sum B_m t^m / m!.
ExactRational bernoulli(unsigned m);

// Product of primes p with (p - 1) | index. For even index this is the
// denominator of B_index.
BigInt von_staudt_denominator(unsigned even_index);

// zeta(1 - 2g) = -B_{2g} / (2g).
ExactRational zeta_neg(unsigned g);

struct ProportionalityResult {
  unsigned g;
  // (-1)^g prod_{j<=g} zeta(1 - 2j) / 2, taken literally.
  ExactRational signed_value;
  ExactRational absolute_value;
  BigInt denominator;
};

ProportionalityResult proportionality(unsigned g);

// Coefficients b_k / k! of t/(e^t - 1) for k = 0..depth, obtained by
// inverting the power series (e^t - 1)/t.
std::vector<ExactRational> todd_inverse_series(unsigned depth);

// Coefficients 1/(k+1)! of (e^t - 1)/t for k = 0..depth.
std::vector<ExactRational> exp_quotient_series(unsigned depth);

}  // namespace tautorder
