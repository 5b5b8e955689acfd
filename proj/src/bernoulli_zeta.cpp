#include "tautorder/bernoulli_zeta.hpp"

#include <mutex>
#include <stdexcept>

namespace tautorder {

namespace {

// Grows monotonically; entries are never rewritten once computed.
class BernoulliCache {
 public:
  ExactRational get(unsigned m) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (values_.size() <= m) extend();
    return values_[m];
  }

 private:
  // sum_{j=0}^{n} binom(n+1, j) B_j = 0.
  void extend() {
    unsigned n = static_cast<unsigned>(values_.size());
    if (n == 0) {
      values_.emplace_back(1);
      return;
    }
    if (n >= 3 && n % 2 == 1) {
      values_.emplace_back(0);
      return;
    }
    ExactRational sum;
    for (unsigned j = 0; j < n; ++j) {
      if (!values_[j].is_zero()) sum += ExactRational(binomial(n + 1, j)) * values_[j];
    }
    values_.push_back(-sum / ExactRational(n + 1));
  }

  std::mutex mutex_;
  std::vector<ExactRational> values_;
};

BernoulliCache& cache() {
  static BernoulliCache instance;
  return instance;
}

}  // namespace

ExactRational bernoulli(unsigned m) { return cache().get(m); }

BernoulliTable::BernoulliTable(unsigned max_index) : max_index_(max_index) {
  if (max_index == 0 || max_index % 2 != 0) {
    throw std::invalid_argument("BernoulliTable max_index must be even and positive");
  }
  values_.emplace(0, bernoulli(0));
  values_.emplace(1, bernoulli(1));
  for (unsigned m = 2; m <= max_index; m += 2) values_.emplace(m, bernoulli(m));
}

ExactRational BernoulliTable::at(unsigned m) const {
  if (m > max_index_) throw std::out_of_range("index beyond BernoulliTable range");
  if (m >= 3 && m % 2 == 1) return ExactRational(0);
  return values_.at(m);
}

BigInt von_staudt_denominator(unsigned even_index) {
  if (even_index == 0 || even_index % 2 != 0) {
    throw std::invalid_argument("von Staudt-Clausen needs a positive even index");
  }
  BigInt product = 1;
  for (std::uint64_t p : primes_up_to(even_index + 1)) {
    if (even_index % (p - 1) == 0) product *= static_cast<unsigned long>(p);
  }
  return product;
}

ExactRational zeta_neg(unsigned g) {
  if (g == 0) throw std::invalid_argument("zeta_neg needs g >= 1");
  return -bernoulli(2 * g) / ExactRational(2 * g);
}

ProportionalityResult proportionality(unsigned g) {
  if (g == 0) throw std::invalid_argument("proportionality needs g >= 1");
  ExactRational value(g % 2 == 0 ? 1 : -1);
  for (unsigned j = 1; j <= g; ++j) value *= zeta_neg(j) / ExactRational(2);
  ExactRational absolute = value.abs();
  return {g, value, absolute, absolute.denominator()};
}

std::vector<ExactRational> exp_quotient_series(unsigned depth) {
  std::vector<ExactRational> coeffs;
  coeffs.reserve(depth + 1);
  for (unsigned k = 0; k <= depth; ++k) coeffs.emplace_back(BigInt(1), factorial(k + 1));
  return coeffs;
}

std::vector<ExactRational> todd_inverse_series(unsigned depth) {
  // f = (e^t - 1)/t has f_0 = 1, so g = 1/f satisfies g_n = -sum_{j=1}^{n} f_j g_{n-j}.
  std::vector<ExactRational> f = exp_quotient_series(depth);
  std::vector<ExactRational> inverse(depth + 1);
  inverse[0] = ExactRational(1);
  for (unsigned n = 1; n <= depth; ++n) {
    ExactRational acc;
    for (unsigned j = 1; j <= n; ++j) acc += f[j] * inverse[n - j];
    inverse[n] = -acc;
  }
  return inverse;
}

}  // namespace tautorder
