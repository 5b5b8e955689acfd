#include "tautorder/exact_arith.hpp"

#include <array>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace tautorder {

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

ExactRational ExactRational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return ExactRational(parse_bigint(text));
  return ExactRational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

ExactRational ExactRational::abs() const { return ExactRational(mpq_class(::abs(value_))); }

ExactRational ExactRational::reciprocal() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return ExactRational(mpq_class(1 / value_));
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-value_)); }

std::string ExactRational::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const ExactRational& q) { return os << q.to_string(); }

PrimeLocalOrder::PrimeLocalOrder(std::uint64_t prime, unsigned exponent)
    : prime_(prime), exponent_(exponent) {
  require_prime(prime, "prime");
}

BigInt PrimeLocalOrder::value() const { return pow(BigInt(static_cast<unsigned long>(prime_)), exponent_); }

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set below 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::string(what) + " = " + std::to_string(p) + " is not prime");
  }
}

unsigned valuation(const BigInt& n, std::uint64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero undefined");
  require_prime(p);
  BigInt m = ::abs(n);
  BigInt prime(static_cast<unsigned long>(p));
  unsigned e = 0;
  while (mpz_divisible_p(m.get_mpz_t(), prime.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t());
    ++e;
  }
  return e;
}

std::uint64_t factorial_p_valuation(std::uint64_t m, std::uint64_t p) {
  require_prime(p);
  std::uint64_t total = 0;
  for (std::uint64_t q = m / p; q > 0; q /= p) total += q;
  return total;
}

std::vector<std::uint64_t> primes_above(std::int64_t bound, std::size_t count) {
  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  std::uint64_t candidate = bound < 2 ? 2 : static_cast<std::uint64_t>(bound) + 1;
  while (primes.size() < count) {
    if (is_prime(candidate)) primes.push_back(candidate);
    ++candidate;
  }
  return primes;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<PrimeLocalOrder> factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("cannot factor zero");
  std::vector<PrimeLocalOrder> factors;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt result;
  mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace tautorder
