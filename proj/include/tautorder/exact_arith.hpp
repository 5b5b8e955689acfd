#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tautorder {

using BigInt = mpz_class;

// Normalized arbitrary-precision fraction. The denominator is always
// positive and coprime to the numerator; zero is 0/1.
class ExactRational {
 public:
  ExactRational() = default;
  template <std::integral T>
  ExactRational(T value) : value_(BigInt(value)) {}
  ExactRational(const BigInt& value) : value_(value) {}
  ExactRational(const BigInt& numerator, const BigInt& denominator);
  ExactRational(long numerator, long denominator)
      : ExactRational(BigInt(numerator), BigInt(denominator)) {}

  // Parses "a" or "a/b".
  static ExactRational parse(const std::string& text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  ExactRational abs() const;
  ExactRational reciprocal() const;

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  // Exposes the backing value for code that needs raw GMP access.
  const mpq_class& raw() const { return value_; }

 private:
  explicit ExactRational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRational& q);

// A prime together with its exponent in a local-factor decomposition.
class PrimeLocalOrder {
 public:
  PrimeLocalOrder(std::uint64_t prime, unsigned exponent);

  std::uint64_t prime() const { return prime_; }
  unsigned exponent() const { return exponent_; }
  BigInt value() const;

  friend bool operator==(const PrimeLocalOrder&, const PrimeLocalOrder&) = default;

 private:
  std::uint64_t prime_;
  unsigned exponent_;
};

// Deterministic Miller-Rabin, exact on the full 64-bit range.
bool is_prime(std::uint64_t n);

// Throws std::invalid_argument unless p is prime.
void require_prime(std::uint64_t p, const char* what = "p");

// Largest e with p^e | n. Throws for n = 0 or composite p.
unsigned valuation(const BigInt& n, std::uint64_t p);

// Legendre's formula: v_p(m!) = sum_{i>=1} floor(m / p^i).
std::uint64_t factorial_p_valuation(std::uint64_t m, std::uint64_t p);

// First `count` primes strictly greater than `bound`, ascending.
std::vector<std::uint64_t> primes_above(std::int64_t bound, std::size_t count);

// Ascending primes p <= limit.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Prime-power factorization of a positive integer by trial division.
std::vector<PrimeLocalOrder> factorize(std::uint64_t n);

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt gcd(const BigInt& a, const BigInt& b);

// Exact integer parse; throws std::invalid_argument on malformed input.
BigInt parse_bigint(const std::string& text);

}  // namespace tautorder
