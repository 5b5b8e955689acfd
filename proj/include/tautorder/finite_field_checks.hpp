#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tautorder/exact_arith.hpp"

namespace tautorder {

// Dense univariate polynomial over F_p, p < 2^32. Trailing zero
// coefficients are stripped; the zero polynomial has no coefficients.
class ModPPolynomial {
 public:
  explicit ModPPolynomial(std::uint64_t modulus, std::vector<std::uint64_t> coefficients = {});

  static ModPPolynomial monomial(std::uint64_t modulus, std::size_t degree, std::uint64_t coefficient);

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::uint64_t coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  ModPPolynomial& operator+=(const ModPPolynomial& rhs);
  friend ModPPolynomial operator+(ModPPolynomial a, const ModPPolynomial& b) { return a += b; }
  friend ModPPolynomial operator*(const ModPPolynomial& a, const ModPPolynomial& b);
  ModPPolynomial pow(std::uint64_t exponent) const;

  friend bool operator==(const ModPPolynomial&, const ModPPolynomial&) = default;

  // "1 + 2*x^2" style, ascending degree.
  std::string to_string() const;

 private:
  void normalize();
  void require_same_field(const ModPPolynomial& other) const;

  std::uint64_t modulus_;
  std::vector<std::uint64_t> coeffs_;
};

// The cyclotomic field Q(zeta) for a primitive m-th root of unity with
// m = l^k, presented as Q[x] / Phi_m(x).
class CyclotomicField {
 public:
  CyclotomicField(std::uint64_t prime, unsigned k);

  std::uint64_t prime() const { return prime_; }
  unsigned exponent() const { return k_; }
  std::uint64_t level() const { return level_; }
  std::size_t degree() const { return phi_; }
  // Phi_m = sum_{j<l} x^{j l^{k-1}}, monic, length phi + 1.
  const std::vector<ExactRational>& modulus() const { return modulus_; }

 private:
  std::uint64_t prime_;
  unsigned k_;
  std::uint64_t level_;
  std::size_t phi_;
  std::vector<ExactRational> modulus_;
};

// Element of Q(zeta) in the power basis zeta^0..zeta^{phi-1}.
class CyclotomicElement {
 public:
  CyclotomicElement(std::shared_ptr<const CyclotomicField> field, std::vector<ExactRational> coefficients);

  static CyclotomicElement zeta_power(std::shared_ptr<const CyclotomicField> field, std::int64_t exponent);
  static CyclotomicElement from_rational(std::shared_ptr<const CyclotomicField> field, const ExactRational& value);

  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  const std::vector<ExactRational>& coefficients() const { return coeffs_; }

  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  CyclotomicElement pow(unsigned exponent) const;
  CyclotomicElement inverse() const;
  // zeta -> zeta^{-1}
  CyclotomicElement conjugate() const;
  // Trace of the multiplication-by-this map on the power basis.
  ExactRational trace() const;
  bool is_zero() const;

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.coeffs_ == b.coeffs_ && a.field_->level() == b.field_->level();
  }

 private:
  std::shared_ptr<const CyclotomicField> field_;
  std::vector<ExactRational> coeffs_;
};

struct HurwitzGenus {
  std::uint64_t genus;
  // From 2g - 2 = -2 l^k + 2(l^k - 1) + l^{k-1}(l - 1), the cover with
  // ramification orders l^k, l^k, l.
  std::uint64_t riemann_hurwitz_genus;
  // Always true for odd l; for l = 2 the closed form 2^{k-3} is half
  // the Riemann-Hurwitz genus 2^{k-2}.
  bool riemann_hurwitz_consistent;
};

// g = l^{k-1}(l-1)/2 for odd l, g = 2^{k-3} for l = 2 (k >= 3).
HurwitzGenus hurwitz_genus(std::uint64_t prime, unsigned k);

// prod_{1 <= i <= l^k, gcd(i, l) = 1} (1 + i x) mod l.
ModPPolynomial cyclotomic_chern_product(std::uint64_t prime, unsigned k);

struct CyclotomicChernReport {
  ModPPolynomial product;
  ModPPolynomial closed_form;  // (1 - x^{l-1})^{l^{k-1}}
  ModPPolynomial literal_form;  // (1 + x^{l-1})^{l^{k-1}}
  bool equal;                   // product == closed_form
  bool literal_equal;           // product == literal_form
  std::uint64_t top_degree;     // l^{k-1}(l-1)
  bool top_coefficient_nonzero;
};

CyclotomicChernReport cyclotomic_chern_check(std::uint64_t prime, unsigned k);

inline constexpr std::size_t kDefaultPairingRankCap = 16;

struct PairingGram {
  unsigned exponent;  // the weight is (zeta - zeta^{-1})^{-exponent}
  std::vector<std::vector<ExactRational>> gram;  // gram[i][j] = B(zeta^i, zeta^j)
  ExactRational determinant;
  bool integral;
  bool skew;
  bool invariant;

  bool perfect() const { return integral && skew && invariant && determinant.abs() == ExactRational(1); }
};

struct SymplecticPairingReport {
  std::size_t rank;
  std::vector<std::vector<ExactRational>> gram;
  ExactRational gram_determinant;
  bool integral;
  bool skew;
  bool invariant;
  // Same construction with the exponent of the different of Z[zeta],
  // k*phi(l^k) - l^{k-1}. Agrees with the main exponent only for k = 1.
  PairingGram corrected;
};

// Exponent e with different(Z[zeta_{l^k}]) = ((zeta - zeta^{-1})^e).
unsigned different_exponent(std::uint64_t prime, unsigned k);

// Gram matrix of B(a, b) = Tr(a * conj(b) * (zeta - zeta^{-1})^{-exponent}) on the power basis.
PairingGram pairing_gram(std::uint64_t prime, unsigned k, unsigned exponent,
                         std::size_t rank_cap = kDefaultPairingRankCap);

// B(a, b) = Tr(a * conj(b) * (zeta - zeta^{-1})^{-l^k + l^{k-1} + 1}) on Z[zeta].
SymplecticPairingReport symplectic_pairing_check(std::uint64_t prime, unsigned k,
                                                 std::size_t rank_cap = kDefaultPairingRankCap);

// Exact determinant by Gaussian elimination over Q.
ExactRational determinant(std::vector<std::vector<ExactRational>> matrix);

}  // namespace tautorder
