#include "tautorder/finite_field_checks.hpp"

#include <sstream>
#include <stdexcept>

namespace tautorder {

namespace {

using RationalPoly = std::vector<ExactRational>;

void strip(RationalPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  strip(r);
  return r;
}

RationalPoly poly_sub(RationalPoly a, const RationalPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  strip(a);
  return a;
}

// Quotient and remainder of a by a nonzero divisor.
std::pair<RationalPoly, RationalPoly> poly_divmod(RationalPoly a, const RationalPoly& divisor) {
  strip(a);
  const std::size_t dd = divisor.size() - 1;
  if (a.size() < divisor.size()) return {{}, a};
  RationalPoly q(a.size() - dd);
  const ExactRational lead_inverse = divisor.back().reciprocal();
  for (std::size_t i = a.size(); i-- > dd;) {
    if (a[i].is_zero()) continue;
    ExactRational c = a[i] * lead_inverse;
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) a[i - dd + j] -= c * divisor[j];
  }
  strip(q);
  a.resize(dd);
  strip(a);
  return {q, a};
}

RationalPoly reduce(RationalPoly a, const CyclotomicField& field) {
  auto remainder = poly_divmod(std::move(a), field.modulus()).second;
  remainder.resize(field.degree());
  return remainder;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

ModPPolynomial::ModPPolynomial(std::uint64_t modulus, std::vector<std::uint64_t> coefficients)
    : modulus_(modulus), coeffs_(std::move(coefficients)) {
  if (modulus_ >= (1ull << 32)) throw std::invalid_argument("modulus must be below 2^32");
  require_prime(modulus_, "modulus");
  for (auto& c : coeffs_) c %= modulus_;
  normalize();
}

ModPPolynomial ModPPolynomial::monomial(std::uint64_t modulus, std::size_t degree, std::uint64_t coefficient) {
  std::vector<std::uint64_t> coeffs(degree + 1, 0);
  coeffs[degree] = coefficient;
  return ModPPolynomial(modulus, std::move(coeffs));
}

void ModPPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void ModPPolynomial::require_same_field(const ModPPolynomial& other) const {
  if (modulus_ != other.modulus_) throw std::invalid_argument("polynomials over different prime fields");
}

ModPPolynomial& ModPPolynomial::operator+=(const ModPPolynomial& rhs) {
  require_same_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + rhs.coeffs_[i]) % modulus_;
  normalize();
  return *this;
}

ModPPolynomial operator*(const ModPPolynomial& a, const ModPPolynomial& b) {
  a.require_same_field(b);
  if (a.is_zero() || b.is_zero()) return ModPPolynomial(a.modulus_);
  std::vector<std::uint64_t> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r[i + j] = (r[i + j] + a.coeffs_[i] * b.coeffs_[j]) % a.modulus_;
    }
  }
  return ModPPolynomial(a.modulus_, std::move(r));
}

ModPPolynomial ModPPolynomial::pow(std::uint64_t exponent) const {
  ModPPolynomial result(modulus_, {1});
  ModPPolynomial base = *this;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

std::string ModPPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << coeffs_[i];
      continue;
    }
    if (coeffs_[i] != 1) out << coeffs_[i] << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

CyclotomicField::CyclotomicField(std::uint64_t prime, unsigned k) : prime_(prime), k_(k) {
  require_prime(prime, "l");
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  level_ = ipow(prime, k);
  const std::uint64_t step = level_ / prime;
  phi_ = static_cast<std::size_t>(step * (prime - 1));
  modulus_.assign(phi_ + 1, ExactRational());
  for (std::uint64_t j = 0; j < prime; ++j) modulus_[j * step] = ExactRational(1);
}

CyclotomicElement::CyclotomicElement(std::shared_ptr<const CyclotomicField> field, std::vector<ExactRational> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  coeffs_ = reduce(std::move(coeffs_), *field_);
}

CyclotomicElement CyclotomicElement::zeta_power(std::shared_ptr<const CyclotomicField> field, std::int64_t exponent) {
  const auto m = static_cast<std::int64_t>(field->level());
  std::int64_t e = ((exponent % m) + m) % m;
  std::vector<ExactRational> coeffs(static_cast<std::size_t>(e) + 1);
  coeffs[static_cast<std::size_t>(e)] = ExactRational(1);
  return CyclotomicElement(std::move(field), std::move(coeffs));
}

CyclotomicElement CyclotomicElement::from_rational(std::shared_ptr<const CyclotomicField> field, const ExactRational& value) {
  return CyclotomicElement(std::move(field), {value});
}

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
  std::vector<ExactRational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return CyclotomicElement(a.field_, std::move(c));
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
  std::vector<ExactRational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return CyclotomicElement(a.field_, std::move(c));
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.field_->level() != b.field_->level()) throw std::invalid_argument("elements of different fields");
  RationalPoly pa = a.coeffs_;
  RationalPoly pb = b.coeffs_;
  strip(pa);
  strip(pb);
  return CyclotomicElement(a.field_, poly_mul(pa, pb));
}

CyclotomicElement CyclotomicElement::pow(unsigned exponent) const {
  CyclotomicElement result = from_rational(field_, 1);
  CyclotomicElement base = *this;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  // Extended Euclid: track s with s * a == r (mod Phi).
  RationalPoly r0 = field_->modulus();
  RationalPoly r1 = coeffs_;
  strip(r1);
  RationalPoly s0;
  RationalPoly s1{ExactRational(1)};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    RationalPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // Phi is irreducible, so the last nonzero remainder is a unit constant.
  const ExactRational scale = r1.front().reciprocal();
  for (auto& c : s1) c *= scale;
  return CyclotomicElement(field_, std::move(s1));
}

CyclotomicElement CyclotomicElement::conjugate() const {
  CyclotomicElement result = from_rational(field_, 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    CyclotomicElement term = zeta_power(field_, -static_cast<std::int64_t>(j));
    for (auto& c : term.coeffs_) c *= coeffs_[j];
    result = result + term;
  }
  return result;
}

ExactRational CyclotomicElement::trace() const {
  ExactRational total;
  for (std::size_t i = 0; i < field_->degree(); ++i) {
    total += ((*this) * zeta_power(field_, static_cast<std::int64_t>(i))).coeffs_[i];
  }
  return total;
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

HurwitzGenus hurwitz_genus(std::uint64_t prime, unsigned k) {
  require_prime(prime, "l");
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (prime == 2 && k < 3) throw std::invalid_argument("the cover for l = 2 needs k >= 3");
  const std::uint64_t level = ipow(prime, k);
  const std::uint64_t step = level / prime;

  // Z/l^k cover of P^1 branched over three points with ramification
  // orders l^k, l^k, l.
  const auto n = static_cast<std::int64_t>(level);
  std::int64_t euler = -2 * n + 2 * (n - 1) + static_cast<std::int64_t>(level - step);
  std::uint64_t rh_genus = static_cast<std::uint64_t>(euler + 2) / 2;

  std::uint64_t genus = prime == 2 ? (1ull << (k - 3)) : step * (prime - 1) / 2;
  return {genus, rh_genus, genus == rh_genus};
}

ModPPolynomial cyclotomic_chern_product(std::uint64_t prime, unsigned k) {
  require_prime(prime, "l");
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  const std::uint64_t level = ipow(prime, k);
  ModPPolynomial product(prime, {1});
  for (std::uint64_t i = 1; i <= level; ++i) {
    if (i % prime == 0) continue;
    product = product * ModPPolynomial(prime, {1, i % prime});
  }
  return product;
}

CyclotomicChernReport cyclotomic_chern_check(std::uint64_t prime, unsigned k) {
  ModPPolynomial product = cyclotomic_chern_product(prime, k);
  const std::uint64_t step = ipow(prime, k - 1);
  const std::uint64_t top = step * (prime - 1);
  ModPPolynomial one(prime, {1});
  ModPPolynomial closed = (one + ModPPolynomial::monomial(prime, prime - 1, prime - 1)).pow(step);
  ModPPolynomial literal = (one + ModPPolynomial::monomial(prime, prime - 1, 1)).pow(step);
  bool equal = product == closed;
  bool literal_equal = product == literal;
  bool nonzero = product.coefficient(top) != 0;
  return {std::move(product), std::move(closed), std::move(literal), equal, literal_equal, top, nonzero};
}

ExactRational determinant(std::vector<std::vector<ExactRational>> m) {
  const std::size_t n = m.size();
  ExactRational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return ExactRational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const ExactRational inv = m[col][col].reciprocal();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      ExactRational factor = m[row][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  return det;
}

unsigned different_exponent(std::uint64_t prime, unsigned k) {
  require_prime(prime, "l");
  if (k == 0) throw std::invalid_argument("k must be positive");
  std::uint64_t step = 1;
  for (unsigned i = 1; i < k; ++i) step *= prime;
  return static_cast<unsigned>(k * step * (prime - 1) - step);
}

PairingGram pairing_gram(std::uint64_t prime, unsigned k, unsigned exponent, std::size_t rank_cap) {
  require_prime(prime, "l");
  if (prime == 2) throw std::invalid_argument("symplectic pairing check needs odd l");
  auto field = std::make_shared<const CyclotomicField>(prime, k);
  const std::size_t n = field->degree();
  if (n > rank_cap) {
    throw std::invalid_argument("phi(l^k) = " + std::to_string(n) + " exceeds rank cap " + std::to_string(rank_cap));
  }

  CyclotomicElement pi = CyclotomicElement::zeta_power(field, 1) - CyclotomicElement::zeta_power(field, -1);
  const CyclotomicElement weight = pi.pow(exponent).inverse();

  auto pairing = [&](const CyclotomicElement& a, const CyclotomicElement& b) {
    return (a * b.conjugate() * weight).trace();
  };

  std::vector<CyclotomicElement> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(CyclotomicElement::zeta_power(field, static_cast<std::int64_t>(i)));
  const CyclotomicElement zeta = CyclotomicElement::zeta_power(field, 1);

  PairingGram out{exponent, {}, ExactRational(), true, true, true};
  out.gram.assign(n, std::vector<ExactRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.gram[i][j] = pairing(basis[i], basis[j]);
      if (!out.gram[i][j].is_integer()) out.integral = false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (out.gram[i][j] != -out.gram[j][i]) out.skew = false;
      if (pairing(zeta * basis[i], zeta * basis[j]) != out.gram[i][j]) out.invariant = false;
    }
  }
  out.determinant = determinant(out.gram);
  return out;
}

SymplecticPairingReport symplectic_pairing_check(std::uint64_t prime, unsigned k, std::size_t rank_cap) {
  require_prime(prime, "l");
  if (prime == 2) throw std::invalid_argument("symplectic pairing check needs odd l");
  if (k == 0) throw std::invalid_argument("k must be positive");
  std::uint64_t level = 1;
  for (unsigned i = 0; i < k; ++i) level *= prime;
  PairingGram main = pairing_gram(prime, k, static_cast<unsigned>(level - level / prime - 1), rank_cap);
  PairingGram corrected = main.exponent == different_exponent(prime, k)
                              ? main
                              : pairing_gram(prime, k, different_exponent(prime, k), rank_cap);
  const std::size_t rank = main.gram.size();
  return {rank, std::move(main.gram), main.determinant, main.integral, main.skew, main.invariant, std::move(corrected)};
}

}  // namespace tautorder
