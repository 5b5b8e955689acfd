#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tautorder/exact_arith.hpp"

namespace tautorder {

inline constexpr std::size_t kMaxGenerators = 16;
inline constexpr unsigned kMaxTruncation = 255;

// Exponent vector; entries past the generator count stay zero.
using Exponents = std::array<std::uint8_t, kMaxGenerators>;

// Named generators with positive integer weights.
class Generators {
 public:
  Generators(std::vector<std::string> names, std::vector<unsigned> weights);

  // x1..xg, all of weight 1.
  static std::shared_ptr<const Generators> chern_roots(unsigned g);
  // <prefix>1..<prefix>g with weight(<prefix>i) = i.
  static std::shared_ptr<const Generators> chern_classes(unsigned g, const std::string& prefix = "c");

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  unsigned weight(std::size_t i) const { return weights_[i]; }
  unsigned degree(const Exponents& e) const;

  friend bool operator==(const Generators&, const Generators&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<unsigned> weights_;
};

using GeneratorsPtr = std::shared_ptr<const Generators>;

// Sparse polynomial over ExactRational in weighted generators, truncated
// above a fixed weighted degree. No stored coefficient is zero and no
// stored term exceeds the truncation degree, so equality is map equality.
class GradedPolynomial {
 public:
  // Ordered lexicographically on exponent vectors; the last entry is the
  // lex-leading monomial.
  using TermMap = std::map<Exponents, ExactRational>;

  GradedPolynomial(GeneratorsPtr generators, unsigned truncation_degree);

  static GradedPolynomial constant(GeneratorsPtr generators, unsigned truncation_degree,
                                   const ExactRational& value);
  static GradedPolynomial generator(GeneratorsPtr generators, unsigned truncation_degree,
                                    std::size_t index);
  static GradedPolynomial monomial(GeneratorsPtr generators, unsigned truncation_degree,
                                   const Exponents& exponents, const ExactRational& coefficient);

  const GeneratorsPtr& generators() const { return generators_; }
  unsigned truncation_degree() const { return truncation_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExactRational coefficient(const Exponents& exponents) const;
  ExactRational constant_term() const { return coefficient(Exponents{}); }
  unsigned degree(const Exponents& exponents) const { return generators_->degree(exponents); }

  // Adds c * x^e; silently dropped when deg(e) exceeds the truncation.
  void add_term(const Exponents& exponents, const ExactRational& coefficient);

  GradedPolynomial homogeneous_component(unsigned degree) const;
  GradedPolynomial truncated(unsigned truncation_degree) const;

  GradedPolynomial& operator+=(const GradedPolynomial& rhs);
  GradedPolynomial& operator-=(const GradedPolynomial& rhs);
  GradedPolynomial& operator*=(const ExactRational& scalar);
  GradedPolynomial operator-() const;

  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
  friend GradedPolynomial operator*(GradedPolynomial a, const ExactRational& s) { return a *= s; }
  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);

  // Returns q with q * divisor = *this up to truncation. The divisor needs
  // a nonzero constant term.
  GradedPolynomial divided_by(const GradedPolynomial& divisor) const;
  GradedPolynomial inverse() const;

  // *this * f(x_index) where f(t) = sum_k series[k] t^k.
  GradedPolynomial times_series_in(std::size_t index, std::span<const ExactRational> series) const;

  // Replaces generator i by images[i]; all images share one generator set.
  GradedPolynomial substitute(const std::vector<GradedPolynomial>& images) const;

  // Sets the flagged generators to zero.
  GradedPolynomial with_generators_zeroed(const std::vector<bool>& zeroed) const;

  // Canonical text: ascending weighted degree, lex-descending within a
  // degree, explicit rational coefficients.
  std::string to_string() const;

  friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b);

 private:
  void require_compatible(const GradedPolynomial& other) const;

  GeneratorsPtr generators_;
  unsigned truncation_;
  TermMap terms_;
};

// Unit exponent vector for generator i.
Exponents unit_exponents(std::size_t index);

// e_k(x1..xg) truncated.
GradedPolynomial elementary_symmetric(const GeneratorsPtr& roots, unsigned truncation_degree, unsigned k);

struct SymmetricReduction {
  GradedPolynomial input;   // in Chern roots
  GradedPolynomial output;  // in c1..cg, weight(ci) = i
};

// Leading-term elimination against products of elementary symmetric
// polynomials. Throws std::invalid_argument if the input is not symmetric.
SymmetricReduction reduce_symmetric(const GradedPolynomial& in_roots, const std::string& class_prefix = "c");

// Substitutes e_i(roots) for c_i.
GradedPolynomial expand_in_roots(const GradedPolynomial& in_classes, const GeneratorsPtr& roots);

// sum_i e^{x_i}.
GradedPolynomial chern_character(unsigned g, unsigned depth);

enum class ToddVariant {
  kDual,      // prod x/(e^x - 1)
  kStandard,  // prod x/(1 - e^{-x})
};

GradedPolynomial todd_class(unsigned g, unsigned depth, ToddVariant variant);

// Total Chern class of sum_i (-1)^i [Lambda^i E] in the Chern roots.
GradedPolynomial lambda_star_class_in_roots(unsigned g, unsigned depth);

// Same, reduced to c1..cg. Requires depth >= g.
GradedPolynomial lambda_star_class(unsigned g, unsigned depth);

// Both forms of ch(Lambda_{-1}) = (+/-1)^g c_g Td^{-1}:
//   prod(1 - e^{x_i})  = (-1)^g c_g Td^dual(E)^{-1}
//   prod(1 - e^{-x_i}) = c_g Td(E)^{-1}
struct BorelSerreReport {
  bool dual_form;
  bool standard_form;
  bool holds() const { return dual_form && standard_form; }
};

BorelSerreReport borel_serre_report(unsigned g, unsigned depth);
bool borel_serre_check(unsigned g, unsigned depth);

// Power sum s_k expressed in c1..cg through Newton's recurrence.
GradedPolynomial newton_power_sum(unsigned g, unsigned k);

// With c1 = ... = c_{g-1} = 0, s_g = (-1)^{g-1} g c_g.
bool newton_special_case(unsigned g);

// Homogeneous components of degrees 1..max_degree of
// (1 + lambda1 + ... + lambda_g)(1 - lambda1 + ... + (-1)^g lambda_g) - 1.
std::vector<GradedPolynomial> fundamental_relations(unsigned g, unsigned max_degree);

}  // namespace tautorder
