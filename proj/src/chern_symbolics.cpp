#include "tautorder/chern_symbolics.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "tautorder/bernoulli_zeta.hpp"

namespace tautorder {

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::uint64_t lo;
    std::uint64_t hi;
    std::memcpy(&lo, e.data(), 8);
    std::memcpy(&hi, e.data() + 8, 8);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ull;
    h ^= hi + 0xC2B2AE3D27D4EB4Full + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

using Accumulator = std::unordered_map<Exponents, ExactRational, ExponentsHash>;

GradedPolynomial::TermMap to_term_map(Accumulator&& acc) {
  GradedPolynomial::TermMap terms;
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) terms.emplace(e, std::move(c));
  }
  return terms;
}

Exponents add_exponents(const Exponents& a, const Exponents& b, std::size_t n) {
  Exponents r{};
  for (std::size_t i = 0; i < n; ++i) {
    unsigned s = unsigned{a[i]} + b[i];
    if (s > kMaxTruncation) throw std::overflow_error("exponent overflow");
    r[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

void require_depth(unsigned depth) {
  if (depth == 0 || depth > kMaxTruncation) {
    throw std::invalid_argument("depth must be in [1, " + std::to_string(kMaxTruncation) + "]");
  }
}

void require_genus(unsigned g) {
  if (g == 0 || g > kMaxGenerators) {
    throw std::invalid_argument("g must be in [1, " + std::to_string(kMaxGenerators) + "]");
  }
}

// Builds prod_i f(x_i) with f given by its coefficients.
GradedPolynomial product_of_root_series(unsigned g, unsigned depth, const std::vector<ExactRational>& series) {
  auto roots = Generators::chern_roots(g);
  GradedPolynomial result = GradedPolynomial::constant(roots, depth, 1);
  for (std::size_t i = 0; i < g; ++i) result = result.times_series_in(i, series);
  return result;
}

std::vector<ExactRational> alternate_signs(std::vector<ExactRational> series) {
  for (std::size_t k = 1; k < series.size(); k += 2) series[k] = -series[k];
  return series;
}

// Coefficients of 1 - e^{t} (sign = +1) or 1 - e^{-t} (sign = -1).
std::vector<ExactRational> one_minus_exp(unsigned depth, int sign) {
  std::vector<ExactRational> series(depth + 1);
  for (unsigned k = 1; k <= depth; ++k) {
    ExactRational c(BigInt(1), factorial(k));
    series[k] = (sign < 0 && k % 2 == 1) ? c : -c;
  }
  return series;
}

GradedPolynomial top_root_monomial(unsigned g, unsigned depth) {
  Exponents e{};
  for (unsigned i = 0; i < g; ++i) e[i] = 1;
  return GradedPolynomial::monomial(Generators::chern_roots(g), depth, e, 1);
}

}  // namespace

Generators::Generators(std::vector<std::string> names, std::vector<unsigned> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw std::invalid_argument("names and weights differ in length");
  if (names_.size() > kMaxGenerators) throw std::invalid_argument("too many generators");
  for (unsigned w : weights_) {
    if (w == 0) throw std::invalid_argument("generator weights must be positive");
  }
}

std::shared_ptr<const Generators> Generators::chern_roots(unsigned g) {
  std::vector<std::string> names;
  for (unsigned i = 1; i <= g; ++i) names.push_back("x" + std::to_string(i));
  return std::make_shared<const Generators>(std::move(names), std::vector<unsigned>(g, 1));
}

std::shared_ptr<const Generators> Generators::chern_classes(unsigned g, const std::string& prefix) {
  std::vector<std::string> names;
  std::vector<unsigned> weights;
  for (unsigned i = 1; i <= g; ++i) {
    names.push_back(prefix + std::to_string(i));
    weights.push_back(i);
  }
  return std::make_shared<const Generators>(std::move(names), std::move(weights));
}

unsigned Generators::degree(const Exponents& e) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d += weights_[i] * e[i];
  return d;
}

Exponents unit_exponents(std::size_t index) {
  Exponents e{};
  e.at(index) = 1;
  return e;
}

GradedPolynomial::GradedPolynomial(GeneratorsPtr generators, unsigned truncation_degree)
    : generators_(std::move(generators)), truncation_(truncation_degree) {
  if (!generators_) throw std::invalid_argument("null generator set");
  if (truncation_ > kMaxTruncation) throw std::invalid_argument("truncation degree too large");
}

GradedPolynomial GradedPolynomial::constant(GeneratorsPtr generators, unsigned truncation_degree,
                                            const ExactRational& value) {
  GradedPolynomial p(std::move(generators), truncation_degree);
  p.add_term(Exponents{}, value);
  return p;
}

GradedPolynomial GradedPolynomial::generator(GeneratorsPtr generators, unsigned truncation_degree,
                                             std::size_t index) {
  if (index >= generators->size()) throw std::out_of_range("generator index");
  GradedPolynomial p(std::move(generators), truncation_degree);
  p.add_term(unit_exponents(index), 1);
  return p;
}

GradedPolynomial GradedPolynomial::monomial(GeneratorsPtr generators, unsigned truncation_degree,
                                            const Exponents& exponents, const ExactRational& coefficient) {
  GradedPolynomial p(std::move(generators), truncation_degree);
  p.add_term(exponents, coefficient);
  return p;
}

ExactRational GradedPolynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? ExactRational() : it->second;
}

void GradedPolynomial::add_term(const Exponents& exponents, const ExactRational& coefficient) {
  for (std::size_t i = generators_->size(); i < kMaxGenerators; ++i) {
    if (exponents[i] != 0) throw std::invalid_argument("exponent on a nonexistent generator");
  }
  if (coefficient.is_zero() || degree(exponents) > truncation_) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

GradedPolynomial GradedPolynomial::homogeneous_component(unsigned d) const {
  GradedPolynomial p(generators_, truncation_);
  for (const auto& [e, c] : terms_) {
    if (degree(e) == d) p.terms_.emplace(e, c);
  }
  return p;
}

GradedPolynomial GradedPolynomial::truncated(unsigned truncation_degree) const {
  GradedPolynomial p(generators_, std::min(truncation_, truncation_degree));
  for (const auto& [e, c] : terms_) {
    if (degree(e) <= p.truncation_) p.terms_.emplace(e, c);
  }
  return p;
}

void GradedPolynomial::require_compatible(const GradedPolynomial& other) const {
  if (generators_ != other.generators_ && !(*generators_ == *other.generators_)) {
    throw std::invalid_argument("polynomials over different generator sets");
  }
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& rhs) {
  require_compatible(rhs);
  if (rhs.truncation_ < truncation_) *this = truncated(rhs.truncation_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& rhs) {
  require_compatible(rhs);
  if (rhs.truncation_ < truncation_) *this = truncated(rhs.truncation_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const ExactRational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

GradedPolynomial GradedPolynomial::operator-() const {
  GradedPolynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
  a.require_compatible(b);
  const unsigned trunc = std::min(a.truncation_, b.truncation_);
  const std::size_t n = a.generators_->size();

  std::vector<std::vector<const GradedPolynomial::TermMap::value_type*>> by_degree(trunc + 1);
  for (const auto& term : b.terms_) {
    unsigned d = b.degree(term.first);
    if (d <= trunc) by_degree[d].push_back(&term);
  }

  Accumulator acc;
  for (const auto& [ea, ca] : a.terms_) {
    unsigned da = a.degree(ea);
    if (da > trunc) continue;
    for (unsigned db = 0; db + da <= trunc; ++db) {
      for (const auto* term : by_degree[db]) {
        acc[add_exponents(ea, term->first, n)] += ca * term->second;
      }
    }
  }
  GradedPolynomial result(a.generators_, trunc);
  result.terms_ = to_term_map(std::move(acc));
  return result;
}

GradedPolynomial GradedPolynomial::divided_by(const GradedPolynomial& divisor) const {
  require_compatible(divisor);
  const ExactRational lead = divisor.constant_term();
  if (lead.is_zero()) throw std::domain_error("divisor has zero constant term");
  const unsigned trunc = std::min(truncation_, divisor.truncation_);
  const std::size_t n = generators_->size();
  const ExactRational lead_inverse = lead.reciprocal();

  auto split = [&](const TermMap& terms) {
    std::vector<std::vector<std::pair<Exponents, ExactRational>>> parts(trunc + 1);
    for (const auto& [e, c] : terms) {
      unsigned d = degree(e);
      if (d <= trunc) parts[d].emplace_back(e, c);
    }
    return parts;
  };
  auto numerator = split(terms_);
  auto denominator = split(divisor.terms_);

  // q_d = (p_d - sum_{j>=1} u_j q_{d-j}) / u_0
  std::vector<std::vector<std::pair<Exponents, ExactRational>>> quotient(trunc + 1);
  for (unsigned d = 0; d <= trunc; ++d) {
    Accumulator acc;
    for (const auto& [e, c] : numerator[d]) acc[e] += c;
    for (unsigned j = 1; j <= d; ++j) {
      for (const auto& [eu, cu] : denominator[j]) {
        for (const auto& [eq, cq] : quotient[d - j]) acc[add_exponents(eu, eq, n)] -= cu * cq;
      }
    }
    for (auto& [e, c] : acc) {
      if (!c.is_zero()) quotient[d].emplace_back(e, c * lead_inverse);
    }
  }

  GradedPolynomial result(generators_, trunc);
  for (auto& part : quotient) {
    for (auto& [e, c] : part) result.terms_.emplace(e, std::move(c));
  }
  return result;
}

GradedPolynomial GradedPolynomial::inverse() const {
  return constant(generators_, truncation_, 1).divided_by(*this);
}

GradedPolynomial GradedPolynomial::times_series_in(std::size_t index, std::span<const ExactRational> series) const {
  if (index >= generators_->size()) throw std::out_of_range("generator index");
  const unsigned w = generators_->weight(index);
  Accumulator acc;
  for (const auto& [e, c] : terms_) {
    unsigned d = degree(e);
    Exponents shifted = e;
    for (std::size_t k = 0; k < series.size() && d + k * w <= truncation_; ++k) {
      if (k > 0) {
        if (shifted[index] == kMaxTruncation) throw std::overflow_error("exponent overflow");
        ++shifted[index];
      }
      if (!series[k].is_zero()) acc[shifted] += c * series[k];
    }
  }
  GradedPolynomial result(generators_, truncation_);
  result.terms_ = to_term_map(std::move(acc));
  return result;
}

GradedPolynomial GradedPolynomial::substitute(const std::vector<GradedPolynomial>& images) const {
  if (images.size() != generators_->size()) throw std::invalid_argument("one image per generator required");
  if (images.empty()) throw std::invalid_argument("cannot substitute into a polynomial without generators");
  const GeneratorsPtr& target = images.front().generators();
  unsigned trunc = images.front().truncation_degree();
  for (const auto& img : images) {
    img.require_compatible(images.front());
    trunc = std::min(trunc, img.truncation_degree());
  }

  // powers[i][k] = images[i]^k, built lazily.
  std::vector<std::vector<GradedPolynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const GradedPolynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, trunc, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  GradedPolynomial result(target, trunc);
  for (const auto& [e, c] : terms_) {
    GradedPolynomial term = constant(target, trunc, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (e[i]) term = term * power(i, e[i]);
    }
    result += term;
  }
  return result;
}

GradedPolynomial GradedPolynomial::with_generators_zeroed(const std::vector<bool>& zeroed) const {
  GradedPolynomial result(generators_, truncation_);
  for (const auto& [e, c] : terms_) {
    bool keep = true;
    for (std::size_t i = 0; i < zeroed.size() && i < generators_->size(); ++i) {
      if (zeroed[i] && e[i] != 0) keep = false;
    }
    if (keep) result.terms_.emplace(e, c);
  }
  return result;
}

std::string GradedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<unsigned, const TermMap::value_type*>> ordered;
  for (const auto& term : terms_) ordered.emplace_back(degree(term.first), &term);
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second->first > b.second->first;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto& [d, term] : ordered) {
    const auto& [e, c] = *term;
    ExactRational magnitude = c.abs();
    if (first) {
      if (c.sign() < 0) out << '-';
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < generators_->size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += generators_->name(i);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << magnitude.to_string();
    } else if (magnitude == ExactRational(1)) {
      out << mono;
    } else {
      out << magnitude.to_string() << '*' << mono;
    }
  }
  return out.str();
}

bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
  if (!(*a.generators_ == *b.generators_)) return false;
  return a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
}

GradedPolynomial elementary_symmetric(const GeneratorsPtr& roots, unsigned truncation_degree, unsigned k) {
  GradedPolynomial result(roots, truncation_degree);
  const std::size_t n = roots->size();
  if (k > n) return result;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Exponents e{};
    for (std::size_t i = 0; i < n; ++i) e[i] = pick[i] ? 1 : 0;
    result.add_term(e, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return result;
}

SymmetricReduction reduce_symmetric(const GradedPolynomial& in_roots, const std::string& class_prefix) {
  const GeneratorsPtr& roots = in_roots.generators();
  const std::size_t n = roots->size();
  for (std::size_t i = 0; i < n; ++i) {
    if (roots->weight(i) != 1) throw std::invalid_argument("symmetric reduction expects weight-1 roots");
  }
  const unsigned trunc = in_roots.truncation_degree();
  auto classes = Generators::chern_classes(static_cast<unsigned>(n), class_prefix);

  std::vector<GradedPolynomial> elementary;
  for (unsigned k = 1; k <= n; ++k) elementary.push_back(elementary_symmetric(roots, trunc, k));

  // Products e_1^{a_1}...e_n^{a_n}, keyed by the class exponent vector.
  std::map<Exponents, GradedPolynomial> products;
  products.emplace(Exponents{}, GradedPolynomial::constant(roots, trunc, 1));
  auto product_for = [&](auto&& self, const Exponents& key) -> const GradedPolynomial& {
    if (auto it = products.find(key); it != products.end()) return it->second;
    std::size_t j = 0;
    while (key[j] == 0) ++j;
    Exponents smaller = key;
    --smaller[j];
    GradedPolynomial value = self(self, smaller) * elementary[j];
    return products.emplace(key, std::move(value)).first->second;
  };

  GradedPolynomial remainder = in_roots;
  GradedPolynomial output(classes, trunc);
  while (!remainder.is_zero()) {
    const auto& [lead, coeff] = *remainder.terms().rbegin();
    Exponents class_exponents{};
    for (std::size_t i = 0; i < n; ++i) {
      unsigned next = i + 1 < n ? lead[i + 1] : 0;
      if (lead[i] < next) throw std::invalid_argument("polynomial is not symmetric in its roots");
      class_exponents[i] = static_cast<std::uint8_t>(lead[i] - next);
    }
    const ExactRational c = coeff;
    output.add_term(class_exponents, c);
    remainder -= product_for(product_for, class_exponents) * c;
  }
  return {in_roots, output};
}

GradedPolynomial expand_in_roots(const GradedPolynomial& in_classes, const GeneratorsPtr& roots) {
  const std::size_t n = in_classes.generators()->size();
  if (roots->size() != n) throw std::invalid_argument("root count must match class count");
  std::vector<GradedPolynomial> images;
  for (unsigned k = 1; k <= n; ++k) {
    images.push_back(elementary_symmetric(roots, in_classes.truncation_degree(), k));
  }
  return in_classes.substitute(images);
}

GradedPolynomial chern_character(unsigned g, unsigned depth) {
  require_genus(g);
  require_depth(depth);
  auto roots = Generators::chern_roots(g);
  GradedPolynomial result(roots, depth);
  for (std::size_t i = 0; i < g; ++i) {
    Exponents e{};
    for (unsigned k = 0; k <= depth; ++k) {
      e[i] = static_cast<std::uint8_t>(k);
      result.add_term(e, ExactRational(BigInt(1), factorial(k)));
    }
  }
  return result;
}

GradedPolynomial todd_class(unsigned g, unsigned depth, ToddVariant variant) {
  require_genus(g);
  require_depth(depth);
  // t/(1 - e^{-t}) is t/(e^t - 1) evaluated at -t.
  std::vector<ExactRational> series = todd_inverse_series(depth);
  if (variant == ToddVariant::kStandard) series = alternate_signs(std::move(series));
  return product_of_root_series(g, depth, series);
}

GradedPolynomial lambda_star_class_in_roots(unsigned g, unsigned depth) {
  require_genus(g);
  require_depth(depth);
  auto roots = Generators::chern_roots(g);
  GradedPolynomial total = GradedPolynomial::constant(roots, depth, 1);
  // Lambda^i E splits into line elements with roots x_S, |S| = i; odd i
  // enter the virtual class with a minus sign, hence as inverses.
  for (std::uint32_t mask = 1; mask < (1u << g); ++mask) {
    GradedPolynomial factor = GradedPolynomial::constant(roots, depth, 1);
    for (unsigned i = 0; i < g; ++i) {
      if (mask & (1u << i)) factor.add_term(unit_exponents(i), 1);
    }
    if (__builtin_popcount(mask) % 2 == 0) {
      total = total * factor;
    } else {
      total = total.divided_by(factor);
    }
  }
  return total;
}

GradedPolynomial lambda_star_class(unsigned g, unsigned depth) {
  if (depth < g) throw std::invalid_argument("depth < g: degree-g coefficient is the payload");
  return reduce_symmetric(lambda_star_class_in_roots(g, depth)).output;
}

BorelSerreReport borel_serre_report(unsigned g, unsigned depth) {
  if (depth < g) throw std::invalid_argument("borel_serre_check needs depth >= g");
  GradedPolynomial top = top_root_monomial(g, depth);

  GradedPolynomial lhs_dual = product_of_root_series(g, depth, one_minus_exp(depth, +1));
  GradedPolynomial rhs_dual = top * todd_class(g, depth, ToddVariant::kDual).inverse();
  if (g % 2 == 1) rhs_dual = -rhs_dual;

  GradedPolynomial lhs_standard = product_of_root_series(g, depth, one_minus_exp(depth, -1));
  GradedPolynomial rhs_standard = top * todd_class(g, depth, ToddVariant::kStandard).inverse();

  return {lhs_dual == rhs_dual, lhs_standard == rhs_standard};
}

bool borel_serre_check(unsigned g, unsigned depth) { return borel_serre_report(g, depth).holds(); }

GradedPolynomial newton_power_sum(unsigned g, unsigned k) {
  require_genus(g);
  require_depth(k);
  auto classes = Generators::chern_classes(g);
  auto c = [&](unsigned i) {
    return i <= g ? GradedPolynomial::generator(classes, k, i - 1) : GradedPolynomial(classes, k);
  };
  // s_m = sum_{i=1}^{m-1} (-1)^{i-1} c_i s_{m-i} + (-1)^{m-1} m c_m
  std::vector<GradedPolynomial> s;
  s.emplace_back(classes, k);
  for (unsigned m = 1; m <= k; ++m) {
    GradedPolynomial sm = c(m) * ExactRational(m % 2 == 1 ? static_cast<long>(m) : -static_cast<long>(m));
    for (unsigned i = 1; i < m; ++i) {
      GradedPolynomial term = c(i) * s[m - i];
      if (i % 2 == 0) term = -term;
      sm += term;
    }
    s.push_back(std::move(sm));
  }
  return s[k];
}

bool newton_special_case(unsigned g) {
  GradedPolynomial s = newton_power_sum(g, g);
  std::vector<bool> zeroed(g, true);
  zeroed[g - 1] = false;
  GradedPolynomial expected = GradedPolynomial::generator(s.generators(), g, g - 1) *
                              ExactRational(g % 2 == 1 ? static_cast<long>(g) : -static_cast<long>(g));
  return s.with_generators_zeroed(zeroed) == expected;
}

std::vector<GradedPolynomial> fundamental_relations(unsigned g, unsigned max_degree) {
  require_genus(g);
  if (max_degree == 0 || max_degree > 2 * g) throw std::invalid_argument("max_degree must be in [1, 2g]");
  auto lambdas = Generators::chern_classes(g, "lambda");
  GradedPolynomial plus = GradedPolynomial::constant(lambdas, max_degree, 1);
  GradedPolynomial minus = plus;
  for (unsigned i = 1; i <= g; ++i) {
    plus.add_term(unit_exponents(i - 1), 1);
    minus.add_term(unit_exponents(i - 1), i % 2 == 0 ? 1 : -1);
  }
  GradedPolynomial relation = plus * minus - GradedPolynomial::constant(lambdas, max_degree, 1);
  std::vector<GradedPolynomial> components;
  for (unsigned d = 1; d <= max_degree; ++d) components.push_back(relation.homogeneous_component(d));
  return components;
}

}  // namespace tautorder
