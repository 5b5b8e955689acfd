#include "tautorder/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "tautorder/bernoulli_zeta.hpp"
#include "tautorder/chern_symbolics.hpp"
#include "tautorder/finite_field_checks.hpp"
#include "tautorder/group_orders.hpp"
#include "tautorder/torsion_orders.hpp"

namespace tautorder::verify {

namespace {

std::string g_label(unsigned g) { return "g=" + std::to_string(g); }

std::string lk_label(std::uint64_t l, unsigned k) {
  return "l=" + std::to_string(l) + ",k=" + std::to_string(k);
}

unsigned range(const Options& options, unsigned fallback) { return options.max_g.value_or(fallback); }

BigInt table_ng(const Options& options, unsigned g) {
  if (auto it = options.ng_overrides.find(g); it != options.ng_overrides.end()) return it->second;
  return ng_local(g).value;
}

BigInt table_product(const Options& options, unsigned g) {
  BigInt product = 1;
  for (unsigned i = 1; i <= g; ++i) product *= table_ng(options, i);
  return product;
}

SuiteResult chern_lemma(const Options& options) {
  SuiteResult result{"chern-lemma", {}};
  for (unsigned g = 1; g <= range(options, 8); ++g) {
    GradedPolynomial total = lambda_star_class(g, g);
    bool low_zero = true;
    for (unsigned d = 1; d < g; ++d) low_zero = low_zero && total.homogeneous_component(d).is_zero();
    Exponents top{};
    top[g - 1] = 1;
    GradedPolynomial expected =
        GradedPolynomial::monomial(total.generators(), g, top, -ExactRational(factorial(g - 1)));
    GradedPolynomial degree_g = total.homogeneous_component(g);
    bool top_ok = degree_g == expected;
    result.cases.push_back({g_label(g), low_zero && top_ok, "degree " + std::to_string(g) + ": " + degree_g.to_string()});
  }
  return result;
}

SuiteResult borel_serre(const Options& options) {
  SuiteResult result{"borel-serre", {}};
  for (unsigned g = 1; g <= range(options, 6); ++g) {
    BorelSerreReport report = borel_serre_report(g, 2 * g);
    std::string detail = std::string("dual form ") + (report.dual_form ? "holds" : "fails") + ", standard form " +
                         (report.standard_form ? "holds" : "fails") + " to degree " + std::to_string(2 * g);
    result.cases.push_back({g_label(g), report.holds(), detail});
  }
  return result;
}

SuiteResult newton(const Options& options) {
  SuiteResult result{"newton", {}};
  for (unsigned g = 1; g <= range(options, 8); ++g) {
    result.cases.push_back({g_label(g), newton_special_case(g), "s_g = " + newton_power_sum(g, g).to_string()});
  }
  return result;
}

SuiteResult fundamental(const Options& options) {
  SuiteResult result{"fundamental-relations", {}};
  for (unsigned g = 1; g <= range(options, 6); ++g) {
    auto components = fundamental_relations(g, 2 * g);
    bool odd_zero = true;
    for (unsigned d = 1; d <= 2 * g; d += 2) odd_zero = odd_zero && components[d - 1].is_zero();
    bool degree_two = true;
    std::string detail = "odd components vanish";
    if (g >= 2) {
      auto lambdas = components[1].generators();
      GradedPolynomial expected(lambdas, 2 * g);
      Exponents l2{};
      l2[1] = 1;
      Exponents l1sq{};
      l1sq[0] = 2;
      expected.add_term(l2, 2);
      expected.add_term(l1sq, -1);
      degree_two = components[1] == expected;
      detail += "; degree 2: " + components[1].to_string();
    }
    result.cases.push_back({g_label(g), odd_zero && degree_two, detail});
  }
  return result;
}

SuiteResult product_lemma(const Options& options) {
  SuiteResult result{"product-lemma", {}};
  for (unsigned g = 1; g <= range(options, 16); ++g) {
    ProductIdentityReport report = product_identity_check(g);
    BigInt lhs = table_product(options, g);
    bool ok = lhs == report.rhs && report.tail_trivial;
    result.cases.push_back({g_label(g), ok, "lhs " + lhs.get_str() + ", rhs " + report.rhs.get_str()});
  }
  return result;
}

SuiteResult denominator(const Options& options) {
  SuiteResult result{"denominator", {}};
  for (unsigned g = 1; g <= range(options, 12); ++g) {
    BigInt den = proportionality(g).denominator;
    BigInt product = table_product(options, g);
    bool ok = mpz_divisible_p(product.get_mpz_t(), den.get_mpz_t()) != 0;
    result.cases.push_back({g_label(g), ok, "denominator " + den.get_str() + " | " + product.get_str()});
  }
  return result;
}

SuiteResult integrality(const Options& options) {
  SuiteResult result{"integrality", {}};
  for (unsigned g = 1; g <= range(options, 5); ++g) {
    for (std::uint64_t n = 3; n <= 7; ++n) {
      DegreeIntegrality report = degree_integrality(g, n);
      result.cases.push_back({g_label(g) + ",n=" + std::to_string(n), report.integral,
                              "degree " + report.degree.to_string()});
    }
  }
  return result;
}

SuiteResult grr_chain(const Options& options) {
  SuiteResult result{"grr-chain", {}};
  for (unsigned g = 1; g <= range(options, 10); ++g) {
    BoundaryCoefficient bc = boundary_coefficient(g);
    bool inverse_ok = bc.value * zeta_neg(g).abs() == ExactRational(1);
    bool chain_ok = grr_chain_check(g);
    result.cases.push_back({g_label(g), inverse_ok && chain_ok, "boundary coefficient " + bc.value.to_string()});
  }
  return result;
}

SuiteResult cyclotomic(const Options&) {
  SuiteResult result{"cyclotomic", {}};
  const std::vector<std::pair<std::uint64_t, unsigned>> cases{{3, 1}, {3, 2}, {5, 1}, {7, 1}, {2, 3}, {2, 4}};
  for (auto [l, k] : cases) {
    CyclotomicChernReport report = cyclotomic_chern_check(l, k);
    HurwitzGenus genus = hurwitz_genus(l, k);
    bool degree_ok = report.product.degree() == static_cast<long>(report.top_degree);
    // Riemann-Hurwitz doubling is only asserted for odd l.
    bool genus_ok = l == 2 || 2 * genus.genus == report.top_degree;
    bool ok = report.equal && report.top_coefficient_nonzero && degree_ok && genus_ok;
    result.cases.push_back({lk_label(l, k), ok,
                            "product " + report.product.to_string() + ", genus " + std::to_string(genus.genus)});
  }
  return result;
}

SuiteResult symplectic(const Options&) {
  SuiteResult result{"symplectic", {}};
  const std::vector<std::pair<std::uint64_t, unsigned>> cases{{3, 1}, {5, 1}, {7, 1}, {3, 2}};
  for (auto [l, k] : cases) {
    SymplecticPairingReport report = symplectic_pairing_check(l, k);
    bool ok = report.integral && report.skew && report.invariant && report.corrected.perfect();
    result.cases.push_back({lk_label(l, k), ok,
                            "rank " + std::to_string(report.rank) + ", det " + report.gram_determinant.to_string() +
                                ", det at different exponent " + std::to_string(report.corrected.exponent) + " " +
                                report.corrected.determinant.to_string()});
  }
  return result;
}

SuiteResult von_staudt(const Options& options) {
  SuiteResult result{"von-staudt", {}};
  const unsigned max_index = 2 * range(options, 30);
  for (unsigned m = 2; m <= max_index; m += 2) {
    BigInt den = bernoulli(m).denominator();
    BigInt expected = von_staudt_denominator(m);
    result.cases.push_back({"B_" + std::to_string(m), den == expected,
                            "denominator " + den.get_str() + ", prime product " + expected.get_str()});
  }
  return result;
}

SuiteResult oracle_agreement(const Options& options) {
  SuiteResult result{"oracle-agreement", {}};
  for (unsigned g = 1; g <= range(options, 8); ++g) {
    BigInt table = table_ng(options, g);
    try {
      BigInt oracle = ng_oracle(g, options.oracle_prime_count, options.oracle_window);
      result.cases.push_back({g_label(g), table == oracle, "table " + table.get_str() + ", oracle " + oracle.get_str()});
    } catch (const std::runtime_error& e) {
      result.cases.push_back({g_label(g), false, e.what()});
    }
  }
  return result;
}

using SuiteFn = std::function<SuiteResult(const Options&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"chern-lemma", chern_lemma},
      {"borel-serre", borel_serre},
      {"newton", newton},
      {"fundamental-relations", fundamental},
      {"product-lemma", product_lemma},
      {"denominator", denominator},
      {"integrality", integrality},
      {"grr-chain", grr_chain},
      {"cyclotomic", cyclotomic},
      {"symplectic", symplectic},
      {"von-staudt", von_staudt},
      {"oracle-agreement", oracle_agreement},
  };
  return suites;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<SuiteResult> run(const std::string& name, const Options& options) {
  std::vector<SuiteResult> results;
  for (const auto& [suite, fn] : registry()) {
    if (name == "all" || name == suite) results.push_back(fn(options));
  }
  if (results.empty()) throw std::invalid_argument("unknown verify suite '" + name + "'");
  return results;
}

}  // namespace tautorder::verify
