#include "tautorder/cli.hpp"

#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tautorder/bernoulli_zeta.hpp"
#include "tautorder/chern_symbolics.hpp"
#include "tautorder/finite_field_checks.hpp"
#include "tautorder/group_orders.hpp"
#include "tautorder/torsion_orders.hpp"
#include "tautorder/verify.hpp"

namespace tautorder::cli {

namespace {

using json = nlohmann::json;

json integer(const BigInt& n) { return n.get_str(); }

template <std::integral T>
json integer(T n) {
  return std::to_string(n);
}

json rational(const ExactRational& q) { return {{"num", q.numerator().get_str()}, {"den", q.denominator().get_str()}}; }

bool is_rational(const json& j) {
  return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den") && j["num"].is_string() &&
         j["den"].is_string();
}

std::string scalar_text(const json& j) {
  if (is_rational(j)) {
    const auto& den = j["den"].get_ref<const std::string&>();
    return den == "1" ? j["num"].get<std::string>() : j["num"].get<std::string>() + "/" + den;
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_null()) return "";
  return j.dump();
}

bool is_leaf(const json& j) { return !j.is_structured() || is_rational(j); }

void render_text(const json& j, const std::string& indent, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_leaf(value)) {
        out << indent << key << ": " << scalar_text(value) << '\n';
      } else {
        out << indent << key << ":\n";
        render_text(value, indent + "  ", out);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& value : j) {
      if (is_leaf(value)) {
        out << indent << "- " << scalar_text(value) << '\n';
      } else if (value.is_array()) {
        std::string row;
        for (const auto& cell : value) row += (row.empty() ? "" : " ") + scalar_text(cell);
        out << indent << "- [" << row << "]\n";
      } else {
        out << indent << "-\n";
        render_text(value, indent + "  ", out);
      }
    }
    return;
  }
  out << indent << scalar_text(j) << '\n';
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (is_leaf(j)) {
    out << csv_field(prefix) << ',' << csv_field(scalar_text(j)) << '\n';
    return;
  }
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
}

void render(const json& envelope, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << envelope.dump(2) << '\n';
  } else if (format == "csv") {
    out << "key,value\n";
    flatten(envelope, "", out);
  } else {
    render_text(envelope, "", out);
  }
}

std::string factorization_text(const std::vector<PrimeLocalOrder>& factors) {
  std::string text;
  for (const auto& f : factors) {
    if (!text.empty()) text += " * ";
    text += std::to_string(f.prime());
    if (f.exponent() > 1) text += "^" + std::to_string(f.exponent());
  }
  return text;
}

std::size_t default_prime_count() {
  if (const char* env = std::getenv("TAUTORDER_PRIME_COUNT")) {
    try {
      std::size_t pos = 0;
      unsigned long value = std::stoul(env, &pos);
      if (pos == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("TAUTORDER_PRIME_COUNT is not a positive integer: '") + env + "'");
  }
  return kDefaultOraclePrimeCount;
}

std::pair<unsigned, BigInt> parse_override(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("--override-ng expects G=VALUE, got '" + text + "'");
  BigInt g = parse_bigint(text.substr(0, eq));
  if (g < 1 || g > 1000) throw std::invalid_argument("--override-ng genus out of range");
  return {static_cast<unsigned>(g.get_ui()), parse_bigint(text.substr(eq + 1))};
}

json suite_json(const verify::SuiteResult& suite) {
  json cases = json::array();
  for (const auto& c : suite.cases) cases.push_back({{"label", c.label}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", suite.suite}, {"passed", suite.passed()}, {"cases", cases}};
}

struct Invocation {
  std::string command;
  json parameters = json::object();
  json result;
  int exit_code = kOk;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact torsion-order and characteristic-class computations", "tautorder"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  std::string format = "text";
  std::function<Invocation()> action;

  auto add_command = [&](const std::string& name, const std::string& description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    return sub;
  };

  unsigned g = 0;
  unsigned m = 0;
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  unsigned k = 0;

  // ng
  bool oracle = false;
  std::size_t prime_count = 0;
  std::size_t window = kDefaultOracleWindow;
  auto* ng_cmd = add_command("ng", "n_g from the local prime-power rules, optionally checked by the gcd oracle");
  ng_cmd->add_option("g", g, "genus")->required()->check(CLI::PositiveNumber);
  ng_cmd->add_flag("--oracle", oracle, "Also run the gcd-of-(p^2g - 1) oracle");
  auto* prime_count_opt = ng_cmd->add_option("--prime-count", prime_count, "Primes used by the oracle")
                              ->check(CLI::PositiveNumber);
  ng_cmd->add_option("--window", window, "Stabilization window of the oracle")->check(CLI::PositiveNumber);
  ng_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "ng";
      inv.parameters["g"] = integer(g);
      NgDecomposition d = ng_local(g);
      json factors = json::array();
      for (const auto& f : d.factors) factors.push_back({{"prime", integer(f.prime())}, {"exponent", integer(f.exponent())}});
      inv.result = {{"g", integer(g)}, {"value", integer(d.value)}, {"factors", factors},
                    {"factorization", factorization_text(d.factors)}};
      if (oracle) {
        std::size_t count = prime_count_opt->count() ? prime_count : default_prime_count();
        inv.parameters["prime_count"] = integer(count);
        inv.parameters["window"] = integer(window);
        BigInt value = ng_oracle(g, count, window);
        inv.result["oracle_value"] = integer(value);
        inv.result["oracle_agrees"] = value == d.value;
        if (value != d.value) inv.exit_code = kIdentityViolated;
      }
      return inv;
    };
  });

  auto* bernoulli_cmd = add_command("bernoulli", "Bernoulli number B_m (B_1 = -1/2)");
  bernoulli_cmd->add_option("m", m, "index")->required()->check(CLI::NonNegativeNumber);
  bernoulli_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "bernoulli";
      inv.parameters["m"] = integer(m);
      inv.result = {{"m", integer(m)}, {"value", rational(bernoulli(m))}};
      return inv;
    };
  });

  auto* zeta_cmd = add_command("zeta", "zeta(1 - 2g)");
  zeta_cmd->add_option("g", g, "g")->required()->check(CLI::PositiveNumber);
  zeta_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "zeta";
      inv.parameters["g"] = integer(g);
      inv.result = {{"g", integer(g)}, {"argument", integer(1 - 2 * static_cast<long>(g))}, {"value", rational(zeta_neg(g))}};
      return inv;
    };
  });

  auto* prop_cmd = add_command("prop", "Proportionality constant p(g), signed and absolute");
  prop_cmd->add_option("g", g, "genus")->required()->check(CLI::PositiveNumber);
  prop_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "prop";
      inv.parameters["g"] = integer(g);
      ProportionalityResult r = proportionality(g);
      inv.result = {{"g", integer(g)}, {"signed_value", rational(r.signed_value)},
                    {"absolute_value", rational(r.absolute_value)}, {"denominator", integer(r.denominator)}};
      return inv;
    };
  });

  auto* bounds_cmd = add_command("bounds", "Torsion bounds for lambda_g and orders of r_2i");
  bounds_cmd->add_option("g", g, "genus")->required()->check(CLI::PositiveNumber);
  bounds_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "bounds";
      inv.parameters["g"] = integer(g);
      TorsionReport r = torsion_report(g);
      json orders = json::object();
      for (const auto& [i, order] : r.r_orders) orders[std::to_string(i)] = integer(order);
      inv.result = {{"g", integer(g)},
                    {"n_g", integer(r.n_g)},
                    {"lower_bound_lambda", integer(r.lower_bound_lambda)},
                    {"scheme_upper_bound", integer(r.scheme_upper_bound)},
                    {"stack_upper_bound", integer(r.stack_upper_bound)},
                    {"r_orders", orders}};
      return inv;
    };
  });

  auto* sp_cmd = add_command("sp-order", "#Sp(2g, Z/n)");
  sp_cmd->add_option("g", g, "genus")->required()->check(CLI::PositiveNumber);
  sp_cmd->add_option("n", n, "level")->required();
  sp_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "sp-order";
      inv.parameters = {{"g", integer(g)}, {"n", integer(n)}};
      SpOrderResult r = sp_order(g, n);
      json local = json::object();
      for (const auto& [prime, order] : r.local_factors) local[std::to_string(prime)] = integer(order);
      inv.result = {{"g", integer(g)}, {"n", integer(n)}, {"order", integer(r.order)}, {"local_factors", local}};
      return inv;
    };
  });

  auto* degree_cmd = add_command("degree", "#Sp(2g, Z/n) * |p(g)| and its integrality");
  degree_cmd->add_option("g", g, "genus")->required()->check(CLI::PositiveNumber);
  degree_cmd->add_option("n", n, "level")->required();
  degree_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "degree";
      inv.parameters = {{"g", integer(g)}, {"n", integer(n)}};
      DegreeIntegrality r = degree_integrality(g, n);
      inv.result = {{"g", integer(g)}, {"n", integer(n)}, {"degree", rational(r.degree)}, {"integral", r.integral}};
      if (!r.integral) inv.exit_code = kIdentityViolated;
      return inv;
    };
  });

  auto* koblitz_cmd = add_command("koblitz", "(p-1)(p^2-1)...(p^g-1)");
  koblitz_cmd->add_option("g", g, "genus")->required()->check(CLI::PositiveNumber);
  koblitz_cmd->add_option("p", p, "prime")->required();
  koblitz_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "koblitz";
      inv.parameters = {{"g", integer(g)}, {"p", integer(p)}};
      inv.result = {{"g", integer(g)}, {"p", integer(p)}, {"coefficient", integer(koblitz_coefficient(g, p))}};
      return inv;
    };
  });

  auto* boundary_cmd = add_command("boundary", "(-1)^g / zeta(1 - 2g)");
  boundary_cmd->add_option("g", g, "genus")->required()->check(CLI::PositiveNumber);
  boundary_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "boundary";
      inv.parameters["g"] = integer(g);
      BoundaryCoefficient bc = boundary_coefficient(g);
      inv.result = {{"g", integer(g)},
                    {"value", rational(bc.value)},
                    {"is_integer", bc.is_integer},
                    {"grr_chain", grr_chain_check(g)},
                    {"n_g_half", integer(lambda_square_order_note(g))}};
      return inv;
    };
  });

  auto* hurwitz_cmd = add_command("hurwitz", "Genus of the cyclic cover used for the lower bound");
  hurwitz_cmd->add_option("l", p, "prime")->required();
  hurwitz_cmd->add_option("k", k, "exponent")->required()->check(CLI::PositiveNumber);
  hurwitz_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "hurwitz";
      inv.parameters = {{"l", integer(p)}, {"k", integer(k)}};
      HurwitzGenus h = hurwitz_genus(p, k);
      inv.result = {{"l", integer(p)},
                    {"k", integer(k)},
                    {"genus", integer(h.genus)},
                    {"riemann_hurwitz_genus", integer(h.riemann_hurwitz_genus)},
                    {"riemann_hurwitz_consistent", h.riemann_hurwitz_consistent}};
      return inv;
    };
  });

  unsigned depth = 0;
  auto* lambda_cmd = add_command("lambda-star", "Total Chern class of Lambda_{-1} E in c1..cg");
  lambda_cmd->add_option("g", g, "rank")->required()->check(CLI::Range(1u, 8u));
  lambda_cmd->add_option("--depth", depth, "Truncation degree (default g)");
  lambda_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "lambda-star";
      unsigned d = depth ? depth : g;
      inv.parameters = {{"g", integer(g)}, {"depth", integer(d)}};
      GradedPolynomial total = lambda_star_class(g, d);
      json components = json::object();
      for (unsigned i = 0; i <= d; ++i) components[std::to_string(i)] = total.homogeneous_component(i).to_string();
      inv.result = {{"g", integer(g)}, {"polynomial", total.to_string()}, {"components", components}};
      return inv;
    };
  });

  unsigned max_degree = 0;
  auto* relations_cmd = add_command("relations", "Homogeneous components of the lambda relation");
  relations_cmd->add_option("g", g, "genus")->required()->check(CLI::Range(1u, 16u));
  relations_cmd->add_option("--max-degree", max_degree, "Highest degree (default 2g)");
  relations_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "relations";
      unsigned d = max_degree ? max_degree : 2 * g;
      inv.parameters = {{"g", integer(g)}, {"max_degree", integer(d)}};
      json components = json::object();
      auto relations = fundamental_relations(g, d);
      for (unsigned i = 1; i <= d; ++i) components[std::to_string(i)] = relations[i - 1].to_string();
      inv.result = {{"g", integer(g)}, {"components", components}};
      return inv;
    };
  });

  auto* cyclotomic_cmd = add_command("cyclotomic", "prod (1 + i x) mod l against its closed forms");
  cyclotomic_cmd->add_option("l", p, "prime")->required();
  cyclotomic_cmd->add_option("k", k, "exponent")->required()->check(CLI::PositiveNumber);
  cyclotomic_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "cyclotomic";
      inv.parameters = {{"l", integer(p)}, {"k", integer(k)}};
      CyclotomicChernReport r = cyclotomic_chern_check(p, k);
      inv.result = {{"product", r.product.to_string()},
                    {"closed_form", r.closed_form.to_string()},
                    {"literal_form", r.literal_form.to_string()},
                    {"equal", r.equal},
                    {"literal_equal", r.literal_equal},
                    {"top_degree", integer(r.top_degree)},
                    {"top_coefficient_nonzero", r.top_coefficient_nonzero}};
      if (!r.equal || !r.top_coefficient_nonzero) inv.exit_code = kIdentityViolated;
      return inv;
    };
  });

  auto* pairing_cmd = add_command("pairing", "Trace pairing on Z[zeta_{l^k}]");
  pairing_cmd->add_option("l", p, "odd prime")->required();
  pairing_cmd->add_option("k", k, "exponent")->required()->check(CLI::PositiveNumber);
  pairing_cmd->callback([&] {
    action = [&] {
      Invocation inv; inv.command = "pairing";
      inv.parameters = {{"l", integer(p)}, {"k", integer(k)}};
      SymplecticPairingReport r = symplectic_pairing_check(p, k);
      json gram = json::array();
      for (const auto& row : r.gram) {
        json jrow = json::array();
        for (const auto& entry : row) jrow.push_back(rational(entry));
        gram.push_back(jrow);
      }
      inv.result = {{"rank", integer(r.rank)},         {"gram", gram},   {"gram_determinant", rational(r.gram_determinant)},
                    {"integral", r.integral},          {"skew", r.skew}, {"invariant", r.invariant},
                    {"different_exponent", integer(r.corrected.exponent)},
                    {"corrected_gram_determinant", rational(r.corrected.determinant)},
                    {"corrected_perfect", r.corrected.perfect()}};
      return inv;
    };
  });

  std::string suite;
  unsigned max_g = 0;
  std::vector<std::string> overrides;
  auto* verify_cmd = add_command("verify", "Run identity suites; exit 2 on any violation");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->required();
  auto* max_g_opt = verify_cmd->add_option("--max-g", max_g, "Largest genus for g-indexed suites")
                        ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--override-ng", overrides, "Replace n_g in the table (G=VALUE), for mutation testing");
  verify_cmd->callback([&] {
    action = [&] {
      if (!verify::is_suite(suite)) throw std::invalid_argument("unknown verify suite '" + suite + "'");
      Invocation inv; inv.command = "verify";
      verify::Options options;
      inv.parameters["suite"] = suite;
      if (max_g_opt->count()) {
        options.max_g = max_g;
        inv.parameters["max_g"] = integer(max_g);
      }
      options.oracle_prime_count = default_prime_count();
      for (const auto& text : overrides) {
        auto [og, value] = parse_override(text);
        options.ng_overrides[og] = value;
        inv.parameters["override_ng"][std::to_string(og)] = integer(value);
      }
      json suites = json::array();
      bool passed = true;
      for (const auto& s : verify::run(suite, options)) {
        passed = passed && s.passed();
        suites.push_back(suite_json(s));
      }
      inv.result = {{"passed", passed}, {"suites", suites}};
      if (!passed) inv.exit_code = kIdentityViolated;
      return inv;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  Invocation inv;
  try {
    inv = action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  json envelope = {{"command", inv.command}, {"format", format}, {"parameters", inv.parameters}, {"result", inv.result}};
  render(envelope, format, out);
  if (inv.exit_code == kIdentityViolated) {
    err << "identity violated in '" << inv.command << "'\n";
  }
  return inv.exit_code;
}

}  // namespace tautorder::cli
