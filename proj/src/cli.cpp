// Subcommand dispatch for the command-line tool.
#include "stemcalc/cli.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stemcalc/acceptance.hpp"
#include "stemcalc/cayley_dickson.hpp"
#include "stemcalc/groebner.hpp"
#include "stemcalc/homotopy_cert.hpp"
#include "stemcalc/hopf.hpp"
#include "stemcalc/mw_ring.hpp"
#include "stemcalc/report.hpp"

namespace stemcalc {

namespace {

// A report plus plain result lines appended after the text rendering.
struct CommandOutput {
  Report report;
  std::vector<std::string> lines;
};

void fill_verdict(Report& report) {
  report.ok = true;
  for (const auto& d : report.details)
    if (!d.ok) report.ok = false;
  report.verdict = report.ok ? "pass" : "fail";
}

std::vector<TraceStepView> trace_views(const DerivationTrace& trace) {
  std::vector<TraceStepView> views;
  for (const auto& step : trace.steps)
    views.push_back({step.rule, step.ref, step.before.str(), step.after.str(),
                     step_params_summary(step)});
  return views;
}

long long parse_integer(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw DomainError(what + " must be an integer, got '" + text + "'");
  }
  if (used != text.size())
    throw DomainError(what + " must be an integer, got '" + text + "'");
  return value;
}

CommandOutput cmd_normalize(const std::string& expr) {
  CommandOutput out;
  out.report.command = "normalize " + expr;
  MWElement parsed = parse_expr(expr);
  MWElement result;
  std::string how;
  if (parsed.in_subring()) {
    result = normalize(parsed);
    how = "confluent rewrite on the two-generator subring";
  } else {
    result = simplify_general(parsed);
    how = "general rewrite; unresolved subscripted generators stay opaque";
  }
  out.report.details.push_back({"normal form", true, result.str()});
  out.report.details.push_back({"method", true, how});
  fill_verdict(out.report);
  out.lines.push_back(result.str());
  return out;
}

CommandOutput derivation_output(const std::string& echo,
                                const DerivationTrace& trace,
                                const FactStore& facts) {
  CommandOutput out;
  out.report.command = echo;
  out.report.trace = trace_views(trace);
  const auto& final_step = trace.steps.back();
  bool concluded = final_step.rule == "fact";
  std::string fact_name;
  if (const auto* p = std::get_if<FactParams>(&final_step.params))
    fact_name = p->name;
  bool registered = !fact_name.empty() && facts.has(fact_name);
  out.report.details.push_back(
      {"conclusion reached", concluded && registered,
       registered ? "registered fact '" + fact_name + "'" : ""});
  fill_verdict(out.report);
  if (registered) {
    auto [lhs, rhs] = facts.get(fact_name);
    out.lines.push_back(lhs.str() + " = " + rhs.str());
  }
  return out;
}

CommandOutput cmd_derive(const std::vector<std::string>& args) {
  if (args.empty())
    throw DomainError(
        "derive needs a name: eta-nu, nu-sigma, epsilon-nu, power <n>, "
        "diagonal <p> <q>, or square <n>");
  const std::string& name = args[0];
  auto expect_args = [&](std::size_t n) {
    if (args.size() != n + 1)
      throw DomainError("derive " + name + " takes " + std::to_string(n) +
                        " integer argument" + (n == 1 ? "" : "s"));
  };
  if (name == "eta-nu") {
    expect_args(0);
    FactStore facts;
    DerivationTrace trace = derive_eta_nu(facts);
    return derivation_output("derive eta-nu", trace, facts);
  }
  if (name == "nu-sigma") {
    expect_args(0);
    FactStore facts;
    DerivationTrace trace = derive_nu_sigma(facts);
    return derivation_output("derive nu-sigma", trace, facts);
  }
  if (name == "epsilon-nu") {
    expect_args(0);
    FactStore facts;
    derive_eta_nu(facts);
    DerivationTrace trace = derive_epsilon_nu(facts);
    CommandOutput out = derivation_output("derive epsilon-nu", trace, facts);
    out.report.details.push_back(
        {"prerequisite", true, "fact 'eta*nu=0' derived first"});
    fill_verdict(out.report);
    return out;
  }
  auto value_output = [&](const std::string& echo, const MWElement& value,
                          const std::string& what) {
    CommandOutput out;
    out.report.command = echo;
    out.report.details.push_back({what, true, value.str()});
    fill_verdict(out.report);
    out.lines.push_back(value.str());
    return out;
  };
  if (name == "power") {
    expect_args(1);
    long long n = parse_integer(args[1], "power degree");
    return value_output("derive power " + args[1], power_map_class(n),
                        "class of the self-map of degree " + args[1]);
  }
  if (name == "diagonal") {
    expect_args(2);
    long long p = parse_integer(args[1], "diagonal index p");
    long long q = parse_integer(args[2], "diagonal index q");
    return value_output("derive diagonal " + args[1] + " " + args[2],
                        diagonal_class(p, q),
                        "diagonal class at (" + args[1] + ", " + args[2] +
                            ")");
  }
  if (name == "square") {
    expect_args(1);
    long long n = parse_integer(args[1], "square exponent");
    return value_output("derive square " + args[1], ring_spectrum_square(n),
                        "twist coefficient at exponent " + args[1]);
  }
  throw DomainError("unknown derivation '" + name + "'");
}

std::string witness_note(int level,
                         const std::vector<std::vector<Rational>>& witness) {
  const char* names[] = {"x", "y", "z"};
  std::ostringstream os;
  os << "witness:";
  for (std::size_t i = 0; i < witness.size() && i < 3; ++i)
    os << " " << names[i] << " = "
       << CDElement::from_rationals(level, witness[i]).str();
  return os.str();
}

CommandOutput cmd_algebra(int level, const std::string& property) {
  CommandOutput out;
  out.report.command =
      "algebra --level " + std::to_string(level) + " --property " + property;
  AlgebraSpec spec = AlgebraSpec::split();
  static const std::map<std::string, CDProperty> kProperties = {
      {"normed", CDProperty::Normed},
      {"associative", CDProperty::Associative},
      {"commutative", CDProperty::Commutative},
      {"anti_automorphism", CDProperty::AntiAutomorphism},
      {"alternative", CDProperty::Alternative},
  };
  if (auto it = kProperties.find(property); it != kProperties.end()) {
    PropertyReport rep = check_property(spec, level, it->second);
    std::string note = rep.note;
    if (rep.witness) note = witness_note(level, *rep.witness);
    out.report.details.push_back(
        {property + " at level " + std::to_string(level), rep.holds, note});
    if (rep.witness) out.lines.push_back(witness_note(level, *rep.witness));
  } else if (property == "theta") {
    if (level < 2)
      throw DomainError("the scaling check needs --level 2 or higher");
    CheckReport rep = check_theta(spec, level);
    for (const auto& item : rep.items)
      out.report.details.push_back({item.name, item.ok, item.note});
  } else if (property == "omega" || property == "sl2") {
    if (level != 2)
      throw DomainError("the '" + property +
                        "' check fixes level 2; pass --level 2");
    CheckReport rep =
        property == "omega" ? check_omega_splitting(spec) : check_sl2_model(spec);
    for (const auto& item : rep.items)
      out.report.details.push_back({item.name, item.ok, item.note});
  } else {
    throw DomainError("unknown property '" + property + "'");
  }
  fill_verdict(out.report);
  return out;
}

CommandOutput homotopy_report(const std::string& echo,
                              const HomotopyInput& input, int max_pairs) {
  CommandOutput out;
  out.report.command = echo;
  VerifyReport rep;
  if (input.chain) {
    rep.items.push_back({"chain '" + input.chain->name + "'", true,
                         std::to_string(input.chain->maps.size()) + " maps, " +
                             std::to_string(input.chain->homotopies.size()) +
                             " homotopies"});
    rep.merge(verify_chain(*input.chain, max_pairs));
  } else if (input.certificate) {
    rep.items.push_back({"certificate '" + input.certificate->name + "'",
                         true, ""});
    rep.merge(verify_homotopy(*input.certificate, max_pairs));
  } else if (input.map) {
    rep.items.push_back({"map '" + input.map->name + "'", true, ""});
    rep.merge(verify_dmap(*input.map, max_pairs));
  } else {
    throw InternalError("empty certificate input");
  }
  for (const auto& item : rep.items)
    out.report.details.push_back({item.name, item.ok, item.note});
  fill_verdict(out.report);
  return out;
}

CommandOutput cmd_homotopy(const std::string& builtin, const std::string& file,
                           int max_pairs) {
  if (builtin.empty() == file.empty())
    throw DomainError(
        "homotopy needs exactly one source: --builtin delta-R or a "
        "certificate file");
  if (!builtin.empty()) {
    if (builtin != "delta-R")
      throw DomainError("unknown builtin '" + builtin +
                        "'; available: delta-R");
    HomotopyInput input;
    input.chain = builtin_delta_R_chain();
    return homotopy_report("homotopy --builtin delta-R", input, max_pairs);
  }
  return homotopy_report("homotopy " + file, load_homotopy_file(file),
                         max_pairs);
}

CommandOutput cmd_chi_toy() {
  CommandOutput out;
  out.report.command = "chi-toy";

  FiniteChiReport two_point = finite_chi(1, 1);
  bool column_ok = two_point.chi.size() == 3 &&
                   two_point.chi[0][0] == Rational(-1) &&
                   two_point.chi[1][0] == Rational(-1) &&
                   two_point.chi[2][0] == Rational(1);
  out.report.details.push_back(
      {"two-point defect column", column_ok && two_point.unique_in_box,
       "(-1, -1, 1), unique among small integer columns"});

  // In every computed case the column for smash point (x_i, y_j) is the
  // product point minus the two axis points.
  bool pattern_ok = true;
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1},
                      {2, 1},
                      {2, 2}}) {
    FiniteChiReport rep = finite_chi(m, n);
    for (std::size_t c = 0; c < rep.col_labels.size(); ++c) {
      std::string xi = rep.col_labels[c].substr(0, rep.col_labels[c].find('^'));
      std::string yj = rep.col_labels[c].substr(rep.col_labels[c].find('^') + 1);
      for (std::size_t r = 0; r < rep.row_labels.size(); ++r) {
        Rational expected(0);
        if (rep.row_labels[r] == "(" + xi + "," + yj + ")")
          expected = Rational(1);
        else if (rep.row_labels[r] == "(" + xi + ",*)" ||
                 rep.row_labels[r] == "(*," + yj + ")")
          expected = Rational(-1);
        if (rep.chi[r][c] != expected) pattern_ok = false;
      }
    }
  }
  out.report.details.push_back(
      {"defect pattern", pattern_ok, "chi = k - i - j"});

  HopfMuReport mu = hopf_mu_s0();
  out.report.details.push_back(
      {"fold composite", mu.h_mu == BigInt(-2), "H(mu) = -2"});
  out.report.details.push_back(
      {"quotient and projection composites",
       mu.p_compose == BigInt(1) && mu.pi1_compose == BigInt(0),
       "p o chi = 1, pi1 o chi = 0"});
  fill_verdict(out.report);
  out.lines.push_back("chi = k - i - j");
  out.lines.push_back("H(mu) = -2");
  return out;
}

CommandOutput cmd_verify_all(const AcceptanceOptions& options) {
  CommandOutput out;
  out.report.command = "verify-all";
  auto results = run_acceptance(options);
  int passed = 0;
  for (const auto& r : results) {
    out.report.details.push_back(
        {"criterion " + std::to_string(r.index) + ": " + r.title, r.passed,
         r.detail});
    if (r.passed) ++passed;
  }
  fill_verdict(out.report);
  out.lines.push_back(std::to_string(passed) + "/" +
                      std::to_string(results.size()) + " criteria passed");
  return out;
}

void print_output(const CommandOutput& out, bool json, std::ostream& os) {
  if (json) {
    os << out.report.render_json();
    return;
  }
  os << out.report.render_text();
  for (const auto& line : out.lines) os << line << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact checks for doubling algebras, the degree-zero "
               "coefficient ring, melding derivations, and certified "
               "homotopies"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable report");

  auto* normalize_cmd =
      app.add_subcommand("normalize", "rewrite an expression to normal form");
  normalize_cmd->add_flag("--json", json, "machine-readable report");
  std::string expr;
  normalize_cmd->add_option("expr", expr, "expression text")->required();

  auto* derive_cmd = app.add_subcommand(
      "derive",
      "run a packaged derivation: eta-nu, nu-sigma, epsilon-nu, power <n>, "
      "diagonal <p> <q>, square <n>");
  derive_cmd->add_flag("--json", json, "machine-readable report");
  derive_cmd->allow_extras();

  auto* algebra_cmd =
      app.add_subcommand("algebra", "check a property of a doubling level");
  algebra_cmd->add_flag("--json", json, "machine-readable report");
  int level = 0;
  algebra_cmd->add_option("--level", level, "doubling level (1-4)")
      ->required()
      ->check(CLI::Range(1, 4));
  std::string property;
  algebra_cmd
      ->add_option("--property", property,
                   "normed, associative, commutative, anti_automorphism, "
                   "alternative, theta, omega, or sl2")
      ->required();

  auto* homotopy_cmd = app.add_subcommand(
      "homotopy", "verify a certificate file or the built-in chain");
  homotopy_cmd->add_flag("--json", json, "machine-readable report");
  std::string builtin;
  homotopy_cmd->add_option("--builtin", builtin, "built-in chain name");
  std::string cert_file;
  homotopy_cmd->add_option("file", cert_file, "certificate JSON file");
  int max_pairs = kDefaultMaxPairs;
  homotopy_cmd
      ->add_option("--max-pairs", max_pairs, "S-pair bound for ideal checks")
      ->check(CLI::PositiveNumber);

  auto* chi_cmd = app.add_subcommand(
      "chi-toy", "solve the finite diagonal-defect model");
  chi_cmd->add_flag("--json", json, "machine-readable report");

  auto* verify_cmd =
      app.add_subcommand("verify-all", "run all twelve acceptance criteria");
  verify_cmd->add_flag("--json", json, "machine-readable report");
  AcceptanceOptions acceptance;
  unsigned long long seed = 0;
  auto* seed_opt = verify_cmd->add_option(
      "--seed", seed, "override the pinned sampling seeds");
  int verify_max_pairs = 0;
  auto* pairs_opt =
      verify_cmd
          ->add_option("--max-pairs", verify_max_pairs,
                       "S-pair bound for ideal checks")
          ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    CommandOutput result;
    if (*normalize_cmd) {
      result = cmd_normalize(expr);
    } else if (*derive_cmd) {
      result = cmd_derive(derive_cmd->remaining());
    } else if (*algebra_cmd) {
      result = cmd_algebra(level, property);
    } else if (*homotopy_cmd) {
      result = cmd_homotopy(builtin, cert_file, max_pairs);
    } else if (*chi_cmd) {
      result = cmd_chi_toy();
    } else {
      if (*seed_opt) acceptance.seed = seed;
      if (*pairs_opt) acceptance.max_pairs = verify_max_pairs;
      result = cmd_verify_all(acceptance);
    }
    print_output(result, json, out);
    return result.report.ok ? 0 : 1;
  } catch (const Error& e) {
    if (json) {
      Report report;
      report.command = argc > 1 ? argv[1] : "";
      report.ok = false;
      report.verdict = "error";
      report.details.push_back({"error", false, e.what()});
      out << report.render_json();
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace stemcalc
