// Command-line front end: evaluate values, falsify axioms, run theorem
// suites, and generate fixture games.
//
//   tug value <rule> --game FILE [--rational] [--format human|json]
//   tug check <rule> <axiom> [--seed S] [--trials K] [--n N] [--rational] [--tol T]
//   tug gen <generator> [--n N] [--seed S]
//   tug verify <suite> [--seed S] [--trials K] [--n N] [--rational]
//
// Exit codes: 0 = success / passed_sample / confirmed, 1 = violated or
// refuted, 2 = usage or domain error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tug/io.hpp"
#include "tug/tug.hpp"

namespace {

struct Options {
  std::string rule_spec;
  std::string axiom;
  std::string suite;
  std::string generator_spec;
  std::string game_path;
  std::string format = "human";
  bool rational = false;
  std::uint64_t seed = 0xC0FFEE;
  int trials = 200;
  int n = 4;
  bool n_given = false;
  double tol = tug::kTolCheck;
  bool tol_given = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tug::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Splits "name:arg" rule/generator specs.
std::pair<std::string, std::string> split_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

template <class R>
tug::SolutionRule<R> make_rule(const std::string& spec) {
  using namespace tug;
  const auto [name, arg] = split_spec(spec);
  if (name == "ed") return ed_rule<R>();
  if (name == "cis") return cis_rule<R>();
  if (name == "ensc") return ensc_rule<R>();
  if (name == "shapley") return shapley_rule<R>();
  if (name == "standalone") return standalone_rule<R>();
  if (name == "marginal") return marginal_rule<R>();
  if (name == "propdiv") return prop_division_rule<R>();
  if (name == "psi") {
    if (arg.empty()) throw UnknownRule("psi needs a size, e.g. psi:2");
    return psi_rule<R>(std::stoi(arg));
  }
  if (name == "dictator") {
    if (arg.empty()) throw UnknownRule("dictator needs a player, e.g. dictator:1");
    return dictator_rule<R>(std::stoi(arg));
  }
  if (name == "power") {
    if (arg.empty()) throw UnknownRule("power needs an exponent, e.g. power:2");
    return power_rule<R>(std::stod(arg));
  }
  if (name == "sigma-shapley") {
    if (arg.empty()) throw UnknownRule("sigma-shapley needs a weights file");
    SigmaWeights<R> sigma{parse_weights<R>(read_input(arg))};
    return sigma_shapley_rule<R>(std::move(sigma));
  }
  if (name == "affine") {
    if (arg.empty()) throw UnknownRule("affine needs a weights file");
    return affine_combination_rule<R>(AffineWeights<R>(parse_weights<R>(read_input(arg))));
  }
  if (name == "least-square") {
    if (arg.empty()) throw UnknownRule("least-square needs a weights file");
    return least_square_rule<R>(LSWeights<R>::from_sizes(parse_weights<R>(read_input(arg))));
  }
  throw UnknownRule("unknown rule '" + spec + "'");
}

template <class R>
int run_value(const Options& opt) {
  const auto rule = make_rule<R>(opt.rule_spec);
  const tug::Game<R> v = tug::parse_game<R>(read_input(opt.game_path));
  const tug::Allocation<R> pay = rule(v);
  if (opt.format == "json") {
    tug::json out;
    out["rule"] = rule.name;
    out["n"] = v.players();
    out["arithmetic"] = tug::ScalarTraits<R>::mode_name;
    out["pay"] = tug::allocation_to_json<R>(pay.values());
    out["total"] = tug::ScalarTraits<R>::str(pay.total());
    out["grand_worth"] = tug::ScalarTraits<R>::str(v.grand_worth());
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "rule: " << rule.name << "\n";
    for (int p = 1; p <= v.players(); ++p)
      std::cout << "player " << p << ": " << tug::ScalarTraits<R>::str(pay.pay(p)) << "\n";
    std::cout << "total: " << tug::ScalarTraits<R>::str(pay.total())
              << "  (v(N) = " << tug::ScalarTraits<R>::str(v.grand_worth()) << ")\n";
  }
  return 0;
}

tug::SamplePlan plan_from(const Options& opt) {
  tug::SamplePlan plan = tug::SamplePlan::with_n(opt.n, opt.trials, opt.seed);
  if (opt.tol_given) plan.tol = opt.tol;
  return plan;
}

template <class R>
int run_check(const Options& opt) {
  const auto rule = make_rule<R>(opt.rule_spec);
  const auto report = tug::run_check(opt.axiom, rule, plan_from(opt));
  if (opt.format == "json") {
    std::cout << tug::check_report_to_json(report).dump() << "\n";
  } else {
    std::cout << "axiom " << report.axiom << " on rule " << report.rule << ": "
              << (report.violated ? "violated" : "passed_sample") << " (" << report.trials_run
              << " trials, seed " << report.seed << ")\n";
    if (report.witness) {
      std::cout << "witness (trial " << report.witness->trial << "):\n";
      for (const auto& [k, v] : report.witness->params) std::cout << "  " << k << " = " << v << "\n";
      std::cout << "  game: " << tug::emit_game(report.witness->game) << "\n";
      if (report.witness->second_game)
        std::cout << "  second game: " << tug::emit_game(*report.witness->second_game) << "\n";
      std::cout << "  expected: " << tug::allocation_to_json<R>(report.witness->expected).dump()
                << "\n  actual:   " << tug::allocation_to_json<R>(report.witness->actual).dump()
                << "\n  max deviation: " << tug::ScalarTraits<R>::str(report.witness->deviation)
                << "\n";
    }
  }
  return report.violated ? 1 : 0;
}

template <class R>
int run_verify(const Options& opt) {
  tug::SamplePlan plan = plan_from(opt);
  if (!opt.n_given) plan.n_min = plan.n_max = 4;
  const auto suite = tug::run_suite<R>(opt.suite, plan);
  if (opt.format == "json") {
    std::cout << tug::suite_result_to_json(suite).dump() << "\n";
  } else {
    for (const auto& clause : suite.clauses)
      std::cout << (clause.ok ? "[ ok ] " : "[FAIL] ") << clause.claim
                << (clause.detail.empty() ? "" : "  -- " + clause.detail) << "\n";
    std::cout << "suite " << suite.suite << ": "
              << (suite.confirmed() ? "confirmed_sample" : "refuted") << " (" << suite.clauses.size()
              << " clauses, seed " << suite.seed << ")\n";
  }
  return suite.confirmed() ? 0 : 1;
}

template <class R>
int run_gen(const Options& opt) {
  const auto [name, arg] = split_spec(opt.generator_spec);
  std::vector<int> params;
  if (!arg.empty()) {
    std::size_t pos = 0;
    while (pos < arg.size()) {
      std::size_t next = arg.find(',', pos);
      if (next == std::string::npos) next = arg.size();
      params.push_back(std::stoi(arg.substr(pos, next - pos)));
      pos = next + 1;
    }
  }
  const tug::Game<R> v = tug::generate_game<R>(name, opt.n, opt.seed, params);
  std::cout << tug::emit_game(v) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Allocation rules, axiom falsifiers, and theorem suites for TU games"};
  app.require_subcommand(1);

  auto* value = app.add_subcommand("value", "evaluate an allocation rule on a game file");
  value->add_option("rule", opt.rule_spec, "rule name, e.g. shapley, psi:2, dictator:1")->required();
  value->add_option("--game", opt.game_path, "game JSON file ('-' = stdin)")->required();

  auto* check = app.add_subcommand("check", "falsification run of one axiom against one rule");
  check->add_option("rule", opt.rule_spec)->required();
  check->add_option("axiom", opt.axiom, "E L SYM IGP RNP CU CDI CDO AC TLB CM EG MR HM-NGC F-NGC M-NGC")
      ->required();

  auto* gen = app.add_subcommand("gen", "generate a game deterministically from a seed");
  gen->add_option("generator", opt.generator_spec,
                  "uniform | additive | unanimity_mixture | symmetric | two_active:i,j | single_active:i")
      ->required();

  auto* verify = app.add_subcommand("verify", "run a theorem verification suite");
  verify->add_option("suite", opt.suite, "t1 | t2 | t3 | t4 | c2 | lemmas")->required();

  for (auto* cmd : {value, check, gen, verify}) {
    cmd->add_flag("--rational", opt.rational, "exact rational arithmetic");
    cmd->add_option("--format", opt.format)->check(CLI::IsMember({"human", "json"}));
  }
  for (auto* cmd : {check, gen, verify}) {
    cmd->add_option("--seed", opt.seed);
    cmd->add_option("--n", opt.n)->check(CLI::Range(2, tug::kMaxPlayers))
        ->each([&](const std::string&) { opt.n_given = true; });
  }
  for (auto* cmd : {check, verify}) {
    cmd->add_option("--trials", opt.trials)->check(CLI::PositiveNumber);
    cmd->add_option("--tol", opt.tol)->each([&](const std::string&) { opt.tol_given = true; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (value->parsed()) return opt.rational ? run_value<tug::Rational>(opt) : run_value<double>(opt);
    if (check->parsed()) return opt.rational ? run_check<tug::Rational>(opt) : run_check<double>(opt);
    if (gen->parsed()) return opt.rational ? run_gen<tug::Rational>(opt) : run_gen<double>(opt);
    if (verify->parsed())
      return opt.rational ? run_verify<tug::Rational>(opt) : run_verify<double>(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
