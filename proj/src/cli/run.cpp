#include "ratfield/cli/run.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ratfield/cli/parser.hpp"
#include "ratfield/fields/membership.hpp"
#include "ratfield/oms/gb_coefficients.hpp"
#include "ratfield/simplify/simplify.hpp"

namespace ratfield {

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

bool write_report(const SimplificationReport& rep, const std::string& path, std::ostream& err) {
  if (path.empty()) return true;
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot write report to " << path << "\n";
    return false;
  }
  f << rep.to_json();
  return true;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Find simpler generators of a subfield of Q(x1, ..., xn)", "ratfield"};
  std::string input, order = "degrevlex", var_order, format = "text", report_path;
  long long delta = 3;
  double epsilon = 0.01;
  bool minimize = false, no_retain = false, no_final = false, paranoid = false;
  std::uint64_t seed = 1;
  std::size_t eval_cap = 1000000;

  app.add_option("--input", input, "problem file: 'vars: ...' header, one expression per line")->required();
  app.add_option("--order", order, "monomial order of the ideal")->check(CLI::IsMember({"degrevlex", "lex"}));
  app.add_option("--var-order", var_order, "comma separated variable ranking, greatest first");
  app.add_option("--delta", delta, "degree bound of the polynomial search");
  app.add_option("--epsilon", epsilon, "total error probability");
  app.add_flag("--minimize", minimize, "drop generators the others already generate");
  app.add_flag("--no-retain-originals", no_retain, "keep the input generators out of the candidate pool");
  app.add_flag("--no-final-check", no_final, "skip the final field equality check");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--eval-cap", eval_cap, "maximum specialized Groebner bases per harvest");
  app.add_option("--format", format, "standard output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--report", report_path, "also write the JSON report to this file");
  app.add_flag("--paranoid", paranoid, "final check at four primes instead of two");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  std::ifstream in(input);
  if (!in) {
    err << "error: cannot read " << input << "\n";
    return 2;
  }
  std::stringstream text;
  text << in.rdbuf();

  SimplifyConfig cfg;
  std::optional<GeneratorSet> gens;
  try {
    ProblemFile pf = parse_problem(text.str());
    QRing ring = pf.ring;
    std::vector<RationalFunction> fs = pf.gens;
    if (!var_order.empty()) {
      ring = reorder_ring(pf.ring, split_list(var_order));
      for (auto& f : fs) f = move_to_ring(f, ring);
    }
    gens.emplace(ring, std::move(fs));

    if (delta < 1) throw ConfigError("--delta must be at least 1");
    cfg.delta = static_cast<unsigned>(delta);
    cfg.epsilon = epsilon;
    cfg.orders = {MonomialOrder{order == "lex" ? OrderKind::Lex : OrderKind::DegRevLex}};
    cfg.minimize = minimize;
    cfg.retain_originals = !no_retain;
    cfg.final_check = !no_final;
    cfg.seed = seed;
    cfg.eval_cap = eval_cap;
    if (paranoid) cfg.check_primes = 4;
    cfg.validate();
  } catch (const ParseError& e) {
    err << input << ":" << e.line << ":" << e.column << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    auto res = simplify(*gens, cfg);
    for (const auto& w : res.report.warnings) err << "warning: " << w << "\n";
    if (format == "json") {
      out << res.report.to_json();
    } else {
      for (const auto& g : res.report.output) out << g << "\n";
    }
    if (!write_report(res.report, report_path, err)) return 2;
    return 0;
  } catch (const VerificationFailed& e) {
    for (const auto& w : e.report->warnings) err << "warning: " << w << "\n";
    err << "error: " << e.what() << "\n";
    if (format == "json") out << e.report->to_json();
    write_report(*e.report, report_path, err);
    return 1;
  } catch (const EvaluationBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ratfield
