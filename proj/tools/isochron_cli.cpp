// isochron: command-line front end for the planar isochronicity toolkit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isochron/errors.hpp"
#include "isochron/numverify.hpp"
#include "isochron/reports.hpp"

using namespace isochron;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInconsistent = 2;

struct RunConfig {
  std::string input_path;
  std::string mould_path;
  int max_word_length = 6;
  int series_depth = 3;
  std::vector<double> radii{0.02, 0.05, 0.1, 0.2};
  double tol = 1e-10;
  std::uint64_t seed = SuiteOptions{}.seed;
  std::string format = "json";
  std::string condition;
  std::optional<int> degree;
  bool mutate_bracket_sign = false;
};

// Raised when a lemma suite fails; maps to exit code 2.
struct LemmaFailure {};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PlanarField load_field(const RunConfig& cfg) {
  if (cfg.input_path.empty()) throw InputError("--input is required for this command");
  return parse_field(read_file(cfg.input_path));
}

std::vector<double> parse_radii(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double r = 0.0;
    try {
      r = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used == 0 || used != item.size()) throw InputError("bad radius '" + item + "' in --radii");
    out.push_back(r);
  }
  if (out.empty()) throw InputError("--radii must list at least one radius");
  return out;
}

void emit(const RunConfig& cfg, const Json& j, const std::string& text) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string op_text(const Json& j) { return derivation_from_json(j).to_string(); }

std::string joined(const Json& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n.get<std::string>();
  return s.empty() ? "none" : s;
}

std::string analyze_text(const Json& r, const RunConfig& cfg) {
  std::ostringstream t;
  t << "degree: " << r["field"]["degree"].get<int>() << "\n";
  t << "alphabet (" << r["alphabet"].size() << " letters):\n";
  for (const auto& e : r["alphabet"]) {
    t << "  " << e["letter"].get<std::string>() << "  weight " << e["weight"].get<int>() << "  "
      << op_text(e["operator"]) << "\n";
  }
  t << "pairwise brackets:\n";
  for (const auto& e : r["pairwise_brackets"]) {
    t << "  [" << e["pair"][0].get<std::string>() << ", " << e["pair"][1].get<std::string>()
      << "] = " << op_text(e["bracket"]) << "\n";
  }
  t << "nilpotent_order1: " << (r["nilpotent_order1"].get<bool>() ? "true" : "false") << "\n";
  for (const auto& w : r["central_series"]["witnesses"]) {
    t << "  witness [" << w["pair"][0].get<std::string>() << ", " << w["pair"][1].get<std::string>()
      << "] = " << op_text(w["bracket"]) << "\n";
  }
  t << "central series (depth " << cfg.series_depth << "): generators per level";
  for (const auto& n : r["central_series_sizes"]) t << " " << n.get<std::size_t>();
  const Json& vl = r["central_series"]["vanishing_level"];
  t << "; vanishes at level " << (vl.is_null() ? std::string("?") : std::to_string(vl.get<int>())) << "\n";
  t << "resonant letters: " << joined(r["resonant_letters"]) << "\n";
  const Json& res = r["resonance"];
  t << "resonant words up to length " << res["max_len"].get<int>() << ": " << res["resonant_words"].size()
    << ", nonzero brackets: " << res["witnesses"].size() << "\n";
  for (const auto& w : res["witnesses"]) {
    t << "  [" << w["word"].get<std::string>() << "] = " << op_text(w["bracket"]) << "\n";
  }
  t << "proof basis: " << res["proof"].get<std::string>() << "\n";
  t << "verdict: " << r["verdict"].get<std::string>() << "\n";
  if (r.contains("projection_sum")) {
    t << "projection sum (length <= " << cfg.max_word_length << "): " << op_text(r["projection_sum"])
      << (r["projection"]["reduced"].get<bool>() ? "  [letters only]" : "") << "\n";
  }
  return t.str();
}

void cmd_analyze(const RunConfig& cfg) {
  const PlanarField f = load_field(cfg);
  std::optional<Mould> mould;
  if (!cfg.mould_path.empty()) mould = mould_from_json(parse_json(read_file(cfg.mould_path)));
  const Json r = analyze_report(f, {cfg.max_word_length, cfg.series_depth}, mould ? &*mould : nullptr);
  emit(cfg, r, cfg.format == "text" ? analyze_text(r, cfg) : "");
}

void cmd_classify(const RunConfig& cfg) {
  const Json r = classify_report(load_field(cfg));
  std::ostringstream t;
  for (const auto& v : r["verdicts"]) {
    t << v["condition"].get<std::string>() << ": " << (v["holds"].get<bool>() ? "holds" : "fails") << "\n";
    for (const auto& rel : v["failing"]) {
      t << "  " << rel["relation"].get<std::string>() << "  residual " << rel["residual"].get<std::string>() << "\n";
    }
  }
  if (r.contains("quadratic")) t << "quadratic conditions satisfied: " << joined(r["quadratic"]) << "\n";
  emit(cfg, r, t.str());
}

void cmd_verify_lemmas(const RunConfig& cfg) {
  SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.max_word_length = cfg.max_word_length;
  opts.mutate_bracket_sign = cfg.mutate_bracket_sign;
  const Json r = lemma_report(opts);
  std::ostringstream t;
  for (const auto& s : r["suites"]) {
    t << s["name"].get<std::string>() << ": " << (s["passed"].get<bool>() ? "PASS" : "FAIL") << " ("
      << s["cases"].get<int>() << " cases)\n";
    for (const auto& c : s["counterexamples"]) t << "  " << c.get<std::string>() << "\n";
  }
  emit(cfg, r, t.str());
  if (!r["passed"].get<bool>()) throw LemmaFailure{};
}

void cmd_scan_periods(const RunConfig& cfg) {
  const PlanarField f = load_field(cfg);
  const PeriodScan s = isochrony_scan(f, cfg.radii, cfg.tol);
  std::ostringstream text;
  text.precision(15);
  for (std::size_t k = 0; k < s.radii.size(); ++k) {
    text << "r0 = " << s.radii[k] << "  T = " << s.periods[k] << "  (error estimate " << s.error_estimates[k]
         << ")\n";
  }
  text.precision(3);
  text << std::scientific << "max relative spread from 2*pi: " << s.max_rel_spread << "\n";
  emit(cfg, to_json(s), text.str());
}

void cmd_complexity(const RunConfig& cfg) {
  int d = 0;
  if (cfg.degree) {
    d = *cfg.degree;
  } else if (!cfg.input_path.empty()) {
    d = load_field(cfg).degree();
  } else {
    throw InputError("complexity needs --degree or --input");
  }
  std::optional<ConditionId> id;
  if (!cfg.condition.empty()) id = parse_condition_id(cfg.condition);
  const Json r = complexity_report(id, d);
  std::ostringstream t;
  for (const auto& g : r.is_array() ? r : Json::array({r})) {
    t << g["condition"].get<std::string>() << " d=" << d << ": (q, m) = (" << g["q"].get<int>() << ", "
      << g["m"].get<int>() << "), ambient dimension " << g["ambient_dim"].get<int>() << "\n";
  }
  emit(cfg, r, t.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isochronous center analysis for planar polynomial fields"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string radii_csv;

  app.add_option("--input", cfg.input_path, "Field file (JSON)");
  app.add_option("--max-word-length", cfg.max_word_length, "Word length bound")->check(CLI::PositiveNumber);
  app.add_option("--series-depth", cfg.series_depth, "Central series depth")->check(CLI::PositiveNumber);
  app.add_option("--radii", radii_csv, "Comma separated start radii");
  app.add_option("--tol", cfg.tol, "Integrator tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized suites");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--mould", cfg.mould_path, "Mould spec (JSON) for analyze");
  app.add_option("--condition", cfg.condition, "CR or UI for complexity");
  app.add_option("--degree", cfg.degree, "Degree for complexity");
  app.add_flag("--mutate-bracket-sign", cfg.mutate_bracket_sign, "Test only: flip the bracket in formula checks")
      ->group("");

  app.add_subcommand("analyze", "Alphabet, brackets, central series, resonance, verdict")->fallthrough();
  app.add_subcommand("classify", "Coefficient conditions and quadratic classification")->fallthrough();
  app.add_subcommand("verify-lemmas", "Randomized lemma suites")->fallthrough();
  app.add_subcommand("scan-periods", "Numerical return times near the origin")->fallthrough();
  app.add_subcommand("complexity", "Geometric complexity of the CR and UI families")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (!radii_csv.empty()) cfg.radii = parse_radii(radii_csv);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "analyze") cmd_analyze(cfg);
    else if (cmd == "classify") cmd_classify(cfg);
    else if (cmd == "verify-lemmas") cmd_verify_lemmas(cfg);
    else if (cmd == "scan-periods") cmd_scan_periods(cfg);
    else cmd_complexity(cfg);
  } catch (const LemmaFailure&) {
    return kExitInconsistent;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const NonPeriodicError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInconsistent;
  }
  return 0;
}
