#include "isochron/reports.hpp"

#include "isochron/lie_analysis.hpp"
#include "isochron/numverify.hpp"

namespace isochron {

Json analyze_report(const PlanarField& f, const AnalyzeOptions& opts, const Mould* mould) {
  const Alphabet a = decompose(f);
  Json alphabet = Json::array();
  Json resonant = Json::array();
  for (const auto& [l, op] : a.operators()) {
    alphabet.push_back(Json{{"letter", l.to_string()}, {"weight", weight(l)}, {"operator", to_json(op)}});
    if (weight(l) == 0) resonant.push_back(l.to_string());
  }

  Json table = Json::array();
  const auto letters = a.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t k = i + 1; k < letters.size(); ++k) {
      table.push_back(Json{{"pair", Json::array({letters[i].to_string(), letters[k].to_string()})},
                           {"bracket", to_json(lie_bracket(a.at(letters[i]), a.at(letters[k])))}});
    }
  }

  const SeriesReport series = central_series(a, opts.series_depth);
  Json sizes = Json::array();
  for (const auto& level : series.levels) sizes.push_back(level.size());

  Json out{{"field", to_json(f)},
           {"alphabet", alphabet},
           {"pairwise_brackets", table},
           {"nilpotent_order1", series.nilpotent_order1},
           {"central_series", to_json(series)},
           {"central_series_sizes", sizes},
           {"resonant_letters", resonant},
           {"resonance", to_json(resonant_subset_trivial(a, opts.max_word_length))},
           {"verdict", to_string(structural_linearisability(a, opts.max_word_length))}};
  if (mould) {
    const PrenormalReport rep = projection_report(*mould, a, opts.max_word_length);
    out["projection"] = to_json(rep);
    out["projection_sum"] = to_json(rep.total(a));
  }
  return out;
}

Json classify_report(const PlanarField& f) {
  Json verdicts = Json::array({to_json(check_uniform(f)), to_json(check_cauchy_riemann(f))});
  Json quad = Json::array();
  if (f.degree() == 2) {
    for (const auto& v : quadratic_verdicts(f)) {
      if (v.holds) quad.push_back(to_string(v.condition));
      verdicts.push_back(to_json(v));
    }
  }
  if (f.is_homogeneous()) verdicts.push_back(to_json(homogeneous_uniform_verdict(f)));
  Json out{{"verdicts", verdicts}};
  if (f.degree() == 2) out["quadratic"] = quad;
  return out;
}

Json lemma_report(const SuiteOptions& opts) {
  bool all = true;
  Json suites = Json::array();
  for (const auto& r : run_lemma_suites(opts)) {
    all &= r.passed;
    suites.push_back(Json{
        {"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"counterexamples", r.counterexamples}});
  }
  return Json{{"seed", opts.seed}, {"max_word_length", opts.max_word_length}, {"suites", suites}, {"passed", all}};
}

Json scan_report(const PlanarField& f, const std::vector<double>& radii, double tol) {
  return to_json(isochrony_scan(f, radii, tol));
}

Json complexity_report(std::optional<ConditionId> id, int degree) {
  if (id) return to_json(*id, degree, geometric_complexity(*id, degree));
  Json out = Json::array();
  for (ConditionId c : {ConditionId::CR, ConditionId::UI}) out.push_back(to_json(c, degree, geometric_complexity(c, degree)));
  return out;
}

}  // namespace isochron
