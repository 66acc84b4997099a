#pragma once

#include <optional>

#include "isochron/conditions.hpp"
#include "isochron/json_io.hpp"
#include "isochron/lemma_suites.hpp"
#include "isochron/prenormal.hpp"

namespace isochron {

// Machine-readable reports shared by the command line tool and the python
// module. Key order is fixed, so dumps are byte-stable.

struct AnalyzeOptions {
  int max_word_length = 6;
  int series_depth = 3;
};

/// Alphabet with weights, pairwise bracket table, central series, resonant
/// words and the structural verdict; the projection sum too when a mould is given.
Json analyze_report(const PlanarField& f, const AnalyzeOptions& opts, const Mould* mould = nullptr);

/// UI and CR verdicts, the four quadratic verdicts for degree 2, and the
/// homogeneous uniform verdict for homogeneous P.
Json classify_report(const PlanarField& f);

/// Suite results plus an overall "passed".
Json lemma_report(const SuiteOptions& opts);

Json scan_report(const PlanarField& f, const std::vector<double>& radii, double tol);

/// A single object for one condition, or [CR, UI] when none is given.
Json complexity_report(std::optional<ConditionId> id, int degree);

}  // namespace isochron
