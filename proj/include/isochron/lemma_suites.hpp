#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace isochron {

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  int max_word_length = 6;
  /// Harness self-test: formula checks use [D2, D1] in place of [D1, D2].
  bool mutate_bracket_sign = false;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  int cases = 0;
  /// First few failures, human readable.
  std::vector<std::string> counterexamples;
};

/// Randomized checks of the bracket identities and the nilpotency,
/// triviality and reduction lemmas, in a fixed order: fond2 (including the
/// quadratic bracket formula), bracket_lemma, structure1, holom, fond3,
/// uniform_homogeneous.
std::vector<SuiteResult> run_lemma_suites(const SuiteOptions& opts);

}  // namespace isochron
