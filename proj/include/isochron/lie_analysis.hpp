#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "isochron/operators.hpp"
#include "isochron/prepared.hpp"

namespace isochron {

/// Guards against combinatorial blow-up on wide alphabets. Exceeding a
/// limit throws InputError; lower the word length or depth instead.
struct SearchLimits {
  std::size_t max_words = 2'000'000;
  std::size_t max_bracket_evaluations = 5'000'000;
  std::size_t max_generators = 20'000;
};

struct BracketWitness {
  Letter first;
  Letter second;
  Derivation bracket;
};

/// Truncated descending central series of the algebra generated by A(X).
/// levels[k] generates C^{k+1}; zero derivations are pruned and exact
/// duplicates dropped, but no linear reduction is done.
struct SeriesReport {
  std::vector<std::vector<Derivation>> levels;
  bool nilpotent_order1 = true;
  /// Nonzero [B_n, B_m], n < m.
  std::vector<BracketWitness> witnesses;
  /// Smallest i with C^i = {0}, if reached within the computed depth.
  std::optional<int> vanishing_level;
};

struct WordWitness {
  Word word;
  Derivation bracket;
};

/// How a bounded triviality verdict extends to all word lengths.
enum class ProofBasis {
  none,
  /// Operators split into x^n∂x and y^n∂y families of opposite weight sign.
  cauchy_riemann,
  /// All pairwise brackets vanish and no letter is resonant.
  nilpotent,
};

struct ResonanceReport {
  int max_len = 0;
  /// Graded-lex order.
  std::vector<Word> resonant_words;
  bool all_brackets_zero = true;
  std::vector<WordWitness> witnesses;
  ProofBasis proof = ProofBasis::none;
  bool structurally_proven() const { return all_brackets_zero && proof != ProofBasis::none; }
};

/// Level-2 report: [B_n, B_m] for all unordered pairs of distinct letters.
SeriesReport pairwise_brackets(const Alphabet& a);

/// Level 1 is the alphabet, level k+1 brackets level 1 with level k.
/// Stops at the first empty level. Throws InputError if depth < 1.
SeriesReport central_series(const Alphabet& a, int depth, const SearchLimits& limits = {});

/// Weight-zero words of length 1..max_len in graded-lex order.
std::vector<Word> enumerate_resonant_words(const Alphabet& a, int max_len, const SearchLimits& limits = {});

/// Calls visit(word, [B_word]) for every word of length <= max_len whose
/// nested bracket is nonzero. A zero prefix bracket prunes all its
/// extensions. With resonant_only, only weight-zero words are reported
/// (prefixes are still explored). Visiting order is depth-first by letter.
void visit_nonzero_brackets(const Alphabet& a, int max_len, bool resonant_only,
                            const std::function<void(const Word&, const Derivation&)>& visit,
                            const SearchLimits& limits = {});

/// Under the Cauchy–Riemann shape every operator is c x^n∂x with positive
/// weight or c y^n∂y with negative weight, and mixed brackets vanish.
bool cr_structural_predicate(const Alphabet& a);

/// Evaluates [B_w] for every resonant w with |w| <= max_len; length-1
/// words contribute the operator itself.
ResonanceReport resonant_subset_trivial(const Alphabet& a, int max_len, const SearchLimits& limits = {});

}  // namespace isochron
