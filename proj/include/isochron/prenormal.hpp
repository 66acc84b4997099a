#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isochron/lie_analysis.hpp"

namespace isochron {

/// Scalar evaluation on words. The empty word always evaluates to zero,
/// and a resonant-supported mould is zero on every non-resonant word.
class Mould {
 public:
  using Evaluator = std::function<GaussianRational(const Word&)>;

  Mould(Evaluator f, bool support_resonant_only, std::optional<std::vector<Word>> finite_support = std::nullopt);

  /// Small pseudo-random rational values, a pure function of (seed, word).
  static Mould random(std::uint64_t seed, bool support_resonant_only = true);
  static Mould indicator(const Word& w, const GaussianRational& value = 1);
  static Mould table(const std::map<Word, GaussianRational>& entries);

  GaussianRational operator()(const Word& w) const;
  bool support_resonant_only() const { return resonant_only_; }
  /// Words outside this list evaluate to zero, when present.
  const std::optional<std::vector<Word>>& finite_support() const { return support_; }

  friend Mould operator+(const Mould& a, const Mould& b);

 private:
  Evaluator f_;
  bool resonant_only_;
  std::optional<std::vector<Word>> support_;
};

struct PrenormalReport {
  int truncation_length = 0;
  /// M^n for letters n with a nonzero value.
  std::map<Letter, GaussianRational> letter_part;
  /// Σ_{|w| >= 2} (1/|w|) M^w [B_w]
  Derivation higher_part;
  bool reduced() const { return higher_part.is_zero(); }
  /// Σ_n M^n B_n + higher_part
  Derivation total(const Alphabet& a) const;
};

/// Σ_{r=1}^{max_len} (1/r) Σ_{|w|=r} M^w [B_w], empty word excluded.
Derivation projection_sum(const Mould& m, const Alphabet& a, int max_len, const SearchLimits& limits = {});
PrenormalReport projection_report(const Mould& m, const Alphabet& a, int max_len, const SearchLimits& limits = {});

/// Σ_{n in A(X), ω(n)=0} M^n B_n
Derivation letter_only_sum(const Mould& m, const Alphabet& a);

enum class StructuralVerdict { LinearisableStructural, Unknown };
std::string to_string(StructuralVerdict v);

/// LinearisableStructural when every resonant nested bracket up to max_len
/// vanishes and either the Cauchy–Riemann shape holds or the alphabet is
/// nilpotent of order 1 without resonant letters. Independent of any mould.
StructuralVerdict structural_linearisability(const Alphabet& a, int max_len, const SearchLimits& limits = {});

/// For `trials` random resonant-supported moulds, projection_sum equals the
/// letter-only sum. Throws InputError unless the alphabet is nilpotent of order 1.
bool verify_fond3(const Alphabet& a, int trials, int max_len, std::uint64_t seed);

/// splitmix64 step; shared by every seeded generator in the project.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace isochron
