#include "isochron/prenormal.hpp"

#include <algorithm>

#include "isochron/errors.hpp"

namespace isochron {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

GaussianRational small_rational_pair(std::uint64_t h) {
  auto part = [](std::uint64_t bits) {
    const long num = static_cast<long>(bits % 13) - 6;
    const long den = static_cast<long>((bits >> 8) % 5) + 1;
    return mpq_class(num, den);
  };
  return {part(h), part(h >> 20)};
}

}  // namespace

Mould::Mould(Evaluator f, bool support_resonant_only, std::optional<std::vector<Word>> finite_support)
    : f_(std::move(f)), resonant_only_(support_resonant_only), support_(std::move(finite_support)) {}

Mould Mould::random(std::uint64_t seed, bool support_resonant_only) {
  return Mould(
      [seed](const Word& w) {
        std::uint64_t h = mix_seed(seed);
        for (const auto& l : w.letters()) {
          h = mix_seed(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.n1)));
          h = mix_seed(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.n2)) << 32));
        }
        return small_rational_pair(h);
      },
      support_resonant_only);
}

Mould Mould::indicator(const Word& w, const GaussianRational& value) {
  return Mould([w, value](const Word& u) { return u == w ? value : GaussianRational{}; }, false,
               std::vector<Word>{w});
}

Mould Mould::table(const std::map<Word, GaussianRational>& entries) {
  std::vector<Word> support;
  for (const auto& [w, v] : entries) support.push_back(w);
  return Mould(
      [entries](const Word& u) {
        auto it = entries.find(u);
        return it == entries.end() ? GaussianRational{} : it->second;
      },
      false, std::move(support));
}

GaussianRational Mould::operator()(const Word& w) const {
  if (w.empty()) return {};
  if (resonant_only_ && weight(w) != 0) return {};
  if (support_ && std::find(support_->begin(), support_->end(), w) == support_->end()) return {};
  return f_(w);
}

Mould operator+(const Mould& a, const Mould& b) {
  std::optional<std::vector<Word>> support;
  if (a.support_ && b.support_) {
    support = *a.support_;
    for (const auto& w : *b.support_) {
      if (std::find(support->begin(), support->end(), w) == support->end()) support->push_back(w);
    }
  }
  return Mould([a, b](const Word& w) { return a(w) + b(w); }, a.resonant_only_ && b.resonant_only_,
               std::move(support));
}

Derivation PrenormalReport::total(const Alphabet& a) const {
  Derivation d = higher_part;
  for (const auto& [l, v] : letter_part) d += v * a.at(l);
  return d;
}

PrenormalReport projection_report(const Mould& m, const Alphabet& a, int max_len, const SearchLimits& limits) {
  if (max_len < 1) throw InputError("truncation length must be at least 1");
  PrenormalReport r;
  r.truncation_length = max_len;
  auto accumulate = [&](const Word& w, const Derivation& bracket) {
    const GaussianRational value = m(w);
    if (value.is_zero()) return;
    if (w.size() == 1) {
      r.letter_part.emplace(w[0], value);
      return;
    }
    const GaussianRational inv_r(mpq_class(1, static_cast<unsigned long>(w.size())));
    r.higher_part += (inv_r * value) * bracket;
  };
  if (const auto& support = m.finite_support()) {
    std::vector<Word> words = *support;
    std::sort(words.begin(), words.end());
    for (const auto& w : words) {
      if (w.empty() || static_cast<int>(w.size()) > max_len) continue;
      accumulate(w, nested_bracket(w, a.operators()));
    }
  } else {
    visit_nonzero_brackets(a, max_len, m.support_resonant_only(), accumulate, limits);
  }
  return r;
}

Derivation projection_sum(const Mould& m, const Alphabet& a, int max_len, const SearchLimits& limits) {
  return projection_report(m, a, max_len, limits).total(a);
}

Derivation letter_only_sum(const Mould& m, const Alphabet& a) {
  Derivation d;
  for (const auto& [l, op] : a.operators()) {
    if (weight(l) == 0) d += m(Word{l}) * op;
  }
  return d;
}

std::string to_string(StructuralVerdict v) {
  return v == StructuralVerdict::LinearisableStructural ? "LinearisableStructural" : "Unknown";
}

StructuralVerdict structural_linearisability(const Alphabet& a, int max_len, const SearchLimits& limits) {
  return resonant_subset_trivial(a, max_len, limits).structurally_proven() ? StructuralVerdict::LinearisableStructural
                                                                           : StructuralVerdict::Unknown;
}

bool verify_fond3(const Alphabet& a, int trials, int max_len, std::uint64_t seed) {
  if (!pairwise_brackets(a).nilpotent_order1) {
    throw InputError("verify_fond3 requires an alphabet nilpotent of order 1");
  }
  bool ok = true;
  for (int t = 0; t < trials; ++t) {
    const Mould m = Mould::random(mix_seed(seed ^ static_cast<std::uint64_t>(t)), true);
    ok = ok && projection_sum(m, a, max_len) == letter_only_sum(m, a);
  }
  return ok;
}

}  // namespace isochron
