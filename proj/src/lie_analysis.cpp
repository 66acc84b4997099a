#include "isochron/lie_analysis.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <limits>

#include "isochron/errors.hpp"

namespace isochron {

namespace {

void require_length(int max_len) {
  if (max_len < 1) throw InputError("word length bound must be at least 1");
}

struct WeightRange {
  int lo = 0;
  int hi = 0;
};

WeightRange weight_range(const std::vector<Letter>& letters) {
  WeightRange r{std::numeric_limits<int>::max(), std::numeric_limits<int>::min()};
  for (const auto& l : letters) {
    r.lo = std::min(r.lo, weight(l));
    r.hi = std::max(r.hi, weight(l));
  }
  return r;
}

/// Can `remaining` more letters bring the running weight back to zero?
bool can_close(int running, int remaining, WeightRange r) {
  return -running >= r.lo * remaining && -running <= r.hi * remaining;
}

bool can_close_within(int running, int max_remaining, WeightRange r) {
  for (int k = 0; k <= max_remaining; ++k) {
    if (can_close(running, k, r)) return true;
  }
  return false;
}

class BracketSearch {
 public:
  BracketSearch(const Alphabet& a, int max_len, bool resonant_only, std::atomic<std::size_t>& budget,
                std::size_t limit)
      : a_(a),
        letters_(a.letters()),
        range_(weight_range(letters_)),
        max_len_(max_len),
        resonant_only_(resonant_only),
        budget_(budget),
        limit_(limit) {}

  void run_from(const Letter& first, const std::function<void(const Word&, const Derivation&)>& visit) {
    Word w{first};
    if (resonant_only_ && !can_close_within(weight(first), max_len_ - 1, range_)) return;
    descend(w, weight(first), a_.at(first), visit);
  }

 private:
  void descend(Word& w, int running, const Derivation& acc,
               const std::function<void(const Word&, const Derivation&)>& visit) {
    if (!resonant_only_ || running == 0) visit(w, acc);
    const int len = static_cast<int>(w.size());
    if (len == max_len_) return;
    for (const auto& l : letters_) {
      const int next = running + weight(l);
      if (resonant_only_ && !can_close_within(next, max_len_ - len - 1, range_)) continue;
      if (budget_.fetch_add(1, std::memory_order_relaxed) >= limit_) {
        throw InputError("bracket evaluation limit exceeded; lower the word length bound");
      }
      Derivation b = lie_bracket(a_.at(l), acc);
      if (b.is_zero()) continue;
      w.push_back(l);
      descend(w, next, b, visit);
      w.pop_back();
    }
  }

  const Alphabet& a_;
  std::vector<Letter> letters_;
  WeightRange range_;
  int max_len_;
  bool resonant_only_;
  std::atomic<std::size_t>& budget_;
  std::size_t limit_;
};

void add_unique(std::vector<Derivation>& level, Derivation d) {
  if (d.is_zero()) return;
  if (std::find(level.begin(), level.end(), d) != level.end()) return;
  level.push_back(std::move(d));
}

}  // namespace

SeriesReport pairwise_brackets(const Alphabet& a) {
  SeriesReport r;
  std::vector<Derivation> level1;
  for (const auto& [l, op] : a.operators()) level1.push_back(op);
  std::vector<Derivation> level2;
  const auto& ops = a.operators();
  for (auto it = ops.begin(); it != ops.end(); ++it) {
    for (auto jt = std::next(it); jt != ops.end(); ++jt) {
      Derivation b = lie_bracket(it->second, jt->second);
      if (b.is_zero()) continue;
      r.witnesses.push_back({it->first, jt->first, b});
      add_unique(level2, std::move(b));
    }
  }
  r.nilpotent_order1 = r.witnesses.empty();
  r.levels = {std::move(level1), std::move(level2)};
  if (r.levels[0].empty()) {
    r.vanishing_level = 1;
  } else if (r.levels[1].empty()) {
    r.vanishing_level = 2;
  }
  return r;
}

SeriesReport central_series(const Alphabet& a, int depth, const SearchLimits& limits) {
  if (depth < 1) throw InputError("series depth must be at least 1");
  SeriesReport r = pairwise_brackets(a);
  if (depth == 1) {
    r.levels.resize(1);
    if (r.vanishing_level && *r.vanishing_level > 1) r.vanishing_level.reset();
    return r;
  }
  const std::vector<Derivation>& base = r.levels[0];
  while (static_cast<int>(r.levels.size()) < depth && !r.levels.back().empty()) {
    const std::vector<Derivation>& prev = r.levels.back();
    if (base.size() * prev.size() > limits.max_generators * 50) {
      throw InputError("central series level too large; lower the series depth");
    }
    std::vector<Derivation> next;
    for (const auto& g : base) {
      for (const auto& h : prev) {
        add_unique(next, lie_bracket(g, h));
        if (next.size() > limits.max_generators) {
          throw InputError("central series generator limit exceeded; lower the series depth");
        }
      }
    }
    r.levels.push_back(std::move(next));
    if (r.levels.back().empty() && !r.vanishing_level) r.vanishing_level = static_cast<int>(r.levels.size());
  }
  return r;
}

std::vector<Word> enumerate_resonant_words(const Alphabet& a, int max_len, const SearchLimits& limits) {
  require_length(max_len);
  const std::vector<Letter> letters = a.letters();
  std::vector<Word> out;
  if (letters.empty()) return out;
  const WeightRange range = weight_range(letters);
  Word w;
  std::function<void(int, int)> extend = [&](int running, int remaining) {
    if (remaining == 0) {
      if (running == 0) {
        if (out.size() >= limits.max_words) {
          throw InputError("resonant word limit exceeded; lower the word length bound");
        }
        out.push_back(w);
      }
      return;
    }
    for (const auto& l : letters) {
      const int next = running + weight(l);
      if (!can_close(next, remaining - 1, range)) continue;
      w.push_back(l);
      extend(next, remaining - 1);
      w.pop_back();
    }
  };
  // Length-major then lexicographic, which is the graded-lex order.
  for (int len = 1; len <= max_len; ++len) extend(0, len);
  return out;
}

void visit_nonzero_brackets(const Alphabet& a, int max_len, bool resonant_only,
                            const std::function<void(const Word&, const Derivation&)>& visit,
                            const SearchLimits& limits) {
  require_length(max_len);
  std::atomic<std::size_t> budget{0};
  BracketSearch search(a, max_len, resonant_only, budget, limits.max_bracket_evaluations);
  for (const auto& l : a.letters()) search.run_from(l, visit);
}

bool cr_structural_predicate(const Alphabet& a) {
  std::vector<const Derivation*> x_family, y_family;
  for (const auto& [l, op] : a.operators()) {
    const bool pure_x = op.dy().is_zero() && op.dx().size() == 1 && op.dx().terms().begin()->first.j == 0;
    const bool pure_y = op.dx().is_zero() && op.dy().size() == 1 && op.dy().terms().begin()->first.i == 0;
    if (pure_x && weight(l) > 0) {
      x_family.push_back(&op);
    } else if (pure_y && weight(l) < 0) {
      y_family.push_back(&op);
    } else {
      return false;
    }
  }
  for (const auto* bx : x_family) {
    for (const auto* by : y_family) {
      if (!lie_bracket(*bx, *by).is_zero()) return false;
    }
  }
  return true;
}

ResonanceReport resonant_subset_trivial(const Alphabet& a, int max_len, const SearchLimits& limits) {
  ResonanceReport r;
  r.max_len = max_len;
  r.resonant_words = enumerate_resonant_words(a, max_len, limits);

  // Independent subtrees per first letter; merged and sorted afterwards.
  std::atomic<std::size_t> budget{0};
  std::vector<std::future<std::vector<WordWitness>>> tasks;
  for (const auto& first : a.letters()) {
    tasks.push_back(std::async(std::launch::async, [&a, &budget, &limits, first, max_len] {
      std::vector<WordWitness> found;
      BracketSearch search(a, max_len, true, budget, limits.max_bracket_evaluations);
      search.run_from(first, [&found](const Word& w, const Derivation& b) { found.push_back({w, b}); });
      return found;
    }));
  }
  for (auto& t : tasks) {
    for (auto& w : t.get()) r.witnesses.push_back(std::move(w));
  }
  std::sort(r.witnesses.begin(), r.witnesses.end(),
            [](const WordWitness& u, const WordWitness& v) { return u.word < v.word; });
  r.all_brackets_zero = r.witnesses.empty();

  if (cr_structural_predicate(a)) {
    r.proof = ProofBasis::cauchy_riemann;
  } else {
    const bool no_resonant_letter = std::none_of(a.operators().begin(), a.operators().end(),
                                                 [](const auto& kv) { return weight(kv.first) == 0; });
    if (no_resonant_letter && pairwise_brackets(a).nilpotent_order1) r.proof = ProofBasis::nilpotent;
  }
  return r;
}

}  // namespace isochron
