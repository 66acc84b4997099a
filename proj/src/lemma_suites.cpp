#include "isochron/lemma_suites.hpp"

#include <functional>

#include "isochron/conditions.hpp"
#include "isochron/json_io.hpp"
#include "isochron/lie_analysis.hpp"
#include "isochron/prenormal.hpp"
#include "isochron/random_fields.hpp"

namespace isochron {

namespace {

using BracketFn = std::function<Derivation(const Derivation&, const Derivation&)>;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    result_.passed = false;
    if (result_.counterexamples.size() < 5) result_.counterexamples.push_back(describe());
  }

  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

Derivation op_or_zero(const Alphabet& a, Letter l) {
  return a.contains(l) ? a.at(l) : Derivation{};
}

std::string field_text(const PlanarField& f) { return to_json(f).dump(); }

/// xy [alpha x∂x + beta y∂y]
Derivation quadratic_bracket_formula(const PlanarField& f) {
  const GaussianRational p20 = f.coeff(2, 0), p11 = f.coeff(1, 1);
  const GaussianRational alpha = p11 * (p11.conj() - p20);
  const GaussianRational beta = p11.conj() * (p20.conj() - p11);
  return {BiPoly::monomial(2, 1, alpha), BiPoly::monomial(1, 2, beta)};
}

void quadratic_formula_cases(Suite& s, RandomFields& rnd, const BracketFn& bracket) {
  for (int t = 0; t < 100; ++t) {
    const PlanarField f = rnd.generic(2);
    const Alphabet a = decompose(f);
    const Derivation got = bracket(op_or_zero(a, {1, 0}), op_or_zero(a, {0, 1}));
    s.check(got == quadratic_bracket_formula(f), [&] { return "[B(1,0),B(0,1)] formula fails for " + field_text(f); });
  }
}

SuiteResult fond2_suite(RandomFields& rnd, const BracketFn& bracket) {
  Suite s("fond2");
  quadratic_formula_cases(s, rnd, bracket);
  for (int t = 0; t < 100; ++t) {
    const PlanarField u = rnd.quadratic_uniform();
    s.check(pairwise_brackets(decompose(u)).nilpotent_order1, [&] { return "uniform case not nilpotent: " + field_text(u); });
    const PlanarField h = rnd.quadratic_holomorphic();
    s.check(pairwise_brackets(decompose(h)).nilpotent_order1,
            [&] { return "holomorphic case not nilpotent: " + field_text(h); });
  }
  return s.done();
}

SuiteResult bracket_lemma_suite(RandomFields& rnd, const BracketFn& bracket) {
  Suite s("bracket_lemma");
  for (int n = 2; n <= 6; ++n) {
    for (int t = 0; t < 50; ++t) {
      const PlanarField f = rnd.homogeneous(n);
      const Alphabet a = decompose(f);
      const BiPoly xy_pow = BiPoly::monomial(n - 1, n - 1);
      const GaussianRational c = GaussianRational(n) * GaussianRational(f.coeff(0, n).norm_sq());
      const Derivation expected_edge{c * (xy_pow * BiPoly::x()), -c * (xy_pow * BiPoly::y())};
      s.check(bracket(op_or_zero(a, {n, -1}), op_or_zero(a, {-1, n})) == expected_edge,
              [&] { return "edge bracket, n=" + std::to_string(n) + ": " + field_text(f); });
      for (int i = 1; i <= n; ++i) {
        const GaussianRational p = f.coeff(i, n - i);
        const GaussianRational q = f.coeff(n - i + 1, i - 1);
        const GaussianRational u = q - p.conj();
        const GaussianRational ki(n - i), li(i - 1);
        const GaussianRational cx = ki * p * u + li * q * u.conj();
        const GaussianRational cy = ki * p.conj() * u.conj() + li * q.conj() * u;
        const Derivation expected{cx * (xy_pow * BiPoly::x()), -cy * (xy_pow * BiPoly::y())};
        const Derivation got = bracket(op_or_zero(a, {i - 1, n - i}), op_or_zero(a, {n - i, i - 1}));
        s.check(got == expected, [&] {
          return "U_i bracket, n=" + std::to_string(n) + " i=" + std::to_string(i) + ": " + field_text(f);
        });
      }
    }
  }
  return s.done();
}

SuiteResult structure1_suite(RandomFields& rnd) {
  Suite s("structure1");
  for (int d = 2; d <= 6; ++d) {
    for (int t = 0; t < 50; ++t) {
      const PlanarField f = rnd.uniform_homogeneous(d, t % 2 == 0);
      s.check(pairwise_brackets(decompose(f)).nilpotent_order1, [&] { return "not nilpotent: " + field_text(f); });
    }
  }
  return s.done();
}

SuiteResult holom_suite(RandomFields& rnd, int max_len) {
  Suite s("holom");
  for (int d = 2; d <= 5; ++d) {
    for (int t = 0; t < 50; ++t) {
      const PlanarField f = rnd.cauchy_riemann(d);
      const Alphabet a = decompose(f);
      const ResonanceReport r = resonant_subset_trivial(a, max_len);
      s.check(r.all_brackets_zero && cr_structural_predicate(a),
              [&] { return "resonant subset not trivial: " + field_text(f); });
    }
  }
  return s.done();
}

SuiteResult fond3_suite(RandomFields& rnd, std::uint64_t seed, int max_len) {
  Suite s("fond3");
  for (int d = 2; d <= 6; ++d) {
    for (int t = 0; t < 4; ++t) {
      const bool zero_middle = t % 2 == 0;
      const PlanarField f = rnd.uniform_homogeneous(d, zero_middle);
      const Alphabet a = decompose(f);
      s.check(verify_fond3(a, 20, max_len, mix_seed(seed + 97 * static_cast<std::uint64_t>(d) + t)),
              [&] { return "projection sum is not the letter sum: " + field_text(f); });
      if (d % 2 == 0 || zero_middle) {
        const Mould m = Mould::random(mix_seed(seed ^ static_cast<std::uint64_t>(d * 31 + t)));
        s.check(projection_sum(m, a, max_len).is_zero(), [&] { return "prenormal form not linear: " + field_text(f); });
      }
    }
  }
  for (int t = 0; t < 10; ++t) {
    const PlanarField f = t % 2 == 0 ? rnd.quadratic_uniform() : rnd.quadratic_holomorphic();
    const Mould m = Mould::random(mix_seed(seed + 1000 + static_cast<std::uint64_t>(t)));
    s.check(projection_sum(m, decompose(f), max_len).is_zero(),
            [&] { return "quadratic prenormal form not linear: " + field_text(f); });
  }
  return s.done();
}

SuiteResult uniform_homogeneous_suite(RandomFields& rnd) {
  Suite s("uniform_homogeneous");
  for (int d = 2; d <= 6; ++d) {
    for (int t = 0; t < 10; ++t) {
      const PlanarField f = rnd.uniform_homogeneous(d, true);
      // The verdict raises if a holding verdict is not structurally linearisable.
      s.check(homogeneous_uniform_verdict(f).holds, [&] { return "verdict fails: " + field_text(f); });
      if (d % 2 == 1) {
        const PlanarField g = rnd.uniform_homogeneous(d, false);
        s.check(!homogeneous_uniform_verdict(g).holds, [&] { return "middle coefficient ignored: " + field_text(g); });
      }
    }
  }
  return s.done();
}

}  // namespace

std::vector<SuiteResult> run_lemma_suites(const SuiteOptions& opts) {
  const BracketFn bracket = opts.mutate_bracket_sign
                                ? BracketFn([](const Derivation& a, const Derivation& b) { return lie_bracket(b, a); })
                                : BracketFn([](const Derivation& a, const Derivation& b) { return lie_bracket(a, b); });
  RandomFields rnd(opts.seed);
  std::vector<SuiteResult> out;
  out.push_back(fond2_suite(rnd, bracket));
  out.push_back(bracket_lemma_suite(rnd, bracket));
  out.push_back(structure1_suite(rnd));
  out.push_back(holom_suite(rnd, opts.max_word_length));
  out.push_back(fond3_suite(rnd, opts.seed, opts.max_word_length));
  out.push_back(uniform_homogeneous_suite(rnd));
  return out;
}

}  // namespace isochron
