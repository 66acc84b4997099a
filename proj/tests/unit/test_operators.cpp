#include "doctest.h"
#include "isochron/errors.hpp"
#include "isochron/operators.hpp"
#include "isochron/prepared.hpp"
#include "isochron/random_fields.hpp"
#include "../support/oracles.hpp"

using namespace isochron;

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

PlanarField quadratic(long p20, long p11, long p02) {
  return PlanarField(2, PlanarField::Coefficients{{{2, 0}, p20}, {{1, 1}, p11}, {{0, 2}, p02}});
}

Derivation random_homogeneous_op(RandomFields& rnd) {
  for (;;) {
    const Alphabet a = decompose(rnd.generic(static_cast<int>(rnd.integer(2, 4))));
    if (a.empty()) continue;
    const auto letters = a.letters();
    return a.at(letters[static_cast<std::size_t>(rnd.integer(0, static_cast<long>(letters.size()) - 1))]);
  }
}

}  // namespace

TEST_CASE("op_apply examples") {
  const Derivation x2dx{X * X, {}};
  CHECK(x2dx.apply(X) == X * X);

  const Alphabet a = decompose(PlanarField(2, PlanarField::Coefficients{{{2, 0}, 1}, {{1, 1}, 2}}));
  CHECK(a.at({1, 0}).apply(X) == X * X);

  const Alphabet b = decompose(PlanarField(2, PlanarField::Coefficients{{{0, 2}, 3}}));
  // 3y^2 ∂x applied to x^2 by hand: 6 x y^2.
  CHECK(b.at({-1, 2}).apply(X * X) == BiPoly::monomial(1, 2, 6));
}

TEST_CASE("lie_bracket examples") {
  RandomFields rnd(1);
  const Derivation d = random_homogeneous_op(rnd);
  CHECK(lie_bracket(d, d).is_zero());

  const Alphabet a = decompose(PlanarField(2, PlanarField::Coefficients{{{0, 2}, 3}}));
  const Derivation edge = lie_bracket(a.at({2, -1}), a.at({-1, 2}));
  CHECK(edge == Derivation{BiPoly::monomial(2, 1, 18), BiPoly::monomial(1, 2, -18)});
  CHECK(edge.letter() == Letter{1, 1});

  // Quadratic bracket with p20 = 1, p11 = 2: p11 (conj p11 - p20) = 2 and
  // conj(p11) (conj p20 - p11) = -2, on x^2 y ∂x and x y^2 ∂y.
  const Alphabet q = decompose(quadratic(1, 2, 0));
  const Derivation b = lie_bracket(q.at({1, 0}), q.at({0, 1}));
  CHECK(b == oracle::commutator(q.at({1, 0}), q.at({0, 1})));
  CHECK(b == Derivation{BiPoly::monomial(2, 1, 2), BiPoly::monomial(1, 2, -2)});
}

TEST_CASE("nested_bracket examples") {
  const Alphabet q = decompose(quadratic(1, 2, 0));
  const auto& ops = q.operators();
  CHECK(nested_bracket(Word{{1, 0}}, ops) == q.at({1, 0}));
  CHECK(nested_bracket(Word{{1, 0}, {1, 0}}, ops).is_zero());
  // Last letter outermost: [B_(0,1), B_(1,0)].
  const Derivation nb = nested_bracket(Word{{1, 0}, {0, 1}}, ops);
  CHECK(nb == oracle::commutator(q.at({0, 1}), q.at({1, 0})));
  CHECK(nb == Derivation{BiPoly::monomial(2, 1, -2), BiPoly::monomial(1, 2, 2)});
  // Three letters: [B_c, [B_b, B_a]].
  const Alphabet g = decompose(quadratic(1, 2, 3));
  const Word w{{1, 0}, {0, 1}, {-1, 2}};
  CHECK(nested_bracket(w, g.operators()) ==
        oracle::commutator(g.at({-1, 2}), oracle::commutator(g.at({0, 1}), g.at({1, 0}))));

  CHECK_THROWS_AS(nested_bracket(Word{{5, 5}}, ops), InputError);
  CHECK_THROWS_AS(nested_bracket(Word{}, ops), InputError);
}

TEST_CASE("bracket_oracle examples") {
  RandomFields rnd(2);
  const Derivation d = random_homogeneous_op(rnd);
  CHECK(bracket_oracle(d, d, BiPoly::monomial(3, 2)).is_zero());
  CHECK(bracket_oracle(Derivation{X, {}}, Derivation{{}, Y}, X * Y).is_zero());
  const Alphabet q = decompose(PlanarField(2, PlanarField::Coefficients{{{2, 0}, 1}, {{1, 1}, 2}}));
  CHECK(bracket_oracle(q.at({1, 0}), q.at({0, 1}), X) == BiPoly::monomial(2, 1, 2));
}

TEST_CASE("bracket properties on random homogeneous operators") {
  RandomFields rnd(17);
  for (int t = 0; t < 60; ++t) {
    const Derivation a = random_homogeneous_op(rnd);
    const Derivation b = random_homogeneous_op(rnd);
    const Derivation c = random_homogeneous_op(rnd);
    const Derivation ab = lie_bracket(a, b);
    CHECK(ab == -lie_bracket(b, a));
    CHECK(ab == oracle::commutator(a, b));
    const Derivation jacobi =
        lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) + lie_bracket(c, lie_bracket(a, b));
    CHECK(jacobi.is_zero());
    if (!ab.is_zero()) {
      REQUIRE(ab.letter().has_value());
      CHECK(*ab.letter() == *a.letter() + *b.letter());
    }
    // Homogeneity of action: B_n(x^m) is a multiple of x^{n+m}.
    const int m1 = static_cast<int>(rnd.integer(0, 4)), m2 = static_cast<int>(rnd.integer(0, 4));
    for (const Derivation* d : {&a, &ab}) {
      if (d->is_zero()) continue;
      const BiPoly image = d->apply(BiPoly::monomial(m1, m2));
      CHECK(image.size() <= 1);
      for (const auto& [e, v] : image.terms()) {
        CHECK(e.i == d->letter()->n1 + m1);
        CHECK(e.j == d->letter()->n2 + m2);
      }
    }
  }
}

TEST_CASE("oracle equivalence on random monomials up to degree 8") {
  RandomFields rnd(23);
  for (int t = 0; t < 200; ++t) {
    const Derivation a = random_homogeneous_op(rnd), b = random_homogeneous_op(rnd);
    const int i = static_cast<int>(rnd.integer(0, 8));
    const BiPoly p = BiPoly::monomial(i, static_cast<int>(rnd.integer(0, 8 - i)), rnd.nonzero_scalar());
    CHECK(lie_bracket(a, b).apply(p) == bracket_oracle(a, b, p));
    CHECK(bracket_oracle(a, b, p) == oracle::commutator_on(a, b, p));
  }
}

TEST_CASE("homogeneous operator validation") {
  CHECK_NOTHROW(Derivation::homogeneous({-1, 2}, 3, 0));
  CHECK_THROWS_AS(Derivation::homogeneous({-1, 2}, 3, 1), InputError);
  CHECK_THROWS_AS(Derivation::homogeneous({2, -1}, 1, 0), InputError);
  CHECK_THROWS_AS(Derivation::homogeneous({-1, -1}, 0, 0), InputError);
  CHECK(!Derivation::homogeneous({1, 1}, 0, 0).letter().has_value());
  CHECK(Derivation{} == Derivation(BiPoly{}, BiPoly{}, Letter{1, 0}));
}

TEST_CASE("letters and words in text form") {
  CHECK(Letter::parse("(-1,2)") == Letter{-1, 2});
  CHECK(Letter::parse(" ( 3 , -1 ) ") == Letter{3, -1});
  CHECK_THROWS_AS(Letter::parse("(1;2)"), InputError);
  const Word w{{1, 0}, {0, 1}, {-1, 2}};
  CHECK(w.to_string() == "(1,0)\xC2\xB7(0,1)\xC2\xB7(-1,2)");
  CHECK(Word::parse(w.to_string()) == w);
  CHECK(Word::parse("(1,0)*(0,1)") == Word{{1, 0}, {0, 1}});
  CHECK(Word::parse("").empty());
  CHECK_THROWS_AS(Word::parse("(1,0)\xC2\xB7"), InputError);
  CHECK_THROWS_AS(Word::parse("(1,0)(0,1)"), InputError);
  CHECK(Word{{1, 0}}.concat(Word{{0, 1}}) == Word{{1, 0}, {0, 1}});
  CHECK(Word{{0, 5}} < Word{{0, 0}, {0, 0}});
  CHECK(Word{{0, 1}, {1, 0}} < Word{{1, 0}, {0, 1}});
}
