#include "doctest.h"
#include "isochron/conditions.hpp"
#include "isochron/errors.hpp"
#include "isochron/lie_analysis.hpp"
#include "isochron/prenormal.hpp"
#include "isochron/random_fields.hpp"

using namespace isochron;

namespace {

GaussianRational q(long n, long d) { return GaussianRational(mpq_class(n, d)); }

PlanarField quadratic(const GaussianRational& p20, const GaussianRational& p11, const GaussianRational& p02) {
  return PlanarField(2, PlanarField::Coefficients{{{2, 0}, p20}, {{1, 1}, p11}, {{0, 2}, p02}});
}

using Ids = std::set<ConditionId>;

}  // namespace

TEST_CASE("check_uniform examples") {
  CHECK(check_uniform(quadratic(1, 1, 0)).holds);

  const ConditionVerdict bad = check_uniform(quadratic(0, 0, 3));
  CHECK(!bad.holds);
  REQUIRE(bad.failing.size() == 1);
  CHECK(bad.failing[0].text == "p_{0,2}=0");
  CHECK(bad.failing[0].residual == GaussianRational(3));

  const GaussianRational a(2, -3);
  const PlanarField cubic(3, PlanarField::Coefficients{{{3, 0}, a}, {{1, 2}, a.conj()}, {{2, 1}, q(5, 4)}});
  CHECK(check_uniform(cubic).holds);
  CHECK(!check_uniform(PlanarField(3, PlanarField::Coefficients{{{2, 1}, GaussianRational(0, 1)}})).holds);
}

TEST_CASE("check_cauchy_riemann examples") {
  CHECK(check_cauchy_riemann(quadratic(GaussianRational(3, 7), 0, 0)).holds);
  CHECK(check_cauchy_riemann(PlanarField(3, BiPoly::monomial(3, 0) + BiPoly::monomial(2, 0))).holds);
  const ConditionVerdict v = check_cauchy_riemann(quadratic(0, 2, 0));
  CHECK(!v.holds);
  REQUIRE(v.failing.size() == 1);
  CHECK(v.failing[0].text == "p_{1,1}=0");
  CHECK(v.failing[0].residual == GaussianRational(2));
}

TEST_CASE("uniform and Cauchy-Riemann routes agree on random fields") {
  RandomFields rnd(61);
  int ui = 0, cr = 0;
  for (int t = 0; t < 500; ++t) {
    const int d = static_cast<int>(rnd.integer(2, 6));
    PlanarField f = rnd.generic(d);
    switch (t % 4) {
      case 1: f = rnd.uniform_homogeneous(d, t % 8 == 1); break;
      case 2: f = rnd.cauchy_riemann(d); break;
      default: break;
    }
    const ConditionVerdict u = check_uniform(f);
    const ConditionVerdict c = check_cauchy_riemann(f);
    const BiPoly x = BiPoly::x(), y = BiPoly::y();
    CHECK(u.holds == (y * f.p() == x * f.companion()));
    CHECK(c.holds == partial(f.p(), Var::y).is_zero());
    CHECK(u.holds == u.failing.empty());
    for (const Relation& r : u.failing) CHECK(!r.holds());
    ui += u.holds;
    cr += c.holds;
  }
  CHECK(ui > 50);
  CHECK(cr > 50);
}

TEST_CASE("classify_quadratic examples") {
  CHECK(classify_quadratic(quadratic(1, 0, 0)) == Ids{ConditionId::Q_i});
  CHECK(classify_quadratic(quadratic(1, 1, 0)) == Ids{ConditionId::Q_ii});
  CHECK(classify_quadratic(quadratic(q(5, 2), 1, q(3, 2))) == Ids{ConditionId::Q_iii});
  CHECK(classify_quadratic(quadratic(q(5, 2), 1, q(-3, 2))) == Ids{ConditionId::Q_iii});
  CHECK(classify_quadratic(quadratic(q(7, 6), 1, q(1, 2))) == Ids{ConditionId::Q_iv});
  // Every relation is homogeneous in the coefficients, so P = 0 meets all four.
  CHECK(classify_quadratic(quadratic(0, 0, 0)) ==
        Ids{ConditionId::Q_i, ConditionId::Q_ii, ConditionId::Q_iii, ConditionId::Q_iv});
  CHECK(classify_quadratic(quadratic(1, 1, 1)).empty());
  CHECK_THROWS_AS(classify_quadratic(PlanarField(3, BiPoly{})), InputError);
}

TEST_CASE("quadratic verdicts list exact residuals") {
  const auto v = quadratic_verdicts(quadratic(1, 1, 1));
  REQUIRE(v.size() == 4);
  CHECK(v[0].condition == ConditionId::Q_i);
  CHECK(v[3].condition == ConditionId::Q_iv);
  bool found = false;
  for (const Relation& r : v[2].failing) {
    if (r.text == "|p_{1,1}|^2=4/9|p_{0,2}|^2") {
      found = true;
      CHECK(r.residual == q(5, 9));
    }
  }
  CHECK(found);
  // Complex coefficients: modulus relations see only p conj(p).
  const GaussianRational p11(3, 4);
  CHECK(classify_quadratic(quadratic(q(7, 6) * p11.conj(), p11, GaussianRational(0, q(5, 2).re()))) ==
        Ids{ConditionId::Q_iv});
}

TEST_CASE("conditions i and ii imply structural linearisability") {
  RandomFields rnd(62);
  for (int t = 0; t < 20; ++t) {
    for (const PlanarField& f : {rnd.quadratic_uniform(), rnd.quadratic_holomorphic()}) {
      const Ids ids = classify_quadratic(f);
      CHECK((ids.count(ConditionId::Q_i) + ids.count(ConditionId::Q_ii)) > 0);
      const Alphabet a = decompose(f);
      CHECK(pairwise_brackets(a).nilpotent_order1);
      CHECK(structural_linearisability(a, 6) == StructuralVerdict::LinearisableStructural);
    }
  }
}

TEST_CASE("homogeneous_uniform_verdict examples") {
  RandomFields rnd(63);
  const PlanarField even = rnd.uniform_homogeneous(4, false);
  CHECK(homogeneous_uniform_verdict(even).holds);
  CHECK(structural_linearisability(decompose(even), 6) == StructuralVerdict::LinearisableStructural);

  const ConditionVerdict odd = homogeneous_uniform_verdict(rnd.uniform_homogeneous(5, false));
  CHECK(!odd.holds);
  REQUIRE(odd.failing.size() == 1);
  CHECK(odd.failing[0].text == "p_{3,2}=0");
  CHECK(homogeneous_uniform_verdict(rnd.uniform_homogeneous(5, true)).holds);

  CHECK(homogeneous_uniform_verdict(PlanarField(3, BiPoly{})).holds);
  CHECK_THROWS_AS(homogeneous_uniform_verdict(rnd.generic(3)), InputError);
  CHECK(!homogeneous_uniform_verdict(rnd.homogeneous(3)).holds);
}

TEST_CASE("geometric complexity") {
  CHECK(geometric_complexity(ConditionId::CR, 3).q == 3);
  CHECK(geometric_complexity(ConditionId::UI, 4).q == 5);
  CHECK(geometric_complexity(ConditionId::UI, 5).q == 7);
  for (int d = 2; d <= 8; ++d) {
    const GeomComplexity cr = geometric_complexity(ConditionId::CR, d);
    const GeomComplexity ui = geometric_complexity(ConditionId::UI, d);
    CHECK(cr.q == d);
    CHECK(cr.m == 1);
    CHECK(ui.q == (d % 2 == 0 ? d + 1 : d + 2));
    CHECK(ui.m == 1);
    CHECK(cr.ambient_dim == (d + 1) * (d + 2) / 2 - 3);
    CHECK(cr.q == homogeneous_relation_count(ConditionId::CR, d));
    CHECK(ui.q == homogeneous_relation_count(ConditionId::UI, d));
  }
  CHECK_THROWS_AS(geometric_complexity(ConditionId::Q_i, 3), InputError);
  CHECK_THROWS_AS(geometric_complexity(ConditionId::CR, 1), InputError);
}

TEST_CASE("condition ids in text form") {
  for (ConditionId id : {ConditionId::UI, ConditionId::CR, ConditionId::Q_i, ConditionId::Q_ii, ConditionId::Q_iii,
                         ConditionId::Q_iv, ConditionId::HOM_UNIFORM}) {
    CHECK(parse_condition_id(to_string(id)) == id);
  }
  CHECK_THROWS_AS(parse_condition_id("Q_v"), InputError);
}
