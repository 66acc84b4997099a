#include "isochron/conditions.hpp"

#include "isochron/errors.hpp"
#include "isochron/prenormal.hpp"

namespace isochron {

namespace {

std::string p_name(int i, int j) { return "p_{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

Relation vanishing(const PlanarField& f, int i, int j) { return {p_name(i, j) + "=0", f.coeff(i, j), i + j}; }

Relation conj_pair(const PlanarField& f, int i, int j, int k, int l) {
  return {p_name(i, j) + "=conj(" + p_name(k, l) + ")", f.coeff(i, j) - f.coeff(k, l).conj(), i + j};
}

ConditionVerdict verdict_from(ConditionId id, const std::vector<Relation>& relations) {
  ConditionVerdict v{id, true, {}};
  for (const auto& r : relations) {
    if (!r.holds()) v.failing.push_back(r);
  }
  v.holds = v.failing.empty();
  return v;
}

void require_quadratic(const PlanarField& f) {
  if (f.degree() != 2) throw InputError("quadratic classification needs degree 2");
}

PlanarField generic_homogeneous(int d) {
  PlanarField::Coefficients c;
  for (int i = 0; i <= d; ++i) c.emplace(Exponent{i, d - i}, GaussianRational(1));
  return PlanarField(d, c);
}

}  // namespace

std::string to_string(ConditionId id) {
  switch (id) {
    case ConditionId::UI: return "UI";
    case ConditionId::CR: return "CR";
    case ConditionId::Q_i: return "Q_i";
    case ConditionId::Q_ii: return "Q_ii";
    case ConditionId::Q_iii: return "Q_iii";
    case ConditionId::Q_iv: return "Q_iv";
    case ConditionId::HOM_UNIFORM: return "HOM_UNIFORM";
  }
  return "?";
}

ConditionId parse_condition_id(const std::string& name) {
  for (auto id : {ConditionId::UI, ConditionId::CR, ConditionId::Q_i, ConditionId::Q_ii, ConditionId::Q_iii,
                  ConditionId::Q_iv, ConditionId::HOM_UNIFORM}) {
    if (to_string(id) == name) return id;
  }
  throw InputError("unknown condition id '" + name + "'");
}

std::vector<Relation> uniform_relations(const PlanarField& f) {
  std::vector<Relation> out;
  for (int n = 2; n <= f.degree(); ++n) {
    out.push_back(vanishing(f, 0, n));
    for (int i = 1; i <= n; ++i) out.push_back(conj_pair(f, i, n - i, n - i + 1, i - 1));
  }
  return out;
}

std::vector<Relation> cauchy_riemann_relations(const PlanarField& f) {
  std::vector<Relation> out;
  for (int n = 2; n <= f.degree(); ++n) {
    for (int i = 0; i <= n - 1; ++i) out.push_back(vanishing(f, i, n - i));
  }
  return out;
}

ConditionVerdict check_uniform(const PlanarField& f) {
  ConditionVerdict v = verdict_from(ConditionId::UI, uniform_relations(f));
  const bool identity = BiPoly::y() * f.p() == BiPoly::x() * f.companion();
  if (identity != v.holds) throw InconsistencyError("UI coefficient relations disagree with y*P = x*conj(P)");
  return v;
}

ConditionVerdict check_cauchy_riemann(const PlanarField& f) {
  ConditionVerdict v = verdict_from(ConditionId::CR, cauchy_riemann_relations(f));
  const bool identity = partial(f.p(), Var::y).is_zero();
  if (identity != v.holds) throw InconsistencyError("CR coefficient relations disagree with dP/dy = 0");
  return v;
}

std::vector<ConditionVerdict> quadratic_verdicts(const PlanarField& f) {
  require_quadratic(f);
  const GaussianRational p20 = f.coeff(2, 0);
  const GaussianRational p11 = f.coeff(1, 1);
  const GaussianRational p02 = f.coeff(0, 2);
  const GaussianRational n11(p11.norm_sq());
  const GaussianRational n02(p02.norm_sq());
  auto scaled_conj = [&](long num, long den) {
    const GaussianRational s(mpq_class(num, den));
    const std::string label = den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    return Relation{"p_{2,0}=" + label + " conj(p_{1,1})", p20 - s * p11.conj(), 2};
  };
  auto modulus = [&](long num, long den) {
    const GaussianRational s(mpq_class(num, den));
    const std::string label = den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    return Relation{"|p_{1,1}|^2=" + label + "|p_{0,2}|^2", n11 - s * n02, 2};
  };
  return {
      verdict_from(ConditionId::Q_i, {vanishing(f, 1, 1), vanishing(f, 0, 2)}),
      verdict_from(ConditionId::Q_ii, {conj_pair(f, 2, 0, 1, 1), vanishing(f, 0, 2)}),
      verdict_from(ConditionId::Q_iii, {scaled_conj(5, 2), modulus(4, 9)}),
      verdict_from(ConditionId::Q_iv, {scaled_conj(7, 6), modulus(4, 1)}),
  };
}

std::set<ConditionId> classify_quadratic(const PlanarField& f) {
  std::set<ConditionId> out;
  for (const auto& v : quadratic_verdicts(f)) {
    if (v.holds) out.insert(v.condition);
  }
  return out;
}

std::vector<Relation> homogeneous_uniform_relations(const PlanarField& f) {
  const int d = f.degree();
  std::vector<Relation> out{vanishing(f, 0, d)};
  for (int i = 1; i <= d; ++i) out.push_back(conj_pair(f, i, d - i, d - i + 1, i - 1));
  if (d % 2 == 1) {
    const int m = (d - 1) / 2;
    out.push_back(vanishing(f, m + 1, m));
  }
  return out;
}

ConditionVerdict homogeneous_uniform_verdict(const PlanarField& f) {
  if (!f.is_homogeneous()) throw InputError("homogeneous uniform lemma needs P homogeneous of its degree");
  ConditionVerdict v = verdict_from(ConditionId::HOM_UNIFORM, homogeneous_uniform_relations(f));
  if (v.holds && structural_linearisability(decompose(f), 6) != StructuralVerdict::LinearisableStructural) {
    throw InconsistencyError("homogeneous uniform field is not structurally linearisable");
  }
  return v;
}

GeomComplexity geometric_complexity(ConditionId id, int d) {
  if (d < 2) throw InputError("degree must be at least 2");
  GeomComplexity g;
  g.ambient_dim = (d + 1) * (d + 2) / 2 - 3;
  g.m = 1;
  switch (id) {
    case ConditionId::CR: g.q = d; break;
    case ConditionId::UI: g.q = d % 2 == 0 ? d + 1 : d + 2; break;
    default: throw InputError("geometric complexity is defined for CR and UI only");
  }
  return g;
}

int homogeneous_relation_count(ConditionId id, int d) {
  if (d < 2) throw InputError("degree must be at least 2");
  const PlanarField f = generic_homogeneous(d);
  switch (id) {
    case ConditionId::CR: {
      int count = 0;
      for (const auto& r : cauchy_riemann_relations(f)) count += r.degree == d ? 1 : 0;
      return count;
    }
    case ConditionId::UI: return static_cast<int>(homogeneous_uniform_relations(f).size());
    default: throw InputError("relation counts are defined for CR and UI only");
  }
}

}  // namespace isochron
