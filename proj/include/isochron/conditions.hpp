#pragma once

#include <set>
#include <string>
#include <vector>

#include "isochron/prepared.hpp"

namespace isochron {

enum class ConditionId { UI, CR, Q_i, Q_ii, Q_iii, Q_iv, HOM_UNIFORM };

std::string to_string(ConditionId id);
/// Throws InputError for unknown names.
ConditionId parse_condition_id(const std::string& name);

/// One coefficient relation lhs = rhs, with residual lhs - rhs.
struct Relation {
  std::string text;
  GaussianRational residual;
  /// Homogeneous degree of the coefficients involved.
  int degree = 0;
  bool holds() const { return residual.is_zero(); }
};

struct ConditionVerdict {
  ConditionId condition;
  bool holds = true;
  /// Every relation with a nonzero residual, in emission order.
  std::vector<Relation> failing;
};

/// p_{0,n} = 0 and p_{i,n-i} = conj(p_{n-i+1,i-1}) for n = 2..d, i = 1..n.
std::vector<Relation> uniform_relations(const PlanarField& f);
/// p_{i,n-i} = 0 for i = 0..n-1, n = 2..d.
std::vector<Relation> cauchy_riemann_relations(const PlanarField& f);

/// Coefficient relations cross-checked against y·P = x·swap_conj(P).
/// Throws InconsistencyError if the two routes disagree.
ConditionVerdict check_uniform(const PlanarField& f);
/// Coefficient relations cross-checked against ∂y P = 0.
ConditionVerdict check_cauchy_riemann(const PlanarField& f);

/// The four quadratic verdicts Q_i..Q_iv. Throws InputError unless degree is 2.
std::vector<ConditionVerdict> quadratic_verdicts(const PlanarField& f);
std::set<ConditionId> classify_quadratic(const PlanarField& f);

/// Relations of the homogeneous uniform lemma for degree d: p_{0,d} = 0,
/// p_{i,d-i} = conj(p_{d-i+1,i-1}) for i = 1..d, and p_{m+1,m} = 0 when d = 2m+1.
std::vector<Relation> homogeneous_uniform_relations(const PlanarField& f);
/// Throws InputError if P is not homogeneous of degree f.degree(). When the
/// verdict holds, also asserts structural linearisability (InconsistencyError
/// otherwise).
ConditionVerdict homogeneous_uniform_verdict(const PlanarField& f);

struct GeomComplexity {
  int q = 0;
  int m = 1;
  int ambient_dim = 0;
};

/// g_Holo(d) = (d, 1); g_Uni(d) = (d+1, 1) for even d and (d+2, 1) for odd d.
/// Throws InputError for d < 2 or a condition other than CR / UI.
GeomComplexity geometric_complexity(ConditionId id, int d);

/// Number of relations the homogeneous CR / UI checkers emit at degree d,
/// counting each listed relation once as written.
int homogeneous_relation_count(ConditionId id, int d);

}  // namespace isochron
