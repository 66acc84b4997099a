#pragma once

#include <map>
#include <utility>

#include "isochron/bipoly.hpp"
#include "isochron/operators.hpp"

namespace isochron {

enum class XiSign { plus, minus };

/// Planar field ẋ = ξx + P(x,y), ẏ = -ξy + Q(y,x) with y = conj(x),
/// ξ = ±i and q_{i,j} = conj(p_{j,i}). Only P is stored.
class PlanarField {
 public:
  using Coefficients = std::map<Exponent, GaussianRational, GradedOrder>;

  /// Throws InputError unless degree >= 2 and every stored exponent has
  /// i, j >= 0 and 2 <= i + j <= degree. Zero coefficients are dropped.
  PlanarField(int degree, const Coefficients& coefficients, XiSign xi_sign = XiSign::plus);
  PlanarField(int degree, const BiPoly& p, XiSign xi_sign = XiSign::plus);

  int degree() const { return degree_; }
  XiSign xi_sign() const { return xi_sign_; }
  GaussianRational xi() const { return xi_sign_ == XiSign::plus ? GaussianRational::i() : -GaussianRational::i(); }
  const BiPoly& p() const { return p_; }
  /// p_{i,j}; zero outside the stored range.
  GaussianRational coeff(int i, int j) const;

  /// Q(y,x) as a polynomial in (x,y): swap_conj(P).
  BiPoly companion() const { return swap_conj(p_); }
  /// True when every nonzero coefficient has total degree `degree()`.
  bool is_homogeneous() const { return p_.is_homogeneous(degree_); }

 private:
  int degree_;
  XiSign xi_sign_;
  BiPoly p_;
};

/// A(X): letters with a nonzero homogeneous operator.
class Alphabet {
 public:
  Alphabet() = default;
  /// Zero operators are dropped; every operator must carry its letter.
  explicit Alphabet(const OperatorMap& ops);

  const OperatorMap& operators() const { return ops_; }
  std::vector<Letter> letters() const;
  bool empty() const { return ops_.empty(); }
  std::size_t size() const { return ops_.size(); }
  bool contains(const Letter& l) const { return ops_.count(l) > 0; }
  const Derivation& at(const Letter& l) const;

 private:
  OperatorMap ops_;
};

/// Splits P into the three operator families
///   B_{(i-1,k-i)} = x^{i-1} y^{k-i} (p_{i,k-i} x∂x + conj(p_{k-i+1,i-1}) y∂y),
///   B_{(-1,k)}    = p_{0,k} y^k ∂x,
///   B_{(k,-1)}    = conj(p_{0,k}) x^k ∂y,
/// for 2 <= k <= d, 1 <= i <= k.
Alphabet decompose(const PlanarField& f);

/// ω(n) / ξ = n1 - n2 for λ = (ξ, -ξ).
int weight(const Letter& n);
/// Sum of letter weights.
int weight(const Word& w);

/// (X_lin + Σ B_n)(x) and (X_lin + Σ B_n)(y). Throws InconsistencyError if
/// they differ from (ξx + P, -ξy + swap_conj(P)).
std::pair<BiPoly, BiPoly> reconstruct(const PlanarField& f);

}  // namespace isochron
