#pragma once

#include <complex>
#include <map>
#include <string>

#include "isochron/gaussian.hpp"

namespace isochron {

enum class Var { x, y };

/// Exponent pair (i, j) of the monomial x^i y^j.
struct Exponent {
  int i = 0;
  int j = 0;

  int total() const { return i + j; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Graded order: total degree ascending, then powers of x descending
/// (x^2, xy, y^2, x^3, ...). Fixes iteration and serialization order.
struct GradedOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.i > b.i;
  }
};

/// Sparse bivariate polynomial over the Gaussian rationals.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
class BiPoly {
 public:
  using Terms = std::map<Exponent, GaussianRational, GradedOrder>;

  BiPoly() = default;
  BiPoly(const GaussianRational& c);  // NOLINT: constants promote implicitly

  static BiPoly monomial(int i, int j, const GaussianRational& c = 1);
  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  GaussianRational coeff(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// True for zero, or when every term has total degree `deg`.
  bool is_homogeneous(int deg) const;

  /// Adds c x^i y^j, dropping the term if the sum cancels.
  void add_term(int i, int j, const GaussianRational& c);

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const GaussianRational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const GaussianRational& c) { return a *= c; }
  friend BiPoly operator*(const GaussianRational& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly pow(int k) const;
  /// p(X, Y) for polynomials X, Y.
  BiPoly substitute(const BiPoly& X, const BiPoly& Y) const;
  std::complex<double> evaluate(std::complex<double> x, std::complex<double> y) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

BiPoly partial(const BiPoly& p, Var v);

/// sum conj(p_{j,i}) x^i y^j: conjugate every coefficient and transpose
/// exponents. Maps P(x,y) to the companion Q(y,x) under q_{i,j} = conj(p_{j,i}).
BiPoly swap_conj(const BiPoly& p);

}  // namespace isochron
