#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isochron/bipoly.hpp"

namespace isochron {

/// Degree n = (n1, n2) of a homogeneous operator; at most one entry is -1.
struct Letter {
  int n1 = 0;
  int n2 = 0;

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend Letter operator+(Letter a, Letter b) { return {a.n1 + b.n1, a.n2 + b.n2}; }

  /// "(n1,n2)"
  std::string to_string() const;
  static Letter parse(std::string_view text);
};

/// Concatenation word over letters. Ordered graded-lexicographically:
/// shorter words first, then letter by letter.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t k) const { return letters_[k]; }

  Word concat(const Word& o) const;
  Word reversed() const;
  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  /// "(1,0)·(0,1)" (U+00B7 separator); the empty word renders as "∅".
  std::string to_string() const;
  /// Accepts the rendering above; "*" and "." are also accepted as separators.
  static Word parse(std::string_view text);

 private:
  std::vector<Letter> letters_;
};

/// First-order operator dx(x,y) ∂x + dy(x,y) ∂y, stored only through its
/// values on the coordinate functions.
///
/// A homogeneous operator carries its letter n: dx is a multiple of
/// x^{n1+1} y^{n2} and dy a multiple of x^{n1} y^{n2+1}. The zero derivation
/// never carries a letter and all zero derivations compare equal.
class Derivation {
 public:
  Derivation() = default;
  Derivation(BiPoly dx, BiPoly dy, std::optional<Letter> letter = std::nullopt);

  /// Validated homogeneous operator of degree `letter`; throws InputError
  /// if the coefficients are not monomials of the matching multidegree.
  static Derivation homogeneous(Letter letter, const GaussianRational& cx, const GaussianRational& cy);

  const BiPoly& dx() const { return dx_; }
  const BiPoly& dy() const { return dy_; }
  const std::optional<Letter>& letter() const { return letter_; }
  bool is_zero() const { return dx_.is_zero() && dy_.is_zero(); }

  /// dx ∂x(p) + dy ∂y(p)
  BiPoly apply(const BiPoly& p) const;

  Derivation operator-() const;
  Derivation& operator+=(const Derivation& o);
  Derivation& operator-=(const Derivation& o);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(const GaussianRational& c, const Derivation& d);

  friend bool operator==(const Derivation& a, const Derivation& b) { return a.dx_ == b.dx_ && a.dy_ == b.dy_; }
  friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

  std::string to_string() const;

 private:
  BiPoly dx_;
  BiPoly dy_;
  std::optional<Letter> letter_;
};

/// Letter-indexed family of homogeneous operators.
using OperatorMap = std::map<Letter, Derivation>;

/// [D1, D2] = D1∘D2 - D2∘D1. Letters add when both inputs carry one.
Derivation lie_bracket(const Derivation& d1, const Derivation& d2);

/// D1(D2(p)) - D2(D1(p)) by double application; independent of lie_bracket.
BiPoly bracket_oracle(const Derivation& d1, const Derivation& d2, const BiPoly& p);

/// [B_n] for n = n1...nr: B_{n1} for r = 1, else [B_{nr}, [B_{n(r-1)}, ... [B_{n2}, B_{n1}] ... ]].
/// Throws InputError for an empty word or a letter missing from `ops`.
Derivation nested_bracket(const Word& w, const OperatorMap& ops);

}  // namespace isochron
