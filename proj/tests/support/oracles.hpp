#pragma once

// Test-only reference implementations. Nothing here calls into the
// polynomial, bracket or enumeration code under test.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "isochron/bipoly.hpp"
#include "isochron/operators.hpp"

namespace oracle {

using isochron::GaussianRational;

/// Dense polynomial: c[i][j] is the coefficient of x^i y^j.
struct Dense {
  std::vector<std::vector<GaussianRational>> c;

  static Dense from(const isochron::BiPoly& p) {
    Dense d;
    for (const auto& [e, v] : p.terms()) d.at(e.i, e.j) = v;
    return d;
  }

  GaussianRational& at(std::size_t i, std::size_t j) {
    if (c.size() <= i) c.resize(i + 1);
    for (auto& row : c) {
      if (row.size() <= j) row.resize(j + 1);
    }
    std::size_t width = 0;
    for (auto& row : c) width = std::max(width, row.size());
    for (auto& row : c) row.resize(width);
    return c[i][j];
  }

  GaussianRational get(std::size_t i, std::size_t j) const {
    if (i >= c.size() || j >= c[i].size()) return {};
    return c[i][j];
  }

  std::size_t rows() const { return c.size(); }
  std::size_t cols() const { return c.empty() ? 0 : c[0].size(); }

  isochron::BiPoly to_bipoly() const {
    isochron::BiPoly p;
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < c[i].size(); ++j) {
        if (!c[i][j].is_zero()) p.add_term(static_cast<int>(i), static_cast<int>(j), c[i][j]);
      }
    }
    return p;
  }
};

inline Dense add(const Dense& a, const Dense& b, const GaussianRational& sb = 1) {
  Dense r;
  for (std::size_t i = 0; i < std::max(a.rows(), b.rows()); ++i) {
    for (std::size_t j = 0; j < std::max(a.cols(), b.cols()); ++j) {
      GaussianRational v = a.get(i, j) + sb * b.get(i, j);
      if (!v.is_zero()) r.at(i, j) = v;
    }
  }
  return r;
}

inline Dense mul(const Dense& a, const Dense& b) {
  Dense r;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.get(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b.get(k, l).is_zero()) continue;
          r.at(i + k, j + l) += a.get(i, j) * b.get(k, l);
        }
      }
    }
  }
  return r;
}

inline Dense dx(const Dense& a) {
  Dense r;
  for (std::size_t i = 1; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a.get(i, j).is_zero()) r.at(i - 1, j) = GaussianRational(static_cast<long>(i)) * a.get(i, j);
    }
  }
  return r;
}

inline Dense dy(const Dense& a) {
  Dense r;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 1; j < a.cols(); ++j) {
      if (!a.get(i, j).is_zero()) r.at(i, j - 1) = GaussianRational(static_cast<long>(j)) * a.get(i, j);
    }
  }
  return r;
}

/// (A, B) stands for A ∂x + B ∂y.
struct DenseDerivation {
  Dense a;
  Dense b;

  static DenseDerivation from(const isochron::Derivation& d) { return {Dense::from(d.dx()), Dense::from(d.dy())}; }

  Dense apply(const Dense& p) const { return add(mul(a, dx(p)), mul(b, dy(p))); }
};

/// D1(D2(p)) - D2(D1(p)).
inline isochron::BiPoly commutator_on(const isochron::Derivation& d1, const isochron::Derivation& d2,
                                      const isochron::BiPoly& p) {
  const auto o1 = DenseDerivation::from(d1);
  const auto o2 = DenseDerivation::from(d2);
  const Dense q = Dense::from(p);
  return add(o1.apply(o2.apply(q)), o2.apply(o1.apply(q)), -1).to_bipoly();
}

/// The bracket as the commutator evaluated on the coordinate functions.
inline isochron::Derivation commutator(const isochron::Derivation& d1, const isochron::Derivation& d2) {
  return {commutator_on(d1, d2, isochron::BiPoly::x()), commutator_on(d1, d2, isochron::BiPoly::y())};
}

/// Every word of length 1..max_len over `letters` with n1 - n2 summing to
/// zero, by exhaustive odometer enumeration, sorted graded-lex.
inline std::vector<isochron::Word> resonant_words(const std::vector<isochron::Letter>& letters, int max_len) {
  std::vector<isochron::Word> out;
  if (letters.empty()) return out;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
    for (;;) {
      int w = 0;
      std::vector<isochron::Letter> ls;
      for (auto k : idx) {
        ls.push_back(letters[k]);
        w += letters[k].n1 - letters[k].n2;
      }
      if (w == 0) out.emplace_back(ls);
      std::size_t pos = idx.size();
      while (pos > 0 && ++idx[pos - 1] == letters.size()) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
