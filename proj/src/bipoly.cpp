#include "isochron/bipoly.hpp"

#include <sstream>

#include "isochron/errors.hpp"

namespace isochron {

BiPoly::BiPoly(const GaussianRational& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{0, 0}, c);
}

BiPoly BiPoly::monomial(int i, int j, const GaussianRational& c) {
  if (i < 0 || j < 0) throw InputError("negative exponent in monomial");
  BiPoly p;
  p.add_term(i, j, c);
  return p;
}

GaussianRational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find(Exponent{i, j});
  return it == terms_.end() ? GaussianRational{} : it->second;
}

int BiPoly::total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }

bool BiPoly::is_homogeneous(int deg) const {
  for (const auto& [e, c] : terms_) {
    if (e.total() != deg) return false;
  }
  return true;
}

void BiPoly::add_term(int i, int j, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (&o == this) return *this *= GaussianRational(2);
  for (const auto& [e, c] : o.terms_) add_term(e.i, e.j, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (&o == this) {
    terms_.clear();
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e.i, e.j, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.i + eb.i, ea.j + eb.j, ca * cb);
  }
  return r;
}

BiPoly BiPoly::pow(int k) const {
  if (k < 0) throw InputError("negative power of polynomial");
  BiPoly r(GaussianRational(1));
  for (int n = 0; n < k; ++n) r = r * *this;
  return r;
}

BiPoly BiPoly::substitute(const BiPoly& X, const BiPoly& Y) const {
  BiPoly r;
  std::map<int, BiPoly> xpow, ypow;
  auto power = [](std::map<int, BiPoly>& cache, const BiPoly& base, int k) -> const BiPoly& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, base.pow(k)).first;
    return it->second;
  };
  for (const auto& [e, c] : terms_) r += c * (power(xpow, X, e.i) * power(ypow, Y, e.j));
  return r;
}

namespace {

std::complex<double> ipow(std::complex<double> z, int k) {
  std::complex<double> r = 1;
  for (int n = 0; n < k; ++n) r *= z;
  return r;
}

}  // namespace

std::complex<double> BiPoly::evaluate(std::complex<double> x, std::complex<double> y) const {
  std::complex<double> s = 0;
  for (const auto& [e, c] : terms_) s += c.to_complex() * ipow(x, e.i) * ipow(y, e.j);
  return s;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ')';
    if (e.i > 0) os << "*x^" << e.i;
    if (e.j > 0) os << "*y^" << e.j;
  }
  return os.str();
}

BiPoly partial(const BiPoly& p, Var v) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) {
    const int k = v == Var::x ? e.i : e.j;
    if (k == 0) continue;
    if (v == Var::x) {
      r.add_term(e.i - 1, e.j, c * GaussianRational(k));
    } else {
      r.add_term(e.i, e.j - 1, c * GaussianRational(k));
    }
  }
  return r;
}

BiPoly swap_conj(const BiPoly& p) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e.j, e.i, c.conj());
  return r;
}

}  // namespace isochron
