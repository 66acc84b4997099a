#include "isochron/prepared.hpp"

#include "isochron/errors.hpp"

namespace isochron {

namespace {

void validate_exponent(const Exponent& e, int degree) {
  if (e.i < 0 || e.j < 0 || e.total() < 2 || e.total() > degree) {
    throw InputError("coefficient p_{" + std::to_string(e.i) + "," + std::to_string(e.j) +
                     "} outside 2 <= i+j <= " + std::to_string(degree));
  }
}

}  // namespace

PlanarField::PlanarField(int degree, const Coefficients& coefficients, XiSign xi_sign)
    : degree_(degree), xi_sign_(xi_sign) {
  if (degree < 2) throw InputError("degree must be at least 2");
  for (const auto& [e, c] : coefficients) {
    validate_exponent(e, degree);
    p_.add_term(e.i, e.j, c);
  }
}

PlanarField::PlanarField(int degree, const BiPoly& p, XiSign xi_sign)
    : PlanarField(degree, Coefficients(p.terms().begin(), p.terms().end()), xi_sign) {}

GaussianRational PlanarField::coeff(int i, int j) const {
  if (i < 0 || j < 0) return {};
  return p_.coeff(i, j);
}

Alphabet::Alphabet(const OperatorMap& ops) {
  for (const auto& [l, d] : ops) {
    if (d.is_zero()) continue;
    if (!d.letter() || *d.letter() != l) throw InputError("operator stored under the wrong letter " + l.to_string());
    ops_.emplace(l, d);
  }
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  out.reserve(ops_.size());
  for (const auto& [l, d] : ops_) out.push_back(l);
  return out;
}

const Derivation& Alphabet::at(const Letter& l) const {
  auto it = ops_.find(l);
  if (it == ops_.end()) throw InputError("letter " + l.to_string() + " is not in the alphabet");
  return it->second;
}

Alphabet decompose(const PlanarField& f) {
  OperatorMap ops;
  for (int k = 2; k <= f.degree(); ++k) {
    for (int i = 1; i <= k; ++i) {
      const Letter l{i - 1, k - i};
      ops.emplace(l, Derivation::homogeneous(l, f.coeff(i, k - i), f.coeff(k - i + 1, i - 1).conj()));
    }
    const GaussianRational p0k = f.coeff(0, k);
    ops.emplace(Letter{-1, k}, Derivation::homogeneous({-1, k}, p0k, 0));
    ops.emplace(Letter{k, -1}, Derivation::homogeneous({k, -1}, 0, p0k.conj()));
  }
  return Alphabet(ops);
}

int weight(const Letter& n) { return n.n1 - n.n2; }

int weight(const Word& w) {
  int s = 0;
  for (const auto& l : w.letters()) s += weight(l);
  return s;
}

std::pair<BiPoly, BiPoly> reconstruct(const PlanarField& f) {
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  const GaussianRational xi = f.xi();
  BiPoly fx = xi * x;
  BiPoly fy = -xi * y;
  const Alphabet a = decompose(f);
  for (const auto& [l, op] : a.operators()) {
    fx += op.apply(x);
    fy += op.apply(y);
  }
  if (fx != xi * x + f.p() || fy != -xi * y + f.companion()) {
    throw InconsistencyError("prepared form does not reproduce the field");
  }
  return {std::move(fx), std::move(fy)};
}

}  // namespace isochron
