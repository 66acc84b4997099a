#include "isochron/random_fields.hpp"

namespace isochron {

long RandomFields::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

mpq_class RandomFields::real_rational() {
  mpq_class q(integer(-9, 9), static_cast<unsigned long>(integer(1, 6)));
  q.canonicalize();
  return q;
}

GaussianRational RandomFields::scalar() { return {real_rational(), real_rational()}; }

GaussianRational RandomFields::nonzero_scalar() {
  for (;;) {
    GaussianRational z = scalar();
    if (!z.is_zero()) return z;
  }
}

PlanarField RandomFields::generic(int d) {
  PlanarField::Coefficients c;
  for (int n = 2; n <= d; ++n) {
    for (int i = 0; i <= n; ++i) {
      if (integer(0, 3) == 0) continue;
      c.emplace(Exponent{i, n - i}, scalar());
    }
  }
  return PlanarField(d, c);
}

PlanarField RandomFields::homogeneous(int d) {
  PlanarField::Coefficients c;
  for (int i = 0; i <= d; ++i) c.emplace(Exponent{i, d - i}, nonzero_scalar());
  return PlanarField(d, c);
}

PlanarField RandomFields::uniform_homogeneous(int d, bool zero_middle) {
  PlanarField::Coefficients c;
  for (int i = 1; i <= d; ++i) {
    const int partner = d - i + 1;
    if (i < partner) {
      const GaussianRational a = nonzero_scalar();
      c[Exponent{i, d - i}] = a;
      c[Exponent{partner, i - 1}] = a.conj();
    } else if (i == partner && !zero_middle) {
      mpq_class r = 0;
      while (sgn(r) == 0) r = real_rational();
      c[Exponent{i, d - i}] = GaussianRational(r);
    }
  }
  return PlanarField(d, c);
}

PlanarField RandomFields::cauchy_riemann(int d) {
  PlanarField::Coefficients c;
  for (int n = 2; n <= d; ++n) c.emplace(Exponent{n, 0}, nonzero_scalar());
  return PlanarField(d, c);
}

PlanarField RandomFields::quadratic_uniform() {
  const GaussianRational p11 = nonzero_scalar();
  return PlanarField(2, PlanarField::Coefficients{{{2, 0}, p11.conj()}, {{1, 1}, p11}});
}

PlanarField RandomFields::quadratic_holomorphic() {
  return PlanarField(2, PlanarField::Coefficients{{{2, 0}, nonzero_scalar()}});
}

}  // namespace isochron
