#include "eck/torusknot.hpp"

namespace eck {

TorusKnotModel::TorusKnotModel(int n_) : n(n_), g((n_ - 1) / 2) {
  if (n_ < 3 || n_ % 2 == 0) throw BadN(n_);
}

Orbit orbit_e2() { return Orbit{"e2", OrbitKind::Elliptic, 2, 0}; }
Orbit orbit_hminus() { return Orbit{"h-", OrbitKind::PositiveHyperbolic, 1, 0}; }
Orbit orbit_eplus() { return Orbit{"e+", OrbitKind::Elliptic, 1, 0}; }
Orbit orbit_hplus() { return Orbit{"h+", OrbitKind::PositiveHyperbolic, 1, 0}; }

OrbitSet zeroth_column_generator(int a) {
  OrbitSet g = OrbitSet::single(orbit_e2(), a / 2);
  if (a % 2) g = multiply(g, OrbitSet::single(orbit_hminus()));
  return g;
}

OrbitSet full_generator(int i, int a) {
  return multiply(OrbitSet::single(orbit_eplus(), i),
                  zeroth_column_generator(a));
}

ChainComplex zeroth_column(int n) {
  TorusKnotModel model(n);
  ChainComplex c;
  for (int a = 0; a <= 2 * model.g; ++a) {
    OrbitSet os = zeroth_column_generator(a);
    Generator g;
    g.id = to_string(os);
    g.alexander = a;
    g.eplus = 0;
    g.z2 = z2(os);
    c.add_generator(std::move(g));
  }
  // d(e2^i) = h- e2^{i-1}: grading 2i -> 2i - 1.
  for (int i = 1; i <= model.g; ++i)
    c.add_entry(to_string(zeroth_column_generator(2 * i)),
                to_string(zeroth_column_generator(2 * i - 1)));
  return c;
}

ChainComplex full_complex(int n, int imax) {
  TorusKnotModel model(n);
  if (imax < 0) throw std::invalid_argument("imax must be >= 0");
  ChainComplex c;
  for (int i = 0; i <= imax; ++i) {
    for (int a = 0; a <= 2 * model.g; ++a) {
      OrbitSet os = full_generator(i, a);
      Generator g;
      g.id = to_string(os);
      g.alexander = i + a;
      g.eplus = i;
      g.z2 = z2(os);
      c.add_generator(std::move(g));
    }
  }
  for (int i = 0; i <= imax; ++i) {
    for (int a = 0; a <= 2 * model.g; ++a) {
      std::string from = to_string(full_generator(i, a));
      // Vertical part: e+^i tensor d(Γ), i.e. a = 2k -> 2k - 1.
      if (a % 2 == 0 && a > 0)
        c.add_entry(from, to_string(full_generator(i, a - 1)));
      // Horizontal part: e+^{i-1} tensor h-Γ; vanishes if h- already present
      // (h-^2 = 0) or h-Γ leaves the diagonal region A <= 2g.
      if (i > 0 && a % 2 == 0 && a + 1 <= 2 * model.g)
        c.add_entry(from, to_string(full_generator(i - 1, a + 1)));
    }
  }
  return c;
}

ChainComplex full_complex(int n) { return full_complex(n, n); }

std::map<int, std::pair<int, std::string>> eck_hat(int n) {
  TorusKnotModel model(n);
  std::map<int, std::pair<int, std::string>> table;
  for (int a = 0; a <= 2 * model.g; ++a)
    table[a] = {1, to_string(zeroth_column_generator(a))};
  return table;
}

}  // namespace eck
