#include "eck/surgery.hpp"

namespace eck {

ChainComplex a_complex(int m, int j) {
  if (j < 0) throw std::invalid_argument("a_complex needs j >= 0");
  ChainComplex col = zeroth_column(m);
  return subcomplex(col,
                    [&](const Generator& g) { return g.alexander <= j; });
}

ChainComplex row_complex(int m, int a, int imax) {
  TorusKnotModel model(m);
  if (a < 0 || imax < 0)
    throw std::invalid_argument("row_complex needs a, imax >= 0");
  ChainComplex c;
  for (int i = 0; i <= imax; ++i) {
    int ag = a - i;  // Alexander grading of the zeroth-column factor
    if (ag < 0 || ag > 2 * model.g) continue;
    OrbitSet os = full_generator(i, ag);
    Generator g;
    g.id = to_string(os);
    g.alexander = a;
    g.eplus = i;
    g.z2 = z2(os);
    c.add_generator(std::move(g));
  }
  // Horizontal differentials only: e+^i e2^k -> e+^{i-1} h- e2^k.
  for (int i = 1; i <= imax; ++i) {
    int ag = a - i;
    if (ag < 0 || ag > 2 * model.g || ag % 2 != 0) continue;
    if (ag + 1 > 2 * model.g) continue;
    c.add_entry(to_string(full_generator(i, ag)),
                to_string(full_generator(i - 1, ag + 1)));
  }
  return c;
}

ChainComplex b_complex(int m, int i) {
  TorusKnotModel model(m);
  if (i < 0) throw std::invalid_argument("b_complex needs i >= 0");
  ChainComplex row = row_complex(m, 2 * model.g, 2 * model.g);
  return subcomplex(row, [&](const Generator& g) { return g.eplus < i; });
}

SurgeryResult surgery_eck_hat(const SurgerySpec& spec) {
  TorusKnotModel model(spec.m);
  if (spec.n <= 2 * model.g) throw FramingTooSmall(spec.n, model.g);
  SurgeryResult res;
  res.m = spec.m;
  res.n = spec.n;
  for (int j = 0; j < spec.n; ++j) {
    SurgeryClassResult cls;
    cls.j = j;
    cls.pieces[j] = homology(a_complex(spec.m, j));
    if (j < 2 * model.g)
      cls.pieces[j + spec.n] = homology(b_complex(spec.m, 2 * model.g - j));
    res.classes[j] = cls;
  }
  return res;
}

TwoTowerE1 two_tower_E1(int m, int n, int j) {
  TorusKnotModel model(m);
  if (j < 0) throw std::invalid_argument("two_tower_E1 needs j >= 0");
  TwoTowerE1 out;
  out.j = j;
  out.f0 = a_complex(m, j);
  if (j >= n) {
    out.has_f1 = true;
    out.f1 = row_complex(m, j - n, j);
  }
  return out;
}

UPowerCone u_power_cone(int m, int n, int j) {
  TorusKnotModel model(m);
  if (j <= 2 * model.g || n < 1 || n > j)
    throw std::invalid_argument("u_power_cone needs j > 2g and 1 <= n <= j");
  ChainMap f;
  f.source = row_complex(m, j - 1, j);
  f.target = row_complex(m, j - n, j);
  for (auto& g : f.source.generators) {
    int i = g.eplus;
    if (i < n - 1) continue;
    int ag = (j - 1) - i;
    f.action[g.id] = {to_string(full_generator(i - n + 1, ag))};
  }
  UPowerCone out;
  out.cone = mapping_cone(f);
  out.cone_homology = homology(out.cone);
  out.kernel = subcomplex(f.source,
                          [&](const Generator& g) { return g.eplus <= n - 2; });
  out.kernel_homology = homology(out.kernel);
  return out;
}

DF1Result d_F1_chain(int m, int n, int j) {
  TorusKnotModel model(m);
  if (j <= 2 * model.g || n < 1 || n > j)
    throw std::invalid_argument("d_F1_chain needs j > 2g and 1 <= n <= j");
  DF1Result out;
  out.source_rank = homology(a_complex(m, j)).rank;

  ChainComplex r1 = row_complex(m, j - 1, j);
  ChainComplex rt = row_complex(m, j - n, j);
  HomologyGroup h1 = homology(r1);
  out.intermediate_rank = h1.rank;
  int nt = static_cast<int>(rt.generators.size());
  BitMatrix dt = rt.matrix();
  F2Span boundaries;
  for (int c = 0; c < nt; ++c) {
    BitVec e = bv_make(nt);
    bv_set(e, c);
    boundaries.add(dt.apply(e));
  }
  out.target_rank = homology(rt).rank;

  // U^{n-1} on representatives of H(row j-1); the base-case map
  // H(A_j) -> H(row j-1) is the canonical isomorphism, so rank of the
  // composition equals rank of U_*^{n-1} restricted to H(row j-1).
  F2Span reached = boundaries;
  for (auto& rep : h1.representatives) {
    BitVec img = bv_make(nt);
    for (auto& id : rep) {
      const Generator& g = r1.generator(id);
      if (g.eplus < n - 1) continue;
      int ag = (j - 1) - g.eplus;
      int t = rt.index_of(to_string(full_generator(g.eplus - n + 1, ag)));
      if (t < 0) throw std::logic_error("U image left the target row");
      bv_flip(img, t);
    }
    if (reached.add(img)) ++out.map_rank;
  }
  out.kernel_rank = out.source_rank - out.map_rank;
  out.cokernel_rank = out.target_rank - out.map_rank;
  return out;
}

namespace {

// Decompose a zeroth-column id as h-^delta e2^b via its Alexander grading.
bool column_data(int m, const std::string& id, int* delta, int* b) {
  TorusKnotModel model(m);
  for (int a = 0; a <= 2 * model.g; ++a) {
    if (to_string(zeroth_column_generator(a)) == id) {
      *delta = a % 2;
      *b = a / 2;
      return true;
    }
  }
  return false;
}

}  // namespace

bool d_prime(int m, const std::string& id, std::string* image) {
  int delta = 0, b = 0;
  if (!column_data(m, id, &delta, &b))
    throw std::invalid_argument("not a zeroth-column generator: " + id);
  if (b == 0) return false;
  if (image)
    *image = to_string(zeroth_column_generator(2 * (b - 1) + delta));
  return true;
}

std::set<std::string> phi_hat(int m, const std::string& id) {
  int delta = 0, b = 0;
  if (!column_data(m, id, &delta, &b))
    throw std::invalid_argument("not a zeroth-column generator: " + id);
  std::set<std::string> out;
  for (int i = 0; i <= b; ++i)
    out.insert(to_string(full_generator(i, 2 * (b - i) + delta)));
  return out;
}

}  // namespace eck
