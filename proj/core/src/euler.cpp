#include "eck/euler.hpp"

#include <numeric>

namespace eck {

LaurentPolynomial LaurentPolynomial::term(long long c, int deg) {
  LaurentPolynomial p;
  if (c != 0) p.coeff[deg] = c;
  return p;
}

long long LaurentPolynomial::at(int deg) const {
  auto it = coeff.find(deg);
  return it == coeff.end() ? 0 : it->second;
}

int LaurentPolynomial::lowest_degree() const {
  if (coeff.empty()) throw std::out_of_range("zero polynomial has no degree");
  return coeff.begin()->first;
}

int LaurentPolynomial::highest_degree() const {
  if (coeff.empty()) throw std::out_of_range("zero polynomial has no degree");
  return coeff.rbegin()->first;
}

void LaurentPolynomial::set(int deg, long long c) {
  if (c == 0)
    coeff.erase(deg);
  else
    coeff[deg] = c;
}

LaurentPolynomial operator+(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  LaurentPolynomial out = a;
  for (auto& [d, c] : b.coeff) out.set(d, out.at(d) + c);
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  LaurentPolynomial out = a;
  for (auto& [d, c] : b.coeff) out.set(d, out.at(d) - c);
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (auto& [da, ca] : a.coeff)
    for (auto& [db, cb] : b.coeff) out.set(da + db, out.at(da + db) + ca * cb);
  return out;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.coeff == b.coeff;
}

LaurentPolynomial unit_normalized(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  int lo = p.lowest_degree();
  long long sign = p.coeff.begin()->second < 0 ? -1 : 1;
  LaurentPolynomial out;
  for (auto& [d, c] : p.coeff) out.coeff[d - lo] = sign * c;
  return out;
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto& [d, c] : p.coeff) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*t^" + std::to_string(d);
  }
  return s;
}

long long TruncatedSeries::at(int deg) const {
  if (deg > cutoff) throw CutoffExceeded(deg, cutoff);
  auto it = coeff.find(deg);
  return it == coeff.end() ? 0 : it->second;
}

void TruncatedSeries::set(int deg, long long c) {
  if (deg > cutoff) throw CutoffExceeded(deg, cutoff);
  if (c == 0)
    coeff.erase(deg);
  else
    coeff[deg] = c;
}

TruncatedSeries truncate(const LaurentPolynomial& p, int cutoff) {
  TruncatedSeries s;
  s.cutoff = cutoff;
  for (auto& [d, c] : p.coeff)
    if (d <= cutoff) s.coeff[d] = c;
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out;
  out.cutoff = std::min(a.cutoff, b.cutoff);
  for (auto& [d, c] : a.coeff)
    if (d <= out.cutoff) out.set(d, out.at(d) + c);
  for (auto& [d, c] : b.coeff)
    if (d <= out.cutoff) out.set(d, out.at(d) + c);
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out;
  out.cutoff = std::min(a.cutoff, b.cutoff);
  for (auto& [da, ca] : a.coeff)
    for (auto& [db, cb] : b.coeff)
      if (da + db <= out.cutoff) out.set(da + db, out.at(da + db) + ca * cb);
  return out;
}

TruncatedSeries operator*(const LaurentPolynomial& a,
                          const TruncatedSeries& b) {
  TruncatedSeries out;
  out.cutoff = b.cutoff;
  for (auto& [da, ca] : a.coeff)
    for (auto& [db, cb] : b.coeff)
      if (da + db <= out.cutoff) out.set(da + db, out.at(da + db) + ca * cb);
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.cutoff == b.cutoff && a.coeff == b.coeff;
}

TruncatedSeries series_divide(const TruncatedSeries& num,
                              const LaurentPolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero series");
  int lo = den.lowest_degree();
  long long lead = den.at(lo);
  if (lead != 1 && lead != -1)
    throw std::invalid_argument(
        "series division needs a divisor with lowest coefficient +-1");
  // q = num/den: solve num = den * q degree by degree. q starts at
  // num_low - lo; coefficients valid through num.cutoff - lo.
  TruncatedSeries q;
  q.cutoff = num.cutoff - lo;
  for (int d = num.coeff.empty() ? 0 : num.coeff.begin()->first - lo;
       d <= q.cutoff; ++d) {
    long long acc = 0;
    // (den * q)(d + lo) so far, excluding the q(d) term.
    for (auto& [dd, dc] : den.coeff) {
      int qd = d + lo - dd;
      if (qd >= d) continue;
      auto it = q.coeff.find(qd);
      if (it != q.coeff.end()) acc += dc * it->second;
    }
    long long target = d + lo <= num.cutoff ? num.at(d + lo) : 0;
    long long c = (target - acc) / lead;
    if (c != 0) q.coeff[d] = c;
  }
  return q;
}

std::string to_string(const TruncatedSeries& s) {
  std::string out;
  for (auto& [d, c] : s.coeff) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*t^" + std::to_string(d);
  }
  if (out.empty()) out = "0";
  out += " + O(t^" + std::to_string(s.cutoff + 1) + ")";
  return out;
}

LaurentPolynomial graded_chi(const ChainComplex& c,
                             const std::string& grading) {
  LaurentPolynomial chi;
  for (auto& g : c.generators) {
    int d = grading_value(g, grading);
    chi.set(d, chi.at(d) + (g.z2 == 0 ? 1 : -1));
  }
  return chi;
}

TruncatedSeries zeta_factor(const Orbit& o, int cutoff) {
  int a = o.alexander_weight;
  switch (o.kind) {
    case OrbitKind::PositiveHyperbolic:
      return truncate(LaurentPolynomial::one() -
                          LaurentPolynomial::term(1, a),
                      cutoff);
    case OrbitKind::NegativeHyperbolic:
      return truncate(LaurentPolynomial::one() +
                          LaurentPolynomial::term(1, a),
                      cutoff);
    case OrbitKind::Elliptic: {
      // (1 - t^a)^{-1} = 1 + t^a + t^{2a} + ...
      TruncatedSeries s;
      s.cutoff = cutoff;
      if (a == 0) throw std::invalid_argument(
          "elliptic zeta factor needs positive alexander weight");
      for (int d = 0; d <= cutoff; d += a) s.coeff[d] = 1;
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

TruncatedSeries orbit_product(const std::vector<Orbit>& orbits, int cutoff) {
  TruncatedSeries out = truncate(LaurentPolynomial::one(), cutoff);
  for (auto& o : orbits) out = out * zeta_factor(o, cutoff);
  return out;
}

TruncatedSeries fox_torsion_torus(int p, int q, int cutoff) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) throw NotCoprime(p, q);
  // pi_1 = <a, b | a^p b^{-q}>, phi(a) = t^q, phi(b) = t^p.
  // Fox derivative: d(a^p b^{-q})/db = -a^p (b^{-1} + ... + b^{-q}), which
  // abelianizes to -(1 + t^p + ... + t^{p(q-1)}). Deleting the a-column
  // leaves this 1x1 determinant, divided by 1 - phi(a) = 1 - t^q.
  LaurentPolynomial numerator;
  for (int k = 0; k < q; ++k) numerator.set(p * k, -1);
  LaurentPolynomial denominator =
      LaurentPolynomial::one() - LaurentPolynomial::term(1, q);
  TruncatedSeries tau = series_divide(truncate(numerator, cutoff), denominator);
  // Unit-normalize: lowest degree 0, leading +1.
  if (tau.coeff.empty()) return tau;
  int lo = tau.coeff.begin()->first;
  long long sign = tau.coeff.begin()->second < 0 ? -1 : 1;
  TruncatedSeries out;
  out.cutoff = tau.cutoff - lo;
  for (auto& [d, c] : tau.coeff) out.coeff[d - lo] = sign * c;
  return out;
}

CategorificationReport categorification_check(const ChainComplex& hat_complex,
                                              const TruncatedSeries& torsion,
                                              int meridian_degree) {
  CategorificationReport rep;
  LaurentPolynomial chi = graded_chi(hat_complex, "alexander");
  if (!chi.is_zero() && chi.highest_degree() > torsion.cutoff)
    throw CutoffTooSmall("complex reaches degree " +
                         std::to_string(chi.highest_degree()) +
                         " but torsion cutoff is " +
                         std::to_string(torsion.cutoff));
  LaurentPolynomial mu =
      LaurentPolynomial::one() - LaurentPolynomial::term(1, meridian_degree);
  TruncatedSeries target = mu * torsion;

  if (chi.is_zero()) {
    rep.ok = target.coeff.empty();
    rep.detail = rep.ok ? "both sides zero" : "chi is zero but target is not";
    return rep;
  }
  if (target.coeff.empty()) {
    rep.ok = false;
    rep.detail = "target is zero but chi is not";
    return rep;
  }
  // Compare up to a unit +-t^k: shift both to lowest degree 0, lead +1.
  LaurentPolynomial chi_n = unit_normalized(chi);
  int lo = target.coeff.begin()->first;
  long long sign = target.coeff.begin()->second < 0 ? -1 : 1;
  int window = target.cutoff - lo;
  if (chi_n.highest_degree() > window)
    throw CutoffTooSmall("normalized comparison window ends at degree " +
                         std::to_string(window));
  for (int d = 0; d <= window; ++d) {
    long long lhs = chi_n.at(d);
    long long rhs = sign * target.at(d + lo);
    if (lhs != rhs) {
      rep.ok = false;
      rep.detail = "mismatch at normalized degree " + std::to_string(d) +
                   ": chi " + std::to_string(lhs) + " vs torsion side " +
                   std::to_string(rhs);
      return rep;
    }
  }
  rep.ok = true;
  rep.detail = "chi matches (1 - t^" + std::to_string(meridian_degree) +
               ")*torsion up to units";
  return rep;
}

}  // namespace eck
