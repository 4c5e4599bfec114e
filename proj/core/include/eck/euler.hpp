#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eck/chaincx.hpp"
#include "eck/orbits.hpp"

namespace eck {

struct NotCoprime : std::runtime_error {
  NotCoprime(int p, int q)
      : std::runtime_error("gcd(" + std::to_string(p) + ", " +
                           std::to_string(q) + ") != 1") {}
};
struct CutoffTooSmall : std::runtime_error {
  explicit CutoffTooSmall(const std::string& what) : std::runtime_error(what) {}
};
struct CutoffExceeded : std::out_of_range {
  explicit CutoffExceeded(int d, int cutoff)
      : std::out_of_range("degree " + std::to_string(d) +
                          " above series cutoff " + std::to_string(cutoff)) {}
};

// Integer-coefficient Laurent polynomial; zero coefficients are never stored.
struct LaurentPolynomial {
  std::map<int, long long> coeff;

  static LaurentPolynomial zero() { return {}; }
  static LaurentPolynomial one() { return term(1, 0); }
  static LaurentPolynomial term(long long c, int deg);

  bool is_zero() const { return coeff.empty(); }
  long long at(int deg) const;
  int lowest_degree() const;  // requires nonzero
  int highest_degree() const;
  void set(int deg, long long c);
};

LaurentPolynomial operator+(const LaurentPolynomial& a,
                            const LaurentPolynomial& b);
LaurentPolynomial operator-(const LaurentPolynomial& a,
                            const LaurentPolynomial& b);
LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b);
bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Shift so the lowest degree is 0 and flip sign so the lowest coefficient is
// positive: the representative of the =·-class up to units +-t^k.
LaurentPolynomial unit_normalized(const LaurentPolynomial& p);

// "c*t^d" terms sorted by degree, joined by " + "; zero prints as "0".
std::string to_string(const LaurentPolynomial& p);

// Power series known only through degree `cutoff`; reading past the cutoff is
// an error, not a zero.
struct TruncatedSeries {
  int cutoff = 0;
  std::map<int, long long> coeff;  // degrees <= cutoff, no stored zeros

  long long at(int deg) const;
  void set(int deg, long long c);
};

TruncatedSeries truncate(const LaurentPolynomial& p, int cutoff);
TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const LaurentPolynomial& a, const TruncatedSeries& b);
bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

// num / den as a truncated series; den's lowest coefficient must be +-1.
TruncatedSeries series_divide(const TruncatedSeries& num,
                              const LaurentPolynomial& den);

std::string to_string(const TruncatedSeries& s);

// Sum over generators of (-1)^z2 t^grading.
LaurentPolynomial graded_chi(const ChainComplex& c, const std::string& grading);

// Local zeta factor of one orbit, truncated: (1 - t^a) positive hyperbolic,
// (1 + t^a) negative hyperbolic, (1 - t^a)^{-1} elliptic, a = alexander weight.
TruncatedSeries zeta_factor(const Orbit& o, int cutoff);
TruncatedSeries orbit_product(const std::vector<Orbit>& orbits, int cutoff);

// Turaev torsion of the T(p,q) complement by Fox calculus on
// <a, b | a^p b^{-q}>, abelianized by a -> t^q, b -> t^p; unit-normalized to
// lowest degree 0 with leading coefficient +1.
TruncatedSeries fox_torsion_torus(int p, int q, int cutoff);

struct CategorificationReport {
  bool ok = false;
  std::string detail;
};

// Does graded_chi(hat, "alexander") equal (1 - t^meridian_degree) * torsion up
// to a unit +-t^k?
CategorificationReport categorification_check(const ChainComplex& hat_complex,
                                              const TruncatedSeries& torsion,
                                              int meridian_degree);

}  // namespace eck
