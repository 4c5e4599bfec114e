#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "eck/chaincx.hpp"
#include "eck/orbits.hpp"

namespace eck {

struct BadN : std::invalid_argument {
  explicit BadN(int n)
      : std::invalid_argument("torus knot parameter n = " + std::to_string(n) +
                              " must be odd and >= 3") {}
};

// The T(2,n) model, n odd >= 3, genus g = (n-1)/2. Orbit alphabet: h- (A=1),
// e2 (A=2), e+ (A=1), h+ (A=1); h's positive hyperbolic. Orbits of Alexander
// grading beyond the diagonal region A <= 2g are truncated away.
struct TorusKnotModel {
  int n;
  int g;
  explicit TorusKnotModel(int n_);
};

Orbit orbit_e2();
Orbit orbit_hminus();
Orbit orbit_eplus();
Orbit orbit_hplus();

// Generator of the zeroth column at Alexander grading a: e2^{a/2} for even a,
// h- e2^{(a-1)/2} for odd a.
OrbitSet zeroth_column_generator(int a);
// e+^i times the zeroth-column generator at grading a.
OrbitSet full_generator(int i, int a);

// Generators 1, h-, e2, h-e2, ..., e2^g at gradings 0..2g with
// d(e2^i) = h- e2^{i-1}.
ChainComplex zeroth_column(int n);

// e+^i tensor the zeroth column, 0 <= i <= imax, with
// d(e+^i Γ) = e+^{i-1} h- Γ + e+^i dΓ (terms leaving the model vanish).
// Gradings: eplus = i, alexander = i + A(Γ).
ChainComplex full_complex(int n, int imax);

// imax defaults to n (enough for every surgery computation with framing n).
ChainComplex full_complex(int n);

// grading -> (rank, generator string); rank 1 in gradings 0..2g, absent above.
std::map<int, std::pair<int, std::string>> eck_hat(int n);

}  // namespace eck
