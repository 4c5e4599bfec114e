#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "eck/chaincx.hpp"
#include "eck/torusknot.hpp"

namespace eck {

struct FramingTooSmall : std::invalid_argument {
  FramingTooSmall(int n, int g)
      : std::invalid_argument("framing magnitude " + std::to_string(n) +
                              " must exceed 2g = " + std::to_string(2 * g)) {}
};

// Large-negative surgery on T(2,m): the surgery coefficient is -n with
// n > 2g = m - 1.
struct SurgerySpec {
  int m;  // odd, >= 3
  int n;  // framing magnitude
};

// A_j: the zeroth column truncated to alexander <= j.
ChainComplex a_complex(int m, int j);

// Tower row a of the full complex: generators e+^i Gamma with i + A(Gamma) = a
// and eplus <= imax, horizontal differentials only.
ChainComplex row_complex(int m, int a, int imax);

// B_i: row A = 2g restricted to eplus < i.
ChainComplex b_complex(int m, int i);

struct SurgeryClassResult {
  int j = 0;  // residue class [j], 0 <= j < n
  // alexander grading -> homology of that piece
  std::map<int, HomologyGroup> pieces;
};

struct SurgeryResult {
  int m = 0, n = 0;
  std::map<int, SurgeryClassResult> classes;
};

// ECK-hat of the surgered manifold: for 2g <= j < n the class [j] carries
// H(A_j) at grading j; for 0 <= j < 2g it carries H(A_j) at grading j and
// H(B_{2g-j}) at grading j + n.
SurgeryResult surgery_eck_hat(const SurgerySpec& spec);

// First page of the twist-filtration spectral sequence in Alexander grading j:
// the F=0 piece is the e- tower (realized as A_j); for j >= n there is also
// the F=1 piece h_{1/n} * (e+ tower row j - n).
struct TwoTowerE1 {
  int j = 0;
  ChainComplex f0;
  bool has_f1 = false;
  ChainComplex f1;
};
TwoTowerE1 two_tower_E1(int m, int n, int j);

// Mapping cone of the quotient chain map U^{n-1}: row j-1 -> row j-n,
// e+^i Gamma -> e+^{i-n+1} Gamma (zero when i < n-1). Its homology equals the
// homology of the kernel subcomplex {eplus <= n-2} of row j-1.
struct UPowerCone {
  ChainComplex cone;
  HomologyGroup cone_homology;
  ChainComplex kernel;
  HomologyGroup kernel_homology;
};
UPowerCone u_power_cone(int m, int n, int j);  // pre: j > 2g, 1 <= n <= j

// d_{F,1} realized through the telescoped induction equation
// Phi d^(n) = U_*^{n-1} Phi_1 d^(1): the base case is the canonical rank-1
// isomorphism H(A_j) = H(row j-1) for j > 2g, and U_*^{n-1} is computed on
// explicit homology representatives.
struct DF1Result {
  int source_rank = 0;        // dim H(A_j)
  int intermediate_rank = 0;  // dim H(row j-1)
  int target_rank = 0;        // dim H(row j-n)
  int map_rank = 0;           // rank of the induced map on homology
  int kernel_rank = 0;        // source_rank - map_rank
  int cokernel_rank = 0;      // target_rank - map_rank
};
DF1Result d_F1_chain(int m, int n, int j);  // pre: j > 2g, 1 <= n <= j

// d'_N(h-^d e2^b) = h-^d e2^{b-1} (zero when b = 0), on zeroth-column ids.
// Returns whether the image is nonzero and the image id.
bool d_prime(int m, const std::string& id, std::string* image);

// Phi(Gamma) = sum_i e+^i (d'_N)^i(Gamma): the image of a zeroth-column
// generator as a set of full-complex ids.
std::set<std::string> phi_hat(int m, const std::string& id);

}  // namespace eck
