#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eck/chaincx.hpp"

namespace eck {

// Rational slope p/q in lowest terms with q >= 1.
struct SlopeQ {
  long long p = 0;
  long long q = 1;
};

SlopeQ make_slope(long long p, long long q);
int cmp(const SlopeQ& a, const SlopeQ& b);  // sign of a - b
bool operator==(const SlopeQ& a, const SlopeQ& b);
bool operator<(const SlopeQ& a, const SlopeQ& b);
std::string to_string(const SlopeQ& s);

// Interval endpoint "slope + eps*infinitesimal": eps = -1 places the endpoint
// just below the rational slope, +1 just above, 0 exactly on it (attained
// endpoints are excluded by the open-interval membership rule below).
struct IntervalEnd {
  SlopeQ slope;
  int eps = 0;
};

struct SlopeInterval {
  IntervalEnd lo, hi;
  // s is a member iff s > lo and s < hi in the infinitesimal order; a slope
  // equal to an endpoint's rational part is included only when the
  // infinitesimal pushes the endpoint past it.
  bool contains(const SlopeQ& s) const;
};

// The twist-region interval (-eps, 1/n + eps).
SlopeInterval twist_interval(int n);

// One canonical path entry: an e-run of multiplicity mult, or a single h
// (mult = 1). Within a PathMonomial entries are sorted by slope, at most one e
// and one h per slope, e before h.
struct PathEntry {
  SlopeQ slope;
  bool hyperbolic = false;
  int mult = 1;
};

struct PathMonomial {
  std::vector<PathEntry> entries;
};

bool operator==(const PathMonomial& a, const PathMonomial& b);
bool operator<(const PathMonomial& a, const PathMonomial& b);

// Rebuilds canonical form from an arbitrary entry list (merging e-runs of
// equal slope); throws if some slope would carry h-multiplicity > 1.
PathMonomial canonicalize(std::vector<PathEntry> entries);

// Orbit-set serialization: names e_{p/q} / h_{p/q}, sorted, "^mult", "·".
std::string to_string(const PathMonomial& g);

// Lattice path w_0 = (0,0), w_j = w_{j-1} + mult*(q, p); one point per entry.
std::vector<std::pair<long long, long long>> path_points(const PathMonomial& g);
std::pair<long long, long long> endpoint(const PathMonomial& g);
int hyperbolic_count(const PathMonomial& g);

// All orbit sets over {e_{p/q}, h_{p/q} : p/q in iv, q <= Q} with total
// homology class (Q, P); deterministic order. Q = 0 yields {empty} when P = 0.
std::vector<PathMonomial> enumerate_generators(const SlopeInterval& iv,
                                               long long P, long long Q);

struct NoCorner : std::invalid_argument {
  explicit NoCorner(const std::string& what) : std::invalid_argument(what) {}
};
struct NoAdjacentH : std::invalid_argument {
  explicit NoAdjacentH(const std::string& what)
      : std::invalid_argument(what) {}
};
// round_corner only: the non-chosen run carries an h whose slope disappears
// from the rounded region, so there is no canonical spot for it. The complex
// differential enumerates label placements instead and never hits this.
struct RoundingAmbiguous : std::runtime_error {
  explicit RoundingAmbiguous(const std::string& what)
      : std::runtime_error(what) {}
};

enum class HSide { Left, Right };

// Maximal straight run of the path: consecutive entries of one slope.
struct PathRun {
  SlopeQ slope;
  int emult = 0;  // multiplicity of the e-entry (0 if none)
  bool h = false;
};
std::vector<PathRun> runs(const PathMonomial& g);

// Corner corner_index sits between runs corner_index and corner_index + 1.
// The two adjacent runs are replaced by the lattice convex-hull path over the
// closed triangle minus the corner peg; new edges are labeled e, the chosen h
// is consumed, entries outside the region keep their labels.
PathMonomial round_corner(const PathMonomial& g, int corner_index,
                          HSide h_side);

// Region edges (slope, multiplicity) of the rounded path at the given corner.
std::vector<std::pair<SlopeQ, int>> rounded_region_edges(const PathMonomial& g,
                                                         int corner_index);

// The PFH complex on enumerate_generators(iv, P, Q). The dual differential is
// given by corner rounding: d maps the rounded monomial to the cornered one.
// d^2 = 0 is asserted; a failure flags a rounding-rule gap and must surface.
ChainComplex pfc_complex(const SlopeInterval& iv, long long P, long long Q);

struct ClosedFormGenerators {
  bool nonempty = false;
  PathMonomial E;                // the all-elliptic maximal convex path
  std::vector<PathMonomial> H;  // one h placed at each distinct slope of E
};

ClosedFormGenerators closed_form_generators(const SlopeInterval& iv,
                                            long long P, long long Q);

// PFC^{(h+)}(S^1 x [1,2], phi; j_T, p): generators h+^delta tensor Gamma with
// Gamma in enumerate(twist_interval(n); p - delta, j_T - delta*n), and
// d(h+^delta Gamma) = h+^delta d(Gamma) + delta * e_{1/n} Gamma.
ChainComplex augmented_complex(int n, int j_T, int p);

// C_{1/k} for k in {n, n+1}: the twist-region complexes, realized as
// augmented_complex(n, k, 1).
ChainComplex twist_region_complex(int n, int k);

}  // namespace eck
