#pragma once

#include <map>
#include <string>
#include <vector>

namespace eck {

// All boundary h's (h+, h-, h_{p/q}, h_{0/1}) are positive hyperbolic: the
// Morse-Bott perturbation of a boundary torus yields one elliptic and one
// positive hyperbolic orbit, and the Lefschetz factor (1-t^a) requires eps=-1.
enum class OrbitKind { Elliptic, PositiveHyperbolic, NegativeHyperbolic };

struct Orbit {
  std::string name;  // opaque symbol, e.g. "e2", "h-", "e_{1/5}"
  OrbitKind kind = OrbitKind::Elliptic;
  int alexander_weight = 0;   // >= 0
  int longitude_winding = 0;  // the -[l]-coefficient p (twist filtration level)
};

bool is_hyperbolic(OrbitKind k);

// Monomial of orbits with multiplicities; hyperbolic orbits have multiplicity
// exactly 1. Carries a distinguished zero value (an invalid monomial is 0, not
// an error).
struct OrbitSet {
  bool zero = false;
  // name -> (orbit, multiplicity >= 1)
  std::map<std::string, std::pair<Orbit, int>> factors;

  static OrbitSet make_zero();
  static OrbitSet empty();  // the generator "1"
  static OrbitSet single(const Orbit& o, int mult = 1);

  bool is_zero() const { return zero; }
  bool is_empty() const { return !zero && factors.empty(); }
  int multiplicity(const std::string& name) const;
};

bool operator==(const OrbitSet& a, const OrbitSet& b);

OrbitSet multiply(const OrbitSet& a, const OrbitSet& b);
OrbitSet divide(const OrbitSet& a, const OrbitSet& b);

int alexander(const OrbitSet& g);          // weighted sum of alexander weights
int longitude_winding(const OrbitSet& g);  // weighted sum of windings
int hyperbolic_count(const OrbitSet& g);
int lefschetz(const OrbitSet& g);  // +1 or -1
int z2(const OrbitSet& g);         // 0 iff lefschetz = +1

struct AdmissibleReport {
  bool ok = true;
  std::vector<std::string> violations;
};

struct AdmissibilityRules {
  bool require_parity_flip = true;
  bool require_alexander_nonincreasing = true;
  // Twist filtration is descending: along a differential the longitude winding
  // of the target is >= that of the source.
  bool require_longitude_nondecreasing = true;
  // Extra gradings evaluated by the caller: (name, source value, target value),
  // required nonincreasing.
  std::vector<std::string> extra_names;
  std::vector<std::pair<int, int>> extra_values;
};

AdmissibleReport admissible(const OrbitSet& source, const OrbitSet& target,
                            const AdmissibilityRules& rules = {});

// Sorted "name^mult" factors joined by "·"; the empty set prints as "1".
std::string to_string(const OrbitSet& g);

}  // namespace eck
