#include "eck/orbits.hpp"

namespace eck {

bool is_hyperbolic(OrbitKind k) { return k != OrbitKind::Elliptic; }

OrbitSet OrbitSet::make_zero() {
  OrbitSet g;
  g.zero = true;
  return g;
}

OrbitSet OrbitSet::empty() { return OrbitSet{}; }

OrbitSet OrbitSet::single(const Orbit& o, int mult) {
  OrbitSet g;
  if (mult < 0 || (is_hyperbolic(o.kind) && mult > 1)) return make_zero();
  if (mult > 0) g.factors[o.name] = {o, mult};
  return g;
}

int OrbitSet::multiplicity(const std::string& name) const {
  auto it = factors.find(name);
  return it == factors.end() ? 0 : it->second.second;
}

bool operator==(const OrbitSet& a, const OrbitSet& b) {
  if (a.zero || b.zero) return a.zero == b.zero;
  if (a.factors.size() != b.factors.size()) return false;
  for (auto it = a.factors.begin(), jt = b.factors.begin();
       it != a.factors.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second.second != jt->second.second)
      return false;
  }
  return true;
}

OrbitSet multiply(const OrbitSet& a, const OrbitSet& b) {
  if (a.zero || b.zero) return OrbitSet::make_zero();
  OrbitSet g = a;
  for (auto& [name, ob] : b.factors) {
    auto it = g.factors.find(name);
    if (it == g.factors.end()) {
      g.factors[name] = ob;
    } else {
      it->second.second += ob.second;
      if (is_hyperbolic(it->second.first.kind) && it->second.second > 1)
        return OrbitSet::make_zero();
    }
  }
  return g;
}

OrbitSet divide(const OrbitSet& a, const OrbitSet& b) {
  if (a.zero || b.zero) return OrbitSet::make_zero();
  OrbitSet g = a;
  for (auto& [name, ob] : b.factors) {
    auto it = g.factors.find(name);
    if (it == g.factors.end() || it->second.second < ob.second)
      return OrbitSet::make_zero();
    it->second.second -= ob.second;
    if (it->second.second == 0) g.factors.erase(it);
  }
  return g;
}

int alexander(const OrbitSet& g) {
  int a = 0;
  for (auto& [name, ob] : g.factors)
    a += ob.second * ob.first.alexander_weight;
  return a;
}

int longitude_winding(const OrbitSet& g) {
  int p = 0;
  for (auto& [name, ob] : g.factors)
    p += ob.second * ob.first.longitude_winding;
  return p;
}

int hyperbolic_count(const OrbitSet& g) {
  int h = 0;
  for (auto& [name, ob] : g.factors)
    if (is_hyperbolic(ob.first.kind)) h += ob.second;
  return h;
}

int lefschetz(const OrbitSet& g) {
  // eps = -1 exactly for positive hyperbolic factors, counted with
  // multiplicity (which is 1 for hyperbolic orbits anyway).
  int eps = 1;
  for (auto& [name, ob] : g.factors)
    if (ob.first.kind == OrbitKind::PositiveHyperbolic && (ob.second % 2))
      eps = -eps;
  return eps;
}

int z2(const OrbitSet& g) { return lefschetz(g) == 1 ? 0 : 1; }

AdmissibleReport admissible(const OrbitSet& source, const OrbitSet& target,
                            const AdmissibilityRules& rules) {
  AdmissibleReport rep;
  if (rules.require_parity_flip && z2(source) == z2(target))
    rep.violations.push_back("parity: source and target have equal z2 grading");
  if (rules.require_alexander_nonincreasing &&
      alexander(target) > alexander(source))
    rep.violations.push_back("alexander: grading increases along differential");
  if (rules.require_longitude_nondecreasing &&
      longitude_winding(target) < longitude_winding(source))
    rep.violations.push_back(
        "longitude: twist filtration moves against descending direction");
  for (std::size_t i = 0; i < rules.extra_values.size(); ++i) {
    auto [sv, tv] = rules.extra_values[i];
    if (tv > sv)
      rep.violations.push_back("extra grading " +
                               (i < rules.extra_names.size()
                                    ? rules.extra_names[i]
                                    : std::to_string(i)) +
                               " increases along differential");
  }
  rep.ok = rep.violations.empty();
  return rep;
}

std::string to_string(const OrbitSet& g) {
  if (g.zero) return "0";
  if (g.factors.empty()) return "1";
  std::string s;
  for (auto& [name, ob] : g.factors) {
    if (!s.empty()) s += "·";
    s += name;
    if (ob.second > 1) s += "^" + std::to_string(ob.second);
  }
  return s;
}

}  // namespace eck
