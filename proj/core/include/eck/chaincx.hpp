#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "eck/f2linalg.hpp"

namespace eck {

struct Generator {
  std::string id;
  int alexander = 0;  // Alexander grading, >= 0
  int eplus = 0;      // e+ multiplicity grading, >= 0
  int z2 = 0;         // Z/2 homological grading
  std::map<std::string, int> extra;  // named auxiliary gradings/filtrations
};

// Finite chain complex over F2: ordered generator list plus a sparse
// differential. d(id) is the F2-formal sum of the ids in differential[id].
struct ChainComplex {
  std::vector<Generator> generators;
  std::map<std::string, std::set<std::string>> differential;

  bool has_generator(const std::string& id) const;
  int index_of(const std::string& id) const;  // -1 if absent
  const Generator& generator(const std::string& id) const;
  std::set<std::string> d(const std::string& id) const;
  void add_generator(Generator g);
  void add_entry(const std::string& from, const std::string& to);  // toggles

  // The differential as a BitMatrix (rows = cols = generator order).
  BitMatrix matrix() const;
};

struct GradingNotPreserved : std::runtime_error {
  explicit GradingNotPreserved(const std::string& what)
      : std::runtime_error(what) {}
};
struct NotClosed : std::runtime_error {
  explicit NotClosed(const std::string& what) : std::runtime_error(what) {}
};
struct NotChainMap : std::runtime_error {
  explicit NotChainMap(const std::string& what) : std::runtime_error(what) {}
};
struct NotCancellable : std::runtime_error {
  explicit NotCancellable(const std::string& what)
      : std::runtime_error(what) {}
};

// Built-in grading names "alexander", "eplus", "z2"; anything else is looked
// up in Generator::extra.
int grading_value(const Generator& g, const std::string& grading);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks d^2 = 0, z2 parity flip on every entry, and monotonicity of the
// alexander and eplus filtrations. Report-style: never throws.
ValidationReport validate(const ChainComplex& c);

struct HomologyGroup {
  int rank = 0;
  // Cycles (as id-sets) whose classes form a basis; deterministic.
  std::vector<std::set<std::string>> representatives;
};

HomologyGroup homology(const ChainComplex& c);
// Per-grading homology; throws GradingNotPreserved if some differential entry
// changes the grading.
std::map<int, HomologyGroup> homology_by(const ChainComplex& c,
                                         const std::string& grading);

ChainComplex subcomplex(const ChainComplex& c,
                        const std::function<bool(const Generator&)>& keep);

struct FiltrationSpec {
  enum class Direction { Ascending, Descending };
  std::string name;
  std::map<std::string, int> value;
  Direction direction = Direction::Descending;

  int at(const std::string& id) const;
};

FiltrationSpec filtration_from_grading(const ChainComplex& c,
                                       const std::string& grading,
                                       FiltrationSpec::Direction dir);

// Drops differential entries that strictly change the filtration value.
ChainComplex associated_graded(const ChainComplex& c, const FiltrationSpec& f);

struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  std::map<std::string, std::set<std::string>> action;

  std::set<std::string> apply(const std::string& id) const;
};

bool is_chain_map(const ChainMap& f, std::string* why = nullptr);

// Source-copy ids are prefixed "S:", target-copy ids "T:"; the z2 grading of
// the source copy is flipped.
ChainComplex mapping_cone(const ChainMap& f);

// Cancels the pair (a, b) with <d(a), b> = 1:
//   d'(x) = d(x) + <d(x), b> (d(a) + b), then project off a and b.
ChainComplex gaussian_cancel(const ChainComplex& c, const std::string& a,
                             const std::string& b);

// Page r of the spectral sequence of a filtered complex: ranks indexed by
// (filtration level, z2 grading).
using SpectralPage = std::map<std::pair<int, int>, int>;

// pages[0] = associated-graded generator counts; pages[r] = counts after
// cancelling every differential pair of filtration drop < r (minimal drop
// first, deterministic order). Length r_max + 1.
std::vector<SpectralPage> spectral_sequence(const ChainComplex& c,
                                            const FiltrationSpec& f,
                                            int r_max);

// JSON interchange; insertion order follows the generator list and round-trips
// bit-exactly.
std::string to_json(const ChainComplex& c);
ChainComplex complex_from_json(const std::string& text);

}  // namespace eck
