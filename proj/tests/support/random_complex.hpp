// Deterministic random valid chain complexes for property tests: a canonical
// matching differential (disjoint a -> b pairs) conjugated by random
// parity- and filtration-compatible transvections. Conjugation preserves
// d^2 = 0, the z2 parity of entries, and filtration monotonicity.
#pragma once

#include <random>
#include <vector>

#include "eck/chaincx.hpp"

namespace ecktest {

struct RandomComplexOptions {
  int max_generators = 20;
  int max_level = 4;       // filtration levels 0..max_level (constant if 0)
  int transvections = 40;  // basis-change count
};

// The generated complex stores the filtration level in extra["f"]; the
// differential never increases it (descending convention).
inline eck::ChainComplex random_complex(std::mt19937& rng,
                                        const RandomComplexOptions& opt) {
  int n = std::uniform_int_distribution<int>(0, opt.max_generators)(rng);
  std::vector<int> z2(n), level(n);
  for (int i = 0; i < n; ++i) {
    z2[i] = std::uniform_int_distribution<int>(0, 1)(rng);
    level[i] = std::uniform_int_distribution<int>(0, opt.max_level)(rng);
  }
  // Dense differential matrix d[target][source] over F2.
  std::vector<std::vector<int>> d(n, std::vector<int>(n, 0));
  // Canonical matching: pair up a random subset, d(src) = tgt with
  // z2 flip and level drop.
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  int pairs = n < 2 ? 0 : std::uniform_int_distribution<int>(0, n / 2)(rng);
  for (int k = 0; k < pairs; ++k) {
    int src = idx[2 * k], tgt = idx[2 * k + 1];
    z2[tgt] = 1 - z2[src];
    if (level[tgt] > level[src]) std::swap(level[src], level[tgt]);
    d[tgt][src] = 1;
  }
  // Random transvections b_i <- b_i + b_j with equal z2 and
  // level(i) <= level(j); conjugate: D <- T D T with T = I + e_{ij}.
  for (int t = 0; t < opt.transvections && n >= 2; ++t) {
    int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int j = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (i == j || z2[i] != z2[j] || level[i] > level[j]) continue;
    // Row i += row j, then column j += column i.
    for (int c = 0; c < n; ++c) d[i][c] ^= d[j][c];
    for (int r = 0; r < n; ++r) d[r][j] ^= d[r][i];
  }
  eck::ChainComplex c;
  for (int i = 0; i < n; ++i) {
    eck::Generator g;
    g.id = "g" + std::to_string(i);
    g.z2 = z2[i];
    g.extra["f"] = level[i];
    c.add_generator(std::move(g));
  }
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      if (d[r][s]) c.differential["g" + std::to_string(s)].insert(
          "g" + std::to_string(r));
  return c;
}

}  // namespace ecktest
