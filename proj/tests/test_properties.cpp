#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eck/chaincx.hpp"
#include "eck/euler.hpp"
#include "support/random_complex.hpp"
#include "support/ss_brute.hpp"

using namespace eck;

namespace {

int stabilized_total(const std::vector<SpectralPage>& pages) {
  int s = 0;
  for (const auto& [key, r] : pages.back()) s += r;
  return s;
}

}  // namespace

TEST_CASE("random complexes are valid") {
  std::mt19937 rng(101);
  ecktest::RandomComplexOptions opt;
  for (int trial = 0; trial < 100; ++trial) {
    ChainComplex c = ecktest::random_complex(rng, opt);
    // The alexander/eplus gradings are all zero, so only the d^2 = 0 and
    // parity checks of validate() bite.
    CHECK(validate(c).ok());
    // The filtration never increases along d (descending convention).
    for (const auto& [src, tgts] : c.differential)
      for (const auto& t : tgts)
        CHECK(c.generator(t).extra.at("f") <= c.generator(src).extra.at("f"));
  }
}

TEST_CASE("gaussian cancellation preserves homology on random complexes") {
  std::mt19937 rng(202);
  ecktest::RandomComplexOptions opt;
  opt.max_generators = 20;
  int cancels = 0;
  for (int trial = 0; trial < 200; ++trial) {
    ChainComplex c = ecktest::random_complex(rng, opt);
    int before = homology(c).rank;
    // Pick a random differential entry and cancel it.
    std::vector<std::pair<std::string, std::string>> entries;
    for (const auto& [src, tgts] : c.differential)
      for (const auto& t : tgts) entries.emplace_back(src, t);
    if (entries.empty()) continue;
    auto [a, b] =
        entries[std::uniform_int_distribution<size_t>(0, entries.size() - 1)(
            rng)];
    ChainComplex r = gaussian_cancel(c, a, b);
    ++cancels;
    CHECK(validate(r).ok());
    CHECK(r.generators.size() == c.generators.size() - 2);
    CHECK(homology(r).rank == before);
    // chi in the filtration variable is preserved when the pair sits in one
    // level; the plain signed count is preserved always.
    long long chi_c = 0, chi_r = 0;
    for (const auto& g : c.generators) chi_c += g.z2 == 0 ? 1 : -1;
    for (const auto& g : r.generators) chi_r += g.z2 == 0 ? 1 : -1;
    CHECK(chi_c == chi_r);
    if (c.generator(a).extra.at("f") == c.generator(b).extra.at("f"))
      CHECK(graded_chi(r, "f") == graded_chi(c, "f"));
  }
  CHECK(cancels > 100);  // the corpus is not degenerate
}

TEST_CASE("iterated cancellation reduces to the homology") {
  std::mt19937 rng(303);
  ecktest::RandomComplexOptions opt;
  opt.max_generators = 16;
  for (int trial = 0; trial < 50; ++trial) {
    ChainComplex c = ecktest::random_complex(rng, opt);
    int want = homology(c).rank;
    for (;;) {
      const std::string* a = nullptr;
      const std::string* b = nullptr;
      for (const auto& [src, tgts] : c.differential) {
        if (!tgts.empty()) {
          a = &src;
          b = &*tgts.begin();
          break;
        }
      }
      if (!a) break;
      c = gaussian_cancel(c, *a, *b);
    }
    CHECK(static_cast<int>(c.generators.size()) == want);
    for (const auto& [src, tgts] : c.differential) CHECK(tgts.empty());
  }
}

TEST_CASE("spectral sequence of random filtered complexes") {
  std::mt19937 rng(404);
  ecktest::RandomComplexOptions opt;
  opt.max_generators = 16;
  for (int trial = 0; trial < 100; ++trial) {
    ChainComplex c = ecktest::random_complex(rng, opt);
    FiltrationSpec f = filtration_from_grading(
        c, "f", FiltrationSpec::Direction::Descending);
    int r_max = opt.max_level + 1;  // every drop is < r_max: stabilized
    auto pages = spectral_sequence(c, f, r_max);
    REQUIRE(static_cast<int>(pages.size()) == r_max + 1);

    // Stabilized total rank equals the total homology.
    CHECK(stabilized_total(pages) == homology(c).rank);

    // Page 0 counts the associated-graded generators.
    SpectralPage counts;
    for (const auto& g : c.generators) ++counts[{g.extra.at("f"), g.z2}];
    CHECK(pages[0] == counts);

    // Ranks never grow from page to page at any (level, parity).
    for (size_t r = 1; r < pages.size(); ++r)
      for (const auto& [key, rank1] : pages[r]) {
        auto it = pages[r - 1].find(key);
        REQUIRE(it != pages[r - 1].end());
        CHECK(rank1 <= it->second);
      }

    // Every page agrees with the classical subquotient formula.
    auto brute = ecktest::brute_force_pages(c, f, r_max);
    for (int r = 0; r <= r_max; ++r) CHECK(pages[r] == brute[r]);
  }
}

TEST_CASE("associated graded preserves chi in the filtration variable") {
  std::mt19937 rng(505);
  ecktest::RandomComplexOptions opt;
  for (int trial = 0; trial < 50; ++trial) {
    ChainComplex c = ecktest::random_complex(rng, opt);
    FiltrationSpec f = filtration_from_grading(
        c, "f", FiltrationSpec::Direction::Descending);
    ChainComplex gr = associated_graded(c, f);
    CHECK(graded_chi(gr, "f") == graded_chi(c, "f"));
    // Per-level homology rank dominates |chi| and matches its parity.
    auto blocks = homology_by(gr, "f");
    LaurentPolynomial chi = graded_chi(gr, "f");
    for (const auto& [lvl, hg] : blocks) {
      long long x = chi.at(lvl);
      CHECK(hg.rank >= (x < 0 ? -x : x));
      CHECK((hg.rank - x) % 2 == 0);
    }
  }
}
