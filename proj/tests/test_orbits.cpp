#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eck/orbits.hpp"

using namespace eck;

namespace {

Orbit elliptic(const std::string& name, int a, int winding = 0) {
  return Orbit{name, OrbitKind::Elliptic, a, winding};
}
Orbit pos_hyp(const std::string& name, int a, int winding = 0) {
  return Orbit{name, OrbitKind::PositiveHyperbolic, a, winding};
}
Orbit neg_hyp(const std::string& name, int a, int winding = 0) {
  return Orbit{name, OrbitKind::NegativeHyperbolic, a, winding};
}

}  // namespace

TEST_CASE("empty and zero") {
  OrbitSet one = OrbitSet::empty();
  CHECK(one.is_empty());
  CHECK_FALSE(one.is_zero());
  CHECK(to_string(one) == "1");
  OrbitSet z = OrbitSet::make_zero();
  CHECK(z.is_zero());
  CHECK(to_string(z) == "0");
  CHECK(alexander(one) == 0);
  CHECK(z2(one) == 0);
  CHECK(lefschetz(one) == 1);
}

TEST_CASE("multiplication merges multiplicities") {
  Orbit e = elliptic("e2", 2);
  OrbitSet a = OrbitSet::single(e, 2);
  OrbitSet b = OrbitSet::single(e, 3);
  OrbitSet p = multiply(a, b);
  CHECK(p.multiplicity("e2") == 5);
  CHECK(alexander(p) == 10);
  CHECK(to_string(p) == "e2^5");
}

TEST_CASE("hyperbolic orbits square to zero") {
  Orbit h = pos_hyp("h-", 1);
  OrbitSet a = OrbitSet::single(h);
  OrbitSet sq = multiply(a, a);
  CHECK(sq.is_zero());
  // And zero is absorbing.
  CHECK(multiply(sq, OrbitSet::single(elliptic("e2", 2))).is_zero());
}

TEST_CASE("divide undoes multiply and flags non-divisibility") {
  OrbitSet a = multiply(OrbitSet::single(elliptic("e2", 2), 3),
                        OrbitSet::single(pos_hyp("h-", 1)));
  OrbitSet b = OrbitSet::single(elliptic("e2", 2), 1);
  OrbitSet q = divide(a, b);
  CHECK(q.multiplicity("e2") == 2);
  CHECK(q.multiplicity("h-") == 1);
  CHECK(multiply(q, b) == a);
  // Dividing by something absent gives zero.
  CHECK(divide(b, OrbitSet::single(pos_hyp("h-", 1))).is_zero());
  // Dividing by too high a multiplicity gives zero.
  CHECK(divide(b, OrbitSet::single(elliptic("e2", 2), 2)).is_zero());
}

TEST_CASE("multiplication is commutative and associative") {
  OrbitSet xs[3] = {
      OrbitSet::single(elliptic("e2", 2), 2),
      OrbitSet::single(pos_hyp("h-", 1)),
      multiply(OrbitSet::single(elliptic("e+", 1), 3),
               OrbitSet::single(neg_hyp("k", 4))),
  };
  for (const auto& a : xs)
    for (const auto& b : xs) {
      CHECK(multiply(a, b) == multiply(b, a));
      for (const auto& c : xs)
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("gradings and Lefschetz sign") {
  OrbitSet g = multiply(
      multiply(OrbitSet::single(elliptic("e2", 2, 0), 2),
               OrbitSet::single(pos_hyp("h_{1/5}", 1, 1))),
      OrbitSet::single(neg_hyp("k", 3, 2)));
  CHECK(alexander(g) == 2 * 2 + 1 + 3);
  CHECK(longitude_winding(g) == 0 + 1 + 2);
  CHECK(hyperbolic_count(g) == 2);
  // One positive hyperbolic with odd multiplicity contributes eps = -1; the
  // negative hyperbolic contributes +1.
  CHECK(lefschetz(g) == -1);
  CHECK(z2(g) == 1);

  OrbitSet two_h = multiply(OrbitSet::single(pos_hyp("a", 1)),
                            OrbitSet::single(pos_hyp("b", 1)));
  CHECK(lefschetz(two_h) == 1);
  CHECK(z2(two_h) == 0);

  // Elliptic orbits never contribute a sign.
  CHECK(lefschetz(OrbitSet::single(elliptic("e", 5), 7)) == 1);
  // Negative hyperbolic orbits have eps = +1 but still flip nothing.
  CHECK(lefschetz(OrbitSet::single(neg_hyp("k", 1))) == 1);
}

TEST_CASE("to_string sorts factors") {
  OrbitSet g = multiply(
      multiply(OrbitSet::single(pos_hyp("h-", 1)),
               OrbitSet::single(elliptic("e2", 2, 0), 2)),
      OrbitSet::single(elliptic("e+", 1), 1));
  CHECK(to_string(g) == "e+·e2^2·h-");
}

TEST_CASE("admissible differential pairs") {
  OrbitSet src = multiply(OrbitSet::single(elliptic("e2", 2), 1),
                          OrbitSet::single(elliptic("e+", 1), 1));
  OrbitSet tgt = multiply(OrbitSet::single(pos_hyp("h-", 1)),
                          OrbitSet::single(elliptic("e+", 1), 1));
  // e+ e2 -> e+ h-: parity flips, alexander drops by 1.
  auto rep = admissible(src, tgt, {});
  CHECK(rep.ok);
  CHECK(rep.violations.empty());

  // Same parity: rejected.
  auto bad = admissible(src, OrbitSet::single(elliptic("e2", 2), 1), {});
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.violations.empty());

  // Alexander grading increasing: rejected.
  auto up = admissible(OrbitSet::single(pos_hyp("h-", 1)),
                       multiply(OrbitSet::single(elliptic("e2", 2), 2),
                                OrbitSet::empty()),
                       {});
  CHECK_FALSE(up.ok);

  // Longitude winding must not decrease along the differential.
  OrbitSet hi = OrbitSet::single(elliptic("w", 1, 2));
  OrbitSet lo = OrbitSet::single(pos_hyp("v", 1, 1));
  CHECK_FALSE(admissible(hi, lo, {}).ok);
  CHECK(admissible(lo, hi, {}).ok);

  // Extra caller-supplied gradings, required nonincreasing.
  AdmissibilityRules rules;
  rules.extra_names = {"j"};
  rules.extra_values = {{1, 2}};
  CHECK_FALSE(admissible(src, tgt, rules).ok);
  rules.extra_values = {{2, 1}};
  CHECK(admissible(src, tgt, rules).ok);
}

TEST_CASE("z2 equals hyperbolic count mod 2") {
  OrbitSet sets[] = {
      OrbitSet::empty(),
      OrbitSet::single(pos_hyp("a", 1)),
      multiply(OrbitSet::single(pos_hyp("a", 1)),
               OrbitSet::single(pos_hyp("b", 2))),
      multiply(OrbitSet::single(elliptic("e", 1), 4),
               OrbitSet::single(pos_hyp("c", 3))),
  };
  for (const auto& s : sets) CHECK(z2(s) == hyperbolic_count(s) % 2);
}
