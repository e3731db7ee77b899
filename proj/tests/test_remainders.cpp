#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chrev/remainders.hpp"
#include "oracle.hpp"

using namespace chrev;

namespace {

Formula F(const std::string& s) { return parse_formula(s); }

BeliefBase random_base(std::mt19937_64& rng, const std::vector<Formula>& pool,
                       std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> sz(0, max_size);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<Formula> fs;
  std::size_t n = sz(rng);
  for (std::size_t i = 0; i < n; ++i) fs.push_back(pool[pick(rng)]);
  return BeliefBase(std::move(fs));
}

std::vector<Formula> small_pool() {
  std::vector<Formula> pool;
  for (const char* t :
       {"p", "q", "r", "~p", "~q", "~r", "p & q", "p -> q", "q -> ~p", "p | r",
        "p & ~p", "true", "false"})
    pool.push_back(F(t));
  return pool;
}

}  // namespace

TEST_CASE("package remainders: worked examples") {
  // frozen from the subset-enumeration oracle
  BeliefBase k{F("p"), F("p -> q"), F("q")};
  BeliefBase a{F("q")};
  auto expected = oracle::package_remainders(k, a);
  REQUIRE(expected ==
          std::vector<BeliefBase>{BeliefBase{F("p")}, BeliefBase{F("p -> q")}});
  SubsetFamily fam = package_remainders(k, a);
  CHECK(fam.members == expected);
  CHECK(fam.anchor == k);
  CHECK(fam.kind == FamilyKind::Package);

  CHECK(package_remainders(k, BeliefBase{F("true")}).empty());
  CHECK(package_remainders(k, BeliefBase{}).members ==
        std::vector<BeliefBase>{k});
}

TEST_CASE("choice remainders: worked examples") {
  CHECK(choice_remainders(BeliefBase{F("p"), F("q")}, BeliefBase{}).empty());

  BeliefBase k{F("p"), F("q")};
  BeliefBase a{F("p"), F("q")};
  auto expected = oracle::choice_remainders(k, a);
  REQUIRE(expected ==
          std::vector<BeliefBase>{BeliefBase{F("p")}, BeliefBase{F("q")}});
  CHECK(choice_remainders(k, a).members == expected);

  // the two-atom retraction example: K = {p, ~q, ~r}, input n({q, r})
  BeliefBase k2{F("p"), F("~q"), F("~r")};
  BeliefBase nqr = negation_set(BeliefBase{F("q"), F("r")}).clauses;
  std::vector<BeliefBase> want{BeliefBase{F("p"), F("~q")},
                               BeliefBase{F("p"), F("~r")}};
  CHECK(choice_remainders(k2, nqr).members == want);
  CHECK(choice_remainders_vs_negation(k2, BeliefBase{F("q"), F("r")}).members ==
        want);
}

TEST_CASE("partial sums") {
  CHECK(partial_sums(BeliefBase{}, BeliefBase{F("p")}).members ==
        std::vector<BeliefBase>{BeliefBase{F("p")}});
  CHECK(partial_sums(BeliefBase{F("p")}, BeliefBase{F("p")}).members ==
        std::vector<BeliefBase>{BeliefBase{F("p")}});
  BeliefBase k{F("k")};
  SubsetFamily fam = partial_sums(k, BeliefBase{F("a"), F("b")});
  std::vector<BeliefBase> want{BeliefBase{F("a"), F("b"), F("k")},
                               BeliefBase{F("a"), F("k")},
                               BeliefBase{F("b"), F("k")}};
  std::sort(want.begin(), want.end());
  CHECK(fam.members == want);
  CHECK(partial_sums(k, BeliefBase{}).empty());
}

TEST_CASE("partial sums: member count law") {
  std::mt19937_64 rng(23);
  auto pool = small_pool();
  for (int i = 0; i < 100; ++i) {
    BeliefBase k = random_base(rng, pool, 4);
    BeliefBase a = random_base(rng, pool, 3);
    SubsetFamily fam = partial_sums(k, a);
    std::size_t fresh = a.difference(k).size();
    std::size_t expect = k.intersected(a).empty()
                             ? (std::size_t{1} << fresh) - 1
                             : (std::size_t{1} << fresh);
    CHECK(fam.size() == expect);
    for (const auto& m : fam.members) {
      CHECK(k.subset_of(m));
      CHECK(m.subset_of(k.unioned(a)));
      CHECK(!m.intersected(a).empty());
    }
  }
}

TEST_CASE("negation sets") {
  NegationSet n0 = negation_set(BeliefBase{});
  CHECK(n0.clauses == BeliefBase{F("true")});

  NegationSet n1 = negation_set(BeliefBase{F("p")});
  CHECK(n1.clauses == BeliefBase{F("~p")});

  NegationSet n2 = negation_set(BeliefBase{F("p"), F("q")});
  CHECK(n2.clauses == BeliefBase{F("~p"), F("~q"), F("~p | ~q")});

  NegationSet n3 = negation_set(BeliefBase{F("p"), F("q"), F("r")});
  CHECK(n3.clauses.size() == 7);

  Caps tight;
  tight.negation_cap = 2;
  CHECK_THROWS_AS(negation_set(BeliefBase{F("p"), F("q"), F("r")}, tight),
                  CapacityError);
}

TEST_CASE("negation shortcut equals the explicit clause route") {
  std::mt19937_64 rng(29);
  auto pool = small_pool();
  for (int i = 0; i < 150; ++i) {
    BeliefBase k = random_base(rng, pool, 4);
    BeliefBase a = random_base(rng, pool, 3);
    BeliefBase clauses = negation_set(a).clauses;
    CHECK(choice_remainders_vs_negation(k, a).members ==
          choice_remainders(k, clauses).members);
    CHECK(package_remainders_vs_negation(k, a).members ==
          package_remainders(k, clauses).members);
  }
}

TEST_CASE("remainders agree with the brute-force oracle") {
  std::mt19937_64 rng(31);
  auto pool = small_pool();
  for (int i = 0; i < 120; ++i) {
    BeliefBase k = random_base(rng, pool, 4);
    BeliefBase a = random_base(rng, pool, 3);
    CHECK(package_remainders(k, a).members == oracle::package_remainders(k, a));
    CHECK(choice_remainders(k, a).members == oracle::choice_remainders(k, a));
  }
}

TEST_CASE("remainder maximality") {
  std::mt19937_64 rng(37);
  auto pool = small_pool();
  for (int i = 0; i < 80; ++i) {
    BeliefBase k = random_base(rng, pool, 4);
    BeliefBase a = random_base(rng, pool, 3);
    for (const auto& x : package_remainders(k, a).members) {
      CHECK_FALSE(implies_some(x, a));
      for (const auto& phi : k.difference(x))
        CHECK(implies_some(x.with(phi), a));
    }
    for (const auto& x : choice_remainders(k, a).members) {
      CHECK_FALSE(implies_all(x, a));
      for (const auto& phi : k.difference(x))
        CHECK(implies_all(x.with(phi), a));
    }
  }
}

TEST_CASE("negation-set remainder shortcuts: worked examples") {
  // maximal subsets compatible with at least one input sentence
  CHECK(choice_remainders_vs_negation(BeliefBase{F("p")}, BeliefBase{F("p")})
            .members == std::vector<BeliefBase>{BeliefBase{F("p")}});
  CHECK(choice_remainders_vs_negation(BeliefBase{F("q")}, BeliefBase{F("~q")})
            .members == std::vector<BeliefBase>{BeliefBase{}});

  // maximal subsets jointly consistent with the whole new part
  BeliefBase k{F("q"), F("p"), F("p -> ~q")};
  BeliefBase aprime{F("p"), F("p -> ~q")};
  CHECK(package_remainders_vs_negation(k, aprime).members ==
        std::vector<BeliefBase>{BeliefBase{F("p"), F("p -> ~q")}});
  CHECK(package_remainders_vs_negation(BeliefBase{}, BeliefBase{F("p")}).members ==
        std::vector<BeliefBase>{BeliefBase{}});
  CHECK(package_remainders_vs_negation(BeliefBase{F("~p")},
                                       BeliefBase{F("p"), F("q")})
            .members == std::vector<BeliefBase>{BeliefBase{}});
}

TEST_CASE("upper bound witness") {
  BeliefBase k{F("p"), F("q")};
  CHECK(upper_bound_witness(k, BeliefBase{}, BeliefBase{F("p & q")},
                            FamilyKind::Package) == BeliefBase{F("p")});

  // a non-implying K' that is already all of K comes back unchanged
  BeliefBase k2{F("p"), F("q")};
  CHECK(upper_bound_witness(k2, k2, BeliefBase{F("r")}, FamilyKind::Package) == k2);

  BeliefBase k3{F("p1"), F("p1 & p2")};
  CHECK(upper_bound_witness(k3, BeliefBase{F("p1")},
                            BeliefBase{F("p1"), F("p2")},
                            FamilyKind::Choice) == BeliefBase{F("p1")});

  CHECK_THROWS_AS(upper_bound_witness(k, BeliefBase{F("r")}, BeliefBase{F("p")},
                                      FamilyKind::Package),
                  std::invalid_argument);
  CHECK_THROWS_AS(upper_bound_witness(k, BeliefBase{F("p")}, BeliefBase{F("p")},
                                      FamilyKind::Package),
                  std::invalid_argument);
  CHECK_THROWS_AS(upper_bound_witness(k, BeliefBase{}, BeliefBase{F("p")},
                                      FamilyKind::PartialSum),
                  std::invalid_argument);
}

TEST_CASE("upper bound property over a corpus") {
  std::mt19937_64 rng(41);
  auto pool = small_pool();
  for (int i = 0; i < 60; ++i) {
    BeliefBase k = random_base(rng, pool, 4);
    BeliefBase a = random_base(rng, pool, 2);
    SubsetFamily pkg = package_remainders(k, a);
    SubsetFamily cho = choice_remainders(k, a);
    for (const auto& kp : oracle::subsets(k)) {
      if (!oracle::implies_some(kp, a)) {
        BeliefBase w = upper_bound_witness(k, kp, a, FamilyKind::Package);
        CHECK(kp.subset_of(w));
        CHECK(pkg.contains(w));
      }
      if (!a.empty() && !oracle::implies_all(kp, a)) {
        BeliefBase w = upper_bound_witness(k, kp, a, FamilyKind::Choice);
        CHECK(kp.subset_of(w));
        CHECK(cho.contains(w));
      }
    }
  }
}

TEST_CASE("partial sums equal to a remainder family only when singleton") {
  std::mt19937_64 rng(43);
  auto pool = small_pool();
  std::vector<std::pair<BeliefBase, BeliefBase>> cases;
  for (int i = 0; i < 25; ++i)
    cases.emplace_back(random_base(rng, pool, 3), random_base(rng, pool, 2));
  for (const auto& [k1, a1] : cases) {
    SubsetFamily f = partial_sums(k1, a1);
    if (f.empty()) continue;
    for (const auto& [k2, a2] : cases) {
      if (f.same_members(package_remainders(k2, a2)) ||
          f.same_members(choice_remainders(k2, a2)))
        CHECK(f.size() == 1);
    }
  }
}

TEST_CASE("enumeration cap") {
  std::vector<Formula> many;
  for (int i = 0; i < 6; ++i) many.push_back(F("p" + std::to_string(i)));
  Caps tight;
  tight.enum_cap = 4;
  CHECK_THROWS_AS(package_remainders(BeliefBase(many), BeliefBase{F("p0")}, tight),
                  CapacityError);
  Caps tight2;
  tight2.partial_cap = 3;
  CHECK_THROWS_AS(
      partial_sums(BeliefBase{}, BeliefBase(std::vector<Formula>(
                                     many.begin(), many.begin() + 5)),
                   tight2),
      CapacityError);
}
