#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chrev/remainders.hpp"
#include "chrev/selection.hpp"

using namespace chrev;

namespace {

Formula F(const std::string& s) { return parse_formula(s); }

SubsetFamily family_of(std::vector<BeliefBase> members, BeliefBase anchor = {}) {
  SubsetFamily f;
  f.kind = FamilyKind::Choice;
  f.anchor = std::move(anchor);
  std::sort(members.begin(), members.end());
  f.members = std::move(members);
  return f;
}

PriorityOrder ranks(std::initializer_list<std::pair<const char*, long long>> rs) {
  PriorityOrder p;
  for (const auto& [text, rank] : rs) p.set_rank(F(text), rank);
  return p;
}

}  // namespace

TEST_CASE("select: full keeps the family, empty family yields the anchor") {
  SubsetFamily f = family_of({BeliefBase{F("p")}, BeliefBase{F("q")}});
  BeliefBase anchor{F("k")};
  CHECK(select(SelectionStrategy::full(), anchor, f) == f.members);
  SubsetFamily empty = family_of({});
  CHECK(select(SelectionStrategy::full(), anchor, empty) ==
        std::vector<BeliefBase>{anchor});
  CHECK(select(SelectionStrategy::maxichoice(), anchor, empty) ==
        std::vector<BeliefBase>{anchor});
}

TEST_CASE("select: maxichoice picks by rank, ties by canonical order") {
  SubsetFamily f = family_of({BeliefBase{F("p")}, BeliefBase{F("q")}});
  auto picked = select(SelectionStrategy::maxichoice(ranks({{"p", 0}, {"q", 1}})),
                       BeliefBase{}, f);
  CHECK(picked == std::vector<BeliefBase>{BeliefBase{F("p")}});
  picked = select(SelectionStrategy::maxichoice(ranks({{"q", 0}})), BeliefBase{}, f);
  CHECK(picked == std::vector<BeliefBase>{BeliefBase{F("q")}});
  // no priority: canonical order decides
  picked = select(SelectionStrategy::maxichoice(), BeliefBase{}, f);
  CHECK(picked == std::vector<BeliefBase>{BeliefBase{F("p")}});
}

TEST_CASE("select: ranked member wins over a larger all-unranked member") {
  BeliefBase ka{F("k"), F("a")}, kb{F("k"), F("b")}, kab{F("k"), F("a"), F("b")};
  SubsetFamily f = family_of({ka, kb, kab});
  auto picked =
      select(SelectionStrategy::maxichoice(ranks({{"a", 0}})), BeliefBase{}, f);
  CHECK(picked == std::vector<BeliefBase>{ka});
}

TEST_CASE("select: topk") {
  BeliefBase bp{F("p")}, bq{F("q")}, br{F("r")};
  SubsetFamily f = family_of({bp, bq, br});
  auto two = select(SelectionStrategy::top(2, ranks({{"r", 0}, {"q", 1}})),
                    BeliefBase{}, f);
  CHECK(two == std::vector<BeliefBase>{bq, br});
  auto all = select(SelectionStrategy::top(9, {}), BeliefBase{}, f);
  CHECK(all.size() == 3);
}

TEST_CASE("meet and union selection") {
  BeliefBase pq{F("p"), F("q")}, pr{F("p"), F("r")};
  SubsetFamily f = family_of({pq, pr});
  CHECK(meet_select(SelectionStrategy::full(), BeliefBase{}, f) == BeliefBase{F("p")});
  CHECK(union_select(SelectionStrategy::full(), BeliefBase{}, f) ==
        BeliefBase{F("p"), F("q"), F("r")});

  BeliefBase anchor{F("k")};
  CHECK(meet_select(SelectionStrategy::full(), anchor, family_of({})) == anchor);
  CHECK(union_select(SelectionStrategy::full(), anchor, family_of({})) == anchor);

  // maxichoice: meet of a single selected member is the member itself
  auto st = SelectionStrategy::maxichoice(ranks({{"q", 0}}));
  CHECK(meet_select(st, BeliefBase{}, f) == pq);

  // full over a partial-sum family is plain union
  BeliefBase k{F("p")};
  SubsetFamily sums = partial_sums(k, BeliefBase{F("a"), F("b")});
  CHECK(union_select(SelectionStrategy::full(), k, sums) ==
        BeliefBase{F("p"), F("a"), F("b")});

  // maxichoice over a partial-sum family with one ranked addition
  BeliefBase kk{F("k")};
  SubsetFamily sums2 = partial_sums(kk, BeliefBase{F("a"), F("b")});
  CHECK(union_select(SelectionStrategy::maxichoice(ranks({{"a", 0}})), kk, sums2) ==
        BeliefBase{F("k"), F("a")});
}

TEST_CASE("selection contract: nonempty subfamily, determinism") {
  std::mt19937_64 rng(5);
  std::vector<Formula> pool{F("p"), F("q"), F("r"), F("~p"), F("p & q")};
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<std::size_t> nm(0, 4);
    std::vector<BeliefBase> members;
    std::size_t n = nm(rng);
    for (std::size_t j = 0; j < n; ++j) {
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      std::vector<Formula> fs;
      for (std::size_t t = 0; t <= pick(rng) % 3; ++t) fs.push_back(pool[pick(rng)]);
      members.emplace_back(std::move(fs));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    SubsetFamily f = family_of(members);
    BeliefBase anchor{F("p")};
    for (const auto& st :
         {SelectionStrategy::full(), SelectionStrategy::maxichoice(ranks({{"p", 0}})),
          SelectionStrategy::top(2, ranks({{"q", 0}}))}) {
      auto sel = select(st, anchor, f);
      CHECK(!sel.empty());
      if (!f.empty()) {
        for (const auto& m : sel) CHECK(f.contains(m));
      } else {
        CHECK(sel == std::vector<BeliefBase>{anchor});
      }
      CHECK(select(st, anchor, f) == sel);  // repeated call is identical
    }
  }
}

TEST_CASE("consistent expansion: worked examples") {
  // ranked additions are taken greedily while consistent
  CHECK(select_expansion_consistent(BeliefBase{F("p")},
                                    BeliefBase{F("q"), F("~q")},
                                    ranks({{"q", 0}, {"~q", 1}})) ==
        BeliefBase{F("p"), F("q")});
  // forced inconsistent addition when nothing fits
  CHECK(select_expansion_consistent(BeliefBase{F("p")}, BeliefBase{F("~p")}, {}) ==
        BeliefBase{F("p"), F("~p")});
  CHECK(select_expansion_consistent(BeliefBase{}, BeliefBase{}, {}) == BeliefBase{});
  // with no ranked candidate exactly one best addition is taken
  CHECK(select_expansion_consistent(BeliefBase{F("p")},
                                    BeliefBase{F("q"), F("r")}, {}) ==
        BeliefBase{F("p"), F("q")});
  CHECK(select_expansion_consistent(BeliefBase{F("p")},
                                    BeliefBase{F("q"), F("r")},
                                    ranks({{"q", 0}})) ==
        BeliefBase{F("p"), F("q")});
  // and ranking both candidates accepts both when they fit together
  CHECK(select_expansion_consistent(BeliefBase{F("p")},
                                    BeliefBase{F("q"), F("r")},
                                    ranks({{"q", 0}, {"r", 1}})) ==
        BeliefBase{F("p"), F("q"), F("r")});
}

TEST_CASE("consistent expansion: membership and consistency preservation") {
  std::mt19937_64 rng(9);
  std::vector<Formula> pool{F("p"), F("q"), F("~p"), F("~q"), F("p & q"),
                            F("p -> q"), F("false")};
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<Formula> kf, af;
    for (std::size_t t = 0; t < pick(rng) % 4; ++t) kf.push_back(pool[pick(rng)]);
    for (std::size_t t = 0; t < pick(rng) % 3; ++t) af.push_back(pool[pick(rng)]);
    BeliefBase k(kf), a(af);
    PriorityOrder prio = ranks({{"q", 0}, {"p", 1}});
    BeliefBase e = select_expansion_consistent(k, a, prio);
    if (a.empty()) {
      CHECK(e == k);
      continue;
    }
    // membership in the partial-sum family
    CHECK(k.subset_of(e));
    CHECK(e.subset_of(k.unioned(a)));
    CHECK(!e.intersected(a).empty());
    // consistent exactly when some member is
    bool some_member_ok = false;
    for (const auto& phi : a)
      if (is_consistent(k.with(phi))) some_member_ok = true;
    CHECK(is_consistent(e) == some_member_ok);
  }
}

TEST_CASE("consistent expansion ignores inputs already in the base") {
  // inputs differing only inside K expand identically
  BeliefBase k{F("a"), F("z")};
  BeliefBase a{F("b"), F("z")};
  BeliefBase b{F("a"), F("b"), F("z")};
  CHECK(select_expansion_consistent(k, a, {}) ==
        select_expansion_consistent(k, b, {}));
}

TEST_CASE("priority order") {
  PriorityOrder p = ranks({{"q", 5}, {"~q", 7}});
  CHECK(p.rank_of(F("q")) == 5);
  CHECK(p.rank_of(F("p")) == PriorityOrder::kUnranked);
  CHECK(p.before(F("q"), F("~q")));
  CHECK(p.before(F("~q"), F("p")));   // ranked before unranked
  CHECK(p.before(F("p"), F("r")));    // unranked ties break by text
}
