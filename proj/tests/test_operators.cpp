#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chrev/operators.hpp"
#include "chrev/remainders.hpp"

using namespace chrev;

namespace {

Formula F(const std::string& s) { return parse_formula(s); }

PriorityOrder ranks(std::initializer_list<std::pair<const char*, long long>> rs) {
  PriorityOrder p;
  for (const auto& [text, rank] : rs) p.set_rank(F(text), rank);
  return p;
}

SelectionStrategy full_with(PriorityOrder p) {
  SelectionStrategy s = SelectionStrategy::full();
  s.priority = std::move(p);
  return s;
}

BeliefBase random_base(std::mt19937_64& rng, const std::vector<Formula>& pool,
                       std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> sz(0, max_size);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<Formula> fs;
  std::size_t n = sz(rng);
  for (std::size_t i = 0; i < n; ++i) fs.push_back(pool[pick(rng)]);
  return BeliefBase(std::move(fs));
}

const std::vector<Formula>& pool() {
  static std::vector<Formula> p = [] {
    std::vector<Formula> fs;
    for (const char* t : {"p", "q", "r", "~p", "~q", "~r", "p & q", "p -> ~q",
                          "q | r", "p & ~p", "false", "true"})
      fs.push_back(F(t));
    return fs;
  }();
  return p;
}

}  // namespace

TEST_CASE("package contraction") {
  BeliefBase k{F("p"), F("p -> q"), F("q")};
  CHECK(package_contract(k, BeliefBase{F("q")}, SelectionStrategy::full()) ==
        BeliefBase{});
  CHECK(package_contract(k, BeliefBase{F("true")}, SelectionStrategy::full()) == k);
  CHECK(package_contract(k, BeliefBase{F("q")},
                         SelectionStrategy::maxichoice(ranks({{"p", 0}}))) ==
        BeliefBase{F("p")});
}

TEST_CASE("choice contraction") {
  BeliefBase k{F("p"), F("q")};
  BeliefBase a{F("p"), F("q")};
  CHECK(choice_contract(k, a, SelectionStrategy::full()) == BeliefBase{});
  CHECK(choice_contract(k, BeliefBase{}, SelectionStrategy::full()) == k);
  CHECK(choice_contract(k, a, SelectionStrategy::maxichoice(ranks({{"q", 0}}))) ==
        BeliefBase{F("q")});
}

TEST_CASE("partial expansion") {
  BeliefBase k{F("p")};
  BeliefBase a{F("q"), F("r")};
  CHECK(partial_expand(k, a, SelectionStrategy::full()) == k.unioned(a));
  CHECK(partial_expand(k, BeliefBase{}, SelectionStrategy::full()) == k);
  CHECK(partial_expand(k, a, SelectionStrategy::maxichoice(ranks({{"q", 0}}))) ==
        BeliefBase{F("p"), F("q")});
}

TEST_CASE("internal choice revision: two conflicting beliefs retracted") {
  BeliefBase k{F("p"), F("~q"), F("~r")};
  BeliefBase a{F("q"), F("r")};
  RevisionTrace t = internal_choice_revise(k, a, full_with(ranks({{"q", 0}})));
  CHECK(t.mode == RevisionMode::Internal);
  CHECK(t.stage1 == BeliefBase{F("p")});
  CHECK(t.aux == a);
  CHECK(t.result == BeliefBase{F("p"), F("q")});
}

TEST_CASE("internal choice revision: conventions and forced retraction") {
  BeliefBase k{F("q")};
  CHECK(internal_choice_revise(k, BeliefBase{}, SelectionStrategy::full()).result ==
        k);
  RevisionTrace t =
      internal_choice_revise(k, BeliefBase{F("~q")}, SelectionStrategy::full());
  CHECK(t.stage1 == BeliefBase{});
  CHECK(t.result == BeliefBase{F("~q")});
}

TEST_CASE("internal choice revision: trace invariants") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 150; ++i) {
    BeliefBase k = random_base(rng, pool(), 4);
    BeliefBase a = random_base(rng, pool(), 3);
    RevisionTrace t = internal_choice_revise(k, a, full_with(ranks({{"q", 0}})));
    CHECK(t.stage1.subset_of(k));
    CHECK(t.result ==
          select_expansion_consistent(t.stage1, a, ranks({{"q", 0}})));
    if (is_consistent(k)) {
      // settled beliefs overlapping the input survive contraction
      CHECK(k.intersected(a).subset_of(t.stage1));
      // the original base contributes exactly the contracted part
      CHECK(k.intersected(t.result) == t.stage1);
    }
  }
}

TEST_CASE("external choice revision: expansion then clearing") {
  BeliefBase k{F("q")};
  BeliefBase a{F("p"), F("p -> ~q")};
  RevisionTrace t = external_choice_revise(k, a, SelectionStrategy::full());
  CHECK(t.mode == RevisionMode::External);
  CHECK(t.stage1 == BeliefBase{F("q"), F("p"), F("p -> ~q")});
  CHECK(t.aux == a);
  CHECK(t.result == BeliefBase{F("p"), F("p -> ~q")});
}

TEST_CASE("external choice revision: conventions") {
  BeliefBase k{F("p")};
  CHECK(external_choice_revise(k, BeliefBase{}, SelectionStrategy::full()).result ==
        k);
  // confirmation: input already believed
  RevisionTrace t =
      external_choice_revise(k, BeliefBase{F("p")}, SelectionStrategy::full());
  CHECK(t.aux == BeliefBase{});
  CHECK(t.result == k);
}

TEST_CASE("external choice revision: trace invariants") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 150; ++i) {
    BeliefBase k = random_base(rng, pool(), 4);
    BeliefBase a = random_base(rng, pool(), 3);
    RevisionTrace t = external_choice_revise(k, a, SelectionStrategy::full());
    CHECK(k.subset_of(t.stage1));
    CHECK(t.stage1.subset_of(k.unioned(a)));
    CHECK(t.result.subset_of(t.stage1));
    CHECK(t.aux == t.stage1.difference(k));
    // the newly accepted part is never given up again
    CHECK(t.stage1.difference(k) == t.result.difference(k));
    CHECK(t.result.unioned(k) == t.stage1);
  }
}

TEST_CASE("making up one's mind: internal picks a side") {
  BeliefBase k{F("p1"), F("~p1")};
  BeliefBase r1 = mum_internal(k, F("p1"),
                               full_with(ranks({{"p1", 0}})));
  CHECK(r1 == BeliefBase{F("p1")});
  BeliefBase r2 = mum_internal(k, F("p1"), full_with(ranks({{"~p1", 0}})));
  CHECK(r2 == BeliefBase{F("~p1")});
  // no priority: canonical order prefers the positive literal
  CHECK(mum_internal(BeliefBase{}, F("p"), SelectionStrategy::full()) ==
        BeliefBase{F("p")});
}

TEST_CASE("making up one's mind: external can swallow both sides") {
  BeliefBase k{F("p1"), F("p2")};
  BeliefBase r = mum_external(k, F("p3"), SelectionStrategy::full());
  CHECK(r == BeliefBase{F("p1"), F("p2"), F("p3"), F("~p3")});
  CHECK_FALSE(is_consistent(r));
}

TEST_CASE("making up one's mind: syntactic negation, no double-negation collapse") {
  BeliefBase in = undecided_pair(F("~x"));
  CHECK(in == BeliefBase{F("~x"), F("~~x")});
  BeliefBase r = mum_internal(BeliefBase{}, F("~x"), SelectionStrategy::full());
  CHECK((r == BeliefBase{F("~x")} || r == BeliefBase{F("~~x")}));
}

TEST_CASE("one strategy may drive both stages, or two distinct ones") {
  BeliefBase k{F("p"), F("~q"), F("~r")};
  BeliefBase a{F("q"), F("r")};
  // same outcome path as the single-strategy call, but with an explicit
  // expansion priority distinct from the contraction strategy
  RevisionTrace t = internal_choice_revise(k, a, SelectionStrategy::full(),
                                           ranks({{"r", 0}}));
  CHECK(t.result == BeliefBase{F("p"), F("r")});

  RevisionTrace u = external_choice_revise(
      k, a, SelectionStrategy::maxichoice(ranks({{"q", 0}})),
      SelectionStrategy::full());
  CHECK(u.stage1 == k.with(F("q")));
}
