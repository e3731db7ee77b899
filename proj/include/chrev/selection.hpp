#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "chrev/belief_base.hpp"
#include "chrev/consequence.hpp"
#include "chrev/remainders.hpp"

namespace chrev {

// Strict total order on formulas: listed formulas by ascending weight, then
// canonical text; unlisted formulas after all listed ones, by canonical text.
class PriorityOrder {
 public:
  static constexpr long long kUnranked = std::numeric_limits<long long>::max();

  PriorityOrder() = default;

  void set_rank(const Formula& f, long long rank) { weights_[f.text()] = rank; }
  long long rank_of(const Formula& f) const;
  bool ranked(const Formula& f) const { return weights_.count(f.text()) != 0; }
  bool before(const Formula& a, const Formula& b) const;
  bool empty() const { return weights_.empty(); }

  const std::map<std::string, long long>& weights() const { return weights_; }

 private:
  std::map<std::string, long long> weights_;
};

enum class SelectionKind { Full, Maxichoice, TopK };

struct SelectionStrategy {
  SelectionKind kind = SelectionKind::Full;
  int top_k = 1;  // TopK only
  PriorityOrder priority;

  static SelectionStrategy full() { return {}; }
  static SelectionStrategy maxichoice(PriorityOrder p = {});
  static SelectionStrategy top(int k, PriorityOrder p = {});

  std::string name() const;
};

// The selection rule: a nonempty subfamily of a nonempty family, or {anchor}
// when the family is empty. Full keeps everything; Maxichoice keeps the single
// best-scoring member; TopK the k best. Members are scored by the ascending
// vector of their formulas' ranks, compared lexicographically (ties broken by
// canonical base order), so the selection depends on nothing but the family
// and the priority.
std::vector<BeliefBase> select(const SelectionStrategy& strategy,
                               const BeliefBase& anchor,
                               const SubsetFamily& family);

// Intersection of select(...); the anchor itself when the family is empty.
BeliefBase meet_select(const SelectionStrategy& strategy, const BeliefBase& anchor,
                       const SubsetFamily& family);

// Union of select(...); the anchor itself when the family is empty.
BeliefBase union_select(const SelectionStrategy& strategy, const BeliefBase& anchor,
                        const SubsetFamily& family);

// Consistency-preserving expansion of K by part of A: picks a member of the
// partial-sum family that is consistent whenever any member is. Ranked inputs
// that are genuinely new are added greedily in priority order while the result
// stays consistent; with no ranked candidate the single best addition is used.
// Decisions depend only on K, A \ K and the priority, so inputs that differ
// only inside K expand identically.
BeliefBase select_expansion_consistent(const BeliefBase& k, const BeliefBase& a,
                                       const PriorityOrder& priority,
                                       const Caps& caps = {});

}  // namespace chrev
