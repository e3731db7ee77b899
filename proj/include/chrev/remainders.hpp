#pragma once

#include <string>
#include <vector>

#include "chrev/belief_base.hpp"
#include "chrev/consequence.hpp"

namespace chrev {

enum class FamilyKind { Package, Choice, PartialSum };

std::string to_string(FamilyKind kind);

// A finite family of belief bases, canonically sorted and deduplicated.
// Package/Choice families are antichains of subsets of the anchor; PartialSum
// families hold every set between the anchor and its union with the input
// that meets the input.
struct SubsetFamily {
  FamilyKind kind;
  BeliefBase anchor;
  std::vector<BeliefBase> members;

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  bool contains(const BeliefBase& b) const;
  // Family equality as sets of sets, ignoring anchor and kind.
  bool same_members(const SubsetFamily& o) const { return members == o.members; }
};

// Explicit negation set of a base: one clause per nonempty subset, each the
// disjunction of the negations of the subset's members in canonical order.
// The empty source yields the single clause "true".
struct NegationSet {
  BeliefBase source;
  BeliefBase clauses;
};

// Maximal X subseteq K with X |/- A (no member of A entailed).
SubsetFamily package_remainders(const BeliefBase& k, const BeliefBase& a,
                                const Caps& caps = {});

// Maximal X subseteq K with X ||/- A (some member of A not entailed).
SubsetFamily choice_remainders(const BeliefBase& k, const BeliefBase& a,
                               const Caps& caps = {});

// All X with K subseteq X subseteq K union A and X meets A.
SubsetFamily partial_sums(const BeliefBase& k, const BeliefBase& a,
                          const Caps& caps = {});

NegationSet negation_set(const BeliefBase& a, const Caps& caps = {});

// The choice remainders of K by the negation set of A, computed without
// materialising the clauses: X fails to entail every clause of n(A) exactly
// when X u {phi} is consistent for some phi in A.
SubsetFamily choice_remainders_vs_negation(const BeliefBase& k,
                                           const BeliefBase& a,
                                           const Caps& caps = {});

// The package remainders of K by the negation set of A': X entails no clause
// of n(A') exactly when X u A' is consistent (deduction property).
SubsetFamily package_remainders_vs_negation(const BeliefBase& k,
                                            const BeliefBase& a_prime,
                                            const Caps& caps = {});

// Extends k_prime (a non-implying subset of K, in the sense selected by kind)
// to a member of the corresponding remainder family, adding K's members
// greedily in canonical order. Throws std::invalid_argument when k_prime is
// not a subset of K or already implies.
BeliefBase upper_bound_witness(const BeliefBase& k, const BeliefBase& k_prime,
                               const BeliefBase& a, FamilyKind kind,
                               const Caps& caps = {});

}  // namespace chrev
