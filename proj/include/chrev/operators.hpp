#pragma once

#include <string>

#include "chrev/belief_base.hpp"
#include "chrev/consequence.hpp"
#include "chrev/selection.hpp"

namespace chrev {

enum class RevisionMode { Internal, External };

std::string to_string(RevisionMode mode);

// Intermediate record of a two-stage revision.
//   Internal: stage1 is the contracted base (a subset of K), aux the raw
//             input A, result the consistency-preserving expansion of stage1.
//   External: stage1 is the expanded base (between K and K u A), aux the newly
//             accepted part stage1 \ K, result the contracted stage1.
struct RevisionTrace {
  RevisionMode mode;
  BeliefBase stage1;
  BeliefBase aux;
  BeliefBase result;
};

// Removes every member of A: the meet of the selected package remainders.
BeliefBase package_contract(const BeliefBase& k, const BeliefBase& a,
                            const SelectionStrategy& strategy,
                            const Caps& caps = {});

// Gives up at least one member of A: the meet of the selected choice remainders.
BeliefBase choice_contract(const BeliefBase& k, const BeliefBase& a,
                           const SelectionStrategy& strategy,
                           const Caps& caps = {});

// Accepts part of A: the union of the selected partial sums.
BeliefBase partial_expand(const BeliefBase& k, const BeliefBase& a,
                          const SelectionStrategy& strategy,
                          const Caps& caps = {});

// Contract by the negation set of A, then expand consistently by A. The same
// strategy drives both stages unless a separate expansion priority is given.
RevisionTrace internal_choice_revise(const BeliefBase& k, const BeliefBase& a,
                                     const SelectionStrategy& strategy,
                                     const Caps& caps = {});
RevisionTrace internal_choice_revise(const BeliefBase& k, const BeliefBase& a,
                                     const SelectionStrategy& contraction,
                                     const PriorityOrder& expansion_priority,
                                     const Caps& caps = {});

// Expand by part of A, then package-contract by the negation set of the newly
// accepted part.
RevisionTrace external_choice_revise(const BeliefBase& k, const BeliefBase& a,
                                     const SelectionStrategy& strategy,
                                     const Caps& caps = {});
RevisionTrace external_choice_revise(const BeliefBase& k, const BeliefBase& a,
                                     const SelectionStrategy& expansion,
                                     const SelectionStrategy& contraction,
                                     const Caps& caps = {});

// The input {phi, ~phi} built with syntactic negation (no double-negation
// elimination).
BeliefBase undecided_pair(const Formula& phi);

// Making up one's mind: choice revision by {phi, ~phi}.
BeliefBase mum_internal(const BeliefBase& k, const Formula& phi,
                        const SelectionStrategy& strategy, const Caps& caps = {});
BeliefBase mum_external(const BeliefBase& k, const Formula& phi,
                        const SelectionStrategy& strategy, const Caps& caps = {});

}  // namespace chrev
