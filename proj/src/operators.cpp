#include "chrev/operators.hpp"

#include "chrev/remainders.hpp"

namespace chrev {

std::string to_string(RevisionMode mode) {
  return mode == RevisionMode::Internal ? "internal" : "external";
}

BeliefBase package_contract(const BeliefBase& k, const BeliefBase& a,
                            const SelectionStrategy& strategy, const Caps& caps) {
  return meet_select(strategy, k, package_remainders(k, a, caps));
}

BeliefBase choice_contract(const BeliefBase& k, const BeliefBase& a,
                           const SelectionStrategy& strategy, const Caps& caps) {
  return meet_select(strategy, k, choice_remainders(k, a, caps));
}

BeliefBase partial_expand(const BeliefBase& k, const BeliefBase& a,
                          const SelectionStrategy& strategy, const Caps& caps) {
  return union_select(strategy, k, partial_sums(k, a, caps));
}

RevisionTrace internal_choice_revise(const BeliefBase& k, const BeliefBase& a,
                                     const SelectionStrategy& strategy,
                                     const Caps& caps) {
  return internal_choice_revise(k, a, strategy, strategy.priority, caps);
}

RevisionTrace internal_choice_revise(const BeliefBase& k, const BeliefBase& a,
                                     const SelectionStrategy& contraction,
                                     const PriorityOrder& expansion_priority,
                                     const Caps& caps) {
  RevisionTrace t;
  t.mode = RevisionMode::Internal;
  t.aux = a;
  t.stage1 = meet_select(contraction, k, choice_remainders_vs_negation(k, a, caps));
  t.result = select_expansion_consistent(t.stage1, a, expansion_priority, caps);
  return t;
}

RevisionTrace external_choice_revise(const BeliefBase& k, const BeliefBase& a,
                                     const SelectionStrategy& strategy,
                                     const Caps& caps) {
  return external_choice_revise(k, a, strategy, strategy, caps);
}

RevisionTrace external_choice_revise(const BeliefBase& k, const BeliefBase& a,
                                     const SelectionStrategy& expansion,
                                     const SelectionStrategy& contraction,
                                     const Caps& caps) {
  RevisionTrace t;
  t.mode = RevisionMode::External;
  t.stage1 = partial_expand(k, a, expansion, caps);
  t.aux = t.stage1.difference(k);
  t.result = meet_select(contraction, t.stage1,
                         package_remainders_vs_negation(t.stage1, t.aux, caps));
  return t;
}

BeliefBase undecided_pair(const Formula& phi) {
  return BeliefBase{phi, Formula::neg(phi)};
}

BeliefBase mum_internal(const BeliefBase& k, const Formula& phi,
                        const SelectionStrategy& strategy, const Caps& caps) {
  return internal_choice_revise(k, undecided_pair(phi), strategy, caps).result;
}

BeliefBase mum_external(const BeliefBase& k, const Formula& phi,
                        const SelectionStrategy& strategy, const Caps& caps) {
  return external_choice_revise(k, undecided_pair(phi), strategy, caps).result;
}

}  // namespace chrev
