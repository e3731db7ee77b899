#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "chrev/formula.hpp"

namespace chrev {

// Finite set of formulas under structural identity. Kept sorted by canonical
// text, so iteration order is the canonical formula order and set equality is
// plain vector equality.
class BeliefBase {
 public:
  BeliefBase() = default;
  explicit BeliefBase(std::vector<Formula> formulas);
  BeliefBase(std::initializer_list<Formula> formulas);

  std::size_t size() const { return formulas_.size(); }
  bool empty() const { return formulas_.empty(); }

  auto begin() const { return formulas_.begin(); }
  auto end() const { return formulas_.end(); }
  const Formula& at(std::size_t i) const { return formulas_.at(i); }

  bool contains(const Formula& f) const;
  bool subset_of(const BeliefBase& o) const;
  bool proper_subset_of(const BeliefBase& o) const;

  BeliefBase unioned(const BeliefBase& o) const;
  BeliefBase intersected(const BeliefBase& o) const;
  BeliefBase difference(const BeliefBase& o) const;
  BeliefBase with(const Formula& f) const;
  BeliefBase without(const Formula& f) const;

  // Canonical rendering of every member, in order.
  std::vector<std::string> texts() const;
  // Members joined by ", " — for messages and traces.
  std::string joined() const;

  bool operator==(const BeliefBase& o) const { return formulas_ == o.formulas_; }
  // Canonical order on bases: lexicographic over member texts.
  bool operator<(const BeliefBase& o) const;

 private:
  std::vector<Formula> formulas_;
};

}  // namespace chrev
