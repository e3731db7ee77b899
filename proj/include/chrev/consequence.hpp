#pragma once

#include <span>
#include <string>
#include <vector>

#include "chrev/belief_base.hpp"
#include "chrev/errors.hpp"
#include "chrev/formula.hpp"

namespace chrev {

// Enumeration limits. Everything in this library decides consequence by
// exhaustive valuation enumeration, so each entry bounds one exponential.
struct Caps {
  int atom_cap = 16;      // atoms in the combined universe
  int enum_cap = 14;      // |K| for remainder enumeration
  int partial_cap = 12;   // |A \ K| for partial sums
  int negation_cap = 10;  // |A| for explicit negation sets
};

// Sorted union of the atoms occurring in the given bases. Throws CapacityError
// when the universe exceeds caps.atom_cap.
std::vector<std::string> atom_universe(std::span<const BeliefBase> bases,
                                       const Caps& caps = {});

bool is_consistent(const BeliefBase& x, const Caps& caps = {});

// phi is a classical consequence of x.
bool entails(const BeliefBase& x, const Formula& phi, const Caps& caps = {});

// x |- a : at least one member of a is a consequence of x (false for empty a).
bool implies_some(const BeliefBase& x, const BeliefBase& a, const Caps& caps = {});

// x ||- a : every member of a is a consequence of x (true for empty a).
bool implies_all(const BeliefBase& x, const BeliefBase& a, const Caps& caps = {});

bool equivalent_formulas(const Formula& a, const Formula& b, const Caps& caps = {});

// Every member of a is logically equivalent to some member of b and vice versa.
bool equivalent_sets(const BeliefBase& a, const BeliefBase& b, const Caps& caps = {});

// Right-nested conjunction of the members of b in canonical order.
// Throws std::invalid_argument when b is empty.
Formula conjunction_of(const BeliefBase& b);

}  // namespace chrev
