#include "chrev/consequence.hpp"

#include <set>
#include <stdexcept>

#include "chrev/detail/truthtable.hpp"

namespace chrev {

std::vector<std::string> atom_universe(std::span<const BeliefBase> bases,
                                       const Caps& caps) {
  std::set<std::string> atoms;
  for (const auto& base : bases)
    for (const auto& f : base) f.atoms_into(atoms);
  if (static_cast<int>(atoms.size()) > caps.atom_cap)
    throw CapacityError("atom universe has " + std::to_string(atoms.size()) +
                        " atoms, cap is " + std::to_string(caps.atom_cap));
  return {atoms.begin(), atoms.end()};
}

namespace {

detail::Evaluator evaluator_over(std::initializer_list<BeliefBase> bases,
                                 const Caps& caps) {
  std::vector<BeliefBase> v(bases);
  return detail::Evaluator(atom_universe(v, caps));
}

}  // namespace

bool is_consistent(const BeliefBase& x, const Caps& caps) {
  auto ev = evaluator_over({x}, caps);
  return ev.satisfiable(ev.conjunction(x));
}

bool entails(const BeliefBase& x, const Formula& phi, const Caps& caps) {
  auto ev = evaluator_over({x, BeliefBase{phi}}, caps);
  return ev.entails(ev.conjunction(x), phi);
}

bool implies_some(const BeliefBase& x, const BeliefBase& a, const Caps& caps) {
  if (a.empty()) return false;
  auto ev = evaluator_over({x, a}, caps);
  auto cx = ev.conjunction(x);
  for (const auto& phi : a)
    if (ev.entails(cx, phi)) return true;
  return false;
}

bool implies_all(const BeliefBase& x, const BeliefBase& a, const Caps& caps) {
  if (a.empty()) return true;
  auto ev = evaluator_over({x, a}, caps);
  auto cx = ev.conjunction(x);
  for (const auto& phi : a)
    if (!ev.entails(cx, phi)) return false;
  return true;
}

bool equivalent_formulas(const Formula& a, const Formula& b, const Caps& caps) {
  auto ev = evaluator_over({BeliefBase{a, b}}, caps);
  return ev.table(a).bits == ev.table(b).bits;
}

bool equivalent_sets(const BeliefBase& a, const BeliefBase& b, const Caps& caps) {
  auto ev = evaluator_over({a, b}, caps);
  auto matched = [&](const Formula& f, const BeliefBase& in) {
    for (const auto& g : in)
      if (ev.table(f).bits == ev.table(g).bits) return true;
    return false;
  };
  for (const auto& f : a)
    if (!matched(f, b)) return false;
  for (const auto& g : b)
    if (!matched(g, a)) return false;
  return true;
}

Formula conjunction_of(const BeliefBase& b) {
  if (b.empty())
    throw std::invalid_argument("conjunction_of requires a nonempty base");
  // Right-nested: {p, q, r} becomes p & (q & r).
  std::size_t n = b.size();
  Formula acc = b.at(n - 1);
  for (std::size_t i = n - 1; i-- > 0;) acc = Formula::conj(b.at(i), acc);
  return acc;
}

}  // namespace chrev
