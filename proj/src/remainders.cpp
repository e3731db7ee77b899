#include "chrev/remainders.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "chrev/detail/truthtable.hpp"

namespace chrev {

namespace {

using detail::Evaluator;
using detail::Table;

void check_enum_cap(const BeliefBase& k, const Caps& caps) {
  if (static_cast<int>(k.size()) > caps.enum_cap)
    throw CapacityError("base has " + std::to_string(k.size()) +
                        " formulas, enumeration cap is " +
                        std::to_string(caps.enum_cap));
}

// Enumerates the maximal subsets X of k with !bad(conj(X)). bad must be
// monotone (growing X can only turn bad on), which lets the search skip every
// branch whose included prefix is already bad.
std::vector<BeliefBase> maximal_good_subsets(
    const BeliefBase& k, const Evaluator& ev,
    const std::function<bool(const Table&)>& bad) {
  const std::size_t n = k.size();
  std::vector<Table> member(n);
  for (std::size_t i = 0; i < n; ++i) member[i] = ev.table(k.at(i));

  std::unordered_set<std::uint32_t> good;
  std::function<void(std::size_t, std::uint32_t, const Table&)> walk =
      [&](std::size_t i, std::uint32_t mask, const Table& t) {
        if (i == n) {
          good.insert(mask);
          return;
        }
        Table with = Evaluator::and_(t, member[i]);
        if (!bad(with)) walk(i + 1, mask | (1u << i), with);
        walk(i + 1, mask, t);
      };
  Table empty_conj = ev.all_true();
  if (!bad(empty_conj)) walk(0, 0, empty_conj);

  std::vector<BeliefBase> out;
  for (std::uint32_t mask : good) {
    bool maximal = true;
    for (std::size_t j = 0; j < n && maximal; ++j)
      if (!(mask & (1u << j)) && good.count(mask | (1u << j))) maximal = false;
    if (!maximal) continue;
    std::vector<Formula> fs;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (1u << j)) fs.push_back(k.at(j));
    out.emplace_back(std::move(fs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubsetFamily remainder_family(FamilyKind kind, const BeliefBase& k,
                              const BeliefBase& a, const Caps& caps,
                              bool against_negation) {
  check_enum_cap(k, caps);
  std::vector<BeliefBase> bases{k, a};
  Evaluator ev(atom_universe(bases, caps));

  std::vector<Table> a_tables;
  for (const auto& phi : a) a_tables.push_back(ev.table(phi));

  std::function<bool(const Table&)> bad;
  if (kind == FamilyKind::Package && !against_negation) {
    // X |- A: some member of A entailed.
    bad = [&](const Table& t) {
      for (std::size_t i = 0; i < a_tables.size(); ++i) {
        bool entailed = true;
        for (std::size_t w = 0; w < t.bits.size(); ++w)
          if (t.bits[w] & ~a_tables[i].bits[w]) { entailed = false; break; }
        if (entailed) return true;
      }
      return false;
    };
  } else if (kind == FamilyKind::Choice && !against_negation) {
    // X ||- A: all members entailed (vacuously true for empty A).
    bad = [&](const Table& t) {
      for (std::size_t i = 0; i < a_tables.size(); ++i) {
        bool entailed = true;
        for (std::size_t w = 0; w < t.bits.size(); ++w)
          if (t.bits[w] & ~a_tables[i].bits[w]) { entailed = false; break; }
        if (!entailed) return false;
      }
      return true;
    };
  } else if (kind == FamilyKind::Choice) {
    // X ||- n(A) iff no member of A is jointly satisfiable with X.
    bad = [&](const Table& t) {
      for (const auto& ta : a_tables)
        if (!Evaluator::and_(t, ta).none()) return false;
      return true;
    };
  } else {
    // X |- n(A') iff X u A' is unsatisfiable.
    Table conj_a = ev.conjunction(a);
    bad = [conj_a](const Table& t) {
      return Evaluator::and_(t, conj_a).none();
    };
  }

  SubsetFamily fam;
  fam.kind = kind;
  fam.anchor = k;
  fam.members = maximal_good_subsets(k, ev, bad);
  return fam;
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Package: return "package";
    case FamilyKind::Choice: return "choice";
    case FamilyKind::PartialSum: return "partial-sum";
  }
  return "?";
}

bool SubsetFamily::contains(const BeliefBase& b) const {
  return std::binary_search(members.begin(), members.end(), b);
}

SubsetFamily package_remainders(const BeliefBase& k, const BeliefBase& a,
                                const Caps& caps) {
  return remainder_family(FamilyKind::Package, k, a, caps, false);
}

SubsetFamily choice_remainders(const BeliefBase& k, const BeliefBase& a,
                               const Caps& caps) {
  return remainder_family(FamilyKind::Choice, k, a, caps, false);
}

SubsetFamily choice_remainders_vs_negation(const BeliefBase& k,
                                           const BeliefBase& a,
                                           const Caps& caps) {
  if (a.empty()) return choice_remainders(k, negation_set(a, caps).clauses, caps);
  return remainder_family(FamilyKind::Choice, k, a, caps, true);
}

SubsetFamily package_remainders_vs_negation(const BeliefBase& k,
                                            const BeliefBase& a_prime,
                                            const Caps& caps) {
  if (a_prime.empty())
    return package_remainders(k, negation_set(a_prime, caps).clauses, caps);
  return remainder_family(FamilyKind::Package, k, a_prime, caps, true);
}

SubsetFamily partial_sums(const BeliefBase& k, const BeliefBase& a,
                          const Caps& caps) {
  std::vector<BeliefBase> bases{k, a};
  atom_universe(bases, caps);  // enforce the universe cap
  BeliefBase fresh = a.difference(k);
  if (static_cast<int>(fresh.size()) > caps.partial_cap)
    throw CapacityError("input adds " + std::to_string(fresh.size()) +
                        " formulas, partial-sum cap is " +
                        std::to_string(caps.partial_cap));
  bool overlaps = !k.intersected(a).empty();

  SubsetFamily fam;
  fam.kind = FamilyKind::PartialSum;
  fam.anchor = k;
  const std::size_t n = fresh.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (mask == 0 && !overlaps) continue;
    BeliefBase member = k;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (1u << j)) member = member.with(fresh.at(j));
    fam.members.push_back(std::move(member));
  }
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

NegationSet negation_set(const BeliefBase& a, const Caps& caps) {
  if (static_cast<int>(a.size()) > caps.negation_cap)
    throw CapacityError("negation set over " + std::to_string(a.size()) +
                        " formulas, cap is " + std::to_string(caps.negation_cap));
  NegationSet n;
  n.source = a;
  if (a.empty()) {
    n.clauses = BeliefBase{Formula::top()};
    return n;
  }
  std::vector<Formula> clauses;
  for (std::uint32_t mask = 1; mask < (1u << a.size()); ++mask) {
    Formula clause = Formula::bottom();  // placeholder; set on first disjunct
    bool started = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!(mask & (1u << j))) continue;
      Formula lit = Formula::neg(a.at(j));
      clause = started ? Formula::disj(clause, lit) : lit;
      started = true;
    }
    clauses.push_back(clause);
  }
  n.clauses = BeliefBase(std::move(clauses));
  return n;
}

BeliefBase upper_bound_witness(const BeliefBase& k, const BeliefBase& k_prime,
                               const BeliefBase& a, FamilyKind kind,
                               const Caps& caps) {
  if (kind == FamilyKind::PartialSum)
    throw std::invalid_argument("upper_bound_witness needs Package or Choice");
  if (!k_prime.subset_of(k))
    throw std::invalid_argument("upper_bound_witness: k_prime is not a subset of k");
  bool implies_now = kind == FamilyKind::Package ? implies_some(k_prime, a, caps)
                                                 : implies_all(k_prime, a, caps);
  if (implies_now)
    throw std::invalid_argument(
        "upper_bound_witness: k_prime already implies the input");

  BeliefBase x = k_prime;
  for (const auto& phi : k) {
    if (x.contains(phi)) continue;
    BeliefBase cand = x.with(phi);
    bool bad = kind == FamilyKind::Package ? implies_some(cand, a, caps)
                                           : implies_all(cand, a, caps);
    if (!bad) x = std::move(cand);
  }
  return x;
}

}  // namespace chrev
