#include "chrev/selection.hpp"

#include <algorithm>
#include <limits>

#include "chrev/detail/truthtable.hpp"

namespace chrev {

long long PriorityOrder::rank_of(const Formula& f) const {
  auto it = weights_.find(f.text());
  return it == weights_.end() ? kUnranked : it->second;
}

bool PriorityOrder::before(const Formula& a, const Formula& b) const {
  long long ra = rank_of(a), rb = rank_of(b);
  if (ra != rb) return ra < rb;
  return a.text() < b.text();
}

SelectionStrategy SelectionStrategy::maxichoice(PriorityOrder p) {
  return {SelectionKind::Maxichoice, 1, std::move(p)};
}

SelectionStrategy SelectionStrategy::top(int k, PriorityOrder p) {
  return {SelectionKind::TopK, k, std::move(p)};
}

std::string SelectionStrategy::name() const {
  switch (kind) {
    case SelectionKind::Full: return "full";
    case SelectionKind::Maxichoice: return "maxichoice";
    case SelectionKind::TopK: return "topk:" + std::to_string(top_k);
  }
  return "?";
}

namespace {

std::vector<long long> score(const PriorityOrder& p, const BeliefBase& member) {
  std::vector<long long> ranks;
  ranks.reserve(member.size());
  for (const auto& f : member) ranks.push_back(p.rank_of(f));
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

}  // namespace

std::vector<BeliefBase> select(const SelectionStrategy& strategy,
                               const BeliefBase& anchor,
                               const SubsetFamily& family) {
  if (family.empty()) return {anchor};
  if (strategy.kind == SelectionKind::Full) return family.members;

  std::vector<std::size_t> order(family.members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::vector<long long>> scores;
  scores.reserve(family.members.size());
  for (const auto& m : family.members) scores.push_back(score(strategy.priority, m));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b])
      return std::lexicographical_compare(scores[a].begin(), scores[a].end(),
                                          scores[b].begin(), scores[b].end());
    return family.members[a] < family.members[b];
  });

  std::size_t take = strategy.kind == SelectionKind::Maxichoice
                         ? 1
                         : std::min<std::size_t>(
                               family.members.size(),
                               static_cast<std::size_t>(std::max(1, strategy.top_k)));
  std::vector<BeliefBase> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(family.members[order[i]]);
  std::sort(out.begin(), out.end());
  return out;
}

BeliefBase meet_select(const SelectionStrategy& strategy, const BeliefBase& anchor,
                       const SubsetFamily& family) {
  std::vector<BeliefBase> chosen = select(strategy, anchor, family);
  BeliefBase acc = chosen.front();
  for (std::size_t i = 1; i < chosen.size(); ++i) acc = acc.intersected(chosen[i]);
  return acc;
}

BeliefBase union_select(const SelectionStrategy& strategy, const BeliefBase& anchor,
                        const SubsetFamily& family) {
  std::vector<BeliefBase> chosen = select(strategy, anchor, family);
  BeliefBase acc = chosen.front();
  for (std::size_t i = 1; i < chosen.size(); ++i) acc = acc.unioned(chosen[i]);
  return acc;
}

BeliefBase select_expansion_consistent(const BeliefBase& k, const BeliefBase& a,
                                       const PriorityOrder& priority,
                                       const Caps& caps) {
  if (a.empty()) return k;

  std::vector<BeliefBase> bases{k, a};
  detail::Evaluator ev(atom_universe(bases, caps));
  detail::Table conj_k = ev.conjunction(k);

  // Candidates that keep a consistent K consistent, restricted to genuinely
  // new formulas so that no-op inputs already in K cannot change the outcome.
  std::vector<Formula> fresh_ok;
  bool old_ok = false;  // some member of A inside K, K consistent
  for (const auto& phi : a) {
    if (detail::Evaluator::and_(conj_k, ev.table(phi)).none()) continue;
    if (k.contains(phi))
      old_ok = true;
    else
      fresh_ok.push_back(phi);
  }

  if (!fresh_ok.empty()) {
    std::sort(fresh_ok.begin(), fresh_ok.end(),
              [&](const Formula& x, const Formula& y) { return priority.before(x, y); });
    BeliefBase result = k;
    detail::Table acc = conj_k;
    bool added = false;
    for (const auto& phi : fresh_ok) {
      if (!priority.ranked(phi)) continue;
      detail::Table next = detail::Evaluator::and_(acc, ev.table(phi));
      if (next.none()) continue;
      result = result.with(phi);
      acc = std::move(next);
      added = true;
    }
    if (!added) result = result.with(fresh_ok.front());
    return result;
  }

  if (old_ok) return k;

  // No consistent way to take anything from A; accept the best new formula
  // anyway so that the expansion still succeeds.
  BeliefBase fresh = a.difference(k);
  if (fresh.empty()) return k;
  const Formula* best = nullptr;
  for (const auto& phi : fresh)
    if (!best || priority.before(phi, *best)) best = &phi;
  return k.with(*best);
}

}  // namespace chrev
