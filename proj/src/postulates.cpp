#include "chrev/postulates.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "chrev/detail/truthtable.hpp"
#include "chrev/remainders.hpp"

namespace chrev {

using detail::Evaluator;
using detail::Table;

std::string op_tag(OperatorId op) {
  switch (op) {
    case OperatorId::PackageContract: return "pc";
    case OperatorId::ChoiceContract: return "cc";
    case OperatorId::PartialExpand: return "pe";
    case OperatorId::ConsistentExpand: return "ce";
    case OperatorId::ReviseInternal: return "ri";
    case OperatorId::ReviseExternal: return "re";
    case OperatorId::MumInternal: return "mi";
    case OperatorId::MumExternal: return "me";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

namespace {

Evaluator make_eval(std::vector<BeliefBase> bases, const Caps& caps) {
  return Evaluator(atom_universe(bases, caps));
}

bool sat(const Table& t) { return !t.none(); }

// Subset scans are exponential in the carrier size; postulate checks bound it.
void require_scannable(const BeliefBase& u, const char* what) {
  if (u.size() > 20)
    throw CapacityError(std::string(what) + " has " + std::to_string(u.size()) +
                        " formulas, subset-scan cap is 20");
}

// Enumerates every subset of u's members together with its conjunction table,
// smallest sets first along each branch. fn returns false to stop the scan.
template <typename Fn>
bool each_subset(const Evaluator& ev, const BeliefBase& u, const Table& start,
                 Fn fn) {
  require_scannable(u, "subset carrier");
  std::vector<Table> tabs;
  tabs.reserve(u.size());
  for (const auto& f : u) tabs.push_back(ev.table(f));
  std::function<bool(std::size_t, std::uint32_t, const Table&)> walk =
      [&](std::size_t i, std::uint32_t mask, const Table& t) -> bool {
    if (i == u.size()) return fn(mask, t);
    if (!walk(i + 1, mask, t)) return false;
    return walk(i + 1, mask | (1u << i), Evaluator::and_(t, tabs[i]));
  };
  return walk(0, 0, start);
}

BeliefBase base_from_mask(const BeliefBase& u, std::uint32_t mask) {
  std::vector<Formula> fs;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (mask & (1u << i)) fs.push_back(u.at(i));
  return BeliefBase(std::move(fs));
}

Json instance_json(const Instance& inst) {
  Json j;
  j["index"] = inst.index;
  j["label"] = inst.label;
  j["K"] = to_json(inst.k);
  j["A"] = to_json(inst.a);
  if (inst.b) j["B"] = to_json(*inst.b);
  if (inst.z) j["Z"] = to_json(*inst.z);
  return j;
}

struct Ctx {
  const Instance& inst;
  OperatorId op;
  const Caps& caps;
  PostulateReport rep;

  Ctx(const std::string& name, OperatorId op_, const Instance& inst_,
      const Caps& caps_)
      : inst(inst_), op(op_), caps(caps_) {
    rep.postulate = name;
    rep.op = op_;
    rep.instance = inst_;
  }

  PostulateReport holds(std::string note = "") {
    rep.verdict = Verdict::Holds;
    rep.note = std::move(note);
    return rep;
  }
  PostulateReport inapplicable(std::string note = "") {
    rep.verdict = Verdict::Inapplicable;
    rep.note = std::move(note);
    return rep;
  }
  PostulateReport violated(Json witness, std::string note = "") {
    rep.verdict = Verdict::Violated;
    witness["instance"] = instance_json(inst);
    rep.witness = std::move(witness);
    rep.note = std::move(note);
    return rep;
  }
};

BeliefBase apply_base_op(OperatorId op, const Instance& inst, const BeliefBase& k,
                         const BeliefBase& a, const Caps& caps) {
  switch (op) {
    case OperatorId::PackageContract:
      return package_contract(k, a, inst.strategy, caps);
    case OperatorId::ChoiceContract:
      return choice_contract(k, a, inst.strategy, caps);
    case OperatorId::PartialExpand:
      return partial_expand(k, a, inst.strategy, caps);
    case OperatorId::ConsistentExpand:
      return select_expansion_consistent(k, a, inst.strategy.priority, caps);
    case OperatorId::ReviseInternal:
      return internal_choice_revise(k, a, inst.strategy, caps).result;
    case OperatorId::ReviseExternal:
      return external_choice_revise(k, a, inst.strategy, caps).result;
    default:
      throw std::logic_error("operator needs a sentence input");
  }
}

RevisionTrace apply_revision(OperatorId op, const Instance& inst,
                             const BeliefBase& k, const BeliefBase& a,
                             const Caps& caps) {
  if (op == OperatorId::ReviseInternal)
    return internal_choice_revise(k, a, inst.strategy, caps);
  if (op == OperatorId::ReviseExternal)
    return external_choice_revise(k, a, inst.strategy, caps);
  throw std::logic_error("not a revision operator");
}

BeliefBase apply_mum(OperatorId op, const Instance& inst, const BeliefBase& k,
                     const Formula& phi, const Caps& caps) {
  if (op == OperatorId::MumInternal) return mum_internal(k, phi, inst.strategy, caps);
  if (op == OperatorId::MumExternal) return mum_external(k, phi, inst.strategy, caps);
  throw std::logic_error("not a making-up-one's-mind operator");
}

// ---------------------------------------------------------------------------
// Contraction postulates (package and choice variants share their shape; the
// `all` flag switches between |- and ||-).
// ---------------------------------------------------------------------------

bool implies(const Evaluator& ev, const Table& t, const BeliefBase& a, bool all) {
  if (a.empty()) return all;
  for (const auto& phi : a) {
    bool e = ev.entails(t, phi);
    if (all && !e) return false;
    if (!all && e) return true;
  }
  return all;
}

PostulateReport contraction_inclusion(Ctx c) {
  BeliefBase r = apply_base_op(c.op, c.inst, c.inst.k, c.inst.a, c.caps);
  if (r.subset_of(c.inst.k)) return c.holds();
  Json w;
  w["result"] = to_json(r);
  w["excess"] = to_json(r.difference(c.inst.k));
  return c.violated(std::move(w));
}

PostulateReport contraction_success(Ctx c, bool all) {
  const auto& a = c.inst.a;
  bool empty_implies = all ? implies_all(BeliefBase{}, a, c.caps)
                           : implies_some(BeliefBase{}, a, c.caps);
  if (empty_implies) return c.inapplicable("the empty set already implies A");
  BeliefBase r = apply_base_op(c.op, c.inst, c.inst.k, a, c.caps);
  bool still = all ? implies_all(r, a, c.caps) : implies_some(r, a, c.caps);
  if (!still) return c.holds();
  Json w;
  w["result"] = to_json(r);
  return c.violated(std::move(w));
}

PostulateReport contraction_uniformity(Ctx c, bool all) {
  if (!c.inst.b) return c.inapplicable("needs B");
  const auto& a = c.inst.a;
  const auto& b = *c.inst.b;
  Evaluator ev = make_eval({c.inst.k, a, b}, c.caps);
  bool agree = each_subset(ev, c.inst.k, ev.all_true(),
                           [&](std::uint32_t, const Table& t) {
                             return implies(ev, t, a, all) == implies(ev, t, b, all);
                           });
  if (!agree) return c.inapplicable("A and B differ on some subset of K");
  BeliefBase ra = apply_base_op(c.op, c.inst, c.inst.k, a, c.caps);
  BeliefBase rb = apply_base_op(c.op, c.inst, c.inst.k, b, c.caps);
  if (ra == rb) return c.holds();
  Json w;
  w["result_A"] = to_json(ra);
  w["result_B"] = to_json(rb);
  return c.violated(std::move(w));
}

PostulateReport contraction_relevance(Ctx c, bool all) {
  const auto& k = c.inst.k;
  const auto& a = c.inst.a;
  BeliefBase r = apply_base_op(c.op, c.inst, k, a, c.caps);
  BeliefBase removed = k.difference(r);
  if (removed.empty()) return c.inapplicable("nothing was removed");
  Evaluator ev = make_eval({k, a}, c.caps);
  Table lower = ev.conjunction(r);
  for (const auto& phi : removed) {
    BeliefBase extras = removed.without(phi);
    const Table& tphi = ev.table(phi);
    bool found = !each_subset(
        ev, extras, lower, [&](std::uint32_t, const Table& t) {
          if (implies(ev, t, a, all)) return true;  // K' itself implies: skip
          Table tw = Evaluator::and_(t, tphi);
          if (!implies(ev, tw, a, all)) return true;
          return false;  // witness found, stop scan
        });
    if (!found) {
      Json w;
      w["phi"] = phi.text();
      w["result"] = to_json(r);
      return c.violated(std::move(w));
    }
  }
  return c.holds();
}

std::vector<BeliefBase> qualifying_redundancy_sets(const Instance& inst,
                                                   RedundancyMode mode,
                                                   const Caps& caps) {
  std::vector<Formula> pool =
      inst.pool ? *inst.pool : build_pool(3, 2);
  std::vector<BeliefBase> zs = redundancy_candidates(inst.a, mode, pool, caps);
  if (inst.z && !inst.z->empty()) {
    bool ok = true;
    for (const auto& phi : *inst.z) {
      BeliefBase single{phi};
      if (mode == RedundancyMode::Package && !implies_some(single, inst.a, caps))
        ok = false;
      if (mode == RedundancyMode::Choice && !implies_all(single, inst.a, caps))
        ok = false;
      if (mode == RedundancyMode::Internal) {
        for (const auto& psi : inst.a)
          if (!entails(single, Formula::neg(psi), caps)) ok = false;
      }
      if (!ok) break;
    }
    if (ok) zs.push_back(*inst.z);
  }
  return zs;
}

PostulateReport contraction_redundancy(Ctx c, bool all) {
  const auto& a = c.inst.a;
  bool empty_implies = all ? implies_all(BeliefBase{}, a, c.caps)
                           : implies_some(BeliefBase{}, a, c.caps);
  if (empty_implies) return c.inapplicable("the empty set already implies A");
  auto zs = qualifying_redundancy_sets(
      c.inst, all ? RedundancyMode::Choice : RedundancyMode::Package, c.caps);
  if (zs.empty()) return c.inapplicable("no qualifying Z in the pool");
  BeliefBase r = apply_base_op(c.op, c.inst, c.inst.k, a, c.caps);
  for (const auto& z : zs) {
    BeliefBase rz = apply_base_op(c.op, c.inst, c.inst.k.unioned(z), a, c.caps);
    if (!(rz == r)) {
      Json w;
      w["Z"] = to_json(z);
      w["result"] = to_json(r);
      w["result_with_Z"] = to_json(rz);
      return c.violated(std::move(w));
    }
  }
  return c.holds(std::to_string(zs.size()) + " candidates");
}

// ---------------------------------------------------------------------------
// Partial expansion postulates.
// ---------------------------------------------------------------------------

PostulateReport expansion_inclusion(Ctx c) {
  BeliefBase e = apply_base_op(c.op, c.inst, c.inst.k, c.inst.a, c.caps);
  if (e.subset_of(c.inst.k.unioned(c.inst.a))) return c.holds();
  Json w;
  w["result"] = to_json(e);
  return c.violated(std::move(w));
}

PostulateReport expansion_preservation(Ctx c) {
  BeliefBase e = apply_base_op(c.op, c.inst, c.inst.k, c.inst.a, c.caps);
  if (c.inst.k.subset_of(e)) return c.holds();
  Json w;
  w["result"] = to_json(e);
  w["lost"] = to_json(c.inst.k.difference(e));
  return c.violated(std::move(w));
}

PostulateReport expansion_success(Ctx c) {
  if (c.inst.a.empty()) return c.inapplicable("A is empty");
  BeliefBase e = apply_base_op(c.op, c.inst, c.inst.k, c.inst.a, c.caps);
  if (!c.inst.a.intersected(e).empty()) return c.holds();
  Json w;
  w["result"] = to_json(e);
  return c.violated(std::move(w));
}

PostulateReport expansion_coincidence(Ctx c) {
  const auto& k = c.inst.k;
  const auto& a = c.inst.a;
  if (k.intersected(a).empty()) return c.inapplicable("K and A are disjoint");
  BeliefBase e = apply_base_op(c.op, c.inst, k, a, c.caps);
  BeliefBase extras = k.difference(a);
  require_scannable(extras, "coincidence carrier");
  for (std::uint32_t mask = 0; mask < (1u << extras.size()); ++mask) {
    BeliefBase b = a.unioned(base_from_mask(extras, mask));
    BeliefBase eb = apply_base_op(c.op, c.inst, k, b, c.caps);
    if (!(eb == e)) {
      Json w;
      w["B"] = to_json(b);
      w["result_A"] = to_json(e);
      w["result_B"] = to_json(eb);
      return c.violated(std::move(w));
    }
  }
  return c.holds();
}

PostulateReport expansion_consistency(Ctx c) {
  const auto& k = c.inst.k;
  const auto& a = c.inst.a;
  if (a.empty()) return c.inapplicable("A is empty");
  // Antecedent: some partial-sum member is consistent, i.e. some single
  // addition leaves K satisfiable.
  bool some_member_consistent = false;
  for (const auto& phi : a)
    if (is_consistent(k.with(phi), c.caps)) {
      some_member_consistent = true;
      break;
    }
  if (!some_member_consistent)
    return c.inapplicable("no consistent partial sum exists");
  BeliefBase e = apply_base_op(c.op, c.inst, k, a, c.caps);
  if (is_consistent(e, c.caps)) return c.holds();
  Json w;
  w["result"] = to_json(e);
  return c.violated(std::move(w));
}

// ---------------------------------------------------------------------------
// Choice revision postulates.
// ---------------------------------------------------------------------------

PostulateReport revision_inclusion(Ctx c) {
  BeliefBase r = apply_revision(c.op, c.inst, c.inst.k, c.inst.a, c.caps).result;
  if (r.subset_of(c.inst.k.unioned(c.inst.a))) return c.holds();
  Json w;
  w["result"] = to_json(r);
  return c.violated(std::move(w));
}

PostulateReport revision_success(Ctx c) {
  if (c.inst.a.empty()) return c.inapplicable("A is empty");
  BeliefBase r = apply_revision(c.op, c.inst, c.inst.k, c.inst.a, c.caps).result;
  if (!c.inst.a.intersected(r).empty()) return c.holds();
  Json w;
  w["result"] = to_json(r);
  return c.violated(std::move(w));
}

PostulateReport revision_iteration(Ctx c) {
  BeliefBase r = apply_revision(c.op, c.inst, c.inst.k, c.inst.a, c.caps).result;
  BeliefBase again =
      apply_revision(c.op, c.inst, c.inst.k.intersected(r), c.inst.a, c.caps).result;
  if (again == r) return c.holds();
  Json w;
  w["result"] = to_json(r);
  w["result_again"] = to_json(again);
  return c.violated(std::move(w));
}

PostulateReport revision_consistency(Ctx c) {
  if (equivalent_sets(c.inst.a, BeliefBase{Formula::bottom()}, c.caps))
    return c.inapplicable("A is equivalent to {false}");
  BeliefBase r = apply_revision(c.op, c.inst, c.inst.k, c.inst.a, c.caps).result;
  if (is_consistent(r, c.caps)) return c.holds();
  Json w;
  w["result"] = to_json(r);
  return c.violated(std::move(w));
}

PostulateReport revision_coincidence(Ctx c) {
  const auto& k = c.inst.k;
  const auto& a = c.inst.a;
  if (k.intersected(a).empty()) return c.inapplicable("K and A are disjoint");
  BeliefBase r = apply_revision(c.op, c.inst, k, a, c.caps).result;
  BeliefBase extras = k.difference(a);
  require_scannable(extras, "coincidence carrier");
  for (std::uint32_t mask = 0; mask < (1u << extras.size()); ++mask) {
    BeliefBase b = a.unioned(base_from_mask(extras, mask));
    BeliefBase rb = apply_revision(c.op, c.inst, k, b, c.caps).result;
    if (!(rb == r)) {
      Json w;
      w["B"] = to_json(b);
      w["result_A"] = to_json(r);
      w["result_B"] = to_json(rb);
      return c.violated(std::move(w));
    }
  }
  return c.holds();
}

PostulateReport revision_uniformity(Ctx c) {
  if (!c.inst.b) return c.inapplicable("needs B");
  const auto& k = c.inst.k;
  const auto& a = c.inst.a;
  const auto& b = *c.inst.b;
  Evaluator ev = make_eval({k, a, b}, c.caps);
  auto some_compatible = [&](const Table& t, const BeliefBase& in) {
    for (const auto& phi : in)
      if (sat(Evaluator::and_(t, ev.table(phi)))) return true;
    return false;
  };
  bool agree = each_subset(ev, k, ev.all_true(),
                           [&](std::uint32_t, const Table& t) {
                             return some_compatible(t, a) == some_compatible(t, b);
                           });
  if (!agree) return c.inapplicable("A and B differ on some subset of K");
  BeliefBase ra = apply_revision(c.op, c.inst, k, a, c.caps).result;
  BeliefBase rb = apply_revision(c.op, c.inst, k, b, c.caps).result;
  if (k.intersected(ra) == k.intersected(rb)) return c.holds();
  Json w;
  w["K_and_result_A"] = to_json(k.intersected(ra));
  w["K_and_result_B"] = to_json(k.intersected(rb));
  return c.violated(std::move(w));
}

// Internal-style relevance: the retracted sentence clashes with all of A over
// some K' between K n result and K.
PostulateReport revision_relevance(Ctx c) {
  const auto& k = c.inst.k;
  const auto& a = c.inst.a;
  BeliefBase r = apply_revision(c.op, c.inst, k, a, c.caps).result;
  BeliefBase removed = k.difference(r);
  if (removed.empty()) return c.inapplicable("nothing was removed");
  BeliefBase lower = k.intersected(r);
  Evaluator ev = make_eval({k, a}, c.caps);
  Table lower_t = ev.conjunction(lower);
  for (const auto& phi : removed) {
    BeliefBase extras = k.difference(lower).without(phi);
    const Table& tphi = ev.table(phi);
    bool found = !each_subset(ev, extras, lower_t,
                              [&](std::uint32_t, const Table& t) {
                                bool some_ok = false;
                                for (const auto& psi : a)
                                  if (sat(Evaluator::and_(t, ev.table(psi)))) {
                                    some_ok = true;
                                    break;
                                  }
                                if (!some_ok) return true;
                                Table tw = Evaluator::and_(t, tphi);
                                for (const auto& lambda : a)
                                  if (sat(Evaluator::and_(tw, ev.table(lambda))))
                                    return true;
                                return false;  // witness found
                              });
    if (!found) {
      Json w;
      w["phi"] = phi.text();
      w["result"] = to_json(r);
      return c.violated(std::move(w));
    }
  }
  return c.holds();
}

PostulateReport revision_redundancy(Ctx c) {
  const auto& a = c.inst.a;
  if (a.empty()) return c.inapplicable("A is empty");
  if (equivalent_sets(a, BeliefBase{Formula::bottom()}, c.caps))
    return c.inapplicable("A is equivalent to {false}");
  auto zs = qualifying_redundancy_sets(c.inst, RedundancyMode::Internal, c.caps);
  std::erase_if(zs, [&](const BeliefBase& z) {
    return !is_consistent(c.inst.k.unioned(z), c.caps);
  });
  if (zs.empty()) return c.inapplicable("no qualifying Z in the pool");
  BeliefBase r = apply_revision(c.op, c.inst, c.inst.k, a, c.caps).result;
  for (const auto& z : zs) {
    BeliefBase rz =
        apply_revision(c.op, c.inst, c.inst.k.unioned(z), a, c.caps).result;
    if (!(rz == r)) {
      Json w;
      w["Z"] = to_json(z);
      w["result"] = to_json(r);
      w["result_with_Z"] = to_json(rz);
      return c.violated(std::move(w));
    }
  }
  return c.holds(std::to_string(zs.size()) + " candidates");
}

PostulateReport revision_confirmation(Ctx c) {
  const auto& k = c.inst.k;
  BeliefBase r = apply_revision(c.op, c.inst, k, c.inst.a, c.caps).result;
  if (!c.inst.a.intersected(r).subset_of(k))
    return c.inapplicable("accepted part is new");
  if (r == k) return c.holds();
  Json w;
  w["result"] = to_json(r);
  return c.violated(std::move(w));
}

PostulateReport revision_consistency_cond(Ctx c) {
  const auto& k = c.inst.k;
  BeliefBase r = apply_revision(c.op, c.inst, k, c.inst.a, c.caps).result;
  BeliefBase fresh = r.difference(k);
  if (fresh.empty() || !is_consistent(fresh, c.caps))
    return c.inapplicable("new part empty or inconsistent");
  if (is_consistent(r, c.caps)) return c.holds();
  Json w;
  w["result"] = to_json(r);
  return c.violated(std::move(w));
}

PostulateReport revision_uniformity_pairs(Ctx c) {
  if (!c.inst.b || !c.inst.z) return c.inapplicable("needs Z and B");
  const auto& k1 = c.inst.k;
  const auto& a = c.inst.a;
  const auto& k2 = *c.inst.z;
  const auto& b = *c.inst.b;
  BeliefBase r1 = apply_revision(c.op, c.inst, k1, a, c.caps).result;
  BeliefBase r2 = apply_revision(c.op, c.inst, k2, b, c.caps).result;
  BeliefBase u = r1.unioned(k1);
  if (u == k1 || !(u == r2.unioned(k2)) || u == k2)
    return c.inapplicable("expanded bases differ or nothing is new");
  BeliefBase aux1 = r1.difference(k1);
  BeliefBase aux2 = r2.difference(k2);
  Evaluator ev = make_eval({u, aux1, aux2}, c.caps);
  Table t1 = ev.conjunction(aux1);
  Table t2 = ev.conjunction(aux2);
  bool agree = each_subset(ev, u, ev.all_true(),
                           [&](std::uint32_t, const Table& t) {
                             return sat(Evaluator::and_(t, t1)) ==
                                    sat(Evaluator::and_(t, t2));
                           });
  if (!agree) return c.inapplicable("new parts differ on some subset");
  if (r1 == r2) return c.holds();
  Json w;
  w["result_1"] = to_json(r1);
  w["result_2"] = to_json(r2);
  return c.violated(std::move(w));
}

// External-style relevance: some consistent K' between the result and
// K u result is blown up by the retracted sentence.
PostulateReport revision_relevance_strict(Ctx c) {
  const auto& k = c.inst.k;
  BeliefBase r = apply_revision(c.op, c.inst, k, c.inst.a, c.caps).result;
  BeliefBase removed = k.difference(r);
  if (removed.empty()) return c.inapplicable("nothing was removed");
  Evaluator ev = make_eval({k, c.inst.a, r}, c.caps);
  Table lower_t = ev.conjunction(r);
  for (const auto& phi : removed) {
    BeliefBase extras = removed.without(phi);
    const Table& tphi = ev.table(phi);
    bool found = !each_subset(ev, extras, lower_t,
                              [&](std::uint32_t, const Table& t) {
                                if (!sat(t)) return true;
                                if (sat(Evaluator::and_(t, tphi))) return true;
                                return false;  // witness found
                              });
    if (!found) {
      Json w;
      w["phi"] = phi.text();
      w["result"] = to_json(r);
      return c.violated(std::move(w));
    }
  }
  return c.holds();
}

// Strong uniformity, quantifying over subsets of the finite carrier
// K1 u r1 u K2 u r2; any X outside it fails the subset conjunct on both sides,
// so the biconditional holds vacuously there. The postulate only discriminates
// operators when both remainder stages are live, so instances whose newly
// accepted part is empty or inconsistent are out of scope.
PostulateReport revision_strong_uniformity_impl(Ctx c, const BeliefBase& r1,
                                                const BeliefBase& r2) {
  const auto& k1 = c.inst.k;
  const auto& k2 = *c.inst.z;
  BeliefBase aux1 = r1.difference(k1);
  BeliefBase aux2 = r2.difference(k2);
  if (aux1.empty() || aux2.empty() || !is_consistent(aux1, c.caps) ||
      !is_consistent(aux2, c.caps))
    return c.inapplicable("a new part is empty or inconsistent");
  BeliefBase c1 = k1.unioned(r1);
  BeliefBase c2 = k2.unioned(r2);
  BeliefBase carrier = c1.unioned(c2);
  Evaluator ev = make_eval({carrier, aux1, aux2}, c.caps);
  Table ta1 = ev.conjunction(aux1);
  Table ta2 = ev.conjunction(aux2);
  std::uint32_t in1 = 0, in2 = 0;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (c1.contains(carrier.at(i))) in1 |= 1u << i;
    if (c2.contains(carrier.at(i))) in2 |= 1u << i;
  }
  bool agree = each_subset(
      ev, carrier, ev.all_true(), [&](std::uint32_t mask, const Table& t) {
        bool lhs = (mask & ~in1) == 0 && sat(Evaluator::and_(t, ta1));
        bool rhs = (mask & ~in2) == 0 && sat(Evaluator::and_(t, ta2));
        return lhs == rhs;
      });
  if (!agree) return c.inapplicable("carriers distinguish the two sides");
  if (r1 == r2) return c.holds();
  Json w;
  w["result_1"] = to_json(r1);
  w["result_2"] = to_json(r2);
  return c.violated(std::move(w));
}

PostulateReport revision_strong_uniformity(Ctx c) {
  if (!c.inst.b || !c.inst.z) return c.inapplicable("needs Z and B");
  BeliefBase r1 = apply_revision(c.op, c.inst, c.inst.k, c.inst.a, c.caps).result;
  BeliefBase r2 = apply_revision(c.op, c.inst, *c.inst.z, *c.inst.b, c.caps).result;
  return revision_strong_uniformity_impl(std::move(c), r1, r2);
}

// ---------------------------------------------------------------------------
// Making-up-one's-mind postulates. phi is the first member of A, psi (for the
// paired postulates) the first member of B.
// ---------------------------------------------------------------------------

PostulateReport mum_inclusion(Ctx c) {
  if (c.inst.a.empty()) return c.inapplicable("needs a sentence in A");
  Formula phi = c.inst.a.at(0);
  BeliefBase r = apply_mum(c.op, c.inst, c.inst.k, phi, c.caps);
  if (r.subset_of(c.inst.k.unioned(undecided_pair(phi)))) return c.holds();
  Json w;
  w["phi"] = phi.text();
  w["result"] = to_json(r);
  return c.violated(std::move(w));
}

PostulateReport mum_success(Ctx c) {
  if (c.inst.a.empty()) return c.inapplicable("needs a sentence in A");
  Formula phi = c.inst.a.at(0);
  BeliefBase r = apply_mum(c.op, c.inst, c.inst.k, phi, c.caps);
  if (r.contains(phi) || r.contains(Formula::neg(phi))) return c.holds();
  Json w;
  w["phi"] = phi.text();
  w["result"] = to_json(r);
  return c.violated(std::move(w));
}

PostulateReport mum_consistency(Ctx c) {
  if (c.inst.a.empty()) return c.inapplicable("needs a sentence in A");
  Formula phi = c.inst.a.at(0);
  BeliefBase r = apply_mum(c.op, c.inst, c.inst.k, phi, c.caps);
  if (is_consistent(r, c.caps)) return c.holds();
  Json w;
  w["phi"] = phi.text();
  w["result"] = to_json(r);
  return c.violated(std::move(w));
}

PostulateReport mum_coincidence(Ctx c, bool require_consistent_k) {
  if (c.inst.a.empty()) return c.inapplicable("needs a sentence in A");
  const auto& k = c.inst.k;
  Formula phi = c.inst.a.at(0);
  if (require_consistent_k && !is_consistent(k, c.caps))
    return c.inapplicable("K is inconsistent");
  BeliefBase pair_phi = undecided_pair(phi);
  if (k.intersected(pair_phi).empty())
    return c.inapplicable("neither phi nor its negation is in K");
  BeliefBase r = apply_mum(c.op, c.inst, k, phi, c.caps);
  BeliefBase k_with_phi = k.unioned(pair_phi);
  // Any psi satisfying the antecedent must itself lie in K u {phi, ~phi}.
  bool any_candidate = false;
  for (const auto& psi : k_with_phi) {
    BeliefBase pair_psi = undecided_pair(psi);
    if (k.intersected(pair_psi).empty()) continue;
    if (!(k.unioned(pair_psi) == k_with_phi)) continue;
    any_candidate = true;
    BeliefBase rp = apply_mum(c.op, c.inst, k, psi, c.caps);
    if (!(rp == r)) {
      Json w;
      w["phi"] = phi.text();
      w["psi"] = psi.text();
      w["result_phi"] = to_json(r);
      w["result_psi"] = to_json(rp);
      return c.violated(std::move(w));
    }
  }
  if (!any_candidate) return c.inapplicable("no candidate psi");
  return c.holds();
}

PostulateReport mum_iteration(Ctx c) {
  if (c.inst.a.empty()) return c.inapplicable("needs a sentence in A");
  Formula phi = c.inst.a.at(0);
  const auto& k = c.inst.k;
  BeliefBase r = apply_mum(c.op, c.inst, k, phi, c.caps);
  BeliefBase settled = apply_mum(c.op, c.inst, k, Formula::top(), c.caps);
  BeliefBase again = apply_mum(c.op, c.inst, settled.intersected(k), phi, c.caps);
  if (again == r) return c.holds();
  Json w;
  w["phi"] = phi.text();
  w["result"] = to_json(r);
  w["result_again"] = to_json(again);
  return c.violated(std::move(w));
}

PostulateReport mum_relevance(Ctx c) {
  if (c.inst.a.empty()) return c.inapplicable("needs a sentence in A");
  Formula phi = c.inst.a.at(0);
  const auto& k = c.inst.k;
  BeliefBase r = apply_mum(c.op, c.inst, k, phi, c.caps);
  BeliefBase removed = k.difference(r);
  if (removed.empty()) return c.inapplicable("nothing was removed");
  BeliefBase settled = apply_mum(c.op, c.inst, k, Formula::top(), c.caps);
  BeliefBase lower = settled.intersected(k);
  Evaluator ev = make_eval({k, undecided_pair(phi)}, c.caps);
  Table lower_t = ev.conjunction(lower);
  for (const auto& psi : removed) {
    BeliefBase extras = k.difference(lower).without(psi);
    const Table& tpsi = ev.table(psi);
    bool found = !each_subset(ev, extras, lower_t,
                              [&](std::uint32_t, const Table& t) {
                                if (!sat(t)) return true;
                                if (sat(Evaluator::and_(t, tpsi))) return true;
                                return false;
                              });
    if (!found) {
      Json w;
      w["phi"] = phi.text();
      w["psi"] = psi.text();
      w["result"] = to_json(r);
      return c.violated(std::move(w));
    }
  }
  return c.holds();
}

PostulateReport mum_redundancy(Ctx c) {
  if (c.inst.a.empty()) return c.inapplicable("needs a sentence in A");
  Formula phi = c.inst.a.at(0);
  std::vector<Formula> pool = c.inst.pool ? *c.inst.pool : build_pool(3, 2);
  // Z equivalent to {false}: nonempty sets of contradictions.
  std::vector<BeliefBase> zs;
  for (const auto& f : pool) {
    if (is_consistent(BeliefBase{f}, c.caps)) continue;
    zs.push_back(BeliefBase{f});
    if (zs.size() >= 3) break;
  }
  if (zs.size() >= 2) zs.push_back(zs[0].unioned(zs[1]));
  if (c.inst.z && !c.inst.z->empty() &&
      equivalent_sets(*c.inst.z, BeliefBase{Formula::bottom()}, c.caps))
    zs.push_back(*c.inst.z);
  if (zs.empty()) return c.inapplicable("no contradictions in the pool");
  BeliefBase r = apply_mum(c.op, c.inst, c.inst.k, phi, c.caps);
  for (const auto& z : zs) {
    BeliefBase rz = apply_mum(c.op, c.inst, c.inst.k.unioned(z), phi, c.caps);
    if (!(rz == r)) {
      Json w;
      w["phi"] = phi.text();
      w["Z"] = to_json(z);
      w["result"] = to_json(r);
      w["result_with_Z"] = to_json(rz);
      return c.violated(std::move(w));
    }
  }
  return c.holds(std::to_string(zs.size()) + " candidates");
}

PostulateReport mum_confirmation(Ctx c) {
  if (c.inst.a.empty()) return c.inapplicable("needs a sentence in A");
  Formula phi = c.inst.a.at(0);
  const auto& k = c.inst.k;
  BeliefBase r = apply_mum(c.op, c.inst, k, phi, c.caps);
  if (!undecided_pair(phi).intersected(r).subset_of(k))
    return c.inapplicable("accepted part is new");
  if (r == k) return c.holds();
  Json w;
  w["phi"] = phi.text();
  w["result"] = to_json(r);
  return c.violated(std::move(w));
}

PostulateReport mum_consistency_cond(Ctx c) {
  if (c.inst.a.empty()) return c.inapplicable("needs a sentence in A");
  Formula phi = c.inst.a.at(0);
  const auto& k = c.inst.k;
  BeliefBase r = apply_mum(c.op, c.inst, k, phi, c.caps);
  BeliefBase fresh = r.difference(k);
  if (fresh.empty() || !is_consistent(fresh, c.caps))
    return c.inapplicable("new part empty or inconsistent");
  if (is_consistent(r, c.caps)) return c.holds();
  Json w;
  w["phi"] = phi.text();
  w["result"] = to_json(r);
  return c.violated(std::move(w));
}

PostulateReport mum_uniformity_pairs(Ctx c) {
  if (!c.inst.b || c.inst.b->empty() || !c.inst.z || c.inst.a.empty())
    return c.inapplicable("needs a sentence in A, Z and a sentence in B");
  Formula phi = c.inst.a.at(0);
  Formula psi = c.inst.b->at(0);
  const auto& k1 = c.inst.k;
  const auto& k2 = *c.inst.z;
  BeliefBase r1 = apply_mum(c.op, c.inst, k1, phi, c.caps);
  BeliefBase r2 = apply_mum(c.op, c.inst, k2, psi, c.caps);
  BeliefBase u = r1.unioned(k1);
  if (u == k1 || !(u == r2.unioned(k2)) || u == k2)
    return c.inapplicable("expanded bases differ or nothing is new");
  BeliefBase aux1 = r1.difference(k1);
  BeliefBase aux2 = r2.difference(k2);
  Evaluator ev = make_eval({u, aux1, aux2}, c.caps);
  Table t1 = ev.conjunction(aux1);
  Table t2 = ev.conjunction(aux2);
  bool agree = each_subset(ev, u, ev.all_true(),
                           [&](std::uint32_t, const Table& t) {
                             return sat(Evaluator::and_(t, t1)) ==
                                    sat(Evaluator::and_(t, t2));
                           });
  if (!agree) return c.inapplicable("new parts differ on some subset");
  if (r1 == r2) return c.holds();
  Json w;
  w["phi"] = phi.text();
  w["psi"] = psi.text();
  w["result_1"] = to_json(r1);
  w["result_2"] = to_json(r2);
  return c.violated(std::move(w));
}

PostulateReport mum_relevance_strict(Ctx c) {
  if (c.inst.a.empty()) return c.inapplicable("needs a sentence in A");
  Formula phi = c.inst.a.at(0);
  const auto& k = c.inst.k;
  BeliefBase r = apply_mum(c.op, c.inst, k, phi, c.caps);
  BeliefBase removed = k.difference(r);
  if (removed.empty()) return c.inapplicable("nothing was removed");
  Evaluator ev = make_eval({k, undecided_pair(phi), r}, c.caps);
  Table lower_t = ev.conjunction(r);
  for (const auto& psi : removed) {
    BeliefBase extras = removed.without(psi);
    const Table& tpsi = ev.table(psi);
    bool found = !each_subset(ev, extras, lower_t,
                              [&](std::uint32_t, const Table& t) {
                                if (!sat(t)) return true;
                                if (sat(Evaluator::and_(t, tpsi))) return true;
                                return false;
                              });
    if (!found) {
      Json w;
      w["phi"] = phi.text();
      w["psi"] = psi.text();
      w["result"] = to_json(r);
      return c.violated(std::move(w));
    }
  }
  return c.holds();
}

// The relevance postulate exactly as printed for the external operation asks
// for an inconsistent K' that a further sentence repairs, which monotony of
// consequence rules out. Kept verbatim so the discrepancy is observable; its
// violations are reported as such and never counted by the default suites.
PostulateReport mum_relevance_as_printed(Ctx c) {
  if (c.inst.a.empty()) return c.inapplicable("needs a sentence in A");
  Formula phi = c.inst.a.at(0);
  const auto& k = c.inst.k;
  BeliefBase r = apply_mum(c.op, c.inst, k, phi, c.caps);
  BeliefBase removed = k.difference(r);
  if (removed.empty()) return c.inapplicable("nothing was removed");
  Evaluator ev = make_eval({k, undecided_pair(phi), r}, c.caps);
  Table lower_t = ev.conjunction(r);
  for (const auto& psi : removed) {
    BeliefBase extras = removed.without(psi);
    const Table& tpsi = ev.table(psi);
    bool found = !each_subset(ev, extras, lower_t,
                              [&](std::uint32_t, const Table& t) {
                                if (sat(t)) return true;  // need K' |- false
                                if (!sat(Evaluator::and_(t, tpsi))) return true;
                                return false;
                              });
    if (!found) {
      Json w;
      w["phi"] = phi.text();
      w["psi"] = psi.text();
      w["result"] = to_json(r);
      return c.violated(std::move(w), "known paper discrepancy");
    }
  }
  return c.holds();
}

PostulateReport mum_strong_uniformity(Ctx c) {
  if (!c.inst.b || c.inst.b->empty() || !c.inst.z || c.inst.a.empty())
    return c.inapplicable("needs a sentence in A, Z and a sentence in B");
  Formula phi = c.inst.a.at(0);
  Formula psi = c.inst.b->at(0);
  BeliefBase r1 = apply_mum(c.op, c.inst, c.inst.k, phi, c.caps);
  BeliefBase r2 = apply_mum(c.op, c.inst, *c.inst.z, psi, c.caps);
  return revision_strong_uniformity_impl(std::move(c), r1, r2);
}

// ---------------------------------------------------------------------------
// Lemma consequences.
// ---------------------------------------------------------------------------

PostulateReport lemma_vacuity(Ctx c) {
  BeliefBase r = apply_revision(c.op, c.inst, c.inst.k, BeliefBase{}, c.caps).result;
  if (r == c.inst.k) return c.holds();
  Json w;
  w["result"] = to_json(r);
  return c.violated(std::move(w));
}

PostulateReport lemma_preservation(Ctx c) {
  BeliefBase r = apply_revision(c.op, c.inst, c.inst.k, c.inst.a, c.caps).result;
  if (is_consistent(r, c.caps)) return c.inapplicable("result is consistent");
  if (c.inst.k.subset_of(r)) return c.holds();
  Json w;
  w["result"] = to_json(r);
  w["lost"] = to_json(c.inst.k.difference(r));
  return c.violated(std::move(w));
}

// Capital-letter coincidence: inputs with the same new part and overlapping K
// produce the same outcome.
PostulateReport lemma_coincidence_union(Ctx c) {
  const auto& k = c.inst.k;
  const auto& a = c.inst.a;
  if (k.intersected(a).empty()) return c.inapplicable("K and A are disjoint");
  if (c.op == OperatorId::ReviseInternal && !is_consistent(k, c.caps))
    return c.inapplicable("K is inconsistent (internal scope)");
  auto run = [&](const BeliefBase& in) {
    if (c.op == OperatorId::PartialExpand)
      return apply_base_op(c.op, c.inst, k, in, c.caps);
    return apply_revision(c.op, c.inst, k, in, c.caps).result;
  };
  BeliefBase r = run(a);
  BeliefBase fresh = a.difference(k);
  require_scannable(k, "coincidence carrier");
  for (std::uint32_t mask = 1; mask < (1u << k.size()); ++mask) {
    BeliefBase b = fresh.unioned(base_from_mask(k, mask));
    BeliefBase rb = run(b);
    if (!(rb == r)) {
      Json w;
      w["B"] = to_json(b);
      w["result_A"] = to_json(r);
      w["result_B"] = to_json(rb);
      return c.violated(std::move(w));
    }
  }
  return c.holds();
}

// ---------------------------------------------------------------------------
// Observation identities.
// ---------------------------------------------------------------------------

PostulateReport obs_upper_bound(Ctx c, FamilyKind kind) {
  const auto& k = c.inst.k;
  const auto& a = c.inst.a;
  bool all = kind == FamilyKind::Choice;
  bool empty_implies = all ? implies_all(BeliefBase{}, a, c.caps)
                           : implies_some(BeliefBase{}, a, c.caps);
  if (empty_implies) return c.inapplicable("every subset implies A");
  SubsetFamily fam = all ? choice_remainders(k, a, c.caps)
                         : package_remainders(k, a, c.caps);
  Evaluator ev = make_eval({k, a}, c.caps);
  std::uint32_t bad_mask = 0;
  bool ok = each_subset(ev, k, ev.all_true(),
                        [&](std::uint32_t mask, const Table& t) {
                          if (implies(ev, t, a, all)) return true;
                          BeliefBase kp = base_from_mask(k, mask);
                          BeliefBase w = upper_bound_witness(k, kp, a, kind, c.caps);
                          if (kp.subset_of(w) && fam.contains(w)) return true;
                          bad_mask = mask;
                          return false;
                        });
  if (ok) return c.holds();
  Json w;
  w["K_prime"] = to_json(base_from_mask(k, bad_mask));
  return c.violated(std::move(w));
}

PostulateReport obs_partial_vs_remainder(Ctx c) {
  if (!c.inst.b || !c.inst.z) return c.inapplicable("needs Z and B");
  SubsetFamily f = partial_sums(c.inst.k, c.inst.a, c.caps);
  if (f.empty()) return c.inapplicable("partial sum set is empty");
  SubsetFamily pkg = package_remainders(*c.inst.z, *c.inst.b, c.caps);
  SubsetFamily cho = choice_remainders(*c.inst.z, *c.inst.b, c.caps);
  bool matched = f.same_members(pkg) || f.same_members(cho);
  if (!matched) return c.inapplicable("no coinciding remainder family");
  if (f.size() == 1) return c.holds();
  Json w;
  w["family"] = to_json(f);
  return c.violated(std::move(w));
}

PostulateReport obs_join_unified(Ctx c) {
  if (!c.inst.b || !c.inst.z) return c.inapplicable("needs Z and B");
  if (c.inst.k == *c.inst.z) return c.inapplicable("bases coincide");
  SubsetFamily f1 = partial_sums(c.inst.k, c.inst.a, c.caps);
  SubsetFamily f2 = partial_sums(*c.inst.z, *c.inst.b, c.caps);
  if (f1.empty() || !f1.same_members(f2))
    return c.inapplicable("families differ or are empty");
  bool singleton = f1.size() == 1;
  BeliefBase u1 = union_select(c.inst.strategy, c.inst.k, f1);
  BeliefBase u2 = union_select(c.inst.strategy, *c.inst.z, f2);
  if (singleton && u1 == u2) return c.holds();
  Json w;
  w["family"] = to_json(f1);
  w["union_1"] = to_json(u1);
  w["union_2"] = to_json(u2);
  return c.violated(std::move(w));
}

PostulateReport obs_overlap_retained(Ctx c) {
  if (!is_consistent(c.inst.k, c.caps)) return c.inapplicable("K is inconsistent");
  RevisionTrace t =
      internal_choice_revise(c.inst.k, c.inst.a, c.inst.strategy, c.caps);
  if (c.inst.k.intersected(c.inst.a).subset_of(t.stage1)) return c.holds();
  Json w;
  w["stage1"] = to_json(t.stage1);
  w["overlap"] = to_json(c.inst.k.intersected(c.inst.a));
  return c.violated(std::move(w));
}

PostulateReport obs_internal_intersection(Ctx c) {
  if (!is_consistent(c.inst.k, c.caps)) return c.inapplicable("K is inconsistent");
  RevisionTrace t =
      internal_choice_revise(c.inst.k, c.inst.a, c.inst.strategy, c.caps);
  if (c.inst.k.intersected(t.result) == t.stage1) return c.holds();
  Json w;
  w["stage1"] = to_json(t.stage1);
  w["K_and_result"] = to_json(c.inst.k.intersected(t.result));
  return c.violated(std::move(w));
}

PostulateReport obs_external_difference(Ctx c) {
  RevisionTrace t =
      external_choice_revise(c.inst.k, c.inst.a, c.inst.strategy, c.caps);
  if (t.stage1.difference(c.inst.k) == t.result.difference(c.inst.k))
    return c.holds();
  Json w;
  w["expanded_minus_K"] = to_json(t.stage1.difference(c.inst.k));
  w["result_minus_K"] = to_json(t.result.difference(c.inst.k));
  return c.violated(std::move(w));
}

PostulateReport obs_external_union(Ctx c) {
  RevisionTrace t =
      external_choice_revise(c.inst.k, c.inst.a, c.inst.strategy, c.caps);
  if (t.result.unioned(c.inst.k) == t.stage1) return c.holds();
  Json w;
  w["expanded"] = to_json(t.stage1);
  w["result_union_K"] = to_json(t.result.unioned(c.inst.k));
  return c.violated(std::move(w));
}

PostulateReport oracle_negation(Ctx c, bool choice) {
  if (static_cast<int>(c.inst.a.size()) > c.caps.negation_cap)
    return c.inapplicable("input exceeds the negation cap");
  BeliefBase clauses = negation_set(c.inst.a, c.caps).clauses;
  SubsetFamily direct = choice
                            ? choice_remainders_vs_negation(c.inst.k, c.inst.a, c.caps)
                            : package_remainders_vs_negation(c.inst.k, c.inst.a, c.caps);
  SubsetFamily explicit_route = choice
                                    ? choice_remainders(c.inst.k, clauses, c.caps)
                                    : package_remainders(c.inst.k, clauses, c.caps);
  if (direct.same_members(explicit_route)) return c.holds();
  Json w;
  w["direct"] = to_json(direct);
  w["explicit"] = to_json(explicit_route);
  return c.violated(std::move(w));
}

}  // namespace

PostulateReport check_postulate(const std::string& name, OperatorId op,
                                const Instance& inst, const Caps& caps) {
  Ctx c(name, op, inst, caps);
  if (name == "pc-inclusion" || name == "cc-inclusion")
    return contraction_inclusion(std::move(c));
  if (name == "pc-success") return contraction_success(std::move(c), false);
  if (name == "cc-success") return contraction_success(std::move(c), true);
  if (name == "pc-uniformity") return contraction_uniformity(std::move(c), false);
  if (name == "cc-uniformity") return contraction_uniformity(std::move(c), true);
  if (name == "pc-relevance") return contraction_relevance(std::move(c), false);
  if (name == "cc-relevance") return contraction_relevance(std::move(c), true);
  if (name == "pc-redundancy") return contraction_redundancy(std::move(c), false);
  if (name == "cc-redundancy") return contraction_redundancy(std::move(c), true);

  if (name == "pe-inclusion") return expansion_inclusion(std::move(c));
  if (name == "pe-preservation") return expansion_preservation(std::move(c));
  if (name == "pe-success") return expansion_success(std::move(c));
  if (name == "pe-coincidence") return expansion_coincidence(std::move(c));
  if (name == "pe-consistency") return expansion_consistency(std::move(c));

  if (name == "rev-inclusion") return revision_inclusion(std::move(c));
  if (name == "rev-success") return revision_success(std::move(c));
  if (name == "rev-iteration") return revision_iteration(std::move(c));
  if (name == "rev-consistency") return revision_consistency(std::move(c));
  if (name == "rev-coincidence") return revision_coincidence(std::move(c));
  if (name == "rev-uniformity") return revision_uniformity(std::move(c));
  if (name == "rev-relevance") return revision_relevance(std::move(c));
  if (name == "rev-redundancy") return revision_redundancy(std::move(c));
  if (name == "rev-confirmation") return revision_confirmation(std::move(c));
  if (name == "rev-consistency-cond")
    return revision_consistency_cond(std::move(c));
  if (name == "rev-uniformity-pairs")
    return revision_uniformity_pairs(std::move(c));
  if (name == "rev-relevance-strict")
    return revision_relevance_strict(std::move(c));
  if (name == "rev-strong-uniformity")
    return revision_strong_uniformity(std::move(c));

  if (name == "mum-inclusion") return mum_inclusion(std::move(c));
  if (name == "mum-success") return mum_success(std::move(c));
  if (name == "mum-consistency") return mum_consistency(std::move(c));
  if (name == "mum-coincidence") return mum_coincidence(std::move(c), true);
  if (name == "mum-coincidence-ext") return mum_coincidence(std::move(c), false);
  if (name == "mum-iteration") return mum_iteration(std::move(c));
  if (name == "mum-relevance") return mum_relevance(std::move(c));
  if (name == "mum-redundancy") return mum_redundancy(std::move(c));
  if (name == "mum-confirmation") return mum_confirmation(std::move(c));
  if (name == "mum-consistency-cond") return mum_consistency_cond(std::move(c));
  if (name == "mum-uniformity-pairs") return mum_uniformity_pairs(std::move(c));
  if (name == "mum-relevance-strict") return mum_relevance_strict(std::move(c));
  if (name == "mum-relevance-as-printed")
    return mum_relevance_as_printed(std::move(c));
  if (name == "mum-strong-uniformity")
    return mum_strong_uniformity(std::move(c));

  if (name == "lemma-vacuity") return lemma_vacuity(std::move(c));
  if (name == "lemma-preservation") return lemma_preservation(std::move(c));
  if (name == "lemma-coincidence-union")
    return lemma_coincidence_union(std::move(c));

  if (name == "obs-upper-bound-package")
    return obs_upper_bound(std::move(c), FamilyKind::Package);
  if (name == "obs-upper-bound-choice")
    return obs_upper_bound(std::move(c), FamilyKind::Choice);
  if (name == "obs-partial-vs-remainder")
    return obs_partial_vs_remainder(std::move(c));
  if (name == "obs-join-unified") return obs_join_unified(std::move(c));
  if (name == "obs-overlap-retained") return obs_overlap_retained(std::move(c));
  if (name == "obs-internal-intersection")
    return obs_internal_intersection(std::move(c));
  if (name == "obs-external-difference")
    return obs_external_difference(std::move(c));
  if (name == "obs-external-union") return obs_external_union(std::move(c));
  if (name == "oracle-negation-choice")
    return oracle_negation(std::move(c), true);
  if (name == "oracle-negation-package")
    return oracle_negation(std::move(c), false);

  throw std::invalid_argument("unknown postulate: " + name);
}

// ---------------------------------------------------------------------------
// Pool, candidates, generator.
// ---------------------------------------------------------------------------

std::vector<Formula> build_pool(int atom_count, int depth) {
  static const char* names[] = {"p", "q", "r", "s"};
  atom_count = std::clamp(atom_count, 1, 4);
  std::vector<Formula> literals;
  for (int i = 0; i < atom_count; ++i) {
    Formula a = Formula::atom(names[i]);
    literals.push_back(a);
    literals.push_back(Formula::neg(a));
  }
  std::vector<Formula> pool = literals;
  pool.push_back(Formula::top());
  pool.push_back(Formula::bottom());
  if (depth >= 2) {
    for (const auto& l : literals)
      for (const auto& r : literals) {
        pool.push_back(Formula::conj(l, r));
        pool.push_back(Formula::disj(l, r));
        pool.push_back(Formula::impl(l, r));
        pool.push_back(Formula::iff(l, r));
      }
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

std::vector<BeliefBase> redundancy_candidates(const BeliefBase& a,
                                              RedundancyMode mode,
                                              const std::vector<Formula>& pool,
                                              const Caps& caps,
                                              std::size_t limit) {
  std::vector<BeliefBase> out;
  if (a.empty() && mode != RedundancyMode::Internal) return out;
  std::vector<Formula> qualifying;
  for (const auto& z : pool) {
    BeliefBase single{z};
    bool ok = false;
    switch (mode) {
      case RedundancyMode::Package:
        ok = implies_some(single, a, caps);
        break;
      case RedundancyMode::Choice:
        ok = implies_all(single, a, caps);
        break;
      case RedundancyMode::Internal: {
        ok = true;
        for (const auto& psi : a)
          if (!entails(single, Formula::neg(psi), caps)) {
            ok = false;
            break;
          }
        break;
      }
    }
    if (ok) qualifying.push_back(z);
    if (qualifying.size() >= limit) break;
  }
  for (const auto& z : qualifying) out.push_back(BeliefBase{z});
  if (qualifying.size() >= 2)
    out.push_back(BeliefBase{qualifying[0], qualifying[1]});
  return out;
}

namespace {

BeliefBase sample_base(std::mt19937_64& rng, const std::vector<Formula>& pool,
                       int max_size) {
  std::uniform_int_distribution<int> sz(0, std::max(0, max_size));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<Formula> fs;
  int n = sz(rng);
  for (int i = 0; i < n; ++i) fs.push_back(pool[pick(rng)]);
  return BeliefBase(std::move(fs));
}

Formula neg2(const Formula& f) { return Formula::neg(Formula::neg(f)); }

// Forced corner cases; these stay ahead of the random stream so that every
// suite exercises the degenerate inputs no matter how small `num` is.
std::vector<Instance> corner_instances() {
  Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");
  Formula np = Formula::neg(p), nq = Formula::neg(q), nr = Formula::neg(r);
  Formula contradiction = Formula::conj(p, np);
  Formula taut = Formula::disj(p, np);
  std::vector<Instance> out;
  auto add = [&](std::string label, BeliefBase k, BeliefBase a,
                 std::optional<BeliefBase> b = std::nullopt,
                 std::optional<BeliefBase> z = std::nullopt) {
    Instance inst;
    inst.label = std::move(label);
    inst.k = std::move(k);
    inst.a = std::move(a);
    inst.b = std::move(b);
    inst.z = std::move(z);
    out.push_back(std::move(inst));
  };
  add("empty-input", {p, q}, {});
  add("bottom-input", {p}, {Formula::bottom()});
  add("all-contradictions", {p, q}, {Formula::bottom(), contradiction});
  add("inconsistent-base", {p, np, q}, {q});
  add("overlap", {p, q}, {q, r}, BeliefBase{q, r, p});
  add("tautologies", {p}, {Formula::top(), taut});
  add("mum-coincidence", {q, neg2(q), p}, {q}, BeliefBase{nq});
  add("pair-swap", {p}, {q}, BeliefBase{p}, BeliefBase{q});
  add("empty-base", {}, {p});
  add("confirmation", {p}, {p});
  add("partial-vs-package", {}, {p}, BeliefBase{q}, BeliefBase{p});
  add("conflict", {q}, {nq});
  add("contract-two", {p, nq, nr}, {q, r});
  add("expand-then-clear", {q}, {p, Formula::impl(p, nq)});
  add("undecided", {p, np}, {p});
  add("inconsistent-new-part", {p}, {q, nq}, BeliefBase{q, nq}, BeliefBase{r});
  add("uniform-equivalent", {p, q}, {q}, BeliefBase{neg2(q)});
  add("redundancy-feed", {p, q}, {q}, std::nullopt,
      BeliefBase{Formula::conj(nq, r)});
  add("pair-three", {p}, {q, r}, BeliefBase{q, r}, BeliefBase{p, q});
  add("undecided-half", {p, q}, {q}, BeliefBase{q}, BeliefBase{p, q});
  add("undecided-half-swap", {p, q}, {q}, BeliefBase{p}, BeliefBase{q, p});
  return out;
}

}  // namespace

std::vector<Instance> generate_instances(const GenConfig& config) {
  auto pool = std::make_shared<const std::vector<Formula>>(
      build_pool(config.atoms, config.pool_depth));
  std::mt19937_64 rng(config.seed);
  std::vector<Instance> out;
  std::vector<Instance> corners = corner_instances();
  for (int i = 0; i < config.num; ++i) {
    Instance inst;
    if (i < static_cast<int>(corners.size())) {
      inst = corners[i];
    } else {
      inst.label = "random";
      inst.k = sample_base(rng, *pool, config.max_base);
      inst.a = sample_base(rng, *pool, config.max_input);
      std::uniform_int_distribution<int> coin(0, 3);
      switch (coin(rng)) {
        case 0:
          inst.b = inst.a;  // uniformity trivially applicable
          break;
        case 1: {
          // Equivalent variant: double-negate one member.
          std::vector<Formula> fs(inst.a.begin(), inst.a.end());
          if (!fs.empty()) fs[0] = neg2(fs[0]);
          inst.b = BeliefBase(std::move(fs));
          break;
        }
        default:
          inst.b = sample_base(rng, *pool, config.max_input);
          break;
      }
      if (coin(rng) == 0 && !inst.a.empty()) {
        // Paired instance sharing the expanded base, for the uniformity
        // postulates that relate two revisions.
        BeliefBase whole = inst.k.unioned(inst.a);
        inst.z = sample_base(rng, *pool, 2).intersected(whole);
        inst.b = whole.difference(*inst.z);
      } else {
        inst.z = sample_base(rng, *pool, 2);
      }
    }
    inst.index = i;
    inst.seed = config.seed;
    inst.pool = pool;
    out.push_back(std::move(inst));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

std::string to_string(Suite s) {
  switch (s) {
    case Suite::T1: return "T1";
    case Suite::T2: return "T2";
    case Suite::T3: return "T3";
    case Suite::T4: return "T4";
    case Suite::T5: return "T5";
    case Suite::T6: return "T6";
    case Suite::T7: return "T7";
    case Suite::L1: return "L1";
    case Suite::OBS: return "OBS";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), ::toupper);
  if (n == "T1") return Suite::T1;
  if (n == "T2") return Suite::T2;
  if (n == "T3") return Suite::T3;
  if (n == "T4") return Suite::T4;
  if (n == "T5") return Suite::T5;
  if (n == "T6") return Suite::T6;
  if (n == "T7") return Suite::T7;
  if (n == "L1") return Suite::L1;
  if (n == "OBS") return Suite::OBS;
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::pair<std::string, OperatorId>> suite_checks(Suite s) {
  using P = std::pair<std::string, OperatorId>;
  switch (s) {
    case Suite::T1:
      return {P{"pc-inclusion", OperatorId::PackageContract},
              P{"pc-success", OperatorId::PackageContract},
              P{"pc-uniformity", OperatorId::PackageContract},
              P{"pc-relevance", OperatorId::PackageContract},
              P{"pc-redundancy", OperatorId::PackageContract}};
    case Suite::T2:
      return {P{"cc-inclusion", OperatorId::ChoiceContract},
              P{"cc-success", OperatorId::ChoiceContract},
              P{"cc-uniformity", OperatorId::ChoiceContract},
              P{"cc-relevance", OperatorId::ChoiceContract},
              P{"cc-redundancy", OperatorId::ChoiceContract}};
    case Suite::T3:
      return {P{"pe-inclusion", OperatorId::PartialExpand},
              P{"pe-preservation", OperatorId::PartialExpand},
              P{"pe-success", OperatorId::PartialExpand},
              P{"pe-coincidence", OperatorId::PartialExpand},
              P{"pe-inclusion", OperatorId::ConsistentExpand},
              P{"pe-preservation", OperatorId::ConsistentExpand},
              P{"pe-success", OperatorId::ConsistentExpand},
              P{"pe-coincidence", OperatorId::ConsistentExpand},
              P{"pe-consistency", OperatorId::ConsistentExpand}};
    case Suite::T4:
      return {P{"rev-inclusion", OperatorId::ReviseInternal},
              P{"rev-success", OperatorId::ReviseInternal},
              P{"rev-iteration", OperatorId::ReviseInternal},
              P{"rev-consistency", OperatorId::ReviseInternal},
              P{"rev-coincidence", OperatorId::ReviseInternal},
              P{"rev-uniformity", OperatorId::ReviseInternal},
              P{"rev-relevance", OperatorId::ReviseInternal},
              P{"rev-redundancy", OperatorId::ReviseInternal}};
    case Suite::T5:
      return {P{"rev-inclusion", OperatorId::ReviseExternal},
              P{"rev-success", OperatorId::ReviseExternal},
              P{"rev-confirmation", OperatorId::ReviseExternal},
              P{"rev-consistency-cond", OperatorId::ReviseExternal},
              P{"rev-coincidence", OperatorId::ReviseExternal},
              P{"rev-uniformity-pairs", OperatorId::ReviseExternal},
              P{"rev-relevance-strict", OperatorId::ReviseExternal},
              P{"rev-strong-uniformity", OperatorId::ReviseExternal}};
    case Suite::T6:
      return {P{"mum-inclusion", OperatorId::MumInternal},
              P{"mum-success", OperatorId::MumInternal},
              P{"mum-consistency", OperatorId::MumInternal},
              P{"mum-coincidence", OperatorId::MumInternal},
              P{"mum-iteration", OperatorId::MumInternal},
              P{"mum-relevance", OperatorId::MumInternal},
              P{"mum-redundancy", OperatorId::MumInternal}};
    case Suite::T7:
      return {P{"mum-inclusion", OperatorId::MumExternal},
              P{"mum-success", OperatorId::MumExternal},
              P{"mum-confirmation", OperatorId::MumExternal},
              P{"mum-consistency-cond", OperatorId::MumExternal},
              P{"mum-coincidence-ext", OperatorId::MumExternal},
              P{"mum-uniformity-pairs", OperatorId::MumExternal},
              P{"mum-relevance-strict", OperatorId::MumExternal},
              P{"mum-strong-uniformity", OperatorId::MumExternal}};
    case Suite::L1:
      return {P{"lemma-vacuity", OperatorId::ReviseInternal},
              P{"lemma-vacuity", OperatorId::ReviseExternal},
              P{"lemma-preservation", OperatorId::ReviseInternal},
              P{"lemma-preservation", OperatorId::ReviseExternal},
              P{"lemma-coincidence-union", OperatorId::PartialExpand},
              P{"lemma-coincidence-union", OperatorId::ReviseInternal},
              P{"lemma-coincidence-union", OperatorId::ReviseExternal}};
    case Suite::OBS:
      return {P{"obs-upper-bound-package", OperatorId::PackageContract},
              P{"obs-upper-bound-choice", OperatorId::ChoiceContract},
              P{"obs-partial-vs-remainder", OperatorId::PartialExpand},
              P{"obs-join-unified", OperatorId::PartialExpand},
              P{"obs-overlap-retained", OperatorId::ReviseInternal},
              P{"obs-internal-intersection", OperatorId::ReviseInternal},
              P{"obs-external-difference", OperatorId::ReviseExternal},
              P{"obs-external-union", OperatorId::ReviseExternal},
              P{"oracle-negation-choice", OperatorId::ChoiceContract},
              P{"oracle-negation-package", OperatorId::PackageContract}};
  }
  return {};
}

SuiteSummary run_suite(Suite s, const SelectionStrategy& strategy,
                       const GenConfig& config, const Caps& caps,
                       const std::string& only_postulate) {
  constexpr std::size_t kMaxStoredWitnesses = 25;
  std::vector<std::pair<std::string, OperatorId>> checks = suite_checks(s);
  if (!only_postulate.empty()) {
    std::erase_if(checks, [&](const auto& pr) { return pr.first != only_postulate; });
    if (checks.empty()) {
      // Allow the opt-in discrepancy check and any other known predicate.
      OperatorId op = s == Suite::T7 ? OperatorId::MumExternal
                                     : OperatorId::ReviseExternal;
      checks.emplace_back(only_postulate, op);
    }
  }

  std::vector<Instance> instances = generate_instances(config);

  SuiteSummary sum;
  sum.theorem = to_string(s);
  sum.strategy = strategy.name();
  sum.instances = static_cast<int>(instances.size());

  Json per;
  for (const auto& [name, op] : checks) {
    std::string key = name + "@" + op_tag(op);
    if (!per.contains(key)) {
      per[key] = Json{{"holds", 0}, {"violated", 0}, {"inapplicable", 0}};
    }
  }
  Json witnesses = Json::array();

  for (auto& inst : instances) {
    inst.strategy = strategy;
    bool t4_out_of_scope =
        s == Suite::T4 && !is_consistent(inst.k, caps);
    for (const auto& [name, op] : checks) {
      std::string key = name + "@" + op_tag(op);
      Verdict v;
      std::string note;
      std::optional<Json> witness;
      if (t4_out_of_scope) {
        v = Verdict::Inapplicable;
        note = "inconsistent base (theorem scope)";
      } else {
        PostulateReport rep = check_postulate(name, op, inst, caps);
        v = rep.verdict;
        note = rep.note;
        witness = rep.witness;
      }
      switch (v) {
        case Verdict::Holds:
          ++sum.holds;
          per[key]["holds"] = per[key]["holds"].get<long long>() + 1;
          break;
        case Verdict::Violated: {
          ++sum.violated;
          per[key]["violated"] = per[key]["violated"].get<long long>() + 1;
          if (witnesses.size() < kMaxStoredWitnesses) {
            Json w;
            w["postulate"] = key;
            w["witness"] = witness ? *witness : Json();
            if (!note.empty()) w["note"] = note;
            witnesses.push_back(std::move(w));
          }
          break;
        }
        case Verdict::Inapplicable:
          ++sum.inapplicable;
          per[key]["inapplicable"] = per[key]["inapplicable"].get<long long>() + 1;
          break;
      }
    }
  }

  Json j;
  j["theorem"] = sum.theorem;
  j["strategy"] = sum.strategy;
  j["config"] = Json{{"num", config.num},
                     {"seed", config.seed},
                     {"max_base", config.max_base},
                     {"max_input", config.max_input},
                     {"atoms", config.atoms},
                     {"pool_depth", config.pool_depth}};
  j["instances"] = sum.instances;
  j["holds"] = sum.holds;
  j["violated"] = sum.violated;
  j["inapplicable"] = sum.inapplicable;
  j["postulates"] = per;
  j["witnesses"] = witnesses;
  sum.json = std::move(j);
  return sum;
}

}  // namespace chrev
