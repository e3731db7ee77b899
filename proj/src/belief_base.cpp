#include "chrev/belief_base.hpp"

#include <algorithm>

namespace chrev {

BeliefBase::BeliefBase(std::vector<Formula> formulas)
    : formulas_(std::move(formulas)) {
  std::sort(formulas_.begin(), formulas_.end());
  formulas_.erase(std::unique(formulas_.begin(), formulas_.end()),
                  formulas_.end());
}

BeliefBase::BeliefBase(std::initializer_list<Formula> formulas)
    : BeliefBase(std::vector<Formula>(formulas)) {}

bool BeliefBase::contains(const Formula& f) const {
  return std::binary_search(formulas_.begin(), formulas_.end(), f);
}

bool BeliefBase::subset_of(const BeliefBase& o) const {
  return std::includes(o.formulas_.begin(), o.formulas_.end(),
                       formulas_.begin(), formulas_.end());
}

bool BeliefBase::proper_subset_of(const BeliefBase& o) const {
  return size() < o.size() && subset_of(o);
}

BeliefBase BeliefBase::unioned(const BeliefBase& o) const {
  std::vector<Formula> out;
  out.reserve(size() + o.size());
  std::set_union(formulas_.begin(), formulas_.end(), o.formulas_.begin(),
                 o.formulas_.end(), std::back_inserter(out));
  BeliefBase r;
  r.formulas_ = std::move(out);
  return r;
}

BeliefBase BeliefBase::intersected(const BeliefBase& o) const {
  std::vector<Formula> out;
  std::set_intersection(formulas_.begin(), formulas_.end(), o.formulas_.begin(),
                        o.formulas_.end(), std::back_inserter(out));
  BeliefBase r;
  r.formulas_ = std::move(out);
  return r;
}

BeliefBase BeliefBase::difference(const BeliefBase& o) const {
  std::vector<Formula> out;
  std::set_difference(formulas_.begin(), formulas_.end(), o.formulas_.begin(),
                      o.formulas_.end(), std::back_inserter(out));
  BeliefBase r;
  r.formulas_ = std::move(out);
  return r;
}

BeliefBase BeliefBase::with(const Formula& f) const {
  if (contains(f)) return *this;
  std::vector<Formula> out = formulas_;
  out.insert(std::upper_bound(out.begin(), out.end(), f), f);
  BeliefBase r;
  r.formulas_ = std::move(out);
  return r;
}

BeliefBase BeliefBase::without(const Formula& f) const {
  std::vector<Formula> out;
  out.reserve(formulas_.size());
  for (const auto& g : formulas_)
    if (!(g == f)) out.push_back(g);
  BeliefBase r;
  r.formulas_ = std::move(out);
  return r;
}

std::vector<std::string> BeliefBase::texts() const {
  std::vector<std::string> out;
  out.reserve(formulas_.size());
  for (const auto& f : formulas_) out.push_back(f.text());
  return out;
}

std::string BeliefBase::joined() const {
  std::string out;
  for (const auto& f : formulas_) {
    if (!out.empty()) out += ", ";
    out += f.text();
  }
  return out;
}

bool BeliefBase::operator<(const BeliefBase& o) const {
  return std::lexicographical_compare(
      formulas_.begin(), formulas_.end(), o.formulas_.begin(), o.formulas_.end());
}

}  // namespace chrev
