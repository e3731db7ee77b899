#include "chrev/detail/truthtable.hpp"

#include <algorithm>
#include <stdexcept>

namespace chrev::detail {

Evaluator::Evaluator(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.size() >= 26)
    throw std::invalid_argument("atom universe too large for enumeration");
  std::uint64_t valuations = 1ull << atoms_.size();
  words_ = static_cast<std::size_t>((valuations + 63) / 64);
  std::uint64_t rem = valuations % 64;
  last_word_mask_ = rem ? ((1ull << rem) - 1) : ~0ull;
}

Table Evaluator::all_true() const {
  Table t;
  t.bits.assign(words_, ~0ull);
  t.bits.back() &= last_word_mask_;
  return t;
}

Table Evaluator::and_(const Table& a, const Table& b) {
  Table t = a;
  for (std::size_t i = 0; i < t.bits.size(); ++i) t.bits[i] &= b.bits[i];
  return t;
}

Table Evaluator::not_(const Table& a) const {
  Table t = a;
  for (auto& w : t.bits) w = ~w;
  t.bits.back() &= last_word_mask_;
  return t;
}

const Table& Evaluator::table(const Formula& f) const {
  auto it = cache_.find(f.text());
  if (it != cache_.end()) return it->second;
  return cache_.emplace(f.text(), build(f)).first->second;
}

Table Evaluator::build(const Formula& f) const {
  switch (f.kind()) {
    case Connective::Top:
      return all_true();
    case Connective::Bottom: {
      Table t;
      t.bits.assign(words_, 0);
      return t;
    }
    case Connective::Atom: {
      auto pos = std::lower_bound(atoms_.begin(), atoms_.end(), f.atom_name());
      if (pos == atoms_.end() || *pos != f.atom_name())
        throw std::logic_error("atom outside evaluator universe: " + f.atom_name());
      std::size_t i = static_cast<std::size_t>(pos - atoms_.begin());
      Table t;
      t.bits.assign(words_, 0);
      if (i < 6) {
        // Bit pattern repeats within a word, e.g. 0b1010... for atom 0.
        std::uint64_t pat = 0;
        for (std::uint64_t v = 0; v < 64; ++v)
          if ((v >> i) & 1) pat |= 1ull << v;
        for (auto& w : t.bits) w = pat;
      } else {
        // Atom index selects whole words: word w covers valuations w*64...
        for (std::size_t w = 0; w < words_; ++w)
          if ((w >> (i - 6)) & 1) t.bits[w] = ~0ull;
      }
      t.bits.back() &= last_word_mask_;
      return t;
    }
    case Connective::Not:
      return not_(table(f.child()));
    case Connective::And:
      return and_(table(f.lhs()), table(f.rhs()));
    case Connective::Or: {
      Table t = table(f.lhs());
      const Table& r = table(f.rhs());
      for (std::size_t i = 0; i < t.bits.size(); ++i) t.bits[i] |= r.bits[i];
      return t;
    }
    case Connective::Implies: {
      Table t = not_(table(f.lhs()));
      const Table& r = table(f.rhs());
      for (std::size_t i = 0; i < t.bits.size(); ++i) t.bits[i] |= r.bits[i];
      return t;
    }
    case Connective::Iff: {
      Table t = table(f.lhs());
      const Table& r = table(f.rhs());
      for (std::size_t i = 0; i < t.bits.size(); ++i)
        t.bits[i] = ~(t.bits[i] ^ r.bits[i]);
      t.bits.back() &= last_word_mask_;
      return t;
    }
  }
  throw std::logic_error("unreachable formula kind");
}

Table Evaluator::conjunction(const BeliefBase& base) const {
  Table t = all_true();
  for (const auto& f : base) t = and_(t, table(f));
  return t;
}

bool Evaluator::entails(const Table& conj_x, const Formula& f) const {
  const Table& tf = table(f);
  for (std::size_t i = 0; i < conj_x.bits.size(); ++i)
    if (conj_x.bits[i] & ~tf.bits[i]) return false;
  return true;
}

}  // namespace chrev::detail
