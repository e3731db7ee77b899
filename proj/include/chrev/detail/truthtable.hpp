#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chrev/belief_base.hpp"
#include "chrev/formula.hpp"

namespace chrev::detail {

// Truth table of a formula over a fixed atom universe, packed into 64-bit
// words: bit v is set iff valuation v satisfies the formula, where bit i of v
// assigns atoms[i]. All tables produced by one Evaluator share the same width.
struct Table {
  std::vector<std::uint64_t> bits;

  bool none() const {
    for (auto w : bits)
      if (w) return false;
    return true;
  }
};

class Evaluator {
 public:
  explicit Evaluator(std::vector<std::string> atoms);

  const std::vector<std::string>& atoms() const { return atoms_; }

  const Table& table(const Formula& f) const;
  Table conjunction(const BeliefBase& base) const;  // all-ones for the empty base
  Table all_true() const;

  static Table and_(const Table& a, const Table& b);
  Table not_(const Table& a) const;  // masked to the valuation count

  // X |= f, where X is given as the conjunction table of its members.
  bool entails(const Table& conj_x, const Formula& f) const;
  bool satisfiable(const Table& conj_x) const { return !conj_x.none(); }

 private:
  Table build(const Formula& f) const;

  std::vector<std::string> atoms_;
  std::size_t words_;
  std::uint64_t last_word_mask_;
  mutable std::map<std::string, Table> cache_;  // keyed by canonical text
};

}  // namespace chrev::detail
