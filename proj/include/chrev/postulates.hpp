#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chrev/io.hpp"
#include "chrev/operators.hpp"

namespace chrev {

// Which operator a postulate predicate is evaluated against. Revision-level
// predicates accept either revision operator, which is how the worked
// counterexamples are checked cross-wise (an internal result against the
// external relevance postulate and vice versa).
enum class OperatorId {
  PackageContract,
  ChoiceContract,
  PartialExpand,
  ConsistentExpand,
  ReviseInternal,
  ReviseExternal,
  MumInternal,
  MumExternal,
};

std::string op_tag(OperatorId op);

struct Instance {
  BeliefBase k;
  BeliefBase a;
  std::optional<BeliefBase> b;
  std::optional<BeliefBase> z;
  SelectionStrategy strategy;
  std::uint64_t seed = 0;
  int index = 0;
  std::string label = "manual";
  std::shared_ptr<const std::vector<Formula>> pool;
};

enum class Verdict { Holds, Violated, Inapplicable };

std::string to_string(Verdict v);

struct PostulateReport {
  std::string postulate;
  OperatorId op;
  Instance instance;
  Verdict verdict = Verdict::Inapplicable;
  std::optional<Json> witness;  // structured counterexample on violation
  std::string note;             // e.g. candidate counts, known discrepancies
};

// Evaluates one named postulate against the operator, on the instance's data
// and strategy. Universal sub-conditions are decided exhaustively over the
// relevant finite carrier; existential ones by exhaustive search between their
// stated bounds. Throws std::invalid_argument for unknown postulate names.
PostulateReport check_postulate(const std::string& name, OperatorId op,
                                const Instance& inst, const Caps& caps = {});

struct GenConfig {
  int num = 500;
  std::uint64_t seed = 0;
  int max_base = 5;
  int max_input = 3;
  int atoms = 3;       // at most 4
  int pool_depth = 2;  // 1 = literals and constants, 2 = adds binary combos
};

// Deterministic formula pool: atoms, their negations, the constants, and (at
// depth 2) every binary combination of two literals.
std::vector<Formula> build_pool(int atom_count, int depth);

// Reproducible instance stream: a fixed block of forced corner cases (empty
// and contradictory inputs, inconsistent bases, overlaps, paired bases for the
// uniformity postulates) followed by random draws from the pool.
std::vector<Instance> generate_instances(const GenConfig& config);

enum class RedundancyMode { Package, Choice, Internal };

// Small Z sets from the pool satisfying the redundancy side condition of the
// given mode, for feeding the redundancy postulates. Candidate enumeration
// gives falsification power, not proof.
std::vector<BeliefBase> redundancy_candidates(const BeliefBase& a,
                                              RedundancyMode mode,
                                              const std::vector<Formula>& pool,
                                              const Caps& caps = {},
                                              std::size_t limit = 6);

enum class Suite { T1, T2, T3, T4, T5, T6, T7, L1, OBS };

std::string to_string(Suite s);
Suite parse_suite(const std::string& name);

// The (postulate, operator) pairs a suite runs by default.
std::vector<std::pair<std::string, OperatorId>> suite_checks(Suite s);

struct SuiteSummary {
  std::string theorem;
  std::string strategy;
  int instances = 0;
  long long holds = 0;
  long long violated = 0;
  long long inapplicable = 0;
  Json json;  // full report: config, per-postulate tallies, witnesses
};

// Runs every check of the suite over a generated instance corpus. The T4
// checks skip inconsistent bases (the theorem's scope). `only_postulate`
// restricts the run to one named check; the name "mum-relevance-as-printed"
// selects the verbatim text of the external relevance postulate, whose
// violations are expected and tagged as a known discrepancy.
SuiteSummary run_suite(Suite s, const SelectionStrategy& strategy,
                       const GenConfig& config, const Caps& caps = {},
                       const std::string& only_postulate = "");

}  // namespace chrev
