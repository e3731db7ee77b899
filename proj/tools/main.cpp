// chrev: belief-base change operators and postulate suites on the command line.
//
// Exit codes: 0 success, 1 postulate violations (check mode), 2 formula or
// file syntax error, 3 capacity (enumeration cap) error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chrev/errors.hpp"
#include "chrev/io.hpp"
#include "chrev/operators.hpp"
#include "chrev/postulates.hpp"

using namespace chrev;

namespace {

struct Options {
  std::string base_path;
  std::string input;
  std::string input_file;
  std::string mode;
  std::string strategy = "full";
  std::string priority_path;
  std::string kind = "choice";
  std::string theorem = "T4";
  std::string postulate;
  int samples = 500;
  std::uint64_t seed = 0;
  int atom_cap = 16;
  int enum_cap = 14;
  std::string output = "text";
};

SelectionStrategy make_strategy(const Options& opt) {
  PriorityOrder priority;
  if (!opt.priority_path.empty()) priority = load_priority_file(opt.priority_path);
  if (opt.strategy == "full") {
    SelectionStrategy s = SelectionStrategy::full();
    s.priority = std::move(priority);
    return s;
  }
  if (opt.strategy == "maxichoice") {
    if (opt.priority_path.empty())
      throw CLI::ValidationError("--strategy", "maxichoice requires --priority");
    return SelectionStrategy::maxichoice(std::move(priority));
  }
  if (opt.strategy.rfind("topk:", 0) == 0) {
    if (opt.priority_path.empty())
      throw CLI::ValidationError("--strategy", "topk requires --priority");
    int k = std::stoi(opt.strategy.substr(5));
    return SelectionStrategy::top(k, std::move(priority));
  }
  throw CLI::ValidationError("--strategy",
                             "expected full, maxichoice or topk:<k>");
}

BeliefBase load_input(const Options& opt) {
  if (!opt.input_file.empty()) return load_base_file(opt.input_file);
  return parse_formula_list(opt.input);
}

void print_result_base(const BeliefBase& result, const std::string& header) {
  // The text form is itself a valid base file: trace lines are comments.
  std::cout << header;
  std::cout << render_base_text(result);
}

int run_operator(const Options& opt) {
  BeliefBase k = opt.base_path.empty() ? BeliefBase{} : load_base_file(opt.base_path);
  BeliefBase a = load_input(opt);
  SelectionStrategy strategy = make_strategy(opt);
  Caps caps;
  caps.atom_cap = opt.atom_cap;
  caps.enum_cap = opt.enum_cap;

  std::optional<RevisionTrace> trace;
  BeliefBase result;
  if (opt.mode == "contract-package") {
    result = package_contract(k, a, strategy, caps);
  } else if (opt.mode == "contract-choice") {
    result = choice_contract(k, a, strategy, caps);
  } else if (opt.mode == "expand") {
    result = partial_expand(k, a, strategy, caps);
  } else if (opt.mode == "revise-internal") {
    trace = internal_choice_revise(k, a, strategy, caps);
    result = trace->result;
  } else if (opt.mode == "revise-external") {
    trace = external_choice_revise(k, a, strategy, caps);
    result = trace->result;
  } else if (opt.mode == "mum-internal" || opt.mode == "mum-external") {
    if (a.empty()) {
      result = k;  // empty input: nothing to make up one's mind about
    } else {
      if (a.size() != 1)
        throw CLI::ValidationError("--input",
                                   "making up one's mind takes one formula");
      BeliefBase pair = undecided_pair(a.at(0));
      trace = opt.mode == "mum-internal"
                  ? internal_choice_revise(k, pair, strategy, caps)
                  : external_choice_revise(k, pair, strategy, caps);
      result = trace->result;
    }
  } else {
    throw CLI::ValidationError("--mode", "unknown mode " + opt.mode);
  }

  if (opt.output == "json") {
    Json j;
    j["mode"] = opt.mode;
    j["strategy"] = strategy.name();
    if (trace) j["trace"] = to_json(*trace);
    j["result"] = to_json(result);
    std::cout << j.dump(2) << "\n";
  } else {
    std::string header = "# mode: " + opt.mode + "  strategy: " + strategy.name() + "\n";
    if (trace) {
      header += "# stage1: " + trace->stage1.joined() + "\n";
      header += "# aux: " + trace->aux.joined() + "\n";
    }
    print_result_base(result, header);
  }
  return 0;
}

int run_remainders(const Options& opt) {
  BeliefBase k = opt.base_path.empty() ? BeliefBase{} : load_base_file(opt.base_path);
  BeliefBase a = load_input(opt);
  Caps caps;
  caps.atom_cap = opt.atom_cap;
  caps.enum_cap = opt.enum_cap;

  Json j;
  if (opt.kind == "package") {
    j = to_json(package_remainders(k, a, caps));
  } else if (opt.kind == "choice") {
    j = to_json(choice_remainders(k, a, caps));
  } else if (opt.kind == "partial") {
    j = to_json(partial_sums(k, a, caps));
  } else if (opt.kind == "negation") {
    j = to_json(negation_set(a, caps));
  } else if (opt.kind == "choice-neg") {
    j = to_json(choice_remainders_vs_negation(k, a, caps));
  } else if (opt.kind == "package-neg") {
    j = to_json(package_remainders_vs_negation(k, a, caps));
  } else {
    throw CLI::ValidationError(
        "--kind",
        "expected package, choice, partial, negation, choice-neg or package-neg");
  }
  std::cout << j.dump() << "\n";
  return 0;
}

int run_check(const Options& opt) {
  SelectionStrategy strategy = make_strategy(opt);
  Caps caps;
  caps.atom_cap = opt.atom_cap;
  caps.enum_cap = opt.enum_cap;
  GenConfig config;
  config.num = opt.samples;
  config.seed = opt.seed;
  SuiteSummary sum =
      run_suite(parse_suite(opt.theorem), strategy, config, caps, opt.postulate);
  std::cout << sum.json.dump(2) << "\n";
  std::cerr << sum.theorem << " [" << sum.strategy << "]: " << sum.holds
            << " holds, " << sum.violated << " violated, " << sum.inapplicable
            << " inapplicable\n";
  return sum.violated > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"belief-base change operators and postulate suites"};
  app.add_option("--base", opt.base_path, "belief base file (one formula per line)");
  app.add_option("--input", opt.input, "input formulas, comma separated");
  app.add_option("--input-file", opt.input_file, "input formulas from a base file");
  app.add_option("--mode", opt.mode,
                 "contract-package | contract-choice | expand | revise-internal | "
                 "revise-external | mum-internal | mum-external | remainders | check")
      ->required();
  app.add_option("--strategy", opt.strategy, "full | maxichoice | topk:<k>");
  app.add_option("--priority", opt.priority_path, "priority file: 'rank formula' lines");
  app.add_option("--kind", opt.kind,
                 "remainders mode: package | choice | partial | negation | "
                 "choice-neg | package-neg");
  app.add_option("--theorem", opt.theorem, "check mode: T1..T7, L1 or OBS");
  app.add_option("--postulate", opt.postulate, "check mode: run one named postulate");
  app.add_option("--samples", opt.samples, "check mode: generated instances");
  app.add_option("--seed", opt.seed, "check mode: instance stream seed");
  app.add_option("--atom-cap", opt.atom_cap, "atom universe cap");
  app.add_option("--enum-cap", opt.enum_cap, "subset enumeration cap");
  app.add_option("--output", opt.output, "text | json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (opt.mode == "check") return run_check(opt);
    if (opt.mode == "remainders") return run_remainders(opt);
    return run_operator(opt);
  } catch (const ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
}
