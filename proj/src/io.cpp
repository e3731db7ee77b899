#include "chrev/io.hpp"

#include <fstream>
#include <sstream>

#include "chrev/errors.hpp"

namespace chrev {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Calls fn(line, byte offset of line start) for every line.
template <typename Fn>
void for_lines(const std::string& text, Fn fn) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::size_t end = nl == std::string::npos ? text.size() : nl;
    fn(text.substr(pos, end - pos), pos);
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
}

}  // namespace

BeliefBase parse_base_text(const std::string& text) {
  std::vector<Formula> formulas;
  for_lines(text, [&](const std::string& raw, std::size_t offset) {
    std::string line = raw.substr(0, raw.find('#'));
    std::size_t lead = line.find_first_not_of(" \t\r\n");
    line = strip(line);
    if (line.empty()) return;
    try {
      formulas.push_back(parse_formula(line));
    } catch (const ParseError& e) {
      throw ParseError("in '" + line + "'", offset + lead + e.offset(),
                       e.expected());
    }
  });
  return BeliefBase(std::move(formulas));
}

BeliefBase load_base_file(const std::string& path) {
  return parse_base_text(read_file(path));
}

std::string render_base_text(const BeliefBase& base) {
  std::string out;
  for (const auto& f : base) {
    out += f.text();
    out += '\n';
  }
  return out;
}

BeliefBase parse_formula_list(const std::string& text) {
  std::vector<Formula> formulas;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::size_t end = comma == std::string::npos ? text.size() : comma;
    std::string piece = strip(text.substr(pos, end - pos));
    if (!piece.empty()) {
      try {
        formulas.push_back(parse_formula(piece));
      } catch (const ParseError& e) {
        throw ParseError("in '" + piece + "'", pos + e.offset(), e.expected());
      }
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return BeliefBase(std::move(formulas));
}

PriorityOrder parse_priority_text(const std::string& text) {
  PriorityOrder order;
  for_lines(text, [&](const std::string& raw, std::size_t offset) {
    std::string line = raw.substr(0, raw.find('#'));
    line = strip(line);
    if (line.empty()) return;
    std::istringstream in(line);
    long long rank;
    if (!(in >> rank))
      throw ParseError("priority line must start with an integer rank", offset,
                       "an integer");
    std::string rest;
    std::getline(in, rest);
    rest = strip(rest);
    if (rest.empty())
      throw ParseError("priority line has no formula", offset, "a formula");
    order.set_rank(parse_formula(rest), rank);
  });
  return order;
}

PriorityOrder load_priority_file(const std::string& path) {
  return parse_priority_text(read_file(path));
}

Json to_json(const BeliefBase& base) { return Json(base.texts()); }

Json to_json(const SubsetFamily& family) {
  Json arr = Json::array();
  for (const auto& m : family.members) arr.push_back(to_json(m));
  return arr;
}

Json to_json(const NegationSet& n) { return to_json(n.clauses); }

Json to_json(const RevisionTrace& trace) {
  Json j;
  j["mode"] = to_string(trace.mode);
  j["stage1"] = to_json(trace.stage1);
  j["aux"] = to_json(trace.aux);
  j["result"] = to_json(trace.result);
  return j;
}

}  // namespace chrev
