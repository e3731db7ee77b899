#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace chrev {

enum class Connective { Atom, Top, Bottom, Not, And, Or, Implies, Iff };

// Immutable propositional formula. Nodes are shared and never mutated after
// construction. The canonical text rendering is built eagerly; since rendering
// is injective up to structure, it doubles as the identity used by structural
// equality, ordering and hashing.
class Formula {
 public:
  static Formula atom(const std::string& name);
  static Formula top();
  static Formula bottom();
  static Formula neg(const Formula& f);
  static Formula conj(const Formula& l, const Formula& r);
  static Formula disj(const Formula& l, const Formula& r);
  static Formula impl(const Formula& l, const Formula& r);
  static Formula iff(const Formula& l, const Formula& r);

  Connective kind() const { return node_->kind; }
  bool is_binary() const;

  const std::string& atom_name() const;  // Atom nodes only
  Formula lhs() const;                   // binary nodes only
  Formula rhs() const;
  Formula child() const;                 // Not nodes only

  // Canonical rendering with minimal parentheses; re-parsing it yields a
  // structurally equal formula.
  const std::string& text() const { return node_->text; }

  void atoms_into(std::set<std::string>& out) const;
  std::vector<std::string> atoms() const;

  bool operator==(const Formula& o) const {
    return node_ == o.node_ || node_->text == o.node_->text;
  }
  bool operator<(const Formula& o) const { return node_->text < o.node_->text; }

 private:
  struct Node {
    Connective kind;
    std::string name;  // Atom only
    std::shared_ptr<const Node> left, right;  // Not uses left
    std::string text;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Connective kind, std::string name, const Formula* l,
                      const Formula* r);

  std::shared_ptr<const Node> node_;
};

// True iff `name` matches [a-zA-Z_][a-zA-Z0-9_]* and is not a reserved
// constant keyword.
bool is_valid_atom_name(const std::string& name);

// Parses the formula grammar (see README). Throws ParseError with the byte
// offset and an expected-token hint on malformed input.
Formula parse_formula(const std::string& text);

}  // namespace chrev
