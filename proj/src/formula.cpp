#include "chrev/formula.hpp"

#include <cctype>
#include <stdexcept>

#include "chrev/errors.hpp"

namespace chrev {

namespace {

// Precedence levels, tightest binding highest. Negation sits above the binary
// connectives; atoms and constants never need parentheses.
int level(Connective k) {
  switch (k) {
    case Connective::Iff: return 1;
    case Connective::Implies: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
    case Connective::Not: return 5;
    default: return 6;
  }
}

std::string wrap(const Formula& f, int min_level) {
  if (level(f.kind()) < min_level) return "(" + f.text() + ")";
  return f.text();
}

}  // namespace

bool is_valid_atom_name(const std::string& name) {
  if (name.empty()) return false;
  if (name == "true" || name == "false") return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

Formula Formula::make(Connective kind, std::string name, const Formula* l,
                      const Formula* r) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  if (l) node->left = l->node_;
  if (r) node->right = r->node_;
  switch (kind) {
    case Connective::Atom:
      node->text = node->name;
      break;
    case Connective::Top:
      node->text = "true";
      break;
    case Connective::Bottom:
      node->text = "false";
      break;
    case Connective::Not:
      node->text = "~" + wrap(*l, 5);
      break;
    // & and | are left-associative, -> and <-> right-associative; the right
    // (resp. left) operand of an equal-precedence child keeps its parentheses
    // so that the rendering re-parses to the same tree.
    case Connective::And:
      node->text = wrap(*l, 4) + " & " + wrap(*r, 5);
      break;
    case Connective::Or:
      node->text = wrap(*l, 3) + " | " + wrap(*r, 4);
      break;
    case Connective::Implies:
      node->text = wrap(*l, 3) + " -> " + wrap(*r, 2);
      break;
    case Connective::Iff:
      node->text = wrap(*l, 2) + " <-> " + wrap(*r, 1);
      break;
  }
  return Formula(std::move(node));
}

Formula Formula::atom(const std::string& name) {
  if (!is_valid_atom_name(name))
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  return make(Connective::Atom, name, nullptr, nullptr);
}

Formula Formula::top() { return make(Connective::Top, "", nullptr, nullptr); }
Formula Formula::bottom() { return make(Connective::Bottom, "", nullptr, nullptr); }
Formula Formula::neg(const Formula& f) {
  return make(Connective::Not, "", &f, nullptr);
}
Formula Formula::conj(const Formula& l, const Formula& r) {
  return make(Connective::And, "", &l, &r);
}
Formula Formula::disj(const Formula& l, const Formula& r) {
  return make(Connective::Or, "", &l, &r);
}
Formula Formula::impl(const Formula& l, const Formula& r) {
  return make(Connective::Implies, "", &l, &r);
}
Formula Formula::iff(const Formula& l, const Formula& r) {
  return make(Connective::Iff, "", &l, &r);
}

bool Formula::is_binary() const {
  switch (node_->kind) {
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
    case Connective::Iff:
      return true;
    default:
      return false;
  }
}

const std::string& Formula::atom_name() const {
  if (node_->kind != Connective::Atom)
    throw std::logic_error("atom_name on non-atom");
  return node_->name;
}

Formula Formula::lhs() const {
  if (!is_binary()) throw std::logic_error("lhs on non-binary formula");
  return Formula(node_->left);
}

Formula Formula::rhs() const {
  if (!is_binary()) throw std::logic_error("rhs on non-binary formula");
  return Formula(node_->right);
}

Formula Formula::child() const {
  if (node_->kind != Connective::Not) throw std::logic_error("child on non-negation");
  return Formula(node_->left);
}

void Formula::atoms_into(std::set<std::string>& out) const {
  switch (node_->kind) {
    case Connective::Atom:
      out.insert(node_->name);
      return;
    case Connective::Top:
    case Connective::Bottom:
      return;
    case Connective::Not:
      child().atoms_into(out);
      return;
    default:
      lhs().atoms_into(out);
      rhs().atoms_into(out);
      return;
  }
}

std::vector<std::string> Formula::atoms() const {
  std::set<std::string> s;
  atoms_into(s);
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// Parser: plain recursive descent over a small token stream.
//
//   iff     := implies ( "<->" iff )?
//   implies := or ( "->" implies )?
//   or      := and ( "|" and )*
//   and     := unary ( "&" unary )*
//   unary   := ("~")* primary
//   primary := ident | "true" | "false" | "(" iff ")"
//
// ASCII and the usual unicode connective symbols are both accepted.
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Ident, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string ident;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= s_.size()) return {Tok::End, "", at};

    if (eat("<->") || eat("↔")) return {Tok::Iff, "", at};
    if (eat("->") || eat("→")) return {Tok::Implies, "", at};
    if (eat("~") || eat("!") || eat("¬")) return {Tok::Not, "", at};
    if (eat("&") || eat("∧")) return {Tok::And, "", at};
    if (eat("|") || eat("∨")) return {Tok::Or, "", at};
    if (eat("(")) return {Tok::LParen, "", at};
    if (eat(")")) return {Tok::RParen, "", at};
    if (eat("⊤")) return {Tok::True, "", at};
    if (eat("⊥")) return {Tok::False, "", at};

    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string word = s_.substr(start, pos_ - start);
      if (word == "true") return {Tok::True, "", at};
      if (word == "false") return {Tok::False, "", at};
      return {Tok::Ident, word, at};
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", at,
                     "a formula token");
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(const std::string& lit) {
    if (s_.compare(pos_, lit.size(), lit) == 0) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) { advance(); }

  Formula parse() {
    Formula f = iff();
    if (cur_.kind != Tok::End)
      throw ParseError("trailing input", cur_.offset, "end of formula");
    return f;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  Formula iff() {
    Formula l = implies();
    if (cur_.kind == Tok::Iff) {
      advance();
      return Formula::iff(l, iff());
    }
    return l;
  }

  Formula implies() {
    Formula l = disj();
    if (cur_.kind == Tok::Implies) {
      advance();
      return Formula::impl(l, implies());
    }
    return l;
  }

  Formula disj() {
    Formula l = conj();
    while (cur_.kind == Tok::Or) {
      advance();
      l = Formula::disj(l, conj());
    }
    return l;
  }

  Formula conj() {
    Formula l = unary();
    while (cur_.kind == Tok::And) {
      advance();
      l = Formula::conj(l, unary());
    }
    return l;
  }

  Formula unary() {
    if (cur_.kind == Tok::Not) {
      advance();
      return Formula::neg(unary());
    }
    return primary();
  }

  Formula primary() {
    switch (cur_.kind) {
      case Tok::Ident: {
        Formula f = Formula::atom(cur_.ident);
        advance();
        return f;
      }
      case Tok::True:
        advance();
        return Formula::top();
      case Tok::False:
        advance();
        return Formula::bottom();
      case Tok::LParen: {
        advance();
        Formula f = iff();
        if (cur_.kind != Tok::RParen)
          throw ParseError("unbalanced parenthesis", cur_.offset, "')'");
        advance();
        return f;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", cur_.offset,
                         "an atom, constant, '~' or '('");
      default:
        throw ParseError("unexpected token", cur_.offset,
                         "an atom, constant, '~' or '('");
    }
  }

  Lexer lex_;
  Token cur_{Tok::End, "", 0};
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

}  // namespace chrev
