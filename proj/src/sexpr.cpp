#include "sexpr.hpp"

#include <cctype>

namespace aegg {
namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0, line = 1, col = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_space() {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        advance();
      } else if (text[pos] == ';') {  // comment to end of line
        while (pos < text.size() && text[pos] != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_space();
    return pos >= text.size();
  }

  char peek() { return text[pos]; }

  bool is_atom_char(char c) const {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' &&
           c != ';';
  }

  std::string read_atom() {
    std::string out;
    while (pos < text.size() && is_atom_char(text[pos])) {
      out.push_back(text[pos]);
      advance();
    }
    return out;
  }

  Term read_term() {
    skip_space();
    if (pos >= text.size()) throw ParseError("unexpected end of input", line, col);
    if (text[pos] == ')') throw ParseError("unexpected ')'", line, col);
    if (text[pos] != '(') {
      std::size_t l = line, c = col;
      std::string atom = read_atom();
      if (atom.empty()) throw ParseError("expected atom", l, c);
      return Term{atom, {}};
    }
    std::size_t open_line = line, open_col = col;
    advance();  // '('
    skip_space();
    if (pos >= text.size()) throw ParseError("unclosed list", line, col);
    if (text[pos] == ')') throw ParseError("empty list", open_line, open_col);
    Term head{read_atom(), {}};
    if (head.symbol.empty()) throw ParseError("expected operator symbol", line, col);
    while (true) {
      skip_space();
      if (pos >= text.size()) throw ParseError("unclosed list", line, col);
      if (text[pos] == ')') {
        advance();
        return head;
      }
      head.children.push_back(read_term());
    }
  }
};

}  // namespace

Term parse_term(const std::string& text) {
  Lexer lex(text);
  Term t = lex.read_term();
  if (!lex.eof())
    throw ParseError("trailing input after term", lex.line, lex.col);
  return t;
}

std::string term_to_string(const Term& t) {
  if (t.children.empty()) return t.symbol;
  std::string out = "(" + t.symbol;
  for (const Term& c : t.children) out += " " + term_to_string(c);
  out += ")";
  return out;
}

std::vector<RuleSpec> parse_rules(const std::string& text) {
  Lexer lex(text);
  std::vector<RuleSpec> rules;
  while (!lex.eof()) {
    std::size_t l = lex.line, c = lex.col;
    Term form = lex.read_term();
    if (form.symbol != "rule" || form.children.size() < 3)
      throw ParseError("expected (rule NAME LHS RHS [:nac PATTERN]...)", l, c);
    RuleSpec spec;
    spec.name = form.children[0].symbol;
    if (!form.children[0].children.empty())
      throw ParseError("rule name must be an atom", l, c);
    spec.lhs = form.children[1];
    spec.rhs = form.children[2];
    std::size_t i = 3;
    while (i < form.children.size()) {
      if (form.children[i].symbol != ":nac" || !form.children[i].children.empty() ||
          i + 1 >= form.children.size())
        throw ParseError("expected :nac PATTERN", l, c);
      spec.nacs.push_back(form.children[i + 1]);
      i += 2;
    }
    rules.push_back(std::move(spec));
  }
  return rules;
}

}  // namespace aegg
