#ifndef AEGG_SEXPR_HPP
#define AEGG_SEXPR_HPP

#include <string>
#include <vector>

#include "finset.hpp"

namespace aegg {

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t col)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line(line),
        col(col) {}
  std::size_t line, col;
};

struct Term {
  std::string symbol;
  std::vector<Term> children;

  bool operator==(const Term&) const = default;
  bool operator<(const Term& o) const {
    if (symbol != o.symbol) return symbol < o.symbol;
    return children < o.children;
  }
};

// Parses one term, e.g. "(/ (* a 2) 2)" or a bare atom "a".
Term parse_term(const std::string& text);

std::string term_to_string(const Term& t);

struct RuleSpec {
  std::string name;
  Term lhs, rhs;
  std::vector<Term> nacs;
};

// Rule files hold forms (rule NAME (LHS) (RHS) [:nac (PATTERN)]...).
std::vector<RuleSpec> parse_rules(const std::string& text);

}  // namespace aegg

#endif
