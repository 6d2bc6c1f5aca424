#pragma once

#include <map>
#include <string>
#include <vector>

#include "towerord/order.hpp"
#include "towerord/pathology.hpp"
#include "towerord/term.hpp"

namespace towerord {

struct ParseError : OrderError {
  explicit ParseError(const std::string& what) : OrderError("parse", what) {}
};

struct IoError : OrderError {
  explicit IoError(const std::string& what) : OrderError("io", what) {}
};

// Term grammar (round-trips with Term::str):
//   term    := sum | atomic
//   sum     := summand ("+" summand)*
//   summand := "p^" exp "*" coeff
//   exp     := natural | "(" term ")" | "(" term ")+1"
//   coeff   := natural | "_1" | "@" ident | pair | "(" term ")"
//   atomic  := natural | "_1" | "@" ident | pair | "(" term ")" ["+1"]
//   pair    := "<" term "," term ">"
// "0" parses as the natural 0; orderings of the E family accept it as
// the empty sum.
Term parse_term(const std::string& text);

// Names (fixture declarations) visible to order expressions.
struct ExprContext {
  std::map<std::string, Order> orders;
  std::map<std::string, ProofStream> streams;
};

// Ordering grammar:
//   "nat" | "chain:<k>" | "lex(<O>,<O>)" | "exp(<O>,<O>)" | "succ(<O>)"
//   | "tower:N=<n>;bases=<O>,..."        (bases listed from level 2 up)
//   | "kreisel:ok" | "kreisel:bad=<k>"
//   | "kreiselprime:bad=<k>;base=<O>"
//   | "glue:<stream-name>"               (requires a fixture context)
//   | "file:<path>"                      (explicit finite relation)
//   | a declared order name from the context
Order parse_order_expr(const std::string& text, const ExprContext& ctx = {});

// Splits on commas at nesting depth zero of () and <>.
std::vector<std::string> split_top_level(const std::string& text, char sep);

// Explicit-relation file: one declaration per line, '#' comments:
//   elem <term>
//   less <term> <term>
Order load_relation_file(const std::string& path);

}  // namespace towerord
