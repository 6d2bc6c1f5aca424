#include "towerord/expr.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <sstream>

#include "towerord/constructors.hpp"
#include "towerord/tower.hpp"

namespace towerord {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i;
    return true;
  }
  bool eat(const char* lit) {
    std::size_t n = std::strlen(lit);
    if (s.compare(i, n, lit) != 0) return false;
    i += n;
    return true;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError("expected '" + std::string(1, c) + "' at offset " +
                       std::to_string(i) + " in '" + s + "'");
  }
};

std::uint64_t parse_natural(Cursor& cur) {
  if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
    throw ParseError("expected a natural number at offset " +
                     std::to_string(cur.i) + " in '" + cur.s + "'");
  std::uint64_t v = 0;
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    std::uint64_t d = static_cast<std::uint64_t>(cur.peek() - '0');
    if (v > (UINT64_MAX - d) / 10)
      throw ParseError("natural number too large in '" + cur.s + "'");
    v = v * 10 + d;
    ++cur.i;
  }
  return v;
}

std::string parse_ident(Cursor& cur) {
  std::string id;
  while (std::isalnum(static_cast<unsigned char>(cur.peek())) ||
         cur.peek() == '_' || cur.peek() == '-' || cur.peek() == '.')
    id.push_back(cur.s[cur.i++]);
  if (id.empty())
    throw ParseError("expected an identifier at offset " +
                     std::to_string(cur.i) + " in '" + cur.s + "'");
  return id;
}

Term parse_term_at(Cursor& cur);

Term make_succ_checked(const Term& base, const Cursor& cur) {
  try {
    return Term::succ(base);
  } catch (const TermError& e) {
    throw ParseError(std::string(e.what()) + " in '" + cur.s + "'");
  }
}

// Parenthesized term with optional "+1" successor suffix.
Term parse_paren(Cursor& cur) {
  cur.expect('(');
  Term inner = parse_term_at(cur);
  cur.expect(')');
  if (cur.eat("+1")) return make_succ_checked(inner, cur);
  return inner;
}

Term parse_atomic(Cursor& cur) {
  char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c)))
    return Term::nat(parse_natural(cur));
  if (cur.eat("_1")) return Term::bottom();
  if (cur.eat('@')) return Term::atom(parse_ident(cur));
  if (c == '(') return parse_paren(cur);
  if (cur.eat('<')) {
    Term a = parse_term_at(cur);
    cur.expect(',');
    Term b = parse_term_at(cur);
    cur.expect('>');
    return Term::pair(std::move(a), std::move(b));
  }
  throw ParseError("unexpected character at offset " + std::to_string(cur.i) +
                   " in '" + cur.s + "'");
}

Term parse_exponent(Cursor& cur) {
  if (std::isdigit(static_cast<unsigned char>(cur.peek())))
    return Term::nat(parse_natural(cur));
  if (cur.peek() == '(') return parse_paren(cur);
  throw ParseError("expected an exponent at offset " + std::to_string(cur.i) +
                   " in '" + cur.s + "'");
}

Term parse_coefficient(Cursor& cur) { return parse_atomic(cur); }

Term parse_term_at(Cursor& cur) {
  if (cur.s.compare(cur.i, 2, "p^") == 0) {
    std::vector<Term::Summand> sums;
    do {
      if (!cur.eat("p^"))
        throw ParseError("expected 'p^' at offset " + std::to_string(cur.i) +
                         " in '" + cur.s + "'");
      Term e = parse_exponent(cur);
      cur.expect('*');
      Term c = parse_coefficient(cur);
      sums.push_back({std::move(e), std::move(c)});
    } while (cur.eat('+'));
    return Term::exp_seq(std::move(sums));
  }
  return parse_atomic(cur);
}

}  // namespace

Term parse_term(const std::string& text) {
  Cursor cur{text};
  Term t = parse_term_at(cur);
  if (!cur.done())
    throw ParseError("trailing input at offset " + std::to_string(cur.i) +
                     " in '" + text + "'");
  return t;
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '<') ++depth;
    if (c == ')' || c == '>') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

namespace {

// "lex(a,b)" -> {"a","b"}; validates the closing paren.
std::vector<std::string> parse_arg_list(const std::string& text,
                                        const std::string& head) {
  if (text.back() != ')')
    throw ParseError("expected ')' at the end of '" + text + "'");
  std::string inner = text.substr(head.size(), text.size() - head.size() - 1);
  return split_top_level(inner, ',');
}

std::uint64_t parse_natural_str(const std::string& text) {
  Cursor cur{text};
  std::uint64_t v = parse_natural(cur);
  if (!cur.done()) throw ParseError("bad natural number '" + text + "'");
  return v;
}

bool has_prefix(const std::string& s, const char* p) {
  return s.rfind(p, 0) == 0;
}

}  // namespace

Order parse_order_expr(const std::string& text, const ExprContext& ctx) {
  if (text == "nat") return nat_order();
  if (has_prefix(text, "chain:"))
    return chain_order(parse_natural_str(text.substr(6)));
  if (has_prefix(text, "lex(")) {
    auto args = parse_arg_list(text, "lex(");
    if (args.size() != 2)
      throw ParseError("lex takes two orderings: '" + text + "'");
    return lex_order(parse_order_expr(args[0], ctx),
                     parse_order_expr(args[1], ctx));
  }
  if (has_prefix(text, "exp(")) {
    auto args = parse_arg_list(text, "exp(");
    if (args.size() != 2)
      throw ParseError("exp takes two orderings: '" + text + "'");
    return exp_order(parse_order_expr(args[0], ctx),
                     parse_order_expr(args[1], ctx));
  }
  if (has_prefix(text, "succ(")) {
    auto args = parse_arg_list(text, "succ(");
    if (args.size() != 1)
      throw ParseError("succ takes one ordering: '" + text + "'");
    return succ_order(parse_order_expr(args[0], ctx));
  }
  if (has_prefix(text, "tower:")) {
    std::string rest = text.substr(6);
    if (!has_prefix(rest, "N="))
      throw ParseError("tower expects 'N=<n>;bases=...': '" + text + "'");
    auto semi = rest.find(';');
    if (semi == std::string::npos || rest.compare(semi, 7, ";bases=") != 0)
      throw ParseError("tower expects ';bases=' after N: '" + text + "'");
    std::uint64_t n = parse_natural_str(rest.substr(2, semi - 2));
    std::vector<Order> bases;
    for (const std::string& b :
         split_top_level(rest.substr(semi + 7), ','))
      bases.push_back(parse_order_expr(b, ctx));
    return tower_order(make_tower_spec(static_cast<int>(n), std::move(bases)));
  }
  if (text == "kreisel:ok") return kreisel_order(never_inconsistent());
  if (has_prefix(text, "kreisel:bad="))
    return kreisel_order(inconsistent_at(parse_natural_str(text.substr(12))));
  if (has_prefix(text, "kreiselprime:bad=")) {
    std::string rest = text.substr(17);
    auto semi = rest.find(';');
    if (semi == std::string::npos || rest.compare(semi, 6, ";base=") != 0)
      throw ParseError("kreiselprime expects 'bad=<k>;base=<O>': '" + text +
                       "'");
    return kreisel_prime_order(
        inconsistent_at(parse_natural_str(rest.substr(0, semi))),
        parse_order_expr(rest.substr(semi + 6), ctx));
  }
  if (has_prefix(text, "glue:")) {
    std::string name = text.substr(5);
    auto it = ctx.streams.find(name);
    if (it == ctx.streams.end())
      throw ParseError("unknown stream '" + name + "' in glue ordering");
    return glue_order(it->second);
  }
  if (has_prefix(text, "file:")) return load_relation_file(text.substr(5));
  if (auto it = ctx.orders.find(text); it != ctx.orders.end())
    return it->second;
  throw ParseError("unrecognized ordering expression '" + text + "'");
}

Order load_relation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open relation file '" + path + "'");
  std::vector<Term> elements;
  std::vector<std::pair<Term, Term>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    std::string a, b;
    if (head == "elem" && (ls >> a) && !(ls >> b)) {
      elements.push_back(parse_term(a));
    } else if (head == "less" && (ls >> a) && (ls >> b)) {
      pairs.emplace_back(parse_term(a), parse_term(b));
    } else {
      throw ParseError("bad declaration at " + path + ":" +
                       std::to_string(lineno));
    }
  }
  return explicit_order("file:" + path, std::move(elements), std::move(pairs));
}

}  // namespace towerord
