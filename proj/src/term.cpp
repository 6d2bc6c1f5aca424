#include "towerord/term.hpp"

#include <sstream>

namespace towerord {

struct Term::Node {
  Kind kind;
  std::uint64_t nat = 0;
  std::string atom;
  std::vector<Term> kids;          // Pair: [a,b]; Succ: [base]
  std::vector<Summand> summands;   // ExpSeq only
};

namespace {

int kind_rank(Term::Kind k) { return static_cast<int>(k); }

}  // namespace

// Shared singleton node for Bottom; member scope so Node stays private.
const std::shared_ptr<const Term::Node>& Term::bottom_node() {
  static const auto node = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bottom;
    return std::shared_ptr<const Node>(n);
  }();
  return node;
}

Term::Term() : node_(bottom_node()) {}

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Term Term::nat(std::uint64_t value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Nat;
  n->nat = value;
  return Term(std::move(n));
}

Term Term::pair(Term first, Term second) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->kids = {std::move(first), std::move(second)};
  return Term(std::move(n));
}

Term Term::exp_seq(std::vector<Summand> summands) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::ExpSeq;
  n->summands = std::move(summands);
  return Term(std::move(n));
}

Term Term::succ(const Term& base) {
  switch (base.kind()) {
    case Kind::Nat:
    case Kind::ExpSeq:
    case Kind::Atom:
      break;
    default:
      throw TermError("succ: base must be a Nat, ExpSeq or Atom, got " +
                      base.str());
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Succ;
  n->kids = {base};
  return Term(std::move(n));
}

Term Term::bottom() { return Term(bottom_node()); }

Term Term::atom(std::string id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = std::move(id);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }

std::uint64_t Term::nat_value() const {
  if (kind() != Kind::Nat) throw TermError("nat_value on non-Nat term");
  return node_->nat;
}

const Term& Term::first() const {
  if (kind() != Kind::Pair) throw TermError("first on non-Pair term");
  return node_->kids[0];
}

const Term& Term::second() const {
  if (kind() != Kind::Pair) throw TermError("second on non-Pair term");
  return node_->kids[1];
}

const std::vector<Term::Summand>& Term::summands() const {
  if (kind() != Kind::ExpSeq) throw TermError("summands on non-ExpSeq term");
  return node_->summands;
}

const Term& Term::succ_base() const {
  if (kind() != Kind::Succ) throw TermError("succ_base on non-Succ term");
  return node_->kids[0];
}

const std::string& Term::atom_id() const {
  if (kind() != Kind::Atom) throw TermError("atom_id on non-Atom term");
  return node_->atom;
}

bool Term::operator==(const Term& other) const {
  return compare(*this, other) == 0;
}

int Term::compare(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind())
    return kind_rank(a.kind()) < kind_rank(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Kind::Nat:
      if (a.node_->nat != b.node_->nat)
        return a.node_->nat < b.node_->nat ? -1 : 1;
      return 0;
    case Kind::Bottom:
      return 0;
    case Kind::Atom:
      return a.node_->atom.compare(b.node_->atom);
    case Kind::Pair:
    case Kind::Succ: {
      for (std::size_t i = 0; i < a.node_->kids.size(); ++i) {
        int c = compare(a.node_->kids[i], b.node_->kids[i]);
        if (c != 0) return c;
      }
      return 0;
    }
    case Kind::ExpSeq: {
      const auto& sa = a.node_->summands;
      const auto& sb = b.node_->summands;
      std::size_t n = std::min(sa.size(), sb.size());
      for (std::size_t i = 0; i < n; ++i) {
        int c = compare(sa[i].exponent, sb[i].exponent);
        if (c != 0) return c;
        c = compare(sa[i].coefficient, sb[i].coefficient);
        if (c != 0) return c;
      }
      if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

namespace {

void print_term(const Term& t, std::ostringstream& out);

// Exponent position: natural | "(term)" | "(term)+1".
void print_exponent(const Term& e, std::ostringstream& out) {
  if (e.is(Term::Kind::Nat)) {
    out << e.nat_value();
  } else if (e.is(Term::Kind::Succ)) {
    out << '(';
    print_term(e.succ_base(), out);
    out << ")+1";
  } else {
    out << '(';
    print_term(e, out);
    out << ')';
  }
}

// Coefficient position: atomic forms print bare, sums and successors
// need parentheses to keep "+" and "*" unambiguous.
void print_coefficient(const Term& c, std::ostringstream& out) {
  switch (c.kind()) {
    case Term::Kind::Nat:
    case Term::Kind::Bottom:
    case Term::Kind::Atom:
    case Term::Kind::Pair:
      print_term(c, out);
      return;
    default:
      out << '(';
      print_term(c, out);
      out << ')';
      return;
  }
}

void print_term(const Term& t, std::ostringstream& out) {
  switch (t.kind()) {
    case Term::Kind::Nat:
      out << t.nat_value();
      return;
    case Term::Kind::Bottom:
      out << "_1";
      return;
    case Term::Kind::Atom:
      out << '@' << t.atom_id();
      return;
    case Term::Kind::Pair:
      out << '<';
      print_term(t.first(), out);
      out << ',';
      print_term(t.second(), out);
      out << '>';
      return;
    case Term::Kind::Succ:
      out << '(';
      print_term(t.succ_base(), out);
      out << ")+1";
      return;
    case Term::Kind::ExpSeq: {
      const auto& sums = t.summands();
      if (sums.empty()) {
        out << '0';
        return;
      }
      for (std::size_t i = 0; i < sums.size(); ++i) {
        if (i > 0) out << '+';
        out << "p^";
        print_exponent(sums[i].exponent, out);
        out << '*';
        print_coefficient(sums[i].coefficient, out);
      }
      return;
    }
  }
}

}  // namespace

std::string Term::str() const {
  std::ostringstream out;
  print_term(*this, out);
  return out.str();
}

std::string to_string(const Term& t) { return t.str(); }

}  // namespace towerord
