#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace towerord {

// Terms are the shared element language of every ordering in the library.
// A term is one of:
//
//   Nat(k)      natural number, printed "k"
//   Pair(a,b)   ordered pair, printed "<a,b>"
//   ExpSeq(s)   formal base-p sum  p^e0*c0 + ... + p^e{l-1}*c{l-1},
//               possibly empty; the empty sum prints as "0"
//   Succ(t)     formal successor, printed "(t)+1"; t must be a Nat,
//               ExpSeq or Atom -- never a Pair, Bottom or another Succ
//   Bottom      formal least element, printed "_1"
//   Atom(id)    opaque named token, printed "@id"
//
// Terms are immutable values; copies share structure.
class Term {
 public:
  enum class Kind { Nat, Pair, ExpSeq, Succ, Bottom, Atom };

  struct Summand;

  // Default-constructs Bottom so Term can live in aggregates.
  Term();

  static Term nat(std::uint64_t value);
  static Term pair(Term first, Term second);
  static Term exp_seq(std::vector<Summand> summands);
  static Term succ(const Term& base);  // throws TermError on bad base kind
  static Term bottom();
  static Term atom(std::string id);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  std::uint64_t nat_value() const;    // pre: Nat
  const Term& first() const;          // pre: Pair
  const Term& second() const;         // pre: Pair
  const std::vector<Summand>& summands() const;  // pre: ExpSeq
  const Term& succ_base() const;      // pre: Succ
  const std::string& atom_id() const; // pre: Atom

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  // Total structural order (arbitrary but fixed); used for canonical sets
  // and maps, unrelated to any of the mathematical orderings.
  static int compare(const Term& a, const Term& b);

  std::string str() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node);
  static const std::shared_ptr<const Node>& bottom_node();
  std::shared_ptr<const Node> node_;
};

struct Term::Summand {
  Term exponent;
  Term coefficient;
  bool operator==(const Summand& other) const {
    return exponent == other.exponent && coefficient == other.coefficient;
  }
};

// Comparator for std::map/std::set keyed by Term.
struct TermLess {
  bool operator()(const Term& a, const Term& b) const {
    return Term::compare(a, b) < 0;
  }
};

struct TermError : std::runtime_error {
  explicit TermError(const std::string& what) : std::runtime_error(what) {}
};

std::string to_string(const Term& t);

}  // namespace towerord
