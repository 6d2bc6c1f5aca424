#pragma once

#include <cstdint>
#include <functional>
#include <variant>

#include "towerord/order.hpp"
#include "towerord/term.hpp"

namespace towerord {

// Three-valued verdict for the wellfounded-gated relations.  Ordered
// no < unknown < yes so that conjunction is min.
enum class Tril { no, unknown, yes };

inline Tril tril_of(bool b) { return b ? Tril::yes : Tril::no; }
inline Tril tril_and(Tril a, Tril b) { return a < b ? a : b; }

// Classification half of a wellfoundedness verdict; the full evidence-
// carrying form lives in wf.hpp.
enum class WfClass { wellfounded, illfounded, unknown };

// Membership oracle for W(<); typically wraps wf_member at a fixed budget.
using WfOracle = std::function<WfClass(const Term&)>;

inline Tril tril_of(WfClass c) {
  switch (c) {
    case WfClass::wellfounded: return Tril::yes;
    case WfClass::illfounded: return Tril::no;
    case WfClass::unknown: return Tril::unknown;
  }
  return Tril::unknown;
}

// L(<1,<0): pairs ordered by first component, ties broken by the second.
struct LexOrdering {
  Order first;   // <1
  Order second;  // <0
};

// E(<1,<0): formal sums p^e0*c0 + ... with strictly <1-decreasing
// exponents, compared by first difference, then by length.
struct ExpOrdering {
  Order exponent_order;     // <1
  Order coefficient_order;  // <0
};

// Concatenation failure: strict exponent decrease does not hold at the
// seam between the two summand lists.
struct SeamError {
  std::size_t position;  // index of the first right-hand summand
  Term left_exponent;
  Term right_exponent;
};

using AddResult = std::variant<Term, SeamError>;

bool lex_less(const LexOrdering& lx, const Term& p, const Term& q);
Tril lexw_less(const LexOrdering& lx, const Term& p, const Term& q,
               const WfOracle& wf);

// Domain predicate for E.  The bare term "0" counts as the empty sum.
// Throws DomainError when the term has the wrong shape or a component
// falls outside a base domain; returns false only when exponent descent
// fails.
bool exp_dom(const ExpOrdering& eo, const Term& t);

bool exp_less(const ExpOrdering& eo, const Term& alpha, const Term& beta);
Tril expw_less(const ExpOrdering& eo, const Term& alpha, const Term& beta,
               const WfOracle& wf);

// beta + alpha by plain concatenation; no merging or carrying.
AddResult add(const Term& beta, const Term& alpha, const ExpOrdering& eo);

// True iff beta can be extended upward by a summand with exponent a:
// beta is empty, or a is <=1 the last exponent of beta.
bool dom_up(const Term& beta, const Term& a, const ExpOrdering& eo);

// True iff alpha < p^a..., i.e. alpha is empty or its leading exponent
// is <1 a.
bool exp_bound_lt(const Term& alpha, const Term& a, const ExpOrdering& eo);

// Successor extension of a base relation: terms of the base domain plus
// Succ-boxed ones, with a+1 acting as the immediate successor of a.
bool succ_less(const Order& base, const Term& x, const Term& y);

// --- descriptor builders -------------------------------------------------

Order lex_order(Order first, Order second);
Order exp_order(Order exponent_order, Order coefficient_order);
Order succ_order(Order base);

}  // namespace towerord
