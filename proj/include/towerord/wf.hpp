#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "towerord/constructors.hpp"
#include "towerord/order.hpp"
#include "towerord/term.hpp"

namespace towerord {

// Verdict of a budgeted membership query against the wellfounded part
// W(<).  Every verdict carries machine-checkable evidence:
//
//   wellfounded  rank = height of the fully explored descent cone
//   illfounded   lasso: a descending chain whose last element repeats
//                an earlier one
//   unknown      a descending chain of exactly `budget` steps
struct WfVerdict {
  WfClass cls = WfClass::unknown;
  std::uint64_t rank = 0;
  std::vector<Term> chain;
};

// Budgeted depth-first descent search from `a`.  `budget` bounds the
// descent depth (number of chain steps); enumeration is pulled from
// ord->enumerate_below.  Exact (wellfounded/illfounded) whenever the
// descent cone is finite, fully enumerable and within budget.
WfVerdict wf_member(const Order& ord, const Term& a, std::uint64_t budget);

// Independent re-check of a verdict's evidence.  For wellfounded
// verdicts the cone is re-materialized breadth-first and the rank
// recomputed via rank_finite; for the other two the chain conditions
// are replayed step by step.
struct EvidenceReport {
  bool ok = false;
  std::string detail;
};
EvidenceReport verify_verdict(const Order& ord, const Term& a,
                              const WfVerdict& v, std::uint64_t budget);

// Rank of `a` inside a finite restriction: least natural exceeding the
// ranks of all predecessors.  Throws CycleError (with a lasso witness)
// when a cycle is reachable from `a`.
std::uint64_t rank_finite(const FiniteRestriction& r, const Term& a);

// Number of elements if the restriction is a strict linear order;
// throws NotLinearError with an incomparable or cyclic witness.
std::uint64_t order_type_finite(const FiniteRestriction& r);

// Memoizing oracle wrapper around wf_member at a fixed budget.
WfOracle make_wf_oracle(const Order& ord, std::uint64_t budget);

}  // namespace towerord
