#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "towerord/term.hpp"

namespace towerord {

// Errors carry a short machine-readable kind used by the command-line
// front end ("error:<kind>:<message>").
struct OrderError : std::runtime_error {
  OrderError(std::string kind_, const std::string& what)
      : std::runtime_error(what), kind(std::move(kind_)) {}
  std::string kind;
};

struct DomainError : OrderError {
  explicit DomainError(const std::string& what) : OrderError("domain", what) {}
};

struct NoEnumeratorError : OrderError {
  explicit NoEnumeratorError(const std::string& what)
      : OrderError("noenum", what) {}
};

struct CycleError : OrderError {
  CycleError(const std::string& what, std::vector<Term> lasso_)
      : OrderError("cycle", what), lasso(std::move(lasso_)) {}
  std::vector<Term> lasso;  // x0 > x1 > ... > xk with xk == some earlier xi
};

struct NotLinearError : OrderError {
  NotLinearError(const std::string& what, std::vector<Term> witness_)
      : OrderError("notlinear", what), witness(std::move(witness_)) {}
  std::vector<Term> witness;
};

struct InternalError : OrderError {
  explicit InternalError(const std::string& what)
      : OrderError("internal", what) {}
};

// Result of enumerating a (predecessor or domain) set.  `complete` states
// whether `items` is the whole set or a truncated prefix of it.
struct Enumeration {
  std::vector<Term> items;
  bool complete = true;
};

// A (possibly infinite) strict ordering given by its characteristic
// functions.  `less` may assume both arguments satisfy `in_domain`; the
// checked entry point below enforces that.  The enumerators are optional:
// orderings without them cannot be searched for wellfoundedness.
struct OrderingDescriptor {
  std::string name;
  std::function<bool(const Term&, const Term&)> less;
  std::function<bool(const Term&)> in_domain;
  // Predecessors of `t` under the ordering; at most `limit` items.
  std::function<Enumeration(const Term&, std::size_t)> enumerate_below;
  // Members of the domain; at most `limit` items, deterministic order.
  std::function<Enumeration(std::size_t)> enumerate_domain;
};

using Order = std::shared_ptr<const OrderingDescriptor>;

// Checked comparison: throws DomainError when an argument is outside the
// ordering's domain.
bool ord_less(const Order& ord, const Term& a, const Term& b);
void require_in_domain(const Order& ord, const Term& t);

// Explicit finite restriction of an ordering to a term set, with the edge
// relation materialized.  Elements are deduplicated and kept in canonical
// (structural) order.
class FiniteRestriction {
 public:
  FiniteRestriction(std::vector<Term> elements,
                    std::set<std::pair<std::size_t, std::size_t>> edges,
                    std::string source);

  const std::vector<Term>& elements() const { return elements_; }
  const std::string& source() const { return source_; }
  bool edge(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> index_of(const Term& t) const;
  std::vector<std::size_t> preds(std::size_t j) const;

 private:
  std::vector<Term> elements_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
  std::string source_;
};

FiniteRestriction restrict_order(const Order& ord, std::span<const Term> elements);

// Sampled axiom check over a finite element set.  Witnesses are collected,
// not thrown; pathological orderings are first-class citizens here.
struct AxiomReport {
  std::vector<Term> irreflexivity_violations;          // a < a
  std::vector<std::array<Term, 3>> transitivity_violations;  // a<b<c, not a<c
  std::vector<std::array<Term, 2>> incomparable_pairs;       // a != b, neither
  std::vector<std::array<Term, 2>> antisymmetry_violations;  // a<b and b<a

  bool strict_partial_order() const {
    return irreflexivity_violations.empty() &&
           transitivity_violations.empty() && antisymmetry_violations.empty();
  }
  bool strict_linear_order() const {
    return strict_partial_order() && incomparable_pairs.empty();
  }
};

AxiomReport check_order_axioms(const Order& ord, std::span<const Term> elements);

// --- basic descriptors ---------------------------------------------------

// Standard ordering on all naturals.
Order nat_order();

// Standard ordering restricted to {0, ..., k-1}.
Order chain_order(std::uint64_t k);

// Finite ordering given by an explicit edge list; pairs are (lower, upper).
// Pathological tables (cycles, reflexive edges) are accepted on purpose.
Order explicit_order(std::string name, std::vector<Term> elements,
                     std::vector<std::pair<Term, Term>> pairs);

}  // namespace towerord
