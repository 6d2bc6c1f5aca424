#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "towerord/order.hpp"
#include "towerord/term.hpp"

namespace towerord {

// Abstract partial-consistency predicate CON(n): "no contradiction has
// been found with code <= n".  Required to be antitone: once false it
// stays false.  The two shipped sources are never_inconsistent() and
// inconsistent_at(k); anything antitone works.
struct ProofSource {
  std::function<bool(std::uint64_t)> con_upto;
  std::string description;  // "ok", "bad=3", ...
};

ProofSource never_inconsistent();
ProofSource inconsistent_at(std::uint64_t k);

// First n <= bound with con_upto(n-1) false but con_upto(n) true, if any.
std::optional<std::uint64_t> find_antitone_violation(const ProofSource& ps,
                                                     std::uint64_t bound);
void require_antitone(const ProofSource& ps, std::uint64_t bound);

// n < m while consistency holds at min(n,m); order flipped beyond:
//   n < m  iff  [CON(min) and n<m]  or  [not CON(min) and n>m]
bool kreisel_less(const ProofSource& ps, std::uint64_t n, std::uint64_t m);

// Ordering relating only pairs whose max still looks consistent:
//   n <' m  iff  CON(max{n,m}) and n <_base m
bool kreisel_prime_less(const ProofSource& ps, const Order& base,
                        const Term& n, const Term& m);

// Stream of claims indexed by naturals: index p either carries a
// claimed wellordering or nothing (treated as the empty ordering).
struct ProofStream {
  std::string name;
  std::map<std::uint64_t, Order> claims;  // absent index = no claim
};

// Glued ordering on pairs <n,p>:
//   <n,p> < <m,q>  iff  p < q,  or  p = q and n <_p m
// where <_p is the claimed ordering at p (empty when no claim).
bool glue_less(const ProofStream& stream, const Term& x, const Term& y);

// --- descriptor builders -------------------------------------------------

Order kreisel_order(const ProofSource& ps);
Order kreisel_prime_order(const ProofSource& ps, Order base);
Order glue_order(ProofStream stream);

}  // namespace towerord
