#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "towerord/constructors.hpp"
#include "towerord/order.hpp"
#include "towerord/term.hpp"

namespace towerord {

// Height-(N-3) tower of exponential constructors over base relations
// <_2 ... <_{N-1}:
//
//   level N-1:  the top base ordering itself
//   level i:    E(succ-extended level i+1, <_i)        for 2 <= i < N-1
//
// bases[k] is <_{k+2}, i.e. bases are listed from level 2 upward.
// make_tower_spec composes one descriptor per level eagerly; they are
// what tower_less and friends run on.
struct TowerSpec {
  int height_n = 3;           // N
  std::vector<Order> bases;   // size N-2; bases[k] = <_{k+2}
  std::vector<Order> levels;  // levels[k] = composed ordering at level k+2
  std::vector<Order> lifted;  // lifted[k] = succ-extension of levels[k]

  const Order& base_at(int level) const;
  const Order& level_at(int level) const;
  const Order& lifted_at(int level) const;
};

TowerSpec make_tower_spec(int height_n, std::vector<Order> bases);

// Total level-validity predicate for terms at a given level (default:
// level 2, the tower's own domain).
bool tower_level_valid(const TowerSpec& spec, const Term& t, int level = 2);

// <_T comparison; throws DomainError unless both terms are level-valid.
bool tower_less(const TowerSpec& spec, const Term& alpha, const Term& beta,
                int level = 2);

// Per-level membership oracle for the wellfounded parts of the bases.
using LevelOracle = std::function<WfClass(int level, const Term&)>;
LevelOracle make_level_oracles(const TowerSpec& spec, std::uint64_t budget);

// Hereditary domain of the wellfounded-gated tower: adjacent exponents
// related by the gated level-(i+1) relation and every coefficient in the
// wellfounded part of its base; level N-1 is unconditional.
Tril towerw_dom(const TowerSpec& spec, const Term& alpha,
                const LevelOracle& wf, int level = 2);

// Gated comparison: tower_less plus towerw_dom of both sides.
Tril towerw_less(const TowerSpec& spec, const Term& alpha, const Term& beta,
                 const LevelOracle& wf, int level = 2);

// Bound relation alpha < a: every exponent hereditarily below a, with
// base case <_{N-1}; the empty sum is below everything.
bool tower_bound_lt(const TowerSpec& spec, const Term& alpha, const Term& a,
                    int level = 2);

// The tower as a plain ordering descriptor (named canonically).
Order tower_order(const TowerSpec& spec);

}  // namespace towerord
