#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "towerord/term.hpp"

namespace towerord {

// Ordinal below epsilon_0 in Cantor normal form: a formal sum
// w^{e_0}*c_0 + ... with strictly decreasing exponents (recursively
// CnfOrdinal) and positive natural coefficients.  Zero is the empty sum.
// Purely an oracle for cross-checking the exponential constructor; kept
// deliberately independent from the ordering descriptors.
class CnfOrdinal {
 public:
  using Summand = std::pair<CnfOrdinal, std::uint64_t>;

  CnfOrdinal() = default;  // zero

  static CnfOrdinal from_nat(std::uint64_t n);
  static CnfOrdinal omega_pow(const CnfOrdinal& e);  // w^e
  // Validates normal form (strict descent, positive coefficients).
  static CnfOrdinal make(std::vector<Summand> summands);

  bool is_zero() const { return sum_.empty(); }
  const std::vector<Summand>& summands() const { return sum_; }

  // -1, 0, 1 for <, =, >.
  static int cmp(const CnfOrdinal& a, const CnfOrdinal& b);

  std::string str() const;

 private:
  std::vector<Summand> sum_;
};

// Ordinal addition with the usual absorption of small left summands.
CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b);

// Order-preserving image of an E-term over nat,nat:
//   Sum p^e*c  |->  Sum w^e*(c+1)
// The +1 shift compensates for zero coefficients being admitted in
// dom(<_E) while CNF requires positive ones.
CnfOrdinal embed_exp_cnf(const Term& alpha);

}  // namespace towerord
