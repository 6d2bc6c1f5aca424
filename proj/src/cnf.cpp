#include "towerord/cnf.hpp"

#include <sstream>

#include "towerord/order.hpp"

namespace towerord {

CnfOrdinal CnfOrdinal::from_nat(std::uint64_t n) {
  CnfOrdinal o;
  if (n > 0) o.sum_.push_back({CnfOrdinal(), n});  // w^0 * n
  return o;
}

CnfOrdinal CnfOrdinal::omega_pow(const CnfOrdinal& e) {
  CnfOrdinal o;
  o.sum_.push_back({e, 1});
  return o;
}

CnfOrdinal CnfOrdinal::make(std::vector<Summand> summands) {
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (summands[i].second == 0)
      throw InternalError("CnfOrdinal: zero coefficient");
    if (i + 1 < summands.size() &&
        cmp(summands[i + 1].first, summands[i].first) >= 0)
      throw InternalError("CnfOrdinal: exponents not strictly decreasing");
  }
  CnfOrdinal o;
  o.sum_ = std::move(summands);
  return o;
}

int CnfOrdinal::cmp(const CnfOrdinal& a, const CnfOrdinal& b) {
  const auto& sa = a.sum_;
  const auto& sb = b.sum_;
  std::size_t n = std::min(sa.size(), sb.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(sa[i].first, sb[i].first);
    if (c != 0) return c;
    if (sa[i].second != sb[i].second)
      return sa[i].second < sb[i].second ? -1 : 1;
  }
  if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
  return 0;
}

CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b) {
  if (b.is_zero()) return a;
  const auto& sa = a.summands();
  const auto& sb = b.summands();
  const CnfOrdinal& lead = sb.front().first;
  std::vector<CnfOrdinal::Summand> out;
  std::size_t k = 0;
  while (k < sa.size() && CnfOrdinal::cmp(sa[k].first, lead) > 0)
    out.push_back(sa[k++]);
  if (k < sa.size() && CnfOrdinal::cmp(sa[k].first, lead) == 0) {
    out.push_back({lead, sa[k].second + sb.front().second});
    out.insert(out.end(), sb.begin() + 1, sb.end());
  } else {
    out.insert(out.end(), sb.begin(), sb.end());
  }
  return CnfOrdinal::make(std::move(out));
}

std::string CnfOrdinal::str() const {
  if (sum_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < sum_.size(); ++i) {
    if (i) out << '+';
    out << "w^(" << sum_[i].first.str() << ")*" << sum_[i].second;
  }
  return out.str();
}

CnfOrdinal embed_exp_cnf(const Term& alpha) {
  Term t = alpha;
  if (t.is(Term::Kind::Nat) && t.nat_value() == 0) t = Term::exp_seq({});
  if (!t.is(Term::Kind::ExpSeq))
    throw DomainError("embed_exp_cnf: expected a formal sum, got " +
                      alpha.str());
  std::vector<CnfOrdinal::Summand> out;
  const Term* prev = nullptr;
  for (const auto& s : t.summands()) {
    if (!s.exponent.is(Term::Kind::Nat) ||
        !s.coefficient.is(Term::Kind::Nat))
      throw DomainError("embed_exp_cnf: non-natural component in " +
                        alpha.str());
    if (prev && prev->nat_value() <= s.exponent.nat_value())
      throw DomainError("embed_exp_cnf: exponent descent violated in " +
                        alpha.str());
    prev = &s.exponent;
    out.push_back({CnfOrdinal::from_nat(s.exponent.nat_value()),
                   s.coefficient.nat_value() + 1});
  }
  return CnfOrdinal::make(std::move(out));
}

}  // namespace towerord
