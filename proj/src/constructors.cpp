#include "towerord/constructors.hpp"

#include <algorithm>

namespace towerord {

namespace {

// "0" doubles as the empty sum wherever an ExpSeq is expected.
Term coerce_exp(const Term& t) {
  if (t.is(Term::Kind::Nat) && t.nat_value() == 0)
    return Term::exp_seq({});
  return t;
}

void require_pair(const Term& t) {
  if (!t.is(Term::Kind::Pair))
    throw DomainError("expected a pair, got " + t.str());
}

enum class DomCheck { throwing, total };

// Shared domain walk for E-terms.  Under DomCheck::throwing a shape or
// component violation raises DomainError and the result reflects only
// exponent descent; under DomCheck::total every violation yields false.
bool exp_dom_walk(const ExpOrdering& eo, const Term& raw, DomCheck mode) {
  Term t = coerce_exp(raw);
  if (!t.is(Term::Kind::ExpSeq)) {
    if (mode == DomCheck::throwing)
      throw DomainError("expected a formal sum, got " + raw.str());
    return false;
  }
  const auto& sums = t.summands();
  for (const auto& s : sums) {
    if (!eo.exponent_order->in_domain(s.exponent) ||
        !eo.coefficient_order->in_domain(s.coefficient)) {
      if (mode == DomCheck::throwing)
        throw DomainError("component outside base domain in " + raw.str());
      return false;
    }
  }
  for (std::size_t i = 0; i + 1 < sums.size(); ++i)
    if (!eo.exponent_order->less(sums[i + 1].exponent, sums[i].exponent))
      return false;
  return true;
}

void require_exp_dom(const ExpOrdering& eo, const Term& t) {
  if (!exp_dom_walk(eo, t, DomCheck::throwing))
    throw DomainError("exponents not strictly decreasing in " + t.str());
}

// Raw E-comparison on terms already known to be in dom(<_E).
bool exp_less_raw(const ExpOrdering& eo, const Term& a, const Term& b) {
  Term ca = coerce_exp(a), cb = coerce_exp(b);
  const auto& sa = ca.summands();
  const auto& sb = cb.summands();
  std::size_t n = std::min(sa.size(), sb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (sa[k] == sb[k]) continue;
    // clause 1: first differing pair decides lexicographically
    if (eo.exponent_order->less(sa[k].exponent, sb[k].exponent)) return true;
    if (sa[k].exponent == sb[k].exponent &&
        eo.coefficient_order->less(sa[k].coefficient, sb[k].coefficient))
      return true;
    return false;
  }
  // clause 2: proper componentwise prefix
  return sa.size() < sb.size();
}

}  // namespace

bool lex_less(const LexOrdering& lx, const Term& p, const Term& q) {
  require_pair(p);
  require_pair(q);
  require_in_domain(lx.first, p.first());
  require_in_domain(lx.first, q.first());
  require_in_domain(lx.second, p.second());
  require_in_domain(lx.second, q.second());
  if (lx.first->less(p.first(), q.first())) return true;
  return p.first() == q.first() && lx.second->less(p.second(), q.second());
}

Tril lexw_less(const LexOrdering& lx, const Term& p, const Term& q,
               const WfOracle& wf) {
  Tril r = tril_of(lex_less(lx, p, q));
  r = tril_and(r, tril_of(wf(p.second())));
  r = tril_and(r, tril_of(wf(q.second())));
  return r;
}

bool exp_dom(const ExpOrdering& eo, const Term& t) {
  return exp_dom_walk(eo, t, DomCheck::throwing);
}

bool exp_less(const ExpOrdering& eo, const Term& alpha, const Term& beta) {
  require_exp_dom(eo, alpha);
  require_exp_dom(eo, beta);
  return exp_less_raw(eo, alpha, beta);
}

Tril expw_less(const ExpOrdering& eo, const Term& alpha, const Term& beta,
               const WfOracle& wf) {
  Tril r = tril_of(exp_less(eo, alpha, beta));
  for (const Term* side : {&alpha, &beta}) {
    Term c = coerce_exp(*side);
    for (const auto& s : c.summands())
      r = tril_and(r, tril_of(wf(s.coefficient)));
  }
  return r;
}

AddResult add(const Term& beta, const Term& alpha, const ExpOrdering& eo) {
  require_exp_dom(eo, beta);
  require_exp_dom(eo, alpha);
  Term cb = coerce_exp(beta), ca = coerce_exp(alpha);
  const auto& sb = cb.summands();
  const auto& sa = ca.summands();
  if (!sb.empty() && !sa.empty() &&
      !eo.exponent_order->less(sa.front().exponent, sb.back().exponent)) {
    return SeamError{sb.size(), sb.back().exponent, sa.front().exponent};
  }
  std::vector<Term::Summand> sums(sb.begin(), sb.end());
  sums.insert(sums.end(), sa.begin(), sa.end());
  return Term::exp_seq(std::move(sums));
}

bool dom_up(const Term& beta, const Term& a, const ExpOrdering& eo) {
  require_exp_dom(eo, beta);
  require_in_domain(eo.exponent_order, a);
  Term cb = coerce_exp(beta);
  const auto& sb = cb.summands();
  if (sb.empty()) return true;
  const Term& last = sb.back().exponent;
  return eo.exponent_order->less(a, last) || a == last;
}

bool exp_bound_lt(const Term& alpha, const Term& a, const ExpOrdering& eo) {
  require_exp_dom(eo, alpha);
  require_in_domain(eo.exponent_order, a);
  Term ca = coerce_exp(alpha);
  const auto& sa = ca.summands();
  if (sa.empty()) return true;
  return eo.exponent_order->less(sa.front().exponent, a);
}

bool succ_less(const Order& base, const Term& x, const Term& y) {
  bool xb = x.is(Term::Kind::Succ);
  bool yb = y.is(Term::Kind::Succ);
  const Term& a = xb ? x.succ_base() : x;
  const Term& b = yb ? y.succ_base() : y;
  require_in_domain(base, a);
  require_in_domain(base, b);
  if (!xb && yb) return base->less(a, b) || a == b;  // a < b+1
  return base->less(a, b);  // a+1 < b+1, a+1 < b, and the unboxed case
}

Order lex_order(Order first, Order second) {
  auto lx = std::make_shared<LexOrdering>(LexOrdering{first, second});
  auto d = std::make_shared<OrderingDescriptor>();
  d->name = "lex(" + first->name + "," + second->name + ")";
  d->in_domain = [lx](const Term& t) {
    return t.is(Term::Kind::Pair) && lx->first->in_domain(t.first()) &&
           lx->second->in_domain(t.second());
  };
  d->less = [lx](const Term& p, const Term& q) {
    if (lx->first->less(p.first(), q.first())) return true;
    return p.first() == q.first() && lx->second->less(p.second(), q.second());
  };
  if (first->enumerate_below && second->enumerate_below &&
      second->enumerate_domain) {
    d->enumerate_below = [lx](const Term& t, std::size_t limit) {
      Enumeration out;
      // pairs <a',b'> with a' below t.first, b' anywhere
      Enumeration firsts = lx->first->enumerate_below(t.first(), limit);
      Enumeration seconds_all = lx->second->enumerate_domain(limit);
      out.complete = firsts.complete && seconds_all.complete;
      for (const Term& a : firsts.items)
        for (const Term& b : seconds_all.items) {
          if (out.items.size() == limit) {
            out.complete = false;
            return out;
          }
          out.items.push_back(Term::pair(a, b));
        }
      // pairs <t.first, b'> with b' below t.second
      Enumeration seconds = lx->second->enumerate_below(t.second(), limit);
      if (!seconds.complete) out.complete = false;
      for (const Term& b : seconds.items) {
        if (out.items.size() == limit) {
          out.complete = false;
          return out;
        }
        out.items.push_back(Term::pair(t.first(), b));
      }
      return out;
    };
  }
  if (first->enumerate_domain && second->enumerate_domain) {
    d->enumerate_domain = [lx](std::size_t limit) {
      Enumeration out;
      Enumeration fs = lx->first->enumerate_domain(limit);
      Enumeration ss = lx->second->enumerate_domain(limit);
      out.complete = fs.complete && ss.complete;
      for (const Term& a : fs.items)
        for (const Term& b : ss.items) {
          if (out.items.size() == limit) {
            out.complete = false;
            return out;
          }
          out.items.push_back(Term::pair(a, b));
        }
      return out;
    };
  }
  return d;
}

Order exp_order(Order exponent_order, Order coefficient_order) {
  auto eo = std::make_shared<ExpOrdering>(
      ExpOrdering{exponent_order, coefficient_order});
  auto d = std::make_shared<OrderingDescriptor>();
  d->name = "exp(" + exponent_order->name + "," + coefficient_order->name +
            ")";
  d->in_domain = [eo](const Term& t) {
    return exp_dom_walk(*eo, t, DomCheck::total);
  };
  d->less = [eo](const Term& a, const Term& b) {
    return exp_less_raw(*eo, a, b);
  };
  if (exponent_order->enumerate_below && coefficient_order->enumerate_below &&
      coefficient_order->enumerate_domain) {
    // Predecessors of a sum: its proper prefixes, plus every term that
    // keeps a prefix, replaces the next pair by a lexicographically
    // smaller one, and continues with an arbitrary valid tail.
    d->enumerate_below = [eo](const Term& t, std::size_t limit) {
      Enumeration out;
      Term a = coerce_exp(t);
      if (!a.is(Term::Kind::ExpSeq)) return out;  // no predecessors
      const auto& sums = a.summands();
      bool complete = true;
      std::vector<Term::Summand> acc;
      // acc followed by every tail whose exponents stay below `bound`;
      // returns false once the item limit is hit.
      std::function<bool(const Term&)> tails = [&](const Term& bound) {
        if (out.items.size() == limit) return false;
        out.items.push_back(Term::exp_seq(acc));
        Enumeration es = eo->exponent_order->enumerate_below(bound, limit);
        if (!es.complete) complete = false;
        if (es.items.empty()) return true;
        Enumeration cs = eo->coefficient_order->enumerate_domain(limit);
        if (!cs.complete) complete = false;
        for (const Term& e : es.items)
          for (const Term& c : cs.items) {
            acc.push_back({e, c});
            bool go = tails(e);
            acc.pop_back();
            if (!go) return false;
          }
        return true;
      };
      bool ok = true;
      for (std::size_t k = 0; k < sums.size(); ++k) {  // proper prefixes
        if (out.items.size() == limit) {
          ok = false;
          break;
        }
        out.items.push_back(Term::exp_seq(
            std::vector<Term::Summand>(sums.begin(), sums.begin() + k)));
      }
      for (std::size_t k = 0; ok && k < sums.size(); ++k) {
        acc.assign(sums.begin(), sums.begin() + k);
        Enumeration es =
            eo->exponent_order->enumerate_below(sums[k].exponent, limit);
        if (!es.complete) complete = false;
        Enumeration cs;
        if (!es.items.empty()) {
          cs = eo->coefficient_order->enumerate_domain(limit);
          if (!cs.complete) complete = false;
        }
        for (const Term& e : es.items) {  // smaller exponent, any coefficient
          // keep the seam with the prefix strictly descending (the base
          // order need not be transitive)
          if (k > 0 && !eo->exponent_order->less(e, sums[k - 1].exponent))
            continue;
          for (const Term& c : cs.items) {
            acc.push_back({e, c});
            ok = tails(e);
            acc.pop_back();
            if (!ok) break;
          }
          if (!ok) break;
        }
        if (!ok) break;
        Enumeration cp = eo->coefficient_order->enumerate_below(
            sums[k].coefficient, limit);
        if (!cp.complete) complete = false;
        for (const Term& c : cp.items) {  // same exponent, smaller coefficient
          acc.push_back({sums[k].exponent, c});
          ok = tails(sums[k].exponent);
          acc.pop_back();
          if (!ok) break;
        }
      }
      out.complete = complete && ok;
      return out;
    };
  }
  if (exponent_order->enumerate_domain && coefficient_order->enumerate_domain) {
    d->enumerate_domain = [eo](std::size_t limit) {
      Enumeration exps = eo->exponent_order->enumerate_domain(limit);
      Enumeration coefs = eo->coefficient_order->enumerate_domain(limit);
      Enumeration out;
      out.complete = exps.complete && coefs.complete;
      // Depth-first over strictly descending exponent chains: the empty
      // sum first, then every extension of each shorter sum.
      std::vector<Term::Summand> prefix;
      std::function<bool()> emit = [&]() {
        if (out.items.size() == limit) return false;
        out.items.push_back(Term::exp_seq(prefix));
        for (const Term& e : exps.items) {
          if (!prefix.empty() &&
              !eo->exponent_order->less(e, prefix.back().exponent))
            continue;
          for (const Term& c : coefs.items) {
            prefix.push_back({e, c});
            bool go = emit();
            prefix.pop_back();
            if (!go) return false;
          }
        }
        return true;
      };
      if (!emit()) out.complete = false;
      return out;
    };
  }
  return d;
}

Order succ_order(Order base) {
  auto d = std::make_shared<OrderingDescriptor>();
  d->name = "succ(" + base->name + ")";
  d->in_domain = [base](const Term& t) {
    if (t.is(Term::Kind::Succ)) return base->in_domain(t.succ_base());
    return base->in_domain(t);
  };
  d->less = [base](const Term& x, const Term& y) {
    return succ_less(base, x, y);
  };
  if (base->enumerate_below) {
    d->enumerate_below = [base](const Term& t, std::size_t limit) {
      bool boxed = t.is(Term::Kind::Succ);
      const Term& a = boxed ? t.succ_base() : t;
      Enumeration under = base->enumerate_below(a, limit);
      Enumeration out;
      out.complete = under.complete;
      auto push = [&](const Term& u) {
        if (out.items.size() == limit) {
          out.complete = false;
          return false;
        }
        out.items.push_back(u);
        return true;
      };
      for (const Term& u : under.items)
        if (!push(u)) return out;
      if (boxed && !push(a)) return out;  // a < a+1
      for (const Term& u : under.items) {
        switch (u.kind()) {
          case Term::Kind::Nat:
          case Term::Kind::ExpSeq:
          case Term::Kind::Atom:
            if (!push(Term::succ(u))) return out;
            break;
          default:
            break;  // unboxable base elements have no successor
        }
      }
      return out;
    };
  }
  if (base->enumerate_domain) {
    d->enumerate_domain = [base](std::size_t limit) {
      Enumeration dom = base->enumerate_domain(limit);
      Enumeration out;
      out.complete = dom.complete;
      for (const Term& u : dom.items) {
        if (out.items.size() == limit) {
          out.complete = false;
          return out;
        }
        out.items.push_back(u);
        switch (u.kind()) {
          case Term::Kind::Nat:
          case Term::Kind::ExpSeq:
          case Term::Kind::Atom:
            if (out.items.size() == limit) {
              out.complete = false;
              return out;
            }
            out.items.push_back(Term::succ(u));
            break;
          default:
            break;
        }
      }
      return out;
    };
  }
  return d;
}

}  // namespace towerord
