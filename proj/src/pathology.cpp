#include "towerord/pathology.hpp"

#include <algorithm>
#include <memory>

namespace towerord {

ProofSource never_inconsistent() {
  return {[](std::uint64_t) { return true; }, "ok"};
}

ProofSource inconsistent_at(std::uint64_t k) {
  return {[k](std::uint64_t n) { return n < k; },
          "bad=" + std::to_string(k)};
}

std::optional<std::uint64_t> find_antitone_violation(const ProofSource& ps,
                                                     std::uint64_t bound) {
  bool prev = ps.con_upto(0);
  for (std::uint64_t n = 1; n <= bound; ++n) {
    bool cur = ps.con_upto(n);
    if (!prev && cur) return n;
    prev = cur;
  }
  return std::nullopt;
}

void require_antitone(const ProofSource& ps, std::uint64_t bound) {
  if (auto n = find_antitone_violation(ps, bound))
    throw DomainError("proof source '" + ps.description +
                      "' is not antitone at " + std::to_string(*n));
}

bool kreisel_less(const ProofSource& ps, std::uint64_t n, std::uint64_t m) {
  std::uint64_t lo = std::min(n, m);
  if (ps.con_upto(lo)) return n < m;
  return n > m;
}

bool kreisel_prime_less(const ProofSource& ps, const Order& base,
                        const Term& n, const Term& m) {
  if (!n.is(Term::Kind::Nat) || !m.is(Term::Kind::Nat))
    throw DomainError("kreisel_prime_less expects naturals");
  require_in_domain(base, n);
  require_in_domain(base, m);
  return ps.con_upto(std::max(n.nat_value(), m.nat_value())) &&
         base->less(n, m);
}

bool glue_less(const ProofStream& stream, const Term& x, const Term& y) {
  auto unpack = [](const Term& t) {
    if (!t.is(Term::Kind::Pair) || !t.first().is(Term::Kind::Nat) ||
        !t.second().is(Term::Kind::Nat))
      throw DomainError("glued ordering expects pairs of naturals, got " +
                        t.str());
    return std::pair<std::uint64_t, std::uint64_t>{t.first().nat_value(),
                                                   t.second().nat_value()};
  };
  auto [n, p] = unpack(x);
  auto [m, q] = unpack(y);
  if (p != q) return p < q;
  auto it = stream.claims.find(p);
  if (it == stream.claims.end()) return false;  // no claim: empty ordering
  return ord_less(it->second, x.first(), y.first());
}

Order kreisel_order(const ProofSource& ps) {
  require_antitone(ps, 128);
  auto src = std::make_shared<ProofSource>(ps);
  auto d = std::make_shared<OrderingDescriptor>();
  d->name = "kreisel:" + ps.description;
  d->in_domain = [](const Term& t) { return t.is(Term::Kind::Nat); };
  d->less = [src](const Term& a, const Term& b) {
    return kreisel_less(*src, a.nat_value(), b.nat_value());
  };
  d->enumerate_below = [src](const Term& t, std::size_t limit) {
    std::uint64_t m = t.nat_value();
    Enumeration en;
    // Below m: the consistent initial segment (antitonicity makes the
    // first failure final).
    for (std::uint64_t n = 0; n < m; ++n) {
      if (!src->con_upto(n)) break;
      if (en.items.size() == limit) {
        en.complete = false;
        return en;
      }
      en.items.push_back(Term::nat(n));
    }
    // Above m: everything, once consistency fails at m.
    if (!src->con_upto(m)) {
      en.complete = false;  // infinitely many
      for (std::uint64_t n = m + 1; en.items.size() < limit; ++n)
        en.items.push_back(Term::nat(n));
    }
    return en;
  };
  d->enumerate_domain = [](std::size_t limit) {
    Enumeration en;
    en.complete = false;
    for (std::uint64_t n = 0; n < limit; ++n)
      en.items.push_back(Term::nat(n));
    return en;
  };
  return d;
}

Order kreisel_prime_order(const ProofSource& ps, Order base) {
  require_antitone(ps, 128);
  auto src = std::make_shared<ProofSource>(ps);
  auto d = std::make_shared<OrderingDescriptor>();
  d->name = "kreiselprime:" + ps.description + ";base=" + base->name;
  d->in_domain = [base](const Term& t) {
    return t.is(Term::Kind::Nat) && base->in_domain(t);
  };
  d->less = [src, base](const Term& a, const Term& b) {
    return src->con_upto(std::max(a.nat_value(), b.nat_value())) &&
           base->less(a, b);
  };
  if (base->enumerate_below) {
    d->enumerate_below = [src, base](const Term& t, std::size_t limit) {
      Enumeration under = base->enumerate_below(t, limit);
      Enumeration en;
      en.complete = under.complete;
      for (const Term& u : under.items) {
        if (!u.is(Term::Kind::Nat)) continue;
        if (!src->con_upto(std::max(u.nat_value(), t.nat_value()))) continue;
        en.items.push_back(u);
      }
      return en;
    };
  }
  if (base->enumerate_domain) {
    d->enumerate_domain = [base](std::size_t limit) {
      Enumeration dom = base->enumerate_domain(limit);
      Enumeration en;
      en.complete = dom.complete;
      for (const Term& u : dom.items)
        if (u.is(Term::Kind::Nat)) en.items.push_back(u);
      return en;
    };
  }
  return d;
}

Order glue_order(ProofStream stream) {
  auto st = std::make_shared<ProofStream>(std::move(stream));
  auto d = std::make_shared<OrderingDescriptor>();
  d->name = "glue:" + st->name;
  d->in_domain = [](const Term& t) {
    return t.is(Term::Kind::Pair) && t.first().is(Term::Kind::Nat) &&
           t.second().is(Term::Kind::Nat);
  };
  d->less = [st](const Term& x, const Term& y) {
    std::uint64_t p = x.second().nat_value();
    std::uint64_t q = y.second().nat_value();
    if (p != q) return p < q;
    auto it = st->claims.find(p);
    if (it == st->claims.end()) return false;
    const Order& claim = it->second;
    if (!claim->in_domain(x.first()) || !claim->in_domain(y.first()))
      return false;
    return claim->less(x.first(), y.first());
  };
  d->enumerate_below = [st](const Term& t, std::size_t limit) {
    std::uint64_t p = t.second().nat_value();
    Enumeration en;
    auto push = [&](const Term& u) {
      if (en.items.size() == limit) {
        en.complete = false;
        return false;
      }
      en.items.push_back(u);
      return true;
    };
    for (const auto& [q, claim] : st->claims) {
      if (q >= p) break;
      if (!claim->enumerate_domain) {
        en.complete = false;
        return en;
      }
      Enumeration dom = claim->enumerate_domain(limit);
      if (!dom.complete) en.complete = false;
      for (const Term& m : dom.items)
        if (!push(Term::pair(m, Term::nat(q)))) return en;
    }
    auto it = st->claims.find(p);
    if (it != st->claims.end() && it->second->in_domain(t.first())) {
      if (!it->second->enumerate_below) {
        en.complete = false;
        return en;
      }
      Enumeration under = it->second->enumerate_below(t.first(), limit);
      if (!under.complete) en.complete = false;
      for (const Term& m : under.items)
        if (!push(Term::pair(m, Term::nat(p)))) return en;
    }
    return en;
  };
  d->enumerate_domain = [st](std::size_t limit) {
    Enumeration en;
    en.complete = false;  // index space is unbounded
    for (const auto& [q, claim] : st->claims) {
      if (!claim->enumerate_domain) continue;
      Enumeration dom = claim->enumerate_domain(limit);
      for (const Term& m : dom.items) {
        if (en.items.size() == limit) return en;
        en.items.push_back(Term::pair(m, Term::nat(q)));
      }
    }
    return en;
  };
  return d;
}

}  // namespace towerord
