#include "towerord/order.hpp"

#include <algorithm>
#include <map>

namespace towerord {

void require_in_domain(const Order& ord, const Term& t) {
  if (!ord->in_domain(t))
    throw DomainError(t.str() + " is not in the domain of " + ord->name);
}

bool ord_less(const Order& ord, const Term& a, const Term& b) {
  require_in_domain(ord, a);
  require_in_domain(ord, b);
  return ord->less(a, b);
}

FiniteRestriction::FiniteRestriction(
    std::vector<Term> elements,
    std::set<std::pair<std::size_t, std::size_t>> edges, std::string source)
    : elements_(std::move(elements)),
      edges_(std::move(edges)),
      source_(std::move(source)) {}

bool FiniteRestriction::edge(std::size_t i, std::size_t j) const {
  return edges_.count({i, j}) != 0;
}

std::optional<std::size_t> FiniteRestriction::index_of(const Term& t) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), t,
                             TermLess{});
  if (it != elements_.end() && *it == t)
    return static_cast<std::size_t>(it - elements_.begin());
  return std::nullopt;
}

std::vector<std::size_t> FiniteRestriction::preds(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (edge(i, j)) out.push_back(i);
  return out;
}

FiniteRestriction restrict_order(const Order& ord,
                                 std::span<const Term> elements) {
  std::vector<Term> elems;
  elems.reserve(elements.size());
  for (const Term& t : elements) {
    require_in_domain(ord, t);
    elems.push_back(t);
  }
  std::sort(elems.begin(), elems.end(), TermLess{});
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (ord->less(elems[i], elems[j])) edges.insert({i, j});
  return FiniteRestriction(std::move(elems), std::move(edges), ord->name);
}

AxiomReport check_order_axioms(const Order& ord,
                               std::span<const Term> elements) {
  FiniteRestriction r = restrict_order(ord, elements);
  const auto& e = r.elements();
  AxiomReport report;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (r.edge(i, i)) report.irreflexivity_violations.push_back(e[i]);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      if (r.edge(i, j) && r.edge(j, i) && i < j)
        report.antisymmetry_violations.push_back({e[i], e[j]});
      if (!r.edge(i, j) && !r.edge(j, i) && i < j)
        report.incomparable_pairs.push_back({e[i], e[j]});
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (r.edge(i, j) && r.edge(j, k) && !r.edge(i, k))
          report.transitivity_violations.push_back({e[i], e[j], e[k]});
      }
    }
  return report;
}

Order nat_order() {
  auto d = std::make_shared<OrderingDescriptor>();
  d->name = "nat";
  d->in_domain = [](const Term& t) { return t.is(Term::Kind::Nat); };
  d->less = [](const Term& a, const Term& b) {
    return a.nat_value() < b.nat_value();
  };
  d->enumerate_below = [](const Term& t, std::size_t limit) {
    Enumeration en;
    std::uint64_t n = t.nat_value();
    for (std::uint64_t i = 0; i < n && en.items.size() < limit; ++i)
      en.items.push_back(Term::nat(i));
    en.complete = en.items.size() == n;
    return en;
  };
  d->enumerate_domain = [](std::size_t limit) {
    Enumeration en;
    for (std::uint64_t i = 0; i < limit; ++i) en.items.push_back(Term::nat(i));
    en.complete = false;  // the domain is infinite
    return en;
  };
  return d;
}

Order chain_order(std::uint64_t k) {
  auto d = std::make_shared<OrderingDescriptor>();
  d->name = "chain:" + std::to_string(k);
  d->in_domain = [k](const Term& t) {
    return t.is(Term::Kind::Nat) && t.nat_value() < k;
  };
  d->less = [](const Term& a, const Term& b) {
    return a.nat_value() < b.nat_value();
  };
  d->enumerate_below = [](const Term& t, std::size_t limit) {
    Enumeration en;
    std::uint64_t n = t.nat_value();
    for (std::uint64_t i = 0; i < n && en.items.size() < limit; ++i)
      en.items.push_back(Term::nat(i));
    en.complete = en.items.size() == n;
    return en;
  };
  d->enumerate_domain = [k](std::size_t limit) {
    Enumeration en;
    for (std::uint64_t i = 0; i < k && en.items.size() < limit; ++i)
      en.items.push_back(Term::nat(i));
    en.complete = en.items.size() == k;
    return en;
  };
  return d;
}

Order explicit_order(std::string name, std::vector<Term> elements,
                     std::vector<std::pair<Term, Term>> pairs) {
  std::sort(elements.begin(), elements.end(), TermLess{});
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  auto universe = std::make_shared<std::vector<Term>>(std::move(elements));
  auto has_elem = [universe](const Term& t) {
    return std::binary_search(universe->begin(), universe->end(), t,
                              TermLess{});
  };

  struct PairLess {
    bool operator()(const std::pair<Term, Term>& a,
                    const std::pair<Term, Term>& b) const {
      int c = Term::compare(a.first, b.first);
      if (c != 0) return c < 0;
      return Term::compare(a.second, b.second) < 0;
    }
  };
  auto edge_set =
      std::make_shared<std::set<std::pair<Term, Term>, PairLess>>();
  for (auto& [lo, hi] : pairs) {
    if (!has_elem(lo) || !has_elem(hi))
      throw DomainError("explicit_order " + name + ": pair (" + lo.str() +
                        "," + hi.str() + ") mentions a non-element");
    edge_set->insert({lo, hi});
  }

  auto d = std::make_shared<OrderingDescriptor>();
  d->name = std::move(name);
  d->in_domain = has_elem;
  d->less = [edge_set](const Term& a, const Term& b) {
    return edge_set->count({a, b}) != 0;
  };
  d->enumerate_below = [universe, edge_set](const Term& t, std::size_t limit) {
    Enumeration en;
    for (const Term& u : *universe) {
      if (edge_set->count({u, t}) == 0) continue;
      if (en.items.size() == limit) {
        en.complete = false;
        return en;
      }
      en.items.push_back(u);
    }
    en.complete = true;
    return en;
  };
  d->enumerate_domain = [universe](std::size_t limit) {
    Enumeration en;
    for (const Term& u : *universe) {
      if (en.items.size() == limit) {
        en.complete = false;
        return en;
      }
      en.items.push_back(u);
    }
    en.complete = true;
    return en;
  };
  return d;
}

}  // namespace towerord
