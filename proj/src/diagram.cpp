#include "towerord/diagram.hpp"

#include <algorithm>
#include <set>

namespace towerord {

DiagramFamily::DiagramFamily(int height_n, std::vector<Order> coeff_orders)
    : spec_(make_tower_spec(height_n, std::move(coeff_orders))) {}

void DiagramFamily::add_node(DiagramNode node) {
  if (!node.base_token.is(Term::Kind::Nat) &&
      !node.base_token.is(Term::Kind::Atom))
    throw DomainError("diagram node " + node.id +
                      ": base token must be a Nat or Atom");
  if (nodes_.count(node.id))
    throw DomainError("duplicate diagram node " + node.id);
  insertion_.push_back(node.id);
  nodes_.emplace(node.id, std::move(node));
}

bool DiagramFamily::has_node(const std::string& id) const {
  return nodes_.count(id) != 0;
}

const DiagramNode& DiagramFamily::node(const std::string& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end())
    throw DomainError("unknown diagram node " + id);
  return it->second;
}

std::vector<std::string> DiagramFamily::node_ids() const { return insertion_; }

namespace {

const std::vector<std::string>& seq_at(const DiagramNode& n, int i) {
  auto it = n.seq.find(i);
  if (it == n.seq.end() || it->second.empty())
    throw DomainError("diagram node " + n.id + " has no level-" +
                      std::to_string(i) + " sequence");
  return it->second;
}

}  // namespace

std::vector<std::string> coeffs_diagram(const DiagramFamily& fam,
                                        const std::string& id, int i) {
  int n = fam.height_n();
  if (i < 2 || i > n - 2)
    throw DomainError("coeffs_diagram level " + std::to_string(i) +
                      " outside 2.." + std::to_string(n - 2));
  std::set<std::string> layer(seq_at(fam.node(id), 2).begin(),
                              seq_at(fam.node(id), 2).end());
  for (int lvl = 3; lvl <= i; ++lvl) {
    std::set<std::string> next;
    for (const std::string& rho : layer) {
      const auto& s = seq_at(fam.node(rho), lvl);
      next.insert(s.begin(), s.end());
    }
    layer = std::move(next);
  }
  return {layer.begin(), layer.end()};
}

namespace {

Term diagram_tower_rec(const DiagramFamily& fam, const std::string& id, int i,
                       std::vector<DescentViolation>& violations) {
  const DiagramNode& d = fam.node(id);
  int n = fam.height_n();
  if (i == n - 1) return d.base_token;
  const auto& seq = seq_at(d, i);
  std::size_t lh = seq.size();
  std::vector<Term::Summand> sums;
  for (std::size_t m = lh; m-- > 1;)
    sums.push_back({diagram_tower_rec(fam, seq[m], i + 1, violations),
                    fam.node(seq[m - 1]).base_token});
  sums.push_back(
      {Term::succ(diagram_tower_rec(fam, seq[0], i + 1, violations)),
       Term::bottom()});
  sums.push_back(
      {diagram_tower_rec(fam, id, i + 1, violations), Term::bottom()});
  // Exponent descent under the succ-lifted level-(i+1) ordering.
  const Order& lift = fam.tower_spec().lifted_at(i + 1);
  for (std::size_t k = 0; k + 1 < sums.size(); ++k) {
    if (!lift->in_domain(sums[k].exponent) ||
        !lift->in_domain(sums[k + 1].exponent) ||
        !lift->less(sums[k + 1].exponent, sums[k].exponent)) {
      violations.push_back(DescentViolation{i, k + 1, sums[k].exponent,
                                            sums[k + 1].exponent});
    }
  }
  return Term::exp_seq(std::move(sums));
}

}  // namespace

DiagramTowerResult diagram_tower(const DiagramFamily& fam,
                                 const std::string& id, int i) {
  int n = fam.height_n();
  if (i < 2 || i > n - 1)
    throw DomainError("diagram_tower level " + std::to_string(i) +
                      " outside 2.." + std::to_string(n - 1));
  DiagramTowerResult out;
  out.term = diagram_tower_rec(fam, id, i, out.violations);
  return out;
}

bool check_monotone_embedding(const DiagramFamily& fam,
                              const std::string& gamma,
                              const std::string& eta) {
  Term tg = diagram_tower(fam, gamma, 2).term;
  Term te = diagram_tower(fam, eta, 2).term;
  return tower_less(fam.tower_spec(), tg, te, 2);
}

DiagramFamilyBuilder::DiagramFamilyBuilder(int height_n)
    : height_n_(height_n) {
  if (height_n < 4)
    throw DomainError("diagram families need height N >= 4");
}

void DiagramFamilyBuilder::add_root(const std::string& id) {
  if (entries_.count(id)) throw DomainError("duplicate diagram id " + id);
  Entry e;
  for (int i = 2; i <= height_n_ - 1; ++i) e.chains[i] = {};
  entries_.emplace(id, std::move(e));
  insertion_.push_back(id);
}

void DiagramFamilyBuilder::add_child(const std::string& id,
                                     const std::string& parent, int level) {
  if (entries_.count(id)) throw DomainError("duplicate diagram id " + id);
  auto pit = entries_.find(parent);
  if (pit == entries_.end())
    throw DomainError("unknown parent diagram id " + parent);
  if (level < 2 || level > height_n_ - 1)
    throw DomainError("attach level " + std::to_string(level) +
                      " outside 2.." + std::to_string(height_n_ - 1));
  Entry e;
  for (int i = 2; i <= height_n_ - 1; ++i) {
    e.chains[i] = pit->second.chains.at(i);
    if (i <= level) e.chains[i].insert(e.chains[i].begin(), parent);
  }
  entries_.emplace(id, std::move(e));
  insertion_.push_back(id);
}

DiagramFamily DiagramFamilyBuilder::build() const {
  // <<_i: x below every member of its chain C_i(x); Bottom below all.
  std::vector<Order> coeff_orders;
  for (int i = 2; i <= height_n_ - 1; ++i) {
    auto chains = std::make_shared<std::map<std::string, std::set<std::string>>>();
    for (const auto& [id, e] : entries_) {
      const auto& c = e.chains.at(i);
      (*chains)[id] = std::set<std::string>(c.begin(), c.end());
    }
    auto d = std::make_shared<OrderingDescriptor>();
    d->name = "diag-coeff:" + std::to_string(i);
    d->in_domain = [chains](const Term& t) {
      if (t.is(Term::Kind::Bottom)) return true;
      return t.is(Term::Kind::Atom) && chains->count(t.atom_id()) != 0;
    };
    d->less = [chains](const Term& a, const Term& b) {
      if (b.is(Term::Kind::Bottom)) return false;
      if (a.is(Term::Kind::Bottom)) return true;
      auto it = chains->find(a.atom_id());
      return it != chains->end() && it->second.count(b.atom_id()) != 0;
    };
    d->enumerate_below = [chains](const Term& t, std::size_t limit) {
      // Predecessors: Bottom plus every x whose chain contains t.
      Enumeration en;
      if (t.is(Term::Kind::Bottom)) return en;
      en.items.push_back(Term::bottom());
      for (const auto& [id, chain] : *chains) {
        if (!chain.count(t.atom_id())) continue;
        if (en.items.size() == limit) {
          en.complete = false;
          return en;
        }
        en.items.push_back(Term::atom(id));
      }
      return en;
    };
    d->enumerate_domain = [chains](std::size_t limit) {
      Enumeration en;
      en.items.push_back(Term::bottom());
      for (const auto& [id, chain] : *chains) {
        if (en.items.size() == limit) {
          en.complete = false;
          return en;
        }
        en.items.push_back(Term::atom(id));
      }
      return en;
    };
    coeff_orders.push_back(std::move(d));
  }

  DiagramFamily fam(height_n_, std::move(coeff_orders));
  for (const std::string& id : insertion_) {
    const Entry& e = entries_.at(id);
    DiagramNode node;
    node.id = id;
    node.base_token = Term::atom(id);
    for (int i = 2; i <= height_n_ - 2; ++i) {
      std::vector<std::string> s{id};
      const auto& up = e.chains.at(i + 1);
      s.insert(s.end(), up.begin(), up.end());
      node.seq[i] = std::move(s);
    }
    fam.add_node(std::move(node));
  }
  return fam;
}

}  // namespace towerord
