#include "towerord/tower.hpp"

#include "towerord/wf.hpp"

namespace towerord {

namespace {

Term coerce_sum(const Term& t) {
  if (t.is(Term::Kind::Nat) && t.nat_value() == 0) return Term::exp_seq({});
  return t;
}

void check_level(const TowerSpec& spec, int level) {
  if (level < 2 || level > spec.height_n - 1)
    throw DomainError("tower level " + std::to_string(level) +
                      " outside 2.." + std::to_string(spec.height_n - 1));
}

}  // namespace

const Order& TowerSpec::base_at(int level) const {
  check_level(*this, level);
  return bases[static_cast<std::size_t>(level - 2)];
}

const Order& TowerSpec::level_at(int level) const {
  check_level(*this, level);
  return levels[static_cast<std::size_t>(level - 2)];
}

const Order& TowerSpec::lifted_at(int level) const {
  check_level(*this, level);
  return lifted[static_cast<std::size_t>(level - 2)];
}

TowerSpec make_tower_spec(int height_n, std::vector<Order> bases) {
  if (height_n < 3)
    throw DomainError("tower height N must be at least 3");
  if (bases.size() != static_cast<std::size_t>(height_n - 2))
    throw DomainError("tower of height N=" + std::to_string(height_n) +
                      " needs exactly " + std::to_string(height_n - 2) +
                      " bases, got " + std::to_string(bases.size()));
  TowerSpec spec;
  spec.height_n = height_n;
  spec.bases = std::move(bases);
  spec.levels.resize(spec.bases.size());
  spec.lifted.resize(spec.bases.size());
  // Top level is the base itself; below, each level is E over the
  // succ-extended level above.
  std::size_t top = spec.bases.size() - 1;
  spec.levels[top] = spec.bases[top];
  spec.lifted[top] = succ_order(spec.levels[top]);
  for (std::size_t k = top; k-- > 0;) {
    spec.levels[k] = exp_order(spec.lifted[k + 1], spec.bases[k]);
    spec.lifted[k] = succ_order(spec.levels[k]);
  }
  return spec;
}

bool tower_level_valid(const TowerSpec& spec, const Term& t, int level) {
  check_level(spec, level);
  return spec.level_at(level)->in_domain(t);
}

bool tower_less(const TowerSpec& spec, const Term& alpha, const Term& beta,
                int level) {
  check_level(spec, level);
  return ord_less(spec.level_at(level), alpha, beta);
}

LevelOracle make_level_oracles(const TowerSpec& spec, std::uint64_t budget) {
  auto oracles = std::make_shared<std::vector<WfOracle>>();
  for (const Order& b : spec.bases)
    oracles->push_back(make_wf_oracle(b, budget));
  int n = spec.height_n;
  return [oracles, n](int level, const Term& t) {
    if (level < 2 || level > n - 1)
      throw DomainError("oracle level " + std::to_string(level) +
                        " outside 2.." + std::to_string(n - 1));
    return (*oracles)[static_cast<std::size_t>(level - 2)](t);
  };
}

namespace {

Tril towerw_dom_raw(const TowerSpec& spec, const Term& t, const LevelOracle& wf,
                    int level);

// Gated comparison on (possibly Succ-boxed) level-valid terms.
Tril towerw_less_raw(const TowerSpec& spec, const Term& a, const Term& b,
                     const LevelOracle& wf, int level) {
  Tril r = tril_of(spec.lifted_at(level)->less(a, b));
  r = tril_and(r, towerw_dom_raw(spec, a, wf, level));
  r = tril_and(r, towerw_dom_raw(spec, b, wf, level));
  return r;
}

Tril towerw_dom_raw(const TowerSpec& spec, const Term& t, const LevelOracle& wf,
                    int level) {
  // The formal +1 neither adds coefficients nor changes the exponent
  // chain, so it is transparent for the hereditary condition.
  if (t.is(Term::Kind::Succ))
    return towerw_dom_raw(spec, t.succ_base(), wf, level);
  if (level == spec.height_n - 1) return Tril::yes;
  Term c = coerce_sum(t);
  const auto& sums = c.summands();
  Tril r = Tril::yes;
  for (std::size_t n = 0; n + 1 < sums.size(); ++n)
    r = tril_and(r, towerw_less_raw(spec, sums[n + 1].exponent,
                                    sums[n].exponent, wf, level + 1));
  for (const auto& s : sums)
    r = tril_and(r, tril_of(wf(level, s.coefficient)));
  return r;
}

}  // namespace

Tril towerw_dom(const TowerSpec& spec, const Term& alpha, const LevelOracle& wf,
                int level) {
  check_level(spec, level);
  require_in_domain(spec.level_at(level), alpha);
  return towerw_dom_raw(spec, alpha, wf, level);
}

Tril towerw_less(const TowerSpec& spec, const Term& alpha, const Term& beta,
                 const LevelOracle& wf, int level) {
  check_level(spec, level);
  require_in_domain(spec.level_at(level), alpha);
  require_in_domain(spec.level_at(level), beta);
  Tril r = tril_of(spec.level_at(level)->less(alpha, beta));
  r = tril_and(r, towerw_dom_raw(spec, alpha, wf, level));
  r = tril_and(r, towerw_dom_raw(spec, beta, wf, level));
  return r;
}

namespace {

bool tower_bound_raw(const TowerSpec& spec, const Term& t, const Term& a,
                     int level) {
  // x+1 below a iff x below a at the base, and the +1 contributes no
  // new exponents in the sum case; unwrap either way.
  if (t.is(Term::Kind::Succ))
    return tower_bound_raw(spec, t.succ_base(), a, level);
  if (level == spec.height_n - 1)
    return spec.base_at(spec.height_n - 1)->less(t, a);
  Term c = coerce_sum(t);
  for (const auto& s : c.summands())
    if (!tower_bound_raw(spec, s.exponent, a, level + 1)) return false;
  return true;
}

}  // namespace

bool tower_bound_lt(const TowerSpec& spec, const Term& alpha, const Term& a,
                    int level) {
  check_level(spec, level);
  require_in_domain(spec.level_at(level), alpha);
  require_in_domain(spec.base_at(spec.height_n - 1), a);
  return tower_bound_raw(spec, alpha, a, level);
}

Order tower_order(const TowerSpec& spec) {
  auto inner = spec.level_at(2);
  auto d = std::make_shared<OrderingDescriptor>(*inner);
  std::string name = "tower:N=" + std::to_string(spec.height_n) + ";bases=";
  for (std::size_t k = 0; k < spec.bases.size(); ++k) {
    if (k) name += ',';
    name += spec.bases[k]->name;
  }
  d->name = std::move(name);
  return d;
}

}  // namespace towerord
