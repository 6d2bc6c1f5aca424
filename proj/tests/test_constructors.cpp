#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "towerord/constructors.hpp"
#include "towerord/order.hpp"
#include "towerord/pathology.hpp"
#include "towerord/wf.hpp"

using namespace towerord;

namespace {

Term nat(std::uint64_t v) { return Term::nat(v); }
Term P(std::uint64_t a, std::uint64_t b) {
  return Term::pair(nat(a), nat(b));
}
Term esum(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> s) {
  std::vector<Term::Summand> out;
  for (auto [e, c] : s) out.push_back({nat(e), nat(c)});
  return Term::exp_seq(std::move(out));
}

// explicit order containing a 2-cycle 5 <-> 9 plus harmless 0
Order with_cycle_on_5() {
  return explicit_order("cyc5", {nat(0), nat(5), nat(9)},
                        {{nat(5), nat(9)}, {nat(9), nat(5)}});
}

const ExpOrdering nat_eo{nat_order(), nat_order()};
const LexOrdering nat_lx{nat_order(), nat_order()};

}  // namespace

TEST_CASE("lex_less") {
  CHECK(lex_less(nat_lx, P(1, 5), P(2, 0)));   // first decides
  CHECK(lex_less(nat_lx, P(2, 1), P(2, 4)));   // ties broken by second
  CHECK_FALSE(lex_less(nat_lx, P(2, 4), P(2, 4)));
  CHECK_FALSE(lex_less(nat_lx, P(2, 0), P(1, 5)));
  CHECK_THROWS_AS(lex_less(nat_lx, nat(1), P(2, 0)), DomainError);
  CHECK_THROWS_AS(lex_less(nat_lx, P(1, 5), Term::pair(Term::bottom(), nat(0))),
                  DomainError);
}

TEST_CASE("lexw_less") {
  WfOracle always = make_wf_oracle(nat_order(), 64);
  CHECK(lexw_less(nat_lx, P(1, 5), P(2, 0), always) == Tril::yes);

  LexOrdering lx{nat_order(), with_cycle_on_5()};
  WfOracle cyc = make_wf_oracle(lx.second, 64);
  CHECK(lexw_less(lx, P(1, 5), P(2, 0), cyc) == Tril::no);  // 5 ill-founded

  LexOrdering lk{nat_order(), kreisel_order(inconsistent_at(3))};
  WfOracle kor = make_wf_oracle(lk.second, 20);
  CHECK(lexw_less(lk, P(1, 10), P(2, 0), kor) == Tril::unknown);
}

TEST_CASE("exp_dom") {
  CHECK(exp_dom(nat_eo, esum({{2, 0}, {1, 7}})));
  CHECK_FALSE(exp_dom(nat_eo, esum({{1, 0}, {1, 1}})));
  CHECK(exp_dom(nat_eo, Term::exp_seq({})));
  CHECK(exp_dom(nat_eo, nat(0)));  // "0" counts as the empty sum
  CHECK_THROWS_AS(exp_dom(nat_eo, nat(3)), DomainError);
  CHECK_THROWS_AS(exp_dom(nat_eo, Term::exp_seq({{Term::bottom(), nat(0)}})),
                  DomainError);
}

TEST_CASE("exp_less") {
  CHECK(exp_less(nat_eo, Term::exp_seq({}), esum({{0, 0}})));   // empty least
  CHECK(exp_less(nat_eo, esum({{1, 3}}), esum({{2, 0}})));      // exponents
  CHECK(exp_less(nat_eo, esum({{2, 5}, {1, 1}}), esum({{2, 5}, {1, 2}})));
  CHECK(exp_less(nat_eo, esum({{2, 5}}), esum({{2, 5}, {0, 0}})));  // prefix
  CHECK_FALSE(exp_less(nat_eo, esum({{2, 5}}), esum({{2, 5}})));
  CHECK_FALSE(exp_less(nat_eo, esum({{2, 0}}), esum({{1, 3}})));
  CHECK(exp_less(nat_eo, nat(0), esum({{0, 0}})));  // "0" as empty sum
  CHECK_THROWS_AS(exp_less(nat_eo, esum({{1, 0}, {1, 1}}), esum({{2, 0}})),
                  DomainError);
}

TEST_CASE("expw_less") {
  WfOracle always = make_wf_oracle(nat_order(), 64);
  CHECK(expw_less(nat_eo, esum({{1, 3}}), esum({{2, 0}}), always) ==
        Tril::yes);

  ExpOrdering ec{nat_order(), with_cycle_on_5()};
  WfOracle cyc = make_wf_oracle(ec.coefficient_order, 64);
  // coefficient 5 sits on the 2-cycle
  CHECK(expw_less(ec, esum({{1, 5}}), esum({{2, 0}}), cyc) == Tril::no);

  ExpOrdering ek{nat_order(), kreisel_order(inconsistent_at(3))};
  WfOracle kor = make_wf_oracle(ek.coefficient_order, 20);
  CHECK(expw_less(ek, esum({{1, 10}}), esum({{2, 0}}), kor) == Tril::unknown);
}

TEST_CASE("add is concatenation with a seam check") {
  AddResult r1 = add(Term::exp_seq({}), esum({{2, 0}}), nat_eo);
  REQUIRE(std::holds_alternative<Term>(r1));
  CHECK(std::get<Term>(r1) == esum({{2, 0}}));

  AddResult r2 = add(esum({{3, 1}}), esum({{2, 0}, {0, 4}}), nat_eo);
  REQUIRE(std::holds_alternative<Term>(r2));
  CHECK(std::get<Term>(r2) == esum({{3, 1}, {2, 0}, {0, 4}}));

  AddResult r3 = add(esum({{1, 0}}), esum({{2, 0}}), nat_eo);
  REQUIRE(std::holds_alternative<SeamError>(r3));
  const SeamError& seam = std::get<SeamError>(r3);
  CHECK(seam.position == 1);
  CHECK(seam.left_exponent == nat(1));
  CHECK(seam.right_exponent == nat(2));

  // equal seam exponents also violate strict descent
  AddResult r4 = add(esum({{2, 0}}), esum({{2, 1}}), nat_eo);
  CHECK(std::holds_alternative<SeamError>(r4));

  AddResult r5 = add(esum({{2, 0}}), Term::exp_seq({}), nat_eo);
  REQUIRE(std::holds_alternative<Term>(r5));
  CHECK(std::get<Term>(r5) == esum({{2, 0}}));
}

TEST_CASE("dom_up") {
  CHECK(dom_up(esum({{3, 1}, {2, 0}}), nat(2), nat_eo));  // equal to last
  CHECK(dom_up(esum({{3, 1}, {2, 0}}), nat(1), nat_eo));  // below last
  CHECK_FALSE(dom_up(esum({{3, 1}}), nat(5), nat_eo));
  CHECK(dom_up(Term::exp_seq({}), nat(7), nat_eo));
}

TEST_CASE("exp_bound_lt") {
  CHECK(exp_bound_lt(esum({{2, 9}, {0, 0}}), nat(3), nat_eo));
  CHECK_FALSE(exp_bound_lt(esum({{3, 0}}), nat(3), nat_eo));
  CHECK(exp_bound_lt(Term::exp_seq({}), nat(0), nat_eo));
}

TEST_CASE("succ_less") {
  Order n = nat_order();
  CHECK(succ_less(n, Term::succ(nat(2)), nat(4)));
  CHECK(succ_less(n, nat(2), Term::succ(nat(2))));  // a = b clause
  CHECK_FALSE(succ_less(n, Term::succ(nat(2)), Term::succ(nat(2))));
  CHECK(succ_less(n, Term::succ(nat(2)), Term::succ(nat(3))));
  CHECK(succ_less(n, nat(2), nat(3)));  // unboxed pairs = base
  CHECK(succ_less(n, Term::succ(nat(2)), nat(3)));   // a+1 < b iff a < b
  CHECK_FALSE(succ_less(n, nat(3), Term::succ(nat(2))));
  CHECK_FALSE(succ_less(n, Term::succ(nat(3)), Term::succ(nat(2))));
  CHECK_THROWS_AS(succ_less(n, Term::bottom(), nat(0)), DomainError);
}

TEST_CASE("succ discreteness: nothing sits between a and a+1") {
  Order n = chain_order(6);
  Order sn = succ_order(n);
  Enumeration dom = sn->enumerate_domain(100);
  REQUIRE(dom.complete);
  for (std::uint64_t a = 0; a < 6; ++a) {
    Term lo = Term::nat(a);
    Term hi = Term::succ(Term::nat(a));
    CHECK(ord_less(sn, lo, hi));
    for (const Term& x : dom.items) {
      bool strictly_between = ord_less(sn, lo, x) && ord_less(sn, x, hi);
      CHECK_FALSE(strictly_between);
    }
  }
}

TEST_CASE("lex and exp descriptor builders") {
  Order lx = lex_order(chain_order(2), chain_order(3));
  Enumeration dom = lx->enumerate_domain(100);
  REQUIRE(dom.complete);
  CHECK(dom.items.size() == 6);
  AxiomReport rep = check_order_axioms(lx, dom.items);
  CHECK(rep.strict_linear_order());

  Order ex = exp_order(nat_order(), nat_order());
  CHECK(ex->in_domain(esum({{2, 0}, {1, 7}})));
  CHECK_FALSE(ex->in_domain(esum({{1, 0}, {1, 1}})));
  CHECK_FALSE(ex->in_domain(nat(3)));
  CHECK(ex->in_domain(nat(0)));

  Enumeration preds = lx->enumerate_below(P(1, 0), 100);
  REQUIRE(preds.complete);
  CHECK(preds.items.size() == 3);  // <0,0>,<0,1>,<0,2>
}

TEST_CASE("succ_less wrapped in succ_order checks domains") {
  Order sn = succ_order(chain_order(3));
  CHECK(sn->in_domain(Term::succ(nat(2))));
  CHECK_FALSE(sn->in_domain(Term::succ(nat(7))));
  CHECK_FALSE(sn->in_domain(Term::bottom()));
  Enumeration below = sn->enumerate_below(Term::succ(nat(1)), 100);
  REQUIRE(below.complete);
  // everything <= 1 in the lifted order: 0, (0)+1, 1
  CHECK(below.items.size() == 3);
}

TEST_CASE("left addition monotone, absorption (sampled)") {
  testsupport::Rng rng(20240817);
  std::vector<Term> pool = testsupport::all_exp_terms(4, 3, 2);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int done = 0;
  while (done < 200) {
    const Term& beta = pool[pick(rng)];
    const Term& gamma = pool[pick(rng)];
    const Term& alpha = pool[pick(rng)];
    AddResult bg = add(beta, gamma, nat_eo);
    AddResult ba = add(beta, alpha, nat_eo);
    if (!std::holds_alternative<Term>(bg) ||
        !std::holds_alternative<Term>(ba))
      continue;
    ++done;
    if (exp_less(nat_eo, gamma, alpha))
      CHECK(exp_less(nat_eo, std::get<Term>(bg), std::get<Term>(ba)));
    if (!alpha.summands().empty())
      CHECK(exp_less(nat_eo, beta, std::get<Term>(ba)));
  }
}
