#include "towerord/pathology.hpp"

#include <vector>

#include "doctest.h"
#include "towerord/expr.hpp"
#include "towerord/order.hpp"
#include "towerord/term.hpp"
#include "towerord/wf.hpp"

using namespace towerord;

namespace {

Term nat(std::uint64_t v) { return Term::nat(v); }

}  // namespace

TEST_CASE("proof sources and antitonicity") {
  ProofSource ok = never_inconsistent();
  CHECK(ok.con_upto(0));
  CHECK(ok.con_upto(1000000));
  CHECK(ok.description == "ok");

  ProofSource bad = inconsistent_at(3);
  CHECK(bad.con_upto(2));
  CHECK_FALSE(bad.con_upto(3));
  CHECK_FALSE(bad.con_upto(100));
  CHECK(bad.description == "bad=3");

  CHECK_FALSE(find_antitone_violation(ok, 200).has_value());
  CHECK_FALSE(find_antitone_violation(bad, 200).has_value());
  CHECK_NOTHROW(require_antitone(bad, 200));

  // "Consistency recovers at 3": not antitone, caught at the flip.
  ProofSource flaky{[](std::uint64_t n) { return n != 2; }, "flaky"};
  auto v = find_antitone_violation(flaky, 200);
  REQUIRE(v.has_value());
  CHECK(*v == 3);
  CHECK_THROWS_AS(require_antitone(flaky, 200), DomainError);
  CHECK_THROWS_AS(kreisel_order(flaky), DomainError);
}

TEST_CASE("kreisel_less") {
  ProofSource ok = never_inconsistent();
  ProofSource bad = inconsistent_at(3);

  // Consistent region: the usual order.
  CHECK(kreisel_less(ok, 3, 5));
  CHECK_FALSE(kreisel_less(ok, 5, 3));
  CHECK(kreisel_less(bad, 1, 2));
  CHECK_FALSE(kreisel_less(bad, 2, 1));

  // min looks inconsistent: order flips.
  CHECK(kreisel_less(bad, 5, 4));
  CHECK_FALSE(kreisel_less(bad, 4, 5));
  CHECK(kreisel_less(bad, 10, 3));
  CHECK_FALSE(kreisel_less(bad, 3, 10));

  // Straddling the failure point: min = 2 is still consistent.
  CHECK(kreisel_less(bad, 2, 7));
  CHECK_FALSE(kreisel_less(bad, 7, 2));

  CHECK_FALSE(kreisel_less(bad, 6, 6));
}

TEST_CASE("kreisel order descriptor") {
  Order k = kreisel_order(inconsistent_at(3));
  CHECK(k->name == "kreisel:bad=3");
  CHECK(k->in_domain(nat(12)));
  CHECK_FALSE(k->in_domain(Term::atom("x")));

  // Below a consistent point: the initial segment, complete.
  Enumeration b1 = k->enumerate_below(nat(1), 64);
  CHECK(b1.complete);
  CHECK(b1.items == std::vector<Term>{nat(0)});

  // Below an inconsistent point: initial segment plus everything above.
  Enumeration b10 = k->enumerate_below(nat(10), 8);
  CHECK_FALSE(b10.complete);
  CHECK(b10.items ==
        std::vector<Term>{nat(0), nat(1), nat(2), nat(11), nat(12), nat(13),
                          nat(14), nat(15)});

  // kreisel:ok is just the naturals.
  Order kok = kreisel_order(never_inconsistent());
  FiniteRestriction fr = restrict_order(kok, [] {
    std::vector<Term> v;
    for (std::uint64_t i = 0; i <= 10; ++i) v.push_back(Term::nat(i));
    return v;
  }());
  CHECK(order_type_finite(fr) == 11);

  // The chain the search reports for bad=3 really descends.
  WfVerdict verdict = wf_member(k, nat(10), 20);
  REQUIRE(verdict.cls == WfClass::unknown);
  REQUIRE(verdict.chain.size() == 21);
  ProofSource bad = inconsistent_at(3);
  for (std::size_t i = 0; i + 1 < verdict.chain.size(); ++i)
    CHECK(kreisel_less(bad, verdict.chain[i + 1].nat_value(),
                       verdict.chain[i].nat_value()));

  // Below the failure point the order is honestly wellfounded.
  WfVerdict low = wf_member(k, nat(1), 20);
  CHECK(low.cls == WfClass::wellfounded);
  CHECK(low.rank == 1);
}

TEST_CASE("kreisel_prime_less") {
  ProofSource bad = inconsistent_at(3);
  Order base = nat_order();

  CHECK(kreisel_prime_less(bad, base, nat(1), nat(2)));
  CHECK_FALSE(kreisel_prime_less(bad, base, nat(2), nat(1)));
  CHECK_FALSE(kreisel_prime_less(bad, base, nat(1), nat(5)));  // max looks bad
  CHECK_FALSE(kreisel_prime_less(bad, base, nat(4), nat(5)));
  CHECK_THROWS_AS(kreisel_prime_less(bad, base, Term::atom("x"), nat(1)),
                  DomainError);
}

TEST_CASE("kreisel-prime order descriptor") {
  Order kp = kreisel_prime_order(inconsistent_at(3), nat_order());
  CHECK(kp->name == "kreiselprime:bad=3;base=nat");

  // Everything at or above the failure point is a minimal element.
  WfVerdict hi = wf_member(kp, nat(50), 30);
  CHECK(hi.cls == WfClass::wellfounded);
  CHECK(hi.rank == 0);

  WfVerdict mid = wf_member(kp, nat(2), 30);
  CHECK(mid.cls == WfClass::wellfounded);
  CHECK(mid.rank == 2);

  // Rank never exceeds the failure point.
  for (std::uint64_t n = 0; n <= 12; ++n) {
    WfVerdict v = wf_member(kp, nat(n), 40);
    REQUIRE(v.cls == WfClass::wellfounded);
    CHECK(v.rank <= 3);
    CHECK(verify_verdict(kp, nat(n), v, 40).ok);
  }
}

TEST_CASE("glue_less") {
  ProofStream st;
  st.name = "s";
  st.claims[4] = chain_order(3);

  // Lower index wins outright, claims or not.
  CHECK(glue_less(st, Term::pair(nat(9), nat(1)), Term::pair(nat(0), nat(2))));
  CHECK_FALSE(
      glue_less(st, Term::pair(nat(0), nat(2)), Term::pair(nat(9), nat(1))));

  // Equal claimed index: the claimed ordering decides.
  CHECK(glue_less(st, Term::pair(nat(1), nat(4)), Term::pair(nat(2), nat(4))));
  CHECK_FALSE(
      glue_less(st, Term::pair(nat(2), nat(4)), Term::pair(nat(1), nat(4))));

  // Equal unclaimed index: the empty ordering relates nothing.
  CHECK_FALSE(
      glue_less(st, Term::pair(nat(1), nat(7)), Term::pair(nat(2), nat(7))));

  CHECK_THROWS_AS(glue_less(st, nat(3), Term::pair(nat(0), nat(0))),
                  DomainError);
}

TEST_CASE("glue order descriptor") {
  ProofStream st;
  st.name = "mix";
  st.claims[1] = chain_order(2);
  st.claims[4] = chain_order(3);
  Order g = glue_order(st);
  CHECK(g->name == "glue:mix");
  CHECK(g->in_domain(Term::pair(nat(5), nat(99))));
  CHECK_FALSE(g->in_domain(nat(5)));

  // Searchable part: claimed members below the query.
  Enumeration below = g->enumerate_below(Term::pair(nat(2), nat(4)), 64);
  CHECK(below.complete);
  CHECK(below.items ==
        std::vector<Term>{Term::pair(nat(0), nat(1)), Term::pair(nat(1), nat(1)),
                          Term::pair(nat(0), nat(4)),
                          Term::pair(nat(1), nat(4))});

  WfVerdict v = wf_member(g, Term::pair(nat(2), nat(4)), 40);
  CHECK(v.cls == WfClass::wellfounded);
  CHECK(v.rank == 4);
  CHECK(verify_verdict(g, Term::pair(nat(2), nat(4)), v, 40).ok);

  // A claimed "wellordering" with a cycle is caught as a lasso.
  ProofStream cyc;
  cyc.name = "cyc";
  cyc.claims[2] = explicit_order("two-cycle", {nat(0), nat(1)},
                                 {{nat(0), nat(1)}, {nat(1), nat(0)}});
  Order gc = glue_order(cyc);
  WfVerdict w = wf_member(gc, Term::pair(nat(0), nat(2)), 40);
  REQUIRE(w.cls == WfClass::illfounded);
  CHECK(w.chain.front() == Term::pair(nat(0), nat(2)));
  CHECK(w.chain.back() == w.chain.front());
}
