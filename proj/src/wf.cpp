#include "towerord/wf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

namespace towerord {

namespace {

std::string chain_str(const std::vector<Term>& chain) {
  std::ostringstream out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out << ',';
    out << chain[i].str();
  }
  return out.str();
}

// One depth-first search attempt at a fixed enumeration limit.  Ranks of
// fully explored subtrees are memoized together with a maximum-rank
// predecessor so that Unknown verdicts caused by truncated enumerations
// can still present a long witnessed chain.
class DescentSearch {
 public:
  DescentSearch(const Order& ord, std::uint64_t budget, std::size_t limit)
      : ord_(ord), budget_(budget), limit_(limit) {}

  // Returns the verdict, or nullopt when the enumeration limit proved
  // too small to build the required evidence (caller escalates).
  std::optional<WfVerdict> run(const Term& a) {
    auto rank = explore(a, 0);
    if (rank) {
      WfVerdict v;
      v.cls = WfClass::wellfounded;
      v.rank = *rank;
      return v;
    }
    if (needs_escalation_) return std::nullopt;
    return result_;
  }

 private:
  struct MemoEntry {
    std::uint64_t rank;
    std::optional<Term> deepest_pred;
  };

  std::optional<std::uint64_t> explore(const Term& x, std::uint64_t depth) {
    if (auto it = memo_.find(x); it != memo_.end()) return it->second.rank;
    if (on_path_.count(x)) {
      result_.cls = WfClass::illfounded;
      result_.chain = path_;
      result_.chain.push_back(x);
      return std::nullopt;
    }
    Enumeration en = ord_->enumerate_below(x, limit_);
    if (en.items.empty() && en.complete) {
      memo_.emplace(x, MemoEntry{0, std::nullopt});
      return 0;
    }
    if (depth == budget_) {
      result_.cls = WfClass::unknown;
      result_.chain = path_;
      result_.chain.push_back(x);
      return std::nullopt;
    }
    path_.push_back(x);
    on_path_.emplace(x, path_.size() - 1);
    std::uint64_t best = 0;
    std::optional<Term> best_pred;
    for (const Term& p : en.items) {
      auto r = explore(p, depth + 1);
      if (!r) {
        path_.pop_back();
        on_path_.erase(x);
        return std::nullopt;
      }
      if (!best_pred || *r + 1 > best) {
        best = *r + 1;
        best_pred = p;
      }
    }
    path_.pop_back();
    on_path_.erase(x);
    if (!en.complete) {
      // Every sampled predecessor is wellfounded, but the sample was
      // truncated: report Unknown with the deepest chain we can splice
      // together from the memoized cone.
      result_.cls = WfClass::unknown;
      result_.chain = path_;
      result_.chain.push_back(x);
      std::optional<Term> cur = best_pred;
      while (cur && result_.chain.size() < budget_ + 1) {
        result_.chain.push_back(*cur);
        auto it = memo_.find(*cur);
        cur = it == memo_.end() ? std::nullopt : it->second.deepest_pred;
      }
      if (result_.chain.size() < budget_ + 1) needs_escalation_ = true;
      return std::nullopt;
    }
    memo_.emplace(x, MemoEntry{best, best_pred});
    return best;
  }

  const Order& ord_;
  std::uint64_t budget_;
  std::size_t limit_;
  std::map<Term, MemoEntry, TermLess> memo_;
  std::vector<Term> path_;
  std::map<Term, std::size_t, TermLess> on_path_;
  WfVerdict result_;
  bool needs_escalation_ = false;
};

EvidenceReport check_descending(const Order& ord,
                                const std::vector<Term>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!ord->less(chain[i + 1], chain[i]))
      return {false, "chain step " + std::to_string(i) + " does not descend: " +
                         chain[i + 1].str() + " vs " + chain[i].str()};
  }
  return {true, ""};
}

}  // namespace

WfVerdict wf_member(const Order& ord, const Term& a, std::uint64_t budget) {
  if (budget == 0) throw DomainError("wf_member: budget must be positive");
  require_in_domain(ord, a);
  if (!ord->enumerate_below)
    throw NoEnumeratorError("wf_member: " + ord->name +
                            " cannot enumerate predecessors");
  std::size_t limit = std::max<std::size_t>(budget + 1, 64);
  for (int attempt = 0; attempt < 4; ++attempt, limit *= 4) {
    DescentSearch search(ord, budget, limit);
    auto verdict = search.run(a);
    if (!verdict) continue;
    // Self-audit before handing the verdict out.
    EvidenceReport rep = verify_verdict(ord, a, *verdict, budget);
    if (!rep.ok)
      throw InternalError("wf_member produced bad evidence: " + rep.detail);
    return *verdict;
  }
  throw InternalError("wf_member: could not assemble evidence for " +
                      a.str() + " under " + ord->name);
}

EvidenceReport verify_verdict(const Order& ord, const Term& a,
                              const WfVerdict& v, std::uint64_t budget) {
  switch (v.cls) {
    case WfClass::wellfounded: {
      // Re-materialize the full cone breadth-first, then recompute the
      // rank independently.
      if (!ord->enumerate_below) return {false, "no enumerator for cone"};
      std::vector<Term> cone{a};
      std::map<Term, bool, TermLess> seen{{a, true}};
      const std::size_t kConeCap = 200000;
      for (std::size_t i = 0; i < cone.size(); ++i) {
        Enumeration en = ord->enumerate_below(cone[i], kConeCap);
        if (!en.complete)
          return {false, "cone enumeration incomplete at " + cone[i].str()};
        for (const Term& p : en.items) {
          if (seen.emplace(p, true).second) {
            if (cone.size() >= kConeCap) return {false, "cone too large"};
            cone.push_back(p);
          }
        }
      }
      try {
        FiniteRestriction r = restrict_order(ord, cone);
        std::uint64_t rank = rank_finite(r, a);
        if (rank != v.rank)
          return {false, "rank mismatch: verdict " + std::to_string(v.rank) +
                             ", recomputed " + std::to_string(rank)};
      } catch (const CycleError& e) {
        return {false, std::string("cycle in claimed wellfounded cone: ") +
                           e.what()};
      }
      return {true, ""};
    }
    case WfClass::illfounded: {
      if (v.chain.size() < 2) return {false, "lasso too short"};
      if (v.chain.front() != a) return {false, "lasso does not start at query"};
      EvidenceReport rep = check_descending(ord, v.chain);
      if (!rep.ok) return rep;
      const Term& last = v.chain.back();
      for (std::size_t i = 0; i + 1 < v.chain.size(); ++i)
        if (v.chain[i] == last) return {true, ""};
      return {false,
              "lasso tail never repeats: " + chain_str(v.chain)};
    }
    case WfClass::unknown: {
      if (v.chain.front() != a) return {false, "chain does not start at query"};
      if (v.chain.size() != budget + 1)
        return {false, "chain has " + std::to_string(v.chain.size() - 1) +
                           " steps, budget is " + std::to_string(budget)};
      return check_descending(ord, v.chain);
    }
  }
  return {false, "unreachable verdict class"};
}

std::uint64_t rank_finite(const FiniteRestriction& r, const Term& a) {
  auto idx = r.index_of(a);
  if (!idx) throw DomainError("rank_finite: " + a.str() +
                              " not in the restriction");
  enum Color { white, gray, black };
  std::vector<Color> color(r.elements().size(), white);
  std::vector<std::uint64_t> rank(r.elements().size(), 0);
  std::vector<std::size_t> stack;

  // Recursive longest-chain with cycle detection.
  std::function<std::uint64_t(std::size_t)> visit =
      [&](std::size_t i) -> std::uint64_t {
    if (color[i] == black) return rank[i];
    if (color[i] == gray) {
      // Reconstruct the lasso: from the first stack occurrence of i
      // down to the top, then back to i.
      std::vector<Term> lasso;
      auto pos = std::find(stack.begin(), stack.end(), i);
      for (auto it = pos; it != stack.end(); ++it)
        lasso.push_back(r.elements()[*it]);
      lasso.push_back(r.elements()[i]);
      throw CycleError("cycle reachable in restriction of " + r.source(),
                       lasso);
    }
    color[i] = gray;
    stack.push_back(i);
    std::uint64_t best = 0;
    for (std::size_t p : r.preds(i)) {
      std::uint64_t rp = visit(p);
      best = std::max(best, rp + 1);
    }
    stack.pop_back();
    color[i] = black;
    rank[i] = best;
    return best;
  };
  return visit(*idx);
}

std::uint64_t order_type_finite(const FiniteRestriction& r) {
  const auto& e = r.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (r.edge(i, i))
      throw NotLinearError("reflexive element " + e[i].str(), {e[i]});
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      bool ij = r.edge(i, j), ji = r.edge(j, i);
      if (ij && ji)
        throw NotLinearError(
            "two-cycle " + e[i].str() + " / " + e[j].str(), {e[i], e[j]});
      if (!ij && !ji)
        throw NotLinearError(
            "incomparable " + e[i].str() + " / " + e[j].str(), {e[i], e[j]});
    }
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      for (std::size_t k = 0; k < e.size(); ++k)
        if (r.edge(i, j) && r.edge(j, k) && !r.edge(i, k))
          throw NotLinearError("transitivity fails at " + e[i].str() + " < " +
                                   e[j].str() + " < " + e[k].str(),
                               {e[i], e[j], e[k]});
  return e.size();
}

WfOracle make_wf_oracle(const Order& ord, std::uint64_t budget) {
  auto memo = std::make_shared<std::map<Term, WfClass, TermLess>>();
  return [ord, budget, memo](const Term& t) {
    if (auto it = memo->find(t); it != memo->end()) return it->second;
    WfClass c = wf_member(ord, t, budget).cls;
    memo->emplace(t, c);
    return c;
  };
}

}  // namespace towerord
