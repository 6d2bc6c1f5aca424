#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "towerord/diagram.hpp"
#include "towerord/order.hpp"
#include "towerord/term.hpp"

namespace towerord::testsupport {

using Rng = std::mt19937_64;

// Writes text to a fresh file under the system temp dir; removed on
// destruction.
class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("towerord-test-" + std::to_string(++counter) + ".txt"))
                .string();
    std::ofstream out(path_);
    out << text;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Random strict partial order on {0..size-1}: edges drawn respecting the
// natural index order (guaranteeing acyclicity), then transitively
// closed.  linear=true yields the full chain regardless of edge_prob.
inline Order random_strict_order(Rng& rng, std::size_t size, double edge_prob,
                                 const std::string& name,
                                 bool linear = false) {
  std::vector<std::vector<bool>> adj(size, std::vector<bool>(size, false));
  std::bernoulli_distribution flip(edge_prob);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      adj[i][j] = linear || flip(rng);
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (adj[i][k])
        for (std::size_t j = 0; j < size; ++j)
          if (adj[k][j]) adj[i][j] = true;
  std::vector<Term> elems;
  std::vector<std::pair<Term, Term>> pairs;
  for (std::size_t i = 0; i < size; ++i) elems.push_back(Term::nat(i));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (adj[i][j]) pairs.emplace_back(Term::nat(i), Term::nat(j));
  return explicit_order(name, std::move(elems), std::move(pairs));
}

// Every E-domain term over nat bases with exponents < exp_bound,
// coefficients < coeff_bound and at most max_len summands.
inline std::vector<Term> all_exp_terms(std::uint64_t exp_bound,
                                       std::uint64_t coeff_bound,
                                       std::size_t max_len) {
  std::vector<Term> out{Term::exp_seq({})};
  std::vector<Term::Summand> cur;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t ebound) {
    if (cur.size() == max_len) return;
    for (std::uint64_t e = ebound; e-- > 0;) {
      for (std::uint64_t c = 0; c < coeff_bound; ++c) {
        cur.push_back({Term::nat(e), Term::nat(c)});
        out.push_back(Term::exp_seq(cur));
        extend(e);
        cur.pop_back();
      }
    }
  };
  extend(exp_bound);
  return out;
}

// Diagram family grown by random parent/child attachment under the
// builder's closure discipline.  Children of the root attach at level
// N-1; elsewhere the attach level is capped so that every lh stays <= 3
// (lh_i = 1 + |C_{i+1}|, so chains above level 2 stay at length <= 2).
struct RandomDiagram {
  DiagramFamily family;
  std::vector<std::pair<std::string, std::string>> edges;  // (child, parent)
};

inline RandomDiagram random_diagram(Rng& rng, int height_n,
                                    std::size_t node_count) {
  DiagramFamilyBuilder b(height_n);
  b.add_root("n0");
  std::vector<std::string> ids{"n0"};
  std::map<std::string, std::map<int, std::size_t>> chain_len;
  for (int i = 2; i < height_n; ++i) chain_len["n0"][i] = 0;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t k = 1; k < node_count; ++k) {
    std::string id = "n" + std::to_string(k);
    const std::string& parent =
        ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(
            rng)];
    int level = height_n - 1;
    if (parent != "n0") {
      std::vector<int> legal{2};
      for (int j = 3; j < height_n; ++j) {
        if (chain_len[parent][j] > 1) break;
        legal.push_back(j);
      }
      level = legal[std::uniform_int_distribution<std::size_t>(
          0, legal.size() - 1)(rng)];
    }
    b.add_child(id, parent, level);
    for (int i = 2; i < height_n; ++i)
      chain_len[id][i] =
          chain_len[parent][i] + (i <= level ? std::size_t{1} : 0);
    edges.emplace_back(id, parent);
    ids.push_back(id);
  }
  return {b.build(), std::move(edges)};
}

}  // namespace towerord::testsupport
