#pragma once

#include <map>
#include <string>
#include <vector>

#include "towerord/order.hpp"
#include "towerord/term.hpp"
#include "towerord/tower.hpp"

namespace towerord {

// Abstract toy diagram: a node eta carries, per level i, a finite
// sequence {eta_i^m : m < lh_i(eta)} of other nodes.  The structural
// payload that a real notation system would attach is not interpreted
// here; coefficient comparisons come from caller-supplied per-level
// descriptors (the relations <<_i extended by a least element Bottom).
struct DiagramNode {
  std::string id;
  Term base_token;  // the node as an element of the top base order
  std::map<int, std::vector<std::string>> seq;  // level -> member ids
};

class DiagramFamily {
 public:
  // coeff_orders[k] is <<_{k+2} (with Bottom least), k = 0..N-3.
  DiagramFamily(int height_n, std::vector<Order> coeff_orders);

  void add_node(DiagramNode node);  // token must be a Nat or Atom
  bool has_node(const std::string& id) const;
  const DiagramNode& node(const std::string& id) const;
  std::vector<std::string> node_ids() const;  // insertion order

  int height_n() const { return spec_.height_n; }
  const TowerSpec& tower_spec() const { return spec_; }

 private:
  TowerSpec spec_;
  std::map<std::string, DiagramNode> nodes_;
  std::vector<std::string> insertion_;
};

// K_i(eta): the level-i coefficient collection, sorted unique ids.
//   K_2 = members of eta's level-2 sequence
//   K_i = union of the level-i sequences of all members of K_{i-1}
std::vector<std::string> coeffs_diagram(const DiagramFamily& fam,
                                        const std::string& id, int i);

// One adjacency of the produced sum where strict exponent descent under
// the succ-lifted level-(i+1) ordering fails.
struct DescentViolation {
  int level = 0;
  std::size_t index = 0;  // pair (index-1, index) of the summand list
  Term upper;             // exponent at index-1
  Term lower;             // exponent at index
};

struct DiagramTowerResult {
  Term term;
  std::vector<DescentViolation> violations;
  bool ok() const { return violations.empty(); }
};

// The map E_i(eta) into tower terms:
//   E_{N-1}(eta) = eta's base token
//   E_i(eta)     = sum over m = lh-1 .. 1 of  p^{E_{i+1}(eta_i^m)} * eta_i^{m-1}
//                  + p^{E_{i+1}(eta_i^0) + 1} * Bottom
//                  + p^{E_{i+1}(eta)} * Bottom
// Exponent descent is checked, not enforced: violations are reported
// alongside the term since caller-supplied <<_i need not be adequate.
DiagramTowerResult diagram_tower(const DiagramFamily& fam,
                                 const std::string& id, int i);

// gamma <_T eta on the images: computes both level-2 tower terms and
// compares them under the family's tower spec.
bool check_monotone_embedding(const DiagramFamily& fam,
                              const std::string& gamma,
                              const std::string& eta);

// Incremental construction of a diagram family from parent/child
// declarations, the closure discipline the toy generator and the
// fixture format share:
//
//   - each node keeps, per level i, a chain C_i of ancestors;
//   - a child of eta attached at level j gets C_i = [eta] ++ C_i(eta)
//     for i <= j and C_i = C_i(eta) for i > j;
//   - the level-i sequence of a node x is [x] ++ C_{i+1}(x);
//   - <<_i relates x to every member of C_i(x), with Bottom least.
//
// Children of the root should be attached at level N-1; that keeps
// every chain of a non-root node nonempty, which the embedding
// property (child maps strictly below parent) depends on.
class DiagramFamilyBuilder {
 public:
  explicit DiagramFamilyBuilder(int height_n);

  void add_root(const std::string& id);
  void add_child(const std::string& id, const std::string& parent, int level);
  DiagramFamily build() const;

 private:
  struct Entry {
    std::map<int, std::vector<std::string>> chains;  // C_i, i = 2..N-1
  };
  int height_n_;
  std::map<std::string, Entry> entries_;
  std::vector<std::string> insertion_;
};

}  // namespace towerord
