#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "towerord/diagram.hpp"
#include "towerord/expr.hpp"

namespace towerord {

// Plain-text fixture: one declaration per line, '#' starts a comment.
//
//   [order <name>] expr=<OrderExpr>
//   [stream <name>] <index>=wo:<OrderExpr>
//   [stream <name>] <index>=notwo
//   [diagram <name>] N=<height>
//   [diagram <name>] <id>=root
//   [diagram <name>] <id>=<parent>:<level>
//   [check] kind=<subcommand> args=<arg> <arg> ...
//
// Orders may reference earlier orders by name and streams via
// glue:<name>; checks run like the corresponding CLI subcommand, plus
// the fixture-only kind `embed <diagram> <gamma-id> <eta-id>`.
struct DiagramDecl {
  std::string id;
  std::optional<std::string> parent;  // nullopt = root
  int level = 0;                      // attach level (roots: unused)
  bool operator==(const DiagramDecl&) const = default;
};

struct FixtureCheck {
  std::string kind;
  std::vector<std::string> args;
  bool operator==(const FixtureCheck&) const = default;
};

struct Fixture {
  std::vector<std::pair<std::string, std::string>> orders;  // name, expr
  // name -> index -> "wo:<expr>" or "notwo"; names in declaration order
  std::vector<std::pair<std::string, std::map<std::uint64_t, std::string>>>
      streams;
  // name, (height; declarations in creation order)
  struct Diagram {
    int height_n = 4;
    std::vector<DiagramDecl> decls;
    bool operator==(const Diagram&) const = default;
  };
  std::vector<std::pair<std::string, Diagram>> diagrams;
  std::vector<FixtureCheck> checks;
  bool operator==(const Fixture&) const = default;
};

Fixture parse_fixture_text(const std::string& text);
Fixture load_fixture_file(const std::string& path);
std::string print_fixture(const Fixture& f);

// Materialized declarations: expression context plus diagram families.
struct FixtureEnv {
  ExprContext ctx;
  std::map<std::string, DiagramFamily> diagrams;
};
FixtureEnv build_fixture_env(const Fixture& f);

}  // namespace towerord
