#include "towerord/fixture.hpp"

#include <fstream>
#include <sstream>

namespace towerord {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::uint64_t parse_index(const std::string& s, std::size_t lineno) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad index '" + s + "' on fixture line " +
                     std::to_string(lineno));
  return std::stoull(s);
}

}  // namespace

Fixture parse_fixture_text(const std::string& text) {
  Fixture f;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;

  auto stream_slot =
      [&f](const std::string& name) -> std::map<std::uint64_t, std::string>& {
    for (auto& [n, m] : f.streams)
      if (n == name) return m;
    f.streams.emplace_back(name, std::map<std::uint64_t, std::string>{});
    return f.streams.back().second;
  };
  auto diagram_slot = [&f](const std::string& name) -> Fixture::Diagram& {
    for (auto& [n, d] : f.diagrams)
      if (n == name) return d;
    f.diagrams.emplace_back(name, Fixture::Diagram{});
    return f.diagrams.back().second;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    if (line[0] != '[')
      throw ParseError("expected '[section]' on fixture line " +
                       std::to_string(lineno));
    auto close = line.find(']');
    if (close == std::string::npos)
      throw ParseError("unterminated section on fixture line " +
                       std::to_string(lineno));
    std::string section = trim(line.substr(1, close - 1));
    std::string rest = trim(line.substr(close + 1));

    std::istringstream sec(section);
    std::string kind, name;
    sec >> kind;
    sec >> name;

    if (kind == "order") {
      if (name.empty() || !rest.starts_with("expr="))
        throw ParseError("order declaration needs 'expr=' on line " +
                         std::to_string(lineno));
      f.orders.emplace_back(name, trim(rest.substr(5)));
    } else if (kind == "stream") {
      auto eq = rest.find('=');
      if (name.empty() || eq == std::string::npos)
        throw ParseError("stream declaration needs '<index>=' on line " +
                         std::to_string(lineno));
      std::uint64_t idx = parse_index(trim(rest.substr(0, eq)), lineno);
      std::string claim = trim(rest.substr(eq + 1));
      if (claim != "notwo" && !claim.starts_with("wo:"))
        throw ParseError("stream entry must be 'wo:<order>' or 'notwo', line " +
                         std::to_string(lineno));
      stream_slot(name)[idx] = claim;
    } else if (kind == "diagram") {
      auto eq = rest.find('=');
      if (name.empty() || eq == std::string::npos)
        throw ParseError("diagram declaration needs '=' on line " +
                         std::to_string(lineno));
      std::string lhs = trim(rest.substr(0, eq));
      std::string rhs = trim(rest.substr(eq + 1));
      Fixture::Diagram& d = diagram_slot(name);
      if (lhs == "N") {
        d.height_n = static_cast<int>(parse_index(rhs, lineno));
      } else if (rhs == "root") {
        d.decls.push_back({lhs, std::nullopt, 0});
      } else {
        auto colon = rhs.find(':');
        if (colon == std::string::npos)
          throw ParseError("diagram node needs '<parent>:<level>' on line " +
                           std::to_string(lineno));
        d.decls.push_back(
            {lhs, rhs.substr(0, colon),
             static_cast<int>(parse_index(rhs.substr(colon + 1), lineno))});
      }
    } else if (kind == "check") {
      if (!rest.starts_with("kind="))
        throw ParseError("check declaration needs 'kind=' on line " +
                         std::to_string(lineno));
      std::string body = rest.substr(5);
      FixtureCheck c;
      auto args_at = body.find(" args=");
      if (args_at == std::string::npos) {
        c.kind = trim(body);
      } else {
        c.kind = trim(body.substr(0, args_at));
        std::istringstream as(body.substr(args_at + 6));
        std::string a;
        while (as >> a) c.args.push_back(a);
      }
      if (c.kind.empty())
        throw ParseError("empty check kind on line " + std::to_string(lineno));
      f.checks.push_back(std::move(c));
    } else {
      throw ParseError("unknown section '" + kind + "' on fixture line " +
                       std::to_string(lineno));
    }
  }
  return f;
}

Fixture load_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open fixture '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture_text(buf.str());
}

std::string print_fixture(const Fixture& f) {
  std::ostringstream out;
  for (const auto& [name, expr] : f.orders)
    out << "[order " << name << "] expr=" << expr << "\n";
  for (const auto& [name, entries] : f.streams)
    for (const auto& [idx, claim] : entries)
      out << "[stream " << name << "] " << idx << "=" << claim << "\n";
  for (const auto& [name, d] : f.diagrams) {
    out << "[diagram " << name << "] N=" << d.height_n << "\n";
    for (const auto& decl : d.decls) {
      out << "[diagram " << name << "] " << decl.id << "=";
      if (decl.parent)
        out << *decl.parent << ":" << decl.level;
      else
        out << "root";
      out << "\n";
    }
  }
  for (const auto& c : f.checks) {
    out << "[check] kind=" << c.kind;
    if (!c.args.empty()) {
      out << " args=";
      for (std::size_t i = 0; i < c.args.size(); ++i) {
        if (i) out << ' ';
        out << c.args[i];
      }
    }
    out << "\n";
  }
  return out.str();
}

FixtureEnv build_fixture_env(const Fixture& f) {
  FixtureEnv env;
  // Streams first: order declarations may glue them.
  for (const auto& [name, entries] : f.streams) {
    ProofStream ps;
    ps.name = name;
    for (const auto& [idx, claim] : entries) {
      if (claim == "notwo") continue;  // absent index = no claim
      ps.claims.emplace(idx, parse_order_expr(claim.substr(3), env.ctx));
    }
    if (env.ctx.streams.count(name))
      throw ParseError("duplicate stream name '" + name + "'");
    env.ctx.streams.emplace(name, std::move(ps));
  }
  for (const auto& [name, expr] : f.orders) {
    if (env.ctx.orders.count(name))
      throw ParseError("duplicate order name '" + name + "'");
    env.ctx.orders.emplace(name, parse_order_expr(expr, env.ctx));
  }
  for (const auto& [name, d] : f.diagrams) {
    DiagramFamilyBuilder b(d.height_n);
    for (const auto& decl : d.decls) {
      if (decl.parent)
        b.add_child(decl.id, *decl.parent, decl.level);
      else
        b.add_root(decl.id);
    }
    if (env.diagrams.count(name))
      throw ParseError("duplicate diagram name '" + name + "'");
    env.diagrams.emplace(name, b.build());
  }
  return env;
}

}  // namespace towerord
