#include "towerord/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <string>

#include "towerord/diagram.hpp"
#include "towerord/expr.hpp"
#include "towerord/order.hpp"
#include "towerord/wf.hpp"

namespace towerord {

namespace {

struct Args {
  std::vector<std::string> positional;
  std::map<std::string, std::string> flags;
};

Args parse_args(const std::vector<std::string>& argv, std::size_t from,
                const std::set<std::string>& allowed) {
  Args a;
  for (std::size_t i = from; i < argv.size(); ++i) {
    const std::string& s = argv[i];
    if (s.starts_with("--")) {
      std::string name = s.substr(2);
      if (!allowed.count(name)) throw ParseError("unknown flag --" + name);
      if (i + 1 >= argv.size())
        throw ParseError("flag --" + name + " needs a value");
      a.flags[name] = argv[++i];
    } else {
      a.positional.push_back(s);
    }
  }
  return a;
}

void require_argc(const Args& a, std::size_t n, const std::string& usage) {
  if (a.positional.size() != n) throw ParseError("usage: " + usage);
}

std::uint64_t parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(what + " must be a natural number, got '" + s + "'");
  return std::stoull(s);
}

const std::string& flag_or_fail(const Args& a, const std::string& name,
                                const std::string& usage) {
  auto it = a.flags.find(name);
  if (it == a.flags.end()) throw ParseError("usage: " + usage);
  return it->second;
}

std::vector<Term> parse_set(const std::string& s) {
  std::vector<Term> out;
  for (const std::string& part : split_top_level(s, ','))
    out.push_back(parse_term(part));
  return out;
}

std::string join_terms(const std::vector<Term>& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ',';
    out += ts[i].str();
  }
  return out;
}

void emit_dot(const FiniteRestriction& r, std::ostream& out) {
  const auto& elems = r.elements();
  std::vector<std::string> printed(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) printed[i] = elems[i].str();
  std::vector<std::size_t> idx(elems.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&printed](std::size_t a, std::size_t b) {
    return printed[a] < printed[b];
  });
  out << "digraph order {\n";
  for (std::size_t i : idx) out << "  \"" << printed[i] << "\";\n";
  for (std::size_t i : idx)
    for (std::size_t j : idx)
      if (r.edge(i, j))
        out << "  \"" << printed[i] << "\" -> \"" << printed[j] << "\";\n";
  out << "}\n";
}

// Throws on failure; the guard below maps exceptions to exit codes.
int dispatch(const FixtureEnv& env, const std::vector<std::string>& argv,
             std::ostream& out, std::ostream& err) {
  static const std::string overview =
      "<cmp|dom|wf|rank|ordertype|enum|dot|fixture> ...";
  if (argv.empty()) throw ParseError("usage: " + overview);
  const std::string& cmd = argv[0];

  if (cmd == "cmp") {
    Args a = parse_args(argv, 1, {});
    require_argc(a, 3, "cmp <order> <t1> <t2>");
    Order ord = parse_order_expr(a.positional[0], env.ctx);
    Term t1 = parse_term(a.positional[1]);
    Term t2 = parse_term(a.positional[2]);
    if (ord_less(ord, t1, t2))
      out << "LT\n";
    else if (ord_less(ord, t2, t1))
      out << "GT\n";
    else
      out << "EQ-INCOMPARABLE\n";
    return 0;
  }

  if (cmd == "dom") {
    Args a = parse_args(argv, 1, {});
    require_argc(a, 2, "dom <order> <t>");
    Order ord = parse_order_expr(a.positional[0], env.ctx);
    out << (ord->in_domain(parse_term(a.positional[1])) ? "IN" : "OUT")
        << "\n";
    return 0;
  }

  if (cmd == "wf") {
    Args a = parse_args(argv, 1, {"budget"});
    require_argc(a, 2, "wf <order> <t> [--budget <n>]");
    Order ord = parse_order_expr(a.positional[0], env.ctx);
    Term t = parse_term(a.positional[1]);
    std::uint64_t budget = 64;
    if (auto it = a.flags.find("budget"); it != a.flags.end())
      budget = parse_count(it->second, "--budget");
    WfVerdict v = wf_member(ord, t, budget);
    switch (v.cls) {
      case WfClass::wellfounded:
        out << "WELLFOUNDED rank=" << v.rank << "\n";
        break;
      case WfClass::illfounded:
        out << "ILLFOUNDED lasso=" << join_terms(v.chain) << "\n";
        break;
      case WfClass::unknown:
        out << "UNKNOWN chain=" << join_terms(v.chain) << "\n";
        break;
    }
    return 0;
  }

  if (cmd == "rank") {
    static const std::string usage = "rank <order> <t> --set <t1,t2,...>";
    Args a = parse_args(argv, 1, {"set"});
    require_argc(a, 2, usage);
    Order ord = parse_order_expr(a.positional[0], env.ctx);
    Term t = parse_term(a.positional[1]);
    FiniteRestriction r =
        restrict_order(ord, parse_set(flag_or_fail(a, "set", usage)));
    if (!r.index_of(t))
      throw DomainError("'" + t.str() + "' is not in the --set elements");
    out << rank_finite(r, t) << "\n";
    return 0;
  }

  if (cmd == "ordertype") {
    static const std::string usage = "ordertype <order> --set <t1,t2,...>";
    Args a = parse_args(argv, 1, {"set"});
    require_argc(a, 1, usage);
    Order ord = parse_order_expr(a.positional[0], env.ctx);
    FiniteRestriction r =
        restrict_order(ord, parse_set(flag_or_fail(a, "set", usage)));
    out << order_type_finite(r) << "\n";
    return 0;
  }

  if (cmd == "enum") {
    Args a = parse_args(argv, 1, {"max"});
    require_argc(a, 1, "enum <order> [--max <n>]");
    Order ord = parse_order_expr(a.positional[0], env.ctx);
    std::size_t max = 20;
    if (auto it = a.flags.find("max"); it != a.flags.end())
      max = static_cast<std::size_t>(parse_count(it->second, "--max"));
    if (!ord->enumerate_domain)
      throw NoEnumeratorError("ordering '" + ord->name +
                              "' has no domain enumerator");
    for (const Term& t : ord->enumerate_domain(max).items)
      out << t.str() << "\n";
    return 0;
  }

  if (cmd == "dot") {
    static const std::string usage = "dot <order> --set <t1,t2,...>";
    Args a = parse_args(argv, 1, {"set"});
    require_argc(a, 1, usage);
    Order ord = parse_order_expr(a.positional[0], env.ctx);
    emit_dot(restrict_order(ord, parse_set(flag_or_fail(a, "set", usage))),
             out);
    return 0;
  }

  if (cmd == "embed") {  // fixture-only
    Args a = parse_args(argv, 1, {});
    require_argc(a, 3, "embed <diagram> <gamma-id> <eta-id>");
    auto it = env.diagrams.find(a.positional[0]);
    if (it == env.diagrams.end())
      throw ParseError("unknown diagram '" + a.positional[0] + "'");
    out << (check_monotone_embedding(it->second, a.positional[1],
                                     a.positional[2])
                ? "TRUE"
                : "FALSE")
        << "\n";
    return 0;
  }

  if (cmd == "fixture") {
    Args a = parse_args(argv, 1, {});
    require_argc(a, 2, "fixture run <path>");
    if (a.positional[0] != "run")
      throw ParseError("usage: fixture run <path>");
    return run_fixture(load_fixture_file(a.positional[1]), out, err);
  }

  throw ParseError("unknown subcommand '" + cmd + "' (usage: " + overview +
                   ")");
}

int guarded(const FixtureEnv& env, const std::vector<std::string>& argv,
            std::ostream& out, std::ostream& err) {
  try {
    return dispatch(env, argv, out, err);
  } catch (const InternalError& e) {
    err << "error:" << e.kind << ":" << e.what() << "\n";
    return 2;
  } catch (const OrderError& e) {
    err << "error:" << e.kind << ":" << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error:internal:" << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err) {
  FixtureEnv env;  // empty: direct invocations carry no declarations
  return guarded(env, argv, out, err);
}

int run_fixture(const Fixture& f, std::ostream& out, std::ostream& err) {
  FixtureEnv env = build_fixture_env(f);
  int worst = 0;
  std::size_t ok = 0;
  for (std::size_t i = 0; i < f.checks.size(); ++i) {
    const FixtureCheck& c = f.checks[i];
    out << "-- check " << (i + 1) << ": " << c.kind;
    for (const std::string& arg : c.args) out << ' ' << arg;
    out << "\n";
    std::vector<std::string> argv;
    argv.reserve(c.args.size() + 1);
    argv.push_back(c.kind);
    argv.insert(argv.end(), c.args.begin(), c.args.end());
    int rc = guarded(env, argv, out, err);
    if (rc == 0)
      ++ok;
    else
      worst = std::max(worst, rc);
  }
  out << "checks: " << f.checks.size() << " run, " << ok << " ok\n";
  return worst;
}

}  // namespace towerord
