#ifndef PGIDEAL_CLI_HPP
#define PGIDEAL_CLI_HPP

// Command-line front end. Every action formats library return values; no
// computation happens here.
//
// Exit codes: 0 computed / verdict true, 1 verdict false, 2 input or
// validation error (including usage errors), 3 Gröbner budget exceeded.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "brieskorn.hpp"
#include "datum_io.hpp"
#include "errors.hpp"
#include "graph_io.hpp"
#include "hilbert.hpp"
#include "lattice.hpp"
#include "polynomial.hpp"
#include "rees.hpp"

namespace pgideal::cli {

enum ExitCode : int
{
  exit_ok = 0,
  exit_false = 1,
  exit_input = 2,
  exit_budget = 3,
};

/// Output of one action: human text for `--format table`, ordered key/value
/// pairs for `--format lines`, and the exit code.
struct Report
{
  std::vector<std::string> text;
  std::vector<std::pair<std::string, std::string>> lines;
  int code = exit_ok;

  void kv(std::string key, std::string value) { lines.emplace_back(std::move(key), std::move(value)); }
  void say(std::string line) { text.push_back(std::move(line)); }
  void fail_if(bool failed)
  {
    if (failed)
      code = exit_false;
  }
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }
inline std::string true_false(bool b) { return b ? "true" : "false"; }

/// Right-aligned columns separated by two spaces.
inline std::vector<std::string> render_table(const std::vector<std::string>& header,
                                             const std::vector<std::vector<std::string>>& rows)
{
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows)
      width[c] = std::max(width[c], r.at(c).size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c)
        s += "  ";
      s += std::string(width[c] - cells[c].size(), ' ') + cells[c];
    }
    return s;
  };
  std::vector<std::string> out{line(header)};
  for (const auto& r : rows)
    out.push_back(line(r));
  return out;
}

namespace detail {

inline std::int64_t to_int(const std::string& s, const std::string& what)
{
  try {
    std::size_t used = 0;
    const auto v = std::stoll(s, &used);
    if (used != s.size())
      throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DomainError("expected an integer for " + what + ", got '" + s + "'");
  }
}

inline void need_args(const std::vector<std::string>& args, std::size_t n, const std::string& usage)
{
  if (args.size() != n)
    throw CLI::ValidationError("usage: " + usage);
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? sep : "") + parts[i];
  return s;
}

} // namespace detail

struct Options
{
  std::string format = "table";
  std::vector<std::string> graph_args;
  std::string cycle;
  std::vector<std::string> hilbert_args;
  std::int64_t n = 1;
  std::vector<std::int64_t> components;
  std::vector<std::string> brieskorn_args;
  std::int64_t nmax = -1;
  std::vector<std::string> rees_args;
  std::int64_t degree_bound = -1;
  std::size_t max_basis = GroebnerBudget{}.max_basis_size;
};

// ---- graph ---------------------------------------------------------------

inline Report graph_action(const Options& o)
{
  const auto& a = o.graph_args;
  if (a.size() != 2)
    throw CLI::ValidationError("usage: graph check|fundamental|canonical|antinef|zperp|rational <file> [--cycle NAME]");
  const auto& action = a[0];
  const auto file = load_graph(a[1]);
  const auto& g = file.graph;
  Report r;

  auto selected_cycle = [&]() -> std::pair<std::string, Cycle> {
    if (!o.cycle.empty()) {
      if (const auto* z = file.find_cycle(o.cycle))
        return {o.cycle, *z};
      throw DomainError("no cycle named '" + o.cycle + "' in " + a[1]);
    }
    if (!file.cycles.empty())
      return {file.cycles.front().name, file.cycles.front().cycle};
    return {"fundamental", fundamental_cycle(g)};
  };

  if (action == "check") {
    const bool nd = is_negative_definite(g);
    r.say("vertices: " + std::to_string(g.size()));
    r.say("edges: " + std::to_string(g.edges().size()));
    r.say("cycles: " + std::to_string(file.cycles.size()));
    r.say("negative definite: " + yes_no(nd));
    r.kv("vertices", std::to_string(g.size()));
    r.kv("edges", std::to_string(g.edges().size()));
    r.kv("cycles", std::to_string(file.cycles.size()));
    r.kv("negative_definite", true_false(nd));
    r.fail_if(!nd);
  } else if (action == "fundamental") {
    const auto z = fundamental_cycle(g);
    const auto zz = pairing(g, z, z);
    const auto zk = canonical_degree(g, z);
    r.say("fundamental cycle: " + format_cycle(g, z));
    r.say("Z^2 = " + to_string(zz));
    r.say("Z.K = " + to_string(zk));
    r.kv("fundamental", format_cycle(g, z));
    r.kv("zz", to_string(zz));
    r.kv("zk", to_string(zk));
  } else if (action == "canonical") {
    const auto zk = canonical_cycle(g);
    r.say("canonical cycle Z_K: " + format_cycle(g, zk));
    r.kv("canonical", format_cycle(g, zk));
  } else if (action == "antinef") {
    const auto [name, z] = selected_cycle();
    const bool ok = is_anti_nef(g, z);
    r.say("cycle " + name + ": " + format_cycle(g, z));
    r.say("anti-nef: " + yes_no(ok));
    r.kv("cycle", name);
    r.kv("coefficients", format_cycle(g, z));
    r.kv("anti_nef", true_false(ok));
    if (!ok && !z.is_zero()) {
      const auto w = anti_nef_closure(g, z);
      r.say("anti-nef closure: " + format_cycle(g, w));
      r.kv("closure", format_cycle(g, w));
    }
    r.fail_if(!ok);
  } else if (action == "zperp") {
    const auto [name, z] = selected_cycle();
    const auto comps = z_perp(g, z);
    r.say("cycle " + name + ": " + format_cycle(g, z));
    r.say("Z^perp components: " + std::to_string(comps.size()));
    r.kv("cycle", name);
    r.kv("components", std::to_string(comps.size()));
    for (std::size_t i = 0; i < comps.size(); ++i) {
      std::vector<std::string> ids;
      for (const auto& v : comps[i].vertices())
        ids.push_back(v.id);
      r.say("  component " + std::to_string(i + 1) + ": " + detail::join(ids, ","));
      r.kv("component." + std::to_string(i + 1), detail::join(ids, ","));
    }
  } else if (action == "rational") {
    const bool rational = artin_rational_test(g);
    const auto pa = arithmetic_genus(g, fundamental_cycle(g));
    r.say("p_a(Z_f) = " + to_string(pa));
    r.say("rational: " + yes_no(rational));
    r.kv("pa", to_string(pa));
    r.kv("rational", true_false(rational));
    r.fail_if(!rational);
  } else {
    throw CLI::ValidationError("unknown graph action '" + action + "'");
  }
  return r;
}

// ---- hilbert -------------------------------------------------------------

inline Report hilbert_action(const Options& o)
{
  const auto& a = o.hilbert_args;
  if (a.size() != 2)
    throw CLI::ValidationError(
        "usage: hilbert coeffs|pgtest|colength|n0|epsilon|additivity|multirees <datum-file> [--n N]");
  const auto& action = a[0];
  const auto data = load_data(a[1]);
  if (data.empty())
    throw DomainError("datum file '" + a[1] + "' contains no data");
  Report r;
  std::vector<std::vector<std::string>> rows;

  if (action == "coeffs") {
    for (const auto& d : data) {
      const auto c = coefficients(d);
      rows.push_back({d.label(), to_string(c.e0bar), to_string(c.e1bar), to_string(c.e2bar)});
      r.kv(d.label() + ".e0bar", to_string(c.e0bar));
      r.kv(d.label() + ".e1bar", to_string(c.e1bar));
      r.kv(d.label() + ".e2bar", to_string(c.e2bar));
    }
    r.text = render_table({"datum", "e0bar", "e1bar", "e2bar"}, rows);
  } else if (action == "pgtest") {
    for (const auto& d : data) {
      const auto v = pg_ideal_test(d);
      rows.push_back({d.label(), yes_no(v.h1_attains_pg), yes_no(v.e1_identity), yes_no(v.e2_vanishes),
                      v.verdict ? "p_g-ideal" : "not p_g-ideal"});
      r.kv(d.label() + ".h1_attains_pg", true_false(v.h1_attains_pg));
      r.kv(d.label() + ".e1_identity", true_false(v.e1_identity));
      r.kv(d.label() + ".e2_vanishes", true_false(v.e2_vanishes));
      r.kv(d.label() + ".pg_ideal", true_false(v.verdict));
      r.fail_if(!v.verdict);
    }
    r.text = render_table({"datum", "h1[1]=pg", "e1=e0-l(A/I)", "e2=0", "verdict"}, rows);
  } else if (action == "colength") {
    for (const auto& d : data) {
      const auto c = kato_colength(d, o.n);
      rows.push_back({d.label(), std::to_string(o.n), to_string(c)});
      r.kv(d.label() + ".colength." + std::to_string(o.n), to_string(c));
    }
    r.text = render_table({"datum", "n", "l(A/I^n)"}, rows);
  } else if (action == "n0") {
    for (const auto& d : data) {
      const auto n0 = stabilization_index(d);
      rows.push_back({d.label(), std::to_string(n0), std::to_string(d.pg())});
      r.kv(d.label() + ".n0", std::to_string(n0));
    }
    r.text = render_table({"datum", "n0", "pg"}, rows);
  } else if (action == "epsilon") {
    for (const auto& d : data) {
      const auto e = epsilon(d, o.n);
      rows.push_back({d.label(), std::to_string(o.n), std::to_string(e)});
      r.kv(d.label() + ".epsilon." + std::to_string(o.n), std::to_string(e));
    }
    r.text = render_table({"datum", "n", "epsilon(Z,nZ)"}, rows);
  } else if (action == "additivity") {
    std::int64_t sum = 0;
    for (auto v : o.components)
      sum += v;
    for (const auto& d : data) {
      const auto e2 = to_int64(coefficients(d).e2bar);
      const bool ok = pg_additivity_check(d.pg(), e2, o.components);
      rows.push_back({d.label(), std::to_string(d.pg()), std::to_string(e2), std::to_string(sum), yes_no(ok)});
      r.kv(d.label() + ".additive", true_false(ok));
      r.fail_if(!ok);
    }
    r.text = render_table({"datum", "pg", "e2bar", "sum pg(A_i)", "holds"}, rows);
  } else if (action == "multirees") {
    if (data.size() < 2)
      throw DomainError("multirees needs two data in the file");
    const bool ok = multi_rees_verdict(data[0], data[1]);
    r.say("R(" + data[0].label() + ", " + data[1].label() + ") Cohen-Macaulay normal: " + yes_no(ok));
    r.kv("multi_rees", true_false(ok));
    r.fail_if(!ok);
  } else {
    throw CLI::ValidationError("unknown hilbert action '" + action + "'");
  }
  return r;
}

// ---- brieskorn -----------------------------------------------------------

inline Report brieskorn_action(const Options& o)
{
  const auto& a = o.brieskorn_args;
  if (a.empty())
    throw CLI::ValidationError("usage: brieskorn fermat <e> [--nmax N] | pg <p> <q> <r> | datum <e>");
  const auto& action = a[0];
  Report r;
  if (action == "fermat") {
    detail::need_args(a, 2, "brieskorn fermat <e> [--nmax N]");
    const auto e = detail::to_int(a[1], "e");
    const auto d = fermat_datum(e);
    const auto nmax = o.nmax < 0 ? 2 * e : o.nmax;
    std::vector<std::vector<std::string>> rows;
    bool all = true;
    for (std::int64_t n = 0; n <= nmax; ++n) {
      const auto oracle = fermat_colength(e, n);
      const auto closed = fermat_closed_form(e, n);
      const bool match = closed == oracle;
      all = all && match;
      rows.push_back({std::to_string(n), std::to_string(oracle), to_string(closed), match ? "✓" : "✗"});
      r.kv("colength." + std::to_string(n), std::to_string(oracle));
      r.kv("closed_form." + std::to_string(n), to_string(closed));
    }
    const auto c = coefficients(d);
    const auto n0 = stabilization_index(d);
    r.text = render_table({"n", "oracle", "closed_form", "match"}, rows);
    r.say("coefficients (" + to_string(c.e0bar) + ", " + to_string(c.e1bar) + ", " + to_string(c.e2bar) + ")");
    r.say("pg=" + std::to_string(d.pg()));
    r.say("n0=" + std::to_string(n0));
    r.kv("match", true_false(all));
    r.kv("e0bar", to_string(c.e0bar));
    r.kv("e1bar", to_string(c.e1bar));
    r.kv("e2bar", to_string(c.e2bar));
    r.kv("pg", std::to_string(d.pg()));
    r.kv("n0", std::to_string(n0));
    r.fail_if(!all);
  } else if (action == "pg") {
    detail::need_args(a, 4, "brieskorn pg <p> <q> <r>");
    const BrieskornDescriptor b(detail::to_int(a[1], "p"), detail::to_int(a[2], "q"), detail::to_int(a[3], "r"));
    const auto& w = b.weights();
    const auto weights = std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]);
    r.say("weights: " + weights);
    r.say("degree: " + std::to_string(b.degree()));
    r.say("a-invariant: " + std::to_string(a_invariant(b)));
    r.say("pg: " + std::to_string(weighted_pg(b)));
    r.kv("weights", weights);
    r.kv("degree", std::to_string(b.degree()));
    r.kv("a_invariant", std::to_string(a_invariant(b)));
    r.kv("pg", std::to_string(weighted_pg(b)));
  } else if (action == "datum") {
    detail::need_args(a, 2, "brieskorn datum <e>");
    const auto d = fermat_datum(detail::to_int(a[1], "e"));
    r.say(format_datum(d));
    r.kv("datum", d.label());
    r.kv("zz", std::to_string(d.zz()));
    r.kv("zk", std::to_string(d.zk()));
    r.kv("pg", std::to_string(d.pg()));
    std::vector<std::string> h1;
    for (auto v : d.h1_values())
      h1.push_back(std::to_string(v));
    r.kv("h1", detail::join(h1, ","));
  } else {
    throw CLI::ValidationError("unknown brieskorn action '" + action + "'");
  }
  return r;
}

// ---- rees ----------------------------------------------------------------

inline Report rees_action(const Options& o)
{
  const auto& a = o.rees_args;
  if (a.size() != 2)
    throw CLI::ValidationError("usage: rees presentF <poly> | r1 <poly4> | doublepoint <g> | stability <g> [--D N]");
  const auto& action = a[0];
  Report r;
  if (action == "presentF") {
    const auto F = extended_rees_F(parse_polynomial(a[1], 3));
    r.say("F = " + F.to_string());
    r.kv("F", F.to_string());
  } else if (action == "r1") {
    const auto F = parse_polynomial(a[1], 4);
    std::vector<std::string> gens;
    for (const auto& g : jacobian_ideal(F))
      gens.push_back(g.to_string());
    GroebnerBudget budget;
    budget.max_basis_size = o.max_basis;
    const int dim = singular_locus_dimension(F, budget);
    const bool ok = dim <= 1;
    r.say("jacobian: (" + detail::join(gens, ", ") + ")");
    r.say(std::string("R1: ") + (ok ? "PASS" : "FAIL") + " (singular locus dimension " + std::to_string(dim) + ")");
    r.kv("jacobian", detail::join(gens, ";"));
    r.kv("singular_locus_dimension", std::to_string(dim));
    r.kv("r1", true_false(ok));
    r.fail_if(!ok);
  } else if (action == "doublepoint") {
    const auto g = parse_polynomial(a[1], 3);
    const bool ok = double_point_pg_test(g);
    r.say("order(g) = " + std::to_string(g.order()));
    r.say("m is a p_g-ideal: " + yes_no(ok));
    r.kv("order", std::to_string(g.order()));
    r.kv("pg_ideal", true_false(ok));
    r.fail_if(!ok);
  } else if (action == "stability") {
    const auto g = parse_polynomial(a[1], 3);
    const auto bound = o.degree_bound < 0 ? default_stability_bound(g)
                                          : static_cast<std::uint64_t>(o.degree_bound);
    const bool ok = double_point_stability(g, bound);
    r.say("m^2 = (y,z)m modulo m^" + std::to_string(bound + 1) + ": " + yes_no(ok));
    r.kv("D", std::to_string(bound));
    r.kv("stable", true_false(ok));
    r.fail_if(!ok);
  } else {
    throw CLI::ValidationError("unknown rees action '" + action + "'");
  }
  return r;
}

inline void emit(const Report& r, const std::string& format, std::ostream& out)
{
  if (format == "lines")
    for (const auto& [k, v] : r.lines)
      out << k << '=' << v << '\n';
  else
    for (const auto& line : r.text)
      out << line << '\n';
}

/// Parses argv, runs one action and writes its report; returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  Options o;
  CLI::App app{"p_g-ideal certification and normal Hilbert coefficients", "pgideal"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--format", o.format, "table (default) or lines")
      ->check(CLI::IsMember({"table", "lines"}));

  auto* graph = app.add_subcommand("graph", "dual graph lattice operations");
  graph->add_option("args", o.graph_args, "check|fundamental|canonical|antinef|zperp|rational <file>")->required();
  graph->add_option("--cycle", o.cycle, "named cycle from the graph file");

  auto* hilbert = app.add_subcommand("hilbert", "normal Hilbert coefficients from numerical data");
  hilbert->add_option("args", o.hilbert_args, "coeffs|pgtest|colength|n0|epsilon|additivity|multirees <datum-file>")
      ->required();
  hilbert->add_option("--n", o.n, "power / multiple index (default 1)");
  hilbert->add_option("--components", o.components, "p_g of the Z^perp singularities")->delimiter(',');

  auto* brieskorn = app.add_subcommand("brieskorn", "Brieskorn-Pham hypersurface oracles");
  brieskorn->add_option("args", o.brieskorn_args, "fermat <e> | pg <p> <q> <r> | datum <e>")->required();
  brieskorn->add_option("--nmax", o.nmax, "largest n in the Fermat table (default 2e)");

  auto* rees = app.add_subcommand("rees", "extended Rees algebra and double-point checks");
  rees->add_option("args", o.rees_args, "presentF <poly> | r1 <poly4> | doublepoint <g> | stability <g>")->required();
  rees->add_option("--D", o.degree_bound, "degree bound for stability (default max(4, ord(g)+2))");
  rees->add_option("--max-basis", o.max_basis, "Gröbner basis size cap for r1 (default 500)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return exit_input;
  }

  try {
    Report r;
    if (graph->parsed())
      r = graph_action(o);
    else if (hilbert->parsed())
      r = hilbert_action(o);
    else if (brieskorn->parsed())
      r = brieskorn_action(o);
    else
      r = rees_action(o);
    emit(r, o.format, out);
    return r.code;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return exit_budget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
}

} // namespace pgideal::cli

#endif
