#ifndef PGIDEAL_GRAPH_IO_HPP
#define PGIDEAL_GRAPH_IO_HPP

// Line-oriented graph files:
//
//   # comment
//   vertex <id> self=<negative int> [genus=<nonneg int>]
//   edge <id> <id> [mult=<positive int>]
//   cycle <name> <id>=<int>[,<id>=<int>...]
//
// Line numbers in ParseError are 1-based.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace pgideal {

struct NamedCycle
{
  std::string name;
  Cycle cycle;
};

struct GraphFile
{
  DualGraph graph;
  std::vector<NamedCycle> cycles;

  const Cycle* find_cycle(std::string_view name) const
  {
    for (const auto& c : cycles)
      if (c.name == name)
        return &c.cycle;
    return nullptr;
  }
};

namespace detail {

inline std::string trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p - start)));
    if (p == std::string_view::npos)
      return out;
    start = p + 1;
  }
}

inline std::vector<std::string> tokens(std::string_view line)
{
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;)
    out.push_back(t);
  return out;
}

inline bool is_identifier(std::string_view s)
{
  if (s.empty())
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

inline std::int64_t parse_int(std::string_view s, std::size_t line, std::string_view what)
{
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError("line " + std::to_string(line) + ": bad integer '" + std::string(s) +
                         "' for " + std::string(what),
                     line);
  return v;
}

inline std::pair<std::string, std::string> key_value(std::string_view tok, std::size_t line)
{
  const auto eq = tok.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw ParseError("line " + std::to_string(line) + ": expected key=value, got '" +
                         std::string(tok) + "'",
                     line);
  return {std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1))};
}

inline std::string strip_comment(const std::string& line)
{
  return trim(std::string_view(line).substr(0, line.find('#')));
}

} // namespace detail

inline GraphFile parse_graph(std::istream& in)
{
  using detail::parse_int;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  struct RawCycle
  {
    std::string name;
    std::vector<std::pair<std::string, std::int64_t>> entries;
    std::size_t line;
  };
  std::vector<RawCycle> raw;

  auto fail = [](std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg, line);
  };

  std::string text;
  std::size_t lineno = 0;
  while (std::getline(in, text)) {
    ++lineno;
    const auto line = detail::strip_comment(text);
    if (line.empty())
      continue;
    const auto tok = detail::tokens(line);
    const auto& kind = tok[0];

    if (kind == "vertex") {
      if (tok.size() < 3)
        fail(lineno, "vertex needs an id and self=<int>");
      if (!detail::is_identifier(tok[1]))
        fail(lineno, "bad vertex id '" + tok[1] + "'");
      Vertex v{tok[1], 0, 0};
      bool have_self = false, have_genus = false;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        auto [k, val] = detail::key_value(tok[i], lineno);
        if (k == "self" && !have_self) {
          v.self_intersection = parse_int(val, lineno, "self");
          have_self = true;
        } else if (k == "genus" && !have_genus) {
          v.genus = parse_int(val, lineno, "genus");
          have_genus = true;
        } else {
          fail(lineno, "unknown or repeated key '" + k + "' in vertex");
        }
      }
      if (!have_self)
        fail(lineno, "vertex '" + v.id + "' lacks self=<int>");
      if (v.self_intersection > -1)
        fail(lineno, "vertex '" + v.id + "' needs self-intersection <= -1");
      if (v.genus < 0)
        fail(lineno, "vertex '" + v.id + "' needs genus >= 0");
      for (const auto& w : vertices)
        if (w.id == v.id)
          fail(lineno, "duplicate vertex id '" + v.id + "'");
      vertices.push_back(std::move(v));
    } else if (kind == "edge") {
      if (tok.size() < 3 || tok.size() > 4)
        fail(lineno, "edge needs two ids and an optional mult=<int>");
      Edge e{tok[1], tok[2], 1};
      if (tok.size() == 4) {
        auto [k, val] = detail::key_value(tok[3], lineno);
        if (k != "mult")
          fail(lineno, "unknown key '" + k + "' in edge");
        e.multiplicity = parse_int(val, lineno, "mult");
        if (e.multiplicity < 1)
          fail(lineno, "edge multiplicity must be positive");
      }
      for (const auto* id : {&e.a, &e.b}) {
        bool known = false;
        for (const auto& w : vertices)
          known = known || w.id == *id;
        if (!known)
          fail(lineno, "edge refers to undeclared vertex '" + *id + "'");
      }
      if (e.a == e.b)
        fail(lineno, "loop edge at '" + e.a + "'");
      edges.push_back(std::move(e));
    } else if (kind == "cycle") {
      if (tok.size() < 3)
        fail(lineno, "cycle needs a name and coefficients");
      if (!detail::is_identifier(tok[1]))
        fail(lineno, "bad cycle name '" + tok[1] + "'");
      RawCycle rc{tok[1], {}, lineno};
      std::string rest;
      for (std::size_t i = 2; i < tok.size(); ++i)
        rest += tok[i];
      for (const auto& item : detail::split(rest, ',')) {
        auto [k, val] = detail::key_value(item, lineno);
        for (const auto& [seen, _] : rc.entries)
          if (seen == k)
            fail(lineno, "vertex '" + k + "' listed twice in cycle");
        rc.entries.emplace_back(k, parse_int(val, lineno, "coefficient of " + k));
      }
      for (const auto& other : raw)
        if (other.name == rc.name)
          fail(lineno, "duplicate cycle name '" + rc.name + "'");
      raw.push_back(std::move(rc));
    } else {
      fail(lineno, "unknown directive '" + kind + "'");
    }
  }

  if (vertices.empty())
    throw ParseError("graph file declares no vertices", lineno);
  GraphFile out{DualGraph(std::move(vertices), std::move(edges)), {}};
  for (const auto& rc : raw) {
    auto z = Cycle::zero(out.graph.size());
    for (const auto& [id, c] : rc.entries) {
      auto i = out.graph.index_of(id);
      if (!i)
        fail(rc.line, "cycle '" + rc.name + "' refers to unknown vertex '" + id + "'");
      z[*i] = c;
    }
    out.cycles.push_back({rc.name, std::move(z)});
  }
  return out;
}

inline GraphFile parse_graph(std::string_view text)
{
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline GraphFile load_graph(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open graph file '" + path + "'", 0);
  return parse_graph(in);
}

/// "E1=1,E2=2" in vertex order, zero coefficients included.
template <class T>
std::string format_cycle(const DualGraph& g, const BasicCycle<T>& z)
{
  check_support(g, z);
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i)
      s += ',';
    s += g.vertex(i).id + "=" + to_string(z[i]);
  }
  return s;
}

} // namespace pgideal

#endif
