#ifndef PGIDEAL_DATUM_IO_HPP
#define PGIDEAL_DATUM_IO_HPP

// Datum files, one ideal per line ('#' starts a comment):
//
//   datum <name> zz=<int> zk=<int> pg=<int> h1=<int>[,<int>...]

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph_io.hpp"
#include "hilbert.hpp"

namespace pgideal {

inline std::vector<NumericalIdealDatum> parse_data(std::istream& in)
{
  std::vector<NumericalIdealDatum> out;
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
    if (tok[0] != "datum")
      fail(lineno, "unknown directive '" + tok[0] + "'");
    if (tok.size() != 6)
      fail(lineno, "expected: datum <name> zz=<int> zk=<int> pg=<int> h1=<int>[,<int>...]");
    if (!detail::is_identifier(tok[1]))
      fail(lineno, "bad datum name '" + tok[1] + "'");

    std::optional<std::int64_t> zz, zk, pg;
    std::optional<std::vector<std::int64_t>> h1;
    for (std::size_t i = 2; i < tok.size(); ++i) {
      auto [k, val] = detail::key_value(tok[i], lineno);
      if (k == "zz" && !zz)
        zz = detail::parse_int(val, lineno, "zz");
      else if (k == "zk" && !zk)
        zk = detail::parse_int(val, lineno, "zk");
      else if (k == "pg" && !pg)
        pg = detail::parse_int(val, lineno, "pg");
      else if (k == "h1" && !h1) {
        h1.emplace();
        for (const auto& item : detail::split(val, ','))
          h1->push_back(detail::parse_int(item, lineno, "h1"));
      } else
        fail(lineno, "unknown or repeated key '" + k + "'");
    }
    if (!zz || !zk || !pg || !h1)
      fail(lineno, "datum needs all of zz, zk, pg, h1");
    for (const auto& d : out)
      if (d.label() == tok[1])
        fail(lineno, "duplicate datum name '" + tok[1] + "'");
    try {
      out.emplace_back(*zz, *zk, *pg, std::move(*h1), tok[1]);
    } catch (const InconsistentDataError& e) {
      throw InconsistentDataError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<NumericalIdealDatum> parse_data(std::string_view text)
{
  std::istringstream in{std::string(text)};
  return parse_data(in);
}

inline std::vector<NumericalIdealDatum> load_data(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open datum file '" + path + "'", 0);
  return parse_data(in);
}

inline std::string format_datum(const NumericalIdealDatum& d)
{
  std::string s = "datum " + (d.label().empty() ? std::string("unnamed") : d.label()) +
                  " zz=" + std::to_string(d.zz()) + " zk=" + std::to_string(d.zk()) +
                  " pg=" + std::to_string(d.pg()) + " h1=";
  for (std::size_t i = 0; i < d.h1_values().size(); ++i)
    s += (i ? "," : "") + std::to_string(d.h1_values()[i]);
  return s;
}

} // namespace pgideal

#endif
