#include <gtest/gtest.h>

#include <string>

#include <pgideal/datum_io.hpp>
#include <pgideal/graph_io.hpp>

using namespace pgideal;

namespace {

std::string data(const std::string& name) { return std::string(PGIDEAL_DATA_DIR) + "/" + name; }

template <class F>
std::size_t parse_error_line(F&& f)
{
  try {
    f();
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "expected ParseError";
  return 0;
}

} // namespace

TEST(GraphIo, ParsesVerticesEdgesAndCycles)
{
  const auto f = parse_graph("# comment\n"
                             "vertex A self=-3 genus=1\n"
                             "vertex B self=-2   # trailing\n"
                             "\n"
                             "edge A B mult=2\n"
                             "cycle z A=2, B=1\n");
  ASSERT_EQ(f.graph.size(), 2u);
  EXPECT_EQ(f.graph.vertex(0).genus, 1);
  EXPECT_EQ(f.graph.vertex(1).genus, 0);
  EXPECT_EQ(f.graph.matrix()[0][1], 2);
  ASSERT_EQ(f.cycles.size(), 1u);
  EXPECT_EQ(f.cycles[0].name, "z");
  EXPECT_EQ(format_cycle(f.graph, f.cycles[0].cycle), "A=2,B=1");
}

TEST(GraphIo, MissingCycleEntriesAreZero)
{
  const auto f = parse_graph("vertex A self=-2\nvertex B self=-2\nedge A B\ncycle z B=3\n");
  EXPECT_EQ(format_cycle(f.graph, f.cycles[0].cycle), "A=0,B=3");
}

TEST(GraphIo, ErrorsCarryLineNumbers)
{
  EXPECT_EQ(parse_error_line([] { parse_graph("vertex A self=-2\nvertx B self=-2\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_graph("vertex A self=-2\nedge A C\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_graph("vertex A self=x\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_graph("vertex A\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_graph("vertex A self=-2 color=3\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_graph("vertex A self=-2\nvertex A self=-3\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_graph("vertex A self=-2\n\ncycle z Q=1\n"); }), 3u);
  EXPECT_EQ(parse_error_line([] { parse_graph("vertex A self=-2\ncycle z A=1,A=2\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_graph("vertex A self=-2\ncycle z A=1\ncycle z A=2\n"); }), 3u);
  EXPECT_EQ(parse_error_line([] { parse_graph("vertex A self=0\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_graph("vertex A self=-2\nedge A A\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_graph("vertex A self=-2\nvertex B self=-2\nedge A B mult=0\n"); }), 3u);
  EXPECT_THROW(parse_graph("# nothing\n"), ParseError);
}

TEST(GraphIo, StructuralErrorsSurfaceAsDomainErrors)
{
  EXPECT_THROW(parse_graph("vertex A self=-2\nvertex B self=-2\n"), DomainError);
}

TEST(GraphIo, SampleFilesLoad)
{
  for (const char* name : {"ade_a1.graph", "ade_a2.graph", "ade_a3.graph", "ade_a4.graph", "ade_d4.graph",
                           "ade_d5.graph", "ade_e6.graph", "ade_e7.graph", "ade_e8.graph", "elliptic.graph",
                           "fermat_cone4.graph", "not_definite.graph"})
    EXPECT_NO_THROW(load_graph(data(name))) << name;
  const auto e8 = load_graph(data("ade_e8.graph"));
  EXPECT_EQ(e8.graph.size(), 8u);
  ASSERT_NE(e8.find_cycle("end"), nullptr);
  EXPECT_EQ(e8.find_cycle("missing"), nullptr);
  EXPECT_THROW(load_graph(data("no_such.graph")), ParseError);
}

TEST(DatumIo, ParsesAndFormats)
{
  const auto d = parse_data("datum fermat4 zz=-4 zk=8 pg=4 h1=1,0,0,0,0  # e = 4\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].label(), "fermat4");
  EXPECT_EQ(d[0].h1(0), 4);
  EXPECT_EQ(d[0].h1(1), 1);
  EXPECT_EQ(d[0].h1(100), 0);
  EXPECT_EQ(format_datum(d[0]), "datum fermat4 zz=-4 zk=8 pg=4 h1=1,0,0,0,0");
  // key order is free
  const auto e = parse_data("datum x h1=0 pg=0 zk=0 zz=-2\n");
  EXPECT_EQ(format_datum(e[0]), "datum x zz=-2 zk=0 pg=0 h1=0");
}

TEST(DatumIo, SampleFiles)
{
  const auto f = load_data(data("fermat.data"));
  ASSERT_EQ(f.size(), 5u);
  EXPECT_EQ(f[3].label(), "fermat5");
  EXPECT_EQ(load_data(data("rational_pair.data")).size(), 2u);
}

TEST(DatumIo, SyntaxErrors)
{
  EXPECT_EQ(parse_error_line([] { parse_data("\ndatum a zz=-2 zk=0 pg=0\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_data("dat a zz=-2 zk=0 pg=0 h1=0\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_data("datum a zz=-2 zk=0 pg=0 h1=0,x\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_data("datum a zz=-2 zz=0 pg=0 h1=0\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_data("datum a zz=-2 zk=0 pg=0 h1=0\ndatum a zz=-2 zk=0 pg=0 h1=0\n"); }),
            2u);
}

TEST(DatumIo, ValidationErrorsNameTheLine)
{
  try {
    parse_data("# header\ndatum bad zz=-3 zk=0 pg=0 h1=0\n");
    FAIL() << "expected InconsistentDataError";
  } catch (const InconsistentDataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("even"), std::string::npos);
  }
}
