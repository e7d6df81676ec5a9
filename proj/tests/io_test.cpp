#include <gtest/gtest.h>

#include <sstream>

#include <unionsep/constructions.hpp>
#include <unionsep/generators.hpp>
#include <unionsep/io.hpp>

using namespace unionsep;
namespace gen = unionsep::generators;

namespace {

std::size_t error_line(const std::string &text) {
  std::istringstream in(text);
  try {
    io::read_graph(in);
  } catch (const ParseError &e) {
    return e.line();
  }
  return 0;
}

std::size_t lists_error_line(const std::string &text, std::size_t n) {
  std::istringstream in(text);
  try {
    io::read_lists(in, n);
  } catch (const ParseError &e) {
    return e.line();
  }
  return 0;
}

} // namespace

TEST(ReadGraph, Path) {
  std::istringstream in("3 2\n0 1\n1 2\n");
  EXPECT_EQ(io::read_graph(in), gen::path(3));
}

TEST(ReadGraph, CommentsAndBlankLines) {
  std::istringstream in("# a triangle\n\n3 3\n0 1\n  # inner\n1 2\n\n2 0\n");
  EXPECT_EQ(io::read_graph(in), gen::complete(3));
}

TEST(ReadGraph, Rejections) {
  EXPECT_EQ(error_line("3 2\n0 1\n1 1\n"), 3u);  // self-loop
  EXPECT_EQ(error_line("3 2\n0 1\n1 0\n"), 3u);  // duplicate
  EXPECT_EQ(error_line("3 1\n0 3\n"), 2u);       // out of range
  EXPECT_EQ(error_line("3 2\n0 1\n"), 2u);       // count mismatch
  EXPECT_EQ(error_line("3 1\n0 x\n"), 2u);       // junk
  EXPECT_EQ(error_line("3 1\n0 -1\n"), 2u);      // negative
  EXPECT_EQ(error_line("3\n"), 1u);              // bad header
}

TEST(ReadGraph, EmptyInputHasNoHeader) {
  std::istringstream in("");
  EXPECT_THROW(io::read_graph(in), ParseError);
}

TEST(ReadLists, Basic) {
  std::istringstream in("1: 4 5 6\n0: 1 2 3\n");
  const auto L = io::read_lists(in, 2);
  EXPECT_EQ(L[0], (ColorSet{1, 2, 3}));
  EXPECT_EQ(L[1], (ColorSet{4, 5, 6}));
  EXPECT_EQ(L.universe(), 7u);
}

TEST(ReadLists, UniverseOverride) {
  std::istringstream in("0: 1 2\n");
  EXPECT_EQ(io::read_lists(in, 1, 10).universe(), 10u);
  std::istringstream small("0: 1 12\n");
  EXPECT_THROW(io::read_lists(small, 1, 10), ParseError);
}

TEST(ReadLists, Rejections) {
  EXPECT_EQ(lists_error_line("0: 1 2\n0: 3 4\n", 2), 2u);  // vertex twice
  EXPECT_EQ(lists_error_line("0: 1 1\n1: 2\n", 2), 1u);    // repeated color
  EXPECT_EQ(lists_error_line("0:\n1: 2\n", 2), 1u);        // empty list
  EXPECT_EQ(lists_error_line("0 1 2\n", 1), 1u);           // no colon
  EXPECT_EQ(lists_error_line("5: 1\n", 2), 1u);            // out of range
  EXPECT_NE(lists_error_line("0: 1\n", 2), 0u);            // missing vertex
}

TEST(RoundTrip, Gadget35) {
  const auto inst = build_gadget35();
  std::stringstream gs, ls;
  io::write_graph(gs, inst.graph);
  io::write_lists(ls, inst.lists);
  EXPECT_EQ(io::read_graph(gs), inst.graph);
  EXPECT_EQ(io::read_lists(ls, inst.graph.order()), inst.lists);
}

TEST(WriteColoring, Format) {
  std::ostringstream os;
  io::write_coloring(os, {3, 1});
  EXPECT_EQ(os.str(), "0: 3\n1: 1\n");
}

TEST(ParseFiles, MissingFileIsUsageError) {
  EXPECT_THROW(io::parse_graph_file("/nonexistent/graph.txt"), UsageError);
  EXPECT_THROW(io::parse_lists_file("/nonexistent/lists.txt", 3), UsageError);
}
