#include <gtest/gtest.h>

#include "ivc/construction.hpp"
#include "ivc/io.hpp"

namespace ivc {
namespace {

ParseErrorKind graph_error(const std::string& text, int* line = nullptr) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ParseErrorKind::MalformedLine;
}

ParseErrorKind coloring_error(const std::string& text, const Graph& g, int* line = nullptr) {
  try {
    parse_coloring(text, g);
  } catch (const ParseError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ParseErrorKind::MalformedLine;
}

TEST(ParseGraph, Examples) {
  EXPECT_EQ(parse_graph("p 2 1\ne 1 2"), complete_graph(2));
  EXPECT_EQ(parse_graph("p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4"), complete_graph(4));
}

TEST(ParseGraph, CommentsBlankLinesAndOrientation) {
  const Graph g = parse_graph("# a path\n\np 3 2\n  e 2 1\n# middle\ne   3 2  \n");
  EXPECT_EQ(g, Graph(3, {{1, 2}, {2, 3}}));
}

TEST(ParseGraph, DuplicateEdgeAtItsLine) {
  int line = 0;
  EXPECT_EQ(graph_error("p 2 1\ne 1 2\ne 1 2", &line), ParseErrorKind::DuplicateEdge);
  EXPECT_EQ(line, 3);
  EXPECT_EQ(graph_error("p 3 2\ne 1 2\n\ne 2 1\n", &line), ParseErrorKind::DuplicateEdge);
  EXPECT_EQ(line, 4);
}

TEST(ParseGraph, ErrorClasses) {
  int line = 0;
  EXPECT_EQ(graph_error(""), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(graph_error("p 2\ne 1 2"), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(graph_error("q 2 1\ne 1 2"), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(graph_error("p 0 0"), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(graph_error("p two 1\ne 1 2"), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(graph_error("p 2 1\ne 1 x", &line), ParseErrorKind::MalformedLine);
  EXPECT_EQ(line, 2);
  EXPECT_EQ(graph_error("p 2 1\ne 1 2 3"), ParseErrorKind::MalformedLine);
  EXPECT_EQ(graph_error("p 2 1\nx 1 2"), ParseErrorKind::MalformedLine);
  EXPECT_EQ(graph_error("p 2 1\ne 1 3", &line), ParseErrorKind::VertexOutOfRange);
  EXPECT_EQ(line, 2);
  EXPECT_EQ(graph_error("p 2 1\ne 0 1"), ParseErrorKind::VertexOutOfRange);
  EXPECT_EQ(graph_error("p 2 1\ne 2 2"), ParseErrorKind::SelfLoop);
  EXPECT_EQ(graph_error("p 3 3\ne 1 2\ne 2 3", &line), ParseErrorKind::CountMismatch);
  EXPECT_EQ(line, 1);
}

TEST(EmitColoring, Examples) {
  EXPECT_EQ(emit_coloring(complete_graph(2), construct(1)), "c 2 1\ne 1 2 1\n");
  EXPECT_EQ(emit_coloring(complete_graph(4), construct(2)),
            "c 4 4\ne 1 2 1\ne 1 3 2\ne 1 4 3\ne 2 3 3\ne 2 4 2\ne 3 4 4\n");
  const std::string rr = emit_coloring(complete_graph(4), round_robin(2));
  EXPECT_EQ(rr.substr(0, rr.find('\n')), "c 4 3");
}

TEST(EmitColoring, RejectsPartialColoring) {
  EdgeColoring c(1);
  c.set(1, 2, 1);
  EXPECT_THROW(emit_coloring(complete_graph(3), c), UncoloredEdgeError);
}

TEST(EmitGraph, RoundTrips) {
  const Graph g(5, {{4, 1}, {2, 3}, {5, 2}});
  EXPECT_EQ(emit_graph(g), "p 5 3\ne 1 4\ne 2 3\ne 2 5\n");
  EXPECT_EQ(parse_graph(emit_graph(g)), g);
}

TEST(ParseColoring, Errors) {
  const Graph k4 = complete_graph(4);
  int line = 0;
  EXPECT_EQ(coloring_error("c 4 4\ne 1 2 0\n", k4, &line), ParseErrorKind::ColorOutOfRange);
  EXPECT_EQ(line, 2);
  EXPECT_EQ(coloring_error("c 4 4\ne 1 2 5\n", k4), ParseErrorKind::ColorOutOfRange);
  EXPECT_EQ(coloring_error("c 4 4\ne 1 2 1\ne 1 3 2\ne 1 4 3\ne 2 3 3\ne 2 4 2\n", k4),
            ParseErrorKind::MissingEdge);
  EXPECT_EQ(coloring_error("c 4 3\ne 1 2 1\ne 1 2 2\n", k4, &line), ParseErrorKind::DuplicateEdge);
  EXPECT_EQ(line, 3);
  EXPECT_EQ(coloring_error("c 5 3\ne 1 2 1\n", k4), ParseErrorKind::VertexCountMismatch);
  EXPECT_EQ(coloring_error("c 4 0\n", k4), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(coloring_error("p 4 6\n", k4), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(coloring_error("c 4 3\ne 1 2\n", k4), ParseErrorKind::MalformedLine);

  const Graph path(4, {{1, 2}, {2, 3}});
  EXPECT_EQ(coloring_error("c 4 2\ne 1 2 1\ne 3 4 2\n", path, &line), ParseErrorKind::UnknownEdge);
  EXPECT_EQ(line, 3);
}

TEST(ParseColoring, MissingEdgeNamesTheEdge) {
  try {
    parse_coloring("c 4 4\ne 1 2 1\ne 1 3 2\ne 1 4 3\ne 2 3 3\ne 2 4 2\n", complete_graph(4));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("(3,4)"), std::string::npos) << e.what();
  }
}

TEST(ParseColoring, ImpliedGraph) {
  const auto parsed = parse_coloring("c 5 2\ne 1 2 1\ne 2 3 2\n");
  EXPECT_EQ(parsed.graph, Graph(5, {{1, 2}, {2, 3}}));
  EXPECT_EQ(parsed.coloring.color_of(2, 3), 2);
  EXPECT_EQ(parsed.coloring.span(), 2);
}

TEST(Properties, RoundTripIsByteExact) {
  for (int n = 1; n <= 32; ++n) {
    const Graph g = complete_graph(2 * n);
    for (const EdgeColoring& c : {construct(n), round_robin(n)}) {
      const std::string text = emit_coloring(g, c);
      const EdgeColoring back = parse_coloring(text, g);
      EXPECT_EQ(back, c) << n;
      EXPECT_EQ(emit_coloring(g, back), text) << n;
      const auto implied = parse_coloring(text);
      EXPECT_EQ(implied.graph, g);
      EXPECT_EQ(implied.coloring, c);
    }
  }
}

}  // namespace
}  // namespace ivc
