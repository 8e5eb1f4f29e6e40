#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lincomb/errors.hpp"
#include "lincomb/graph_io.hpp"
#include "lincomb/random.hpp"

using namespace lincomb;

namespace {

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

Graph petersen() {
  return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

}  // namespace

// Reference strings produced by networkx.to_graph6_bytes(header=False).
TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(complete(3)), "Bw");
  EXPECT_EQ(to_graph6(empty(2)), "A?");
  EXPECT_EQ(to_graph6(path(3)), "Bg");
  EXPECT_EQ(to_graph6(empty(0)), "?");
  EXPECT_EQ(to_graph6(empty(1)), "@");
  EXPECT_EQ(to_graph6(petersen()), "IheA@GUAo");
  const std::string p70 = to_graph6(path(70));
  EXPECT_EQ(p70.size(), 407u);
  EXPECT_EQ(p70.substr(0, 6), "~?@EhC");
  EXPECT_EQ(p70.substr(p70.size() - 6), "?????G");
}

TEST(Graph6, RoundTrip) {
  Rng rng = SeedStream(11).child("graph6").engine();
  for (std::size_t n : {0, 1, 2, 5, 62, 63, 64, 100, 300}) {
    const Graph g = random_graph(n, 0.3, rng);
    EXPECT_EQ(from_graph6(to_graph6(g)), g) << "n=" << n;
  }
  EXPECT_EQ(from_graph6(">>graph6<<IheA@GUAo\n"), petersen());
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("Bw?"), ParseError);   // too long
  EXPECT_THROW(from_graph6("I"), ParseError);     // too short
  EXPECT_THROW(from_graph6("B\x7f"), ParseError);  // byte out of range
  EXPECT_THROW(from_graph6("Bx"), ParseError);    // padding bit set
  EXPECT_THROW(from_graph6("~?"), ParseError);    // truncated order
}

TEST(EdgeList, RoundTripAndComments) {
  const Graph g = petersen();
  std::stringstream ss;
  write_edge_list(ss, g);
  EXPECT_EQ(read_edge_list(ss), g);

  std::istringstream in("# triangle\n\n3\n0 1\n# middle\n1 2\n0 2\n");
  EXPECT_EQ(read_edge_list(in), complete(3));
}

TEST(EdgeList, LineNumberedErrors) {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("3\n0 1\n2 2\n"), 3u);
  EXPECT_EQ(line_of("3\n0 5\n"), 2u);
  EXPECT_EQ(line_of("x\n"), 1u);
  EXPECT_EQ(line_of("3\n0 1 2\n"), 2u);
  EXPECT_EQ(line_of("# c\n3\n\n0\n"), 4u);
  EXPECT_EQ(line_of(""), 1u);
}

TEST(GraphFile, DispatchByExtension) {
  const std::string g6 = ::testing::TempDir() + "lincomb_k3.g6";
  const std::string el = ::testing::TempDir() + "lincomb_k3.edgelist";
  {
    std::ofstream(g6) << "Bw\n";
    std::ofstream(el) << "3\n0 1\n1 2\n0 2\n";
  }
  EXPECT_EQ(read_graph_file(g6), complete(3));
  EXPECT_EQ(read_graph_file(el), complete(3));
  EXPECT_THROW(read_graph_file(::testing::TempDir() + "missing.g6"), ParseError);
  std::remove(g6.c_str());
  std::remove(el.c_str());
}
