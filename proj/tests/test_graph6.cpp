#include <doctest.h>

#include <random>

#include "sombor/graph.hpp"
#include "sombor/graph6.hpp"

using namespace sombor;

namespace {

/// Independent reference decoder: reads the bit stream directly with
/// naive string arithmetic, no shared code with the library path.
Graph reference_decode_short(const std::string& s) {
  int n = s[0] - 63;
  std::string bits;
  for (size_t i = 1; i < s.size(); ++i) {
    int c = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(char('0' + ((c >> b) & 1)));
  }
  Graph g(n);
  size_t pos = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++pos)
      if (bits.at(pos) == '1') g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("graph6 decode against reference") {
  // 'D?{' is the 5-vertex star centered at the last vertex
  Graph g = parse_graph6("D?{");
  CHECK(g == reference_decode_short("D?{"));
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(4) == 4);

  for (const std::string& s : {"A_", "Bw", "C^", "DQc", "E?Bw", "FwCXw"}) {
    CAPTURE(s);
    CHECK(parse_graph6(s) == reference_decode_short(s));
  }
}

TEST_CASE("graph6 canonical round trip") {
  for (const std::string& s : {"D?{", "A_", "E?Bw", "@", "?"}) {
    CAPTURE(s);
    CHECK(write_graph6(parse_graph6(s)) == s);
  }
}

TEST_CASE("graph6 malformed inputs") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("D?"), Graph6Error);    // truncated body
  CHECK_THROWS_AS(parse_graph6("D?{?"), Graph6Error);  // trailing bytes
  CHECK_THROWS_AS(parse_graph6("D?\x01"), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("A~"), Graph6Error);  // nonzero padding
  try {
    parse_graph6("D\x05{");
  } catch (const Graph6Error& e) {
    CHECK(e.offset == 1);
  }
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = int(rng() % 31);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) g.add_edge(u, v);
    std::string s = write_graph6(g);
    CHECK(parse_graph6(s) == g);
  }
}

TEST_CASE("graph6 long form") {
  Graph g(100);
  g.add_edge(0, 99);
  g.add_edge(42, 77);
  std::string s = write_graph6(g);
  CHECK(s[0] == 126);
  CHECK(parse_graph6(s) == g);
}

TEST_CASE("edge csv") {
  Graph p3 = parse_edge_csv("u,v\n0,1\n1,2\n");
  CHECK(p3 == path(3));
  CHECK(parse_edge_csv(write_edge_csv(cycle(5))) == cycle(5));
  CHECK_THROWS(parse_edge_csv("0;1\n"));
  CHECK(parse_edge_csv("", 4) == empty_graph(4));
}
