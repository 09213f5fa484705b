#include "glmy/digraph.hpp"
#include "helpers.hpp"

#include <set>

using namespace glmy;

TEST_CASE("construction errors") {
  CHECK_ERROR_CODE(Digraph::build({"a"}, {{"a", "a"}}), ErrorCode::LoopArrow);
  CHECK_ERROR_CODE(Digraph::build({"a", "b"}, {{"a", "b"}, {"a", "b"}}), ErrorCode::DuplicateArrow);
  CHECK_ERROR_CODE(Digraph::build({"a"}, {{"a", "z"}}), ErrorCode::UnknownVertex);
  CHECK_ERROR_CODE(Digraph::build({"a", "a"}, {}), ErrorCode::LabelCollision);
}

TEST_CASE("opposite arrows are allowed") {
  const Digraph g = Digraph::build({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK(g.arrow_count() == 2);
  CHECK(g.has_arrow(0, 1));
  CHECK(g.has_arrow(1, 0));
}

TEST_CASE("cone and suspension") {
  const Digraph c4 = cycle_digraph(4);
  const Digraph c = cone(c4);
  CHECK(c.vertex_count() == 5);
  CHECK(c.arrow_count() == 8);
  CHECK(c.has_arrow(2, *c.find("+a")));
  CHECK_ERROR_CODE(cone(c, "+a"), ErrorCode::LabelCollision);

  const Digraph s = suspension(c4);
  CHECK(s.vertex_count() == 6);
  CHECK(s.arrow_count() == 12);
  CHECK_FALSE(s.has_arrow(*s.find("+a"), *s.find("+b")));
  const Digraph s2 = suspension(s, "+a2", "+b2");
  CHECK(s2.vertex_count() == 8);
  CHECK(s2.arrow_count() == 12 + 12);
}

TEST_CASE("box product counts") {
  const Digraph c4 = cycle_digraph(4);
  const Digraph b = box_product(c4, c4);
  CHECK(b.vertex_count() == 16);
  CHECK(b.arrow_count() == 32);
  CHECK(b.label(1) == "(0,1)");
  CHECK(b.has_arrow(b.index_of("(0,3)"), b.index_of("(0,0)")));
  CHECK_FALSE(b.has_arrow(b.index_of("(0,0)"), b.index_of("(1,1)")));
  // |V(G□H)| = |V(G)||V(H)|, |E| = |E(G)||V(H)| + |V(G)||E(H)|
  const Digraph sq = square_digraph();
  const Digraph p = box_product(sq, c4);
  CHECK(p.arrow_count() == 4 * 4 + 4 * 4);
}

TEST_CASE("lines and grids") {
  const LineDigraph l{"FBF"};
  CHECK(l.is_standard());
  CHECK_FALSE(LineDigraph{"FF"}.is_standard());
  CHECK(LineDigraph::standard(4).word == "FBFB");
  const Digraph line = make_line(LineDigraph{"FB"});
  CHECK(line.has_arrow(0, 1));
  CHECK(line.has_arrow(2, 1));
  const Digraph grid = make_grid({LineDigraph{"F"}, LineDigraph{"FB"}});
  CHECK(grid.vertex_count() == 6);
  CHECK(grid.arrow_count() == 3 + 4);
  CHECK(grid.label(0) == "(0,0)");
  CHECK(grid.label(1) == "(0,1)");
}

TEST_CASE("digraph maps") {
  const Digraph c4 = cycle_digraph(4);
  const Digraph c2 = Digraph::build({"x", "y"}, {{"x", "y"}, {"y", "x"}});
  CHECK(check_digraph_map(c4, c2, std::vector<Vertex>{0, 1, 0, 1}));
  CHECK(check_digraph_map(c4, c2, std::vector<Vertex>{0, 1, 1, 0}));
  const Digraph j1 = Digraph::build({"x", "y"}, {{"x", "y"}});
  CHECK_FALSE(check_digraph_map(c4, j1, std::vector<Vertex>{0, 1, 0, 1}));
  CHECK(check_digraph_map(c4, j1, std::vector<Vertex>{0, 0, 0, 0}));
  CHECK(check_digraph_map(c4, c4, std::vector<Vertex>{0, 0, 0, 0}));
  CHECK_ERROR_CODE(check_digraph_map(c4, c2, std::vector<Vertex>{0, 1}), ErrorCode::UnknownVertex);
}

TEST_CASE("subdigraph embedding") {
  const Digraph c4 = cycle_digraph(4);
  const Digraph s = suspension(c4);
  CHECK(embed_subdigraph(s, c4) == std::vector<Vertex>{0, 1, 2, 3});
  const Digraph reversed = Digraph::build({"1", "0"}, {{"1", "0"}});
  CHECK_ERROR_CODE(embed_subdigraph(s, reversed), ErrorCode::NotASubdigraph);
}

TEST_CASE("random digraphs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t v = 2 + uniform_below(rng, 5);
    const std::size_t a = uniform_below(rng, v * (v - 1) / 2 + 1);
    const Digraph g = random_digraph(rng, v, a, true);
    CHECK(g.vertex_count() == v);
    CHECK(g.arrow_count() == a);
    for (const auto& [s, t] : g.arrows()) CHECK_FALSE(g.has_arrow(t, s));
  }
  std::mt19937_64 r1(5), r2(5);
  CHECK(random_digraph(r1, 5, 7) == random_digraph(r2, 5, 7));
}
