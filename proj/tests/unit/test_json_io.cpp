#include "glmy/json_io.hpp"
#include "helpers.hpp"

using namespace glmy;

namespace {
const std::filesystem::path kData = GLMY_TEST_DATA;
}

TEST_CASE("digraph round trip") {
  const Json j = parse_json(R"({"vertices": ["a", "b", "c"], "arrows": [["a", "b"], ["c", "b"]], "base": "c"})");
  const DigraphFile f = digraph_from_json(j);
  CHECK(f.graph.vertex_count() == 3);
  REQUIRE(f.base);
  CHECK(*f.base == 2);
  const Json back = digraph_to_json(f.graph, f.base);
  CHECK(digraph_from_json(back).graph == f.graph);
  CHECK(back["base"] == "c");
}

TEST_CASE("malformed input") {
  CHECK_ERROR_CODE(parse_json("{"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(digraph_from_json(parse_json(R"({"arrows": []})")), ErrorCode::ParseError);
  CHECK_ERROR_CODE(digraph_from_json(parse_json(R"({"vertices": ["a"], "arrows": [["a"]]})")), ErrorCode::ParseError);
  CHECK_ERROR_CODE(digraph_from_json(parse_json(R"({"vertices": ["a"], "arrows": [["a", "a"]]})")), ErrorCode::LoopArrow);
  CHECK_ERROR_CODE(read_json_file(kData / "malformed.json"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(read_json_file(kData / "missing.json"), ErrorCode::ParseError);
}

TEST_CASE("pairs") {
  const DigraphPair p = pair_from_json(read_json_file(kData / "pair_cone_c4.json"));
  CHECK(p.ambient.vertex_count() == 5);
  CHECK(p.sub.vertex_count() == 4);
  const DigraphPair bad = pair_from_json(read_json_file(kData / "pair_bad.json"));
  CHECK_ERROR_CODE(embed_subdigraph(bad.ambient, bad.sub), ErrorCode::NotASubdigraph);
}

TEST_CASE("chains and cubes") {
  const Digraph c4 = cycle_digraph(4);
  PathChain c;
  c.add({0, 1, 2}, 3);
  c.add({2, 3, 0}, -1);
  CHECK(path_chain_from_json(c4, path_chain_to_json(c4, c)) == c);

  const Cube cube{2, {0, 1, 1, 2}};
  CHECK(cube_from_json(c4, cube_to_json(c4, cube)) == cube);
  CHECK_ERROR_CODE(cube_from_json(c4, parse_json(R"({"dim": 2, "values": ["0", "1"]})")), ErrorCode::ParseError);
}

TEST_CASE("grid maps and certificates from files") {
  const GridMap w = grid_map_from_json(read_json_file(kData / "winding.json"), kData);
  CHECK(w.mode() == GridMode::Pair);
  CHECK(w.length(0) == 8);
  CHECK(validate(w).ok);
  CHECK(grid_map_from_json(grid_map_to_json(w)) == w);

  const GridMap f = grid_map_from_json(read_json_file(kData / "homotopy_f.json"), kData);
  const GridMap g = grid_map_from_json(read_json_file(kData / "homotopy_g.json"), kData);
  const auto steps = certificate_from_json(f, read_json_file(kData / "certificate.json"));
  CHECK(verify_homotopy_certificate(f, g, steps).ok);
  const auto wrong = certificate_from_json(f, read_json_file(kData / "certificate_wrong.json"));
  CHECK_FALSE(verify_homotopy_certificate(f, g, wrong).ok);
  CHECK(certificate_from_json(f, certificate_to_json(f, steps)).size() == 1);

  CHECK_ERROR_CODE(grid_map_from_json(parse_json(R"({"axes": [{"len": 2, "pattern": "FX"}], "values": ["0", "1", "1"],
                                                     "target": "c4.json"})"),
                                      kData),
                   ErrorCode::ParseError);
  CHECK_ERROR_CODE(grid_map_from_json(parse_json(R"({"axes": [{"len": 2}], "values": ["0", "1", "1"], "mode": "pair",
                                                     "target": "c4.json"})"),
                                      kData),
                   ErrorCode::ParseError);
}

TEST_CASE("synthetic complexes") {
  const ChainComplex c = chain_complex_from_json(read_json_file(kData / "torsion_complex.json"));
  CHECK(homology(c, 1).presentation().to_string() == "Z ⊕ Z/2");
  CHECK(homology(c, 2).presentation().is_trivial());
  CHECK_ERROR_CODE(chain_complex_from_json(parse_json(R"({"dims": [1, 1, 1], "differentials": [[[1]], [[1]]]})")),
                   ErrorCode::BoundaryNotSquareZero);
  CHECK_ERROR_CODE(chain_complex_from_json(parse_json(R"({"dims": [1, 2], "differentials": [[[1]]]})")),
                   ErrorCode::ParseError);
}

TEST_CASE("big integers are written as strings") {
  Integer big = 1;
  for (int i = 0; i < 30; ++i) big *= 10;
  const Json j = integers_to_json({5, big});
  CHECK(j[0] == 5);
  CHECK(j[1] == "1000000000000000000000000000000");
  AbelianGroupPresentation p{1, {2, 6}};
  CHECK(presentation_to_json(p)["torsion"].size() == 2);
}
