#include "glmy/grid.hpp"
#include "glmy/suspension.hpp"
#include "helpers.hpp"

#include <random>

using namespace glmy;

namespace {

GridMap loop(const Digraph& target, std::vector<Vertex> values, Vertex base = 0) {
  const std::size_t m = values.size() - 1;
  return GridMap({LineDigraph::standard(m)}, std::move(values), target, GridMode::Pair, base);
}

GridMap winding() { return loop(cycle_digraph(4), {0, 1, 1, 2, 2, 3, 3, 0, 0}); }

Integer single(const std::vector<Integer>& v) {
  REQUIRE(v.size() == 1);
  return v[0];
}

}  // namespace

TEST_CASE("shrinking maps") {
  const ShrinkingMap h{LineDigraph{"FBF"}, {0, 1, 2, 2}};
  h.check(LineDigraph{"FB"});
  CHECK(h.codomain_length() == 2);

  CHECK_ERROR_CODE((ShrinkingMap{LineDigraph{"FBF"}, {0, 1, 1, 1}}.check(LineDigraph{"FB"})), ErrorCode::NotMonotoneShape);
  CHECK_ERROR_CODE((ShrinkingMap{LineDigraph{"FBF"}, {0, 2, 2, 2}}.check(LineDigraph{"FB"})), ErrorCode::NotMonotoneShape);
  CHECK_ERROR_CODE((ShrinkingMap{LineDigraph{"BFF"}, {0, 1, 2, 2}}.check(LineDigraph{"FB"})), ErrorCode::NotMonotoneShape);

  CHECK(ShrinkingMap::doubling(3).values == std::vector<std::size_t>{0, 1, 2, 2, 2, 3, 3});
  CHECK(ShrinkingMap::doubling(3).domain.length() == 6);
  CHECK(ShrinkingMap::standard(2, {0, 1}).values == std::vector<std::size_t>{0, 1, 1, 1, 2});
  CHECK_ERROR_CODE(ShrinkingMap::standard(2, {1, 0}), ErrorCode::NotMonotoneShape);
}

TEST_CASE("grid map validation") {
  const Digraph c4 = cycle_digraph(4);
  CHECK(validate(winding()).ok);
  CHECK_FALSE(validate(loop(c4, {0, 2, 0, 0, 0})).ok);
  // A pair map must send both ends to the base.
  CHECK_FALSE(validate(loop(c4, {0, 1, 1, 2, 2})).ok);
  CHECK_ERROR_CODE(require_valid(loop(c4, {0, 1, 1, 2, 2})), ErrorCode::InvalidGridMap);
  const GridMap absolute({LineDigraph::standard(2)}, {0, 1, 1}, c4);
  CHECK(validate(absolute).ok);
  CHECK_ERROR_CODE(GridMap({LineDigraph::standard(2)}, {0, 1}, c4), ErrorCode::ShapeMismatch);
}

TEST_CASE("triple maps") {
  const Digraph c4 = cycle_digraph(4);
  const Digraph cone4 = cone(c4);
  const Vertex apex = 4;
  std::vector<Vertex> values{0, 1, 1, 2, 2, 3, 3, 0, 0};
  values.push_back(0);
  for (int j = 1; j < 8; ++j) values.push_back(apex);
  values.push_back(0);
  for (int j = 0; j <= 8; ++j) values.push_back(0);
  const GridMap f({LineDigraph::standard(2), LineDigraph::standard(8)}, values, cone4, GridMode::Triple, 0, c4);
  CHECK(validate(f).ok);

  // Moving the face i1 = 0 off A breaks the triple condition.
  std::vector<Vertex> off = values;
  off[1] = apex;
  CHECK_FALSE(validate(f.with(f.axes(), off)).ok);

  // The connecting map sends the class of f to minus the class of the loop on
  // its face i1 = 0: the face carries the sign (-1)^1 in the cube boundary.
  const GridMap gamma = loop(c4, {0, 1, 1, 2, 2, 3, 3, 0, 0});
  const CubicalComplex amb(cone4, 3), sub(c4, 3);
  const auto emb = embed_subdigraph(cone4, c4);
  const ChainComplexPair pair = cubical_pair(amb, sub, emb);
  const HomologyGroup q2 = homology(pair.quotient(), 2);
  const HomologyGroup s1 = homology(pair.sub(), 1);
  const auto rel = q2.coordinates(pair.projection(2).apply(amb.to_coords(2, hurewicz_chain(f))));
  const auto face = s1.coordinates(sub.to_coords(1, hurewicz_chain(gamma)));
  const IntMatrix delta = pair.connecting_map(2, q2, s1);
  REQUIRE(delta.rows() == 1);
  REQUIRE(delta.cols() == 1);
  CHECK(single(rel) * delta(0, 0) == -single(face));
  CHECK(single(face) != 0);
  CHECK(cubical_connecting_formula(amb, sub, emb, 1) == delta);

  // Same sign for path homology.
  const OmegaComplex pa(cone4, 3), ps(c4, 3);
  const ChainComplexPair opair = omega_pair(pa, ps, emb);
  const HomologyGroup oq2 = homology(opair.quotient(), 2);
  const HomologyGroup os1 = homology(opair.sub(), 1);
  const auto prel = oq2.coordinates(opair.projection(2).apply(pa.chain_to_omega(2, iota(hurewicz_chain(f)))));
  const auto pface = os1.coordinates(ps.chain_to_omega(1, iota(hurewicz_chain(gamma))));
  CHECK(single(prel) * opair.connecting_map(2, oq2, os1)(0, 0) == -single(pface));

  // Relative classes through the evaluator agree up to the choice of generator.
  CHECK(abs(single(hurewicz_class(f))) == 1);
  CHECK(abs(single(glmy_hurewicz(f))) == 1);
}

TEST_CASE("operations on grid maps") {
  const GridMap g = winding();
  const GridMap e = extend(g, {12});
  CHECK(e.length(0) == 12);
  CHECK(validate(e).ok);
  CHECK(e.values().back() == 0);
  CHECK_ERROR_CODE(extend(g, {6}), ErrorCode::NotMonotoneShape);

  const GridMap twice = concat_mu(1, g, g);
  CHECK(twice.length(0) == 16);
  CHECK(validate(twice).ok);

  const GridMap inv = inverse_j(1, g);
  CHECK(inv.values() == std::vector<Vertex>{0, 0, 3, 3, 2, 2, 1, 1, 0});
  CHECK(validate(inv).ok);
  const GridMap odd({LineDigraph{"FBF"}}, {0, 1, 1, 2}, cycle_digraph(4));
  CHECK_ERROR_CODE(inverse_j(1, odd), ErrorCode::OddLengthAxis);

  const GridMap s = subdivide(g, {ShrinkingMap::doubling(8)});
  CHECK(s.length(0) == 16);
  CHECK(validate(s).ok);
  CHECK(minimal_path(s) == minimal_path(g));
  CHECK(minimal_path(g) == std::vector<Vertex>{0, 1, 2, 3, 0});
  CHECK_ERROR_CODE(subdivide(g, {ShrinkingMap::doubling(3)}), ErrorCode::ShapeMismatch);
}

TEST_CASE("Hurewicz classes of loops") {
  const GridMap g = winding();
  const Integer w = single(glmy_hurewicz(g));
  CHECK(abs(w) == 1);
  CHECK(abs(single(hurewicz_class(g))) == 1);
  CHECK(single(glmy_hurewicz(concat_mu(1, g, g))) == 2 * w);
  CHECK(single(glmy_hurewicz(inverse_j(1, g))) == -w);
  CHECK(single(glmy_hurewicz(loop(cycle_digraph(4), {0, 0, 0, 0, 0}))) == 0);
  CHECK(single(glmy_hurewicz(loop(cycle_digraph(4), {0, 1, 0}))) == 0);
  CHECK(single(glmy_hurewicz(subdivide(g, {ShrinkingMap::doubling(8)}))) == w);

  const HurewiczEvaluator ev(g, true);
  CHECK(ev.path_class_of_chain(loop_h_prime(g)) == ev.path_class(g));
  CHECK(ev.cubical_class(g) == hurewicz_class(g));
  const GridMap square({LineDigraph::standard(2), LineDigraph::standard(2)}, std::vector<Vertex>(9, 0),
                       cycle_digraph(4), GridMode::Pair, 0);
  CHECK_ERROR_CODE(loop_h_prime(square), ErrorCode::WrongDimension);
}

TEST_CASE("Hurewicz chain of a backward step carries a sign") {
  const Digraph c4 = cycle_digraph(4);
  const GridMap g({LineDigraph{"B"}}, {1, 0}, c4);
  const CubicalChain h = hurewicz_chain(g);
  REQUIRE(h.terms().size() == 1);
  CHECK(h.terms().begin()->first == Cube{1, {0, 1}});
  CHECK(h.terms().begin()->second == -1);
}

TEST_CASE("direct homotopies") {
  const Digraph c4 = cycle_digraph(4);
  const GridMap f = loop(c4, {0, 0, 0, 0, 0});
  const GridMap g = loop(c4, {0, 1, 0, 0, 0});
  CHECK(allows(direct_homotopy(f, g), Direction::Forward));
  CHECK_FALSE(allows(direct_homotopy(f, g), Direction::Backward));
  CHECK(allows(direct_homotopy(g, f), Direction::Backward));
  CHECK(direct_homotopy(f, f) == Direction::Both);
}

TEST_CASE("homotopy certificates") {
  const Digraph c4 = cycle_digraph(4);
  const GridMap f = loop(c4, {0, 0, 0, 0, 0});
  const GridMap g = loop(c4, {0, 1, 0, 0, 0});
  CertificateStep step{identity_shrink(f), identity_shrink(g), Direction::Forward, std::nullopt};
  CHECK(verify_homotopy_certificate(f, g, {step}).ok);
  step.direction = Direction::Backward;
  const auto report = verify_homotopy_certificate(f, g, {step});
  CHECK_FALSE(report.ok);
  CHECK(report.failed_step == 0);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const GridMap start = random_grid_map(rng, c4, {6}, GridMode::Pair, 0);
    REQUIRE(validate(start).ok);
    const RandomCertificate cert = random_certificate(rng, start, 3);
    CHECK(validate(cert.end).ok);
    CHECK(verify_homotopy_certificate(start, cert.end, cert.steps).ok);
    CHECK(glmy_hurewicz(start) == glmy_hurewicz(cert.end));
    CHECK(hurewicz_class(start) == hurewicz_class(cert.end));
  }
}

TEST_CASE("random grid maps are valid") {
  std::mt19937_64 rng(12);
  const Digraph c4 = cycle_digraph(4);
  const Digraph s = suspension(c4);
  for (int trial = 0; trial < 30; ++trial) {
    CHECK(validate(random_grid_map(rng, c4, {8}, GridMode::Pair, 0)).ok);
    CHECK(validate(random_grid_map(rng, s, {4, 4}, GridMode::Pair, 0)).ok);
    CHECK(validate(random_grid_map(rng, c4, {4}, GridMode::Absolute, 0)).ok);
    CHECK(validate(random_grid_map(rng, cone(c4), {2, 4}, GridMode::Triple, 0, c4)).ok);
  }
}
