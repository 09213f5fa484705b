#include "glmy/suspension.hpp"
#include "helpers.hpp"

#include <random>

using namespace glmy;

namespace {

bool unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("suspension isomorphisms on the 4-cycle") {
  const Digraph c4 = cycle_digraph(4);
  const IntMatrix ep = path_suspension(c4, 1);
  const IntMatrix ec = cubical_suspension(c4, 1);
  CHECK(unimodular(ep));
  CHECK(unimodular(ec));

  // L commutes with the suspensions.
  const IntMatrix l1 = comparison_L(c4, 1, {}, true);
  const IntMatrix l2 = comparison_L(suspension(c4), 2, {}, true);
  CHECK(l2 * ec == ep * l1);
}

TEST_CASE("suspension in degree zero uses reduced groups") {
  const Digraph two = Digraph::build({"x", "y"}, {});
  const IntMatrix e0 = path_suspension(two, 0);
  CHECK(e0.rows() == 1);
  CHECK(unimodular(e0));
  CHECK(unimodular(cubical_suspension(two, 0)));

  const Digraph three = Digraph::build({"x", "y", "z"}, {{"x", "y"}});
  CHECK(unimodular(path_suspension(three, 0)));
}

TEST_CASE("suspension maps match the suspension cycle") {
  const Digraph c4 = cycle_digraph(4);
  const SuspensionPairs pairs = path_suspension_pairs(c4, 3);
  const SuspensionMaps maps = suspension_maps(pairs, 1);
  CHECK(maps.base.presentation().to_string() == "Z");
  CHECK(maps.suspended.presentation().to_string() == "Z");

  const Digraph s = suspension(c4);
  const OmegaComplex os(s, 3);
  const OmegaComplex ox(c4, 2);
  const PathChain z = ox.omega_to_chain(1, maps.base.representative(0));
  const PathChain sz = suspension_cycle(s, z, 4, 5);
  const auto coords = maps.suspended.coordinates(os.chain_to_omega(2, sz));
  REQUIRE(coords.size() == 1);
  CHECK(coords[0] == maps.composite(0, 0));
}

TEST_CASE("closed-form cubical connecting map equals the generic one") {
  std::mt19937_64 rng(55);
  std::vector<Digraph> samples{cycle_digraph(4), Digraph::build({"x", "y"}, {}), square_digraph()};
  for (int i = 0; i < 6; ++i) samples.push_back(random_digraph(rng, 2 + uniform_below(rng, 2), uniform_below(rng, 3), true));
  for (const Digraph& x : samples) {
    const Digraph c = cone(x);
    const CubicalComplex amb(c, 3), sub(x, 3);
    const auto emb = embed_subdigraph(c, x);
    const ChainComplexPair pair = cubical_pair(amb, sub, emb);
    for (int n = 0; n <= 1; ++n) {
      const HomologyGroup q = homology(pair.quotient(), n + 1);
      const HomologyGroup s = homology(pair.sub(), n);
      CHECK(cubical_connecting_formula(amb, sub, emb, n) == pair.connecting_map(n + 1, q, s));
    }
  }
}

TEST_CASE("suspension pairs are exact") {
  const Digraph c4 = cycle_digraph(4);
  for (bool reduced : {true, false}) {
    const SuspensionPairs p = path_suspension_pairs(c4, 3, reduced);
    CHECK(verify_exactness(pair_long_exact_sequence(p.cone, 2)).exact);
    CHECK(verify_exactness(pair_long_exact_sequence(p.suspension, 2)).exact);
    const SuspensionPairs c = cubical_suspension_pairs(c4, 3, {}, reduced);
    CHECK(verify_exactness(pair_long_exact_sequence(c.cone, 2)).exact);
    CHECK(verify_exactness(pair_long_exact_sequence(c.suspension, 2)).exact);
  }
}
