#include "glmy/cubical.hpp"
#include "helpers.hpp"

#include <map>
#include <random>

using namespace glmy;

namespace {

// All maps {0,1}^n -> V respecting arrows, by brute force over V^(2^n).
std::vector<std::vector<Vertex>> brute_force_cubes(const Digraph& g, int n) {
  const std::size_t corners = std::size_t{1} << n;
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> f(corners, 0);
  const std::size_t nv = g.vertex_count();
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (x == corners) {
      out.push_back(f);
      return;
    }
    for (Vertex v = 0; v < nv; ++v) {
      f[x] = v;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const std::size_t bit = std::size_t{1} << i;
        if (x & bit) ok = g.arrow_or_equal(f[x ^ bit], v);
      }
      if (ok) rec(x + 1);
    }
  };
  rec(0);
  return out;
}

bool constant_along_some_axis(const std::vector<Vertex>& f, int n) {
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    bool constant = true;
    for (std::size_t x = 0; x < f.size() && constant; ++x)
      if (!(x & bit)) constant = f[x] == f[x | bit];
    if (constant) return true;
  }
  return false;
}

// Betti numbers of the normalized cubical complex over F_p.
std::vector<std::size_t> oracle_cubical_betti(const Digraph& g, int top) {
  std::vector<std::map<std::vector<Vertex>, std::size_t>> index(static_cast<std::size_t>(top + 2));
  for (int n = 0; n <= top + 1; ++n) {
    for (auto& f : brute_force_cubes(g, n)) {
      if (constant_along_some_axis(f, n)) continue;
      const std::size_t k = index[static_cast<std::size_t>(n)].size();
      index[static_cast<std::size_t>(n)].emplace(std::move(f), k);
    }
  }
  auto boundary_rank = [&](int n) -> std::size_t {
    if (n == 0) return 0;
    const auto& src = index[static_cast<std::size_t>(n)];
    const auto& dst = index[static_cast<std::size_t>(n - 1)];
    oracle::Matrix d(dst.size(), oracle::Row(src.size(), 0));
    for (const auto& [f, j] : src) {
      for (int i = 1; i <= n; ++i) {
        for (int k = 0; k <= 1; ++k) {
          std::vector<Vertex> face;
          for (std::size_t y = 0; y < (std::size_t{1} << (n - 1)); ++y) {
            const std::size_t low = y & ((std::size_t{1} << (i - 1)) - 1);
            const std::size_t high = (y >> (i - 1)) << i;
            face.push_back(f[high | (static_cast<std::size_t>(k) << (i - 1)) | low]);
          }
          auto it = dst.find(face);
          if (it == dst.end()) continue;  // degenerate
          const std::int64_t sign = (i % 2 ? -1 : 1) * (k == 0 ? 1 : -1);
          d[it->second][j] += sign;
        }
      }
    }
    return oracle::rank(d, src.size());
  };
  std::vector<std::size_t> betti;
  for (int n = 0; n <= top; ++n)
    betti.push_back(index[static_cast<std::size_t>(n)].size() - boundary_rank(n) - boundary_rank(n + 1));
  return betti;
}

}  // namespace

TEST_CASE("cube counts match brute force") {
  const Digraph j1 = Digraph::build({"0", "1"}, {{"0", "1"}});
  // Monotone maps {0,1}^2 -> {0 < 1}: six, not nine. Only min and max are
  // nondegenerate.
  CHECK(enumerate_cubes(j1, 2).size() == 6);
  CHECK(enumerate_cubes(j1, 2, {}, false).size() == 2);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t v = 2 + uniform_below(rng, 3);
    const Digraph g = random_digraph(rng, v, uniform_below(rng, v * (v - 1) + 1));
    for (int n = 0; n <= 3; ++n) {
      const auto all = brute_force_cubes(g, n);
      std::size_t nondegenerate = 0;
      for (const auto& f : all) nondegenerate += constant_along_some_axis(f, n) ? 0 : 1;
      CHECK(enumerate_cubes(g, n).size() == all.size());
      CHECK(enumerate_cubes(g, n, {}, false).size() == nondegenerate);
    }
  }
}

TEST_CASE("faces and degeneracy") {
  const Cube c{2, {0, 1, 2, 3}};
  CHECK(face(c, 1, 0) == Cube{1, {0, 2}});
  CHECK(face(c, 1, 1) == Cube{1, {1, 3}});
  CHECK(face(c, 2, 0) == Cube{1, {0, 1}});
  CHECK_ERROR_CODE(face(c, 3, 0), ErrorCode::IndexOutOfRange);
  CHECK(is_degenerate(Cube{2, {0, 0, 2, 2}}));
  CHECK_FALSE(is_degenerate(c));
  CHECK(is_degenerate(Cube{1, {4, 4}}));
  CHECK_FALSE(is_degenerate(Cube{0, {4}}));

  const Digraph sq = square_digraph();
  CHECK(is_cube(sq, Cube{2, {0, 1, 2, 3}}));
  CHECK(is_cube(sq, Cube{2, {0, 2, 1, 3}}));
  CHECK_FALSE(is_cube(sq, Cube{2, {0, 1, 3, 2}}));
  CHECK_FALSE(is_cube(sq, Cube{1, {3, 0}}));
}

TEST_CASE("cubical boundary squares to zero") {
  const Digraph g = unit_cube_digraph(3);
  CubicalChain ch;
  std::vector<Vertex> values;
  for (std::size_t x = 0; x < 8; ++x) values.push_back(corner_vertex(3, x));
  ch.add(Cube{3, values}, 1);
  CHECK(is_cube(g, Cube{3, values}));
  CHECK(cubical_boundary(cubical_boundary(ch)).normalized().empty());
  CHECK(cubical_boundary(cubical_boundary(ch)).empty());
}

TEST_CASE("iota") {
  CHECK(iota(Cube{2, {0, 0, 1, 1}}).empty());
  CHECK(iota(Cube{1, {0, 1}}).terms().size() == 1);

  const Digraph sq = unit_cube_digraph(2);
  std::vector<Vertex> values;
  for (std::size_t x = 0; x < 4; ++x) values.push_back(corner_vertex(2, x));
  const PathChain p = iota(Cube{2, values});
  CHECK(p == omega_generator(2));
  CHECK(p.terms().size() == 2);
  CHECK(regular_boundary(p) == iota(cubical_boundary([&] {
          CubicalChain c;
          c.add(Cube{2, values}, 1);
          return c;
        }())));
  CHECK(omega_generator(3).terms().size() == 6);
}

TEST_CASE("iota is a chain map on random digraphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Digraph g = random_digraph(rng, 4, uniform_below(rng, 13));
    for (int n = 1; n <= 3; ++n) {
      for (const Cube& c : enumerate_cubes(g, n)) {
        CubicalChain ch;
        ch.add(c, 1);
        CHECK(regular_boundary(iota(ch)) == iota(cubical_boundary(ch)));
      }
    }
  }
}

TEST_CASE("cubical homology of small digraphs") {
  const Digraph c4 = cycle_digraph(4);
  CHECK(cubical_homology(c4, 1).to_string() == "Z");
  CHECK(cubical_homology(square_digraph(), 1).is_trivial());
  CHECK(cubical_homology(suspension(c4), 2, {}, true).to_string() == "Z");
  CHECK(relative_cubical_homology(cone(c4), c4, 2).to_string() == "Z");
}

TEST_CASE("cubical Betti numbers agree with the F_p oracle") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t v = 2 + uniform_below(rng, 3);
    const Digraph g = random_digraph(rng, v, uniform_below(rng, v * (v - 1) + 1));
    const auto betti = oracle_cubical_betti(g, 2);
    for (int n = 0; n <= 2; ++n) {
      CAPTURE(trial);
      CAPTURE(n);
      CHECK(cubical_homology(g, n).rank == betti[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("bounds") {
  std::vector<std::string> labels;
  for (int i = 0; i < 13; ++i) labels.push_back(std::to_string(i));
  const Digraph big = Digraph::build(labels, {});
  CHECK_ERROR_CODE(cubical_homology(big, 1), ErrorCode::BoundExceeded);
  CubeBounds tight;
  tight.max_cubes = 10;
  CHECK_ERROR_CODE(enumerate_cubes(cycle_digraph(4), 2, tight), ErrorCode::BoundExceeded);
}

TEST_CASE("comparison map L") {
  const IntMatrix l1 = comparison_L(cycle_digraph(4), 1);
  REQUIRE(l1.rows() == 1);
  REQUIRE(l1.cols() == 1);
  CHECK((l1(0, 0) == 1 || l1(0, 0) == -1));
  const IntMatrix l2 = comparison_L(suspension(cycle_digraph(4)), 2, {}, true);
  REQUIRE(l2.rows() == 1);
  CHECK((l2(0, 0) == 1 || l2(0, 0) == -1));
}

TEST_CASE("induced maps commute with the boundary") {
  const Digraph c4 = cycle_digraph(4);
  const Digraph s = suspension(c4);
  const Digraph c = cone(c4);
  const CubicalComplex src(s, 3), dst(c, 3);
  const std::vector<Vertex> f{0, 1, 2, 3, 4, 4};
  const ChainComplex a = src.complex(), b = dst.complex();
  for (int n = 1; n <= 3; ++n) {
    const SparseMatrix lhs = b.boundary(n) * cubical_chain_map(src, dst, f, n);
    const SparseMatrix rhs = cubical_chain_map(src, dst, f, n - 1) * a.boundary(n);
    CHECK(lhs.to_dense() == rhs.to_dense());
  }
}
