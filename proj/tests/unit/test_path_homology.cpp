#include "glmy/path_homology.hpp"
#include "helpers.hpp"

#include <map>
#include <random>

using namespace glmy;

namespace {

// Betti numbers of the Omega complex over F_p, computed from scratch: regular
// allowed paths by brute force, Omega_n as the null space of the non-allowed
// part of the boundary, then ranks of the boundary on Omega.
std::vector<std::size_t> oracle_betti(const Digraph& g, int top) {
  const std::size_t nv = g.vertex_count();
  auto regular_paths = [&](int n, bool allowed_only) {
    std::vector<Path> out;
    Path p(static_cast<std::size_t>(n + 1));
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == p.size()) {
        out.push_back(p);
        return;
      }
      for (Vertex v = 0; v < nv; ++v) {
        if (i > 0 && (v == p[i - 1] || (allowed_only && !g.has_arrow(p[i - 1], v)))) continue;
        p[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    return out;
  };

  std::vector<std::vector<Path>> allowed;
  std::vector<std::vector<oracle::Row>> omega;  // basis in allowed coordinates
  std::vector<std::map<Path, std::size_t>> allowed_index;
  for (int n = 0; n <= top + 1; ++n) {
    allowed.push_back(regular_paths(n, true));
    std::map<Path, std::size_t> idx;
    for (std::size_t i = 0; i < allowed.back().size(); ++i) idx[allowed.back()[i]] = i;
    allowed_index.push_back(idx);
  }
  // boundary[n]: A_n -> all regular (n-1)-paths, split into allowed/non-allowed rows.
  std::vector<oracle::Matrix> to_allowed(static_cast<std::size_t>(top + 2));
  for (int n = 0; n <= top + 1; ++n) {
    const auto& an = allowed[static_cast<std::size_t>(n)];
    std::map<Path, std::size_t> non_allowed;
    oracle::Matrix in_allowed;
    oracle::Matrix outside;
    if (n > 0) in_allowed.assign(allowed[static_cast<std::size_t>(n - 1)].size(), oracle::Row(an.size(), 0));
    for (std::size_t j = 0; j < an.size() && n > 0; ++j) {
      for (std::size_t del = 0; del < an[j].size(); ++del) {
        Path face = an[j];
        face.erase(face.begin() + static_cast<long>(del));
        bool regular = true;
        for (std::size_t k = 1; k < face.size(); ++k) regular = regular && face[k] != face[k - 1];
        if (!regular) continue;
        const std::int64_t sign = del % 2 ? -1 : 1;
        auto it = allowed_index[static_cast<std::size_t>(n - 1)].find(face);
        if (it != allowed_index[static_cast<std::size_t>(n - 1)].end()) {
          in_allowed[it->second][j] += sign;
        } else {
          auto [pos, fresh] = non_allowed.emplace(face, outside.size());
          if (fresh) outside.emplace_back(an.size(), 0);
          outside[pos->second][j] += sign;
        }
      }
    }
    omega.push_back(oracle::nullspace(outside, an.size()));
    to_allowed[static_cast<std::size_t>(n)] = in_allowed;
  }
  auto boundary_rank = [&](int n) -> std::size_t {
    if (n == 0) return 0;
    const auto& basis = omega[static_cast<std::size_t>(n)];
    if (basis.empty()) return 0;
    const auto& d = to_allowed[static_cast<std::size_t>(n)];
    return oracle::rank(oracle::multiply(d, basis, allowed[static_cast<std::size_t>(n)].size()), basis.size());
  };
  std::vector<std::size_t> betti;
  for (int n = 0; n <= top; ++n)
    betti.push_back(omega[static_cast<std::size_t>(n)].size() - boundary_rank(n) - boundary_rank(n + 1));
  return betti;
}

}  // namespace

TEST_CASE("regular and allowed paths") {
  const Digraph c4 = cycle_digraph(4);
  CHECK(is_regular({0, 1, 0}));
  CHECK_FALSE(is_regular({0, 0, 1}));
  CHECK(is_allowed(c4, {0, 1, 2}));
  CHECK_FALSE(is_allowed(c4, {0, 2}));
  CHECK(allowed_paths(c4, 1).size() == 4);
  CHECK(allowed_paths(c4, 3).size() == 4);
  PathChain c;
  c.add({0, 0}, 5);
  CHECK(c.empty());
}

TEST_CASE("boundary of the boundary vanishes") {
  PathChain c;
  c.add({0, 1, 2, 3}, 1);
  c.add({3, 1, 0, 2}, -4);
  CHECK(regular_boundary(regular_boundary(c)).empty());
  PathChain e;
  e.add({0, 1}, 1);
  PathChain expected;
  expected.add({1}, 1);
  expected.add({0}, -1);
  CHECK(regular_boundary(e) == expected);
}

TEST_CASE("small digraphs") {
  const Digraph c4 = cycle_digraph(4);
  CHECK(path_homology(c4, 0).to_string() == "Z");
  CHECK(path_homology(c4, 1).to_string() == "Z");
  CHECK(path_homology(c4, 2).is_trivial());

  const Digraph triangle = cycle_digraph(3);
  const OmegaComplex om(triangle, 3);
  CHECK(om.omega_basis(2).empty());
  CHECK(path_homology(triangle, 1).to_string() == "Z");

  const Digraph sq = square_digraph();
  const OmegaComplex os(sq, 3);
  CHECK(os.omega_basis(2).size() == 1);
  CHECK(path_homology(sq, 1).is_trivial());

  const Digraph point = Digraph::build({"x"}, {});
  CHECK(path_homology(point, 0).to_string() == "Z");
  CHECK(path_homology(point, 0, true).is_trivial());
  const Digraph two = Digraph::build({"x", "y"}, {});
  CHECK(path_homology(two, 0, true).to_string() == "Z");
}

TEST_CASE("suspension and cone") {
  const Digraph c4 = cycle_digraph(4);
  CHECK(path_homology(suspension(c4), 2, true).to_string() == "Z");
  CHECK(path_homology(suspension(c4), 1, true).is_trivial());
  CHECK(path_homology(cone(c4), 1).is_trivial());
  CHECK(relative_path_homology(cone(c4), c4, 2).to_string() == "Z");
  CHECK_ERROR_CODE(relative_path_homology(c4, Digraph::build({"1", "0"}, {{"1", "0"}}), 1), ErrorCode::NotASubdigraph);
}

TEST_CASE("box products follow the Kunneth formula") {
  const Digraph c4 = cycle_digraph(4);
  const Digraph t = box_product(c4, c4);
  CHECK(path_homology(t, 1).to_string() == "Z^2");
  CHECK(path_homology(t, 2).to_string() == "Z");
}

TEST_CASE("Betti numbers agree with the F_p oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t v = 2 + uniform_below(rng, 4);
    const std::size_t a = uniform_below(rng, v * (v - 1) + 1);
    const Digraph g = random_digraph(rng, v, a);
    const auto betti = oracle_betti(g, 2);
    for (int n = 0; n <= 2; ++n) {
      CAPTURE(trial);
      CAPTURE(n);
      const auto h = path_homology(g, n);
      CHECK(h.rank + h.torsion.size() >= betti[static_cast<std::size_t>(n)]);
      CHECK(h.rank == betti[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("Omega coordinates round trip") {
  const Digraph sq = square_digraph();
  const OmegaComplex om(sq, 2);
  PathChain c;
  c.add({0, 1, 3}, 1);
  c.add({0, 2, 3}, -1);
  const SparseVector w = om.chain_to_omega(2, c);
  CHECK(om.omega_to_chain(2, w) == c);
  PathChain half;
  half.add({0, 1, 3}, 1);
  CHECK_ERROR_CODE(om.chain_to_omega(2, half), ErrorCode::NotASublattice);
}

TEST_CASE("pushforward is a chain map") {
  const Digraph c4 = cycle_digraph(4);
  const Digraph s = suspension(c4);
  const std::vector<Vertex> f{0, 1, 2, 3, 4, 4};  // collapse both apexes
  const Digraph c = cone(c4);
  const OmegaComplex os(s, 3);
  for (int n = 1; n <= 2; ++n) {
    for (const auto& b : os.omega_basis(n)) {
      const PathChain x = os.from_allowed(n, b);
      CHECK(regular_boundary(pushforward(s, c, f, x)) == pushforward(s, c, f, regular_boundary(x)));
    }
  }
  CHECK_ERROR_CODE(pushforward(c4, c4, {0, 2, 1, 3}, PathChain{}), ErrorCode::InvalidMapping);
}

TEST_CASE("suspension cycle") {
  const Digraph c4 = cycle_digraph(4);
  const Digraph s = suspension(c4);
  PathChain z;
  for (Vertex i = 0; i < 4; ++i) z.add({i, static_cast<Vertex>((i + 1) % 4)}, 1);
  const PathChain sz = suspension_cycle(s, z, 4, 5);
  CHECK(sz.degree() == 2);
  CHECK(regular_boundary(sz).empty());
  PathChain open;
  open.add({0, 1}, 1);
  CHECK_ERROR_CODE(suspension_cycle(s, open, 4, 5), ErrorCode::NotACycle);
}
