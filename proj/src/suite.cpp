#include "glmy/suite.hpp"

#include "glmy/errors.hpp"
#include "glmy/json_io.hpp"
#include "glmy/suspension.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace glmy {

namespace {

// Pinned limits.
constexpr double kLimitC4Seconds = 1.0;
constexpr double kLimitTowerSeconds = 30.0;
constexpr double kLimitKunnethSeconds = 60.0;

constexpr int kChainMapDigraphs = 20;
constexpr int kSuspensionDigraphs = 5;
constexpr int kExactnessDigraphs = 10;
constexpr int kHomotopyCases = 200;
constexpr int kSubdivisionCases = 200;
constexpr int kSquareZeroDigraphs = 50;

Digraph c4() { return Digraph::build({"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "0"}}); }

AbelianGroupPresentation free_group(std::size_t rank) { return {rank, {}}; }

struct Outcome {
  bool pass;
  std::string detail;
};

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

Outcome c4_first_homology() {
  auto t0 = std::chrono::steady_clock::now();
  auto h = path_homology(c4(), 1);
  double t = elapsed(t0);
  bool ok = h == free_group(1) && t < kLimitC4Seconds;
  return {ok, "H_1(C4) = " + h.to_string() + " in " + fmt_seconds(t)};
}

Outcome suspension_tower() {
  auto t0 = std::chrono::steady_clock::now();
  const Digraph s1 = suspension(c4());
  const Digraph s2 = suspension(s1, "+c", "+d");
  auto h2 = path_homology(s1, 2);
  auto h3 = path_homology(s2, 3);
  double t = elapsed(t0);
  bool ok = h2 == free_group(1) && h3 == free_group(1) && t < kLimitTowerSeconds;
  return {ok, "H_2(SC4) = " + h2.to_string() + ", H_3(S^2 C4) = " + h3.to_string() + " in " + fmt_seconds(t)};
}

Outcome kunneth_ranks() {
  auto t0 = std::chrono::steady_clock::now();
  const Digraph b2 = box_product(c4(), c4());
  const Digraph b3 = box_product(b2, c4());
  auto h2 = path_homology(b2, 1);
  auto h3 = path_homology(b3, 1);
  double t = elapsed(t0);
  bool ok = h2 == free_group(2) && h3 == free_group(3) && t < kLimitKunnethSeconds;
  return {ok, "H_1(C4^2) = " + h2.to_string() + ", H_1(C4^3) = " + h3.to_string() + " in " + fmt_seconds(t)};
}

Outcome omega_generators() {
  std::string detail;
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    OmegaComplex omega(unit_cube_digraph(n), n);
    const auto& basis = omega.omega_basis(n);
    SparseVector w = omega.to_allowed(n, omega_generator(n));
    bool match = basis.size() == 1 && (basis[0] == w || basis[0] == w.negated());
    ok = ok && match;
    detail += "n=" + std::to_string(n) + ": rank " + std::to_string(basis.size()) + (match ? " (+-omega) " : " (mismatch) ");
  }
  return {ok, detail};
}

Outcome iota_chain_map(std::mt19937_64& rng) {
  std::size_t cubes = 0, failures = 0;
  for (int t = 0; t < kChainMapDigraphs; ++t) {
    const std::size_t nv = 1 + uniform_below(rng, 5);
    const Digraph g = random_digraph(rng, nv, uniform_below(rng, 9));
    for (int n = 1; n <= 3; ++n) {
      for (const Cube& c : enumerate_cubes(g, n)) {
        CubicalChain single;
        single.add(c, 1);
        ++cubes;
        if (!(iota(cubical_boundary(single)) == regular_boundary(iota(c)))) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(cubes) + " cubes, " + std::to_string(failures) + " failures"};
}

Outcome hurewicz_pipeline() {
  const Digraph g = c4();
  GridMap gamma({LineDigraph::standard(8)}, {0, 1, 1, 2, 2, 3, 3, 0, 0}, g, GridMode::Pair, 0);
  HurewiczEvaluator ev(gamma, false);
  auto cls = ev.path_class(gamma);
  auto via_h = ev.path_class_of_chain(loop_h_prime(gamma));
  auto twice = ev.path_class(concat_mu(1, gamma, gamma));
  auto inverse = ev.path_class(inverse_j(1, gamma));
  const bool gen = ev.path_group().presentation() == free_group(1) && cls.size() == 1 && (cls[0] == 1 || cls[0] == -1);
  const bool ok = gen && via_h == cls && twice.size() == 1 && twice[0] == 2 * cls[0] && inverse.size() == 1 &&
                  inverse[0] == -cls[0];
  std::string detail = "class " + (cls.empty() ? std::string("-") : to_string(cls[0]));
  if (!twice.empty()) detail += ", mu " + to_string(twice[0]);
  if (!inverse.empty()) detail += ", inverse " + to_string(inverse[0]);
  detail += via_h == cls ? ", h' agrees" : ", h' differs";
  return {ok, detail};
}

bool nontrivial_low_homology(const Digraph& x) {
  return !path_homology(x, 0, true).is_trivial() || !path_homology(x, 1).is_trivial();
}

Outcome suspension_compatibility(std::mt19937_64& rng) {
  int failures = 0, checks = 0;
  for (int t = 0; t < kSuspensionDigraphs; ++t) {
    Digraph x;
    do {
      const std::size_t nv = 2 + uniform_below(rng, 4);
      x = random_digraph(rng, nv, uniform_below(rng, 2 * nv));
    } while (!nontrivial_low_homology(x));
    const Digraph sx = suspension(x);
    for (int n = 0; n <= 1; ++n) {
      ++checks;
      IntMatrix lhs = comparison_L(sx, n + 1, {}, true) * cubical_suspension(x, n);
      IntMatrix rhs = path_suspension(x, n) * comparison_L(x, n, {}, true);
      if (!(lhs == rhs)) ++failures;
    }
  }
  return {failures == 0, std::to_string(checks) + " squares, " + std::to_string(failures) + " failures"};
}

Outcome les_exactness(std::mt19937_64& rng) {
  CubeBounds bounds;
  bounds.max_dim = 4;
  int failures = 0;
  std::size_t nodes = 0;
  for (int t = 0; t < kExactnessDigraphs; ++t) {
    const std::size_t nv = 2 + uniform_below(rng, 3);
    const Digraph x = random_digraph(rng, nv, 1 + uniform_below(rng, nv), true);
    auto path = path_suspension_pairs(x, 4, false);
    auto cub = cubical_suspension_pairs(x, 4, bounds, false);
    for (const ChainComplexPair* p : {&path.cone, &path.suspension, &cub.cone, &cub.suspension}) {
      auto report = verify_exactness(pair_long_exact_sequence(*p, 3));
      nodes += report.checked;
      if (!report.exact) ++failures;
    }
  }
  return {failures == 0, std::to_string(nodes) + " nodes in " + std::to_string(4 * kExactnessDigraphs) +
                             " sequences, " + std::to_string(failures) + " failing sequences"};
}

Outcome suspension_representative() {
  const Digraph x = c4();
  const Digraph sx = suspension(x);
  OmegaComplex ox(x, 2), osx(sx, 3);
  const HomologyGroup h1 = homology(ox.complex(), 1);
  const HomologyGroup h2 = homology(osx.complex(), 2);
  const PathChain z = ox.omega_to_chain(1, h1.representative(0));
  const PathChain zz = suspension_cycle(sx, z, sx.index_of("+a"), sx.index_of("+b"));
  const bool cycle = regular_boundary(zz).empty();
  const auto cls = h2.coordinates(osx.chain_to_omega(2, zz));
  const IntMatrix e = path_suspension(x, 1);
  const bool ok = cycle && e.rows() == 1 && e.cols() == 1 && cls.size() == 1 && cls[0] == e(0, 0);
  return {ok, std::string(cycle ? "cycle" : "not a cycle") + ", class " + (cls.empty() ? "-" : to_string(cls[0])) +
                  ", E'_1 = " + e.to_string()};
}

// Directed n-cycle with a few extra arrows, so loops often wind.
Digraph cycle_target(std::mt19937_64& rng) {
  const std::size_t n = 3 + uniform_below(rng, 3);
  std::vector<Arrow> arrows;
  for (Vertex v = 0; v < n; ++v) arrows.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  for (std::size_t extra = uniform_below(rng, 2); extra > 0; --extra) {
    Vertex a = static_cast<Vertex>(uniform_below(rng, n)), b = static_cast<Vertex>(uniform_below(rng, n));
    if (a != b && std::find(arrows.begin(), arrows.end(), Arrow{a, b}) == arrows.end()) arrows.emplace_back(a, b);
  }
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  return Digraph::from_indices(std::move(labels), std::move(arrows));
}

Digraph homotopy_target(std::mt19937_64& rng) {
  if (uniform_below(rng, 2) == 0) return cycle_target(rng);
  const std::size_t nv = 3 + uniform_below(rng, 3);
  return random_digraph(rng, nv, nv + uniform_below(rng, nv));
}

GridMap random_pair_map(std::mt19937_64& rng, const Digraph& g) {
  const Vertex base = static_cast<Vertex>(uniform_below(rng, g.vertex_count()));
  if (uniform_below(rng, 4) == 0) {
    std::vector<std::size_t> shape{2 + 2 * uniform_below(rng, 2), 2 + 2 * uniform_below(rng, 2)};
    return random_grid_map(rng, g, shape, GridMode::Pair, base);
  }
  GridMap loop = random_grid_map(rng, g, {4 + 2 * uniform_below(rng, 5)}, GridMode::Pair, base);
  // Prefix a winding loop when the target contains the cycle 0 -> 1 -> ... -> 0.
  const std::size_t n = g.vertex_count();
  bool cyclic = true;
  for (Vertex v = 0; v < n; ++v) cyclic = cyclic && g.has_arrow(v, static_cast<Vertex>((v + 1) % n));
  if (!cyclic || uniform_below(rng, 2) == 0) return loop;
  std::vector<Vertex> values;
  for (std::size_t i = 0; i <= 2 * n; ++i) values.push_back(static_cast<Vertex>(((i + 1) / 2 + base) % n));
  GridMap winding({LineDigraph::standard(2 * n)}, std::move(values), g, GridMode::Pair, base);
  return uniform_below(rng, 2) == 0 ? concat_mu(1, winding, loop) : concat_mu(1, inverse_j(1, winding), loop);
}

Outcome homotopy_invariance(std::mt19937_64& rng) {
  int failures = 0, rejected = 0, nontrivial = 0;
  for (int t = 0; t < kHomotopyCases; ++t) {
    const Digraph g = homotopy_target(rng);
    const GridMap f = random_pair_map(rng, g);
    auto cert = random_certificate(rng, f, 1 + uniform_below(rng, 3));
    if (!verify_homotopy_certificate(f, cert.end, cert.steps).ok) {
      ++rejected;
      continue;
    }
    HurewiczEvaluator ev(f, false);
    auto a = ev.path_class(f);
    auto b = ev.path_class(cert.end);
    if (a != b) ++failures;
    for (const auto& x : a)
      if (x != 0) {
        ++nontrivial;
        break;
      }
  }
  int sub_failures = 0;
  for (int t = 0; t < kSubdivisionCases; ++t) {
    const Digraph g = homotopy_target(rng);
    const GridMap f = random_pair_map(rng, g);
    const GridMap fs = subdivide(f, random_shrink(rng, f.shape(), 3));
    HurewiczEvaluator ev(f, false);
    if (ev.path_class(f) != ev.path_class(fs)) ++sub_failures;
  }
  const bool ok = failures == 0 && rejected == 0 && sub_failures == 0;
  return {ok, std::to_string(kHomotopyCases) + " certified pairs (" + std::to_string(nontrivial) + " nontrivial, " +
                  std::to_string(rejected) + " rejected, " + std::to_string(failures) + " failures); " +
                  std::to_string(kSubdivisionCases) + " subdivisions, " + std::to_string(sub_failures) + " failures"};
}

Outcome square_zero(std::mt19937_64& rng) {
  int failures = 0;
  for (int t = 0; t < kSquareZeroDigraphs; ++t) {
    const std::size_t nv = 1 + uniform_below(rng, 5);
    const Digraph g = random_digraph(rng, nv, uniform_below(rng, 9));
    try {
      OmegaComplex(g, 3).complex().check_square_zero();
      CubicalComplex(g, 3).complex().check_square_zero();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundaryNotSquareZero) throw;
      ++failures;
      continue;
    }
    // Directly on elementary paths and on all cubes, degenerate ones included.
    for (int n = 2; n <= 3; ++n) {
      for (const Path& p : allowed_paths(g, n)) {
        PathChain c;
        c.add(p, 1);
        if (!regular_boundary(regular_boundary(c)).empty()) ++failures;
      }
      for (const Cube& q : enumerate_cubes(g, n)) {
        CubicalChain c;
        c.add(q, 1);
        if (!cubical_boundary(cubical_boundary(c)).empty()) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(kSquareZeroDigraphs) + " digraphs, " + std::to_string(failures) + " failures"};
}

Outcome torsion_pipeline() {
  struct Case {
    const char* json;
    AbelianGroupPresentation expected;
  };
  const Case cases[] = {
      {R"({"dims": [1, 2, 1], "differentials": [[[0, 0]], [[2], [0]]]})", {1, {2}}},
      {R"({"dims": [1, 1, 1], "differentials": [[[0]], [[3]]]})", {0, {3}}},
      {R"({"dims": [1, 3, 2], "differentials": [[[0, 0, 0]], [[2, 0], [0, 6], [0, 0]]]})", {1, {2, 6}}},
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    auto complex = chain_complex_from_json(parse_json(c.json));
    auto h = homology(complex, 1, false).presentation();
    ok = ok && h == c.expected;
    detail += (detail.empty() ? "" : ", ") + h.to_string();
  }
  return {ok, "H_1 = " + detail};
}

const char* const kTitles[kCriterionCount] = {
    "H_1(C4) = Z",
    "suspension tower H_2(SC4) = H_3(S^2 C4) = Z",
    "Kunneth ranks of C4 box powers",
    "omega_n spans Omega_n of the unit cube, n <= 3",
    "iota is a chain map on random cubes",
    "Hurewicz pipeline on the winding loop",
    "L commutes with the suspensions, n <= 1",
    "long exact sequences of cone and suspension pairs",
    "explicit suspension representative",
    "homotopy and subdivision invariance",
    "boundary squares to zero in both theories",
    "torsion coefficients of synthetic complexes",
};

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  if (id < 1 || id > kCriterionCount) throw Error(ErrorCode::IndexOutOfRange, "no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.title = kTitles[id - 1];
  std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(id));
  auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o;
    switch (id) {
      case 1: o = c4_first_homology(); break;
      case 2: o = suspension_tower(); break;
      case 3: o = kunneth_ranks(); break;
      case 4: o = omega_generators(); break;
      case 5: o = iota_chain_map(rng); break;
      case 6: o = hurewicz_pipeline(); break;
      case 7: o = suspension_compatibility(rng); break;
      case 8: o = les_exactness(rng); break;
      case 9: o = suspension_representative(); break;
      case 10: o = homotopy_invariance(rng); break;
      case 11: o = square_zero(rng); break;
      default: o = torsion_pipeline(); break;
    }
    r.pass = o.pass;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = elapsed(t0);
  return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace glmy
