#include "glmy/cubical.hpp"

#include "glmy/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace glmy {

namespace {

std::size_t corners(int n) { return std::size_t{1} << n; }

void check_dim_matches(const Cube& c) {
  if (c.dim < 0 || c.values.size() != corners(c.dim))
    throw Error(ErrorCode::DimensionMismatch, "cube values do not cover 2^dim corners");
}

std::string_view key_of(const Vertex* values, std::size_t count) {
  return {reinterpret_cast<const char*>(values), count * sizeof(Vertex)};
}

// Visits every cube f : {0,1}^n -> g in lexicographic corner order.
void for_each_cube(const Digraph& g, int n, const std::function<bool(const Vertex*, std::size_t)>& keep_vertex,
                   const std::function<bool(Vertex, Vertex)>& edge_ok, const std::function<void(const std::vector<Vertex>&)>& emit) {
  const std::size_t m = corners(n);
  std::vector<Vertex> f(m);
  std::vector<std::vector<Vertex>> candidates(m);
  auto fill = [&](std::size_t x) {
    auto& cand = candidates[x];
    cand.clear();
    if (x == 0) {
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (keep_vertex(&v, 1)) cand.push_back(v);
      return;
    }
    std::size_t low = x & (~x + 1);
    Vertex base = f[x ^ low];
    cand.push_back(base);
    for (Vertex w : g.out(base))
      if (keep_vertex(&w, 1) && edge_ok(base, w)) cand.push_back(w);
    std::sort(cand.begin(), cand.end());
    for (std::size_t bit = low << 1; bit <= x; bit <<= 1) {
      if (!(x & bit)) continue;
      Vertex y = f[x ^ bit];
      std::erase_if(cand, [&](Vertex w) { return !(w == y || (g.has_arrow(y, w) && edge_ok(y, w))); });
    }
  };
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (x == m) {
      emit(f);
      return;
    }
    fill(x);
    std::vector<Vertex> cand = candidates[x];
    for (Vertex v : cand) {
      f[x] = v;
      rec(x + 1);
    }
  };
  rec(0);
}

bool degenerate_values(const Vertex* v, int n) {
  const std::size_t m = corners(n);
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    bool constant = true;
    for (std::size_t x = 0; x < m && constant; ++x)
      if (!(x & bit) && v[x] != v[x | bit]) constant = false;
    if (constant) return true;
  }
  return false;
}

}  // namespace

bool is_cube(const Digraph& g, const Cube& c) {
  check_dim_matches(c);
  for (Vertex v : c.values)
    if (v >= g.vertex_count()) return false;
  for (std::size_t x = 0; x < c.values.size(); ++x)
    for (int i = 0; i < c.dim; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (!(x & bit) && !g.arrow_or_equal(c.values[x], c.values[x | bit])) return false;
    }
  return true;
}

Cube face(const Cube& c, int i, int k) {
  check_dim_matches(c);
  if (i < 1 || i > c.dim || (k != 0 && k != 1)) throw Error(ErrorCode::IndexOutOfRange, "face index out of range");
  Cube out;
  out.dim = c.dim - 1;
  out.values.resize(corners(out.dim));
  const std::size_t low_mask = (std::size_t{1} << (i - 1)) - 1;
  for (std::size_t y = 0; y < out.values.size(); ++y) {
    std::size_t x = (y & low_mask) | (static_cast<std::size_t>(k) << (i - 1)) | ((y & ~low_mask) << 1);
    out.values[y] = c.values[x];
  }
  return out;
}

bool is_degenerate(const Cube& c) {
  check_dim_matches(c);
  return degenerate_values(c.values.data(), c.dim);
}

// ---------------------------------------------------------------------------
// CubicalChain

void CubicalChain::add(const Cube& c, const Integer& coeff) {
  if (coeff == 0) return;
  check_dim_matches(c);
  if (!terms_.empty() && terms_.begin()->first.dim != c.dim)
    throw Error(ErrorCode::DimensionMismatch, "cubical chain mixes dimensions");
  auto [it, inserted] = terms_.emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

CubicalChain& CubicalChain::operator+=(const CubicalChain& other) {
  for (const auto& [c, k] : other.terms_) add(c, k);
  return *this;
}

CubicalChain CubicalChain::scaled(const Integer& factor) const {
  CubicalChain out;
  for (const auto& [c, k] : terms_) out.add(c, k * factor);
  return out;
}

CubicalChain CubicalChain::normalized() const {
  CubicalChain out;
  for (const auto& [c, k] : terms_)
    if (!is_degenerate(c)) out.add(c, k);
  return out;
}

std::string CubicalChain::to_string(const Digraph& g) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, k] : terms_) {
    Integer mag = k < 0 ? Integer(-k) : k;
    if (first) os << (k < 0 ? "-" : "");
    else os << (k < 0 ? " - " : " + ");
    if (mag != 1) os << mag << "*";
    os << "[";
    for (std::size_t x = 0; x < c.values.size(); ++x) os << (x ? "," : "") << g.label(c.values[x]);
    os << "]";
    first = false;
  }
  return os.str();
}

CubicalChain cubical_boundary(const CubicalChain& ch) {
  CubicalChain out;
  for (const auto& [c, k] : ch.terms()) {
    for (int i = 1; i <= c.dim; ++i) {
      const Integer sign = i % 2 == 0 ? k : Integer(-k);
      out.add(face(c, i, 0), sign);
      out.add(face(c, i, 1), -sign);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subdigraphs

SubdigraphView::SubdigraphView(const Digraph& ambient, const Digraph& sub)
    : n_(ambient.vertex_count()), vertex_(n_, false), arrow_(n_ * n_, false), embedding_(embed_subdigraph(ambient, sub)) {
  for (Vertex v : embedding_) vertex_[v] = true;
  for (const auto& [s, t] : sub.arrows()) arrow_[static_cast<std::size_t>(embedding_[s]) * n_ + embedding_[t]] = true;
}

bool SubdigraphView::contains_cube(const Cube& c) const {
  check_dim_matches(c);
  for (Vertex v : c.values)
    if (v >= n_ || !vertex_[v]) return false;
  for (std::size_t x = 0; x < c.values.size(); ++x)
    for (int i = 0; i < c.dim; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (x & bit) continue;
      Vertex a = c.values[x], b = c.values[x | bit];
      if (a != b && !contains_arrow(a, b)) return false;
    }
  return true;
}

namespace {

void check_bounds(const Digraph& g, int n, const CubeBounds& bounds) {
  if (n > bounds.max_dim)
    throw Error(ErrorCode::BoundExceeded, "cube dimension " + std::to_string(n) + " exceeds the bound " + std::to_string(bounds.max_dim));
  if (g.vertex_count() > bounds.max_vertices)
    throw Error(ErrorCode::BoundExceeded, "digraph has " + std::to_string(g.vertex_count()) +
                                              " vertices, cube enumeration is bounded at " + std::to_string(bounds.max_vertices));
}

}  // namespace

std::vector<Cube> enumerate_cubes(const Digraph& g, int n, const CubeBounds& bounds, bool include_degenerate,
                                  const SubdigraphView* within) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "negative cube dimension");
  check_bounds(g, n, bounds);
  std::vector<Cube> out;
  auto keep = [&](const Vertex* v, std::size_t) { return !within || within->contains_vertex(*v); };
  auto edge = [&](Vertex a, Vertex b) { return !within || within->contains_arrow(a, b); };
  for_each_cube(g, n, keep, edge, [&](const std::vector<Vertex>& f) {
    if (!include_degenerate && degenerate_values(f.data(), n)) return;
    if (out.size() == bounds.max_cubes)
      throw Error(ErrorCode::BoundExceeded, "more than " + std::to_string(bounds.max_cubes) + " cubes in degree " + std::to_string(n));
    out.push_back(Cube{n, f});
  });
  return out;
}

// ---------------------------------------------------------------------------
// CubicalComplex

CubicalComplex::CubicalComplex(const Digraph& g, int top, const CubeBounds& bounds, const SubdigraphView* relative)
    : g_(g), top_(top) {
  if (top < 0) throw Error(ErrorCode::IndexOutOfRange, "cubical complex needs a non-negative top degree");
  check_bounds(g_, top, bounds);
  if (relative) {
    relative_ = true;
    const std::size_t nv = g_.vertex_count();
    relative_vertex_.assign(nv, false);
    relative_arrow_.assign(nv * nv, false);
    for (Vertex v = 0; v < nv; ++v) {
      relative_vertex_[v] = relative->contains_vertex(v);
      for (Vertex w = 0; w < nv; ++w) relative_arrow_[v * nv + w] = relative->contains_arrow(v, w);
    }
  }
  const auto levels = static_cast<std::size_t>(top) + 1;
  counts_.assign(levels, 0);
  data_.resize(levels);
  index_.resize(levels);
  boundary_.resize(levels);

  auto all = [](const Vertex*, std::size_t) { return true; };
  auto any = [](Vertex, Vertex) { return true; };
  for (std::size_t n = 0; n < levels; ++n) {
    const int dim = static_cast<int>(n);
    auto& flat = data_[n];
    for_each_cube(g_, dim, all, any, [&](const std::vector<Vertex>& f) {
      if (degenerate_values(f.data(), dim)) return;
      if (relative_ && vanishes(Cube{dim, f})) return;
      if (counts_[n] == bounds.max_cubes)
        throw Error(ErrorCode::BoundExceeded, "more than " + std::to_string(bounds.max_cubes) + " cubes in degree " + std::to_string(n));
      flat.insert(flat.end(), f.begin(), f.end());
      ++counts_[n];
    });
    const std::size_t m = corners(dim);
    index_[n].reserve(counts_[n]);
    for (std::size_t i = 0; i < counts_[n]; ++i) index_[n].emplace(key_of(flat.data() + i * m, m), i);
  }

  for (std::size_t n = 0; n < levels; ++n) {
    const int dim = static_cast<int>(n);
    SparseMatrix bd(n == 0 ? 0 : counts_[n - 1], counts_[n]);
    for (std::size_t j = 0; j < counts_[n] && n > 0; ++j) {
      Cube c = cube(dim, j);
      SparseVector col;
      for (int i = 1; i <= dim; ++i)
        for (int k = 0; k <= 1; ++k) {
          Cube fc = face(c, i, k);
          if (vanishes(fc)) continue;
          auto idx = index(fc);
          if (!idx) throw Error(ErrorCode::BoundaryNotSquareZero, "face missing from the cube basis");
          int sign = (i % 2 == 0 ? 1 : -1) * (k == 0 ? 1 : -1);
          col.add(*idx, sign);
        }
      bd.set_column(j, std::move(col));
    }
    boundary_[n] = std::move(bd);
  }
}

bool CubicalComplex::vanishes(const Cube& c) const {
  if (degenerate_values(c.values.data(), c.dim)) return true;
  if (!relative_) return false;
  const std::size_t nv = g_.vertex_count();
  for (Vertex v : c.values)
    if (!relative_vertex_[v]) return false;
  for (std::size_t x = 0; x < c.values.size(); ++x)
    for (int i = 0; i < c.dim; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (x & bit) continue;
      Vertex a = c.values[x], b = c.values[x | bit];
      if (a != b && !relative_arrow_[a * nv + b]) return false;
    }
  return true;
}

Cube CubicalComplex::cube(int n, std::size_t i) const {
  const std::size_t m = corners(n);
  const auto& flat = data_.at(static_cast<std::size_t>(n));
  if (i >= counts_[static_cast<std::size_t>(n)]) throw Error(ErrorCode::IndexOutOfRange, "cube index");
  return Cube{n, std::vector<Vertex>(flat.begin() + static_cast<std::ptrdiff_t>(i * m),
                                     flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * m))};
}

std::optional<std::size_t> CubicalComplex::index(const Cube& c) const {
  if (c.dim < 0 || c.dim > top_) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(c.dim)];
  auto it = idx.find(key_of(c.values.data(), c.values.size()));
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

ChainComplex CubicalComplex::complex(bool reduced) const {
  ChainComplex c(0, boundary_, true);
  return reduced ? c.augmented() : c;
}

SparseVector CubicalComplex::to_coords(int n, const CubicalChain& ch) const {
  SparseVector v;
  for (const auto& [c, k] : ch.terms()) {
    if (c.dim != n) throw Error(ErrorCode::DimensionMismatch, "cubical chain has the wrong dimension");
    if (!is_cube(g_, c)) throw Error(ErrorCode::InvalidMapping, "cube is not a digraph map");
    if (vanishes(c)) continue;
    auto idx = index(c);
    if (!idx) throw Error(ErrorCode::BoundExceeded, "cube outside the enumerated range");
    v.add(*idx, k);
  }
  return v;
}

CubicalChain CubicalComplex::from_coords(int n, const SparseVector& v) const {
  CubicalChain ch;
  for (const auto& [i, k] : v.entries()) ch.add(cube(n, i), k);
  return ch;
}

SparseMatrix cubical_chain_map(const CubicalComplex& source, const CubicalComplex& target,
                               const std::vector<Vertex>& f, int n) {
  if (!check_digraph_map(source.digraph(), target.digraph(), f))
    throw Error(ErrorCode::InvalidMapping, "assignment is not a digraph map");
  SparseMatrix m(target.count(n), source.count(n));
  for (std::size_t j = 0; j < source.count(n); ++j) {
    Cube c = source.cube(n, j);
    for (auto& v : c.values) v = f[v];
    CubicalChain ch;
    ch.add(c, 1);
    m.set_column(j, target.to_coords(n, ch));
  }
  return m;
}

ChainComplexPair cubical_pair(const CubicalComplex& ambient, const CubicalComplex& sub,
                              const std::vector<Vertex>& embedding, bool reduced) {
  if (ambient.top() != sub.top()) throw Error(ErrorCode::DimensionMismatch, "pair complexes need the same top degree");
  std::vector<SparseMatrix> inclusions;
  if (reduced) {
    SparseMatrix one(1, 1);
    one.set_column(0, SparseVector::unit(0));
    inclusions.push_back(std::move(one));
  }
  for (int n = 0; n <= ambient.top(); ++n) inclusions.push_back(cubical_chain_map(sub, ambient, embedding, n));
  return ChainComplexPair(ambient.complex(reduced), sub.complex(reduced), std::move(inclusions));
}

AbelianGroupPresentation cubical_homology(const Digraph& g, int n, const CubeBounds& bounds, bool reduced) {
  if (n < 0) return {};
  CubicalComplex c(g, n + 1, bounds);
  return homology(c.complex(reduced), n, false).presentation();
}

AbelianGroupPresentation relative_cubical_homology(const Digraph& g, const Digraph& a, int n, const CubeBounds& bounds) {
  SubdigraphView view(g, a);
  if (n < 0) return {};
  CubicalComplex c(g, n + 1, bounds, &view);
  return homology(c.complex(false), n, false).presentation();
}

// ---------------------------------------------------------------------------
// omega_n, iota, L_n

namespace {

struct SignedPermutation {
  std::vector<int> axes;  // 0-based axis changed at each step
  int sign;
};

const std::vector<SignedPermutation>& permutations(int n) {
  static std::map<int, std::vector<SignedPermutation>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<SignedPermutation> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b)
        if (p[a] > p[b]) ++inversions;
    out.push_back({p, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace

Digraph unit_cube_digraph(int n) {
  return make_grid(std::vector<LineDigraph>(static_cast<std::size_t>(n), LineDigraph{"F"}));
}

Vertex corner_vertex(int n, std::size_t corner) {
  Vertex v = 0;
  for (int i = 0; i < n; ++i) v = v * 2 + static_cast<Vertex>((corner >> i) & 1U);
  return v;
}

PathChain omega_generator(int n) {
  Cube identity;
  identity.dim = n;
  for (std::size_t x = 0; x < corners(n); ++x) identity.values.push_back(corner_vertex(n, x));
  return iota(identity);
}

PathChain iota(const Cube& c) {
  check_dim_matches(c);
  PathChain out;
  for (const auto& perm : permutations(c.dim)) {
    Path p;
    std::size_t x = 0;
    p.push_back(c.values[x]);
    for (int axis : perm.axes) {
      x |= std::size_t{1} << axis;
      p.push_back(c.values[x]);
    }
    out.add(p, perm.sign);
  }
  return out;
}

PathChain iota(const CubicalChain& ch) {
  PathChain out;
  for (const auto& [c, k] : ch.terms()) out += iota(c).scaled(k);
  return out;
}

SparseMatrix iota_matrix(const CubicalComplex& cubes, const OmegaComplex& omega, int n) {
  SparseMatrix m(omega.omega_basis(n).size(), cubes.count(n));
  for (std::size_t j = 0; j < cubes.count(n); ++j) m.set_column(j, omega.chain_to_omega(n, iota(cubes.cube(n, j))));
  return m;
}

IntMatrix comparison_L(const Digraph& g, int n, const CubeBounds& bounds, bool reduced) {
  CubicalComplex cubes(g, n + 1, bounds);
  OmegaComplex omega(g, n + 1);
  HomologyGroup hc = homology(cubes.complex(reduced), n);
  HomologyGroup hp = homology(omega.complex(reduced), n);
  return induced_map(iota_matrix(cubes, omega, n), hc, hp);
}

}  // namespace glmy
