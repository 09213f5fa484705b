#include "glmy/path_homology.hpp"

#include "glmy/errors.hpp"

#include <numeric>
#include <sstream>

namespace glmy {

bool is_regular(const Path& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] == p[i + 1]) return false;
  return true;
}

bool is_allowed(const Digraph& g, const Path& p) {
  for (Vertex v : p)
    if (v >= g.vertex_count()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_arrow(p[i], p[i + 1])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// PathChain

void PathChain::add(const Path& p, const Integer& coeff) {
  if (coeff == 0 || !is_regular(p)) return;
  if (!terms_.empty() && terms_.begin()->first.size() != p.size())
    throw Error(ErrorCode::DimensionMismatch, "path chain mixes path lengths");
  auto [it, inserted] = terms_.emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

PathChain& PathChain::operator+=(const PathChain& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

PathChain& PathChain::operator-=(const PathChain& other) {
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

PathChain PathChain::scaled(const Integer& factor) const {
  PathChain out;
  if (factor == 0) return out;
  out.terms_ = terms_;
  for (auto& [p, c] : out.terms_) c *= factor;
  return out;
}

std::string PathChain::to_string(const Digraph& g) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    if (mag != 1) os << mag << "*";
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << g.label(p[i]);
    os << ")";
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Paths and boundaries

std::vector<Path> allowed_paths(const Digraph& g, int n) {
  std::vector<Path> out;
  if (n < 0) return out;
  Path p;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(p.size()) == n + 1) {
      out.push_back(p);
      return;
    }
    for (Vertex w : g.out(p.back())) {
      p.push_back(w);
      self(self);
      p.pop_back();
    }
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    p.assign(1, v);
    extend(extend);
  }
  return out;
}

PathChain regular_boundary(const PathChain& c) {
  PathChain out;
  for (const auto& [p, coeff] : c.terms()) {
    if (p.size() < 2) continue;
    for (std::size_t i = 0; i < p.size(); ++i) {
      Path face;
      face.reserve(p.size() - 1);
      for (std::size_t k = 0; k < p.size(); ++k)
        if (k != i) face.push_back(p[k]);
      out.add(face, i % 2 == 0 ? coeff : Integer(-coeff));
    }
  }
  return out;
}

PathChain pushforward(const Digraph& source, const Digraph& target, const std::vector<Vertex>& f,
                      const PathChain& c) {
  if (!check_digraph_map(source, target, f)) throw Error(ErrorCode::InvalidMapping, "assignment is not a digraph map");
  PathChain out;
  for (const auto& [p, coeff] : c.terms()) {
    Path image;
    image.reserve(p.size());
    for (Vertex v : p) {
      if (v >= f.size()) throw Error(ErrorCode::InvalidMapping, "chain leaves the source digraph");
      image.push_back(f[v]);
    }
    out.add(image, coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Omega complex

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

OmegaComplex::OmegaComplex(const Digraph& g, int top) : g_(g), top_(top) {
  if (top < 0) throw Error(ErrorCode::IndexOutOfRange, "Omega complex needs a non-negative top degree");
  const auto levels = static_cast<std::size_t>(top) + 1;
  paths_.resize(levels);
  index_.resize(levels);
  allowed_boundary_.resize(levels);
  omega_.resize(levels);
  omega_basis_.resize(levels);

  for (std::size_t n = 0; n < levels; ++n) {
    if (n == 0) {
      for (Vertex v = 0; v < g_.vertex_count(); ++v) paths_[0].push_back({v});
    } else {
      for (const Path& p : paths_[n - 1])
        for (Vertex w : g_.out(p.back())) {
          Path q = p;
          q.push_back(w);
          paths_[n].push_back(std::move(q));
        }
    }
    for (std::size_t j = 0; j < paths_[n].size(); ++j) index_[n].emplace(paths_[n][j], j);
  }

  for (std::size_t n = 0; n < levels; ++n) {
    const auto& paths = paths_[n];
    const std::size_t rows = n == 0 ? 0 : paths_[n - 1].size();
    SparseMatrix bd(rows, paths.size());
    std::map<Path, std::size_t> bad_faces;
    std::vector<std::vector<std::pair<std::size_t, int>>> constraints(paths.size());
    for (std::size_t j = 0; j < paths.size() && n > 0; ++j) {
      const Path& p = paths[j];
      SparseVector col;
      for (std::size_t i = 0; i <= n; ++i) {
        if (i > 0 && i < n && p[i - 1] == p[i + 1]) continue;  // non-regular face
        Path face;
        face.reserve(n);
        for (std::size_t k = 0; k <= n; ++k)
          if (k != i) face.push_back(p[k]);
        const int sign = i % 2 == 0 ? 1 : -1;
        auto it = index_[n - 1].find(face);
        if (it != index_[n - 1].end()) {
          col.add(it->second, sign);
        } else {
          auto [fit, fresh] = bad_faces.emplace(std::move(face), bad_faces.size());
          constraints[j].emplace_back(fit->second, sign);
        }
      }
      bd.set_column(j, std::move(col));
    }
    allowed_boundary_[n] = std::move(bd);

    // Paths sharing a non-allowed face interact; everything else splits.
    UnionFind uf(paths.size());
    std::vector<std::size_t> first_user(bad_faces.size(), paths.size());
    for (std::size_t j = 0; j < paths.size(); ++j)
      for (const auto& [f, s] : constraints[j]) {
        if (first_user[f] == paths.size()) first_user[f] = j;
        else uf.unite(first_user[f], j);
      }
    std::map<std::size_t, std::vector<std::size_t>> components;
    for (std::size_t j = 0; j < paths.size(); ++j) components[uf.find(j)].push_back(j);

    Lattice omega(paths.size());
    for (const auto& [root, members] : components) {
      bool free = true;
      for (std::size_t j : members)
        if (!constraints[j].empty()) free = false;
      if (free) {
        for (std::size_t j : members) omega.insert(SparseVector::unit(j));
        continue;
      }
      std::map<std::size_t, std::size_t> local_face;
      for (std::size_t j : members)
        for (const auto& [f, s] : constraints[j]) local_face.emplace(f, local_face.size());
      SparseMatrix local(local_face.size(), members.size());
      for (std::size_t c = 0; c < members.size(); ++c) {
        SparseVector col;
        for (const auto& [f, s] : constraints[members[c]]) col.add(local_face.at(f), s);
        local.set_column(c, std::move(col));
      }
      for (const auto& k : kernel_lattice(local).basis()) {
        SparseVector global;
        for (const auto& [c, value] : k.entries()) global.push_back(members[c], value);
        omega.insert(global);
      }
    }
    omega_basis_[n] = omega.basis();
    omega_[n] = std::move(omega);
  }

  omega_boundary_.resize(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    const std::size_t rows = n == 0 ? 0 : omega_basis_[n - 1].size();
    SparseMatrix bd(rows, omega_basis_[n].size());
    if (n > 0) {
      for (std::size_t j = 0; j < omega_basis_[n].size(); ++j) {
        auto coords = omega_[n - 1].coordinates(allowed_boundary_[n].apply(omega_basis_[n][j]));
        if (!coords) throw Error(ErrorCode::BoundaryNotSquareZero, "boundary leaves Omega in degree " + std::to_string(n - 1));
        bd.set_column(j, std::move(*coords));
      }
    }
    omega_boundary_[n] = std::move(bd);
  }
}

std::optional<std::size_t> OmegaComplex::allowed_index(int n, const Path& p) const {
  if (n < 0 || n > top_) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(n)];
  auto it = idx.find(p);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

ChainComplex OmegaComplex::complex(bool reduced) const {
  ChainComplex c(0, omega_boundary_, true);
  return reduced ? c.augmented() : c;
}

SparseVector OmegaComplex::to_allowed(int n, const PathChain& c) const {
  SparseVector v;
  for (const auto& [p, coeff] : c.terms()) {
    if (static_cast<int>(p.size()) != n + 1) throw Error(ErrorCode::DimensionMismatch, "chain has the wrong degree");
    auto j = allowed_index(n, p);
    if (!j) throw Error(ErrorCode::NotASublattice, "chain contains a path that is not allowed");
    v.add(*j, coeff);
  }
  return v;
}

PathChain OmegaComplex::from_allowed(int n, const SparseVector& v) const {
  PathChain c;
  for (const auto& [j, coeff] : v.entries()) c.add(allowed(n).at(j), coeff);
  return c;
}

SparseVector OmegaComplex::to_omega(int n, const SparseVector& v) const {
  auto coords = omega_lattice(n).coordinates(v);
  if (!coords) throw Error(ErrorCode::NotASublattice, "chain is not in Omega_" + std::to_string(n));
  return *coords;
}

SparseVector OmegaComplex::from_omega(int n, const SparseVector& w) const {
  SparseVector v;
  for (const auto& [j, coeff] : w.entries()) v.add_scaled(omega_basis(n).at(j), coeff);
  return v;
}

SparseMatrix omega_chain_map(const OmegaComplex& source, const OmegaComplex& target,
                             const std::vector<Vertex>& f, int n) {
  if (!check_digraph_map(source.digraph(), target.digraph(), f))
    throw Error(ErrorCode::InvalidMapping, "assignment is not a digraph map");
  const auto& basis = source.omega_basis(n);
  SparseMatrix m(target.omega_basis(n).size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    PathChain image = pushforward(source.digraph(), target.digraph(), f, source.from_allowed(n, basis[j]));
    m.set_column(j, target.chain_to_omega(n, image));
  }
  return m;
}

ChainComplexPair omega_pair(const OmegaComplex& ambient, const OmegaComplex& sub,
                            const std::vector<Vertex>& embedding, bool reduced) {
  if (ambient.top() != sub.top()) throw Error(ErrorCode::DimensionMismatch, "pair complexes need the same top degree");
  std::vector<SparseMatrix> inclusions;
  if (reduced) {
    SparseMatrix one(1, 1);
    one.set_column(0, SparseVector::unit(0));
    inclusions.push_back(std::move(one));
  }
  for (int n = 0; n <= ambient.top(); ++n) inclusions.push_back(omega_chain_map(sub, ambient, embedding, n));
  return ChainComplexPair(ambient.complex(reduced), sub.complex(reduced), std::move(inclusions));
}

AbelianGroupPresentation path_homology(const Digraph& g, int n, bool reduced) {
  if (n < 0) {
    if (reduced && n == -1) return homology(OmegaComplex(g, 0).complex(true), -1, false).presentation();
    return {};
  }
  OmegaComplex omega(g, n + 1);
  return homology(omega.complex(reduced), n, false).presentation();
}

AbelianGroupPresentation relative_path_homology(const Digraph& g, const Digraph& a, int n, bool reduced) {
  auto embedding = embed_subdigraph(g, a);
  if (n < 0) return {};
  OmegaComplex og(g, n + 1), oa(a, n + 1);
  ChainComplexPair pair = omega_pair(og, oa, embedding, reduced);
  return homology(pair.quotient(), n, false).presentation();
}

PathChain suspension_cycle(const Digraph& suspended, const PathChain& z, Vertex a, Vertex b, bool reduced) {
  const int n = z.degree();
  if (n < 0) return {};
  if (n == 0) {
    Integer sum = 0;
    for (const auto& [p, c] : z.terms()) sum += c;
    if (!reduced || sum != 0) throw Error(ErrorCode::NotACycle, "degree-0 chain needs coefficient sum zero");
  } else if (!regular_boundary(z).empty()) {
    throw Error(ErrorCode::NotACycle, "chain is not a cycle");
  }
  const Integer sign = n % 2 == 0 ? -1 : 1;  // (-1)^(n+1)
  PathChain out;
  for (const auto& [p, c] : z.terms()) {
    for (Vertex v : p)
      if (v == a || v == b) throw Error(ErrorCode::InvalidMapping, "cycle touches an apex");
    Path pa = p, pb = p;
    pa.push_back(a);
    pb.push_back(b);
    if (!is_allowed(suspended, pa) || !is_allowed(suspended, pb))
      throw Error(ErrorCode::NotASubdigraph, "cycle is not allowed in the suspension");
    out.add(pa, sign * c);
    out.add(pb, -sign * c);
  }
  if (!regular_boundary(out).empty()) throw Error(ErrorCode::NotACycle, "suspended chain is not a cycle");
  return out;
}

}  // namespace glmy
