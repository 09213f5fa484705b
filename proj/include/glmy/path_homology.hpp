#pragma once

// GLMY path homology: allowed paths, the regular boundary and the Omega complex.

#include "glmy/chain_complex.hpp"
#include "glmy/digraph.hpp"

#include <map>
#include <string>
#include <vector>

namespace glmy {

using Path = std::vector<Vertex>;

bool is_regular(const Path& p);
bool is_allowed(const Digraph& g, const Path& p);

/// Formal sum of regular elementary paths. Non-regular paths vanish on entry.
class PathChain {
 public:
  PathChain() = default;

  void add(const Path& p, const Integer& coeff);
  const std::map<Path, Integer>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Common path length minus one, or -1 for the zero chain.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size()) - 1; }

  PathChain& operator+=(const PathChain& other);
  PathChain& operator-=(const PathChain& other);
  PathChain scaled(const Integer& factor) const;
  friend bool operator==(const PathChain&, const PathChain&) = default;

  /// "1*(0,1) - 2*(1,2)" style, using vertex labels.
  std::string to_string(const Digraph& g) const;

 private:
  std::map<Path, Integer> terms_;
};

/// Lexicographic in vertex order.
std::vector<Path> allowed_paths(const Digraph& g, int n);

PathChain regular_boundary(const PathChain& c);

/// Vertexwise image; throws InvalidMapping unless f is a digraph map.
PathChain pushforward(const Digraph& source, const Digraph& target, const std::vector<Vertex>& f,
                      const PathChain& c);

class OmegaComplex {
 public:
  /// Allowed paths and Omega lattices in degrees 0..top.
  OmegaComplex(const Digraph& g, int top);

  const Digraph& digraph() const { return g_; }
  int top() const { return top_; }

  const std::vector<Path>& allowed(int n) const { return paths_.at(static_cast<std::size_t>(n)); }
  std::optional<std::size_t> allowed_index(int n, const Path& p) const;
  /// Omega_n basis in allowed-path coordinates.
  const std::vector<SparseVector>& omega_basis(int n) const { return omega_basis_.at(static_cast<std::size_t>(n)); }
  const Lattice& omega_lattice(int n) const { return omega_.at(static_cast<std::size_t>(n)); }
  /// Regular boundary A_n -> A_{n-1}, non-allowed faces dropped.
  const SparseMatrix& allowed_boundary(int n) const { return allowed_boundary_.at(static_cast<std::size_t>(n)); }

  /// The Omega complex in Omega coordinates; homology available below top.
  ChainComplex complex(bool reduced = false) const;

  /// Throws NotASublattice when some path is not allowed.
  SparseVector to_allowed(int n, const PathChain& c) const;
  PathChain from_allowed(int n, const SparseVector& v) const;
  /// Throws NotASublattice when v is not in Omega_n.
  SparseVector to_omega(int n, const SparseVector& v) const;
  SparseVector from_omega(int n, const SparseVector& w) const;

  SparseVector chain_to_omega(int n, const PathChain& c) const { return to_omega(n, to_allowed(n, c)); }
  PathChain omega_to_chain(int n, const SparseVector& w) const { return from_allowed(n, from_omega(n, w)); }

 private:
  Digraph g_;
  int top_;
  std::vector<std::vector<Path>> paths_;
  std::vector<std::map<Path, std::size_t>> index_;
  std::vector<SparseMatrix> allowed_boundary_;
  std::vector<Lattice> omega_;
  std::vector<std::vector<SparseVector>> omega_basis_;
  std::vector<SparseMatrix> omega_boundary_;
};

/// Inclusion of Omega complexes along a vertex embedding of a subdigraph.
ChainComplexPair omega_pair(const OmegaComplex& ambient, const OmegaComplex& sub,
                            const std::vector<Vertex>& embedding, bool reduced = false);

/// Chain map Omega(source) -> Omega(target) in degree n, in Omega coordinates.
SparseMatrix omega_chain_map(const OmegaComplex& source, const OmegaComplex& target,
                             const std::vector<Vertex>& f, int n);

AbelianGroupPresentation path_homology(const Digraph& g, int n, bool reduced = false);
/// Throws NotASubdigraph.
AbelianGroupPresentation relative_path_homology(const Digraph& g, const Digraph& a, int n, bool reduced = false);

/// (-1)^(n+1) (z.a - z.b) for a cycle z of X sitting inside the suspension.
/// With `reduced`, a degree-0 chain only needs coefficient sum zero.
/// Throws NotACycle.
PathChain suspension_cycle(const Digraph& suspended, const PathChain& z, Vertex a, Vertex b, bool reduced = true);

}  // namespace glmy
