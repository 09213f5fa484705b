#pragma once

// Singular cubical homology of digraphs and the comparison with path homology.

#include "glmy/chain_complex.hpp"
#include "glmy/digraph.hpp"
#include "glmy/path_homology.hpp"

#include <map>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace glmy {

/// A map from the corners of {0,1}^dim. Corner x has index sum x_i 2^(i-1).
struct Cube {
  int dim = 0;
  std::vector<Vertex> values;

  friend bool operator==(const Cube&, const Cube&) = default;
  friend auto operator<=>(const Cube&, const Cube&) = default;
};

/// Arrow condition along every edge of the cube.
bool is_cube(const Digraph& g, const Cube& c);
/// Fixes coordinate i (1-based) to k. Throws IndexOutOfRange.
Cube face(const Cube& c, int i, int k);
/// Constant along some axis.
bool is_degenerate(const Cube& c);

class CubicalChain {
 public:
  void add(const Cube& c, const Integer& coeff);
  const std::map<Cube, Integer>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  CubicalChain& operator+=(const CubicalChain& other);
  CubicalChain scaled(const Integer& factor) const;
  /// Drops degenerate cubes.
  CubicalChain normalized() const;
  friend bool operator==(const CubicalChain&, const CubicalChain&) = default;
  std::string to_string(const Digraph& g) const;

 private:
  std::map<Cube, Integer> terms_;
};

/// Sum over i of (-1)^i (f F_{i,0} - f F_{i,1}); degenerate faces are kept.
CubicalChain cubical_boundary(const CubicalChain& ch);

struct CubeBounds {
  int max_dim = 3;
  std::size_t max_vertices = 12;
  /// Per degree; keeps dense digraphs from exhausting memory.
  std::size_t max_cubes = 1000000;
};

/// Vertex and arrow membership of a subdigraph, in ambient indices.
class SubdigraphView {
 public:
  SubdigraphView(const Digraph& ambient, const Digraph& sub);
  bool contains_vertex(Vertex v) const { return vertex_[v]; }
  bool contains_arrow(Vertex v, Vertex w) const { return arrow_[static_cast<std::size_t>(v) * n_ + w]; }
  /// Image of the cube lies in the subdigraph.
  bool contains_cube(const Cube& c) const;
  const std::vector<Vertex>& embedding() const { return embedding_; }

 private:
  std::size_t n_;
  std::vector<bool> vertex_;
  std::vector<bool> arrow_;
  std::vector<Vertex> embedding_;
};

/// Lexicographic in corner order. Throws BoundExceeded beyond the bounds.
std::vector<Cube> enumerate_cubes(const Digraph& g, int n, const CubeBounds& bounds = {},
                                  bool include_degenerate = true, const SubdigraphView* within = nullptr);

/// Nondegenerate cubes in degrees 0..top, optionally relative to a subdigraph.
class CubicalComplex {
 public:
  CubicalComplex(const Digraph& g, int top, const CubeBounds& bounds = {},
                 const SubdigraphView* relative = nullptr);

  const Digraph& digraph() const { return g_; }
  int top() const { return top_; }
  std::size_t count(int n) const { return counts_.at(static_cast<std::size_t>(n)); }
  Cube cube(int n, std::size_t i) const;
  std::optional<std::size_t> index(const Cube& c) const;

  ChainComplex complex(bool reduced = false) const;

  /// Coordinates in the nondegenerate basis; degenerate cubes (and cubes in
  /// the relative subdigraph) vanish. Throws InvalidMapping for cubes that
  /// are not maps into the digraph.
  SparseVector to_coords(int n, const CubicalChain& ch) const;
  CubicalChain from_coords(int n, const SparseVector& v) const;

 private:
  bool vanishes(const Cube& c) const;

  Digraph g_;
  int top_;
  std::vector<std::size_t> counts_;
  std::vector<std::vector<Vertex>> data_;  // flat per degree
  std::vector<std::unordered_map<std::string_view, std::size_t>> index_;
  std::vector<SparseMatrix> boundary_;
  std::vector<bool> relative_vertex_;
  std::vector<bool> relative_arrow_;
  bool relative_ = false;
};

/// Degree-n chain map induced by a digraph map.
SparseMatrix cubical_chain_map(const CubicalComplex& source, const CubicalComplex& target,
                               const std::vector<Vertex>& f, int n);

/// Coordinate inclusion of the complex of a subdigraph.
ChainComplexPair cubical_pair(const CubicalComplex& ambient, const CubicalComplex& sub,
                              const std::vector<Vertex>& embedding, bool reduced = false);

AbelianGroupPresentation cubical_homology(const Digraph& g, int n, const CubeBounds& bounds = {},
                                          bool reduced = false);
AbelianGroupPresentation relative_cubical_homology(const Digraph& g, const Digraph& a, int n,
                                                   const CubeBounds& bounds = {});

/// J_1 box power with labels "(x1,...,xn)".
Digraph unit_cube_digraph(int n);
/// Grid vertex of corner x in unit_cube_digraph(n).
Vertex corner_vertex(int n, std::size_t corner);
/// Signed sum of the n! monotone corner-to-corner paths on unit_cube_digraph(n).
PathChain omega_generator(int n);

/// Image of the generator path sum under the cube.
PathChain iota(const Cube& c);
PathChain iota(const CubicalChain& ch);
/// iota in degree n, from cube coordinates to Omega coordinates.
SparseMatrix iota_matrix(const CubicalComplex& cubes, const OmegaComplex& omega, int n);

/// Matrix of L_n : H^c_n(G) -> H_n(G) on the fixed homology generators.
IntMatrix comparison_L(const Digraph& g, int n, const CubeBounds& bounds = {}, bool reduced = false);

}  // namespace glmy
