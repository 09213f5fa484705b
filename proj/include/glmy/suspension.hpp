#pragma once

// Homology suspensions E'_n and E^c_n built from the long exact sequences of
// (C+X, X) and (SX, C-X), and the cubical connecting map in closed form.

#include "glmy/cubical.hpp"
#include "glmy/path_homology.hpp"

namespace glmy {

/// Reduces torsion rows of every column into [0, d).
IntMatrix normalize_columns(IntMatrix m, const std::vector<Integer>& orders);

/// Product a*b of maps between presented groups, normalized for the target of a.
IntMatrix compose(const IntMatrix& a, const IntMatrix& b, const std::vector<Integer>& target_orders);

/// Inverse of the homomorphism with matrix m between the presented groups.
/// Throws NotAnIsomorphism.
IntMatrix invert_group_isomorphism(const IntMatrix& m, const std::vector<Integer>& source_orders,
                                   const std::vector<Integer>& target_orders);

/// Both pairs of the suspension diagram for one homology theory, with the
/// chain map C+X -> SX. Degrees run up to n+2 so the composite in degree n
/// is defined.
struct SuspensionPairs {
  ChainComplexPair cone;        // (C+X, X)
  ChainComplexPair suspension;  // (SX, C-X)
  std::vector<SparseMatrix> cone_into_suspension;  // by degree offset from the minimum
  bool reduced = true;
};

SuspensionPairs path_suspension_pairs(const Digraph& x, int top, bool reduced = true);
SuspensionPairs cubical_suspension_pairs(const Digraph& x, int top, const CubeBounds& bounds = {},
                                         bool reduced = true);

/// The three maps of the composite together with the result.
struct SuspensionMaps {
  HomologyGroup base;       // H~_n(X)
  HomologyGroup suspended;  // H~_{n+1}(SX)
  IntMatrix xi;             // H_{n+1}(C+X, X) -> H~_n(X)
  IntMatrix inclusion;      // H_{n+1}(C+X, X) -> H_{n+1}(SX, C-X)
  IntMatrix quotient;       // H~_{n+1}(SX) -> H_{n+1}(SX, C-X)
  IntMatrix composite;      // q^-1 i xi^-1
};

SuspensionMaps suspension_maps(const SuspensionPairs& pairs, int n);

/// E'_n on the fixed generators of H~_n(X) and H~_{n+1}(SX).
IntMatrix path_suspension(const Digraph& x, int n);
/// E^c_n on the fixed generators of the reduced cubical groups.
IntMatrix cubical_suspension(const Digraph& x, int n, const CubeBounds& bounds = {});

/// H_{n+1}(G, A) -> H_n(A) from the boundary formula applied to the cubes of
/// each relative representative.
IntMatrix cubical_connecting_formula(const CubicalComplex& ambient, const CubicalComplex& sub,
                                     const std::vector<Vertex>& embedding, int n);

}  // namespace glmy
