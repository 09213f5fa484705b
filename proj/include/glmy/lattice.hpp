#pragma once

// Integer lattices held in echelon form (one basis vector per leading index).

#include "glmy/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace glmy {

class Lattice {
 public:
  /// With `track` set, every basis vector remembers which combination of
  /// inserted vectors produced it, and vectors that reduce to zero are kept
  /// as relations among the inserted vectors.
  explicit Lattice(std::size_t ambient = 0, bool track = false);

  /// Adds v to the span. Returns true when the rank grew.
  bool insert(const SparseVector& v);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }
  bool tracking() const { return track_; }

  /// Basis ordered by ascending lead index.
  std::vector<SparseVector> basis() const;
  /// Basis as the columns of an ambient x rank matrix.
  IntMatrix basis_matrix() const;

  /// Coordinates of v in basis() order, or nothing when v is outside.
  std::optional<SparseVector> coordinates(const SparseVector& v) const;
  /// Inserted-vector combination producing v (tracking only).
  std::optional<SparseVector> express(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const Lattice& other) const;

  /// Integer relations among the inserted vectors (tracking only). They form
  /// a saturated basis of all such relations.
  const std::vector<SparseVector>& relations() const { return relations_; }

  bool is_saturated() const;

 private:
  struct Row {
    SparseVector v;
    SparseVector origin;
  };

  std::size_t position(std::size_t lead) const;

  std::size_t ambient_;
  bool track_;
  std::size_t inserted_ = 0;
  std::map<std::size_t, Row> rows_;
  std::vector<SparseVector> relations_;
  mutable std::vector<std::size_t> lead_cache_;
  mutable bool cache_valid_ = false;
};

/// Saturated kernel {x : Mx = 0}.
Lattice kernel_lattice(const SparseMatrix& m);
Lattice kernel_lattice(const IntMatrix& m);
/// Span of the columns (not saturated).
Lattice image_lattice(const SparseMatrix& m);

/// r copies of Z plus the listed cyclic factors.
struct AbelianGroupPresentation {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // each >= 2, d1 | d2 | ...

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroupPresentation&, const AbelianGroupPresentation&) = default;
};

/// Presentation of K/I. Throws NotASublattice unless I lies in K.
AbelianGroupPresentation quotient_group(const Lattice& k, const Lattice& i);

/// Presentation of the cokernel-style group ker / image built from invariant
/// factors of the relation matrix (rows = generators).
AbelianGroupPresentation presentation_from_factors(std::size_t generators,
                                                   const std::vector<Integer>& factors);

}  // namespace glmy
