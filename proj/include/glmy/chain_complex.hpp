#pragma once

// Free chain complexes over Z, their homology with explicit coordinates, and
// long exact sequences of pairs.

#include "glmy/lattice.hpp"

#include <string>
#include <vector>

namespace glmy {

class ChainComplex {
 public:
  ChainComplex() = default;
  /// boundaries[k] is the boundary out of degree min_degree + k. The lowest
  /// one has zero rows. A truncated complex may continue above its top
  /// degree, so homology there is not available.
  ChainComplex(int min_degree, std::vector<SparseMatrix> boundaries, bool truncated = true);

  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(boundaries_.size()) - 1; }
  bool truncated() const { return truncated_; }

  std::size_t dim(int n) const;
  /// dim(n-1) x dim(n); zero outside the stored range.
  SparseMatrix boundary(int n) const;

  /// Throws BoundaryNotSquareZero on the first failing degree.
  void check_square_zero() const;

  /// Appends Z in degree -1 with the augmentation sending each degree-0
  /// generator to 1.
  ChainComplex augmented() const;

 private:
  int min_degree_ = 0;
  std::vector<SparseMatrix> boundaries_;
  bool truncated_ = true;
};

/// H_n with a fixed generating set: free generators first, then torsion
/// generators in divisibility order.
class HomologyGroup {
 public:
  HomologyGroup() = default;

  int degree() const { return degree_; }
  const AbelianGroupPresentation& presentation() const { return presentation_; }
  std::size_t generators() const { return orders_.size(); }
  /// 0 for a free generator, otherwise its order.
  const std::vector<Integer>& orders() const { return orders_; }

  /// Class of a cycle in generator coordinates. Throws NotACycle when z is
  /// not a cycle.
  std::vector<Integer> coordinates(const SparseVector& z) const;
  SparseVector representative(std::size_t i) const;
  /// Reduces torsion entries into [0, d).
  std::vector<Integer> normalize(std::vector<Integer> coords) const;
  bool is_boundary(const SparseVector& z) const;

 private:
  friend HomologyGroup homology(const ChainComplex&, int, bool);

  int degree_ = 0;
  std::size_t chain_dim_ = 0;
  AbelianGroupPresentation presentation_;
  std::vector<Integer> orders_;
  Lattice cycles_;
  SparseMatrix boundary_;          // boundary out of degree n, to test cycles
  IntMatrix u_;                    // SNF left transform on cycle coordinates
  IntMatrix uinv_;
  std::vector<std::size_t> rows_;  // SNF row feeding each generator
  bool with_coordinates_ = false;
};

/// Throws BoundExceeded when degree n+1 is not available in a truncated complex.
HomologyGroup homology(const ChainComplex& c, int n, bool with_coordinates = true);

/// Matrix of the map induced on homology by a chain map given in degree n.
IntMatrix induced_map(const SparseMatrix& chain_map, const HomologyGroup& source,
                      const HomologyGroup& target);

/// Degreewise inclusion of a subcomplex with saturated image.
class ChainComplexPair {
 public:
  /// inclusion[k] maps sub degree ambient.min_degree()+k into ambient.
  ChainComplexPair(ChainComplex ambient, ChainComplex sub, std::vector<SparseMatrix> inclusion);

  const ChainComplex& ambient() const { return ambient_; }
  const ChainComplex& sub() const { return sub_; }
  const ChainComplex& quotient() const { return quotient_; }

  const SparseMatrix& inclusion(int n) const { return inclusion_.at(index(n)); }
  const SparseMatrix& projection(int n) const { return projection_.at(index(n)); }
  const SparseMatrix& lift(int n) const { return lift_.at(index(n)); }

  /// Sub-chain whose inclusion is v. Throws LiftFailure when v is not in the image.
  SparseVector solve_inclusion(int n, const SparseVector& v) const;

  /// H_n(quotient) -> H_{n-1}(sub).
  IntMatrix connecting_map(int n, const HomologyGroup& quotient_n, const HomologyGroup& sub_n_minus_1) const;

 private:
  std::size_t index(int n) const;

  ChainComplex ambient_;
  ChainComplex sub_;
  ChainComplex quotient_;
  std::vector<SparseMatrix> inclusion_;
  std::vector<SparseMatrix> projection_;
  std::vector<SparseMatrix> lift_;
  std::vector<SparseMatrix> solver_;
};

/// A finite sequence of finitely generated abelian groups and maps between
/// consecutive ones. Group k is Z^m modulo the cyclic orders listed.
struct ExactSequence {
  std::vector<std::string> labels;
  std::vector<std::vector<Integer>> orders;
  std::vector<IntMatrix> maps;  // maps[k] : group k -> group k+1
};

struct ExactnessReport {
  bool exact = true;
  std::vector<std::string> failures;  // labels of interior nodes that fail
  std::size_t checked = 0;
};

/// Image equals kernel at every interior node. Throws DimensionMismatch when
/// the data does not compose.
ExactnessReport verify_exactness(const ExactSequence& seq);

/// H_top(S) -> H_top(C) -> H_top(Q) -> H_{top-1}(S) -> ... -> H_lo(Q) -> 0.
ExactSequence pair_long_exact_sequence(const ChainComplexPair& pair, int top);

}  // namespace glmy
