#pragma once

// Grid digraph maps, subdivisions, products, F-homotopy certificates and the
// Hurewicz maps.

#include "glmy/cubical.hpp"
#include "glmy/digraph.hpp"
#include "glmy/path_homology.hpp"

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace glmy {

enum class GridMode { Absolute, Pair, Triple };

std::string mode_name(GridMode mode);

/// A digraph map from a box of line digraphs, stored row-major with axis 1
/// varying slowest.
class GridMap {
 public:
  GridMap() = default;
  /// Throws ShapeMismatch when the value count does not fit the axes, and
  /// NotASubdigraph / UnknownVertex for inconsistent mode data.
  GridMap(std::vector<LineDigraph> axes, std::vector<Vertex> values, Digraph target,
          GridMode mode = GridMode::Absolute, Vertex base = 0, std::optional<Digraph> sub = std::nullopt);

  std::size_t dim() const { return axes_.size(); }
  const std::vector<LineDigraph>& axes() const { return axes_; }
  std::vector<std::size_t> shape() const;
  std::size_t length(std::size_t axis) const { return axes_[axis].length(); }
  const std::vector<Vertex>& values() const { return values_; }
  const Digraph& target() const { return *target_; }
  GridMode mode() const { return mode_; }
  Vertex base() const { return base_; }
  const std::optional<Digraph>& sub() const { return sub_; }
  /// Membership of the mode subdigraph A (Triple only).
  const SubdigraphView* sub_view() const { return view_.get(); }

  std::size_t flat(const std::vector<std::size_t>& idx) const;
  std::vector<std::size_t> multi(std::size_t flat_index) const;
  Vertex at(const std::vector<std::size_t>& idx) const { return values_[flat(idx)]; }

  /// Every axis is a standard line of even positive length.
  bool is_standard() const;

  /// Same data with different values; target and mode carried over.
  GridMap with(std::vector<LineDigraph> axes, std::vector<Vertex> values) const;

  friend bool operator==(const GridMap& a, const GridMap& b);

 private:
  std::vector<LineDigraph> axes_;
  std::vector<Vertex> values_;
  std::shared_ptr<const Digraph> target_;
  GridMode mode_ = GridMode::Absolute;
  Vertex base_ = 0;
  std::optional<Digraph> sub_;
  std::shared_ptr<const SubdigraphView> view_;
};

struct GridValidation {
  bool ok = true;
  std::string reason;
};

/// Arrow condition plus the boundary conditions of the mode.
GridValidation validate(const GridMap& f);

/// Throws InvalidGridMap with the first violation.
void require_valid(const GridMap& f);

/// Monotone endpoint-preserving surjection of lines that is a digraph map.
struct ShrinkingMap {
  LineDigraph domain;
  std::vector<std::size_t> values;  // h(0..M)

  std::size_t codomain_length() const { return values.empty() ? 0 : values.back(); }
  /// Throws NotMonotoneShape unless this is a shrinking map onto `codomain`.
  void check(const LineDigraph& codomain) const;

  static ShrinkingMap identity(const LineDigraph& line);
  /// Standard J_M -> J_m with the k-th step placed at k + 2 t_k.
  static ShrinkingMap standard(std::size_t m, const std::vector<std::size_t>& t);
  /// J_2m -> J_m stretching every step.
  static ShrinkingMap doubling(std::size_t m);
};

using ShrinkingMapND = std::vector<ShrinkingMap>;

ShrinkingMapND identity_shrink(const GridMap& f);
ShrinkingMapND random_shrink(std::mt19937_64& rng, const std::vector<std::size_t>& shape, std::size_t max_extra);

/// Pads with f(m_1,...,m_n) outside the old block. Throws NotMonotoneShape.
GridMap extend(const GridMap& f, const std::vector<std::size_t>& shape);
/// f composed with h. Throws ShapeMismatch.
GridMap subdivide(const GridMap& f, const ShrinkingMapND& h);
/// Concatenation along axis j (1-based), axis length m_j + l_j.
GridMap concat_mu(std::size_t j, const GridMap& f, const GridMap& g);
/// Reverses axis j (1-based). Throws OddLengthAxis.
GridMap inverse_j(std::size_t j, const GridMap& f);

enum class Direction { None, Forward, Backward, Both };
std::string direction_name(Direction d);
bool allows(Direction have, Direction want);

Direction direct_homotopy(const GridMap& f, const GridMap& g);
bool verify_one_step(const GridMap& f, const GridMap& g, const ShrinkingMapND& sf, const ShrinkingMapND& sg,
                     Direction direction);

struct CertificateStep {
  ShrinkingMapND left;
  ShrinkingMapND right;
  Direction direction = Direction::Forward;
  /// Values of the next map in the chain; the last step ends at g.
  std::optional<std::vector<Vertex>> via;
};

struct CertificateReport {
  bool ok = true;
  std::size_t failed_step = 0;
  std::string reason;
};

CertificateReport verify_homotopy_certificate(const GridMap& f, const GridMap& g,
                                              const std::vector<CertificateStep>& steps);

/// One signed cube per unit cell; degenerate cubes are kept.
CubicalChain hurewicz_chain(const GridMap& f);

/// Pair maps land in the absolute groups, Triple maps in the relative ones.
class HurewiczEvaluator {
 public:
  HurewiczEvaluator(const GridMap& prototype, bool cubical, const CubeBounds& bounds = {});

  int degree() const { return degree_; }
  const HomologyGroup& path_group() const { return path_group_; }
  const HomologyGroup& cubical_group() const;

  std::vector<Integer> path_class(const GridMap& f) const;
  std::vector<Integer> cubical_class(const GridMap& f) const;
  /// Omega-coordinates representative of iota(h(f)) in the ambient complex.
  SparseVector path_cycle(const GridMap& f) const;
  std::vector<Integer> path_class_of_chain(const PathChain& c) const;

  const OmegaComplex& omega() const { return *omega_; }
  const CubicalComplex& cubes() const;
  /// Present only for Triple maps.
  const ChainComplexPair* omega_pair_data() const { return omega_pair_.get(); }
  const ChainComplexPair* cubical_pair_data() const { return cubical_pair_.get(); }

 private:
  void check_compatible(const GridMap& f) const;

  int degree_;
  GridMode mode_;
  Digraph target_;
  std::optional<Digraph> sub_;
  std::shared_ptr<OmegaComplex> omega_;
  std::shared_ptr<OmegaComplex> sub_omega_;
  std::shared_ptr<ChainComplexPair> omega_pair_;
  HomologyGroup path_group_;
  std::shared_ptr<CubicalComplex> cubes_;
  std::shared_ptr<CubicalComplex> sub_cubes_;
  std::shared_ptr<ChainComplexPair> cubical_pair_;
  HomologyGroup cubical_group_;
  bool has_cubical_ = false;
};

/// Class of f in cubical homology (absolute or relative).
std::vector<Integer> hurewicz_class(const GridMap& f, const CubeBounds& bounds = {});
/// Class of iota(h(f)) in path homology (absolute or relative).
std::vector<Integer> glmy_hurewicz(const GridMap& f);

/// Signed edge chain of a one-dimensional loop. Throws WrongDimension.
PathChain loop_h_prime(const GridMap& gamma);
/// Values with stationary repeats collapsed. Throws WrongDimension.
std::vector<Vertex> minimal_path(const GridMap& gamma);

/// Random valid map of the given standard shape. Boundary data follows the
/// mode. Falls back to the constant map at base when the search budget runs out.
GridMap random_grid_map(std::mt19937_64& rng, const Digraph& target, const std::vector<std::size_t>& shape,
                        GridMode mode, Vertex base, const std::optional<Digraph>& sub = std::nullopt);

/// Random map g with f => g (or g => f for Backward), same shape and mode.
GridMap random_direct_homotopy(std::mt19937_64& rng, const GridMap& f, Direction direction);

struct RandomCertificate {
  GridMap end;
  std::vector<CertificateStep> steps;
};

/// Chains `steps` random subdivisions followed by random direct homotopies.
RandomCertificate random_certificate(std::mt19937_64& rng, const GridMap& f, std::size_t steps,
                                     std::size_t max_extra = 2);

}  // namespace glmy
