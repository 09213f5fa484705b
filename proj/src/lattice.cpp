#include "glmy/lattice.hpp"

#include "glmy/errors.hpp"

#include <algorithm>
#include <sstream>

namespace glmy {

Lattice::Lattice(std::size_t ambient, bool track) : ambient_(ambient), track_(track) {}

bool Lattice::insert(const SparseVector& input) {
  if (!input.empty() && input.lead() >= ambient_)
    throw Error(ErrorCode::DimensionMismatch, "vector exceeds lattice ambient dimension");
  SparseVector v = input;
  SparseVector origin;
  if (track_) origin = SparseVector::unit(inserted_);
  ++inserted_;

  while (!v.empty()) {
    std::size_t lead = v.lead();
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      if (v.lead_value() < 0) {
        v.scale(-1);
        origin.scale(-1);
      }
      rows_.emplace(lead, Row{std::move(v), std::move(origin)});
      cache_valid_ = false;
      return true;
    }
    Row& row = it->second;
    const Integer a_b = row.v.lead_value();
    const Integer a_v = v.lead_value();
    if (a_v % a_b == 0) {
      Integer q = a_v / a_b;
      v.add_scaled(row.v, -q);
      if (track_) origin.add_scaled(row.origin, -q);
      continue;
    }
    // Replace (b, v) by a unimodular recombination so the stored row gets
    // lead gcd(a_b, a_v) and the working vector loses its lead.
    ExtendedGcd e = extended_gcd(a_b, a_v);
    Integer vb = a_v / e.gcd;
    Integer vv = -(a_b / e.gcd);
    SparseVector new_b = linear_combination(row.v, e.s, v, e.t);
    SparseVector new_v = linear_combination(row.v, vb, v, vv);
    if (track_) {
      SparseVector ob = linear_combination(row.origin, e.s, origin, e.t);
      origin = linear_combination(row.origin, vb, origin, vv);
      row.origin = std::move(ob);
    }
    row.v = std::move(new_b);
    v = std::move(new_v);
  }
  if (track_ && !origin.empty()) relations_.push_back(std::move(origin));
  return false;
}

std::vector<SparseVector> Lattice::basis() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [lead, row] : rows_) out.push_back(row.v);
  return out;
}

IntMatrix Lattice::basis_matrix() const {
  IntMatrix m(ambient_, rows_.size());
  std::size_t c = 0;
  for (const auto& [lead, row] : rows_) {
    for (const auto& [i, value] : row.v.entries()) m(i, c) = value;
    ++c;
  }
  return m;
}

std::size_t Lattice::position(std::size_t lead) const {
  if (!cache_valid_) {
    lead_cache_.clear();
    for (const auto& [l, row] : rows_) lead_cache_.push_back(l);
    cache_valid_ = true;
  }
  return static_cast<std::size_t>(std::lower_bound(lead_cache_.begin(), lead_cache_.end(), lead) -
                                  lead_cache_.begin());
}

std::optional<SparseVector> Lattice::coordinates(const SparseVector& input) const {
  SparseVector w = input;
  std::vector<std::pair<std::size_t, Integer>> found;
  while (!w.empty()) {
    auto it = rows_.find(w.lead());
    if (it == rows_.end()) return std::nullopt;
    const Integer& pivot = it->second.v.lead_value();
    if (w.lead_value() % pivot != 0) return std::nullopt;
    Integer q = w.lead_value() / pivot;
    w.add_scaled(it->second.v, -q);
    found.emplace_back(position(it->first), std::move(q));
  }
  std::reverse(found.begin(), found.end());
  SparseVector out;
  for (auto& [pos, q] : found) out.push_back(pos, std::move(q));
  return out;
}

std::optional<SparseVector> Lattice::express(const SparseVector& input) const {
  if (!track_) throw Error(ErrorCode::DimensionMismatch, "express needs a tracking lattice");
  SparseVector w = input;
  SparseVector out;
  while (!w.empty()) {
    auto it = rows_.find(w.lead());
    if (it == rows_.end()) return std::nullopt;
    const Integer& pivot = it->second.v.lead_value();
    if (w.lead_value() % pivot != 0) return std::nullopt;
    Integer q = w.lead_value() / pivot;
    w.add_scaled(it->second.v, -q);
    out.add_scaled(it->second.origin, q);
  }
  return out;
}

bool Lattice::contains(const SparseVector& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
  for (const auto& [lead, row] : other.rows_)
    if (!contains(row.v)) return false;
  return true;
}

bool Lattice::is_saturated() const {
  for (const Integer& d : invariant_factors(basis_matrix()))
    if (d != 1) return false;
  return true;
}

Lattice kernel_lattice(const SparseMatrix& m) {
  Lattice images(m.rows(), true);
  for (const auto& col : m.columns()) images.insert(col);
  Lattice kernel(m.cols());
  for (const auto& r : images.relations()) kernel.insert(r);
  return kernel;
}

Lattice kernel_lattice(const IntMatrix& m) { return kernel_lattice(SparseMatrix::from_dense(m)); }

Lattice image_lattice(const SparseMatrix& m) {
  Lattice out(m.rows());
  for (const auto& col : m.columns()) out.insert(col);
  return out;
}

std::string AbelianGroupPresentation::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const auto& d : torsion) {
    os << (first ? "" : " ⊕ ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

AbelianGroupPresentation presentation_from_factors(std::size_t generators,
                                                   const std::vector<Integer>& factors) {
  AbelianGroupPresentation g;
  g.rank = generators - factors.size();
  for (const auto& d : factors)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

AbelianGroupPresentation quotient_group(const Lattice& k, const Lattice& i) {
  if (k.ambient() != i.ambient()) throw Error(ErrorCode::DimensionMismatch, "lattices in different ambients");
  IntMatrix rel(k.rank(), i.rank());
  std::size_t c = 0;
  for (const auto& v : i.basis()) {
    auto coords = k.coordinates(v);
    if (!coords) throw Error(ErrorCode::NotASublattice, "image vector not in kernel lattice");
    for (const auto& [r, value] : coords->entries()) rel(r, c) = value;
    ++c;
  }
  return presentation_from_factors(k.rank(), invariant_factors(rel));
}

}  // namespace glmy
