#include "glmy/chain_complex.hpp"

#include "glmy/errors.hpp"

#include <string>

namespace glmy {

// ---------------------------------------------------------------------------
// ChainComplex

ChainComplex::ChainComplex(int min_degree, std::vector<SparseMatrix> boundaries, bool truncated)
    : min_degree_(min_degree), boundaries_(std::move(boundaries)), truncated_(truncated) {
  for (std::size_t k = 0; k < boundaries_.size(); ++k) {
    std::size_t expected_rows = k == 0 ? 0 : boundaries_[k - 1].cols();
    if (boundaries_[k].rows() != expected_rows)
      throw Error(ErrorCode::DimensionMismatch,
                  "boundary out of degree " + std::to_string(min_degree_ + static_cast<int>(k)) +
                      " has the wrong number of rows");
  }
}

std::size_t ChainComplex::dim(int n) const {
  if (n < min_degree_ || n > max_degree()) return 0;
  return boundaries_[static_cast<std::size_t>(n - min_degree_)].cols();
}

SparseMatrix ChainComplex::boundary(int n) const {
  if (n < min_degree_ || n > max_degree()) return SparseMatrix(dim(n - 1), dim(n));
  return boundaries_[static_cast<std::size_t>(n - min_degree_)];
}

void ChainComplex::check_square_zero() const {
  for (int n = min_degree_ + 1; n <= max_degree(); ++n) {
    SparseMatrix lower = boundary(n - 1);
    SparseMatrix upper = boundary(n);
    for (const auto& col : upper.columns())
      if (!lower.apply(col).empty())
        throw Error(ErrorCode::BoundaryNotSquareZero, "boundary squares to nonzero at degree " + std::to_string(n));
  }
}

ChainComplex ChainComplex::augmented() const {
  if (min_degree_ != 0) throw Error(ErrorCode::DimensionMismatch, "augmentation needs a complex starting in degree 0");
  std::vector<SparseMatrix> b;
  b.emplace_back(0, 1);
  SparseMatrix eps(1, dim(0));
  for (std::size_t i = 0; i < dim(0); ++i) eps.set_column(i, SparseVector::unit(0));
  b.push_back(std::move(eps));
  for (int n = 1; n <= max_degree(); ++n) b.push_back(boundary(n));
  return ChainComplex(-1, std::move(b), truncated_);
}

// ---------------------------------------------------------------------------
// Homology

HomologyGroup homology(const ChainComplex& c, int n, bool with_coordinates) {
  if (c.truncated() && n >= c.max_degree())
    throw Error(ErrorCode::BoundExceeded, "homology in degree " + std::to_string(n) +
                                              " needs chains in degree " + std::to_string(n + 1));
  HomologyGroup h;
  h.degree_ = n;
  h.chain_dim_ = c.dim(n);
  h.with_coordinates_ = with_coordinates;
  h.boundary_ = c.boundary(n);
  h.cycles_ = kernel_lattice(h.boundary_);
  const std::size_t k = h.cycles_.rank();

  Lattice image(k);
  const SparseMatrix next = c.boundary(n + 1);
  for (const auto& col : next.columns()) {
    auto coords = h.cycles_.coordinates(col);
    if (!coords) throw Error(ErrorCode::BoundaryNotSquareZero, "boundary of degree " + std::to_string(n + 1) + " is not a cycle");
    image.insert(*coords);
  }
  IntMatrix rel = image.basis_matrix();

  if (!with_coordinates) {
    h.presentation_ = presentation_from_factors(k, invariant_factors(rel));
    for (std::size_t i = 0; i < h.presentation_.rank; ++i) h.orders_.push_back(0);
    for (const auto& d : h.presentation_.torsion) h.orders_.push_back(d);
    return h;
  }

  SmithForm snf = smith_normal_form(rel, SmithOptions{true, false});
  const std::size_t t = snf.rank();
  for (std::size_t r = t; r < k; ++r) {
    h.rows_.push_back(r);
    h.orders_.push_back(0);
  }
  for (std::size_t r = 0; r < t; ++r)
    if (snf.diagonal[r] != 1) {
      h.rows_.push_back(r);
      h.orders_.push_back(snf.diagonal[r]);
    }
  h.presentation_ = presentation_from_factors(k, snf.diagonal);
  h.u_ = std::move(snf.U);
  h.uinv_ = std::move(snf.Uinv);
  return h;
}

std::vector<Integer> HomologyGroup::coordinates(const SparseVector& z) const {
  if (!with_coordinates_) throw Error(ErrorCode::DimensionMismatch, "homology computed without coordinates");
  if (!z.empty() && z.lead() >= chain_dim_) throw Error(ErrorCode::DimensionMismatch, "chain longer than the chain group");
  if (!boundary_.apply(z).empty()) throw Error(ErrorCode::NotACycle, "chain in degree " + std::to_string(degree_) + " is not a cycle");
  auto y = cycles_.coordinates(z);
  if (!y) throw Error(ErrorCode::NotACycle, "cycle outside the kernel lattice");
  std::vector<Integer> out(rows_.size());
  for (std::size_t g = 0; g < rows_.size(); ++g) {
    Integer acc = 0;
    for (const auto& [j, value] : y->entries()) acc += u_(rows_[g], j) * value;
    out[g] = std::move(acc);
  }
  return normalize(std::move(out));
}

std::vector<Integer> HomologyGroup::normalize(std::vector<Integer> coords) const {
  for (std::size_t g = 0; g < coords.size() && g < orders_.size(); ++g)
    if (orders_[g] != 0) coords[g] = floor_mod(coords[g], orders_[g]);
  return coords;
}

SparseVector HomologyGroup::representative(std::size_t i) const {
  if (!with_coordinates_) throw Error(ErrorCode::DimensionMismatch, "homology computed without coordinates");
  if (i >= rows_.size()) throw Error(ErrorCode::IndexOutOfRange, "homology generator index");
  SparseVector out;
  std::size_t j = 0;
  for (const auto& b : cycles_.basis()) {
    const Integer& coef = uinv_(j, rows_[i]);
    if (coef != 0) out.add_scaled(b, coef);
    ++j;
  }
  return out;
}

bool HomologyGroup::is_boundary(const SparseVector& z) const {
  for (const auto& x : coordinates(z))
    if (x != 0) return false;
  return true;
}

IntMatrix induced_map(const SparseMatrix& chain_map, const HomologyGroup& source, const HomologyGroup& target) {
  IntMatrix out(target.generators(), source.generators());
  for (std::size_t i = 0; i < source.generators(); ++i) {
    auto coords = target.coordinates(chain_map.apply(source.representative(i)));
    for (std::size_t r = 0; r < coords.size(); ++r) out(r, i) = coords[r];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pairs

namespace {

// Columns are signed unit vectors hitting distinct rows.
bool is_coordinate_embedding(const SparseMatrix& m) {
  std::vector<bool> hit(m.rows(), false);
  for (const auto& col : m.columns()) {
    if (col.size() != 1) return false;
    const auto& [r, value] = col.entries().front();
    if ((value != 1 && value != -1) || hit[r]) return false;
    hit[r] = true;
  }
  return true;
}

SparseMatrix rows_of(const IntMatrix& m, std::size_t from, std::size_t to) {
  SparseMatrix out(to - from, m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    SparseVector v;
    for (std::size_t r = from; r < to; ++r) v.push_back(r - from, m(r, c));
    out.set_column(c, std::move(v));
  }
  return out;
}

SparseMatrix cols_of(const IntMatrix& m, std::size_t from, std::size_t to) {
  SparseMatrix out(m.rows(), to - from);
  for (std::size_t c = from; c < to; ++c) {
    SparseVector v;
    for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(r, m(r, c));
    out.set_column(c - from, std::move(v));
  }
  return out;
}

}  // namespace

ChainComplexPair::ChainComplexPair(ChainComplex ambient, ChainComplex sub, std::vector<SparseMatrix> inclusions)
    : ambient_(std::move(ambient)), sub_(std::move(sub)), inclusion_(std::move(inclusions)) {
  if (ambient_.min_degree() != sub_.min_degree() || ambient_.max_degree() != sub_.max_degree())
    throw Error(ErrorCode::DimensionMismatch, "pair complexes cover different degrees");
  const int lo = ambient_.min_degree(), hi = ambient_.max_degree();
  if (inclusion_.size() != static_cast<std::size_t>(hi - lo + 1))
    throw Error(ErrorCode::DimensionMismatch, "one inclusion matrix per degree expected");

  for (int n = lo; n <= hi; ++n) {
    const SparseMatrix& inc = inclusion(n);
    if (inc.rows() != ambient_.dim(n) || inc.cols() != sub_.dim(n))
      throw Error(ErrorCode::DimensionMismatch, "inclusion shape at degree " + std::to_string(n));
    if (n > lo) {
      SparseMatrix lhs = ambient_.boundary(n) * inc;
      SparseMatrix rhs = inclusion(n - 1) * sub_.boundary(n);
      for (std::size_t c = 0; c < lhs.cols(); ++c)
        if (!(lhs.column(c) == rhs.column(c)))
          throw Error(ErrorCode::InvalidMapping, "inclusion does not commute with boundaries at degree " + std::to_string(n));
    }

    const std::size_t a = inc.rows(), s = inc.cols();
    if (is_coordinate_embedding(inc)) {
      std::vector<bool> hit(a, false);
      SparseMatrix solver(s, a);
      std::vector<SparseVector> solver_rows;
      SparseMatrix lift(a, a - s), proj(a - s, a);
      std::vector<std::size_t> complement_pos(a, 0);
      for (std::size_t c = 0; c < s; ++c) {
        const auto& [r, value] = inc.column(c).entries().front();
        hit[r] = true;
        solver.set_column(r, SparseVector::unit(c, value));
      }
      std::size_t q = 0;
      for (std::size_t r = 0; r < a; ++r)
        if (!hit[r]) {
          lift.set_column(q, SparseVector::unit(r));
          proj.set_column(r, SparseVector::unit(q));
          ++q;
        }
      projection_.push_back(std::move(proj));
      lift_.push_back(std::move(lift));
      solver_.push_back(std::move(solver));
    } else {
      SmithForm snf = smith_normal_form(inc.to_dense());
      if (snf.rank() != s) throw Error(ErrorCode::NotASublattice, "inclusion is not injective at degree " + std::to_string(n));
      for (const auto& d : snf.diagonal)
        if (d != 1) throw Error(ErrorCode::NotASublattice, "sub chain group is not a direct summand at degree " + std::to_string(n));
      projection_.push_back(rows_of(snf.U, s, a));
      lift_.push_back(cols_of(snf.Uinv, s, a));
      solver_.push_back(cols_of(snf.V, 0, s) * rows_of(snf.U, 0, s));
    }
  }

  std::vector<SparseMatrix> qb;
  for (int n = lo; n <= hi; ++n) {
    if (n == lo) {
      qb.emplace_back(0, lift(n).cols());
    } else {
      qb.push_back(projection(n - 1) * (ambient_.boundary(n) * lift(n)));
    }
  }
  quotient_ = ChainComplex(lo, std::move(qb), ambient_.truncated());
}

std::size_t ChainComplexPair::index(int n) const {
  if (n < ambient_.min_degree() || n > ambient_.max_degree())
    throw Error(ErrorCode::IndexOutOfRange, "degree " + std::to_string(n) + " outside the pair");
  return static_cast<std::size_t>(n - ambient_.min_degree());
}

SparseVector ChainComplexPair::solve_inclusion(int n, const SparseVector& v) const {
  SparseVector s = solver_.at(index(n)).apply(v);
  if (!(inclusion(n).apply(s) == v)) throw Error(ErrorCode::LiftFailure, "chain is not in the sub complex at degree " + std::to_string(n));
  return s;
}

IntMatrix ChainComplexPair::connecting_map(int n, const HomologyGroup& quotient_n,
                                           const HomologyGroup& sub_prev) const {
  IntMatrix out(sub_prev.generators(), quotient_n.generators());
  if (n - 1 < ambient_.min_degree()) return out;
  for (std::size_t i = 0; i < quotient_n.generators(); ++i) {
    SparseVector c = lift(n).apply(quotient_n.representative(i));
    SparseVector d = ambient_.boundary(n).apply(c);
    auto coords = sub_prev.coordinates(solve_inclusion(n - 1, d));
    for (std::size_t r = 0; r < coords.size(); ++r) out(r, i) = coords[r];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exactness

namespace {

std::vector<SparseVector> relation_vectors(const std::vector<Integer>& orders) {
  std::vector<SparseVector> out;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] != 0) out.push_back(SparseVector::unit(i, orders[i]));
  return out;
}

}  // namespace

ExactnessReport verify_exactness(const ExactSequence& seq) {
  const std::size_t nodes = seq.orders.size();
  if (seq.maps.size() + 1 != nodes && !(nodes == 0 && seq.maps.empty()))
    throw Error(ErrorCode::DimensionMismatch, "sequence needs one map between each pair of groups");
  for (std::size_t k = 0; k < seq.maps.size(); ++k)
    if (seq.maps[k].cols() != seq.orders[k].size() || seq.maps[k].rows() != seq.orders[k + 1].size())
      throw Error(ErrorCode::DimensionMismatch, "map " + std::to_string(k) + " does not compose");

  ExactnessReport report;
  for (std::size_t k = 1; k + 1 < nodes; ++k) {
    const std::size_t m = seq.orders[k].size();
    const IntMatrix& f = seq.maps[k - 1];
    const IntMatrix& g = seq.maps[k];

    Lattice image(m);
    for (std::size_t c = 0; c < f.cols(); ++c) image.insert(SparseVector::from_dense(f.column(c)));
    for (const auto& r : relation_vectors(seq.orders[k])) image.insert(r);

    auto next_rel = relation_vectors(seq.orders[k + 1]);
    SparseMatrix big(g.rows(), m + next_rel.size());
    for (std::size_t c = 0; c < m; ++c) big.set_column(c, SparseVector::from_dense(g.column(c)));
    for (std::size_t c = 0; c < next_rel.size(); ++c) big.set_column(m + c, next_rel[c]);
    Lattice kernel(m);
    for (const auto& v : kernel_lattice(big).basis()) {
      SparseVector head;
      for (const auto& [i, value] : v.entries())
        if (i < m) head.push_back(i, value);
      kernel.insert(head);
    }
    for (const auto& r : relation_vectors(seq.orders[k])) kernel.insert(r);

    ++report.checked;
    if (!kernel.contains(image) || !image.contains(kernel)) {
      report.exact = false;
      report.failures.push_back(k < seq.labels.size() ? seq.labels[k] : std::to_string(k));
    }
  }
  return report;
}

ExactSequence pair_long_exact_sequence(const ChainComplexPair& pair, int top) {
  const int lo = pair.ambient().min_degree();
  ExactSequence seq;
  std::vector<HomologyGroup> hs, hc, hq;
  for (int n = top; n >= lo; --n) {
    hs.push_back(homology(pair.sub(), n));
    hc.push_back(homology(pair.ambient(), n));
    hq.push_back(homology(pair.quotient(), n));
  }
  for (int n = top; n >= lo; --n) {
    std::size_t k = static_cast<std::size_t>(top - n);
    std::string d = std::to_string(n);
    seq.labels.push_back("H_" + d + "(sub)");
    seq.orders.push_back(hs[k].orders());
    seq.maps.push_back(induced_map(pair.inclusion(n), hs[k], hc[k]));
    seq.labels.push_back("H_" + d + "(ambient)");
    seq.orders.push_back(hc[k].orders());
    seq.maps.push_back(induced_map(pair.projection(n), hc[k], hq[k]));
    seq.labels.push_back("H_" + d + "(quotient)");
    seq.orders.push_back(hq[k].orders());
    if (n > lo) seq.maps.push_back(pair.connecting_map(n, hq[k], hs[k + 1]));
  }
  seq.labels.push_back("0");
  seq.orders.emplace_back();
  seq.maps.emplace_back(0, hq.back().generators());
  return seq;
}

}  // namespace glmy
