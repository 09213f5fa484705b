#include "glmy/linalg.hpp"

#include "glmy/errors.hpp"

#include <algorithm>
#include <sstream>

namespace glmy {

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer mm = abs(m);
  Integer r = a % mm;
  if (r < 0) r += mm;
  return r;
}

std::string to_string(const Integer& value) { return value.str(); }

// ---------------------------------------------------------------------------
// SparseVector

SparseVector SparseVector::unit(std::size_t index, Integer value) {
  SparseVector v;
  if (value != 0) v.entries_.emplace_back(index, std::move(value));
  return v;
}

SparseVector SparseVector::from_dense(const std::vector<Integer>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.entries_.emplace_back(i, dense[i]);
  return v;
}

Integer SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVector::push_back(std::size_t index, Integer value) {
  if (value == 0) return;
  entries_.emplace_back(index, std::move(value));
}

void SparseVector::add(std::size_t index, const Integer& value) {
  if (value == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  } else {
    entries_.insert(it, Entry(index, value));
  }
}

void SparseVector::add_scaled(const SparseVector& other, const Integer& factor) {
  if (factor == 0 || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, b->second * factor);
      ++b;
    } else {
      Integer v = a->second + b->second * factor;
      if (v != 0) merged.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Integer& factor) {
  if (factor == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

SparseVector SparseVector::negated() const {
  SparseVector v = *this;
  for (auto& e : v.entries_) e.second = -e.second;
  return v;
}

std::vector<Integer> SparseVector::to_dense(std::size_t dimension) const {
  std::vector<Integer> out(dimension);
  for (const auto& [i, value] : entries_) {
    if (i >= dimension) throw Error(ErrorCode::DimensionMismatch, "sparse index beyond dimension");
    out[i] = value;
  }
  return out;
}

SparseVector linear_combination(const SparseVector& a, const Integer& ca,
                                const SparseVector& b, const Integer& cb) {
  SparseVector out = a;
  out.scale(ca);
  out.add_scaled(b, cb);
  return out;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch, "matrix data does not match its shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void IntMatrix::set_column(std::size_t c, const std::vector<Integer>& values) {
  if (values.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "column length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square");
  std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& dense) {
  SparseMatrix m(dense.rows(), dense.cols());
  for (std::size_t c = 0; c < dense.cols(); ++c) m.columns_[c] = SparseVector::from_dense(dense.column(c));
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = SparseVector::unit(i);
  return m;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [i, value] : v.entries()) {
    if (i >= columns_.size()) throw Error(ErrorCode::DimensionMismatch, "vector longer than matrix width");
    out.add_scaled(columns_[i], value);
  }
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols() != rhs.rows()) throw Error(ErrorCode::DimensionMismatch, "sparse product shapes");
  SparseMatrix out(rows_, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) out.columns_[c] = apply(rhs.columns_[c]);
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& v) { return v.empty(); });
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix out(rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, value] : columns_[c].entries()) out(r, c) = value;
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

class SmithReducer {
 public:
  SmithReducer(const IntMatrix& m, SmithOptions options) : a_(m), options_(options) {
    if (options_.track_left) {
      u_ = IntMatrix::identity(m.rows());
      uinv_ = IntMatrix::identity(m.rows());
    }
    if (options_.track_right) {
      v_ = IntMatrix::identity(m.cols());
      vinv_ = IntMatrix::identity(m.cols());
    }
  }

  SmithForm run() {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
      if (!move_min_to(t, /*whole_block=*/true)) break;
      for (;;) {
        bool leftover = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a_(i, t) == 0) continue;
          Integer q = a_(i, t) / a_(t, t);
          row_add(i, t, -q);
          if (a_(i, t) != 0) leftover = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a_(t, j) == 0) continue;
          Integer q = a_(t, j) / a_(t, t);
          col_add(j, t, -q);
          if (a_(t, j) != 0) leftover = true;
        }
        if (leftover) {
          move_min_to(t, /*whole_block=*/false);
          continue;
        }
        bool fixed = false;
        for (std::size_t i = t + 1; i < rows && !fixed; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a_(i, j) != 0 && a_(i, j) % a_(t, t) != 0) {
              row_add(t, i, 1);
              fixed = true;
              break;
            }
        if (!fixed) break;
      }
    }
    SmithForm out;
    for (std::size_t k = 0; k < t; ++k) {
      if (a_(k, k) < 0) row_negate(k);
      out.diagonal.push_back(a_(k, k));
    }
    out.D = std::move(a_);
    out.U = std::move(u_);
    out.Uinv = std::move(uinv_);
    out.V = std::move(v_);
    out.Vinv = std::move(vinv_);
    return out;
  }

 private:
  // Moves the smallest nonzero entry of the trailing block (or of row/col t
  // only) to (t,t). Returns false when the block is zero.
  bool move_min_to(std::size_t t, bool whole_block) {
    const std::size_t rows = a_.rows(), cols = a_.cols();
    std::size_t bi = rows, bj = cols;
    Integer best;
    auto consider = [&](std::size_t i, std::size_t j) {
      const Integer& x = a_(i, j);
      if (x == 0) return;
      Integer ax = abs(x);
      if (bi == rows || ax < best) {
        best = ax;
        bi = i;
        bj = j;
      }
    };
    if (whole_block) {
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          consider(i, j);
          if (bi != rows && best == 1) goto found;
        }
    } else {
      consider(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) consider(i, t);
      for (std::size_t j = t + 1; j < cols; ++j) consider(t, j);
    }
  found:
    if (bi == rows) return false;
    if (bi != t) row_swap(t, bi);
    if (bj != t) col_swap(t, bj);
    return true;
  }

  // row dst += q * row src
  void row_add(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (a_(src, j) != 0) a_(dst, j) += q * a_(src, j);
    if (options_.track_left) {
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (u_(src, j) != 0) u_(dst, j) += q * u_(src, j);
      for (std::size_t i = 0; i < uinv_.rows(); ++i)
        if (uinv_(i, dst) != 0) uinv_(i, src) -= q * uinv_(i, dst);
    }
  }

  // col dst += q * col src
  void col_add(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (a_(i, src) != 0) a_(i, dst) += q * a_(i, src);
    if (options_.track_right) {
      for (std::size_t i = 0; i < v_.rows(); ++i)
        if (v_(i, src) != 0) v_(i, dst) += q * v_(i, src);
      for (std::size_t j = 0; j < vinv_.cols(); ++j)
        if (vinv_(dst, j) != 0) vinv_(src, j) -= q * vinv_(dst, j);
    }
  }

  void row_swap(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(i, j), a_(k, j));
    if (options_.track_left) {
      for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(i, j), u_(k, j));
      for (std::size_t r = 0; r < uinv_.rows(); ++r) std::swap(uinv_(r, i), uinv_(r, k));
    }
  }

  void col_swap(std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, j), a_(i, k));
    if (options_.track_right) {
      for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, j), v_(i, k));
      for (std::size_t c = 0; c < vinv_.cols(); ++c) std::swap(vinv_(j, c), vinv_(k, c));
    }
  }

  void row_negate(std::size_t i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
    if (options_.track_left) {
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(i, j) = -u_(i, j);
      for (std::size_t r = 0; r < uinv_.rows(); ++r) uinv_(r, i) = -uinv_(r, i);
    }
  }

  IntMatrix a_;
  SmithOptions options_;
  IntMatrix u_, uinv_, v_, vinv_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options) {
  return SmithReducer(m, options).run();
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  return smith_normal_form(m, SmithOptions{false, false}).diagonal;
}

}  // namespace glmy
