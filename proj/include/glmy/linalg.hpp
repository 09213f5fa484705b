#pragma once

// Exact integer linear algebra. Nothing here touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace glmy {

using Integer = boost::multiprecision::cpp_int;

struct ExtendedGcd {
  Integer gcd;  // always >= 0
  Integer s;    // gcd = s*a + t*b
  Integer t;
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Remainder in [0, |m|).
Integer floor_mod(const Integer& a, const Integer& m);

/// Sparse integer vector, entries sorted by index, no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Integer>;

  SparseVector() = default;
  static SparseVector unit(std::size_t index, Integer value = 1);
  static SparseVector from_dense(const std::vector<Integer>& dense);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Largest index carrying a nonzero entry. Requires !empty().
  std::size_t lead() const { return entries_.back().first; }
  const Integer& lead_value() const { return entries_.back().second; }

  Integer at(std::size_t index) const;
  /// Appends an entry; indices must arrive strictly increasing.
  void push_back(std::size_t index, Integer value);
  void add(std::size_t index, const Integer& value);

  /// this += factor * other
  void add_scaled(const SparseVector& other, const Integer& factor);
  void scale(const Integer& factor);
  SparseVector negated() const;

  std::vector<Integer> to_dense(std::size_t dimension) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// ca*a + cb*b
SparseVector linear_combination(const SparseVector& a, const Integer& ca,
                                const SparseVector& b, const Integer& cb);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> row_major);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transposed() const;
  bool is_zero() const;
  bool is_diagonal() const;

  std::vector<Integer> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Integer>& values);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Column-sparse integer matrix; the natural storage for boundary operators.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);
  static SparseMatrix from_dense(const IntMatrix& dense);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  const SparseVector& column(std::size_t c) const { return columns_[c]; }
  const std::vector<SparseVector>& columns() const { return columns_; }
  void set_column(std::size_t c, SparseVector v) { columns_[c] = std::move(v); }
  void append_column(SparseVector v) { columns_.push_back(std::move(v)); }

  SparseVector apply(const SparseVector& v) const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  bool is_zero() const;
  IntMatrix to_dense() const;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

struct SmithOptions {
  bool track_left = true;
  bool track_right = true;
};

/// U * M * V = D with U, V unimodular, D diagonal, d1 | d2 | ... , all d_i > 0.
/// Uinv and Vinv are maintained alongside so callers never need to invert.
struct SmithForm {
  IntMatrix U;
  IntMatrix Uinv;
  IntMatrix D;
  IntMatrix V;
  IntMatrix Vinv;
  std::vector<Integer> diagonal;  // nonzero diagonal entries, in order
  std::size_t rank() const { return diagonal.size(); }
};

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options = {});

/// Nonzero invariant factors only (no transforms).
std::vector<Integer> invariant_factors(const IntMatrix& m);

std::string to_string(const Integer& value);

}  // namespace glmy
