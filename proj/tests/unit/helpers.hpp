#pragma once

// Shared test utilities, including a mod-p rank oracle written independently
// of the library's integer elimination.

#include "glmy/digraph.hpp"
#include "glmy/errors.hpp"
#include "glmy/linalg.hpp"

#include <doctest.h>

#include <cstdint>
#include <functional>
#include <vector>

#define CHECK_ERROR_CODE(expr, expected)                              \
  do {                                                                \
    bool thrown_ = false;                                             \
    try {                                                             \
      (void)(expr);                                                   \
    } catch (const glmy::Error& e_) {                                 \
      thrown_ = true;                                                 \
      CHECK_MESSAGE(e_.code() == (expected), glmy::error_name(e_.code())); \
    }                                                                 \
    CHECK_MESSAGE(thrown_, "expected an error from " #expr);          \
  } while (0)

namespace oracle {

constexpr std::int64_t kPrime = 1000003;

using Row = std::vector<std::int64_t>;
using Matrix = std::vector<Row>;  // row-major, rows may be empty when cols == 0

inline std::int64_t reduce(std::int64_t x) {
  x %= kPrime;
  return x < 0 ? x + kPrime : x;
}

inline std::int64_t inverse(std::int64_t a) {
  std::int64_t result = 1, e = kPrime - 2;
  a = reduce(a);
  while (e) {
    if (e & 1) result = result * a % kPrime;
    a = a * a % kPrime;
    e >>= 1;
  }
  return result;
}

// Row echelon in place; returns pivot columns.
inline std::vector<std::size_t> echelon(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && reduce(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const std::int64_t inv = inverse(m[r][c]);
    for (auto& x : m[r]) x = reduce(x) * inv % kPrime;
    for (std::size_t q = 0; q < m.size(); ++q) {
      if (q == r || reduce(m[q][c]) == 0) continue;
      const std::int64_t f = reduce(m[q][c]);
      for (std::size_t k = 0; k < cols; ++k) m[q][k] = reduce(m[q][k] - f * m[r][k]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix m, std::size_t cols) { return echelon(m, cols).size(); }

// Basis of {x : m x = 0}, as columns.
inline std::vector<Row> nullspace(Matrix m, std::size_t cols) {
  const auto pivots = echelon(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Row> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = reduce(-m[i][free]);
    out.push_back(std::move(x));
  }
  return out;
}

inline Matrix multiply(const Matrix& a, const std::vector<Row>& columns, std::size_t a_cols) {
  Matrix out(a.size(), Row(columns.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < a_cols; ++k) s = reduce(s + reduce(a[i][k]) * columns[j][k]);
      out[i][j] = s;
    }
  return out;
}

}  // namespace oracle

inline glmy::Digraph cycle_digraph(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<glmy::Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    arrows.emplace_back(static_cast<glmy::Vertex>(i), static_cast<glmy::Vertex>((i + 1) % n));
  }
  return glmy::Digraph::from_indices(std::move(labels), std::move(arrows));
}

inline glmy::Digraph square_digraph() {
  return glmy::Digraph::build({"0", "1", "2", "3"}, {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}});
}

inline glmy::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long long span) {
  glmy::IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = static_cast<long long>(glmy::uniform_below(rng, 2 * span + 1)) - span;
  return m;
}
