#include "glmy/chain_complex.hpp"
#include "glmy/suspension.hpp"
#include "helpers.hpp"

using namespace glmy;

namespace {

SparseMatrix dense(std::size_t rows, std::size_t cols, const std::vector<std::vector<long long>>& data) {
  if (rows == 0 || cols == 0) return SparseMatrix(rows, cols);
  return SparseMatrix::from_dense(IntMatrix::from_rows(data));
}

// Z <- Z^2 <- Z with d1 = 0 and d2 = (2, 0)^T.
ChainComplex torsion_complex() {
  return ChainComplex(0, {SparseMatrix(0, 1), dense(1, 2, {{0, 0}}), dense(2, 1, {{2}, {0}})}, false);
}

// The interval: two vertices and one edge.
ChainComplex interval() {
  return ChainComplex(0, {SparseMatrix(0, 2), dense(2, 1, {{-1}, {1}})}, false);
}

}  // namespace

TEST_CASE("homology of a complex with torsion") {
  const ChainComplex c = torsion_complex();
  c.check_square_zero();
  CHECK(homology(c, 0).presentation().to_string() == "Z");
  const HomologyGroup h1 = homology(c, 1);
  CHECK(h1.presentation().rank == 1);
  CHECK(h1.presentation().torsion == std::vector<Integer>{2});
  CHECK(h1.orders() == std::vector<Integer>{0, 2});
  CHECK(homology(c, 2).presentation().is_trivial());

  // Every generator's representative has coordinates e_i.
  for (std::size_t i = 0; i < h1.generators(); ++i) {
    auto coords = h1.coordinates(h1.representative(i));
    for (std::size_t j = 0; j < coords.size(); ++j) CHECK(coords[j] == (i == j ? 1 : 0));
  }
  // The torsion cycle counted twice is a boundary.
  SparseVector twice = h1.representative(1);
  twice.scale(2);
  CHECK(h1.is_boundary(twice));
  CHECK(h1.normalize({3, 5}) == std::vector<Integer>{3, 1});
}

TEST_CASE("non-cycles and bounds") {
  const ChainComplex i = interval();
  CHECK(homology(i, 1).presentation().is_trivial());
  CHECK_ERROR_CODE(homology(i, 1).coordinates(SparseVector::unit(0)), ErrorCode::NotACycle);
  CHECK(homology(i, 5).presentation().is_trivial());

  const ChainComplex truncated(0, {SparseMatrix(0, 2), dense(2, 1, {{-1}, {1}})});
  CHECK(homology(truncated, 0).presentation().to_string() == "Z");
  CHECK_ERROR_CODE(homology(truncated, 1), ErrorCode::BoundExceeded);
}

TEST_CASE("square zero check") {
  const ChainComplex bad(0, {SparseMatrix(0, 1), dense(1, 1, {{1}}), dense(1, 1, {{1}})}, false);
  CHECK_ERROR_CODE(bad.check_square_zero(), ErrorCode::BoundaryNotSquareZero);
}

TEST_CASE("augmentation") {
  const ChainComplex a = interval().augmented();
  CHECK(a.min_degree() == -1);
  CHECK(homology(a, 0).presentation().is_trivial());
  CHECK(homology(a, -1).presentation().is_trivial());
}

TEST_CASE("pair of the interval and its endpoints") {
  const ChainComplex points(0, {SparseMatrix(0, 2), SparseMatrix(2, 0)}, false);
  const ChainComplexPair pair(interval(), points, {SparseMatrix::identity(2), SparseMatrix(1, 0)});
  CHECK(pair.quotient().dim(0) == 0);
  CHECK(pair.quotient().dim(1) == 1);

  const HomologyGroup q1 = homology(pair.quotient(), 1);
  const HomologyGroup s0 = homology(pair.sub(), 0);
  CHECK(q1.presentation().rank == 1);
  const IntMatrix delta = pair.connecting_map(1, q1, s0);
  REQUIRE(delta.rows() == 2);
  // The boundary of the edge is v1 - v0, up to the sign of the generator.
  CHECK(delta(0, 0) == -delta(1, 0));
  CHECK((delta(0, 0) == 1 || delta(0, 0) == -1));

  const ExactnessReport r = verify_exactness(pair_long_exact_sequence(pair, 1));
  CHECK(r.exact);
  CHECK(r.checked > 0);

  CHECK(pair.solve_inclusion(0, SparseVector::unit(1)) == SparseVector::unit(1));
}

TEST_CASE("exactness checker") {
  ExactSequence good{{"Z", "Z", "Z/2"}, {{0}, {0}, {2}}, {IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{1}})}};
  const auto r = verify_exactness(good);
  CHECK(r.exact);
  CHECK(r.checked == 1);

  ExactSequence bad{{"Z", "Z", "Z"}, {{0}, {0}, {0}}, {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})}};
  const auto b = verify_exactness(bad);
  CHECK_FALSE(b.exact);
  CHECK(b.failures.size() == 1);

  ExactSequence mismatched{{"Z", "Z2"}, {{0}, {0, 0}}, {IntMatrix::from_rows({{1}})}};
  CHECK_ERROR_CODE(verify_exactness(mismatched), ErrorCode::DimensionMismatch);
}

TEST_CASE("inverting isomorphisms of presented groups") {
  // Z ⊕ Z/2 with the shear (x, t) -> (x, x + t).
  const std::vector<Integer> orders{0, 2};
  const IntMatrix m = IntMatrix::from_rows({{1, 0}, {1, 1}});
  const IntMatrix inv = invert_group_isomorphism(m, orders, orders);
  CHECK(compose(m, inv, orders) == IntMatrix::identity(2));
  CHECK(compose(inv, m, orders) == IntMatrix::identity(2));

  CHECK(invert_group_isomorphism(IntMatrix::from_rows({{-1}}), {0}, {0}) == IntMatrix::from_rows({{-1}}));
  CHECK(invert_group_isomorphism(IntMatrix::from_rows({{2}}), {3}, {3}) == IntMatrix::from_rows({{2}}));
  CHECK_ERROR_CODE(invert_group_isomorphism(IntMatrix::from_rows({{2}}), {0}, {0}), ErrorCode::NotAnIsomorphism);
  CHECK_ERROR_CODE(invert_group_isomorphism(IntMatrix::from_rows({{0}}), {2}, {2}), ErrorCode::NotAnIsomorphism);
  CHECK(normalize_columns(IntMatrix::from_rows({{5}, {-1}}), {0, 2}) == IntMatrix::from_rows({{5}, {1}}));
}
