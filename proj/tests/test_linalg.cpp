#include <random>

#include "doctest.h"
#include "tdpair/eigen.hpp"

using namespace tdpair;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

FieldElement q(const char* s) { return parse_element(s, Q); }

Matrix random_matrix(const FieldDescriptor& fd, std::size_t rows, std::size_t cols, std::mt19937_64& rng, long range = 3) {
  std::uniform_int_distribution<long> d(-range, range);
  Matrix m(fd, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = FieldElement(fd, d(rng));
  return m;
}

}  // namespace

TEST_CASE("eigen_data of diagonal and Jordan matrices") {
  const auto d = eigen_data(Matrix::from_ints(Q, {{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}}));
  REQUIRE(d.eigenvalues.size() == 3);
  CHECK(d.eigenvalues[0] == q("-1"));
  CHECK(d.eigenvalues[1] == q("0"));
  CHECK(d.eigenvalues[2] == q("1"));
  CHECK(d.multiplicities == std::vector<std::size_t>{1, 2, 1});
  CHECK(d.diagonalizable);

  const auto j = eigen_data(Matrix::from_ints(Q, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}));
  REQUIRE(j.eigenvalues.size() == 1);
  CHECK(j.eigenvalues[0] == q("0"));
  CHECK(j.multiplicities == std::vector<std::size_t>{1});
  CHECK_FALSE(j.diagonalizable);

  // Rotation by 90 degrees has no rational eigenvalues but splits over GF(5).
  const auto rot = Matrix::from_ints(Q, {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
  const auto r = eigen_data(rot);
  CHECK(r.eigenvalues.size() == 1);
  CHECK_FALSE(r.diagonalizable);
  const auto gf5 = FieldDescriptor::prime(5);
  const auto r5 = eigen_data(Matrix::from_ints(gf5, {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
  CHECK(r5.eigenvalues.size() == 2);  // 2 and 3
  CHECK(r5.diagonalizable);
}

TEST_CASE("primitive_idempotents of a diagonal matrix") {
  const auto m = Matrix::from_ints(Q, {{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}});
  const auto e = primitive_idempotents(m, {q("1"), q("0"), q("-1")});
  CHECK(e[0] == Matrix::from_ints(Q, {{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
  CHECK(e[1] == Matrix::from_ints(Q, {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}}));
  CHECK(e[2] == Matrix::from_ints(Q, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}}));
  CHECK_THROWS_AS(primitive_idempotents(m, {q("1"), q("1"), q("-1")}), LinalgError);
  CHECK_THROWS_AS(primitive_idempotents(m, {q("1"), q("0")}), LinalgError);
  const auto jordan = Matrix::from_ints(Q, {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}});
  CHECK_THROWS_AS(primitive_idempotents(jordan, {q("0"), q("1"), q("2")}), LinalgError);
}

TEST_CASE("idempotent identities for random diagonalizable matrices") {
  std::mt19937_64 rng(11);
  for (const auto& fd : {Q, FieldDescriptor::prime(7), FieldDescriptor::prime(101)}) {
    for (int trial = 0; trial < 25; ++trial) {
      Matrix s = random_matrix(fd, 4, 4, rng);
      if (determinant(s).is_zero()) continue;
      std::vector<FieldElement> diag{FieldElement(fd, 2L), FieldElement(fd, -1L), FieldElement(fd, -1L), FieldElement(fd, 5L)};
      const Matrix m = s * Matrix::diagonal(fd, diag) * invert(s);
      const std::vector<FieldElement> thetas{FieldElement(fd, 5L), FieldElement(fd, 2L), FieldElement(fd, -1L)};
      const auto e = primitive_idempotents(m, thetas);
      Matrix total(fd, 4, 4), weighted(fd, 4, 4);
      for (std::size_t i = 0; i < 3; ++i) {
        total = total + e[i];
        weighted = weighted + thetas[i] * e[i];
        CHECK(m * e[i] == thetas[i] * e[i]);
        CHECK(e[i] * m == thetas[i] * e[i]);
        for (std::size_t j = 0; j < 3; ++j) CHECK(e[i] * e[j] == (i == j ? e[i] : Matrix(fd, 4, 4)));
      }
      CHECK(total == Matrix::identity(fd, 4));
      CHECK(weighted == m);
    }
  }
}

TEST_CASE("subspace_combine") {
  const auto e1 = Subspace::span(Matrix::from_ints(Q, {{1}, {0}, {0}, {0}}));
  const auto e2 = Subspace::span(Matrix::from_ints(Q, {{0}, {1}, {0}, {0}}));
  const auto s = subspace_combine({e1, e2}, SubspaceOp::Sum);
  CHECK(s.dim() == 2);
  CHECK(s == Subspace::span(Matrix::from_ints(Q, {{3, 1}, {2, -1}, {0, 0}, {0, 0}})));
  CHECK(subspace_combine({s, s}, SubspaceOp::Intersect) == s);
  CHECK(intersect(e1, e2).dim() == 0);
  CHECK_THROWS_AS(sum(e1, Subspace::zero(FieldDescriptor::prime(3), 4)), LinalgError);
  CHECK_THROWS_AS(subspace_combine({}, SubspaceOp::Sum), LinalgError);
}

TEST_CASE("dimension formula for random subspaces") {
  std::mt19937_64 rng(5);
  for (const auto& fd : {Q, FieldDescriptor::prime(2), FieldDescriptor::prime(3)}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::uniform_int_distribution<std::size_t> k(0, 4);
      const auto u = Subspace::span(random_matrix(fd, 4, k(rng), rng, 1));
      const auto w = Subspace::span(random_matrix(fd, 4, k(rng), rng, 1));
      const auto inter = intersect(u, w);
      CHECK(sum(u, w).dim() + inter.dim() == u.dim() + w.dim());
      CHECK(u.contains(inter));
      CHECK(w.contains(inter));
      CHECK(intersect(w, u) == inter);
    }
  }
}

TEST_CASE("invert") {
  CHECK(invert(Matrix::identity(Q, 4)) == Matrix::identity(Q, 4));
  const auto d = Matrix::diagonal(Q, {q("2"), q("1"), q("1"), q("3")});
  CHECK(invert(d) == Matrix::diagonal(Q, {q("1/2"), q("1"), q("1"), q("1/3")}));
  CHECK_THROWS_AS(invert(Matrix::from_ints(Q, {{1, 2, 0, 0}, {2, 4, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})), LinalgError);
  std::mt19937_64 rng(3);
  for (const auto& fd : {Q, FieldDescriptor::prime(2), FieldDescriptor::prime(13)}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix m = random_matrix(fd, 4, 4, rng, 2);
      if (rank(m) < 4) {
        CHECK_THROWS_AS(invert(m), LinalgError);
        CHECK(determinant(m).is_zero());
      } else {
        CHECK(invert(m) * m == Matrix::identity(fd, 4));
        CHECK(m * invert(m) == Matrix::identity(fd, 4));
      }
    }
  }
}

TEST_CASE("characteristic polynomial") {
  const auto m = Matrix::from_ints(Q, {{2, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {1, 0, 0, -1}});
  const auto p = characteristic_polynomial(m);
  const Polynomial expected = Polynomial::linear_factor(q("2")) * Polynomial::linear_factor(q("2")) *
                              Polynomial::linear_factor(q("3")) * Polynomial::linear_factor(q("-1"));
  CHECK(p == expected);
}

TEST_CASE("kernel") {
  const auto m = Matrix::from_ints(Q, {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 1, 1}, {0, 0, 0, 0}});
  const auto k = kernel(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
}
