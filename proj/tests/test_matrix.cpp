#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "liext/linalg.hpp"
#include "liext/matrix.hpp"

using namespace liext;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rref identity and rank-1 cases") {
  Matrix id2 = Matrix::identity(2);
  auto r = rref(id2);
  CHECK(r.m == id2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});

  Matrix m{{1, 2}, {2, 4}};
  auto r2 = rref(m);
  CHECK(r2.m == Matrix{{1, 2}, {0, 0}});
  CHECK(r2.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel basis trivial cases") {
  CHECK(kernel_basis(Matrix::identity(3)).empty());
  auto k = kernel_basis(Matrix::zero(3, 3));
  REQUIRE(k.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(k[i] == Vector::unit(3, i));
}

TEST_CASE("kernel vectors are exact solutions and rank-nullity holds") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m = random_matrix(rng, 4, 6);
    auto k = kernel_basis(m);
    CHECK(rank(m) + k.size() == m.cols());
    for (const auto& v : k) CHECK((m * v).is_zero());
  }
}

TEST_CASE("determinant basics") {
  CHECK(determinant(Matrix::identity(4)) == Rational(1));
  // cyclic permutation matrix: even permutation, det 1
  Matrix p{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK(determinant(p) == Rational(1));
  CHECK_THROWS_AS(determinant(Matrix(2, 3)), DimensionError);
  // det(j) = j42*j53*j61 pattern with unit entries
  Matrix j{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK(determinant(j) == Rational(1) * Rational(1) * Rational(1));
}

TEST_CASE("determinant is multiplicative on random 3x3 matrices") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("inverse basics") {
  CHECK(inverse(Matrix::identity(3)) == Matrix::identity(3));
  Matrix d{{2, 0}, {0, Rational(1, 2)}};
  CHECK(inverse(d) == Matrix{{Rational(1, 2), 0}, {0, 2}});
  Matrix p{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  Matrix pinv = inverse(p);
  CHECK(pinv == Matrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  CHECK(p * pinv == Matrix::identity(3));
  CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), SingularMatrixError);
}

TEST_CASE("inverse two-sided on random invertible matrices") {
  std::mt19937 rng(17);
  int done = 0;
  while (done < 40) {
    Matrix m = random_matrix(rng, 4, 4);
    if (determinant(m).is_zero()) continue;
    Matrix mi = inverse(m);
    CHECK(m * mi == Matrix::identity(4));
    CHECK(mi * m == Matrix::identity(4));
    ++done;
  }
}

TEST_CASE("column space basis is canonical") {
  Matrix m{{1, 2, 0}, {0, 0, 1}, {1, 2, 1}};
  Matrix b = column_space_basis(m);
  CHECK(b.cols() == 2);
  CHECK(rank(Matrix::hstack(b, m)) == 2);
}
