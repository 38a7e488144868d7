#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "lcalc/error.hpp"
#include "lcalc/polynomial.hpp"

using namespace lcalc;
using lcalc::testing::random_invertible;
using lcalc::testing::random_matrix;

namespace {

// Leibniz expansion over permutations.
Scalar oracle_determinant(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = Scalar::zero(m.field());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Scalar term = Scalar::rational(m.field(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Plain power series, summed until the nilpotent terms vanish.
Matrix oracle_exp(const Matrix& x) {
  Matrix term = Matrix::identity(x.field(), x.rows());
  Matrix sum = term;
  for (long k = 1; k <= static_cast<long>(x.rows()); ++k) {
    term = term * x * Scalar::rational(x.field(), mpq_class(1, k));
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("determinant, inverse and rank agree with independent computations") {
  Rng rng(11);
  auto f = Field::make(4, 5);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    const Matrix m = random_matrix(f, n, n, rng);
    CHECK(determinant(m) == oracle_determinant(m));
    if (!determinant(m).is_zero()) {
      CHECK((m * inverse(m)).is_identity());
      CHECK(rank(m) == n);
    } else {
      CHECK(rank(m) < n);
      CHECK_FALSE(try_inverse(m).has_value());
    }
  }
  CHECK_THROWS_AS(inverse(Matrix::zero(f, 2, 2)), PreconditionError);
}

TEST_CASE("nullspace vectors are killed and complete") {
  Rng rng(12);
  auto f = Field::make(3, 2);
  for (int i = 0; i < 30; ++i) {
    const std::size_t r = 1 + static_cast<std::size_t>(i % 3);
    const Matrix m = random_matrix(f, r, 4, rng, true);
    const auto kernel = nullspace(m);
    CHECK(kernel.size() + rank(m) == 4);
    for (const auto& v : kernel) {
      for (const auto& x : multiply(m, v)) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("solve") {
  auto f = Field::make(1, 3);
  const Matrix m = Matrix::from_rationals(f, {{1, 2}, {3, 4}});
  const auto x = solve(m, {Scalar::rational(f, 5), Scalar::rational(f, 6)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar::rational(f, -4));
  CHECK((*x)[1] == Scalar::rational(f, mpq_class(9, 2)));
  const Matrix singular = Matrix::from_rationals(f, {{1, 2}, {2, 4}});
  CHECK_FALSE(solve(singular, {Scalar::one(f), Scalar::zero(f)}).has_value());
}

TEST_CASE("kronecker and block diagonal") {
  auto f = Field::make(1, 3);
  const Matrix a = Matrix::from_rationals(f, {{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rationals(f, {{0, 1}, {1, 0}});
  const Matrix k = kronecker(a, b);
  CHECK(k == Matrix::from_rationals(f, {{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}}));
  const Matrix d = block_diagonal({a, Matrix::identity(f, 1)});
  CHECK(d == Matrix::from_rationals(f, {{1, 2, 0}, {3, 4, 0}, {0, 0, 1}}));
}

TEST_CASE("log_unipotent examples") {
  auto f = Field::make(4, 5);
  CHECK(log_unipotent(Matrix::identity(f, 3)).is_zero());
  const Matrix e12 = Matrix::unit(f, 2, 0, 1);
  CHECK(log_unipotent(Matrix::identity(f, 2) + e12) == e12);

  const Matrix j = Matrix::from_rationals(f, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  const Matrix u = j - Matrix::identity(f, 3);
  const Matrix expected = u - u * u * Scalar::rational(f, mpq_class(1, 2));
  const Matrix l = log_unipotent(j);
  CHECK(l == expected);
  CHECK(oracle_exp(l) == j);
  CHECK_THROWS_AS(log_unipotent(Matrix::scalar(Scalar::rational(f, 2), 2)), PreconditionError);
}

TEST_CASE("property: exp and log are inverse on nilpotents") {
  Rng rng(13);
  auto f = Field::make(4, 5);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 6);
    const Matrix nil = random_nilpotent(f, n, rng);
    REQUIRE(is_nilpotent(nil));
    const Matrix e = exp_nilpotent(nil);
    CHECK(e == oracle_exp(nil));
    CHECK(log_unipotent(e) == nil);
  }
}

TEST_CASE("characteristic polynomial: Cayley-Hamilton and determinant") {
  Rng rng(14);
  auto f = Field::make(5, 2);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
    const Matrix m = random_matrix(f, n, n, rng);
    const Polynomial p = characteristic_poly(m);
    CHECK(p.degree() == static_cast<long>(n));
    CHECK(p(m).is_zero());
    const Scalar sign = Scalar::rational(f, n % 2 ? -1 : 1);
    CHECK(p.coefficients().front() == sign * determinant(m));
    const Polynomial mp = minimal_polynomial(m);
    CHECK(mp(m).is_zero());
    CHECK(divmod(p, mp).second.is_zero());
  }
}

TEST_CASE("minimal polynomial and semisimplicity") {
  auto f = Field::make(1, 3);
  CHECK(minimal_polynomial(Matrix::identity(f, 3)).degree() == 1);
  const Matrix j = Matrix::from_rationals(f, {{2, 1}, {0, 2}});
  CHECK(minimal_polynomial(j).degree() == 2);
  CHECK_FALSE(is_semisimple(j));
  CHECK(is_semisimple(Matrix::from_rationals(f, {{0, 1}, {2, 0}})));
  CHECK(is_squarefree(Polynomial(f, {Scalar::rational(f, -2), Scalar::zero(f), Scalar::one(f)})));
}

TEST_CASE("Jordan decomposition") {
  Rng rng(15);
  auto f = Field::make(4, 5);
  const Matrix s0 = Matrix::from_rationals(f, {{2, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  const Matrix u0 = Matrix::from_rationals(f, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  const Matrix g = random_invertible(f, 3, rng);
  const Matrix m = g * s0 * u0 * inverse(g);
  const JordanDecomposition jd = jordan_decomposition(m);
  CHECK(jd.semisimple == g * s0 * inverse(g));
  CHECK(jd.semisimple * jd.unipotent == m);
  CHECK(jd.semisimple * jd.unipotent == jd.unipotent * jd.semisimple);
  CHECK(is_nilpotent(jd.unipotent - Matrix::identity(f, 3)));
}

TEST_CASE("integer eigenspaces and graded powers") {
  auto f = Field::make(4, 5);
  const Matrix h = Matrix::from_rationals(f, {{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
  const auto spaces = integer_eigenspaces(h, 4);
  std::size_t total = 0;
  for (const auto& s : spaces) total += s.basis.size();
  CHECK(total == 3);
  const Scalar c = Scalar::sqrt_q(f);
  CHECK(graded_power(h, c) == Matrix::diagonal({c, c.inverse(), c}));
}

TEST_CASE("intertwiners and invertible search") {
  Rng rng(16);
  auto f = Field::make(4, 5);
  const Matrix a = Matrix::from_rationals(f, {{1, 1}, {0, 1}});
  const Matrix g = random_invertible(f, 2, rng);
  const Matrix b = g * a * inverse(g);
  const auto basis = intertwiner_basis({a}, {b});
  REQUIRE_FALSE(basis.empty());
  const auto x = find_invertible(basis);
  REQUIRE(x.has_value());
  CHECK(*x * a == b * *x);
  CHECK(sweep_coefficients(3, 0) == std::vector<long>{1, 0, 0});
  CHECK(sweep_coefficients(3, 3) == std::vector<long>{1, 1, 1});
}
