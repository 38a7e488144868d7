#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcalc/scalar.hpp"

namespace lcalc {

/// Dense row-major matrix over K.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix zero(FieldPtr field, std::size_t rows, std::size_t cols) { return Matrix(std::move(field), rows, cols); }
  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix scalar(const Scalar& s, std::size_t n);
  static Matrix diagonal(const std::vector<Scalar>& entries);
  /// Elementary matrix E_{ij} (0-based).
  static Matrix unit(FieldPtr field, std::size_t n, std::size_t i, std::size_t j);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_rationals(FieldPtr field, const std::vector<std::vector<long>>& rows);
  /// Column vector.
  static Matrix column(const std::vector<Scalar>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const FieldPtr& field() const noexcept { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Scalar> entries() const noexcept { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);
  Matrix operator-() const;
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  Matrix transpose() const;
  Scalar trace() const;
  /// Applies `f` to every entry.
  template <typename F>
  Matrix map(F&& f) const {
    Matrix r = *this;
    for (auto& e : r.data_) e = f(e);
    return r;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  void check_shape(const Matrix& other) const;

  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

using Vector = std::vector<Scalar>;

Matrix power(const Matrix& m, long exponent);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const std::vector<Matrix>& blocks);
Matrix commutator(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& m, const Vector& v);

/// Row echelon data of a matrix: reduced form plus pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon reduced_row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> try_inverse(const Matrix& m);
/// Throws PreconditionError when singular.
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Basis of {x : m x = 0}; each basis vector has a 1 in one free column and
/// zeros in the other free columns.
std::vector<Vector> nullspace(const Matrix& m);
/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Matrix whose columns are the given vectors.
Matrix from_columns(FieldPtr field, std::size_t rows, const std::vector<Vector>& columns);
/// Keeps a maximal linearly independent prefix-greedy subset.
std::vector<Vector> independent_subset(FieldPtr field, const std::vector<Vector>& vectors);

bool is_nilpotent(const Matrix& m);
/// exp(a N) for nilpotent N as the terminating series.
Matrix exp_nilpotent(const Matrix& n, const Scalar& a);
Matrix exp_nilpotent(const Matrix& n);
/// log(u) for unipotent u; throws PreconditionError if u - I is not nilpotent.
Matrix log_unipotent(const Matrix& u);

/// Characteristic polynomial coefficients (low to high, monic) via Faddeev-LeVerrier.
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

/// Eigenspaces of a matrix that is diagonalizable with integer eigenvalues in
/// [-bound, bound]; throws PreconditionError otherwise. Sorted by eigenvalue.
struct Eigenspace {
  long value;
  std::vector<Vector> basis;
};
std::vector<Eigenspace> integer_eigenspaces(const Matrix& h, long bound);
/// sum_k s^k P_k over the integer eigenspaces of h (s^h for an integral grading h).
Matrix graded_power(const Matrix& h, const Scalar& s);

/// Linear space of X (rows x cols) with X * source[i] == target[i] * X for all i,
/// optionally restricted to diagonal X. Returned as a matrix basis.
std::vector<Matrix> intertwiner_basis(const std::vector<Matrix>& source, const std::vector<Matrix>& target,
                                      bool diagonal_only = false);

/// Deterministic sweep for an invertible element in span(basis). Candidates are
/// the basis elements, then integer combinations drawn from a fixed sequence.
/// Returns the first invertible candidate accepted by `accept`.
template <typename Accept>
std::optional<Matrix> find_invertible(const std::vector<Matrix>& basis, std::size_t budget, Accept&& accept);

std::optional<Matrix> find_invertible(const std::vector<Matrix>& basis, std::size_t budget = 256);

/// Coefficient vector of the j-th sweep candidate (deterministic).
std::vector<long> sweep_coefficients(std::size_t basis_size, std::size_t attempt);

template <typename Accept>
std::optional<Matrix> find_invertible(const std::vector<Matrix>& basis, std::size_t budget, Accept&& accept) {
  if (basis.empty()) return std::nullopt;
  const FieldPtr& field = basis.front().field();
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    const std::vector<long> coefs = sweep_coefficients(basis.size(), attempt);
    Matrix cand = Matrix::zero(field, basis.front().rows(), basis.front().cols());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (coefs[i] != 0) cand += basis[i] * Scalar::rational(field, coefs[i]);
    }
    if (is_invertible(cand) && accept(cand)) return cand;
  }
  return std::nullopt;
}

}  // namespace lcalc
