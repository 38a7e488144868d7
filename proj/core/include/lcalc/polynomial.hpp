#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lcalc/matrix.hpp"
#include "lcalc/scalar.hpp"

namespace lcalc {

/// Univariate polynomial over K, coefficients low to high, no trailing zeros.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
  Polynomial(FieldPtr field, std::vector<Scalar> coefficients);

  static Polynomial x(FieldPtr field);
  static Polynomial constant(const Scalar& s);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Scalar>& coefficients() const noexcept { return coefs_; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coefs_.size()) - 1; }
  bool is_zero() const noexcept { return coefs_.empty(); }
  const Scalar& leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar operator()(const Scalar& x) const;
  Matrix operator()(const Matrix& a) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coefs_ == b.coefs_; }

  std::string to_string() const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Scalar> coefs_;
};

/// Quotient and remainder; throws PreconditionError when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
bool is_squarefree(const Polynomial& p);
/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// Monic minimal polynomial of a square matrix over K.
Polynomial minimal_polynomial(const Matrix& a);
/// Monic characteristic polynomial.
Polynomial characteristic_poly(const Matrix& a);
/// True iff the minimal polynomial is squarefree (diagonalizable over an algebraic closure).
bool is_semisimple(const Matrix& a);

/// Multiplicative Jordan decomposition A = S U with S semisimple, U unipotent,
/// S U = U S; S is a polynomial in A. Throws PreconditionError for singular A.
struct JordanDecomposition {
  Matrix semisimple;
  Matrix unipotent;
};
JordanDecomposition jordan_decomposition(const Matrix& a);

}  // namespace lcalc
