#pragma once

// Exact arithmetic in K = Q(zeta_N)[c]/(c^2 - q).
//
// Elements are stored as rational coordinates over the basis
//   { z^i, c*z^i : 0 <= i < phi(N) }
// where z is a primitive N-th root of unity reduced by the N-th cyclotomic
// polynomial. When sqrt(q) is rational, c is that rational number and only
// the first phi(N) coordinates are used.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace lcalc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Parameters of the coefficient field: cyclotomic order N and residue cardinality q.
struct FieldSpec {
  unsigned cyclotomic_order = 1;
  long q = 2;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Field {
 public:
  /// Validates (N, q) and precomputes the reduction tables.
  /// Throws PreconditionError when q is not a prime power, and
  /// UnsupportedError when sqrt(q) lies in Q(zeta_N) without being rational
  /// (the quotient ring would not be a field and c could not be rendered
  /// as a rational).
  static FieldPtr make(FieldSpec spec);
  static FieldPtr make(unsigned cyclotomic_order, long q) { return make(FieldSpec{cyclotomic_order, q}); }

  const FieldSpec& spec() const noexcept { return spec_; }
  unsigned cyclotomic_order() const noexcept { return spec_.cyclotomic_order; }
  long q() const noexcept { return spec_.q; }

  /// True when q is a perfect square, so c = sqrt(q) is rational and c -> -c
  /// is not a field automorphism.
  bool c_rational() const noexcept { return c_rational_; }
  /// sqrt(q) when c_rational(); zero otherwise.
  const mpz_class& rational_c() const noexcept { return rational_c_; }

  /// Euler phi of N, the degree of Q(zeta_N).
  std::size_t cyclotomic_degree() const noexcept { return phi_; }
  /// Number of rational coordinates of an element.
  std::size_t dimension() const noexcept { return c_rational_ ? phi_ : 2 * phi_; }

  /// Coefficients (low to high) of the N-th cyclotomic polynomial.
  const std::vector<mpz_class>& cyclotomic_polynomial() const noexcept { return cyclotomic_; }

  /// Coordinates over Q(zeta_N) of z^k for 0 <= k < N.
  const std::vector<mpq_class>& power_of_zeta(unsigned k) const { return zeta_powers_.at(k % spec_.cyclotomic_order); }

  bool same_as(const Field& other) const noexcept { return spec_ == other.spec_; }

  /// Classical test: the conductor of Q(sqrt(q)) divides N (q not a square).
  static bool sqrt_in_cyclotomic(unsigned cyclotomic_order, long q);

 private:
  Field() = default;

  // Multiplies two elements of Q(zeta_N) given by phi-length coordinate vectors.
  void cyclotomic_multiply(const mpq_class* a, const mpq_class* b, mpq_class* out) const;

  FieldSpec spec_;
  bool c_rational_ = false;
  mpz_class rational_c_;
  std::size_t phi_ = 1;
  std::vector<mpz_class> cyclotomic_;
  std::vector<std::vector<mpq_class>> zeta_powers_;
  // reduction_[k] = coordinates of z^(phi + k), for 0 <= k < phi - 1.
  std::vector<std::vector<mpq_class>> reduction_;

  friend class Scalar;
};

/// Immutable element of K. Every scalar carries its field; mixing fields throws.
class Scalar {
 public:
  /// Zero of `field`.
  explicit Scalar(FieldPtr field);

  static Scalar zero(FieldPtr field) { return Scalar(std::move(field)); }
  static Scalar one(FieldPtr field) { return rational(std::move(field), 1); }
  static Scalar rational(FieldPtr field, const mpq_class& value);
  static Scalar rational(FieldPtr field, long value) { return rational(std::move(field), mpq_class(value)); }
  /// z^k, exponent reduced mod N.
  static Scalar zeta(FieldPtr field, long k);
  /// The distinguished square root c of q.
  static Scalar sqrt_q(FieldPtr field);
  static Scalar from_coordinates(FieldPtr field, std::vector<mpq_class> coords);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<mpq_class>& coordinates() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  /// Throws PreconditionError when the element is not rational.
  mpq_class to_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }
  Scalar& operator*=(const mpq_class& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator*(Scalar a, const mpq_class& b) { return a *= b; }
  friend Scalar operator*(const mpq_class& b, Scalar a) { return a *= b; }

  /// Multiplicative inverse; throws PreconditionError on zero.
  Scalar inverse() const;
  /// Integer power; negative exponents go through inverse().
  Scalar pow(long exponent) const;
  /// The automorphism fixing Q(zeta_N) and sending c to -c.
  /// Throws UnsupportedError for c_rational fields.
  Scalar conjugate_c() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Lexicographic order on coordinate vectors (for canonical forms and containers).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Canonical rendering: sorted basis terms, e.g. "2 - z^3 + 1/2*c*z".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

 private:
  Scalar(FieldPtr field, std::vector<mpq_class> coords);
  void check_same_field(const Scalar& other) const;

  FieldPtr field_;
  std::vector<mpq_class> coords_;
};

/// Parses the scalar grammar:
///   expr := term (("+"|"-") term)*;  term := factor ("*" factor)*;
///   factor := rational | "z" ["^" int] | "c" | "(" expr ")" | "-" factor;
///   rational := int ["/" posint].
/// Throws ParseError with the offending position.
Scalar parse_scalar(std::string_view text, const FieldPtr& field);

}  // namespace lcalc
