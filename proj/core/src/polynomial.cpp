#include "lcalc/polynomial.hpp"

#include <sstream>

#include "lcalc/error.hpp"

namespace lcalc {

Polynomial::Polynomial(FieldPtr field, std::vector<Scalar> coefficients)
    : field_(std::move(field)), coefs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::x(FieldPtr field) {
  return Polynomial(field, {Scalar::zero(field), Scalar::one(field)});
}

Polynomial Polynomial::constant(const Scalar& s) { return Polynomial(s.field(), {s}); }

void Polynomial::trim() {
  while (!coefs_.empty() && coefs_.back().is_zero()) coefs_.pop_back();
}

const Scalar& Polynomial::leading() const {
  if (coefs_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
  return coefs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Scalar inv = leading().inverse();
  std::vector<Scalar> c = coefs_;
  for (auto& e : c) e *= inv;
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> c;
  for (std::size_t i = 1; i < coefs_.size(); ++i) c.push_back(coefs_[i] * mpq_class(static_cast<long>(i)));
  return Polynomial(field_, std::move(c));
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc(field_);
  for (auto it = coefs_.rbegin(); it != coefs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& a) const {
  if (!a.is_square()) throw PreconditionError("polynomial evaluated at non-square matrix");
  Matrix acc = Matrix::zero(field_, a.rows(), a.cols());
  const Matrix id = Matrix::identity(field_, a.rows());
  for (auto it = coefs_.rbegin(); it != coefs_.rend(); ++it) acc = acc * a + id * *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coefs_.size() < rhs.coefs_.size()) coefs_.resize(rhs.coefs_.size(), Scalar(field_));
  for (std::size_t i = 0; i < rhs.coefs_.size(); ++i) coefs_[i] += rhs.coefs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coefs_.size() < rhs.coefs_.size()) coefs_.resize(rhs.coefs_.size(), Scalar(field_));
  for (std::size_t i = 0; i < rhs.coefs_.size(); ++i) coefs_[i] -= rhs.coefs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Scalar> c(a.coefs_.size() + b.coefs_.size() - 1, Scalar(a.field_));
  for (std::size_t i = 0; i < a.coefs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefs_.size(); ++j) c[i + j] += a.coefs_[i] * b.coefs_[j];
  }
  return Polynomial(a.field_, std::move(c));
}

std::string Polynomial::to_string() const {
  if (coefs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coefs_.size(); i-- > 0;) {
    if (coefs_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << coefs_[i].to_string() << ")";
    if (i > 0) out << "*x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const FieldPtr& f = a.field();
  std::vector<Scalar> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const long db = b.degree();
  if (a.degree() < db) return {Polynomial(f), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1), Scalar(f));
  const Scalar inv_lead = b.leading().inverse();
  for (long k = a.degree() - db; k >= 0; --k) {
    const Scalar factor = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor.is_zero()) continue;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= factor * bc[static_cast<std::size_t>(j)];
  }
  rem.erase(rem.begin() + db, rem.end());
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_squarefree(const Polynomial& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

Polynomial minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) throw PreconditionError("minimal polynomial of non-square matrix");
  const FieldPtr& f = a.field();
  const std::size_t n = a.rows();
  // Columns are vec(A^0), vec(A^1), ...; stop at the first linear dependency.
  std::vector<Vector> powers;
  Matrix pw = Matrix::identity(f, n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector v(pw.entries().begin(), pw.entries().end());
    powers.push_back(std::move(v));
    const Matrix m = from_columns(f, n * n, powers);
    const auto ns = nullspace(m);
    if (!ns.empty()) {
      // Dependency is unique up to scale since the previous powers were independent.
      return Polynomial(f, ns.front()).monic();
    }
    pw = pw * a;
  }
  throw VerificationError("minimal polynomial: no dependency up to degree n");
}

Polynomial characteristic_poly(const Matrix& a) {
  return Polynomial(a.field(), characteristic_polynomial(a));
}

bool is_semisimple(const Matrix& a) { return is_squarefree(minimal_polynomial(a)); }

JordanDecomposition jordan_decomposition(const Matrix& a) {
  if (!is_invertible(a)) throw PreconditionError("jordan_decomposition: matrix is singular");
  const Polynomial p = squarefree_part(minimal_polynomial(a));
  const Polynomial dp = p.derivative();
  // Newton iteration S <- S - P(S) P'(S)^{-1}; exact in characteristic 0 and
  // terminates after at most ceil(log2 n) + 1 steps.
  Matrix s = a;
  for (std::size_t step = 0; step < 2 * a.rows() + 2; ++step) {
    const Matrix ps = p(s);
    if (ps.is_zero()) {
      Matrix u = inverse(s) * a;
      return {std::move(s), std::move(u)};
    }
    s = s - ps * inverse(dp(s));
  }
  throw VerificationError("jordan_decomposition: Newton iteration did not terminate");
}

}  // namespace lcalc
