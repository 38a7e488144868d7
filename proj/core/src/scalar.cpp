#include "lcalc/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "lcalc/error.hpp"

namespace lcalc {
namespace {

using IntPoly = std::vector<mpz_class>;  // low to high

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials with monic divisor.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quo(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const mpz_class coef = num[k];
    if (coef == 0) continue;
    quo[k - dn] = coef;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= coef * den[i];
  }
  trim(quo);
  return quo;
}

IntPoly cyclotomic(unsigned n) {
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(p, cyclotomic(d));
  }
  return p;
}

bool is_prime_power(long q) {
  if (q < 2) return false;
  long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

long squarefree_part(long q) {
  long d = 1;
  for (long p = 2; p * p <= q; ++p) {
    int e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    if (e % 2 == 1) d *= p;
  }
  return d * q;
}

// Solves M x = b over Q for square nonsingular M; returns nullopt-like empty on singularity.
bool solve_rational(std::vector<std::vector<mpq_class>> m, std::vector<mpq_class> b, std::vector<mpq_class>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    const mpq_class inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const mpq_class f = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      b[r] -= f * b[col];
    }
  }
  x = std::move(b);
  return true;
}

}  // namespace

bool Field::sqrt_in_cyclotomic(unsigned cyclotomic_order, long q) {
  const long d = squarefree_part(q);
  if (d == 1) return true;
  const long conductor = (d % 4 == 1) ? d : 4 * d;
  return cyclotomic_order % conductor == 0;
}

FieldPtr Field::make(FieldSpec spec) {
  if (spec.cyclotomic_order == 0 || spec.cyclotomic_order > 512) {
    throw PreconditionError("cyclotomic order must lie in [1, 512], got " + std::to_string(spec.cyclotomic_order));
  }
  if (spec.q < 2 || !is_prime_power(spec.q)) {
    throw PreconditionError("q must be a prime power >= 2, got " + std::to_string(spec.q));
  }
  std::shared_ptr<Field> f(new Field());
  f->spec_ = spec;
  const mpz_class qz(spec.q);
  f->rational_c_ = sqrt(qz);
  f->c_rational_ = (f->rational_c_ * f->rational_c_ == qz);
  if (!f->c_rational_) {
    f->rational_c_ = 0;
    if (sqrt_in_cyclotomic(spec.cyclotomic_order, spec.q)) {
      throw UnsupportedError("sqrt(" + std::to_string(spec.q) + ") lies in Q(zeta_" +
                             std::to_string(spec.cyclotomic_order) + "); c^2 - q is reducible there");
    }
  }
  f->cyclotomic_ = cyclotomic(spec.cyclotomic_order);
  const std::size_t phi = f->cyclotomic_.size() - 1;
  f->phi_ = phi;

  // z^k for k < max(N, 2 phi - 1), reduced into the power basis.
  const std::size_t count = std::max<std::size_t>(spec.cyclotomic_order, 2 * phi);
  std::vector<std::vector<mpq_class>> powers;
  std::vector<mpq_class> cur(phi, 0);
  cur[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    powers.push_back(cur);
    // multiply by z: shift up, then reduce z^phi = -sum a_i z^i
    std::vector<mpq_class> next(phi, 0);
    mpq_class top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) next[i] = cur[i - 1];
    if (phi == 1) next[0] = 0;
    for (std::size_t i = 0; i < phi; ++i) next[i] -= top * mpq_class(f->cyclotomic_[i]);
    cur = std::move(next);
  }
  f->zeta_powers_.assign(powers.begin(), powers.begin() + spec.cyclotomic_order);
  for (std::size_t k = 0; k + 1 < phi; ++k) f->reduction_.push_back(powers[phi + k]);
  return f;
}

void Field::cyclotomic_multiply(const mpq_class* a, const mpq_class* b, mpq_class* out) const {
  const std::size_t phi = phi_;
  if (phi == 1) {
    out[0] = a[0] * b[0];
    return;
  }
  std::vector<mpq_class> conv(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b[j] == 0) continue;
      conv[i + j] += a[i] * b[j];
    }
  }
  for (std::size_t i = 0; i < phi; ++i) out[i] = conv[i];
  for (std::size_t k = 0; k + 1 < phi; ++k) {
    const mpq_class& coef = conv[phi + k];
    if (coef == 0) continue;
    const auto& red = reduction_[k];
    for (std::size_t i = 0; i < phi; ++i) {
      if (red[i] != 0) out[i] += coef * red[i];
    }
  }
}

Scalar::Scalar(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw PreconditionError("scalar requires a field");
  coords_.assign(field_->dimension(), 0);
}

Scalar::Scalar(FieldPtr field, std::vector<mpq_class> coords) : field_(std::move(field)), coords_(std::move(coords)) {}

Scalar Scalar::rational(FieldPtr field, const mpq_class& value) {
  Scalar s(std::move(field));
  s.coords_[0] = value;
  s.coords_[0].canonicalize();
  return s;
}

Scalar Scalar::zeta(FieldPtr field, long k) {
  const long n = field->cyclotomic_order();
  const long r = ((k % n) + n) % n;
  Scalar s(std::move(field));
  const auto& pw = s.field_->power_of_zeta(static_cast<unsigned>(r));
  std::copy(pw.begin(), pw.end(), s.coords_.begin());
  return s;
}

Scalar Scalar::sqrt_q(FieldPtr field) {
  Scalar s(std::move(field));
  if (s.field_->c_rational()) {
    s.coords_[0] = mpq_class(s.field_->rational_c());
  } else {
    s.coords_[s.field_->cyclotomic_degree()] = 1;
  }
  return s;
}

Scalar Scalar::from_coordinates(FieldPtr field, std::vector<mpq_class> coords) {
  if (coords.size() != field->dimension()) {
    throw PreconditionError("coordinate vector has wrong length");
  }
  for (auto& c : coords) c.canonicalize();
  return Scalar(std::move(field), std::move(coords));
}

bool Scalar::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& c) { return c == 0; });
}

bool Scalar::is_one() const noexcept {
  if (coords_[0] != 1) return false;
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const mpq_class& c) { return c == 0; });
}

bool Scalar::is_rational() const noexcept {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const mpq_class& c) { return c == 0; });
}

mpq_class Scalar::to_rational() const {
  if (!is_rational()) throw PreconditionError("scalar " + to_string() + " is not rational");
  return coords_[0];
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_ && !field_->same_as(*other.field_)) {
    throw PreconditionError("scalars belong to different fields");
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Scalar& Scalar::operator*=(const mpq_class& rhs) {
  for (auto& c : coords_) c *= rhs;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (rhs.is_rational()) return *this *= rhs.coords_[0];
  if (is_rational()) {
    const mpq_class a = coords_[0];
    coords_ = rhs.coords_;
    return *this *= a;
  }
  const Field& f = *field_;
  const std::size_t phi = f.cyclotomic_degree();
  std::vector<mpq_class> out(coords_.size(), 0);
  if (f.c_rational()) {
    f.cyclotomic_multiply(coords_.data(), rhs.coords_.data(), out.data());
  } else {
    // (a0 + a1 c)(b0 + b1 c) = (a0 b0 + q a1 b1) + (a0 b1 + a1 b0) c
    std::vector<mpq_class> t(phi, 0);
    const mpq_class* a0 = coords_.data();
    const mpq_class* a1 = coords_.data() + phi;
    const mpq_class* b0 = rhs.coords_.data();
    const mpq_class* b1 = rhs.coords_.data() + phi;
    f.cyclotomic_multiply(a0, b0, out.data());
    f.cyclotomic_multiply(a1, b1, t.data());
    const mpq_class q(f.q());
    for (std::size_t i = 0; i < phi; ++i) out[i] += q * t[i];
    f.cyclotomic_multiply(a0, b1, out.data() + phi);
    f.cyclotomic_multiply(a1, b0, t.data());
    for (std::size_t i = 0; i < phi; ++i) out[phi + i] += t[i];
  }
  coords_ = std::move(out);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  if (is_rational()) return rational(field_, 1 / coords_[0]);
  // Solve (x * basis_j) y = 1 for the coordinate vector y.
  const std::size_t dim = coords_.size();
  std::vector<std::vector<mpq_class>> m(dim, std::vector<mpq_class>(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<mpq_class> e(dim, 0);
    e[j] = 1;
    const Scalar col = *this * Scalar(field_, std::move(e));
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = col.coords_[i];
  }
  std::vector<mpq_class> rhs(dim, 0);
  rhs[0] = 1;
  std::vector<mpq_class> y;
  if (!solve_rational(std::move(m), std::move(rhs), y)) {
    throw PreconditionError("element " + to_string() + " is not invertible");
  }
  return Scalar(field_, std::move(y));
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Scalar result = one(field_);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Scalar Scalar::conjugate_c() const {
  if (field_->c_rational()) {
    throw UnsupportedError("c -> -c is not an automorphism when q is a perfect square");
  }
  Scalar r = *this;
  const std::size_t phi = field_->cyclotomic_degree();
  for (std::size_t i = phi; i < r.coords_.size(); ++i) r.coords_[i] = -r.coords_[i];
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  const std::size_t phi = field_->cyclotomic_degree();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const mpq_class& coef = coords_[i];
    if (coef == 0) continue;
    const bool has_c = i >= phi;
    const std::size_t zexp = i % phi;
    std::string basis;
    if (has_c) basis = "c";
    if (zexp > 0) {
      if (!basis.empty()) basis += "*";
      basis += (zexp == 1) ? std::string("z") : "z^" + std::to_string(zexp);
    }
    const bool negative = coef < 0;
    const mpq_class mag = abs(coef);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    if (basis.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << basis;
    } else {
      out << mag.get_str() << "*" << basis;
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const FieldPtr& field) : text_(text), field_(field) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Scalar term() {
    Scalar acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  mpz_class integer(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    std::string digits;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      if (text_[pos_] == '-') digits.push_back('-');
      ++pos_;
      skip_ws();
    }
    const std::size_t digit_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits.push_back(text_[pos_++]);
    if (pos_ == digit_start) {
      pos_ = start;
      fail("expected integer");
    }
    return mpz_class(digits);
  }

  Scalar factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '-') {
      ++pos_;
      return -factor();
    }
    if (ch == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (ch == 'c') {
      ++pos_;
      return Scalar::sqrt_q(field_);
    }
    if (ch == 'z') {
      ++pos_;
      long e = 1;
      if (accept('^')) {
        const mpz_class big = integer(true);
        const mpz_class n(field_->cyclotomic_order());
        mpz_class r = big % n;
        if (r < 0) r += n;
        e = r.get_si();
      }
      return Scalar::zeta(field_, e);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const mpz_class num = integer(false);
      mpz_class den = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        den = integer(false);
        if (den == 0) {
          pos_ = at;
          fail("division by zero");
        }
      }
      mpq_class value(num, den);
      value.canonicalize();
      return Scalar::rational(field_, value);
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  const FieldPtr& field_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const FieldPtr& field) {
  return ScalarParser(text, field).parse();
}

}  // namespace lcalc
