#include <sstream>

#include "lcalc/error.hpp"
#include "lcalc/matrix.hpp"

namespace lcalc {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Scalar(field_)) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::scalar(const Scalar& s, std::size_t n) {
  Matrix m(s.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
  if (entries.empty()) throw PreconditionError("diagonal of no entries");
  Matrix m(entries.front().field(), entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::unit(FieldPtr field, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(field, n, n);
  m(i, j) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.front().size() : 0;
  Matrix m(std::move(field), nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_rationals(FieldPtr field, const std::vector<std::vector<long>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.front().size() : 0;
  Matrix m(field, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = Scalar::rational(field, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries) {
  if (entries.empty()) throw PreconditionError("empty column");
  Matrix m(entries.front().field(), entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

void Matrix::check_shape(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw PreconditionError("matrix shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " vs " +
                            std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
  }
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  check_shape(rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  check_shape(rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& e : r.data_) e = -e;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw PreconditionError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                            " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Matrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

Scalar Matrix::trace() const {
  Scalar t(field_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw PreconditionError("block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw PreconditionError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.data_ == b.data_;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (auto c = a.data_[i] <=> b.data_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).to_string();
    out << "]";
  }
  out << "]";
  return out.str();
}

Matrix power(const Matrix& m, long exponent) {
  if (!m.is_square()) throw PreconditionError("power of non-square matrix");
  Matrix base = exponent < 0 ? inverse(m) : m;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Matrix result = Matrix::identity(m.field(), m.rows());
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return r;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw PreconditionError("block_diagonal of no blocks");
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    nr += b.rows();
    nc += b.cols();
  }
  Matrix r(blocks.front().field(), nr, nc);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    r.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vector multiply(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw PreconditionError("apply: shape mismatch");
  Vector r(m.rows(), Scalar(m.field()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
    }
  }
  return r;
}

Echelon reduced_row_echelon(const Matrix& input) {
  Matrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).pivots.size(); }

Scalar determinant(const Matrix& input) {
  if (!input.is_square()) throw PreconditionError("determinant of non-square matrix");
  Matrix m = input;
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(m.field());
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar f = m(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) {
        if (!m(col, j).is_zero()) m(r, j) -= f * m(col, j);
      }
    }
  }
  return det;
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(m.field(), n));
  Echelon e = reduced_row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw PreconditionError("matrix is singular");
  return *std::move(inv);
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::vector<Vector> nullspace(const Matrix& m) {
  const Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw PreconditionError("solve: shape mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  const Echelon e = reduced_row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), Scalar(m.field()));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

Matrix from_columns(FieldPtr field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(std::move(field), rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw PreconditionError("from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::vector<Vector> independent_subset(FieldPtr field, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  const Matrix m = from_columns(field, vectors.front().size(), vectors);
  const Echelon e = reduced_row_echelon(m);
  std::vector<Vector> out;
  for (auto p : e.pivots) out.push_back(vectors[p]);
  return out;
}

bool is_nilpotent(const Matrix& m) {
  if (!m.is_square()) return false;
  return power(m, static_cast<long>(m.rows())).is_zero();
}

Matrix exp_nilpotent(const Matrix& n, const Scalar& a) {
  if (!is_nilpotent(n)) throw PreconditionError("exp_nilpotent: matrix is not nilpotent");
  const FieldPtr& f = n.field();
  const Matrix an = n * a;
  Matrix result = Matrix::identity(f, n.rows());
  Matrix term = Matrix::identity(f, n.rows());
  for (std::size_t k = 1; k < n.rows() + 1; ++k) {
    term = term * an * Scalar::rational(f, mpq_class(1, k));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

Matrix exp_nilpotent(const Matrix& n) { return exp_nilpotent(n, Scalar::one(n.field())); }

Matrix log_unipotent(const Matrix& u) {
  if (!u.is_square()) throw PreconditionError("log_unipotent: non-square input");
  const FieldPtr& f = u.field();
  const Matrix m = u - Matrix::identity(f, u.rows());
  if (!is_nilpotent(m)) throw PreconditionError("log_unipotent: input is not unipotent");
  Matrix result = Matrix::zero(f, u.rows(), u.cols());
  Matrix pw = m;
  for (std::size_t k = 1; k <= u.rows() && !pw.is_zero(); ++k) {
    const long sign = (k % 2 == 1) ? 1 : -1;
    result += pw * Scalar::rational(f, mpq_class(sign, k));
    pw = pw * m;
  }
  return result;
}

std::vector<Scalar> characteristic_polynomial(const Matrix& a) {
  if (!a.is_square()) throw PreconditionError("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  const FieldPtr& f = a.field();
  // Faddeev-LeVerrier: M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
  std::vector<Scalar> coef(n + 1, Scalar(f));
  coef[n] = Scalar::one(f);
  Matrix mk = Matrix::zero(f, n, n);
  const Matrix id = Matrix::identity(f, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk + id * coef[n - k + 1];
    coef[n - k] = -(a * mk).trace() * mpq_class(1, k);
  }
  return coef;
}

std::vector<Eigenspace> integer_eigenspaces(const Matrix& h, long bound) {
  if (!h.is_square()) throw PreconditionError("eigenspaces of non-square matrix");
  const FieldPtr& f = h.field();
  const std::size_t n = h.rows();
  std::vector<Eigenspace> out;
  std::size_t total = 0;
  for (long k = -bound; k <= bound && total < n; ++k) {
    auto basis = nullspace(h - Matrix::scalar(Scalar::rational(f, k), n));
    if (basis.empty()) continue;
    total += basis.size();
    out.push_back({k, std::move(basis)});
  }
  if (total != n) throw PreconditionError("matrix is not diagonalizable with integer eigenvalues");
  return out;
}

Matrix graded_power(const Matrix& h, const Scalar& s) {
  const FieldPtr& f = h.field();
  const std::size_t n = h.rows();
  const auto spaces = integer_eigenspaces(h, static_cast<long>(2 * n + 2));
  std::vector<Vector> columns;
  std::vector<Scalar> diag;
  for (const auto& sp : spaces) {
    const Scalar factor = s.pow(sp.value);
    for (const auto& v : sp.basis) {
      columns.push_back(v);
      diag.push_back(factor);
    }
  }
  const Matrix basis = from_columns(f, n, columns);
  return basis * Matrix::diagonal(diag) * inverse(basis);
}

std::vector<Matrix> intertwiner_basis(const std::vector<Matrix>& source, const std::vector<Matrix>& target,
                                      bool diagonal_only) {
  if (source.size() != target.size()) throw PreconditionError("intertwiner: list length mismatch");
  if (source.empty()) throw PreconditionError("intertwiner: no constraints");
  const FieldPtr& f = source.front().field();
  // X is (rows x cols): X * P = Q * X with P cols x cols and Q rows x rows.
  const std::size_t cols = source.front().rows();
  const std::size_t rows = target.front().rows();
  const std::size_t unknowns = rows * cols;
  std::vector<Vector> equations;
  for (std::size_t t = 0; t < source.size(); ++t) {
    const Matrix& p = source[t];
    const Matrix& q = target[t];
    if (p.rows() != cols || p.cols() != cols || q.rows() != rows || q.cols() != rows) {
      throw PreconditionError("intertwiner: inconsistent shapes");
    }
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        Vector eq(unknowns, Scalar(f));
        bool nonzero = false;
        // (XP)_{ij} = sum_k X_{ik} P_{kj}
        for (std::size_t k = 0; k < cols; ++k) {
          if (!p(k, j).is_zero()) {
            eq[i * cols + k] += p(k, j);
            nonzero = true;
          }
        }
        // (QX)_{ij} = sum_k Q_{ik} X_{kj}
        for (std::size_t k = 0; k < rows; ++k) {
          if (!q(i, k).is_zero()) {
            eq[k * cols + j] -= q(i, k);
            nonzero = true;
          }
        }
        if (nonzero) equations.push_back(std::move(eq));
      }
    }
  }
  if (diagonal_only) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (i == j) continue;
        Vector eq(unknowns, Scalar(f));
        eq[i * cols + j] = Scalar::one(f);
        equations.push_back(std::move(eq));
      }
    }
  }
  Matrix system(f, equations.size(), unknowns);
  for (std::size_t r = 0; r < equations.size(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = equations[r][c];
  }
  std::vector<Matrix> basis;
  for (const auto& v : nullspace(system)) {
    Matrix x(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) x(i, j) = v[i * cols + j];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<long> sweep_coefficients(std::size_t basis_size, std::size_t attempt) {
  std::vector<long> c(basis_size, 0);
  if (attempt < basis_size) {
    c[attempt] = 1;
    return c;
  }
  if (attempt == basis_size) {
    std::fill(c.begin(), c.end(), 1);
    return c;
  }
  // Small integers from a fixed linear congruential walk, never all zero.
  std::uint64_t state = 0x9E3779B97F4A7C15ULL ^ (attempt * 0xBF58476D1CE4E5B9ULL);
  bool any = false;
  for (std::size_t i = 0; i < basis_size; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    c[i] = static_cast<long>((state >> 33) % 9) - 4;
    any = any || c[i] != 0;
  }
  if (!any) c[attempt % basis_size] = 1;
  return c;
}

std::optional<Matrix> find_invertible(const std::vector<Matrix>& basis, std::size_t budget) {
  return find_invertible(basis, budget, [](const Matrix&) { return true; });
}

}  // namespace lcalc
