#include "lcalc/error.hpp"
#include "lcalc/realization.hpp"

namespace lcalc {

DualRealization DualRealization::for_lgroup(const LGroupSpec& lgroup) {
  if (!lgroup.is_split()) throw UnsupportedError("matrix realizations are only provided for split groups");
  if (!lgroup.group()) throw UnsupportedError("explicit root data have no matrix realization of the dual group");
  const GroupDescriptor& g = *lgroup.group();
  BasedRootDatum datum = BasedRootDatum::build(g);
  switch (g.kind) {
    case GroupDescriptor::Kind::GL: return DualRealization(Kind::GeneralLinear, g.n, std::move(datum));
    case GroupDescriptor::Kind::PGL: return DualRealization(Kind::SpecialLinear, g.n, std::move(datum));
    case GroupDescriptor::Kind::Torus:
      if (g.n == 0) throw UnsupportedError("Torus(0) has no matrix realization");
      return DualRealization(Kind::Torus, g.n, std::move(datum));
    case GroupDescriptor::Kind::SL:
      throw UnsupportedError("SL(" + std::to_string(g.n) + ") has dual group PGL(" + std::to_string(g.n) +
                             "), which has no faithful matrix realization here");
  }
  throw UnsupportedError("unsupported group");
}

const char* DualRealization::kind_name() const noexcept {
  switch (kind_) {
    case Kind::GeneralLinear: return "GL";
    case Kind::SpecialLinear: return "SL";
    case Kind::Torus: return "Torus";
  }
  return "";
}

bool DualRealization::contains(const Matrix& g) const {
  if (g.rows() != n_ || g.cols() != n_) return false;
  switch (kind_) {
    case Kind::GeneralLinear: return is_invertible(g);
    case Kind::SpecialLinear: return determinant(g).is_one();
    case Kind::Torus: return g.is_diagonal() && is_invertible(g);
  }
  return false;
}

bool DualRealization::lie_contains(const Matrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) return false;
  switch (kind_) {
    case Kind::GeneralLinear: return true;
    case Kind::SpecialLinear: return x.trace().is_zero();
    case Kind::Torus: return x.is_diagonal();
  }
  return false;
}

Matrix DualRealization::torus_signs(const FieldPtr& field, const std::vector<int>& signs) const {
  std::vector<Scalar> diag;
  if (kind_ == Kind::SpecialLinear) {
    // Coordinates of X*(T) for PGL(n) are in the basis e_i - e_n.
    int last = 1;
    for (int s : signs) {
      diag.push_back(Scalar::rational(field, s));
      last *= s;
    }
    diag.push_back(Scalar::rational(field, last));
  } else {
    for (int s : signs) diag.push_back(Scalar::rational(field, s));
  }
  if (diag.size() != n_) throw VerificationError("torus_signs: wrong number of coordinates");
  return Matrix::diagonal(diag);
}

Matrix DualRealization::z_G(const FieldPtr& field) const {
  return torus_signs(field, delta_and_zG(group_datum_).z_signs);
}

std::vector<Matrix> DualRealization::raising(const FieldPtr& field) const {
  std::vector<Matrix> out;
  if (kind_ == Kind::Torus) return out;
  for (std::size_t i = 0; i + 1 < n_; ++i) out.push_back(Matrix::unit(field, n_, i, i + 1));
  return out;
}

std::vector<Matrix> DualRealization::lowering(const FieldPtr& field) const {
  std::vector<Matrix> out;
  if (kind_ == Kind::Torus) return out;
  for (std::size_t i = 0; i + 1 < n_; ++i) out.push_back(Matrix::unit(field, n_, i + 1, i));
  return out;
}

IntVec DualRealization::weight_to_cocharacter(const IntVec& weight) const {
  if (weight.size() != n_) throw PreconditionError("weight of wrong length");
  if (kind_ != Kind::SpecialLinear) return weight;
  IntVec mu(n_ - 1);
  for (std::size_t i = 0; i + 1 < n_; ++i) mu[i] = weight[i] - weight[n_ - 1];
  return mu;
}

}  // namespace lcalc
