#include "lcalc/cgroup.hpp"

#include "lcalc/error.hpp"

namespace lcalc {

CGroupElement::CGroupElement(const LGroupSpec& lgroup, Matrix g, Scalar z, WeilElement w)
    : lgroup_(lgroup), g_(std::move(g)), z_(std::move(z)), w_(std::move(w)), zg_(Matrix::zero(g_.field(), 0, 0)) {
  const auto real = DualRealization::for_lgroup(lgroup_);
  if (!real.contains(g_)) throw PreconditionError(std::string("g is not in the ") + real.kind_name() + " realization");
  if (z_.is_zero()) throw PreconditionError("z must be nonzero");
  if (!z_.field()->same_as(*g_.field())) throw PreconditionError("g and z live over different fields");
  zg_ = real.z_G(g_.field());
}

CGroupElement CGroupElement::flipped() const {
  CGroupElement r = *this;
  r.g_ = g_ * zg_;
  r.z_ = -z_;
  return r;
}

bool CGroupElement::is_canonical() const { return z_ < -z_; }

CGroupElement CGroupElement::canonical() const { return is_canonical() ? *this : flipped(); }

CGroupElement operator*(const CGroupElement& a, const CGroupElement& b) {
  if (!(a.lgroup_ == b.lgroup_)) throw PreconditionError("C-group elements for different groups");
  return CGroupElement(a.lgroup_, a.g_ * b.g_, a.z_ * b.z_, a.w_ * b.w_).canonical();
}

bool operator==(const CGroupElement& a, const CGroupElement& b) {
  if (!(a.lgroup_ == b.lgroup_)) return false;
  const CGroupElement ca = a.canonical(), cb = b.canonical();
  return ca.z_ == cb.z_ && ca.g_ == cb.g_ && ca.w_ == cb.w_;
}

bool same_class_bruteforce(const CGroupElement& a, const CGroupElement& b) {
  if (!(a.w() == b.w())) return false;
  if (a.g() == b.g() && a.z() == b.z()) return true;
  const CGroupElement f = a.flipped();
  return f.g() == b.g() && f.z() == b.z();
}

CGroupElement i_c(const LGroupSpec& lgroup, const Matrix& g, const WeilElement& w, const Scalar& c, unsigned degree) {
  const Scalar q = Scalar::rational(c.field(), c.field()->q()).pow(degree);
  if (c * c != q) throw PreconditionError("i_c: c^2 = " + (c * c).to_string() + " differs from q = " + q.to_string());
  return CGroupElement(lgroup, g, c.pow(w.d_F()), w).canonical();
}

}  // namespace lcalc
