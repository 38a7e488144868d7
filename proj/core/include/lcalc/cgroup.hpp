#pragma once

#include "lcalc/matrix.hpp"
#include "lcalc/realization.hpp"
#include "lcalc/weil.hpp"

namespace lcalc {

/// Point [(g, z, w)] of (G-hat x G_m) / <(z_G, -1)> x W_F for a split group,
/// with g in the matrix realization of G-hat.
class CGroupElement {
 public:
  /// Throws PreconditionError if g is outside the realization or z = 0.
  CGroupElement(const LGroupSpec& lgroup, Matrix g, Scalar z, WeilElement w);

  const Matrix& g() const noexcept { return g_; }
  const Scalar& z() const noexcept { return z_; }
  const WeilElement& w() const noexcept { return w_; }
  const Matrix& z_G() const noexcept { return zg_; }
  const LGroupSpec& lgroup() const noexcept { return lgroup_; }

  /// The other representative (g z_G, -z).
  CGroupElement flipped() const;
  /// Representative whose z has the lexicographically smaller coordinate vector.
  CGroupElement canonical() const;
  bool is_canonical() const;

  /// z^2; independent of the representative.
  Scalar t_Gm() const { return z_ * z_; }

  /// Componentwise product (the W_F-action on G-hat is trivial for split groups).
  friend CGroupElement operator*(const CGroupElement& a, const CGroupElement& b);
  /// Equality of classes, via canonical forms.
  friend bool operator==(const CGroupElement& a, const CGroupElement& b);

 private:
  LGroupSpec lgroup_;
  Matrix g_;
  Scalar z_;
  WeilElement w_;
  Matrix zg_;
};

/// Direct comparison of both representatives of a against b (reference check).
bool same_class_bruteforce(const CGroupElement& a, const CGroupElement& b);

/// i_c(g, w) = [(g, c^{d_F(w)}, w)]; requires c^2 = q^degree.
CGroupElement i_c(const LGroupSpec& lgroup, const Matrix& g, const WeilElement& w, const Scalar& c,
                  unsigned degree = 1);

}  // namespace lcalc
