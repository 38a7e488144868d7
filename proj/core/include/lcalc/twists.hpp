#pragma once

#include <string>
#include <vector>

#include "lcalc/cgroup.hpp"
#include "lcalc/params.hpp"
#include "lcalc/repcalc.hpp"

namespace lcalc {

/// Multiplies Phi by c^{-1} (the value of |w|^{1/2} at sigma). GL(2) only.
ParamData bh_twist(const ParamData& p, const Scalar& c);

/// Multiplies Phi by the central matrix z_G.
ParamData omega_zG_twist(const ParamData& p);

/// Applies c -> -c to every entry. Unavailable when c is rational.
ParamData conjugate_c(const ParamData& p);

/// l-adic C-parameter: the base parameter together with the z-component on
/// generators (z(sigma) given, z = 1 on inertia and on t). The stored pair is
/// one representative; comparisons use canonical forms.
class CParam {
 public:
  CParam(ParamData base, Scalar z_frobenius);

  const ParamData& base() const noexcept { return base_; }
  const Scalar& z_frobenius() const noexcept { return z_frobenius_; }

  CGroupElement at_frobenius() const;
  CGroupElement at_inertia(std::size_t i) const;
  CGroupElement at_tame() const;
  /// sigma, gamma_0, ..., t.
  std::vector<CGroupElement> generator_images() const;
  /// z(sigma)^2 == q^degree, i.e. t_Gm of the image of sigma is |sigma|^{-1}.
  bool satisfies_c_condition() const;

  /// Same class: canonical forms agree at every generator.
  friend bool operator==(const CParam& a, const CParam& b);

 private:
  ParamData base_;
  Scalar z_frobenius_;
};

/// phi_c = i_c o phi.
CParam to_cparam(const ParamData& p, const Scalar& c);
/// Representative-level conjugation by g in the dual group.
CParam conjugate(const CParam& a, const Matrix& g);
CParam conjugate_c(const CParam& a);
/// The representative (g z_G, -z) at sigma; same class.
CParam flip_at_frobenius(const CParam& a);

/// Values of a representation of the Weil model on the generators.
struct TannakianValue {
  RepExpr rep;
  Matrix at_frobenius;
  std::vector<Matrix> at_inertia;
  Matrix at_tame;

  friend bool operator==(const TannakianValue& a, const TannakianValue& b);
};

/// Generator relations: F(t) unipotent with F(sigma) log F(t) F(sigma)^{-1} = q^{-1} log F(t),
/// inertia values commuting with F(t) and generating a finite group normalized by F(sigma).
ValidationReport check_weil_relations(const TannakianValue& v, const Scalar& q);

/// r o phi with each isotypic piece V_[mu] twisted by c^{d_G([mu]) d_F(w)}.
TannakianValue tannakian_twist(const ParamData& p, const RepExpr& r, const Scalar& c);

/// Exponents d_G of the isotypic pieces of r, in the order of isotypic_decomposition().
std::vector<long> default_exponents(const RepExpr& r, const DualRealization& real, const FieldPtr& field);

/// r(g, w) composed with z^{n_i} on the i-th isotypic piece, for an arbitrary
/// representative (g, z). No well-definedness check.
Matrix rtilde_raw(const RepExpr& r, const DualRealization& real, const Matrix& g, const Scalar& z,
                  const WeilElement& w, const std::vector<long>& exponents);

/// True when the extension with these G_m-exponents is trivial on (z_G, -1),
/// i.e. descends to the C-group. Computed by evaluating at (z_G, -1).
bool descends_to_cgroup(const RepExpr& r, const DualRealization& real, const FieldPtr& field,
                        const std::vector<long>& exponents);

/// The extension r~ with exponents d_G([mu]); asserts it descends.
Matrix rtilde_extend(const RepExpr& r, const CGroupElement& a);
/// r~ on the generator images of a C-parameter (t via exp N).
TannakianValue rtilde_values(const CParam& a, const RepExpr& r);

/// r~ o phi_c == F_{phi,c}(r) on all generators.
bool check_wtrF(const ParamData& p, const RepExpr& r, const Scalar& c);
/// F_{phi,-c}(r) == F_{omega(phi),c}(r); throws UnsupportedError for rational c.
bool check_minus_c(const ParamData& p, const RepExpr& r, const Scalar& c);

/// Conjugacy of Tannakian values (as representations of the Weil model).
EquivResult equiv(const TannakianValue& a, const TannakianValue& b, std::size_t budget = 256);

struct ChiReport {
  std::vector<Scalar> chi;  // on sigma, gamma_0, ..., t
  bool chi_squared_trivial = false;
  bool equal_as_classes = false;
  std::string narrative;
};
/// For GL(n): recovers chi with phi(w) = phi'(w) [(chi^{1-n}, chi)], checks
/// chi^2 = 1 and concludes equality of classes. Throws PreconditionError if
/// the r~ values or t_Gm values differ, or no consistent chi exists.
ChiReport chi_recovery(const CParam& a, const CParam& b, const RepExpr& r);

struct ObstructionReport {
  Scalar det_twisted_frobenius;
  Scalar q_inverse;
  bool matches = false;
  std::string conclusion;
};
/// For a determinant-one GL(2) parameter: det of the twisted Frobenius is q^{-1} != 1.
ObstructionReport pgl2_obstruction_demo(const ParamData& p, const Scalar& c);

}  // namespace lcalc
