#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcalc/matrix.hpp"
#include "lcalc/realization.hpp"
#include "lcalc/rootdata.hpp"
#include "lcalc/weil.hpp"

namespace lcalc {

inline constexpr std::size_t kDefaultInertiaBound = 10000;

/// Matrix-level parameter: Frobenius image Phi, images of the inertia
/// generators, and the monodromy N, for the dual group of `lgroup` in its
/// matrix realization. `degree` is f for a parameter restricted to the
/// degree-f unramified extension (residue cardinality q^f).
struct ParamData {
  ParamData(LGroupSpec lgroup, Matrix frobenius, std::vector<Matrix> inertia, Matrix monodromy, unsigned degree = 1);

  LGroupSpec lgroup;
  Matrix frobenius;
  std::vector<Matrix> inertia;
  Matrix monodromy;
  unsigned degree = 1;

  const FieldPtr& field() const noexcept { return frobenius.field(); }
  std::size_t dimension() const noexcept { return frobenius.rows(); }
  DualRealization realization() const { return DualRealization::for_lgroup(lgroup); }
  /// q^degree as a scalar.
  Scalar residue_cardinality() const;
  /// |w| = q^{-degree * d_F(w)}.
  Scalar norm(const WeilElement& w) const;

  friend bool operator==(const ParamData& a, const ParamData& b);
};

/// Ad(g) applied to every component.
ParamData conjugate(const ParamData& p, const Matrix& g);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  /// Names and details of failed checks, one per line.
  std::string failures() const;
};

ValidationReport validate(const ParamData& p, std::size_t inertia_bound = kDefaultInertiaBound);
/// Throws PreconditionError listing the failed checks.
void require_valid(const ParamData& p, std::size_t inertia_bound = kDefaultInertiaBound);

/// Elements of the group generated by the inertia images.
/// Throws PreconditionError once more than `bound` elements are found.
std::vector<Matrix> inertia_group(const ParamData& p, std::size_t bound = kDefaultInertiaBound);

/// Closure of a set of invertible n x n matrices under multiplication.
/// Throws PreconditionError once more than `bound` elements are found.
std::vector<Matrix> finite_group_closure(const std::vector<Matrix>& generators, const FieldPtr& field, std::size_t n,
                                         std::size_t bound = kDefaultInertiaBound);

/// tau(w): product of letter images with sigma -> Phi, gamma_i -> rho_i, t -> I.
Matrix tau(const ParamData& p, const WeilElement& w);
/// exp(aN) tau(w).
Matrix eval_wd(const ParamData& p, const Scalar& a, const WeilElement& w);
/// l-adic evaluation: t^s -> exp(sN), other letters as in tau.
Matrix eval_ladic(const ParamData& p, const WeilElement& w);

bool frobenius_semisimple(const ParamData& p);
/// Replaces Phi by its semisimple part.
ParamData frobenius_semisimplification(const ParamData& p);

struct ConjugatedParam {
  ParamData param;
  Matrix conjugator;  // Ad(conjugator) carries the input to `param`
};

/// Re-expresses p with respect to sigma' = sigma t^s: Phi' = Phi exp(sN),
/// conjugator exp(s/(q-1) N). Throws VerificationError if the identities fail.
ConjugatedParam rebase_frobenius(const ParamData& p, const mpq_class& s);

/// Replaces N by aN and searches for g with g Phi g^{-1} = Phi, g rho g^{-1} = rho,
/// g N g^{-1} = aN in the dual group. The conjugator is empty when none is found.
struct RescaleResult {
  ParamData param;
  std::optional<Matrix> conjugator;
};
RescaleResult rescale_tame(const ParamData& p, const Scalar& a, std::size_t budget = 256);

enum class EquivVerdict { Equivalent, NotEquivalent, Inconclusive, GlEquivalentOnly };
const char* to_string(EquivVerdict v);

struct EquivResult {
  EquivVerdict verdict = EquivVerdict::Inconclusive;
  std::optional<Matrix> conjugator;  // g with Ad(g) first = second
  std::string reason;
};

/// Conjugacy of parameters by the dual group.
EquivResult equiv(const ParamData& a, const ParamData& b, std::size_t budget = 256);

/// Simultaneous conjugacy of two equally long tuples of square matrices, with
/// the conjugator taken in the given realization. Shared by equiv() and the
/// SL2-type and Tannakian comparisons.
EquivResult equiv_tuples(const std::vector<Matrix>& a, const std::vector<Matrix>& b, const DualRealization& realization,
                         std::size_t budget = 256);

/// Rescales an invertible X into the realization (det correction for SL(n));
/// nullopt when no rational scalar does it.
std::optional<Matrix> realize_conjugator(const DualRealization& realization, const Matrix& x);

/// Basis of {X : X Phi = Phi X, X rho_i = rho_i X, X N = N X}.
std::vector<Matrix> centralizer_basis(const ParamData& p);

/// Restriction to the degree-f unramified extension: Phi -> Phi^f, q -> q^f.
ParamData restrict_unramified(const ParamData& p, unsigned f);

/// Parameter of SL2-type: an sl2-triple (E, H, F) and the W_F-part (Phi_0, rho)
/// commuting with it.
struct SL2Param {
  SL2Param(LGroupSpec lgroup, Matrix e, Matrix h, Matrix f, Matrix frob0, std::vector<Matrix> inertia,
           unsigned degree = 1);

  LGroupSpec lgroup;
  Matrix e;
  Matrix h;
  Matrix f;
  Matrix frob0;
  std::vector<Matrix> inertia;
  unsigned degree = 1;

  const FieldPtr& field() const noexcept { return frob0.field(); }
  std::size_t dimension() const noexcept { return frob0.rows(); }

  friend bool operator==(const SL2Param& a, const SL2Param& b);
};

ValidationReport validate(const SL2Param& p, std::size_t inertia_bound = kDefaultInertiaBound);
void require_valid(const SL2Param& p, std::size_t inertia_bound = kDefaultInertiaBound);

/// Phi = c^{-H} Phi_0, N = E. Requires c^2 = q^degree.
ParamData sl2_to_wd(const SL2Param& p, const Scalar& c);
/// Graded Jacobson-Morozov: E = N, H and F chosen in the Phi-graded
/// centralizer of the inertia image, Phi_0 = c^H Phi.
SL2Param wd_to_sl2(const ParamData& p, const Scalar& c);
/// Conjugacy of SL2-type parameters (all of E, H, F, Phi_0, rho).
EquivResult equiv(const SL2Param& a, const SL2Param& b, std::size_t budget = 256);

/// Standard triple and Frobenius block of Sp(m) with unramified character u:
/// E superdiagonal, H = diag(m-1, m-3, ..., 1-m), Phi = u diag(1, q, ..., q^{m-1}).
struct SpBlock {
  Matrix e;
  Matrix h;
  Matrix f;
  Matrix frobenius;  // WD Frobenius with N = e
};
SpBlock sp_block(const FieldPtr& field, unsigned m, const Scalar& u, unsigned degree = 1);

/// Throws PreconditionError unless c^2 = q^degree.
void require_sqrt_q(const Scalar& c, const Scalar& q_power);

}  // namespace lcalc
