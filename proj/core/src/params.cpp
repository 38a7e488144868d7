#include "lcalc/params.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "lcalc/error.hpp"
#include "lcalc/polynomial.hpp"

namespace lcalc {
namespace {

void check_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw PreconditionError(std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
  }
}

void check_field(const Matrix& m, const FieldPtr& f, const char* what) {
  if (!m.field()->same_as(*f)) throw PreconditionError(std::string(what) + " lives over a different field");
}

}  // namespace

std::vector<Matrix> finite_group_closure(const std::vector<Matrix>& gens, const FieldPtr& field, std::size_t n,
                                         std::size_t bound) {
  std::set<Matrix> seen;
  std::deque<Matrix> queue;
  const Matrix id = Matrix::identity(field, n);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const Matrix g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      Matrix h = g * s;
      if (seen.insert(h).second) {
        if (seen.size() > bound) {
          throw PreconditionError("inertia image has more than " + std::to_string(bound) +
                                  " elements (not finite or bound too small)");
        }
        queue.push_back(std::move(h));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

CheckResult check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, passed ? std::string() : std::move(detail)};
}

std::optional<mpq_class> rational_root(const mpq_class& r, unsigned n) {
  if (n == 1) return r;
  if (r < 0 && n % 2 == 0) return std::nullopt;
  const mpz_class num = abs(r.get_num());
  const mpz_class den = r.get_den();
  mpz_class a, b;
  if (!mpz_root(a.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(b.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
  mpq_class root(r < 0 ? -a : a, b);
  root.canonicalize();
  return root;
}

Vector vec(const Matrix& m) { return Vector(m.entries().begin(), m.entries().end()); }

// Coefficients x with sum_k x_k images[k] = target, or nullopt.
std::optional<Vector> solve_in_span(const std::vector<Matrix>& images, const Matrix& target) {
  const FieldPtr& f = target.field();
  std::vector<Vector> cols;
  for (const auto& m : images) cols.push_back(vec(m));
  if (cols.empty()) {
    if (target.is_zero()) return Vector{};
    return std::nullopt;
  }
  return solve(from_columns(f, target.rows() * target.cols(), cols), vec(target));
}

Matrix combine(const std::vector<Matrix>& basis, const Vector& coefs, const FieldPtr& f, std::size_t n) {
  Matrix r = Matrix::zero(f, n, n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!coefs[k].is_zero()) r += basis[k] * coefs[k];
  }
  return r;
}

std::vector<Matrix> param_tuple(const ParamData& p) {
  std::vector<Matrix> t{p.frobenius, p.monodromy};
  t.insert(t.end(), p.inertia.begin(), p.inertia.end());
  return t;
}

std::vector<Matrix> sl2_tuple(const SL2Param& p) {
  std::vector<Matrix> t{p.e, p.h, p.f, p.frob0};
  t.insert(t.end(), p.inertia.begin(), p.inertia.end());
  return t;
}

bool tuples_conjugate_by(const std::vector<Matrix>& a, const std::vector<Matrix>& b, const Matrix& g) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (g * a[i] != b[i] * g) return false;
  }
  return true;
}

}  // namespace

ParamData::ParamData(LGroupSpec lg, Matrix frob, std::vector<Matrix> inert, Matrix mono, unsigned deg)
    : lgroup(std::move(lg)), frobenius(std::move(frob)), inertia(std::move(inert)), monodromy(std::move(mono)),
      degree(deg) {
  const std::size_t n = frobenius.rows();
  check_square(frobenius, n, "frobenius");
  check_square(monodromy, n, "monodromy");
  check_field(monodromy, field(), "monodromy");
  for (const auto& g : inertia) {
    check_square(g, n, "inertia image");
    check_field(g, field(), "inertia image");
  }
  if (degree == 0) throw PreconditionError("unramified degree must be positive");
}

Scalar ParamData::residue_cardinality() const { return Scalar::rational(field(), field()->q()).pow(degree); }

Scalar ParamData::norm(const WeilElement& w) const { return residue_cardinality().pow(-w.d_F()); }

bool operator==(const ParamData& a, const ParamData& b) {
  return a.lgroup == b.lgroup && a.degree == b.degree && a.frobenius == b.frobenius && a.inertia == b.inertia &&
         a.monodromy == b.monodromy;
}

ParamData conjugate(const ParamData& p, const Matrix& g) {
  const Matrix gi = inverse(g);
  std::vector<Matrix> inertia;
  for (const auto& r : p.inertia) inertia.push_back(g * r * gi);
  return ParamData(p.lgroup, g * p.frobenius * gi, std::move(inertia), g * p.monodromy * gi, p.degree);
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string ValidationReport::failures() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    if (!c.passed) out << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  return out.str();
}

std::vector<Matrix> inertia_group(const ParamData& p, std::size_t bound) {
  return finite_group_closure(p.inertia, p.field(), p.dimension(), bound);
}

ValidationReport validate(const ParamData& p, std::size_t inertia_bound) {
  ValidationReport report;
  const std::size_t n = p.dimension();
  std::optional<DualRealization> real;
  try {
    real = p.realization();
    report.checks.push_back(check("realization", real->dimension() == n,
                                  "dual group realized in dimension " + std::to_string(real->dimension()) +
                                      ", parameter has dimension " + std::to_string(n)));
  } catch (const UnsupportedError& e) {
    report.checks.push_back(check("realization", false, e.what()));
  }
  const bool invertible = is_invertible(p.frobenius);
  report.checks.push_back(check("frobenius_invertible", invertible, "Phi is singular"));

  std::optional<std::vector<Matrix>> group;
  try {
    group = inertia_group(p, inertia_bound);
    report.checks.push_back(check("inertia_finite", true));
  } catch (const PreconditionError& e) {
    report.checks.push_back(check("inertia_finite", false, e.what()));
  }

  report.checks.push_back(check("monodromy_nilpotent", is_nilpotent(p.monodromy), "N is not nilpotent"));

  if (invertible) {
    const Matrix lhs = p.frobenius * p.monodromy * inverse(p.frobenius);
    const Matrix rhs = p.monodromy * p.residue_cardinality().inverse();
    report.checks.push_back(check("frobenius_monodromy", lhs == rhs, "Phi N Phi^-1 != q^-1 N"));
  } else {
    report.checks.push_back(check("frobenius_monodromy", false, "Phi is singular"));
  }

  bool commute = true;
  for (const auto& g : p.inertia) commute = commute && g * p.monodromy == p.monodromy * g;
  report.checks.push_back(check("inertia_monodromy", commute, "some inertia image does not commute with N"));

  if (group && invertible) {
    const std::set<Matrix> elements(group->begin(), group->end());
    const Matrix fi = inverse(p.frobenius);
    bool normal = true;
    for (const auto& g : p.inertia) {
      normal = normal && elements.count(p.frobenius * g * fi) && elements.count(fi * g * p.frobenius);
    }
    report.checks.push_back(check("frobenius_normalizes_inertia", normal, "Phi does not normalize the inertia image"));
  } else {
    report.checks.push_back(check("frobenius_normalizes_inertia", false, "prerequisite failed"));
  }

  if (real && real->dimension() == n) {
    bool member = real->contains(p.frobenius) && real->lie_contains(p.monodromy);
    for (const auto& g : p.inertia) member = member && real->contains(g);
    report.checks.push_back(check("dual_group_membership", member,
                                  std::string("images do not lie in the ") + real->kind_name() + " realization"));
  }
  return report;
}

void require_valid(const ParamData& p, std::size_t inertia_bound) {
  const auto report = validate(p, inertia_bound);
  if (!report.ok()) throw PreconditionError("invalid parameter:\n" + report.failures());
}

namespace {

Matrix letter_product(const ParamData& p, const WeilElement& w, bool ladic) {
  const FieldPtr& f = p.field();
  const std::size_t n = p.dimension();
  Matrix r = Matrix::identity(f, n);
  for (const auto& l : w.letters()) {
    switch (l.kind) {
      case WeilLetter::Kind::Frobenius: r = r * power(p.frobenius, l.exponent); break;
      case WeilLetter::Kind::Inertia:
        if (l.index >= p.inertia.size()) {
          throw PreconditionError("Weil element uses inertia generator " + std::to_string(l.index) +
                                  " but the parameter has " + std::to_string(p.inertia.size()));
        }
        r = r * power(p.inertia[l.index], l.exponent);
        break;
      case WeilLetter::Kind::Tame:
        if (ladic) r = r * exp_nilpotent(p.monodromy, Scalar::rational(f, l.tame));
        break;
    }
  }
  return r;
}

}  // namespace

Matrix tau(const ParamData& p, const WeilElement& w) { return letter_product(p, w, false); }

Matrix eval_wd(const ParamData& p, const Scalar& a, const WeilElement& w) {
  require_valid(p);
  return exp_nilpotent(p.monodromy, a) * tau(p, w);
}

Matrix eval_ladic(const ParamData& p, const WeilElement& w) {
  require_valid(p);
  return letter_product(p, w, true);
}

bool frobenius_semisimple(const ParamData& p) { return is_semisimple(p.frobenius); }

ParamData frobenius_semisimplification(const ParamData& p) {
  require_valid(p);
  ParamData out = p;
  out.frobenius = jordan_decomposition(p.frobenius).semisimple;
  require_valid(out);
  return out;
}

ConjugatedParam rebase_frobenius(const ParamData& p, const mpq_class& s) {
  require_valid(p);
  const FieldPtr& f = p.field();
  const Scalar q = p.residue_cardinality();
  const Scalar sv = Scalar::rational(f, s);
  ParamData out = p;
  out.frobenius = p.frobenius * exp_nilpotent(p.monodromy, sv);
  const Matrix g = exp_nilpotent(p.monodromy, sv / (q - Scalar::one(f)));
  if (conjugate(p, g) != out) throw VerificationError("rebase_frobenius: conjugator does not intertwine");
  require_valid(out);
  return {std::move(out), g};
}

RescaleResult rescale_tame(const ParamData& p, const Scalar& a, std::size_t budget) {
  require_valid(p);
  if (a.is_zero()) throw PreconditionError("rescale_tame: scale must be nonzero");
  ParamData out = p;
  out.monodromy = p.monodromy * a;
  const auto real = p.realization();
  if (a.is_one() || p.monodromy.is_zero()) return {std::move(out), Matrix::identity(p.field(), p.dimension())};
  std::vector<Matrix> src = param_tuple(p), dst = param_tuple(out);
  const auto basis = intertwiner_basis(src, dst, real.kind() == DualRealization::Kind::Torus);
  std::optional<Matrix> g = find_invertible(basis, budget, [&](const Matrix& x) {
    return realize_conjugator(real, x).has_value();
  });
  if (g) {
    g = realize_conjugator(real, *g);
    if (conjugate(p, *g) != out) throw VerificationError("rescale_tame: conjugator does not intertwine");
  }
  return {std::move(out), std::move(g)};
}

const char* to_string(EquivVerdict v) {
  switch (v) {
    case EquivVerdict::Equivalent: return "equivalent";
    case EquivVerdict::NotEquivalent: return "not_equivalent";
    case EquivVerdict::Inconclusive: return "inconclusive";
    case EquivVerdict::GlEquivalentOnly: return "gl_equivalent_only";
  }
  return "";
}

std::optional<Matrix> realize_conjugator(const DualRealization& realization, const Matrix& x) {
  switch (realization.kind()) {
    case DualRealization::Kind::GeneralLinear: return x;
    case DualRealization::Kind::Torus:
      if (!x.is_diagonal()) return std::nullopt;
      return x;
    case DualRealization::Kind::SpecialLinear: {
      const Scalar det = determinant(x);
      if (det.is_one()) return x;
      if (!det.is_rational()) return std::nullopt;
      const auto root = rational_root(1 / det.to_rational(), static_cast<unsigned>(x.rows()));
      if (!root) return std::nullopt;
      return x * Scalar::rational(x.field(), *root);
    }
  }
  return std::nullopt;
}

EquivResult equiv_tuples(const std::vector<Matrix>& a, const std::vector<Matrix>& b, const DualRealization& real,
                         std::size_t budget) {
  if (a.size() != b.size()) throw PreconditionError("equiv: tuples of different length");
  if (a.empty()) throw PreconditionError("equiv: empty tuples");
  const std::size_t n = a.front().rows();
  for (std::size_t i = 0; i < a.size(); ++i) {
    check_square(a[i], n, "equiv input");
    check_square(b[i], n, "equiv input");
  }
  EquivResult result;
  // Conjugation invariants.
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (characteristic_polynomial(a[i]) != characteristic_polynomial(b[i])) {
      result.verdict = EquivVerdict::NotEquivalent;
      result.reason = "characteristic polynomials of component " + std::to_string(i) + " differ";
      return result;
    }
    if (rank(a[i]) != rank(b[i])) {
      result.verdict = EquivVerdict::NotEquivalent;
      result.reason = "ranks of component " + std::to_string(i) + " differ";
      return result;
    }
  }
  const bool diagonal = real.kind() == DualRealization::Kind::Torus;
  const auto hom = intertwiner_basis(a, b, diagonal);
  if (hom.empty()) {
    result.verdict = EquivVerdict::NotEquivalent;
    result.reason = "no nonzero intertwiner";
    return result;
  }
  if (!diagonal) {
    // For isomorphic modules M, M' one has Hom(M, M') = End(M) = End(M') in dimension.
    const std::size_t end_a = intertwiner_basis(a, a).size();
    const std::size_t end_b = intertwiner_basis(b, b).size();
    if (end_a != hom.size() || end_b != hom.size()) {
      result.verdict = EquivVerdict::NotEquivalent;
      result.reason = "dim Hom = " + std::to_string(hom.size()) + " but dim End = " + std::to_string(end_a) + ", " +
                      std::to_string(end_b);
      return result;
    }
  }
  std::optional<Matrix> gl_witness;
  auto found = find_invertible(hom, budget, [&](const Matrix& x) {
    if (!gl_witness) gl_witness = x;
    return realize_conjugator(real, x).has_value();
  });
  if (found) {
    Matrix g = *realize_conjugator(real, *found);
    if (!tuples_conjugate_by(a, b, g)) throw VerificationError("equiv: conjugator does not intertwine");
    result.verdict = EquivVerdict::Equivalent;
    result.conjugator = std::move(g);
    return result;
  }
  if (gl_witness) {
    result.verdict = EquivVerdict::GlEquivalentOnly;
    result.conjugator = *gl_witness;
    result.reason = "conjugate in GL(n); no determinant correction over the coefficient field";
    return result;
  }
  result.verdict = EquivVerdict::Inconclusive;
  result.reason = "intertwiner space of dimension " + std::to_string(hom.size()) +
                  " has no invertible element among " + std::to_string(budget) + " tested combinations";
  return result;
}

EquivResult equiv(const ParamData& a, const ParamData& b, std::size_t budget) {
  if (!a.field()->same_as(*b.field())) throw PreconditionError("equiv: parameters over different fields");
  if (!(a.lgroup == b.lgroup)) throw PreconditionError("equiv: parameters for different groups");
  if (a.dimension() != b.dimension()) throw PreconditionError("equiv: dimensions differ");
  if (a.inertia.size() != b.inertia.size()) throw PreconditionError("equiv: different numbers of inertia generators");
  if (a.degree != b.degree) throw PreconditionError("equiv: different unramified degrees");
  require_valid(a);
  require_valid(b);
  return equiv_tuples(param_tuple(a), param_tuple(b), a.realization(), budget);
}

std::vector<Matrix> centralizer_basis(const ParamData& p) {
  require_valid(p);
  const auto t = param_tuple(p);
  return intertwiner_basis(t, t);
}

ParamData restrict_unramified(const ParamData& p, unsigned f) {
  require_valid(p);
  if (f == 0) throw PreconditionError("restriction degree must be positive");
  ParamData out = p;
  out.frobenius = power(p.frobenius, f);
  out.degree = p.degree * f;
  require_valid(out);
  return out;
}

SL2Param::SL2Param(LGroupSpec lg, Matrix e_, Matrix h_, Matrix f_, Matrix frob0_, std::vector<Matrix> inert,
                   unsigned deg)
    : lgroup(std::move(lg)), e(std::move(e_)), h(std::move(h_)), f(std::move(f_)), frob0(std::move(frob0_)),
      inertia(std::move(inert)), degree(deg) {
  const std::size_t n = frob0.rows();
  check_square(frob0, n, "frob0");
  for (const Matrix* m : {&e, &h, &f}) {
    check_square(*m, n, "sl2 triple");
    check_field(*m, field(), "sl2 triple");
  }
  for (const auto& g : inertia) {
    check_square(g, n, "inertia image");
    check_field(g, field(), "inertia image");
  }
  if (degree == 0) throw PreconditionError("unramified degree must be positive");
}

bool operator==(const SL2Param& a, const SL2Param& b) {
  return a.lgroup == b.lgroup && a.degree == b.degree && a.e == b.e && a.h == b.h && a.f == b.f &&
         a.frob0 == b.frob0 && a.inertia == b.inertia;
}

ValidationReport validate(const SL2Param& p, std::size_t inertia_bound) {
  ValidationReport report;
  const std::size_t n = p.dimension();
  std::optional<DualRealization> real;
  try {
    real = DualRealization::for_lgroup(p.lgroup);
    report.checks.push_back(check("realization", real->dimension() == n, "dimension mismatch"));
  } catch (const UnsupportedError& e) {
    report.checks.push_back(check("realization", false, e.what()));
  }
  const Scalar two = Scalar::rational(p.field(), 2);
  report.checks.push_back(check("sl2_relations",
                                commutator(p.h, p.e) == p.e * two && commutator(p.h, p.f) == -(p.f * two) &&
                                    commutator(p.e, p.f) == p.h,
                                "[H,E] = 2E, [H,F] = -2F, [E,F] = H do not all hold"));
  report.checks.push_back(
      check("nilpotent", is_nilpotent(p.e) && is_nilpotent(p.f), "E or F is not nilpotent"));
  bool integral = true;
  try {
    integer_eigenspaces(p.h, static_cast<long>(2 * n + 2));
  } catch (const PreconditionError&) {
    integral = false;
  }
  report.checks.push_back(check("h_integral", integral, "H is not diagonalizable with integer eigenvalues"));
  report.checks.push_back(check("frob0_invertible", is_invertible(p.frob0), "Phi_0 is singular"));
  bool commute = true;
  std::vector<const Matrix*> wparts{&p.frob0};
  for (const auto& g : p.inertia) wparts.push_back(&g);
  for (const Matrix* w : wparts) {
    for (const Matrix* t : {&p.e, &p.h, &p.f}) commute = commute && (*w) * (*t) == (*t) * (*w);
  }
  report.checks.push_back(check("commutation", commute, "W_F-part does not commute with the triple"));
  std::optional<std::vector<Matrix>> group;
  try {
    group = finite_group_closure(p.inertia, p.field(), n, inertia_bound);
    report.checks.push_back(check("inertia_finite", true));
  } catch (const PreconditionError& e) {
    report.checks.push_back(check("inertia_finite", false, e.what()));
  }
  if (group && is_invertible(p.frob0)) {
    const std::set<Matrix> elements(group->begin(), group->end());
    const Matrix fi = inverse(p.frob0);
    bool normal = true;
    for (const auto& g : p.inertia) normal = normal && elements.count(p.frob0 * g * fi) && elements.count(fi * g * p.frob0);
    report.checks.push_back(check("frobenius_normalizes_inertia", normal, "Phi_0 does not normalize inertia"));
  }
  if (real && real->dimension() == n) {
    bool member = real->contains(p.frob0);
    for (const auto& g : p.inertia) member = member && real->contains(g);
    for (const Matrix* t : {&p.e, &p.h, &p.f}) member = member && real->lie_contains(*t);
    report.checks.push_back(check("dual_group_membership", member, "not in the realization"));
  }
  return report;
}

void require_valid(const SL2Param& p, std::size_t inertia_bound) {
  const auto report = validate(p, inertia_bound);
  if (!report.ok()) throw PreconditionError("invalid SL2-type parameter:\n" + report.failures());
}

void require_sqrt_q(const Scalar& c, const Scalar& q_power) {
  if (c * c != q_power) throw PreconditionError("c^2 = " + (c * c).to_string() + " but q = " + q_power.to_string());
}

ParamData sl2_to_wd(const SL2Param& p, const Scalar& c) {
  require_valid(p);
  const Scalar q = Scalar::rational(p.field(), p.field()->q()).pow(p.degree);
  require_sqrt_q(c, q);
  const Matrix phi = graded_power(p.h, c.inverse()) * p.frob0;
  ParamData out(p.lgroup, phi, p.inertia, p.e, p.degree);
  require_valid(out);
  return out;
}

SL2Param wd_to_sl2(const ParamData& p, const Scalar& c) {
  require_valid(p);
  require_sqrt_q(c, p.residue_cardinality());
  if (!frobenius_semisimple(p)) throw PreconditionError("wd_to_sl2: Frobenius is not semisimple");
  const FieldPtr& f = p.field();
  const std::size_t n = p.dimension();
  const Matrix zero = Matrix::zero(f, n, n);
  const Matrix& e = p.monodromy;
  if (e.is_zero()) return SL2Param(p.lgroup, zero, zero, zero, p.frobenius, p.inertia, p.degree);

  // D: X with Phi X Phi^{-1} = q X commuting with the inertia image.
  std::vector<Matrix> src{p.frobenius * p.residue_cardinality()}, dst{p.frobenius};
  for (const auto& g : p.inertia) {
    src.push_back(g);
    dst.push_back(g);
  }
  const auto d = intertwiner_basis(src, dst);

  std::vector<Matrix> images;
  for (const auto& b : d) images.push_back(commutator(e, commutator(e, b)));
  const Scalar two = Scalar::rational(f, 2);
  const auto zc = solve_in_span(images, -(e * two));
  if (!zc) throw VerificationError("wd_to_sl2: no Z with [E,[E,Z]] = -2E in the graded centralizer");
  const Matrix z = combine(d, *zc, f, n);
  const Matrix h = commutator(e, z);

  // Y in D with [E,Y] = 0 and [H,Y] + 2Y = -[H,Z] - 2Z.
  std::vector<Matrix> ad_e;
  for (const auto& b : d) ad_e.push_back(commutator(e, b));
  std::vector<Vector> cols;
  for (const auto& m : ad_e) cols.push_back(vec(m));
  std::vector<Matrix> ker;
  for (const auto& v : nullspace(from_columns(f, n * n, cols))) ker.push_back(combine(d, v, f, n));
  std::vector<Matrix> y_images;
  for (const auto& y : ker) y_images.push_back(commutator(h, y) + y * two);
  const auto yc = solve_in_span(y_images, -(commutator(h, z) + z * two));
  if (!yc) throw VerificationError("wd_to_sl2: no correction Y for F");
  const Matrix fm = z + combine(ker, *yc, f, n);

  const Matrix frob0 = graded_power(h, c) * p.frobenius;
  SL2Param out(p.lgroup, e, h, fm, frob0, p.inertia, p.degree);
  require_valid(out);
  if (sl2_to_wd(out, c) != p) throw VerificationError("wd_to_sl2: round trip does not reproduce the input");
  return out;
}

EquivResult equiv(const SL2Param& a, const SL2Param& b, std::size_t budget) {
  if (!a.field()->same_as(*b.field())) throw PreconditionError("equiv: parameters over different fields");
  if (!(a.lgroup == b.lgroup) || a.degree != b.degree) throw PreconditionError("equiv: parameters for different groups");
  if (a.dimension() != b.dimension() || a.inertia.size() != b.inertia.size()) {
    throw PreconditionError("equiv: shapes differ");
  }
  require_valid(a);
  require_valid(b);
  return equiv_tuples(sl2_tuple(a), sl2_tuple(b), DualRealization::for_lgroup(a.lgroup), budget);
}

SpBlock sp_block(const FieldPtr& field, unsigned m, const Scalar& u, unsigned degree) {
  if (m == 0) throw PreconditionError("Sp(m) needs m >= 1");
  const Scalar q = Scalar::rational(field, field->q()).pow(degree);
  Matrix e = Matrix::zero(field, m, m), h = e, f = e;
  std::vector<Scalar> frob;
  for (unsigned j = 0; j < m; ++j) {
    h(j, j) = Scalar::rational(field, static_cast<long>(m) - 1 - 2 * static_cast<long>(j));
    if (j + 1 < m) {
      e(j, j + 1) = Scalar::one(field);
      f(j + 1, j) = Scalar::rational(field, static_cast<long>((j + 1) * (m - 1 - j)));
    }
    frob.push_back(u * q.pow(j));
  }
  return {std::move(e), std::move(h), std::move(f), Matrix::diagonal(frob)};
}

}  // namespace lcalc
