#include "lcalc/twists.hpp"

#include <set>
#include <sstream>

#include "lcalc/error.hpp"

namespace lcalc {
namespace {

Matrix conj_entries(const Matrix& m) {
  return m.map([](const Scalar& s) { return s.conjugate_c(); });
}

bool is_group(const LGroupSpec& l, GroupDescriptor::Kind kind, unsigned n) {
  return l.group() && l.group()->kind == kind && l.group()->n == n;
}

struct Decomposition {
  DualRealization real;
  std::vector<IsotypicPiece> pieces;
  std::vector<long> d;
  std::size_t dim;
};

Decomposition decompose(const RepExpr& r, const LGroupSpec& lgroup, const FieldPtr& field) {
  DualRealization real = DualRealization::for_lgroup(lgroup);
  auto pieces = isotypic_decomposition(r, real, field);
  std::vector<long> d;
  for (const auto& piece : pieces) d.push_back(piece_dG(piece, real));
  const std::size_t dim = r.dimension(real.dimension());
  return {std::move(real), std::move(pieces), std::move(d), dim};
}

Matrix piece_scalars(const Decomposition& dec, const Scalar& z, const std::vector<long>& exponents) {
  if (exponents.size() != dec.pieces.size()) throw PreconditionError("one G_m-exponent per isotypic piece required");
  std::vector<Scalar> s;
  for (long e : exponents) s.push_back(z.pow(e));
  return block_scalar(dec.pieces, s, dec.dim);
}

Matrix rtilde_with(const Decomposition& dec, const RepExpr& r, const Matrix& g, const Scalar& z, const WeilElement& w,
                   const std::vector<long>& exponents) {
  return evaluate(r, g, w) * piece_scalars(dec, z, exponents);
}

void require_descends(const Decomposition& dec, const RepExpr& r, const FieldPtr& f) {
  const Matrix zg = dec.real.z_G(f);
  const Matrix at = rtilde_with(dec, r, zg, -Scalar::one(f), WeilElement::identity(), dec.d);
  if (!at.is_identity()) {
    throw VerificationError("r~ is not trivial on (z_G, -1): the parity of some isotypic piece is wrong");
  }
}

TannakianValue rtilde_values_with(const Decomposition& dec, const CParam& a, const RepExpr& r) {
  require_descends(dec, r, a.base().field());
  auto value_at = [&](const CGroupElement& e) { return rtilde_with(dec, r, e.g(), e.z(), e.w(), dec.d); };
  TannakianValue v{r, value_at(a.at_frobenius()), {}, value_at(a.at_tame())};
  for (std::size_t i = 0; i < a.base().inertia.size(); ++i) v.at_inertia.push_back(value_at(a.at_inertia(i)));
  return v;
}

}  // namespace

ParamData bh_twist(const ParamData& p, const Scalar& c) {
  if (!is_group(p.lgroup, GroupDescriptor::Kind::GL, 2)) throw PreconditionError("bh_twist is defined for GL(2) only");
  require_sqrt_q(c, p.residue_cardinality());
  ParamData out = p;
  out.frobenius = p.frobenius * c.inverse();
  return out;
}

ParamData omega_zG_twist(const ParamData& p) {
  ParamData out = p;
  out.frobenius = p.realization().z_G(p.field()) * p.frobenius;
  return out;
}

ParamData conjugate_c(const ParamData& p) {
  std::vector<Matrix> inertia;
  for (const auto& g : p.inertia) inertia.push_back(conj_entries(g));
  return ParamData(p.lgroup, conj_entries(p.frobenius), std::move(inertia), conj_entries(p.monodromy), p.degree);
}

CParam::CParam(ParamData base, Scalar z_frobenius) : base_(std::move(base)), z_frobenius_(std::move(z_frobenius)) {
  if (z_frobenius_.is_zero()) throw PreconditionError("z(sigma) must be nonzero");
}

CGroupElement CParam::at_frobenius() const {
  return CGroupElement(base_.lgroup, base_.frobenius, z_frobenius_, WeilElement::frobenius());
}

CGroupElement CParam::at_inertia(std::size_t i) const {
  return CGroupElement(base_.lgroup, base_.inertia.at(i), Scalar::one(base_.field()), WeilElement::inertia(i));
}

CGroupElement CParam::at_tame() const {
  return CGroupElement(base_.lgroup, exp_nilpotent(base_.monodromy), Scalar::one(base_.field()),
                       WeilElement::tame(1));
}

std::vector<CGroupElement> CParam::generator_images() const {
  std::vector<CGroupElement> out{at_frobenius()};
  for (std::size_t i = 0; i < base_.inertia.size(); ++i) out.push_back(at_inertia(i));
  out.push_back(at_tame());
  return out;
}

bool CParam::satisfies_c_condition() const { return z_frobenius_ * z_frobenius_ == base_.residue_cardinality(); }

bool operator==(const CParam& a, const CParam& b) {
  if (!(a.base_.lgroup == b.base_.lgroup) || a.base_.degree != b.base_.degree ||
      a.base_.inertia.size() != b.base_.inertia.size()) {
    return false;
  }
  return a.generator_images() == b.generator_images();
}

CParam to_cparam(const ParamData& p, const Scalar& c) {
  require_valid(p);
  require_sqrt_q(c, p.residue_cardinality());
  CParam out(p, c);
  if (!out.satisfies_c_condition()) throw VerificationError("to_cparam: C-parameter condition fails");
  return out;
}

CParam conjugate(const CParam& a, const Matrix& g) { return CParam(conjugate(a.base(), g), a.z_frobenius()); }

CParam conjugate_c(const CParam& a) { return CParam(conjugate_c(a.base()), a.z_frobenius().conjugate_c()); }

CParam flip_at_frobenius(const CParam& a) {
  ParamData base = a.base();
  base.frobenius = base.frobenius * base.realization().z_G(base.field());
  return CParam(std::move(base), -a.z_frobenius());
}

bool operator==(const TannakianValue& a, const TannakianValue& b) {
  return a.rep == b.rep && a.at_frobenius == b.at_frobenius && a.at_inertia == b.at_inertia &&
         a.at_tame == b.at_tame;
}

ValidationReport check_weil_relations(const TannakianValue& v, const Scalar& q) {
  ValidationReport report;
  const FieldPtr& f = v.at_frobenius.field();
  std::optional<Matrix> log_t;
  try {
    log_t = log_unipotent(v.at_tame);
    report.checks.push_back({"tame_unipotent", true, {}});
  } catch (const PreconditionError& e) {
    report.checks.push_back({"tame_unipotent", false, e.what()});
  }
  const bool inv = is_invertible(v.at_frobenius);
  report.checks.push_back({"frobenius_invertible", inv, inv ? "" : "F(sigma) is singular"});
  if (log_t && inv) {
    const bool rel = v.at_frobenius * *log_t * inverse(v.at_frobenius) == *log_t * q.inverse();
    report.checks.push_back({"frobenius_tame", rel, rel ? "" : "F(sigma) log F(t) F(sigma)^-1 != q^-1 log F(t)"});
  }
  bool commute = true;
  for (const auto& g : v.at_inertia) commute = commute && g * v.at_tame == v.at_tame * g;
  report.checks.push_back({"inertia_tame", commute, commute ? "" : "inertia value does not commute with F(t)"});
  try {
    const auto group = finite_group_closure(v.at_inertia, f, v.at_frobenius.rows());
    bool normal = inv;
    if (inv) {
      const std::set<Matrix> elements(group.begin(), group.end());
      const Matrix fi = inverse(v.at_frobenius);
      for (const auto& g : v.at_inertia) normal = normal && elements.count(v.at_frobenius * g * fi);
    }
    report.checks.push_back({"inertia_normalized", normal, normal ? "" : "F(sigma) does not normalize inertia"});
  } catch (const PreconditionError& e) {
    report.checks.push_back({"inertia_normalized", false, e.what()});
  }
  return report;
}

TannakianValue tannakian_twist(const ParamData& p, const RepExpr& r, const Scalar& c) {
  require_valid(p);
  require_sqrt_q(c, p.residue_cardinality());
  const Decomposition dec = decompose(r, p.lgroup, p.field());
  const Matrix twist = piece_scalars(dec, c, dec.d);
  TannakianValue v{r, evaluate(r, p.frobenius, WeilElement::frobenius()) * twist, {},
                   evaluate(r, exp_nilpotent(p.monodromy), WeilElement::tame(1))};
  for (std::size_t i = 0; i < p.inertia.size(); ++i) v.at_inertia.push_back(evaluate(r, p.inertia[i], WeilElement::inertia(i)));
  return v;
}

std::vector<long> default_exponents(const RepExpr& r, const DualRealization& real, const FieldPtr& field) {
  std::vector<long> d;
  for (const auto& piece : isotypic_decomposition(r, real, field)) d.push_back(piece_dG(piece, real));
  return d;
}

Matrix rtilde_raw(const RepExpr& r, const DualRealization& real, const Matrix& g, const Scalar& z,
                  const WeilElement& w, const std::vector<long>& exponents) {
  const FieldPtr& f = g.field();
  auto pieces = isotypic_decomposition(r, real, f);
  std::vector<long> d;
  for (const auto& piece : pieces) d.push_back(piece_dG(piece, real));
  const Decomposition dec{real, std::move(pieces), std::move(d), r.dimension(real.dimension())};
  return rtilde_with(dec, r, g, z, w, exponents);
}

bool descends_to_cgroup(const RepExpr& r, const DualRealization& real, const FieldPtr& field,
                        const std::vector<long>& exponents) {
  const Matrix zg = real.z_G(field);
  return rtilde_raw(r, real, zg, -Scalar::one(field), WeilElement::identity(), exponents).is_identity();
}

Matrix rtilde_extend(const RepExpr& r, const CGroupElement& a) {
  const FieldPtr& f = a.g().field();
  const Decomposition dec = decompose(r, a.lgroup(), f);
  require_descends(dec, r, f);
  return rtilde_with(dec, r, a.g(), a.z(), a.w(), dec.d);
}

TannakianValue rtilde_values(const CParam& a, const RepExpr& r) {
  return rtilde_values_with(decompose(r, a.base().lgroup, a.base().field()), a, r);
}

bool check_wtrF(const ParamData& p, const RepExpr& r, const Scalar& c) {
  return rtilde_values(to_cparam(p, c), r) == tannakian_twist(p, r, c);
}

bool check_minus_c(const ParamData& p, const RepExpr& r, const Scalar& c) {
  if (p.field()->c_rational()) {
    throw UnsupportedError("check_minus_c: sqrt(q) is rational here, so c -> -c is not a field automorphism");
  }
  return tannakian_twist(p, r, -c) == tannakian_twist(omega_zG_twist(p), r, c);
}

EquivResult equiv(const TannakianValue& a, const TannakianValue& b, std::size_t budget) {
  if (a.at_inertia.size() != b.at_inertia.size()) throw PreconditionError("equiv: different numbers of inertia generators");
  const std::size_t dim = a.at_frobenius.rows();
  const auto real = DualRealization::for_lgroup(LGroupSpec::split({GroupDescriptor::Kind::GL, static_cast<unsigned>(dim)}));
  std::vector<Matrix> ta{a.at_frobenius, a.at_tame}, tb{b.at_frobenius, b.at_tame};
  ta.insert(ta.end(), a.at_inertia.begin(), a.at_inertia.end());
  tb.insert(tb.end(), b.at_inertia.begin(), b.at_inertia.end());
  return equiv_tuples(ta, tb, real, budget);
}

ChiReport chi_recovery(const CParam& a, const CParam& b, const RepExpr& r) {
  const LGroupSpec& l = a.base().lgroup;
  if (!l.group() || l.group()->kind != GroupDescriptor::Kind::GL) {
    throw PreconditionError("chi_recovery applies to GL(n) only");
  }
  if (!(l == b.base().lgroup) || a.base().inertia.size() != b.base().inertia.size()) {
    throw PreconditionError("chi_recovery: C-parameters for different groups or Weil models");
  }
  const long n = static_cast<long>(l.group()->n);
  const Decomposition dec = decompose(r, l, a.base().field());
  if (!(rtilde_values_with(dec, a, r) == rtilde_values_with(dec, b, r))) {
    throw PreconditionError("chi_recovery: the r~ values of the two C-parameters differ");
  }
  const auto ga = a.generator_images();
  const auto gb = b.generator_images();
  ChiReport report;
  std::ostringstream story;
  report.chi_squared_trivial = true;
  report.equal_as_classes = true;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (ga[i].t_Gm() != gb[i].t_Gm()) throw PreconditionError("chi_recovery: t_Gm values differ");
    const Scalar chi = ga[i].z() / gb[i].z();
    if (ga[i].g() != gb[i].g() * chi.pow(1 - n)) {
      throw PreconditionError("chi_recovery: no chi with phi(w) = phi'(w) [(chi^{1-n}, chi)]");
    }
    const bool sq = (chi * chi).is_one();
    report.chi_squared_trivial = report.chi_squared_trivial && sq;
    report.equal_as_classes = report.equal_as_classes && ga[i] == gb[i];
    report.chi.push_back(chi);
    story << "generator " << ga[i].w().to_string() << ": chi = " << chi.to_string()
          << ", chi^2 = " << (chi * chi).to_string() << "\n";
  }
  if (!report.chi_squared_trivial) throw PreconditionError("chi_recovery: chi^2 != 1");
  story << "z_GL(" << n << ") = " << ((n - 1) % 2 == 0 ? "+1" : "-1")
        << " times the identity, so (chi^{1-n}, chi) lies in <(z_G, -1)> for chi = -1; ";
  story << (report.equal_as_classes ? "the C-parameters are equal" : "the classes differ (unexpected)") << "\n";
  report.narrative = story.str();
  return report;
}

ObstructionReport pgl2_obstruction_demo(const ParamData& p, const Scalar& c) {
  if (!is_group(p.lgroup, GroupDescriptor::Kind::GL, 2)) throw PreconditionError("demo expects a GL(2) parameter");
  require_valid(p);
  if (!determinant(p.frobenius).is_one()) throw PreconditionError("demo expects det(Phi) = 1");
  for (const auto& g : p.inertia) {
    if (!determinant(g).is_one()) throw PreconditionError("demo expects determinant one on inertia");
  }
  const ParamData twisted = bh_twist(p, c);
  ObstructionReport report{determinant(twisted.frobenius), p.residue_cardinality().inverse(), false, {}};
  report.matches = report.det_twisted_frobenius == report.q_inverse;
  std::ostringstream out;
  out << "det of the twisted Frobenius = " << report.det_twisted_frobenius.to_string() << " = |sigma| = q^-1 != 1; "
      << "the twisted parameter does not factor through SL(2), so it is not the image of a PGL(2) parameter";
  report.conclusion = out.str();
  return report;
}

}  // namespace lcalc
