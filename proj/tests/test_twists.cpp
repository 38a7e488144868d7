#include <doctest.h>

#include <optional>

#include "generators.hpp"
#include "lcalc/corpus.hpp"
#include "lcalc/error.hpp"
#include "lcalc/twists.hpp"

using namespace lcalc;

namespace {

LGroupSpec gl(unsigned n) { return LGroupSpec::split({GroupDescriptor::Kind::GL, n}); }

// Phi = diag(c^-1, c), N = E12.
ParamData steinberg(const FieldPtr& f) {
  const Scalar c = Scalar::sqrt_q(f);
  return ParamData(gl(2), Matrix::diagonal({c.inverse(), c}), {}, Matrix::unit(f, 2, 0, 1));
}

ParamData trivial(const FieldPtr& f, unsigned n) {
  return ParamData(gl(n), Matrix::identity(f, n), {}, Matrix::zero(f, n, n));
}

TannakianValue conjugate_entries(const TannakianValue& v) {
  auto conj = [](const Matrix& m) { return m.map([](const Scalar& x) { return x.conjugate_c(); }); };
  TannakianValue out = v;
  out.at_frobenius = conj(v.at_frobenius);
  out.at_tame = conj(v.at_tame);
  for (auto& m : out.at_inertia) m = conj(m);
  return out;
}

TannakianValue conjugate_value(const TannakianValue& v, const Matrix& g) {
  const Matrix gi = inverse(g);
  TannakianValue out = v;
  out.at_frobenius = g * v.at_frobenius * gi;
  out.at_tame = g * v.at_tame * gi;
  for (auto& m : out.at_inertia) m = g * m * gi;
  return out;
}

}  // namespace

TEST_CASE("bh_twist examples") {
  auto f = Field::make(4, 5);
  const Scalar c = Scalar::sqrt_q(f);
  const Scalar q_inv = Scalar::rational(f, mpq_class(1, 5));
  const ParamData det1(gl(2), Matrix::from_rationals(f, {{2, 1}, {1, 1}}), {}, Matrix::zero(f, 2, 2));
  CHECK(determinant(bh_twist(det1, c).frobenius) == q_inv);
  CHECK(bh_twist(trivial(f, 2), c).frobenius == Matrix::scalar(c.inverse(), 2));
  const ParamData p = steinberg(f);
  CHECK(bh_twist(bh_twist(p, c), c).frobenius == p.frobenius * q_inv);
  CHECK(bh_twist(p, c).monodromy == p.monodromy);
  CHECK_THROWS_AS(bh_twist(trivial(f, 3), c), PreconditionError);
  CHECK_THROWS_AS(bh_twist(p, Scalar::rational(f, 2)), PreconditionError);
}

TEST_CASE("to_cparam examples") {
  auto f = Field::make(4, 5);
  const Scalar c = Scalar::sqrt_q(f);
  const Matrix zeta = Matrix::diagonal({Scalar::zeta(f, 1), Scalar::zeta(f, -1)});
  const ParamData p(gl(2), Matrix::from_rationals(f, {{0, 1}, {1, 0}}), {zeta}, Matrix::zero(f, 2, 2));
  const CParam a = to_cparam(p, c);
  CHECK(a.at_frobenius().t_Gm() == Scalar::rational(f, 5));
  CHECK(a.at_inertia(0).t_Gm().is_one());
  CHECK(a.at_tame().t_Gm().is_one());
  CHECK(a.satisfies_c_condition());
  CHECK(a.generator_images().size() == 3);

  const CParam minus = to_cparam(p, -c);
  CHECK_FALSE(minus == a);
  CHECK(minus == to_cparam(omega_zG_twist(p), c));
  CHECK(flip_at_frobenius(a) == a);

  // z_GL(3) is trivial, so the sign of c is absorbed.
  const ParamData p3 = trivial(f, 3);
  CHECK(to_cparam(p3, -c) == to_cparam(p3, c));
  CHECK_THROWS_AS(to_cparam(p, Scalar::rational(f, 2)), PreconditionError);
}

TEST_CASE("omega_zG_twist examples") {
  auto f = Field::make(4, 5);
  const ParamData p = steinberg(f);
  CHECK(omega_zG_twist(p).frobenius == -p.frobenius);
  CHECK(omega_zG_twist(omega_zG_twist(p)) == p);
  const ParamData p3(gl(3), Matrix::from_rationals(f, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}), {}, Matrix::zero(f, 3, 3));
  CHECK(omega_zG_twist(p3) == p3);
  CHECK(validate(omega_zG_twist(p)).ok());
}

TEST_CASE("tannakian_twist examples") {
  auto f = Field::make(4, 5);
  const Scalar c = Scalar::sqrt_q(f);
  const ParamData p = steinberg(f);
  const TannakianValue v = tannakian_twist(p, RepExpr::standard(), c);
  CHECK(v.at_frobenius == Matrix::from_rationals(f, {{1, 0}, {0, 5}}));
  CHECK(v.at_tame == Matrix::identity(f, 2) + Matrix::unit(f, 2, 0, 1));
  CHECK(check_weil_relations(v, Scalar::rational(f, 5)).ok());
  CHECK(tannakian_twist(p, RepExpr::det_pow(1), c).at_frobenius == Matrix::identity(f, 1));
  CHECK(tannakian_twist(trivial(f, 2), RepExpr::standard(), c).at_frobenius == Matrix::scalar(c, 2));
  // Sym^2 has d_G = 2: c^2 diag(c^-2, 1, c^2).
  CHECK(tannakian_twist(p, parse_rep("Sym^2(Std)"), c).at_frobenius ==
        Matrix::from_rationals(f, {{1, 0, 0}, {0, 5, 0}, {0, 0, 25}}));
}

TEST_CASE("rtilde_extend examples") {
  auto f = Field::make(4, 5);
  Rng rng(51);
  for (unsigned n = 1; n <= 4; ++n) {
    const Matrix g = lcalc::testing::random_invertible(f, n, rng);
    const Scalar z = parse_scalar("2 - z", f);
    const CGroupElement a(gl(n), g, z, WeilElement::frobenius());
    CHECK(rtilde_extend(RepExpr::standard(), a) == g * z.pow(static_cast<long>(n) - 1));
    CHECK(rtilde_extend(RepExpr::standard(), a.flipped()) == rtilde_extend(RepExpr::standard(), a));
    const CGroupElement one(gl(n), g, Scalar::one(f), WeilElement::identity());
    CHECK(rtilde_extend(RepExpr::standard(), one) == g);
  }
}

TEST_CASE("check_wtrF and check_minus_c examples") {
  auto f = Field::make(4, 5);
  const Scalar c = Scalar::sqrt_q(f);
  const ParamData p = steinberg(f);
  CHECK(check_wtrF(p, RepExpr::standard(), c));
  CHECK(rtilde_values(to_cparam(p, c), RepExpr::standard()).at_frobenius == Matrix::from_rationals(f, {{1, 0}, {0, 5}}));
  CHECK(check_wtrF(p, RepExpr::det_pow(0), c));

  CHECK(check_minus_c(p, RepExpr::standard(), c));
  CHECK(tannakian_twist(p, RepExpr::standard(), -c).at_frobenius == Matrix::from_rationals(f, {{-1, 0}, {0, -5}}));
  CHECK(check_minus_c(p, RepExpr::det_pow(0), c));
  const ParamData p3(gl(3), Matrix::from_rationals(f, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}), {}, Matrix::zero(f, 3, 3));
  CHECK(check_minus_c(p3, parse_rep("Std x Dual(Std)"), c));

  auto rational_c = Field::make(1, 9);
  CHECK_THROWS_AS(check_minus_c(trivial(rational_c, 2), RepExpr::standard(), Scalar::sqrt_q(rational_c)),
                  UnsupportedError);
}

TEST_CASE("chi_recovery examples") {
  auto f = Field::make(4, 5);
  const Scalar c = Scalar::sqrt_q(f);
  for (unsigned n : {2U, 3U}) {
    const ParamData p = gl_corpus(f, n, 1, 52).front().param;
    const CParam a = to_cparam(p, c);
    const ChiReport same = chi_recovery(a, a, RepExpr::standard());
    CHECK(same.equal_as_classes);
    for (const auto& x : same.chi) CHECK(x.is_one());

    const ChiReport flipped = chi_recovery(a, flip_at_frobenius(a), RepExpr::standard());
    CHECK(flipped.chi.front() == -Scalar::one(f));
    CHECK(flipped.chi_squared_trivial);
    CHECK(flipped.equal_as_classes);
    CHECK_FALSE(flipped.narrative.empty());

    ParamData twisted = p;
    twisted.frobenius = p.frobenius * Scalar::rational(f, 2);
    CHECK_THROWS_AS(chi_recovery(a, to_cparam(twisted, c), RepExpr::standard()), PreconditionError);
  }
}

TEST_CASE("pgl2 obstruction examples") {
  auto f = Field::make(4, 5);
  const Scalar c = Scalar::sqrt_q(f);
  const ObstructionReport r = pgl2_obstruction_demo(trivial(f, 2), c);
  CHECK(r.matches);
  CHECK(r.det_twisted_frobenius == Scalar::rational(f, mpq_class(1, 5)));
  CHECK_FALSE(r.conclusion.empty());
  for (const auto& [label, p] : sl2_corpus(f, 10, 53)) {
    CAPTURE(label);
    ParamData as_gl = p;
    as_gl.lgroup = gl(2);
    CHECK(pgl2_obstruction_demo(as_gl, c).det_twisted_frobenius == r.q_inverse);
  }
  const ParamData bad(gl(2), Matrix::from_rationals(f, {{2, 0}, {0, 1}}), {}, Matrix::zero(f, 2, 2));
  CHECK_THROWS_AS(pgl2_obstruction_demo(bad, c), PreconditionError);
}

TEST_CASE("property: bh_twist determinant law on Weil words") {
  Rng rng(54);
  for (const auto& f : corpus_fields(true)) {
    const Scalar c = Scalar::sqrt_q(f);
    for (const auto& [label, p] : gl_corpus(f, 2, 6, 54)) {
      CAPTURE(label);
      const ParamData t = bh_twist(p, c);
      for (int i = 0; i < 6; ++i) {
        const WeilElement w = random_smooth_word(rng, p.inertia.size(), 4);
        CHECK(determinant(tau(t, w)) == p.norm(w) * determinant(tau(p, w)));
      }
    }
  }
}

TEST_CASE("property: to_cparam commutes with conjugation") {
  Rng rng(55);
  for (const auto& f : corpus_fields(true)) {
    const Scalar c = Scalar::sqrt_q(f);
    for (unsigned n : {2U, 3U}) {
      for (const auto& [label, p] : gl_corpus(f, n, 4, 55 + n)) {
        CAPTURE(label);
        const Matrix g = random_unimodular(f, n, rng);
        CHECK(to_cparam(conjugate(p, g), c) == conjugate(to_cparam(p, c), g));
      }
    }
  }
}

TEST_CASE("property: Tannakian values satisfy the Weil relations and match r~") {
  for (const auto& f : corpus_fields(true)) {
    const Scalar c = Scalar::sqrt_q(f);
    const Scalar q = Scalar::rational(f, f->q());
    for (const char* g : {"GL(2)", "GL(3)", "PGL(2)", "T(2)"}) {
      const LGroupSpec lg = LGroupSpec::split(parse_group_descriptor(g));
      for (const auto& [label, p] : corpus_for(lg, f, 2, 56)) {
        CAPTURE(label);
        for (const auto& r : rep_corpus()) {
          const TannakianValue v = tannakian_twist(p, r, c);
          CHECK(check_weil_relations(v, q).ok());
          CHECK(check_wtrF(p, r, c));
        }
      }
    }
  }
}

TEST_CASE("property: c -> -c changes the Tannakian value by the z_G twist") {
  Rng rng(57);
  int c_free_count = 0;
  for (const auto& f : corpus_fields(true)) {
    const Scalar c = Scalar::sqrt_q(f);
    for (unsigned n : {2U, 3U}) {
      for (const auto& [label, p] : gl_corpus(f, n, 3, 57 + n)) {
        CAPTURE(label);
        const bool c_free = conjugate_c(p) == p;
        const ParamData moved = conjugate(omega_zG_twist(p), random_unimodular(f, n, rng));
        std::optional<Matrix> g;
        if (c_free) {
          ++c_free_count;
          // One conjugator from the faithful Std value serves every r.
          const EquivResult e = equiv(conjugate_entries(tannakian_twist(p, RepExpr::standard(), c)),
                                      tannakian_twist(moved, RepExpr::standard(), c));
          REQUIRE(e.verdict == EquivVerdict::Equivalent);
          g = e.conjugator;
        }
        for (const auto& r : rep_corpus()) {
          CHECK(check_minus_c(p, r, c));
          const TannakianValue conj = conjugate_entries(tannakian_twist(p, r, c));
          CHECK(conj == tannakian_twist(omega_zG_twist(conjugate_c(p)), r, c));
          if (g) CHECK(conjugate_value(conj, evaluate(r, *g)) == tannakian_twist(moved, r, c));
        }
      }
    }
  }
  CHECK(c_free_count > 0);
}

TEST_CASE("property: exponent parity decides descent to the C-group") {
  auto f = Field::make(4, 5);
  for (const char* g : {"GL(2)", "GL(3)", "GL(4)", "PGL(2)", "T(2)"}) {
    const DualRealization real = DualRealization::for_lgroup(LGroupSpec::split(parse_group_descriptor(g)));
    for (const auto& r : rep_corpus()) {
      CAPTURE(std::string(g));
      CAPTURE(r.to_string());
      const auto d = default_exponents(r, real, f);
      CHECK(descends_to_cgroup(r, real, f, d));
      auto shifted = d;
      for (auto& x : shifted) x += 2;
      CHECK(descends_to_cgroup(r, real, f, shifted));
      for (std::size_t i = 0; i < d.size(); ++i) {
        auto bad = d;
        ++bad[i];
        CHECK_FALSE(descends_to_cgroup(r, real, f, bad));
      }
    }
  }
}

TEST_CASE("property: chi recovery on corpus flips") {
  for (const auto& f : corpus_fields(true)) {
    const Scalar c = Scalar::sqrt_q(f);
    for (unsigned n : {1U, 2U, 3U, 4U}) {
      for (const auto& [label, p] : gl_corpus(f, n, 2, 58 + n)) {
        CAPTURE(label);
        const CParam a = to_cparam(p, c);
        const ChiReport rep = chi_recovery(a, flip_at_frobenius(a), RepExpr::standard());
        CHECK(rep.chi_squared_trivial);
        CHECK(rep.equal_as_classes);
      }
    }
  }
}
