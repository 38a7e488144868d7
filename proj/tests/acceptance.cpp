// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "lcalc/corpus.hpp"
#include "lcalc/polynomial.hpp"
#include "lcalc/realization.hpp"
#include "lcalc/twists.hpp"

using namespace lcalc;

namespace {

struct Outcome {
  bool passed = true;
  std::size_t cases = 0;
  std::string note;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && passed) {
      passed = false;
      note = what;
    }
  }
};

LGroupSpec split(const char* g) { return LGroupSpec::split(parse_group_descriptor(g)); }

std::vector<IntVec> box(std::size_t rank, long bound) {
  std::vector<IntVec> out{IntVec{}};
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<IntVec> next;
    for (const auto& v : out) {
      for (long x = -bound; x <= bound; ++x) {
        IntVec w = v;
        w.push_back(x);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

// GL(2) and GL(3) parameters over the fields where c -> -c is an automorphism.
std::vector<CorpusParam> twist_corpus() {
  std::vector<CorpusParam> out;
  for (const auto& f : corpus_fields(true)) {
    for (unsigned n : {2U, 3U}) {
      for (auto& p : gl_corpus(f, n, 4, 300 + n)) out.push_back(std::move(p));
    }
  }
  return out;
}

Outcome zgl_n() {
  Outcome o;
  auto f = Field::make(1, 3);
  for (unsigned n = 1; n <= 8; ++n) {
    const auto real = DualRealization::for_lgroup(LGroupSpec::split({GroupDescriptor::Kind::GL, n}));
    const Matrix expected = Matrix::scalar(Scalar::rational(f, n % 2 == 1 ? 1 : -1), n);
    o.expect(real.z_G(f) == expected, "z_G of GL(" + std::to_string(n) + ")");
  }
  return o;
}

Outcome parity_law() {
  Outcome o;
  for (const char* g : {"GL(2)", "GL(3)", "PGL(2)", "SL(2)"}) {
    // Weights of the dual group are cocharacters of G.
    const BasedRootDatum d = BasedRootDatum::build(parse_group_descriptor(g));
    const auto z = delta_and_zG(d).z_signs;
    for (const auto& mu : box(d.rank(), 3)) {
      const int expected = d_G(d, mu) % 2 == 0 ? 1 : -1;
      o.expect(evaluate_at_signs(mu, z) == expected, std::string(g) + " parity");
    }
  }
  return o;
}

Outcome minus_c(const std::vector<CorpusParam>& corpus) {
  Outcome o;
  for (const auto& [label, p] : corpus) {
    const Scalar c = Scalar::sqrt_q(p.field());
    for (const auto& r : rep_corpus()) o.expect(check_minus_c(p, r, c), label + " / " + r.to_string());
  }
  o.note = o.passed ? std::to_string(corpus.size()) + " parameters" : o.note;
  return o;
}

Outcome wtrF(const std::vector<CorpusParam>& corpus) {
  Outcome o;
  for (const auto& [label, p] : corpus) {
    const Scalar c = Scalar::sqrt_q(p.field());
    for (const auto& r : rep_corpus()) o.expect(check_wtrF(p, r, c), label + " / " + r.to_string());
  }
  o.note = o.passed ? std::to_string(corpus.size()) + " parameters" : o.note;
  return o;
}

Outcome exponent_parity(const std::vector<CorpusParam>& corpus) {
  Outcome o;
  auto f = Field::make(4, 5);
  for (const char* g : {"GL(1)", "GL(2)", "GL(3)", "GL(4)", "PGL(2)", "T(2)"}) {
    const DualRealization real = DualRealization::for_lgroup(split(g));
    for (const auto& r : rep_corpus()) {
      if (r.dimension(real.dimension()) == 0) continue;
      const auto pieces = isotypic_decomposition(r, real, f);
      const auto n = default_exponents(r, real, f);
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        const long d = piece_dG(pieces[i], real);
        o.expect((n[i] - d) % 2 == 0, std::string(g) + " " + r.to_string() + " exponent parity");
      }
      o.expect(descends_to_cgroup(r, real, f, n), std::string(g) + " " + r.to_string() + " descends");
      for (std::size_t i = 0; i < n.size(); ++i) {
        auto wrong = n;
        ++wrong[i];
        o.expect(!descends_to_cgroup(r, real, f, wrong), std::string(g) + " " + r.to_string() + " wrong parity");
      }
    }
  }
  // r~ takes the same value on both representatives of each C-parameter generator.
  for (const auto& [label, p] : corpus) {
    const CParam a = to_cparam(p, Scalar::sqrt_q(p.field()));
    for (const auto& r : rep_corpus()) {
      for (const auto& x : a.generator_images()) {
        o.expect(rtilde_extend(r, x) == rtilde_extend(r, x.flipped()), label + " r~ on both representatives");
      }
    }
  }
  return o;
}

Outcome independence() {
  Outcome o;
  for (const auto& f : corpus_fields(false)) {
    const long q = f->q();
    for (unsigned n : {1U, 2U, 3U, 4U}) {
      for (const auto& [label, p] : gl_corpus(f, n, 3, 600 + n)) {
        for (long s : {1L, q - 1, -1L}) {
          const ConjugatedParam r = rebase_frobenius(p, s);
          o.expect(conjugate(p, r.conjugator) == r.param, label + " rebase");
        }
        for (long a : {2L, -1L, 3L}) {
          const RescaleResult r = rescale_tame(p, Scalar::rational(f, a));
          const bool ok = r.conjugator && p.realization().contains(*r.conjugator) &&
                          conjugate(p, *r.conjugator) == r.param &&
                          r.param.monodromy == p.monodromy * Scalar::rational(f, a);
          o.expect(ok, label + " rescale by " + std::to_string(a));
        }
      }
    }
  }
  return o;
}

Outcome exp_log_and_group_law() {
  Outcome o;
  Rng rng(700);
  auto f = Field::make(4, 5);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(1 + i % 6);
    const Matrix nil = random_nilpotent(f, n, rng);
    o.expect(log_unipotent(exp_nilpotent(nil)) == nil, "exp/log round trip");
  }
  std::vector<ParamData> params;
  for (unsigned n : {2U, 3U}) {
    for (auto& cp : gl_corpus(f, n, 5, 700 + n)) params.push_back(std::move(cp.param));
  }
  for (int i = 0; i < 100; ++i) {
    const ParamData& p = params[static_cast<std::size_t>(i) % params.size()];
    const WeilElement w = random_smooth_word(rng, p.inertia.size(), 3);
    const WeilElement w2 = random_smooth_word(rng, p.inertia.size(), 3);
    const Scalar a = Scalar::rational(f, draw(rng, -4, 4));
    const Scalar a2 = Scalar::rational(f, draw(rng, -4, 4)) * Scalar::zeta(f, draw(rng, 0, 3));
    o.expect(eval_wd(p, a, w) * eval_wd(p, a2, w2) == eval_wd(p, a + p.norm(w) * a2, w * w2), "group law");
  }
  return o;
}

Outcome sl2_round_trip() {
  Outcome o;
  auto f = Field::make(4, 5);
  const Scalar c = Scalar::sqrt_q(f);
  for (const auto& s : sp_sum_corpus(f, 6, 4)) {
    const SL2Param back = wd_to_sl2(sl2_to_wd(s, c), c);
    o.expect(equiv(back, s).verdict == EquivVerdict::Equivalent, "SL2 round trip in dimension " +
                                                                     std::to_string(s.dimension()));
  }
  return o;
}

Outcome pgl2_obstruction() {
  Outcome o;
  auto f = Field::make(4, 5);
  const Scalar c = Scalar::sqrt_q(f);
  for (const auto& [label, p] : sl2_corpus(f, 10, 900)) {
    ParamData as_gl2 = p;
    as_gl2.lgroup = split("GL(2)");
    const ObstructionReport r = pgl2_obstruction_demo(as_gl2, c);
    o.expect(determinant(bh_twist(as_gl2, c).frobenius) == p.residue_cardinality().inverse() && r.matches, label);
  }
  return o;
}

Outcome semisimple_stability() {
  Outcome o;
  std::size_t used = 0;
  for (const auto& f : corpus_fields(false)) {
    for (unsigned n : {2U, 3U, 4U}) {
      for (const auto& [label, p] : gl_corpus(f, n, 6, 1000 + n)) {
        if (used == 20) break;
        if (!frobenius_semisimple(p)) continue;
        const auto group = inertia_group(p);
        if (group.size() < 2) continue;
        ++used;
        for (const auto& gamma : group) {
          o.expect(is_squarefree(minimal_polynomial(p.frobenius * gamma)), label);
        }
      }
    }
  }
  o.expect(used == 20, "fewer than 20 parameters with nontrivial inertia");
  return o;
}

Outcome tannakian_injectivity() {
  Outcome o;
  auto f = Field::make(4, 5);
  const Scalar c = Scalar::sqrt_q(f);
  const auto pairs = inequivalent_gl3_pairs(f, 10, 1100);
  o.expect(pairs.size() == 10, "pair count");
  for (const auto& [a, b] : pairs) {
    o.expect(equiv(a, b).verdict == EquivVerdict::NotEquivalent, "pair is not inequivalent");
    const TannakianValue va = tannakian_twist(a, RepExpr::standard(), c);
    const TannakianValue vb = tannakian_twist(b, RepExpr::standard(), c);
    o.expect(equiv(va, vb).verdict == EquivVerdict::NotEquivalent, "Std values conjugate");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<CorpusParam> corpus = twist_corpus();
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"z_GL(n) = (-1)^(n-1) Identity, n = 1..8", zgl_n},
      {"mu(z_G) = (-1)^d_G on [-3,3]^rank for GL(2), GL(3), PGL(2), SL(2)", parity_law},
      {"c -> -c identity on GL(2)/GL(3) corpus x rep corpus", [&] { return minus_c(corpus); }},
      {"r~ o phi_c = F_{phi,c}(r) on the same corpus", [&] { return wtrF(corpus); }},
      {"G_m-exponents are congruent to d_G mod 2 and decide descent", [&] { return exponent_parity(corpus); }},
      {"independence of the Frobenius lift and of the tame generator", independence},
      {"exp/log round trip and Weil-Deligne group law", exp_log_and_group_law},
      {"SL2 round trip on Sp(m) sums, m <= 4, n <= 6", sl2_round_trip},
      {"det of the twisted Frobenius is q^-1 for determinant-one GL(2) parameters", pgl2_obstruction},
      {"Frobenius-semisimple parameters: Phi gamma semisimple for all inertia gamma", semisimple_stability},
      {"Std Tannakian values separate inequivalent GL(3) parameters", tannakian_injectivity},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.passed ? 0 : 1;
    std::printf("%s %2zu  %s  (%zu checks, %.2f s)%s%s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].title,
                o.cases, secs, o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
  }
  return failures;
}
