#include <doctest.h>

#include <algorithm>
#include <functional>

#include "generators.hpp"
#include "lcalc/corpus.hpp"
#include "lcalc/error.hpp"
#include "lcalc/repcalc.hpp"

using namespace lcalc;
using lcalc::testing::random_invertible;
using lcalc::testing::random_matrix;

namespace {

DualRealization realization_of(const char* g) {
  return DualRealization::for_lgroup(LGroupSpec::split(parse_group_descriptor(g)));
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Weyl dimension formula for GL(n).
long oracle_weyl_dimension(const IntVec& lambda) {
  mpq_class d = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      mpq_class factor(lambda[i] - lambda[j] + static_cast<long>(j - i), static_cast<long>(j - i));
      factor.canonicalize();
      d *= factor;
    }
  }
  return d.get_num().get_si();
}

// Weights of the GL(n) irreducible with highest weight lambda, from
// Gelfand-Tsetlin patterns: weight_k = |row k| - |row k-1|.
std::vector<IntVec> oracle_gt_weights(const IntVec& lambda) {
  std::vector<IntVec> out;
  std::vector<IntVec> rows{lambda};
  std::function<void()> rec = [&]() {
    const IntVec top = rows.back();
    if (top.size() == 1) {
      const std::size_t n = lambda.size();
      IntVec w(n);
      long prev = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const IntVec& row = rows[n - 1 - k];
        long sum = 0;
        for (long x : row) sum += x;
        w[k] = sum - prev;
        prev = sum;
      }
      out.push_back(w);
      return;
    }
    IntVec next(top.size() - 1);
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
      if (i == next.size()) {
        rows.push_back(next);
        rec();
        rows.pop_back();
        return;
      }
      for (long x = top[i + 1]; x <= top[i]; ++x) {
        next[i] = x;
        fill(i + 1);
      }
    };
    fill(0);
  };
  if (lambda.size() == 1) return {lambda};
  rec();
  return out;
}

// Reads the torus weight of each basis vector off r(diag(2, 3, 5, 7)).
std::vector<IntVec> oracle_weights_by_evaluation(const RepExpr& r, const FieldPtr& f, std::size_t n) {
  static constexpr long kPrimes[] = {2, 3, 5, 7};
  std::vector<Scalar> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(Scalar::rational(f, kPrimes[i]));
  const Matrix m = evaluate(r, Matrix::diagonal(d));
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const mpq_class v = m(i, i).to_rational();
    mpz_class num = v.get_num(), den = v.get_den();
    IntVec w(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      while (num % kPrimes[k] == 0) {
        num /= kPrimes[k];
        ++w[k];
      }
      while (den % kPrimes[k] == 0) {
        den /= kPrimes[k];
        --w[k];
      }
    }
    out.push_back(w);
  }
  return out;
}

std::vector<RepExpr> gl_reps() {
  std::vector<RepExpr> out = rep_corpus();
  for (const char* t : {"Sym^3(Std)", "Dual(Std)", "Std + det^2", "Sym^2(Std) x Dual(Std)", "Alt^2(Std) x Std"}) {
    out.push_back(parse_rep(t));
  }
  return out;
}

}  // namespace

TEST_CASE("parse_rep and rendering") {
  CHECK(parse_rep("Std") == RepExpr::standard());
  CHECK(parse_rep("det^-1") == RepExpr::det_pow(-1));
  CHECK(parse_rep("det") == RepExpr::det_pow(1));
  CHECK(parse_rep("Std ⊗ Std") == parse_rep("Std x Std"));
  CHECK(parse_rep("Std ⊕ det^2") == RepExpr::sum(RepExpr::standard(), RepExpr::det_pow(2)));
  CHECK(parse_rep("Sym^2(Alt^2(Std))").dimension(4) == 21);
  for (const auto& r : gl_reps()) CHECK(parse_rep(r.to_string()) == r);
  CHECK_THROWS_AS(parse_rep("Std +"), ParseError);
  CHECK_THROWS_AS(parse_rep("Sym^(Std)"), ParseError);
  CHECK_THROWS_AS(parse_rep("Foo"), ParseError);
}

TEST_CASE("dimensions") {
  for (long n = 1; n <= 5; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (unsigned k = 1; k <= 3; ++k) {
      CHECK(RepExpr::sym(k, RepExpr::standard()).dimension(un) == static_cast<std::size_t>(binomial(n + k - 1, k)));
      CHECK(RepExpr::alt(k, RepExpr::standard()).dimension(un) == static_cast<std::size_t>(binomial(n, k)));
    }
    CHECK(parse_rep("Std x Dual(Std)").dimension(un) == un * un);
  }
}

TEST_CASE("evaluate examples") {
  auto f = Field::make(4, 5);
  Rng rng(41);
  const Matrix g = random_invertible(f, 3, rng);
  CHECK(evaluate(RepExpr::standard(), g) == g);
  CHECK(evaluate(RepExpr::det_pow(-1), g) == Matrix::scalar(determinant(g).inverse(), 1));
  const Scalar a = parse_scalar("2 + z", f);
  const Scalar b = Scalar::rational(f, 3);
  CHECK(evaluate(parse_rep("Sym^2(Std)"), Matrix::diagonal({a, b})) == Matrix::diagonal({a * a, a * b, b * b}));
  CHECK(evaluate(parse_rep("Alt^3(Std)"), g) == Matrix::scalar(determinant(g), 1));
  CHECK(evaluate(parse_rep("Dual(Std)"), g) == inverse(g).transpose());
  CHECK_THROWS_AS(evaluate(parse_rep("Alt^4(Std)"), g), PreconditionError);
}

TEST_CASE("evaluate with twists") {
  auto f = Field::make(4, 5);
  const Matrix g = Matrix::from_rationals(f, {{1, 2}, {3, 4}});
  const Scalar u = Scalar::rational(f, 7);
  const RepExpr r = RepExpr::finite_twist(RepExpr::unram_twist(RepExpr::standard(), u), {Scalar::zeta(f, 1)});
  const WeilElement w = WeilElement::frobenius(2) * WeilElement::inertia(0, 3);
  CHECK(evaluate(r, g, w) == g * (u * u * Scalar::zeta(f, 3)));
  CHECK(evaluate(r, g) == g);
  CHECK(r.has_twists());
}

TEST_CASE("lie_action examples") {
  auto f = Field::make(4, 5);
  Rng rng(42);
  const Matrix x = random_matrix(f, 3, 3, rng);
  CHECK(lie_action(RepExpr::standard(), x) == x);
  CHECK(lie_action(RepExpr::det_pow(3), x) == Matrix::scalar(x.trace() * mpq_class(3), 1));
  const Matrix raise = lie_action(parse_rep("Sym^2(Std)"), Matrix::unit(f, 2, 0, 1));
  CHECK(rank(raise) == 2);
  CHECK(raise == Matrix::from_rationals(f, {{0, 1, 0}, {0, 0, 2}, {0, 0, 0}}));
  const Matrix id2 = Matrix::identity(f, 2);
  const Matrix y = Matrix::from_rationals(f, {{1, 2}, {0, -1}});
  CHECK(lie_action(parse_rep("Std x Std"), y) == kronecker(y, id2) + kronecker(id2, y));
}

TEST_CASE("isotypic decomposition examples") {
  auto f = Field::make(4, 5);
  const DualRealization gl2 = realization_of("GL(2)");
  const auto std2 = isotypic_decomposition(RepExpr::standard(), gl2, f);
  REQUIRE(std2.size() == 1);
  CHECK(std2[0].highest_weight == IntVec{1, 0});
  CHECK(std2[0].basis.size() == 2);
  CHECK(piece_dG(std2[0], gl2) == 1);

  const auto tt = isotypic_decomposition(parse_rep("Std x Std"), gl2, f);
  REQUIRE(tt.size() == 2);
  CHECK(tt[0].highest_weight == IntVec{2, 0});
  CHECK(tt[0].basis.size() == 3);
  CHECK(tt[1].highest_weight == IntVec{1, 1});
  CHECK(tt[1].basis.size() == 1);
  CHECK(piece_dG(tt[0], gl2) == 2);
  CHECK(piece_dG(tt[1], gl2) == 0);

  for (const char* g : {"GL(1)", "GL(2)", "GL(3)", "GL(4)"}) {
    const DualRealization real = realization_of(g);
    for (long k : {-2L, 1L, 3L}) {
      const auto d = isotypic_decomposition(RepExpr::det_pow(k), real, f);
      REQUIRE(d.size() == 1);
      CHECK(d[0].highest_weight == IntVec(real.dimension(), k));
      CHECK(d[0].basis.size() == 1);
    }
  }

  // Std x Std x Std on GL(2): Sym^3 once, Std x det twice.
  const auto ttt = isotypic_decomposition(parse_rep("Std x Std x Std"), gl2, f);
  REQUIRE(ttt.size() == 2);
  CHECK(ttt[0].multiplicity == 1);
  CHECK(ttt[1].highest_weight == IntVec{2, 1});
  CHECK(ttt[1].multiplicity == 2);
  CHECK(ttt[1].irreducible_dimension == 2);
}

TEST_CASE("PGL(2) dual: weights merge modulo the center") {
  auto f = Field::make(4, 5);
  const DualRealization sl2 = realization_of("PGL(2)");
  const auto d = isotypic_decomposition(parse_rep("Std x Std"), sl2, f);
  REQUIRE(d.size() == 2);
  const auto dd = isotypic_decomposition(parse_rep("Std x Dual(Std)"), sl2, f);
  REQUIRE(dd.size() == 2);
  std::size_t total = 0;
  for (const auto& piece : dd) total += piece.basis.size();
  CHECK(total == 4);
}

TEST_CASE("torus decomposition is by characters") {
  auto f = Field::make(4, 5);
  const DualRealization t2 = realization_of("T(2)");
  const auto d = isotypic_decomposition(parse_rep("Std x Std"), t2, f);
  CHECK(d.size() == 3);
  for (const auto& piece : d) CHECK(piece.irreducible_dimension == 1);
  CHECK(d[0].highest_weight == IntVec{2, 0});
  CHECK(d[1].highest_weight == IntVec{1, 1});
  CHECK(d[1].multiplicity == 2);
}

TEST_CASE("property: evaluate is a homomorphism and lie_action is its derivative") {
  Rng rng(43);
  auto f = Field::make(4, 5);
  for (std::size_t n : {2U, 3U}) {
    for (const auto& r : gl_reps()) {
      CAPTURE(r.to_string());
      for (int i = 0; i < 3; ++i) {
        const Matrix g = random_invertible(f, n, rng);
        const Matrix h = random_invertible(f, n, rng);
        CHECK(evaluate(r, g * h) == evaluate(r, g) * evaluate(r, h));
        const Matrix x = random_matrix(f, n, n, rng);
        const Matrix y = random_matrix(f, n, n, rng);
        CHECK(lie_action(r, commutator(x, y)) == commutator(lie_action(r, x), lie_action(r, y)));
        const Matrix nil = random_nilpotent(f, n, rng);
        CHECK(evaluate(r, exp_nilpotent(nil)) == exp_nilpotent(lie_action(r, nil)));
      }
    }
  }
}

TEST_CASE("property: weights from the tree match evaluation on the torus") {
  auto f = Field::make(1, 3);
  for (std::size_t n : {2U, 3U, 4U}) {
    for (const auto& r : gl_reps()) {
      if (r.dimension(n) > 80) continue;
      CAPTURE(r.to_string());
      CHECK(weights(r, n) == oracle_weights_by_evaluation(r, f, n));
    }
  }
}

TEST_CASE("property: decomposition is complete and matches Gelfand-Tsetlin characters") {
  auto f = Field::make(4, 5);
  for (const char* g : {"GL(2)", "GL(3)"}) {
    const DualRealization real = realization_of(g);
    const std::size_t n = real.dimension();
    for (const auto& r : gl_reps()) {
      CAPTURE(std::string(g));
      CAPTURE(r.to_string());
      const auto pieces = isotypic_decomposition(r, real, f);
      std::size_t total = 0;
      std::vector<IntVec> predicted;
      SpanBuilder all(f, r.dimension(n));
      for (const auto& piece : pieces) {
        CHECK(std::is_sorted(piece.highest_weight.begin(), piece.highest_weight.end(), std::greater<>()));
        CHECK(static_cast<long>(piece.irreducible_dimension) == oracle_weyl_dimension(piece.highest_weight));
        CHECK(piece.basis.size() == piece.multiplicity * piece.irreducible_dimension);
        total += piece.basis.size();
        for (const auto& v : piece.basis) CHECK(all.add(v));
        const auto gt = oracle_gt_weights(piece.highest_weight);
        CHECK(gt.size() == piece.irreducible_dimension);
        for (std::size_t m = 0; m < piece.multiplicity; ++m) predicted.insert(predicted.end(), gt.begin(), gt.end());
      }
      CHECK(total == r.dimension(n));
      auto actual = weights(r, n);
      std::sort(actual.begin(), actual.end());
      std::sort(predicted.begin(), predicted.end());
      CHECK(actual == predicted);
    }
  }
}

TEST_CASE("property: pieces are stable and z_G acts by the parity of d_G") {
  Rng rng(44);
  auto f = Field::make(4, 5);
  for (const char* g : {"GL(2)", "GL(3)", "PGL(2)", "T(2)"}) {
    const DualRealization real = realization_of(g);
    const std::size_t n = real.dimension();
    const Matrix zg = real.z_G(f);
    for (const auto& r : gl_reps()) {
      CAPTURE(std::string(g));
      CAPTURE(r.to_string());
      const auto pieces = isotypic_decomposition(r, real, f);
      const Matrix z_image = evaluate(r, zg);
      Matrix x = random_invertible(f, n, rng);
      if (real.kind() == DualRealization::Kind::Torus) {
        x = Matrix::diagonal({Scalar::rational(f, 2), Scalar::rational(f, 3)});
      } else if (real.kind() == DualRealization::Kind::SpecialLinear) {
        x = random_unimodular(f, n, rng);
      }
      const Matrix image = evaluate(r, x);
      for (const auto& piece : pieces) {
        SpanBuilder span(f, r.dimension(n));
        for (const auto& v : piece.basis) span.add(v);
        const Scalar sign = Scalar::rational(f, piece_dG(piece, real) % 2 == 0 ? 1 : -1);
        for (const auto& v : piece.basis) {
          CHECK(span.contains(multiply(image, v)));
          Vector expected = v;
          for (auto& e : expected) e *= sign;
          CHECK(multiply(z_image, v) == expected);
        }
      }
    }
  }
}

TEST_CASE("block_scalar acts by the given scalars") {
  auto f = Field::make(4, 5);
  const DualRealization gl2 = realization_of("GL(2)");
  const RepExpr r = parse_rep("Std x Std");
  const auto pieces = isotypic_decomposition(r, gl2, f);
  const Scalar a = Scalar::rational(f, 2), b = Scalar::sqrt_q(f);
  const Matrix m = block_scalar(pieces, {a, b}, 4);
  for (const auto& v : pieces[0].basis) {
    Vector e = v;
    for (auto& x : e) x *= a;
    CHECK(multiply(m, v) == e);
  }
  for (const auto& v : pieces[1].basis) {
    Vector e = v;
    for (auto& x : e) x *= b;
    CHECK(multiply(m, v) == e);
  }
}
