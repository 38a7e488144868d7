#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lcalc/params.hpp"
#include "lcalc/repcalc.hpp"

namespace lcalc {

/// Deterministic generators for test and demo corpora. Everything is a pure
/// function of the seed.

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi], independent of the standard library's
/// distribution implementation.
long draw(Rng& rng, long lo, long hi);

/// (N, q) pairs with N in {1, 4} and q in {3, 5, 9}; c_rational fields are
/// dropped when `need_c_automorphism` is set.
std::vector<FieldPtr> corpus_fields(bool need_c_automorphism);

/// Product of elementary matrices with small integer entries: determinant 1.
Matrix random_unimodular(const FieldPtr& field, std::size_t n, Rng& rng);

/// Strictly upper triangular with small integer entries, conjugated by a unimodular matrix.
Matrix random_nilpotent(const FieldPtr& field, std::size_t n, Rng& rng);

/// Small nonzero element: a rational, a root of unity, or (when allowed) c.
Scalar random_unit(const FieldPtr& field, Rng& rng, bool allow_c = false);

/// Word in sigma^{+-1} and gamma_i^{+-1}, no tame letters.
WeilElement random_smooth_word(Rng& rng, std::size_t inertia_generators, std::size_t length);

struct CorpusParam {
  std::string label;
  ParamData param;
};

/// Valid GL(n) parameters: sums of Sp(m) blocks twisted by an unramified
/// character and a root-of-unity character of one inertia generator, and
/// dihedral 2-dimensional blocks with N = 0, conjugated by a unimodular matrix.
/// Frobenius-semisimple by construction.
std::vector<CorpusParam> gl_corpus(const FieldPtr& field, unsigned n, std::size_t count, std::uint64_t seed);

/// Same blocks, with the image normalized to determinant one on Frobenius and
/// inertia (parameters into SL(2)).
std::vector<CorpusParam> sl2_corpus(const FieldPtr& field, std::size_t count, std::uint64_t seed);

/// Parameters for a split group whose dual has the given realization: GL(n),
/// PGL(n) (determinant one) or a torus (diagonal).
std::vector<CorpusParam> corpus_for(const LGroupSpec& lgroup, const FieldPtr& field, std::size_t count,
                                    std::uint64_t seed);

/// Sums of Sp(m) tensor an unramified character in SL2 format, one per
/// partition of n <= max_n with parts <= max_part. Phi_0 = u I on each block.
std::vector<SL2Param> sp_sum_corpus(const FieldPtr& field, unsigned max_n, unsigned max_part);

/// Pairs of GL(3) parameters that are not conjugate: a character is changed
/// or the monodromy is dropped.
std::vector<std::pair<ParamData, ParamData>> inequivalent_gl3_pairs(const FieldPtr& field, std::size_t count,
                                                                    std::uint64_t seed);

/// Std, Sym^2(Std), Alt^2(Std), det, det^-1, Std x Std.
std::vector<RepExpr> rep_corpus();

}  // namespace lcalc
