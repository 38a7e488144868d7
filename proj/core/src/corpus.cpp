#include "lcalc/corpus.hpp"

#include "lcalc/error.hpp"

namespace lcalc {
namespace {

// Sp blocks act through inertia generator 0 and dihedral blocks through
// generator 1, so that Phi normalizes the inertia image.
struct Block {
  Matrix frobenius;
  Matrix inertia;
  Matrix monodromy;
  std::string label;
  bool dihedral = false;
};

Scalar inertia_character(const FieldPtr& f, Rng& rng) {
  const unsigned order = f->spec().cyclotomic_order;
  if (order <= 2 || draw(rng, 0, 2) == 0) return draw(rng, 0, 1) ? Scalar::one(f) : -Scalar::one(f);
  return Scalar::zeta(f, draw(rng, 1, static_cast<long>(order) - 1));
}

Block sp_part(const FieldPtr& f, unsigned m, const Scalar& u, const Scalar& chi) {
  const SpBlock sp = sp_block(f, m, u);
  return {sp.frobenius, Matrix::scalar(chi, m), sp.e,
          "Sp(" + std::to_string(m) + ")[u=" + u.to_string() + ",chi=" + chi.to_string() + "]"};
}

// Phi = [[0,1],[a,0]] swaps the two eigenlines of diag(zeta, zeta^-1).
Block dihedral_part(const FieldPtr& f, const Scalar& a, const Scalar& zeta) {
  const Scalar zero = Scalar::zero(f);
  const Scalar one = Scalar::one(f);
  return {Matrix::from_rows(f, {{zero, one}, {a, zero}}), Matrix::diagonal({zeta, zeta.inverse()}),
          Matrix::zero(f, 2, 2), "Dih[a=" + a.to_string() + ",zeta=" + zeta.to_string() + "]", true};
}

std::vector<Block> random_gl_blocks(const FieldPtr& f, unsigned n, Rng& rng) {
  std::vector<Block> blocks;
  unsigned rest = n;
  while (rest > 0) {
    if (rest >= 2 && draw(rng, 0, 4) == 0) {
      const Scalar zeta = f->spec().cyclotomic_order >= 3 ? Scalar::zeta(f, 1) : -Scalar::one(f);
      blocks.push_back(dihedral_part(f, random_unit(f, rng), zeta));
      rest -= 2;
      continue;
    }
    const unsigned m = static_cast<unsigned>(draw(rng, 1, std::min<long>(rest, 3)));
    blocks.push_back(sp_part(f, m, random_unit(f, rng, true), inertia_character(f, rng)));
    rest -= m;
  }
  return blocks;
}

ParamData assemble(const LGroupSpec& lgroup, const std::vector<Block>& blocks, const Matrix& g) {
  std::vector<Matrix> phi, rho0, rho1, n;
  bool any_dihedral = false;
  for (const auto& b : blocks) {
    const Matrix one = Matrix::identity(b.inertia.field(), b.inertia.rows());
    phi.push_back(b.frobenius);
    rho0.push_back(b.dihedral ? one : b.inertia);
    rho1.push_back(b.dihedral ? b.inertia : one);
    n.push_back(b.monodromy);
    any_dihedral = any_dihedral || b.dihedral;
  }
  std::vector<Matrix> inertia{block_diagonal(rho0)};
  if (any_dihedral) inertia.push_back(block_diagonal(rho1));
  return conjugate(ParamData(lgroup, block_diagonal(phi), std::move(inertia), block_diagonal(n)), g);
}

std::string join_labels(const std::vector<Block>& blocks) {
  std::string out;
  for (const auto& b : blocks) out += (out.empty() ? "" : " + ") + b.label;
  return out;
}

constexpr long kSpCharacters[] = {1, 2, 1, -1, 3, 1};

LGroupSpec split_group(GroupDescriptor::Kind kind, unsigned n) { return LGroupSpec::split({kind, n}); }

}  // namespace

long draw(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

std::vector<FieldPtr> corpus_fields(bool need_c_automorphism) {
  std::vector<FieldPtr> out;
  for (long q : {3L, 5L, 9L}) {
    for (unsigned order : {1U, 4U}) {
      auto f = Field::make(order, q);
      if (need_c_automorphism && f->c_rational()) continue;
      out.push_back(std::move(f));
    }
  }
  return out;
}

Matrix random_unimodular(const FieldPtr& field, std::size_t n, Rng& rng) {
  Matrix g = Matrix::identity(field, n);
  if (n < 2) return g;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    long k = draw(rng, -2, 2);
    if (k == 0) k = 1;
    g = (Matrix::identity(field, n) + Matrix::unit(field, n, i, j) * Scalar::rational(field, k)) * g;
  }
  return g;
}

Matrix random_nilpotent(const FieldPtr& field, std::size_t n, Rng& rng) {
  Matrix u = Matrix::zero(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) u(i, j) = Scalar::rational(field, draw(rng, -3, 3));
  }
  const Matrix g = random_unimodular(field, n, rng);
  return g * u * inverse(g);
}

Scalar random_unit(const FieldPtr& field, Rng& rng, bool allow_c) {
  static const long num[] = {1, 2, -1, 1, 3, -2, 2};
  static const long den[] = {1, 1, 1, 2, 1, 3, 3};
  switch (draw(rng, 0, allow_c ? 3 : 2)) {
    case 0:
    case 1: {
      const auto k = static_cast<std::size_t>(draw(rng, 0, 6));
      return Scalar::rational(field, mpq_class(num[k], den[k]));
    }
    case 2:
      return Scalar::zeta(field, draw(rng, 0, static_cast<long>(field->spec().cyclotomic_order) - 1)) *
             Scalar::rational(field, draw(rng, 1, 2));
    default:
      return Scalar::sqrt_q(field) * Scalar::rational(field, draw(rng, 0, 1) ? 1 : -1);
  }
}

WeilElement random_smooth_word(Rng& rng, std::size_t inertia_generators, std::size_t length) {
  WeilElement w;
  for (std::size_t i = 0; i < length; ++i) {
    const long sign = draw(rng, 0, 1) ? 1 : -1;
    if (inertia_generators == 0 || draw(rng, 0, 1) == 0) {
      w = w * WeilElement::frobenius(sign);
    } else {
      w = w * WeilElement::inertia(static_cast<std::size_t>(draw(rng, 0, static_cast<long>(inertia_generators) - 1)), sign);
    }
  }
  return w;
}

std::vector<CorpusParam> gl_corpus(const FieldPtr& field, unsigned n, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  const LGroupSpec lgroup = split_group(GroupDescriptor::Kind::GL, n);
  std::vector<CorpusParam> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto blocks = random_gl_blocks(field, n, rng);
    const Matrix g = random_unimodular(field, n, rng);
    out.push_back({join_labels(blocks), assemble(lgroup, blocks, g)});
  }
  return out;
}

std::vector<CorpusParam> sl2_corpus(const FieldPtr& field, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  const LGroupSpec gl2 = split_group(GroupDescriptor::Kind::GL, 2);
  const Scalar one = Scalar::one(field);
  const Scalar zeta = field->spec().cyclotomic_order >= 3 ? Scalar::zeta(field, 1) : -one;
  std::vector<CorpusParam> out;
  for (std::size_t i = 0; i < count; ++i) {
    Block b{Matrix::identity(field, 2), Matrix::identity(field, 2), Matrix::zero(field, 2, 2), ""};
    switch (i % 3) {
      case 0: {
        const Scalar sign = draw(rng, 0, 1) ? one : -one;
        b = sp_part(field, 2, sign * Scalar::sqrt_q(field).inverse(), draw(rng, 0, 1) ? one : -one);
        break;
      }
      case 1: {
        const Scalar a = random_unit(field, rng, true);
        b = {Matrix::diagonal({a, a.inverse()}), Matrix::diagonal({zeta, zeta.inverse()}), Matrix::zero(field, 2, 2),
             "T[a=" + a.to_string() + "]"};
        break;
      }
      default:
        b = dihedral_part(field, -one, zeta);
    }
    const Matrix g = random_unimodular(field, 2, rng);
    out.push_back({b.label, assemble(gl2, {b}, g)});
  }
  return out;
}

std::vector<CorpusParam> corpus_for(const LGroupSpec& lgroup, const FieldPtr& field, std::size_t count,
                                    std::uint64_t seed) {
  if (!lgroup.group()) throw UnsupportedError("corpus_for: explicit data have no corpus");
  const GroupDescriptor& d = *lgroup.group();
  auto relabel = [&](std::vector<CorpusParam> v) {
    for (auto& c : v) c.param.lgroup = lgroup;
    return v;
  };
  switch (d.kind) {
    case GroupDescriptor::Kind::GL:
      return gl_corpus(field, d.n, count, seed);
    case GroupDescriptor::Kind::PGL:
      if (d.n == 2) return relabel(sl2_corpus(field, count, seed));
      break;
    case GroupDescriptor::Kind::Torus: {
      Rng rng(seed);
      std::vector<CorpusParam> out;
      for (std::size_t i = 0; i < count; ++i) {
        std::vector<Scalar> phi, rho;
        for (unsigned j = 0; j < d.n; ++j) {
          phi.push_back(random_unit(field, rng, true));
          rho.push_back(inertia_character(field, rng));
        }
        out.push_back({"torus", ParamData(lgroup, Matrix::diagonal(phi), {Matrix::diagonal(rho)},
                                          Matrix::zero(field, d.n, d.n))});
      }
      return out;
    }
    default:
      break;
  }
  throw UnsupportedError("corpus_for: no generator for " + d.to_string());
}

std::vector<SL2Param> sp_sum_corpus(const FieldPtr& field, unsigned max_n, unsigned max_part) {
  std::vector<SL2Param> out;
  std::vector<unsigned> parts;
  // Partitions in nonincreasing order, generated depth first.
  auto emit = [&](auto&& self, unsigned remaining, unsigned largest) -> void {
    if (remaining == 0) {
      std::vector<Matrix> e, h, fm, frob;
      unsigned n = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const SpBlock sp = sp_block(field, parts[i], Scalar::one(field));
        e.push_back(sp.e);
        h.push_back(sp.h);
        fm.push_back(sp.f);
        frob.push_back(Matrix::scalar(Scalar::rational(field, kSpCharacters[i % 6]), parts[i]));
        n += parts[i];
      }
      out.emplace_back(split_group(GroupDescriptor::Kind::GL, n), block_diagonal(e), block_diagonal(h),
                       block_diagonal(fm), block_diagonal(frob), std::vector<Matrix>{});
      return;
    }
    for (unsigned m = std::min(remaining, largest); m >= 1; --m) {
      parts.push_back(m);
      self(self, remaining - m, m);
      parts.pop_back();
    }
  };
  for (unsigned n = 1; n <= max_n; ++n) emit(emit, n, max_part);
  return out;
}

std::vector<std::pair<ParamData, ParamData>> inequivalent_gl3_pairs(const FieldPtr& field, std::size_t count,
                                                                    std::uint64_t seed) {
  Rng rng(seed);
  const LGroupSpec gl3 = split_group(GroupDescriptor::Kind::GL, 3);
  std::vector<std::pair<ParamData, ParamData>> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto blocks = random_gl_blocks(field, 3, rng);
    auto changed = blocks;
    bool has_monodromy = false;
    for (const auto& b : blocks) has_monodromy = has_monodromy || !b.monodromy.is_zero();
    if (i % 2 == 1 && has_monodromy) {
      for (auto& b : changed) b.monodromy = Matrix::zero(field, b.monodromy.rows(), b.monodromy.cols());
    } else {
      changed.front().frobenius = changed.front().frobenius * Scalar::rational(field, 2);
    }
    const Matrix g1 = random_unimodular(field, 3, rng);
    const Matrix g2 = random_unimodular(field, 3, rng);
    out.emplace_back(assemble(gl3, blocks, g1), assemble(gl3, changed, g2));
  }
  return out;
}

std::vector<RepExpr> rep_corpus() {
  return {parse_rep("Std"), parse_rep("Sym^2(Std)"), parse_rep("Alt^2(Std)"),
          parse_rep("det^1"), parse_rep("det^-1"), parse_rep("Std x Std")};
}

}  // namespace lcalc
