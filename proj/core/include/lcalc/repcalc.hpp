#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lcalc/matrix.hpp"
#include "lcalc/realization.hpp"
#include "lcalc/weil.hpp"

namespace lcalc {

/// Expression tree for representations of G-hat x W_F built from the
/// standard representation of the matrix realization. Bases are canonical:
/// Std uses e_0..e_{n-1}; Dual the dual basis; Sum concatenates; Tensor is
/// row-major (i * dim(b) + j); Sym^k and Alt^k use sorted multisets and sorted
/// subsets in lexicographic order.
class RepExpr {
 public:
  enum class Kind { Std, Dual, Sum, Tensor, Sym, Alt, DetPow, UnramTwist, FiniteTwist };

  static RepExpr standard();
  static RepExpr dual(RepExpr r);
  static RepExpr sum(RepExpr a, RepExpr b);
  static RepExpr tensor(RepExpr a, RepExpr b);
  static RepExpr sym(unsigned k, RepExpr r);
  static RepExpr alt(unsigned k, RepExpr r);
  static RepExpr det_pow(long k);
  /// Twist by the unramified character sigma -> u.
  static RepExpr unram_twist(RepExpr r, Scalar u);
  /// Twist by the character of the inertia generators gamma_i -> values[i].
  static RepExpr finite_twist(RepExpr r, std::vector<Scalar> values);

  Kind kind() const noexcept;
  const RepExpr& child(std::size_t i = 0) const;
  long power() const noexcept;
  const std::vector<Scalar>& twist_values() const noexcept;

  /// Dimension when Std has dimension n.
  std::size_t dimension(std::size_t n) const;
  /// Grammar form; twist nodes render as "[r]{...}" and do not parse back.
  std::string to_string() const;
  bool has_twists() const;

  friend bool operator==(const RepExpr& a, const RepExpr& b);

 private:
  struct Node;
  explicit RepExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// rep := tensor (("⊕" | "+") tensor)*;  tensor := atom (("⊗" | "x" | "*") atom)*;
/// atom := "Std" | "det^" int | "Sym^" int "(" rep ")" | "Alt^" int "(" rep ")"
///       | "Dual(" rep ")" | "(" rep ")".
RepExpr parse_rep(std::string_view text);

/// r(g) on the G-hat part (twists act trivially on G-hat).
Matrix evaluate(const RepExpr& r, const Matrix& g);
/// r(g, w) on G-hat x W_F: twists contribute u^{d_F(w)} and prod values[i]^{k_i}.
Matrix evaluate(const RepExpr& r, const Matrix& g, const WeilElement& w);
/// Derived action of a Lie algebra element.
Matrix lie_action(const RepExpr& r, const Matrix& x);
/// Torus weights of the canonical basis, computed from the tree.
std::vector<IntVec> weights(const RepExpr& r, std::size_t n);

/// Sym^k and Alt^k of a matrix in the canonical bases.
Matrix sym_power(const Matrix& m, unsigned k);
Matrix alt_power(const Matrix& m, unsigned k);

struct IsotypicPiece {
  IntVec highest_weight;       // weight of the diagonal torus of the realization
  std::vector<Vector> basis;   // spans V_[mu]
  std::size_t multiplicity = 0;
  std::size_t irreducible_dimension = 0;
};

/// Highest-weight vectors (joint kernel of the simple raising operators on
/// dominant weight spaces) closed under the lowering operators. Pieces are
/// sorted by highest weight, largest first. For SL(n) realizations weights
/// that differ by a multiple of (1, ..., 1) are merged into one piece.
std::vector<IsotypicPiece> isotypic_decomposition(const RepExpr& r, const DualRealization& realization,
                                                  const FieldPtr& field);

/// d_G of the piece's highest weight read as a cocharacter of T.
long piece_dG(const IsotypicPiece& piece, const DualRealization& realization);

/// Operator acting by scalars[i] on pieces[i].
Matrix block_scalar(const std::vector<IsotypicPiece>& pieces, const std::vector<Scalar>& scalars, std::size_t dim);

/// Incremental span with membership test.
class SpanBuilder {
 public:
  SpanBuilder(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}
  /// Adds v when it is outside the current span; returns whether it was added.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t size() const noexcept { return vectors_.size(); }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }

 private:
  Vector reduce(const Vector& v) const;
  FieldPtr field_;
  std::size_t dim_;
  std::vector<Vector> vectors_;
  std::vector<Vector> rows_;  // echelon rows, pivot normalized to 1
  std::vector<std::size_t> pivots_;
};

}  // namespace lcalc
