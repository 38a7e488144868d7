#pragma once

#include <vector>

#include "lcalc/matrix.hpp"
#include "lcalc/rootdata.hpp"

namespace lcalc {

/// Faithful matrix realization of the dual group of a split group.
///   G = GL(n)     -> G-hat = GL(n), all invertible n x n matrices
///   G = PGL(n)    -> G-hat = SL(n) inside GL(n)
///   G = Torus(r)  -> G-hat = diagonal r x r matrices
/// G = SL(n) would need PGL(n) as G-hat, which has no faithful n-dimensional
/// realization; it is rejected.
class DualRealization {
 public:
  enum class Kind { GeneralLinear, SpecialLinear, Torus };

  /// Throws UnsupportedError for non-split or non-realizable groups.
  static DualRealization for_lgroup(const LGroupSpec& lgroup);

  Kind kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return n_; }
  const char* kind_name() const noexcept;

  bool contains(const Matrix& g) const;
  bool lie_contains(const Matrix& x) const;
  /// Image of z_G, a central element of order at most 2.
  Matrix z_G(const FieldPtr& field) const;
  /// Element of the dual torus with sign s_i on the i-th coordinate of X*(T).
  Matrix torus_signs(const FieldPtr& field, const std::vector<int>& signs) const;

  /// Simple raising operators E_{i,i+1}; empty for tori.
  std::vector<Matrix> raising(const FieldPtr& field) const;
  std::vector<Matrix> lowering(const FieldPtr& field) const;
  /// Diagonal torus weight (Z^n) to the corresponding cocharacter of T.
  IntVec weight_to_cocharacter(const IntVec& weight) const;

  const BasedRootDatum& group_datum() const noexcept { return group_datum_; }

 private:
  DualRealization(Kind kind, std::size_t n, BasedRootDatum group_datum)
      : kind_(kind), n_(n), group_datum_(std::move(group_datum)) {}

  Kind kind_;
  std::size_t n_;
  BasedRootDatum group_datum_;
};

}  // namespace lcalc
