#pragma once

// Finite Weil model: W is generated by a geometric Frobenius lift sigma,
// generators gamma_i of a finite inertia image, and a tame generator t with
// t'(t) = 1. Conventions: d_F(sigma) = 1, |w| = q^{-d_F(w)},
// sigma t sigma^{-1} = t^{1/q}, and t commutes with the gamma_i.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lcalc {

struct WeilLetter {
  enum class Kind { Frobenius, Inertia, Tame };
  Kind kind = Kind::Frobenius;
  std::size_t index = 0;  // inertia generator index
  long exponent = 0;      // Frobenius or inertia exponent
  mpq_class tame;         // tame exponent s (t^s)

  friend bool operator==(const WeilLetter& a, const WeilLetter& b);
};

/// A word in the generators, kept with adjacent letters merged.
class WeilElement {
 public:
  WeilElement() = default;

  static WeilElement identity() { return {}; }
  static WeilElement frobenius(long m = 1);
  static WeilElement inertia(std::size_t generator, long k = 1);
  static WeilElement tame(const mpq_class& s);
  /// gamma * t^s * sigma^m, with gamma a word in inertia generators given as (index, exponent).
  static WeilElement normal(const std::vector<std::pair<std::size_t, long>>& gamma, const mpq_class& s, long m);

  const std::vector<WeilLetter>& letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }
  /// Total Frobenius exponent.
  long d_F() const;
  /// Largest inertia generator index used plus one.
  std::size_t inertia_generators_used() const;

  WeilElement inverse() const;
  friend WeilElement operator*(const WeilElement& a, const WeilElement& b);
  friend bool operator==(const WeilElement& a, const WeilElement& b) { return a.letters_ == b.letters_; }

  /// e.g. "g0^2*t^1/2*s" ("e" for the identity).
  std::string to_string() const;

 private:
  void push(WeilLetter letter);
  std::vector<WeilLetter> letters_;
};

}  // namespace lcalc
