#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcalc {

using IntVec = std::vector<long>;
using IntMatrix = std::vector<IntVec>;

/// Standard pairing on Z^rank x Z^rank.
long pairing(const IntVec& x, const IntVec& y);

/// Named constructors understood by build().
struct GroupDescriptor {
  enum class Kind { GL, SL, PGL, Torus };
  Kind kind = Kind::GL;
  unsigned n = 1;

  std::string to_string() const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Parses "GL(3)", "SL(2)", "PGL(2)", "Torus(2)" (also "T(2)").
GroupDescriptor parse_group_descriptor(std::string_view text);

/// Based root datum in explicit coordinates. Characters and cocharacters are
/// both Z^rank with the standard pairing.
class BasedRootDatum {
 public:
  /// Validates the root system axioms and that `simple` indexes a base.
  BasedRootDatum(std::size_t rank, std::vector<IntVec> roots, std::vector<IntVec> coroots,
                 std::vector<std::size_t> simple, std::string name = {});

  static BasedRootDatum build(const GroupDescriptor& descriptor);
  static BasedRootDatum gl(unsigned n);
  /// X* is the sum-zero sublattice of Z^n in the basis e_i - e_n.
  static BasedRootDatum pgl(unsigned n);
  static BasedRootDatum sl(unsigned n);
  static BasedRootDatum torus(unsigned r);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<IntVec>& roots() const noexcept { return roots_; }
  const std::vector<IntVec>& coroots() const noexcept { return coroots_; }
  const std::vector<std::size_t>& simple_indices() const noexcept { return simple_; }
  const std::string& name() const noexcept { return name_; }
  std::vector<IntVec> simple_roots() const;
  std::vector<IntVec> simple_coroots() const;

  /// Indices of positive roots with respect to the base.
  const std::vector<std::size_t>& positive_indices() const noexcept { return positive_; }

  /// Swaps characters and cocharacters.
  BasedRootDatum dual() const;

  IntVec reflect_character(std::size_t root_index, const IntVec& x) const;
  IntVec reflect_cocharacter(std::size_t root_index, const IntVec& y) const;

  bool is_dominant_cocharacter(const IntVec& mu) const;
  /// Dominant element of the Weyl orbit of a cocharacter, by reflection descent.
  IntVec dominant_cocharacter(const IntVec& mu) const;
  bool is_dominant_character(const IntVec& lambda) const;
  IntVec dominant_character(const IntVec& lambda) const;

  /// Structural equality; the name is ignored.
  friend bool operator==(const BasedRootDatum& a, const BasedRootDatum& b);

 private:
  void compute_positive();
  void validate() const;

  std::size_t rank_;
  std::vector<IntVec> roots_;
  std::vector<IntVec> coroots_;
  std::vector<std::size_t> simple_;
  std::string name_;
  std::vector<std::size_t> positive_;
};

/// Sum of the positive roots (a character).
IntVec two_rho(const BasedRootDatum& d);
/// Sum of the positive coroots (a cocharacter).
IntVec two_rho_check(const BasedRootDatum& d);

/// delta_G is 2rho read as a cocharacter of the dual torus; z_G = delta_G(-1)
/// as signs s_i = (-1)^{delta_i} in the coordinates of X*(T).
struct DeltaZ {
  IntVec delta;
  std::vector<int> z_signs;
};
DeltaZ delta_and_zG(const BasedRootDatum& d);

/// Value of a character mu of the dual torus (a cocharacter of T) at a sign vector.
int evaluate_at_signs(const IntVec& mu, const std::vector<int>& signs);

/// <2rho, dominant(mu)>.
long d_G(const BasedRootDatum& d, const IntVec& mu);

struct WeylOrbit {
  std::vector<IntVec> elements;  // sorted
  IntVec dominant;               // lexicographically largest dominant element
};
/// Orbit of a cocharacter under the simple coroot reflections.
/// Throws PreconditionError once more than `bound` elements are found.
WeylOrbit weyl_orbit(const BasedRootDatum& d, const IntVec& mu, std::size_t bound = 100000);
/// |W| as the orbit size of the regular cocharacter 2rho-check.
std::size_t weyl_group_order(const BasedRootDatum& d, std::size_t bound = 100000);

/// L-group data for the dual group: the datum of G-hat and a finite Galois
/// action given by an integer matrix on X*(T-hat) of the stated order.
class LGroupSpec {
 public:
  explicit LGroupSpec(BasedRootDatum dual_datum);
  LGroupSpec(BasedRootDatum dual_datum, unsigned galois_order, IntMatrix galois_action);

  /// L-group of the split group G with the given descriptor.
  static LGroupSpec split(const GroupDescriptor& g);

  const BasedRootDatum& dual_datum() const noexcept { return dual_; }
  unsigned galois_order() const noexcept { return galois_order_; }
  const IntMatrix& galois_action() const noexcept { return galois_action_; }
  bool is_split() const noexcept { return galois_order_ == 1; }
  /// Descriptor of G when built through split(); empty for explicit data.
  const std::optional<GroupDescriptor>& group() const noexcept { return group_; }

  /// Datum of G itself (the dual of dual_datum()).
  BasedRootDatum group_datum() const { return dual_.dual(); }

  /// Galois generator on characters of T-hat, i.e. on cocharacters of T.
  IntVec act(const IntVec& x) const;

  friend bool operator==(const LGroupSpec& a, const LGroupSpec& b);

 private:
  BasedRootDatum dual_;
  unsigned galois_order_ = 1;
  IntMatrix galois_action_;
  std::optional<GroupDescriptor> group_;
};

IntMatrix integer_identity(std::size_t n);
IntVec transform(const IntMatrix& m, const IntVec& v);

}  // namespace lcalc
