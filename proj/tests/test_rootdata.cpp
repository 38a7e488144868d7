#include <doctest.h>

#include <algorithm>
#include <set>

#include "lcalc/error.hpp"
#include "lcalc/realization.hpp"
#include "lcalc/rootdata.hpp"

using namespace lcalc;

namespace {

BasedRootDatum datum(const char* text) { return BasedRootDatum::build(parse_group_descriptor(text)); }

// Sum of e_i - e_j over i < j.
IntVec oracle_two_rho_gl(unsigned n) {
  IntVec out(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      ++out[i];
      --out[j];
    }
  }
  return out;
}

std::vector<IntVec> box(std::size_t rank, long bound) {
  std::vector<IntVec> out{IntVec{}};
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<IntVec> next;
    for (const auto& v : out) {
      for (long x = -bound; x <= bound; ++x) {
        IntVec w = v;
        w.push_back(x);
        next.push_back(w);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("build examples") {
  const BasedRootDatum gl2 = datum("GL(2)");
  CHECK(gl2.rank() == 2);
  const std::set<IntVec> roots(gl2.roots().begin(), gl2.roots().end());
  CHECK(roots == std::set<IntVec>{{1, -1}, {-1, 1}});
  const BasedRootDatum t3 = datum("Torus(3)");
  CHECK(t3.rank() == 3);
  CHECK(t3.roots().empty());
  CHECK(datum("PGL(2)").dual() == datum("SL(2)"));
  CHECK_THROWS_AS(parse_group_descriptor("GL(0)"), PreconditionError);
  CHECK_THROWS_AS(parse_group_descriptor("Sp(4)"), ParseError);
  CHECK_THROWS_AS(parse_group_descriptor("GL(3"), ParseError);
}

TEST_CASE("root datum axioms for the supported families") {
  for (const char* g : {"GL(1)", "GL(2)", "GL(3)", "GL(4)", "SL(2)", "SL(3)", "PGL(2)", "PGL(3)", "PGL(4)", "T(2)"}) {
    CAPTURE(g);
    const BasedRootDatum d = datum(g);
    REQUIRE(d.roots().size() == d.coroots().size());
    for (std::size_t i = 0; i < d.roots().size(); ++i) CHECK(pairing(d.roots()[i], d.coroots()[i]) == 2);
    CHECK(d.dual().dual() == d);
    CHECK(d.positive_indices().size() * 2 == d.roots().size());
  }
  // Wrong pairing is rejected.
  CHECK_THROWS_AS(BasedRootDatum(1, {{1}, {-1}}, {{1}, {-1}}, {0}), PreconditionError);
}

TEST_CASE("two_rho examples") {
  CHECK(two_rho(datum("GL(2)")) == IntVec{1, -1});
  CHECK(two_rho(datum("GL(3)")) == IntVec{2, 0, -2});
  CHECK(two_rho(datum("T(3)")) == IntVec{0, 0, 0});
  for (unsigned n = 1; n <= 7; ++n) CHECK(two_rho(BasedRootDatum::gl(n)) == oracle_two_rho_gl(n));
}

TEST_CASE("delta_and_zG examples") {
  const DeltaZ gl2 = delta_and_zG(datum("GL(2)"));
  CHECK(gl2.delta == IntVec{1, -1});
  CHECK(gl2.z_signs == std::vector<int>{-1, -1});
  CHECK(delta_and_zG(datum("GL(3)")).z_signs == std::vector<int>{1, 1, 1});
  CHECK(delta_and_zG(datum("T(4)")).z_signs == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("z_GL(n) = (-1)^(n-1) Identity for n = 1..8") {
  auto f = Field::make(1, 3);
  for (unsigned n = 1; n <= 8; ++n) {
    const auto real = DualRealization::for_lgroup(LGroupSpec::split({GroupDescriptor::Kind::GL, n}));
    const Matrix expected = Matrix::scalar(Scalar::rational(f, n % 2 ? 1 : -1), n);
    CHECK(real.z_G(f) == expected);
    CHECK((real.z_G(f) * real.z_G(f)).is_identity());
  }
}

TEST_CASE("d_G examples") {
  CHECK(d_G(datum("GL(2)"), {1, 0}) == 1);
  CHECK(d_G(datum("GL(3)"), {2, 1, 0}) == 4);
  for (unsigned n = 1; n <= 6; ++n) {
    IntVec pairing_vector;
    for (unsigned i = 0; i < n; ++i) pairing_vector.push_back(static_cast<long>(n) - 1 - 2 * static_cast<long>(i));
    for (unsigned k = 0; k <= n; ++k) {
      IntVec mu(n, 0);
      std::fill(mu.begin(), mu.begin() + k, 1);
      const long oracle = pairing(pairing_vector, mu);
      CHECK(oracle == static_cast<long>(k * (n - k)));
      CHECK(d_G(BasedRootDatum::gl(n), mu) == oracle);
      std::reverse(mu.begin(), mu.end());
      CHECK(d_G(BasedRootDatum::gl(n), mu) == oracle);
    }
  }
}

TEST_CASE("weyl_orbit examples") {
  const WeylOrbit o = weyl_orbit(datum("GL(2)"), {1, 0});
  CHECK(o.elements == std::vector<IntVec>{{0, 1}, {1, 0}});
  CHECK(o.dominant == IntVec{1, 0});

  IntVec v{0, 1, 1};
  std::vector<IntVec> perms;
  do perms.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  const WeylOrbit o3 = weyl_orbit(datum("GL(3)"), {1, 1, 0});
  CHECK(o3.elements.size() == 3);
  CHECK(o3.elements == perms);
  CHECK(o3.dominant == IntVec{1, 1, 0});

  for (const char* g : {"GL(3)", "PGL(3)", "SL(2)", "T(2)"}) {
    const BasedRootDatum d = datum(g);
    CHECK(weyl_orbit(d, IntVec(d.rank(), 0)).elements.size() == 1);
  }
  CHECK_THROWS_AS(weyl_orbit(BasedRootDatum::gl(6), {5, 4, 3, 2, 1, 0}, 100), PreconditionError);
}

TEST_CASE("Weyl group orders") {
  std::size_t factorial = 1;
  for (unsigned n = 1; n <= 5; ++n) {
    factorial *= n;
    CHECK(weyl_group_order(BasedRootDatum::gl(n)) == factorial);
    CHECK(weyl_group_order(BasedRootDatum::pgl(n)) == factorial);
  }
  CHECK(weyl_group_order(datum("T(3)")) == 1);
}

TEST_CASE("property: d_G is Weyl invariant") {
  for (const char* g : {"GL(2)", "GL(3)", "PGL(2)", "PGL(3)", "SL(2)", "SL(3)"}) {
    const BasedRootDatum d = datum(g);
    for (const auto& mu : box(d.rank(), 2)) {
      const long value = d_G(d, mu);
      for (const auto& w_mu : weyl_orbit(d, mu).elements) CHECK(d_G(d, w_mu) == value);
    }
  }
}

TEST_CASE("property: parity law mu(z_G) = (-1)^d_G on [-3,3]^rank") {
  for (const char* g : {"GL(2)", "GL(3)", "PGL(2)", "SL(2)", "PGL(3)", "T(2)"}) {
    CAPTURE(g);
    const BasedRootDatum d = datum(g);
    const auto z = delta_and_zG(d).z_signs;
    for (const auto& mu : box(d.rank(), 3)) {
      CHECK(evaluate_at_signs(mu, z) == (d_G(d, mu) % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("dominant representatives") {
  const BasedRootDatum d = datum("GL(3)");
  CHECK(d.dominant_cocharacter({0, 2, 1}) == IntVec{2, 1, 0});
  CHECK(d.is_dominant_cocharacter({2, 2, -1}));
  CHECK_FALSE(d.is_dominant_cocharacter({0, 1, 0}));
  CHECK(d.dominant_character({-1, 0, 3}) == IntVec{3, 0, -1});
}

TEST_CASE("L-group specs") {
  const LGroupSpec gl3 = LGroupSpec::split({GroupDescriptor::Kind::GL, 3});
  CHECK(gl3.is_split());
  CHECK(gl3.group_datum() == BasedRootDatum::gl(3));
  // The outer automorphism x -> -w0(x) of GL(3) preserves roots, pairing and the base.
  const IntMatrix outer{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}};
  const LGroupSpec quasi(BasedRootDatum::gl(3), 2, outer);
  CHECK(quasi.galois_order() == 2);
  CHECK(quasi.act({1, 0, 0}) == IntVec{0, 0, -1});
  // A permutation moving the base is rejected, as is a wrong order.
  const IntMatrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK_THROWS_AS(LGroupSpec(BasedRootDatum::gl(3), 2, swap), PreconditionError);
  CHECK_THROWS_AS(LGroupSpec(BasedRootDatum::gl(3), 3, outer), PreconditionError);
  CHECK_THROWS_AS(DualRealization::for_lgroup(quasi), UnsupportedError);
  CHECK_THROWS_AS(DualRealization::for_lgroup(LGroupSpec::split({GroupDescriptor::Kind::SL, 2})), UnsupportedError);
}

TEST_CASE("property: d_G is Galois invariant for the outer automorphism") {
  const IntMatrix outer{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}};
  const LGroupSpec quasi(BasedRootDatum::gl(3), 2, outer);
  const BasedRootDatum g = quasi.group_datum();
  for (const auto& mu : box(3, 2)) CHECK(d_G(g, quasi.act(mu)) == d_G(g, mu));
}
