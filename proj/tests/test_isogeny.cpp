#include <doctest.h>

#include <wct/isogeny.hpp>

using namespace wct;

namespace {

GaloisModule trivial_module(long rank) {
  GaloisModule m;
  m.rank = rank;
  m.group_order = 1;
  m.action = {ZMat::identity(rank)};
  return m;
}

GaloisModule swap_module() {
  GaloisModule m;
  m.rank = 2;
  m.group_order = 2;
  m.action = {ZMat::identity(2), ZMat(2, 2, {Int(0), Int(1), Int(1), Int(0)})};
  return m;
}

// Z/4 generated by the quarter turn
GaloisModule rotation_module() {
  GaloisModule m;
  m.rank = 2;
  m.group_order = 4;
  ZMat r(2, 2, {Int(0), Int(-1), Int(1), Int(0)});
  m.action = {ZMat::identity(2), r, mat_mul(r, r), mat_mul(r, mat_mul(r, r))};
  return m;
}

TorusElementData rational_element(const GaloisModule& m,
                                  const std::vector<Rat>& vals) {
  TorusElementData t;
  t.module = m;
  t.field = NumberField::rationals();
  for (const Rat& v : vals)
    t.values.push_back(AlgebraicNumber::from_rat(t.field, v));
  return t;
}

std::vector<Int> chi(std::initializer_list<long> v) {
  std::vector<Int> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("module validation") {
  GaloisModule m = swap_module();
  CHECK_NOTHROW(m.validate());
  SUBCASE("rejects a non unimodular matrix") {
    m.action[1] = ZMat(2, 2, {Int(2), Int(0), Int(0), Int(1)});
    CHECK_THROWS_AS(m.validate(), input_error);
  }
  SUBCASE("rejects a set without the identity") {
    m.action.erase(m.action.begin());
    m.group_order = 1;
    CHECK_THROWS_AS(m.validate(), input_error);
  }
  SUBCASE("rejects a set not closed under products") {
    GaloisModule r = rotation_module();
    r.action.pop_back();
    r.group_order = 3;
    CHECK_THROWS_AS(r.validate(), input_error);
  }
  SUBCASE("rejects a size mismatch") {
    m.group_order = 3;
    CHECK_THROWS_AS(m.validate(), input_error);
  }
}

TEST_CASE("evaluation data on simple modules") {
  SUBCASE("trivial group, unit character") {
    TorusElementData t = rational_element(trivial_module(1), {Rat(2)});
    NuData n = nu_data(t.module, chi({1}), t);
    REQUIRE(n.image.rows == 1);
    CHECK(n.image(0, 0) == 1);
    CHECK(n.kernel.rows == 0);
    CHECK(n.completeness == Completeness::certified);
  }
  SUBCASE("trivial group, doubled character has index two") {
    TorusElementData t = rational_element(trivial_module(1), {Rat(2)});
    NuData n = nu_data(t.module, chi({2}), t);
    REQUIRE(n.image.rows == 1);
    CHECK(n.image(0, 0) == 2);
    CHECK(lattice_index(n.image, 1) == 2);
  }
  SUBCASE("swap orbit spans the plane") {
    TorusElementData t = rational_element(swap_module(), {Rat(2), Rat(3)});
    NuData n = nu_data(t.module, chi({1, 0}), t);
    CHECK(n.image.rows == 2);
    CHECK(lattice_index(n.image, 2) == 1);
    CHECK(n.kernel.rows == 0);
  }
  SUBCASE("equal values put the difference in the kernel") {
    TorusElementData t = rational_element(swap_module(), {Rat(2), Rat(2)});
    NuData n = nu_data(t.module, chi({1, 0}), t);
    REQUIRE(n.kernel.rows == 1);
    // identity minus swap evaluates to 2/2 = 1 on the element
    std::vector<Int> row = n.kernel.row(0);
    CHECK(((row == std::vector<Int>{Int(1), Int(-1)}) ||
           (row == std::vector<Int>{Int(-1), Int(1)})));
  }
  SUBCASE("rejects the zero character") {
    TorusElementData t = rational_element(trivial_module(1), {Rat(2)});
    CHECK_THROWS_AS(nu_data(t.module, chi({0}), t), input_error);
  }
}

TEST_CASE("galois compatibility spot check") {
  FieldPtr k = NumberField::quadratic(2);
  AlgebraicNumber s = AlgebraicNumber::gen(k);
  AlgebraicNumber eps = AlgebraicNumber::from_rat(k, Rat(1)) + s;  // 1+sqrt2
  AlgebraicNumber conj = AlgebraicNumber::from_rat(k, Rat(1)) - s;
  TorusElementData t;
  t.module = swap_module();
  t.field = k;
  t.values = {eps, conj};
  t.galois_images = {s, -s};
  SUBCASE("consistent data passes") {
    NuData n = nu_data(t.module, chi({1, 0}), t);
    // eps * conj = -1, so identity plus swap evaluates to a torsion value
    REQUIRE(n.kernel.rows == 1);
    std::vector<Int> row = n.kernel.row(0);
    CHECK(((row == std::vector<Int>{Int(1), Int(1)}) ||
           (row == std::vector<Int>{Int(-1), Int(-1)})));
  }
  SUBCASE("a value breaking the conjugation is rejected") {
    t.values[1] = AlgebraicNumber::from_rat(k, Rat(3)) + s;
    CHECK_THROWS_AS(nu_data(t.module, chi({1, 0}), t), value_inconsistent);
  }
  SUBCASE("a declared image that is no conjugate is rejected") {
    t.galois_images[1] = eps;
    CHECK_THROWS_AS(nu_data(t.module, chi({1, 0}), t), value_inconsistent);
  }
}

TEST_CASE("isogeny construction on rank one") {
  SUBCASE("identity case") {
    TorusElementData t = rational_element(trivial_module(1), {Rat(2)});
    IsogenyResult r = build_isogeny(t, chi({1}), t, chi({1}));
    CHECK(r.d == 1);
    CHECK(r.m1 == 1);
    CHECK(r.m2 == 1);
    REQUIRE(r.pi_star.rows == 1);
    CHECK(r.pi_star(0, 0) == 1);
  }
  SUBCASE("index two character") {
    TorusElementData t1 = rational_element(trivial_module(1), {Rat(3)});
    TorusElementData t2 = rational_element(trivial_module(1), {Rat(9)});
    IsogenyResult r = build_isogeny(t1, chi({2}), t2, chi({1}));
    CHECK(r.d == 2);
    CHECK(r.m1 == 4);
    CHECK(r.m2 == 2);
    CHECK(r.pi_star(0, 0) == 1);  // generator goes to generator
  }
  SUBCASE("mismatched values are rejected") {
    TorusElementData t1 = rational_element(trivial_module(1), {Rat(3)});
    TorusElementData t2 = rational_element(trivial_module(1), {Rat(10)});
    CHECK_THROWS_AS(build_isogeny(t1, chi({2}), t2, chi({1})), value_mismatch);
  }
  SUBCASE("torsion common values are rejected") {
    TorusElementData t = rational_element(trivial_module(1), {Rat(-1)});
    CHECK_THROWS_AS(build_isogeny(t, chi({1}), t, chi({1})), value_mismatch);
  }
  SUBCASE("an orbit that does not span is rejected") {
    TorusElementData t = rational_element(trivial_module(2), {Rat(2), Rat(3)});
    CHECK_THROWS_AS(build_isogeny(t, chi({1, 0}), t, chi({1, 0})),
                    not_irreducible);
  }
}

TEST_CASE("isogeny construction on the swap module") {
  TorusElementData t = rational_element(swap_module(), {Rat(2), Rat(3)});
  IsogenyResult r = build_isogeny(t, chi({1, 0}), t, chi({1, 0}));
  CHECK(r.d == 1);
  CHECK(r.pi_star == ZMat::identity(2));
}

TEST_CASE("isogeny recovers a rotation equivariant map with index scaling") {
  // chi = (1,1) has orbit lattice of index two; the partner element is
  // derived from the inverse quarter turn, so pi_star must be twice the turn
  GaloisModule m = rotation_module();
  TorusElementData t1 = rational_element(m, {Rat(2), Rat(3)});
  TorusElementData t2 = rational_element(m, {Rat(1, 3), Rat(2)});
  IsogenyResult r = build_isogeny(t1, chi({1, 1}), t2, chi({-1, 1}));
  CHECK(r.d == 2);
  CHECK(r.m1 == 4);
  CHECK(r.m2 == 2);
  CHECK(r.pi_star == ZMat(2, 2, {Int(0), Int(-2), Int(2), Int(0)}));
}

TEST_CASE("kernel mismatches are rejected") {
  SUBCASE("lattice level mismatch") {
    TorusElementData t1 = rational_element(swap_module(), {Rat(2), Rat(2)});
    TorusElementData t2 = rational_element(swap_module(), {Rat(2), Rat(3)});
    CHECK_THROWS_AS(build_isogeny(t1, chi({1, 0}), t2, chi({1, 0})),
                    kernel_mismatch);
  }
  SUBCASE("value level mismatch") {
    // kernels agree and the marked characters agree, but a basis character
    // value was perturbed, breaking the element identity
    TorusElementData t1 = rational_element(swap_module(), {Rat(2), Rat(3)});
    TorusElementData t2 = rational_element(swap_module(), {Rat(2), Rat(5)});
    CHECK_THROWS_AS(build_isogeny(t1, chi({1, 0}), t2, chi({1, 0})),
                    kernel_mismatch);
  }
}

TEST_CASE("isogenies compose to a positive scaling") {
  TorusElementData t1 = rational_element(trivial_module(1), {Rat(3)});
  TorusElementData t2 = rational_element(trivial_module(1), {Rat(9)});
  IsogenyResult fwd = build_isogeny(t1, chi({2}), t2, chi({1}));
  IsogenyResult back = build_isogeny(t2, chi({1}), t1, chi({2}));
  ZMat comp = mat_mul(back.pi_star, fwd.pi_star);
  CHECK(comp(0, 0) > 0);
  CHECK(comp(0, 0) == fwd.d * back.d);

  GaloisModule m = rotation_module();
  TorusElementData u1 = rational_element(m, {Rat(2), Rat(3)});
  TorusElementData u2 = rational_element(m, {Rat(1, 3), Rat(2)});
  IsogenyResult f2 = build_isogeny(u1, chi({1, 1}), u2, chi({-1, 1}));
  IsogenyResult b2 = build_isogeny(u2, chi({-1, 1}), u1, chi({1, 1}));
  ZMat c2 = mat_mul(b2.pi_star, f2.pi_star);
  Int scale = f2.d * b2.d;
  ZMat expect(2, 2, {scale, Int(0), Int(0), scale});
  CHECK(c2 == expect);
}

TEST_CASE("quadratic unit data with declared conjugation builds the identity") {
  FieldPtr k = NumberField::quadratic(2);
  AlgebraicNumber s = AlgebraicNumber::gen(k);
  AlgebraicNumber eps = AlgebraicNumber::from_rat(k, Rat(1)) + s;
  AlgebraicNumber conj = AlgebraicNumber::from_rat(k, Rat(1)) - s;
  TorusElementData t;
  t.module = swap_module();
  t.field = k;
  t.values = {eps, conj};
  t.galois_images = {s, -s};
  IsogenyResult r = build_isogeny(t, chi({1, 0}), t, chi({1, 0}));
  CHECK(r.d == 1);
  CHECK(r.pi_star == ZMat::identity(2));
}

TEST_CASE("root compatibility of the built map") {
  RootSystem a2 = build_root_system(RootSystemType::parse("A2"));
  IsogenyResult r;
  r.d = 1;
  r.m1 = 1;
  r.m2 = 1;
  SUBCASE("identity matches with unit scaling") {
    r.pi_star = ZMat::identity(2);
    MatchResult m = check_root_compat(r, a2, a2);
    CHECK(m.kind == MatchResult::Kind::scaled);
    CHECK(m.t == Rat(1));
  }
  SUBCASE("doubling needs the half correction") {
    r.pi_star = ZMat(2, 2, {Int(2), Int(0), Int(0), Int(2)});
    MatchResult m = check_root_compat(r, a2, a2);
    CHECK(m.kind == MatchResult::Kind::scaled);
    CHECK(m.t == Rat(1, 2));
  }
  SUBCASE("short long mixing on b2 only preserves the span") {
    RootSystem b2 = build_root_system(RootSystemType::parse("B2"));
    r.pi_star = ZMat(2, 2, {Int(2), Int(-1), Int(2), Int(0)});
    MatchResult m = check_root_compat(r, b2, b2);
    CHECK(m.kind == MatchResult::Kind::span_only);
  }
}
