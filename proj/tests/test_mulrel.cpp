#include <doctest.h>
#include <wct/mulrel.hpp>

using namespace wct;

namespace {

// independent oracle: exhaustive exponent box search with exact rational
// powering, no shared code with the lattice construction
ZMat brute_lattice(const std::vector<Rat>& vals, long bound) {
  long n = static_cast<long>(vals.size());
  std::vector<std::vector<Int>> rels;
  std::vector<long> e(n, -bound);
  while (true) {
    Rat prod(1);
    for (long i = 0; i < n; ++i) prod *= pow_rat(vals[i], e[i]);
    bool zero = true;
    for (long i = 0; i < n; ++i)
      if (e[i] != 0) zero = false;
    if (!zero && (prod == 1 || prod == -1)) {
      std::vector<Int> row(n);
      for (long i = 0; i < n; ++i) row[i] = e[i];
      rels.push_back(std::move(row));
    }
    long k = 0;
    while (k < n && e[k] == bound) e[k++] = -bound;
    if (k == n) break;
    ++e[k];
  }
  ZMat m(static_cast<long>(rels.size()), n);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < n; ++j) m(i, j) = rels[i][j];
  return m.rows ? lattice_basis(m) : ZMat(0, n);
}

bool lattices_equal(const ZMat& a, const ZMat& b) {
  return lattice_subset(a, b) && lattice_subset(b, a);
}

MultiplicativeTuple qt(const std::vector<Rat>& v) {
  return MultiplicativeTuple::rationals(v);
}

}  // namespace

TEST_CASE("relation lattice on rational pairs") {
  RelationLattice r = relation_lattice(qt({Rat(2), Rat(4)}));
  CHECK(r.completeness == Completeness::certified);
  REQUIRE(r.basis.rows == 1);
  CHECK(lattice_contains(r.basis, {Int(2), Int(-1)}));
  CHECK(r.torsion_orders[0] == 1);

  RelationLattice none = relation_lattice(qt({Rat(2), Rat(3)}));
  CHECK(none.basis.rows == 0);
  CHECK(none.completeness == Completeness::certified);

  RelationLattice sgn = relation_lattice(qt({Rat(-1), Rat(2)}));
  REQUIRE(sgn.basis.rows == 1);
  CHECK(lattice_contains(sgn.basis, {Int(1), Int(0)}));
  CHECK(sgn.torsion_orders[0] == 2);
  CHECK(sgn.completeness == Completeness::certified);
}

TEST_CASE("relation lattice rows re-verify and saturate") {
  std::vector<Rat> vals = {Rat(4, 9), Rat(2, 3), Rat(-6), Rat(5)};
  RelationLattice r = relation_lattice(qt(vals));
  CHECK(r.completeness == Completeness::certified);
  REQUIRE(r.basis.rows >= 1);
  for (long k = 0; k < r.basis.rows; ++k) {
    Rat prod(1);
    for (long j = 0; j < 4; ++j)
      prod *= pow_rat(vals[j], to_long(r.basis(k, j)));
    CHECK((prod == 1 || prod == -1));
    CHECK((prod == 1) == (r.torsion_orders[k] == 1));
    // saturation: divisible rows stay relations
    for (long ell : {2L, 3L, 5L, 7L}) {
      bool integral = true;
      for (long j = 0; j < 4; ++j)
        if (r.basis(k, j) % ell != 0) integral = false;
      if (!integral) continue;
      Rat p2(1);
      for (long j = 0; j < 4; ++j)
        p2 *= pow_rat(vals[j], to_long(r.basis(k, j)) / ell);
      CHECK((p2 == 1 || p2 == -1));
    }
  }
}

TEST_CASE("relation lattice matches the box oracle on random s-unit tuples") {
  Rng rng(0x6a57ed11);
  const long primes[4] = {2, 3, 5, 7};
  for (int trial = 0; trial < 100; ++trial) {
    // two independent s-unit seeds and two values tied to them by small
    // planted exponents, signs random
    auto unit = [&](int lo_p, int hi_p) {
      Rat v(rng.below(2) ? 1 : -1);
      for (int p = lo_p; p <= hi_p; ++p) {
        long e = rng.range(-2, 2);
        v *= pow_rat(Rat(primes[p]), e);
      }
      if (v == 1 || v == -1) v *= Rat(primes[lo_p]);
      return v;
    };
    Rat v1 = unit(0, 1), v2 = unit(2, 3);
    Rat v3 = pow_rat(v1, rng.range(-2, 2)) * pow_rat(v2, rng.range(-2, 2)) *
             (rng.below(2) ? Rat(1) : Rat(-1));
    Rat v4 = pow_rat(v1, rng.range(-1, 1)) * (rng.below(2) ? Rat(1) : Rat(-1));
    std::vector<Rat> vals = {v1, v2, v3, v4};
    RelationLattice r = relation_lattice(qt(vals));
    CHECK(r.completeness == Completeness::certified);
    ZMat oracle = brute_lattice(vals, 5);
    CHECK(lattices_equal(r.basis, oracle));
  }
}

TEST_CASE("relation lattice in quadratic fields") {
  FieldPtr k = NumberField::quadratic(2);
  AlgebraicNumber eps(k, {Rat(1), Rat(1)});  // 1 + sqrt 2, fundamental unit
  AlgebraicNumber eps3 = pow(eps, Int(3));
  RelationLattice r = relation_lattice(MultiplicativeTuple(k, {eps, eps3}));
  CHECK(r.completeness == Completeness::certified);
  REQUIRE(r.basis.rows == 1);
  CHECK(lattice_contains(r.basis, {Int(3), Int(-1)}));
  CHECK(r.torsion_orders[0] == 1);

  AlgebraicNumber rt2 = AlgebraicNumber::gen(k);
  AlgebraicNumber two = AlgebraicNumber::from_rat(k, Rat(2));
  RelationLattice sq = relation_lattice(MultiplicativeTuple(k, {rt2, two}));
  CHECK(sq.completeness == Completeness::certified);
  REQUIRE(sq.basis.rows == 1);
  CHECK(lattice_contains(sq.basis, {Int(2), Int(-1)}));

  FieldPtr gauss = NumberField::quadratic(-1);
  AlgebraicNumber a(gauss, {Rat(2), Rat(1)});   // 2 + i
  AlgebraicNumber b(gauss, {Rat(2), Rat(-1)});  // 2 - i
  RelationLattice g = relation_lattice(MultiplicativeTuple(gauss, {a, b}));
  CHECK(g.basis.rows == 0);  // split-place rows separate the conjugates
  CHECK(g.completeness == Completeness::certified);

  AlgebraicNumber i = AlgebraicNumber::gen(gauss);
  AlgebraicNumber m1 = AlgebraicNumber::from_rat(gauss, Rat(-1));
  RelationLattice tor = relation_lattice(MultiplicativeTuple(gauss, {i, m1}));
  CHECK(tor.completeness == Completeness::certified);
  CHECK(tor.basis.rows == 2);
}

TEST_CASE("relation lattice falls back to a bounded answer off the unit circle lattice") {
  // x = (5 + 3w)/(2 - 3w) in Q(w), w^2 + w + 1 = 0: absolute value one at
  // every embedding but not a root of unity, and no split-place refinement
  // applies in this presentation
  FieldPtr k = NumberField::from_min_poly(ZPoly{1, 1, 1}, "w");
  AlgebraicNumber num(k, {Rat(5), Rat(3)});
  AlgebraicNumber den(k, {Rat(2), Rat(-3)});
  AlgebraicNumber x = num / den;
  CHECK(norm(x) == 1);
  CHECK_FALSE(root_of_unity_order(x).has_value());
  SearchBudget small;
  small.exponent_bound = 6;
  RelationLattice r = relation_lattice(MultiplicativeTuple(k, {x}), small);
  CHECK(r.basis.rows == 0);
  CHECK(r.completeness == Completeness::bound_relative);
  CHECK(r.bound == 6);
}

TEST_CASE("weak commensurability of rational eigenvalue tuples") {
  WeakCommResult yes = is_weakly_commensurable(
      qt({Rat(2), Rat(1, 2)}), qt({Rat(8), Rat(1, 8)}), WeakCommMode::neat);
  REQUIRE(yes.yes);
  REQUIRE(yes.witness.has_value());
  MultiplicativeTuple t1 = qt({Rat(2), Rat(1, 2)});
  MultiplicativeTuple t2 = qt({Rat(8), Rat(1, 8)});
  AlgebraicNumber lhs = tuple_power(t1, yes.witness->m);
  AlgebraicNumber rhs = tuple_power(t2, yes.witness->n);
  CHECK(lhs == rhs);
  CHECK(lhs == yes.witness->common_value);
  CHECK_FALSE(lhs.is_one());
  CHECK_FALSE(root_of_unity_order(lhs).has_value());

  WeakCommResult no = is_weakly_commensurable(
      qt({Rat(2), Rat(1, 2)}), qt({Rat(3), Rat(1, 3)}), WeakCommMode::neat);
  CHECK_FALSE(no.yes);
  CHECK(no.completeness == Completeness::certified);
  WeakCommResult no2 = is_weakly_commensurable(
      qt({Rat(2), Rat(1, 2)}), qt({Rat(3), Rat(1, 3)}), WeakCommMode::strict);
  CHECK_FALSE(no2.yes);
  CHECK(no2.completeness == Completeness::certified);
}

TEST_CASE("strict mode sees shared torsion, neat mode does not") {
  WeakCommResult strict = is_weakly_commensurable(
      qt({Rat(-1)}), qt({Rat(-1)}), WeakCommMode::strict);
  REQUIRE(strict.yes);
  REQUIRE(strict.witness.has_value());
  CHECK(strict.witness->common_value ==
        AlgebraicNumber::from_rat(NumberField::rationals(), Rat(-1)));

  WeakCommResult neat = is_weakly_commensurable(qt({Rat(-1)}), qt({Rat(-1)}),
                                                WeakCommMode::neat);
  CHECK_FALSE(neat.yes);
  CHECK(neat.completeness == Completeness::certified);

  // fourth root against minus one across two presentations of Q(i)
  FieldPtr gauss = NumberField::quadratic(-1);
  MultiplicativeTuple ti(gauss, {AlgebraicNumber::gen(gauss)});
  WeakCommResult cross =
      is_weakly_commensurable(ti, qt({Rat(-1)}), WeakCommMode::strict);
  REQUIRE(cross.yes);
  AlgebraicNumber cv = cross.witness->common_value;
  CHECK_FALSE(cv.is_one());
  CHECK(root_of_unity_order(cv).has_value());
  WeakCommResult cross_neat =
      is_weakly_commensurable(ti, qt({Rat(-1)}), WeakCommMode::neat);
  CHECK_FALSE(cross_neat.yes);
}

TEST_CASE("weak commensurability is stable under entrywise powers") {
  for (long k = 1; k <= 5; ++k)
    for (long j = 1; j <= 5; ++j) {
      auto p1 = qt({pow_rat(Rat(2), k), pow_rat(Rat(1, 2), k)});
      auto p2 = qt({pow_rat(Rat(8), j), pow_rat(Rat(1, 8), j)});
      WeakCommResult r = is_weakly_commensurable(p1, p2, WeakCommMode::neat);
      CHECK(r.yes);
    }
}

TEST_CASE("weak commensurability is stable under a common exponent scale") {
  for (long m = 1; m <= 3; ++m) {
    auto y1 = qt({pow_rat(Rat(2), m), pow_rat(Rat(1, 2), m)});
    auto y2 = qt({pow_rat(Rat(8), m), pow_rat(Rat(1, 8), m)});
    CHECK(is_weakly_commensurable(y1, y2, WeakCommMode::neat).yes);
    auto n1 = qt({pow_rat(Rat(2), m)});
    auto n2 = qt({pow_rat(Rat(3), m)});
    WeakCommResult r = is_weakly_commensurable(n1, n2, WeakCommMode::neat);
    CHECK_FALSE(r.yes);
    CHECK(r.completeness == Completeness::certified);
  }
}

TEST_CASE("log ratio of rationals") {
  FieldPtr q = NumberField::rationals();
  auto num = [&](long v) { return AlgebraicNumber::from_rat(q, Rat(v)); };
  LogRatioResult r = log_ratio_rational(num(2), num(8));
  REQUIRE(r.ratio.has_value());
  CHECK(*r.ratio == Rat(1, 3));

  LogRatioResult none = log_ratio_rational(num(2), num(3));
  CHECK_FALSE(none.ratio.has_value());
  CHECK(none.completeness == Completeness::certified);

  LogRatioResult self = log_ratio_rational(num(7), num(7));
  REQUIRE(self.ratio.has_value());
  CHECK(*self.ratio == 1);

  CHECK_THROWS_AS(log_ratio_rational(num(0), num(2)), input_error);
  AlgebraicNumber half = AlgebraicNumber::from_rat(q, Rat(1, 2));
  CHECK_THROWS_AS(log_ratio_rational(half, num(2)), input_error);
}

TEST_CASE("log ratio in a real quadratic field") {
  FieldPtr k = NumberField::quadratic(2);
  AlgebraicNumber eps(k, {Rat(1), Rat(1)});
  LogRatioResult r = log_ratio_rational(pow(eps, Int(2)), pow(eps, Int(3)));
  REQUIRE(r.ratio.has_value());
  CHECK(*r.ratio == Rat(2, 3));
  CHECK(r.completeness == Completeness::certified);

  // |i| = 1 exactly: the precondition can never be certified
  FieldPtr gauss = NumberField::quadratic(-1);
  CHECK_THROWS_AS(
      log_ratio_rational(AlgebraicNumber::gen(gauss),
                         AlgebraicNumber::from_rat(gauss, Rat(2))),
      precision_exhausted);
}

TEST_CASE("tuple validation") {
  FieldPtr q = NumberField::rationals();
  CHECK_THROWS_AS(qt({Rat(0), Rat(2)}), input_error);
  CHECK_THROWS_AS(tuple_power(qt({Rat(2)}), {Int(1), Int(2)}), input_error);
  FieldPtr k = NumberField::quadratic(2);
  std::vector<AlgebraicNumber> mixed = {AlgebraicNumber::from_rat(q, Rat(2))};
  CHECK_THROWS_AS(MultiplicativeTuple(k, mixed), input_error);
}
