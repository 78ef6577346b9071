#include <doctest.h>
#include <wct/numfield.hpp>

using namespace wct;

namespace {

FMat mat2(const FieldPtr& k, const AlgebraicNumber& a, const AlgebraicNumber& b,
          const AlgebraicNumber& c, const AlgebraicNumber& d) {
  FMat m(k, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

AlgebraicNumber num(const FieldPtr& k, long v) {
  return AlgebraicNumber::from_rat(k, Rat(v));
}

}  // namespace

TEST_CASE("trace field of a diagonal unit") {
  FieldPtr k = NumberField::quadratic(2);
  AlgebraicNumber r2 = AlgebraicNumber::gen(k);
  AlgebraicNumber u = num(k, 1) + r2;
  FMat g = mat2(k, u, num(k, 0), num(k, 0), inverse(u));

  TraceFieldResult lin = trace_field({g}, 3);
  CHECK(lin.stabilized);
  CHECK(lin.dimension == 2);
  CHECK(lin.field->degree() == 2);
  // the trace 2 sqrt2 generates Q(sqrt2) again
  CHECK(lin.field->same_as(*k));

  // adjoint traces tr(w) tr(w^-1) - 1 are rational here
  TraceFieldResult adj = trace_field({g}, 3, true);
  CHECK(adj.stabilized);
  CHECK(adj.dimension == 1);
  CHECK(adj.field->degree() == 1);
}

TEST_CASE("parabolic generators with irrational entries have rational traces") {
  FieldPtr k = NumberField::quadratic(2);
  AlgebraicNumber r2 = AlgebraicNumber::gen(k);
  FMat g1 = mat2(k, num(k, 1), r2, num(k, 0), num(k, 1));
  FMat g2 = mat2(k, num(k, 1), num(k, 0), r2, num(k, 1));
  // every word trace lies in Z[entries products]: here traces are rational
  TraceFieldResult r = trace_field({g1, g2}, 4);
  CHECK(r.stabilized);
  CHECK(r.dimension == 1);
  CHECK(r.field->degree() == 1);
}

TEST_CASE("stabilization flag tracks the word bound") {
  FieldPtr k = NumberField::quadratic(2);
  AlgebraicNumber r2 = AlgebraicNumber::gen(k);
  AlgebraicNumber u = num(k, 1) + r2;
  FMat g = mat2(k, u, num(k, 0), num(k, 0), inverse(u));
  TraceFieldResult shallow = trace_field({g}, 1);
  CHECK_FALSE(shallow.stabilized);
  CHECK(shallow.dimension == 2);
}

TEST_CASE("trace field input validation") {
  FieldPtr k = NumberField::quadratic(2);
  FieldPtr k3 = NumberField::quadratic(3);
  FMat sing = mat2(k, num(k, 1), num(k, 1), num(k, 1), num(k, 1));
  CHECK_THROWS_AS(trace_field({sing}, 2), input_error);
  FMat a = FMat::identity(k, 2);
  FMat b = FMat::identity(k3, 2);
  CHECK_THROWS_AS(trace_field({a, b}, 2), input_error);
  CHECK_THROWS_AS(trace_field({}, 2), input_error);
}

TEST_CASE("two generator group with quartic trace field") {
  // diagonal units from two quadratic fields force the compositum
  FieldPtr tr = NumberField::from_min_poly(ZPoly{Int(1), Int(0), Int(-10), Int(0), Int(1)});
  // in Q(sqrt2 + sqrt3): sqrt2 = (g^3 - 9g)/2, sqrt3 = (11g - g^3)/2
  AlgebraicNumber g = AlgebraicNumber::gen(tr);
  AlgebraicNumber g3 = g * g * g;
  AlgebraicNumber s2 = Rat(1, 2) * (g3 - Rat(9) * g);
  AlgebraicNumber s3 = Rat(1, 2) * (Rat(11) * g - g3);
  CHECK(min_poly_of(s2) == QPoly{Rat(-2), Rat(0), Rat(1)});
  CHECK(min_poly_of(s3) == QPoly{Rat(-3), Rat(0), Rat(1)});
  AlgebraicNumber u = num(tr, 1) + s2;   // 1 + sqrt2, inverse sqrt2 - 1
  AlgebraicNumber v = num(tr, 2) + s3;   // 2 + sqrt3, inverse 2 - sqrt3
  FMat m1 = mat2(tr, u, num(tr, 0), num(tr, 0), s2 - num(tr, 1));
  FMat m2 = mat2(tr, v, num(tr, 0), num(tr, 0), num(tr, 2) - s3);
  TraceFieldResult r = trace_field({m1, m2}, 3);
  CHECK(r.stabilized);
  CHECK(r.dimension == 4);
  CHECK(r.field->degree() == 4);
}

TEST_CASE("compositum of two quadratic fields") {
  FieldPtr k1 = NumberField::quadratic(2);
  FieldPtr k2 = NumberField::quadratic(3);
  CompositumMap c = compositum(k1, k2);
  CHECK(c.field->degree() == 4);
  AlgebraicNumber a = transport(AlgebraicNumber::gen(k1), c.field, c.image_gen1);
  AlgebraicNumber b = transport(AlgebraicNumber::gen(k2), c.field, c.image_gen2);
  CHECK((a * a).as_rational() == 2);
  CHECK((b * b).as_rational() == 3);
  AlgebraicNumber s = a * b;
  CHECK((s * s).as_rational() == 6);
  CHECK(min_poly_of(a + b) == QPoly{Rat(1), Rat(0), Rat(-10), Rat(0), Rat(1)});
}

TEST_CASE("compositum respects the marked embeddings") {
  // both fields marked at their first arch place
  FieldPtr k1 = NumberField::quadratic(2);
  CompositumMap c = compositum(k1, k1);
  CHECK(c.field->degree() == 2);
  AlgebraicNumber a = transport(AlgebraicNumber::gen(k1), c.field, c.image_gen1);
  AlgebraicNumber b = transport(AlgebraicNumber::gen(k1), c.field, c.image_gen2);
  // the two copies agree, not conjugate, because they share the embedding
  CHECK(a == b);
}

TEST_CASE("compositum with the rationals is the identity") {
  FieldPtr q = NumberField::rationals();
  FieldPtr k = NumberField::quadratic(-7);
  CompositumMap c = compositum(q, k);
  CHECK(c.field->degree() == 2);
  AlgebraicNumber img = transport(AlgebraicNumber::gen(k), c.field, c.image_gen2);
  CHECK((img * img).as_rational() == -7);
}

TEST_CASE("compositum degree cap") {
  FieldPtr k1 = NumberField::from_min_poly(ZPoly{Int(-2), Int(0), Int(0), Int(0), Int(0), Int(1)});
  FieldPtr k2 = NumberField::from_min_poly(ZPoly{Int(-3), Int(0), Int(0), Int(0), Int(0), Int(1)});
  CHECK_THROWS_AS(compositum(k1, k2), field_too_large);
}

TEST_CASE("transport rejects non roots") {
  FieldPtr k1 = NumberField::quadratic(2);
  FieldPtr k2 = NumberField::quadratic(3);
  // sqrt3 is not a root of x^2 - 2
  std::vector<Rat> fake{Rat(0), Rat(1)};
  CHECK_THROWS_AS(transport(AlgebraicNumber::gen(k1), k2, fake), input_error);
}
