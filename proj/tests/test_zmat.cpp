#include <doctest.h>
#include <wct/zmat.hpp>

using namespace wct;

namespace {

ZMat make(long r, long c, std::initializer_list<long> v) {
  ZMat m(r, c);
  long i = 0;
  for (long x : v) m.a[i++] = Int(x);
  return m;
}

QMat makeq(long r, long c, std::initializer_list<long> v) {
  QMat m(r, c);
  long i = 0;
  for (long x : v) m.a[i++] = Rat(x);
  return m;
}

}  // namespace

TEST_CASE("hermite form canonical and lattice preserving") {
  ZMat a = make(3, 2, {2, 0, 0, 2, 1, 1});
  ZMat h = a;
  ZMat u(0, 0);
  long rank = hnf_rows(h, &u);
  CHECK(rank == 2);
  CHECK(h(0, 0) == 1);
  CHECK(h(0, 1) == 1);
  CHECK(h(1, 0) == 0);
  CHECK(h(1, 1) == 2);
  // same row lattice both ways
  CHECK(lattice_subset(a, h));
  CHECK(lattice_subset(h, a));
  // idempotent
  ZMat h2 = h;
  hnf_rows(h2);
  CHECK(h2 == h);
}

TEST_CASE("hermite transform matrix") {
  ZMat a = make(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16});
  ZMat h = a;
  ZMat u(0, 0);
  hnf_rows(h, &u);
  CHECK(mat_mul(u, a) == h);
}

TEST_CASE("smith normal form invariant factors") {
  ZMat a = make(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16});
  Smith s = smith_form(a);
  REQUIRE(s.diag.size() == 3);
  CHECK(s.diag[0] == 2);
  CHECK(s.diag[1] == 6);
  CHECK(s.diag[2] == 12);
  CHECK(abs(z_det(s.u)) == 1);
  CHECK(abs(z_det(s.v)) == 1);
  ZMat prod = mat_mul(mat_mul(s.u, a), s.v);
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) CHECK(prod(i, j) == (i == j ? s.diag[i] : Int(0)));

  // rank two: only nonzero invariant factors are listed
  Smith t = smith_form(make(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9}));
  REQUIRE(t.diag.size() == 2);
  CHECK(t.diag[0] == 1);
  CHECK(t.diag[1] == 3);
}

TEST_CASE("integer kernel is saturated") {
  ZMat a = make(2, 3, {1, 2, 3, 2, 4, 6});
  ZMat k = z_nullspace(a);
  CHECK(k.rows == 2);
  for (long r = 0; r < k.rows; ++r) {
    Int s0 = k(r, 0) * 1 + k(r, 1) * 2 + k(r, 2) * 3;
    CHECK(s0 == 0);
  }
  // (1,1,-1) solves x + 2y + 3z = 0 and must lie in the kernel lattice
  CHECK(lattice_contains(lattice_basis(k), {Int(1), Int(1), Int(-1)}));
}

TEST_CASE("integer solve") {
  ZMat a = make(2, 2, {2, 1, 1, 1});
  auto x = z_solve(a, {Int(3), Int(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  // 2x = 1 has no integer solution
  CHECK_FALSE(z_solve(make(1, 1, {2}), {Int(1)}).has_value());
}

TEST_CASE("determinant") {
  CHECK(z_det(make(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16})) == -144);
  CHECK(z_det(make(2, 2, {1, 2, 3, 4})) == -2);
  CHECK(z_det(ZMat::identity(5)) == 1);
}

TEST_CASE("lattice helpers") {
  ZMat l = make(2, 2, {2, 0, 0, 2});
  CHECK(lattice_index(l, 2) == 4);
  CHECK(lattice_contains(lattice_basis(l), {Int(4), Int(-2)}));
  CHECK_FALSE(lattice_contains(lattice_basis(l), {Int(1), Int(0)}));

  ZMat g = make(1, 2, {2, 4});
  ZMat sat = lattice_saturation(g);
  CHECK(sat.rows == 1);
  CHECK(sat(0, 0) == 1);
  CHECK(sat(0, 1) == 2);

  // saturation of a rank 2 sublattice of Z^3
  ZMat g2 = make(2, 3, {2, 0, 2, 0, 3, 3});
  ZMat sat2 = lattice_saturation(g2);
  CHECK(sat2.rows == 2);
  CHECK(lattice_contains(sat2, {Int(1), Int(0), Int(1)}));
  CHECK(lattice_contains(sat2, {Int(0), Int(1), Int(1)}));
  CHECK_FALSE(lattice_contains(sat2, {Int(0), Int(0), Int(1)}));
}

TEST_CASE("rational linear algebra") {
  QMat a = makeq(2, 2, {3, 1, 1, 3});
  CHECK(q_rank(a) == 2);
  auto inv = q_inverse(a);
  REQUIRE(inv.has_value());
  CHECK(mat_mul(*inv, a) == QMat::identity(2));
  CHECK_FALSE(q_inverse(makeq(2, 2, {1, 2, 2, 4})).has_value());

  auto sol = q_solve(a, {Rat(5), Rat(7)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 1);
  CHECK((*sol)[1] == 2);
}

TEST_CASE("rational kernel") {
  QMat a = makeq(1, 3, {1, 2, 3});
  QMat k = q_nullspace(a);
  CHECK(k.rows == 2);
  for (long r = 0; r < k.rows; ++r)
    CHECK(k(r, 0) + Rat(2) * k(r, 1) + Rat(3) * k(r, 2) == 0);
}

TEST_CASE("characteristic polynomial") {
  std::vector<Rat> cp = charpoly(makeq(2, 2, {3, 1, 1, 3}));
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == 8);
  CHECK(cp[1] == -6);
  CHECK(cp[2] == 1);
  // companion matrix of x^3 - 2x - 5
  QMat c = makeq(3, 3, {0, 0, 5, 1, 0, 2, 0, 1, 0});
  std::vector<Rat> cc = charpoly(c);
  CHECK(cc[0] == -5);
  CHECK(cc[1] == -2);
  CHECK(cc[2] == 0);
  CHECK(cc[3] == 1);
}
