#include <doctest.h>

#include <wct/hforms.hpp>

#include <algorithm>

using namespace wct;

namespace {

PlaceLayout bare_layout(long t, long ell) {
  PlaceLayout l;
  long primes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  for (long k = 0; k < 2 * (t + 1); ++k) {
    l.split_places.push_back(Place::finite(Int(primes[k])));
    l.generators.push_back(QmodZ(Rat(1, ell)));
  }
  return l;
}

QmodZ value_at(const InvariantVector& x, const Place& v) {
  for (const auto& [place, c] : x.components)
    if (place == v) return c;
  return QmodZ();
}

}  // namespace

TEST_CASE("center orders by type") {
  CHECK(center_order(RootSystemType::parse("A3")).ell == 4);
  CHECK(center_order(RootSystemType::parse("A2")).ell == 3);
  CHECK(center_order(RootSystemType::parse("E6")).ell == 3);
  CHECK(center_order(RootSystemType::parse("D5")).ell == 4);
  CHECK(center_order(RootSystemType::parse("D7")).ell == 4);
  CHECK(center_order(RootSystemType::parse("A5")).d == 6);
  CHECK_THROWS_AS(center_order(RootSystemType::parse("A1")), unsupported_type);
  CHECK_THROWS_AS(center_order(RootSystemType::parse("D4")), unsupported_type);
  CHECK_THROWS_AS(center_order(RootSystemType::parse("D6")), unsupported_type);
  CHECK_THROWS_AS(center_order(RootSystemType::parse("D3")), unsupported_type);
  CHECK_THROWS_AS(center_order(RootSystemType::parse("B3")), unsupported_type);
  CHECK_THROWS_AS(center_order(RootSystemType::parse("E7")), unsupported_type);
}

TEST_CASE("representatives in the circle group") {
  CHECK(QmodZ(Rat(5, 3)) == QmodZ(Rat(2, 3)));
  CHECK(QmodZ(Rat(-1, 3)) == QmodZ(Rat(2, 3)));
  CHECK((QmodZ(Rat(1, 2)) + QmodZ(Rat(1, 2))).is_zero());
  CHECK(QmodZ(Rat(2, 4)).order() == 2);
  CHECK(QmodZ().order() == 1);
  CHECK(QmodZ(Rat(3, 4)).scaled(2) == QmodZ(Rat(1, 2)));
  CHECK(-QmodZ(Rat(1, 4)) == QmodZ(Rat(3, 4)));
}

TEST_CASE("vector components follow the sign pattern") {
  CenterData c = center_order(RootSystemType::parse("A2"));  // ell = 3
  PlaceLayout l = bare_layout(1, c.ell);
  SUBCASE("plus sign") {
    InvariantVector x = build_invariant_vector(l, c, {1});
    CHECK(value_at(x, l.split_places[0]) == QmodZ(Rat(1, 3)));
    CHECK(value_at(x, l.split_places[1]) == QmodZ(Rat(2, 3)));
    CHECK(value_at(x, l.split_places[2]) == QmodZ(Rat(1, 3)));
    CHECK(value_at(x, l.split_places[3]) == QmodZ(Rat(2, 3)));
  }
  SUBCASE("minus sign flips the indexed pair only") {
    InvariantVector x = build_invariant_vector(l, c, {-1});
    CHECK(value_at(x, l.split_places[0]) == QmodZ(Rat(1, 3)));
    CHECK(value_at(x, l.split_places[1]) == QmodZ(Rat(2, 3)));
    CHECK(value_at(x, l.split_places[2]) == QmodZ(Rat(2, 3)));
    CHECK(value_at(x, l.split_places[3]) == QmodZ(Rat(1, 3)));
  }
  SUBCASE("t zero supports only the first pair and the seeds") {
    PlaceLayout s = bare_layout(0, c.ell);
    s.seeds.push_back({Place::arch(0), QmodZ()});
    InvariantVector x = build_invariant_vector(s, c, {});
    CHECK(x.components.size() == 3);
  }
  SUBCASE("epsilon length must match the layout") {
    CHECK_THROWS_AS(build_invariant_vector(l, c, {}), input_error);
    CHECK_THROWS_AS(build_invariant_vector(l, c, {2}), input_error);
  }
}

TEST_CASE("every vector balances to zero") {
  CenterData c = center_order(RootSystemType::parse("D5"));  // ell = 4
  PlaceLayout l = bare_layout(2, c.ell);
  l.seeds.push_back({Place::arch(0), QmodZ(Rat(1, 2))});
  l.seeds.push_back({Place::arch(1), QmodZ(Rat(1, 2))});
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      InvariantVector x = build_invariant_vector(l, c, {e1, e2});
      QmodZ sum;
      for (const auto& [v, comp] : x.components)
        sum = sum + comp.scaled(c.ell / c.d);
      CHECK(sum.is_zero());
    }
  // the balancing component absorbs the seeds: 1/2 + 1/2 + 1/4 + x = 0
  InvariantVector x = build_invariant_vector(l, c, {1, 1});
  CHECK(value_at(x, l.split_places[1]) == QmodZ(Rat(3, 4)));
}

TEST_CASE("seeds outside the center torsion cannot balance") {
  CenterData c = center_order(RootSystemType::parse("A2"));  // ell = 3
  PlaceLayout l = bare_layout(1, c.ell);
  l.seeds.push_back({Place::arch(0), QmodZ(Rat(1, 2))});
  CHECK_THROWS_AS(build_invariant_vector(l, c, {1}), unbalanceable);
}

TEST_CASE("layout validation") {
  CenterData c = center_order(RootSystemType::parse("A2"));
  SUBCASE("generator of wrong order") {
    PlaceLayout l = bare_layout(1, 2);
    CHECK_THROWS_AS(build_invariant_vector(l, c, {1}), input_error);
  }
  SUBCASE("repeated paired place") {
    PlaceLayout l = bare_layout(1, c.ell);
    l.split_places[2] = l.split_places[0];
    CHECK_THROWS_AS(build_invariant_vector(l, c, {1}), input_error);
  }
  SUBCASE("seed colliding with a paired place") {
    PlaceLayout l = bare_layout(1, c.ell);
    l.seeds.push_back({l.split_places[0], QmodZ()});
    CHECK_THROWS_AS(build_invariant_vector(l, c, {1}), input_error);
  }
  SUBCASE("chi value off target") {
    PlaceLayout l = bare_layout(1, c.ell);
    // order three, but chi sends it to 2/3 instead of 1/3
    l.generators[2] = QmodZ(Rat(2, 3));
    CHECK_THROWS_AS(build_invariant_vector(l, c, {1}), input_error);
  }
}

TEST_CASE("sign flip negates exactly the indexed support") {
  CenterData c = center_order(RootSystemType::parse("A3"));
  PlaceLayout l = bare_layout(3, c.ell);
  l.seeds.push_back({Place::arch(0), QmodZ(Rat(1, 2))});
  InvariantVector a = build_invariant_vector(l, c, {1, -1, 1});
  InvariantVector b = build_invariant_vector(l, c, {-1, 1, -1});
  REQUIRE(a.components.size() == b.components.size());
  for (size_t k = 0; k < a.components.size(); ++k) {
    const Place& v = a.components[k].first;
    bool indexed = false;
    for (size_t i = 2; i < l.split_places.size(); ++i)
      if (v == l.split_places[i]) indexed = true;
    if (indexed)
      CHECK(b.components[k].second == -a.components[k].second);
    else
      CHECK(b.components[k].second == a.components[k].second);
  }
}

TEST_CASE("family certification") {
  SUBCASE("eight vectors for three signs") {
    CenterData c = center_order(RootSystemType::parse("A2"));
    PlaceLayout l = bare_layout(3, c.ell);
    FamilyReport r = certify_family(l, c, 3);
    CHECK(r.count == 8);
    CHECK(r.globally_distinct);
    CHECK(r.locally_pm_equal);
    CHECK(r.details.empty());
    CHECK(r.notes.size() == 2);
  }
  SUBCASE("a single vector is vacuously certified") {
    CenterData c = center_order(RootSystemType::parse("A2"));
    PlaceLayout l = bare_layout(0, c.ell);
    FamilyReport r = certify_family(l, c, 0);
    CHECK(r.count == 1);
    CHECK(r.globally_distinct);
    CHECK(r.locally_pm_equal);
  }
  SUBCASE("an order two center is rejected") {
    CenterData c;
    c.group_type = RootSystemType::parse("A2");
    c.ell = 2;
    c.d = 2;
    PlaceLayout l = bare_layout(1, 2);
    CHECK_THROWS_AS(certify_family(l, c, 1), input_error);
  }
  SUBCASE("t must match the layout") {
    CenterData c = center_order(RootSystemType::parse("A2"));
    PlaceLayout l = bare_layout(2, c.ell);
    CHECK_THROWS_AS(certify_family(l, c, 1), input_error);
  }
}

TEST_CASE("family certification across supported types and sizes") {
  for (const char* type : {"A2", "D5", "E6"}) {
    CenterData c = center_order(RootSystemType::parse(type));
    for (long t = 0; t <= 6; ++t) {
      PlaceLayout l = bare_layout(t, c.ell);
      FamilyReport r = certify_family(l, c, t);
      CHECK(r.count == (1L << t));
      CHECK(r.globally_distinct);
      CHECK(r.locally_pm_equal);
    }
  }
}

TEST_CASE("scenario assembly over a real quadratic field") {
  SUBCASE("split places are found and certified") {
    RecipeResult r = recipe_914(RootSystemType::parse("A2"), 5,
                                {Rat(0), Rat(0)}, 2);
    CHECK(r.center.ell == 3);
    REQUIRE(r.layout.split_places.size() == 6);
    // places come in pairs over split primes of Q(sqrt 5)
    CHECK(r.layout.split_places[0].p == r.layout.split_places[1].p);
    for (const Place& v : r.layout.split_places)
      CHECK(splitting_type(5, v.p) == SplittingType::split);
    FamilyReport rep = certify_family(r.layout, r.center, 2);
    CHECK(rep.count == 4);
    CHECK(rep.globally_distinct);
    CHECK(rep.locally_pm_equal);
  }
  SUBCASE("half seeds work with an even center") {
    RecipeResult r = recipe_914(RootSystemType::parse("D5"), 3,
                                {Rat(1, 2), Rat(1, 2)}, 0);
    CHECK(r.layout.seeds.size() == 2);
    CHECK(r.layout.seeds[0].rho == QmodZ(Rat(1, 2)));
    FamilyReport rep = certify_family(r.layout, r.center, 0);
    CHECK(rep.count == 1);
  }
  SUBCASE("half seeds are rejected for an odd center") {
    CHECK_THROWS_AS(recipe_914(RootSystemType::parse("A2"), 5,
                               {Rat(1, 2), Rat(0)}, 1),
                    input_error);
  }
  SUBCASE("unsupported types are rejected") {
    CHECK_THROWS_AS(recipe_914(RootSystemType::parse("D4"), 5,
                               {Rat(0), Rat(0)}, 1),
                    unsupported_type);
  }
  SUBCASE("a tiny bound finds no split primes") {
    CHECK_THROWS_AS(recipe_914(RootSystemType::parse("A2"), 5,
                               {Rat(0), Rat(0)}, 1, 3),
                    no_split_places);
  }
}
