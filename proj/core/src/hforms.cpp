#include <wct/hforms.hpp>

#include <algorithm>
#include <set>

namespace wct {

CenterData center_order(RootSystemType t) {
  t.validate();
  CenterData c;
  c.group_type = t;
  if (t.family == Family::A && t.rank > 1) {
    c.ell = t.rank + 1;
  } else if (t.family == Family::D && t.rank % 2 == 1 && t.rank >= 5) {
    c.ell = 4;
  } else if (t.family == Family::E && t.rank == 6) {
    c.ell = 3;
  } else {
    throw unsupported_type("no center recipe for type " + t.str());
  }
  c.d = c.ell;
  return c;
}

namespace {

void validate_center(const CenterData& c) {
  if (c.ell <= 2)
    throw input_error("the construction needs a center of order above two");
  if (c.d <= 0 || c.ell % c.d != 0)
    throw input_error("the character order must divide the center order");
}

// chi_v on stored invariants: multiplication by ell/d
QmodZ chi(const CenterData& c, const QmodZ& x) { return x.scaled(c.ell / c.d); }

void validate_layout(const PlaceLayout& layout, const CenterData& c) {
  validate_center(c);
  long m = static_cast<long>(layout.split_places.size());
  if (m < 2 || m % 2 != 0)
    throw input_error("need an even number, at least two, of paired places");
  if (layout.generators.size() != layout.split_places.size())
    throw input_error("need one generator per paired place");

  std::set<std::string> seen;
  for (const SeedInvariant& s : layout.seeds)
    if (!seen.insert(s.v.str()).second)
      throw input_error("a seed place repeats");
  for (const Place& v : layout.split_places)
    if (!seen.insert(v.str()).second)
      throw input_error("the paired places must be distinct and outside the "
                        "seed set");

  QmodZ target(Rat(1, c.d));
  for (const QmodZ& b : layout.generators) {
    if (b.order() != c.ell)
      throw input_error("each generator must have exact order " +
                        std::to_string(c.ell));
    if (!(chi(c, b) == target))
      throw input_error("each generator must have chi value 1/" +
                        std::to_string(c.d));
  }
}

}  // namespace

InvariantVector build_invariant_vector(const PlaceLayout& layout,
                                       const CenterData& center,
                                       const std::vector<int>& epsilon) {
  validate_layout(layout, center);
  long t = layout.t();
  if (static_cast<long>(epsilon.size()) != t)
    throw input_error("need one sign per place pair after the first");
  for (int e : epsilon)
    if (e != 1 && e != -1) throw input_error("signs must be +1 or -1");

  // balance at v''_0: chi(x) = -(sum of seed chi values + 1/d)
  QmodZ s;
  for (const SeedInvariant& seed : layout.seeds)
    s = s + chi(center, seed.rho);
  s = s + chi(center, layout.generators[0]);
  QmodZ need = -s;
  if (!need.scaled(center.d).is_zero())
    throw unbalanceable(
        "the seed invariants cannot be balanced by an order-" +
        std::to_string(center.ell) + " class");
  // need = m/d; x = m/ell satisfies chi(x) = m/d
  Int m = need.num * (center.d / to_long(need.den));
  QmodZ x(Rat(m, Int(center.ell)));

  InvariantVector out;
  out.epsilon = epsilon;
  for (const SeedInvariant& seed : layout.seeds)
    out.components.emplace_back(seed.v, seed.rho);
  out.components.emplace_back(layout.split_places[0], layout.generators[0]);
  out.components.emplace_back(layout.split_places[1], x);
  for (long j = 1; j <= t; ++j) {
    out.components.emplace_back(layout.split_places[2 * j],
                                layout.generators[2 * j].scaled(epsilon[j - 1]));
    out.components.emplace_back(
        layout.split_places[2 * j + 1],
        layout.generators[2 * j + 1].scaled(-epsilon[j - 1]));
  }

  QmodZ total;
  for (const auto& [v, c] : out.components) total = total + chi(center, c);
  if (!total.is_zero())
    throw std::logic_error("built vector fails the balancing condition");
  return out;
}

FamilyReport certify_family(const PlaceLayout& layout,
                            const CenterData& center, long t) {
  validate_layout(layout, center);
  if (t < 0 || layout.t() != t)
    throw input_error("the layout provides pairs for a different t");

  FamilyReport rep;
  rep.t = t;
  std::vector<InvariantVector> family;
  for (long mask = 0; mask < (1L << t); ++mask) {
    std::vector<int> eps(t);
    for (long j = 0; j < t; ++j)
      eps[j] = (mask >> (t - 1 - j)) & 1 ? -1 : 1;
    family.push_back(build_invariant_vector(layout, center, eps));
  }
  rep.count = static_cast<long>(family.size());

  rep.globally_distinct = true;
  rep.locally_pm_equal = true;
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j) {
      bool same = true, neg = true, pm = true;
      for (size_t k = 0; k < family[i].components.size(); ++k) {
        const QmodZ& a = family[i].components[k].second;
        const QmodZ& b = family[j].components[k].second;
        if (!(a == b)) same = false;
        if (!(a == -b)) neg = false;
        if (!(a == b) && !(a == -b)) pm = false;
      }
      if (same || neg) {
        rep.globally_distinct = false;
        rep.details.push_back("vectors " + std::to_string(i) + " and " +
                              std::to_string(j) + " agree up to sign");
      }
      if (!pm) {
        rep.locally_pm_equal = false;
        rep.details.push_back("vectors " + std::to_string(i) + " and " +
                              std::to_string(j) +
                              " differ beyond sign at some place");
      }
    }

  rep.notes.push_back(
      "computed: pairwise comparison of the local invariant vectors");
  rep.notes.push_back(
      "consumed: lifting the vectors to global cohomology classes and "
      "realizing the corresponding forms");
  return rep;
}

RecipeResult recipe_914(RootSystemType type, long real_quadratic_d,
                        const std::vector<Rat>& arch_seeds, long t,
                        long prime_bound) {
  RecipeResult out;
  out.center = center_order(type);  // throws unsupported_type off the list
  if (real_quadratic_d <= 1)
    throw input_error("the base field needs a squarefree d above one");
  if (t < 0) throw input_error("t must be nonnegative");
  if (arch_seeds.size() != 2)
    throw input_error("declare one seed per archimedean place");

  for (size_t i = 0; i < arch_seeds.size(); ++i) {
    QmodZ rho(arch_seeds[i]);
    if (!rho.is_zero() && !(rho == QmodZ(Rat(1, 2))))
      throw input_error("archimedean seeds take values 0 or 1/2");
    if (!rho.is_zero() && out.center.ell % 2 != 0)
      throw input_error(
          "an archimedean seed of order two is not admissible for an odd "
          "center");
    out.layout.seeds.push_back({Place::arch(static_cast<long>(i)), rho});
  }
  out.notes.push_back("real quadratic base with d = " +
                      std::to_string(real_quadratic_d));
  out.notes.push_back(
      "archimedean seeds are declared form labels; their stored invariants "
      "are the admissible values above");

  long needed = 2 * (t + 1);
  for (long p : small_primes()) {
    if (p > prime_bound) break;
    if (static_cast<long>(out.layout.split_places.size()) >= needed) break;
    if (real_quadratic_d % p == 0) continue;
    if (splitting_type(real_quadratic_d, Int(p)) != SplittingType::split)
      continue;
    out.layout.split_places.push_back(Place::finite(Int(p), QuadTag::split0));
    if (static_cast<long>(out.layout.split_places.size()) < needed)
      out.layout.split_places.push_back(Place::finite(Int(p), QuadTag::split1));
  }
  if (static_cast<long>(out.layout.split_places.size()) < needed)
    throw no_split_places("found too few split primes; raise the bound");

  out.layout.generators.assign(needed, QmodZ(Rat(1, out.center.ell)));
  return out;
}

}  // namespace wct
