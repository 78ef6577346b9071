#include <wct/brauer.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace wct {

namespace {

bool is_real_place(const NumberField& k, const Place& v) {
  return v.kind == Place::Kind::arch &&
         v.arch_index < k.num_real_embeddings();
}

bool is_complex_place(const NumberField& k, const Place& v) {
  return v.kind == Place::Kind::arch &&
         v.arch_index >= k.num_real_embeddings();
}

// nonzero invariants keyed by place name, for pointwise comparison
std::map<std::string, QmodZ> support_map(const CSAInvariants& a) {
  std::map<std::string, QmodZ> m;
  for (const auto& [v, x] : a.invariants)
    if (!x.is_zero()) m.emplace(v.str(), x);
  return m;
}

void sort_by_place(std::vector<std::pair<Place, QmodZ>>& inv) {
  std::sort(inv.begin(), inv.end(), [](const auto& l, const auto& r) {
    return l.first.str() < r.first.str();
  });
}

}  // namespace

CsaReport validate_csa(const CSAInvariants& a) {
  CsaReport rep;
  if (!a.base_field) {
    rep.problem = "the base field is missing";
    return rep;
  }
  if (a.degree < 2) {
    rep.problem = "the degree must be at least two";
    return rep;
  }
  std::set<std::string> seen;
  for (const auto& [v, x] : a.invariants) {
    if (!seen.insert(v.str()).second) {
      rep.problem = "the place " + v.str() + " repeats in the invariant map";
      return rep;
    }
    if (v.kind == Place::Kind::arch &&
        v.arch_index >= a.base_field->num_arch_places()) {
      rep.problem = "the archimedean place " + v.str() + " is out of range";
      return rep;
    }
    if (a.degree % x.order() != 0) {
      rep.problem = "the invariant order at " + v.str() +
                    " does not divide the degree";
      return rep;
    }
    if (is_real_place(*a.base_field, v) && !x.is_zero() &&
        !(x == QmodZ(1, 2))) {
      rep.problem = "the invariant at the real place " + v.str() +
                    " must be 0 or 1/2";
      return rep;
    }
    if (is_complex_place(*a.base_field, v) && !x.is_zero()) {
      rep.problem = "the invariant at the complex place " + v.str() +
                    " must vanish";
      return rep;
    }
  }
  QmodZ total;
  for (const auto& [v, x] : a.invariants) total = total + x;
  if (!total.is_zero()) {
    rep.problem = "the invariants do not sum to zero";
    return rep;
  }
  rep.ok = true;
  return rep;
}

std::vector<Place> ramified_places(const CSAInvariants& a) {
  std::vector<std::pair<Place, QmodZ>> inv;
  for (const auto& e : a.invariants)
    if (!e.second.is_zero()) inv.push_back(e);
  sort_by_place(inv);
  std::vector<Place> out;
  for (const auto& [v, x] : inv) out.push_back(v);
  return out;
}

bool embeds_as_maximal_subfield(const ExtensionLocalDegrees& ext,
                                const CSAInvariants& a) {
  if (ext.degree != a.degree)
    throw degree_mismatch("the extension degree must equal the algebra "
                          "degree");
  std::map<std::string, long> profile;
  for (const auto& [v, n] : ext.local_degrees) {
    if (n < 1 || ext.degree % n != 0)
      throw input_error("a local degree must divide the extension degree");
    if (!profile.emplace(v.str(), n).second)
      throw input_error("the place " + v.str() + " repeats in the profile");
  }
  for (const auto& [v, x] : a.invariants) {
    if (x.is_zero()) continue;
    auto it = profile.find(v.str());
    if (it == profile.end())
      throw input_error("the profile must record a local degree at " +
                        v.str());
    if (Int(it->second) % x.order() != 0) return false;
  }
  return true;
}

CompareResult compare(const CSAInvariants& a, const CSAInvariants& b) {
  if (!a.base_field || !b.base_field ||
      !a.base_field->same_as(*b.base_field))
    throw base_mismatch("the algebras live over different base fields");
  if (a.degree != b.degree)
    throw base_mismatch("the algebras have different degrees");

  std::map<std::string, QmodZ> ma = support_map(a), mb = support_map(b);
  std::set<std::string> keys;
  for (const auto& [k, x] : ma) keys.insert(k);
  for (const auto& [k, x] : mb) keys.insert(k);

  CompareResult r;
  r.isomorphic = true;
  r.anti_isomorphic = true;
  r.same_maximal_subfields = true;
  r.same_split_places = true;
  for (const std::string& k : keys) {
    QmodZ xa = ma.count(k) ? ma[k] : QmodZ();
    QmodZ xb = mb.count(k) ? mb[k] : QmodZ();
    if (!(xa == xb)) r.isomorphic = false;
    if (!(xa == -xb)) r.anti_isomorphic = false;
    if (xa.order() != xb.order()) r.same_maximal_subfields = false;
    if (xa.is_zero() != xb.is_zero()) r.same_split_places = false;
  }
  return r;
}

std::pair<CSAInvariants, CSAInvariants> build_example_65(
    long d, const std::vector<Place>& places, bool real_refinement) {
  if (d <= 2)
    throw invalid_degree("the construction needs degree above two");
  if (real_refinement && d % 2 != 0)
    throw invalid_degree("the refined construction needs even degree");
  size_t needed = real_refinement ? 5 : 4;
  if (places.size() != needed)
    throw input_error("the construction needs " + std::to_string(needed) +
                      " finite places");
  std::set<std::string> seen;
  for (const Place& v : places) {
    if (v.kind != Place::Kind::finite)
      throw input_error("the listed places must be finite");
    if (!seen.insert(v.str()).second)
      throw input_error("the listed places must be distinct");
  }

  CSAInvariants a, b;
  a.base_field = b.base_field = NumberField::rationals();
  a.degree = b.degree = d;
  QmodZ plus(1, d), minus(-1, d);
  a.invariants = {{places[0], plus},
                  {places[1], plus},
                  {places[2], minus},
                  {places[3], minus}};
  b.invariants = {{places[0], plus},
                  {places[1], minus},
                  {places[2], plus},
                  {places[3], minus}};
  if (real_refinement) {
    QmodZ half(1, 2);
    for (CSAInvariants* c : {&a, &b}) {
      c->invariants.emplace_back(Place::arch(0), half);
      c->invariants.emplace_back(places[4], half);
    }
  }
  sort_by_place(a.invariants);
  sort_by_place(b.invariants);
  return {a, b};
}

Example66 build_example_66(long d, long quad_d, const Int& p1,
                           const Int& p2) {
  if (d <= 1) throw invalid_degree("the construction needs degree above one");
  if (d % 2 == 0)
    throw even_degree("the involution construction needs odd degree");
  FieldPtr L = NumberField::quadratic(quad_d);
  if (p1 == p2) throw input_error("the two rational primes must differ");
  for (const Int& p : {p1, p2})
    if (splitting_type(quad_d, p) != SplittingType::split)
      throw not_split("the place p" + p.get_str() +
                      " does not split in the quadratic extension");

  Example66 out;
  for (InvolutionPairData* data : {&out.first, &out.second}) {
    data->quad_d = quad_d;
    data->degree = d;
    for (const Int& p : {p1, p2})
      data->split_pairs.push_back({Place::finite(p),
                                   Place::finite(p, QuadTag::split0),
                                   Place::finite(p, QuadTag::split1)});
    data->algebra.base_field = L;
    data->algebra.degree = d;
  }
  QmodZ plus(1, d), minus(-1, d);
  const auto& t1 = out.first.split_pairs[0];
  const auto& t2 = out.first.split_pairs[1];
  out.first.algebra.invariants = {{t1.above0, plus},
                                  {t2.above0, plus},
                                  {t1.above1, minus},
                                  {t2.above1, minus}};
  out.second.algebra.invariants = {{t1.above0, plus},
                                   {t2.above1, plus},
                                   {t1.above1, minus},
                                   {t2.above0, minus}};
  sort_by_place(out.first.algebra.invariants);
  sort_by_place(out.second.algebra.invariants);
  for (const InvolutionPairData* data : {&out.first, &out.second})
    if (!validate_csa(data->algebra).ok)
      throw std::logic_error("a constructed algebra fails validation");
  return out;
}

bool embeds_with_involution(const InvolutionPairData& a,
                            const ExtensionLocalDegrees& ext) {
  if (ext.degree != a.degree)
    throw degree_mismatch("the extension degree must equal the algebra "
                          "degree");
  return embeds_as_maximal_subfield(ext, a.algebra);
}

}  // namespace wct
