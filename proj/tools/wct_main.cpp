#include <wct/brauer.hpp>
#include <wct/geodesics.hpp>
#include <wct/hforms.hpp>
#include <wct/isogeny.hpp>
#include <wct/mulrel.hpp>
#include <wct/rootsys.hpp>
#include <wct/titsindex.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using json = nlohmann::ordered_json;

namespace wct {
namespace {

constexpr int kDecided = 0;
constexpr int kInputError = 1;
constexpr int kUndecided = 2;

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json read_doc(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("bad json: ") + e.what());
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) out.push_back(cur);
  return out;
}

// "Q", "Q(sqrt(d))", or a monic integer minimal polynomial like "x^2-2"
FieldPtr parse_field(const std::string& s) {
  if (s.empty() || s == "Q") return NumberField::rationals();
  if (s.rfind("Q(sqrt(", 0) == 0 && s.size() > 9 &&
      s.substr(s.size() - 2) == "))")
    return NumberField::quadratic(std::stol(s.substr(7, s.size() - 9)));
  QPoly q = parse_qpoly(s);
  ZPoly z;
  for (const Rat& c : q) {
    if (c.get_den() != 1)
      throw input_error("the minimal polynomial needs integer coefficients: " +
                        s);
    z.push_back(c.get_num());
  }
  return NumberField::from_min_poly(z);
}

AlgebraicNumber number_from_json(const FieldPtr& k, const json& j) {
  if (j.is_string())
    return AlgebraicNumber::from_rat(k, parse_rat(j.get<std::string>()));
  if (j.is_number_integer())
    return AlgebraicNumber::from_rat(k, Rat(j.get<long>()));
  if (j.is_array()) {
    std::vector<Rat> coords;
    for (const json& c : j) {
      if (c.is_string())
        coords.push_back(parse_rat(c.get<std::string>()));
      else if (c.is_number_integer())
        coords.push_back(Rat(c.get<long>()));
      else
        throw input_error("bad coordinate in a number literal");
    }
    if (static_cast<long>(coords.size()) > k->degree())
      throw input_error("too many coordinates for the field");
    coords.resize(k->degree(), Rat(0));
    return AlgebraicNumber(k, std::move(coords));
  }
  throw input_error("bad number literal");
}

std::vector<Int> int_vector(const json& j) {
  std::vector<Int> v;
  for (const json& e : j) {
    if (e.is_number_integer())
      v.emplace_back(e.get<long>());
    else if (e.is_string())
      v.emplace_back(e.get<std::string>());
    else
      throw input_error("expected an integer list");
  }
  return v;
}

ZMat zmat_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw input_error("expected a nonempty matrix of integers");
  long rows = static_cast<long>(j.size());
  long cols = static_cast<long>(j[0].size());
  ZMat m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    if (static_cast<long>(j[r].size()) != cols)
      throw input_error("ragged matrix rows");
    for (long c = 0; c < cols; ++c) {
      const json& e = j[r][c];
      if (e.is_number_integer())
        m(r, c) = Int(e.get<long>());
      else if (e.is_string())
        m(r, c) = Int(e.get<std::string>());
      else
        throw input_error("matrix entries must be integers");
    }
  }
  return m;
}

json zmat_to_json(const ZMat& m) {
  json rows = json::array();
  for (long r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (long c = 0; c < m.cols; ++c) row.push_back(to_long(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json zvecs_to_json(const std::vector<std::vector<Int>>& vs) {
  json rows = json::array();
  for (const auto& v : vs) {
    json row = json::array();
    for (const Int& x : v) row.push_back(to_long(x));
    rows.push_back(row);
  }
  return rows;
}

// ---- rootsys ----

struct RootsysOpts {
  std::string type;
  bool weyl = false;
  bool autos = false;
};

int cmd_rootsys(const RootsysOpts& o) {
  RootSystem rs = build_root_system(RootSystemType::parse(o.type));
  json out;
  out["type"] = rs.type.str();
  out["rank"] = rs.rank;
  out["roots"] = zvecs_to_json(rs.roots);
  out["simple"] = zvecs_to_json(rs.simple);
  out["cartan"] = zmat_to_json(rs.cartan);
  if (o.weyl) {
    WeylInfo w = weyl_group(rs);
    out["weyl_order"] = to_long(w.order);
    out["nontrivial_classes"] = w.nontrivial_classes;
  }
  if (o.autos) {
    AutStructure a = automorphism_structure(rs);
    out["aut_order"] = to_long(a.aut_order);
    out["aut_quotient"] = to_string(a.quotient);
  }
  emit(out);
  return kDecided;
}

// ---- weakcomm ----

struct WeakcommOpts {
  std::string e1, e2, json_path, mode = "neat";
};

MultiplicativeTuple tuple_from_doc(const json& doc, const char* key) {
  FieldPtr k = parse_field(doc.value("field", std::string("Q")));
  std::vector<AlgebraicNumber> vals;
  for (const json& e : doc.at(key)) vals.push_back(number_from_json(k, e));
  return MultiplicativeTuple(std::move(k), std::move(vals));
}

MultiplicativeTuple tuple_from_list(const std::string& s) {
  std::vector<Rat> vals;
  for (const std::string& piece : split_commas(s))
    vals.push_back(parse_rat(piece));
  return MultiplicativeTuple::rationals(vals);
}

int cmd_weakcomm_check(const WeakcommOpts& o, const SearchBudget& budget) {
  MultiplicativeTuple t1, t2;
  if (!o.json_path.empty()) {
    json doc = read_doc(o.json_path);
    t1 = tuple_from_doc(doc, "e1");
    t2 = tuple_from_doc(doc, "e2");
  } else {
    if (o.e1.empty() || o.e2.empty())
      throw input_error("give --e1 and --e2, or --json");
    t1 = tuple_from_list(o.e1);
    t2 = tuple_from_list(o.e2);
  }
  WeakCommMode mode;
  if (o.mode == "neat")
    mode = WeakCommMode::neat;
  else if (o.mode == "strict")
    mode = WeakCommMode::strict;
  else
    throw input_error("mode must be neat or strict");

  WeakCommResult r = is_weakly_commensurable(t1, t2, mode, budget);
  json out;
  out["answer"] = r.yes ? "yes" : "no";
  if (r.yes && r.witness) {
    json w;
    json m = json::array(), n = json::array();
    for (const Int& x : r.witness->m) m.push_back(to_long(x));
    for (const Int& x : r.witness->n) n.push_back(to_long(x));
    w["m"] = m;
    w["n"] = n;
    w["common_value"] = r.witness->common_value.str();
    out["witness"] = w;
  }
  bool certified = r.completeness == Completeness::certified;
  if (!r.yes) {
    out["certified"] = certified;
    if (!certified) out["bound"] = r.bound;
  }
  emit(out);
  return (r.yes || certified) ? kDecided : kUndecided;
}

struct RelationOpts {
  std::string values, json_path;
};

int cmd_weakcomm_relations(const RelationOpts& o, const SearchBudget& budget) {
  MultiplicativeTuple t;
  if (!o.json_path.empty()) {
    t = tuple_from_doc(read_doc(o.json_path), "values");
  } else {
    if (o.values.empty()) throw input_error("give --values or --json");
    t = tuple_from_list(o.values);
  }
  RelationLattice rl = relation_lattice(t, budget);
  json out;
  out["size"] = rl.tuple_size;
  out["basis"] = zmat_to_json(rl.basis);
  out["torsion_orders"] = rl.torsion_orders;
  bool certified = rl.completeness == Completeness::certified;
  out["certified"] = certified;
  if (!certified) out["bound"] = rl.bound;
  emit(out);
  return certified ? kDecided : kUndecided;
}

// ---- brauer ----

json csa_to_json(const CSAInvariants& a) {
  std::vector<std::pair<Place, QmodZ>> entries;
  for (const auto& e : a.invariants)
    if (!e.second.is_zero()) entries.push_back(e);
  std::sort(entries.begin(), entries.end(),
            [](const auto& l, const auto& r) {
              return l.first.str() < r.first.str();
            });
  json inv = json::object();
  for (const auto& [v, x] : entries) inv[v.str()] = x.str();
  json out;
  out["field"] = a.base_field->label();
  out["degree"] = a.degree;
  out["invariants"] = inv;
  return out;
}

CSAInvariants csa_from_json(const json& j) {
  CSAInvariants a;
  a.base_field = parse_field(j.value("field", std::string("Q")));
  a.degree = j.at("degree").get<long>();
  for (const auto& [key, val] : j.at("invariants").items())
    a.invariants.emplace_back(Place::parse(key),
                              QmodZ::parse(val.get<std::string>()));
  return a;
}

json compare_to_json(const CompareResult& r) {
  json out;
  out["isomorphic"] = r.isomorphic;
  out["anti_isomorphic"] = r.anti_isomorphic;
  out["same_maximal_subfields"] = r.same_maximal_subfields;
  out["same_split_places"] = r.same_split_places;
  return out;
}

struct Ex65Opts {
  long d = 3;
  std::string places;
  bool refined = false;
};

int cmd_brauer_example65(const Ex65Opts& o) {
  std::vector<Place> vs;
  for (const std::string& p : split_commas(o.places))
    vs.push_back(Place::finite(Int(p)));
  auto [a, b] = build_example_65(o.d, vs, o.refined);
  json out;
  out["first"] = csa_to_json(a);
  out["second"] = csa_to_json(b);
  out["compare"] = compare_to_json(compare(a, b));
  emit(out);
  return kDecided;
}

struct Ex66Opts {
  long d = 3;
  long quad_d = 5;
  std::string primes;
};

json involution_to_json(const InvolutionPairData& a) {
  json out;
  out["quad_d"] = a.quad_d;
  out["degree"] = a.degree;
  json pairs = json::array();
  for (const SplitPlaceTriple& t : a.split_pairs) {
    json p;
    p["below"] = t.below.str();
    p["above"] = json::array({t.above0.str(), t.above1.str()});
    pairs.push_back(p);
  }
  out["split_pairs"] = pairs;
  out["algebra"] = csa_to_json(a.algebra);
  out["quasi_split_at_inert_reals"] = a.quasi_split_at_inert_reals;
  return out;
}

int cmd_brauer_example66(const Ex66Opts& o) {
  std::vector<std::string> ps = split_commas(o.primes);
  if (ps.size() != 2) throw input_error("give two primes, e.g. 11,19");
  Example66 ex = build_example_66(o.d, o.quad_d, Int(ps[0]), Int(ps[1]));
  json out;
  out["first"] = involution_to_json(ex.first);
  out["second"] = involution_to_json(ex.second);
  out["compare"] =
      compare_to_json(compare(ex.first.algebra, ex.second.algebra));
  emit(out);
  return kDecided;
}

int cmd_brauer_compare(const std::string& path) {
  json doc = read_doc(path);
  CSAInvariants a = csa_from_json(doc.at("a"));
  CSAInvariants b = csa_from_json(doc.at("b"));
  for (const CSAInvariants* c : {&a, &b}) {
    CsaReport rep = validate_csa(*c);
    if (!rep.ok) throw input_error("invalid algebra: " + rep.problem);
  }
  json out;
  out["compare"] = compare_to_json(compare(a, b));
  emit(out);
  return kDecided;
}

int cmd_brauer_validate(const std::string& path) {
  CSAInvariants a = csa_from_json(read_doc(path));
  CsaReport rep = validate_csa(a);
  json out;
  out["ok"] = rep.ok;
  if (!rep.ok) out["problem"] = rep.problem;
  emit(out);
  return kDecided;
}

int cmd_brauer_embeds(const std::string& path) {
  json doc = read_doc(path);
  CSAInvariants a = csa_from_json(doc.at("algebra"));
  const json& ej = doc.at("extension");
  ExtensionLocalDegrees ext;
  ext.degree = ej.at("degree").get<long>();
  for (const auto& [key, val] : ej.at("local_degrees").items())
    ext.local_degrees.emplace_back(Place::parse(key), val.get<long>());
  json out;
  out["embeds"] = embeds_as_maximal_subfield(ext, a);
  emit(out);
  return kDecided;
}

// ---- isogeny ----

TorusElementData element_from_json(const json& j) {
  TorusElementData t;
  const json& mod = j.at("module");
  t.module.rank = mod.at("rank").get<long>();
  for (const json& mj : mod.at("action"))
    t.module.action.push_back(zmat_from_json(mj));
  t.module.group_order =
      mod.value("group_order", static_cast<long>(t.module.action.size()));
  t.field = parse_field(j.value("field", std::string("Q")));
  for (const json& vj : j.at("values"))
    t.values.push_back(number_from_json(t.field, vj));
  if (j.contains("galois_images"))
    for (const json& gj : j["galois_images"])
      t.galois_images.push_back(number_from_json(t.field, gj));
  return t;
}

int cmd_isogeny(const std::string& path, const SearchBudget& budget) {
  json doc = read_doc(path);
  TorusElementData t1 = element_from_json(doc.at("t1"));
  TorusElementData t2 = element_from_json(doc.at("t2"));
  std::vector<Int> chi1 = int_vector(doc.at("chi1"));
  std::vector<Int> chi2 = int_vector(doc.at("chi2"));
  json out;
  try {
    IsogenyResult r = build_isogeny(t1, chi1, t2, chi2, budget);
    out["answer"] = "compatible";
    out["d"] = to_long(r.d);
    out["m1"] = to_long(r.m1);
    out["m2"] = to_long(r.m2);
    out["pi_star"] = zmat_to_json(r.pi_star);
    emit(out);
    return kDecided;
  } catch (const kernel_mismatch& e) {
    out["answer"] = "incompatible";
    out["reason"] = e.what();
    emit(out);
    return kDecided;
  }
}

// ---- tits ----

long vertex_from_label(const std::string& s) {
  if (s.size() < 2 || s[0] != 'a')
    throw input_error("bad vertex label: " + s);
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw input_error("bad vertex label: " + s);
  long n = std::stol(s.substr(1));
  if (n < 1) throw input_error("bad vertex label: " + s);
  return n - 1;
}

std::string vertex_label(long i) { return "a" + std::to_string(i + 1); }

std::vector<std::vector<long>> orbits_from_json(const json& j) {
  std::vector<std::vector<long>> out;
  for (const json& oj : j) {
    std::vector<long> orbit;
    for (const json& v : oj) orbit.push_back(vertex_from_label(v));
    out.push_back(orbit);
  }
  return out;
}

json orbits_to_json(const std::vector<std::vector<long>>& orbits) {
  json out = json::array();
  for (const auto& orbit : orbits) {
    json oj = json::array();
    for (long v : orbit) oj.push_back(vertex_label(v));
    out.push_back(oj);
  }
  return out;
}

int cmd_tits(const std::string& path) {
  json doc = read_doc(path);
  LocalIndexFamily f;
  f.type = RootSystemType::parse(doc.at("type").get<std::string>());
  f.global_orbits = orbits_from_json(doc.at("orbits"));
  if (doc.contains("places"))
    for (const auto& [key, pj] : doc["places"].items()) {
      IndexDatum d;
      d.type = pj.contains("type")
                   ? RootSystemType::parse(pj["type"].get<std::string>())
                   : f.type;
      d.orbits =
          pj.contains("orbits") ? orbits_from_json(pj["orbits"]) : f.global_orbits;
      for (const json& oj : pj.at("distinguished"))
        for (const json& v : oj)
          d.distinguished.push_back(vertex_from_label(v));
      f.per_place.emplace_back(Place::parse(key), d);
    }
  GlobalIndexResult g = everywhere_distinguished(f);
  MinRankResult m = min_rank_check(f);
  json out;
  out["type"] = f.type.str();
  out["orbits"] = orbits_to_json(g.orbits);
  out["global_rank"] = g.global_rank;
  out["min_local_rank"] = m.min_local_rank;
  out["equals_global"] = m.equals_global;
  out["formula_applicable"] = m.formula_applicable;
  emit(out);
  return kDecided;
}

// ---- geodesics ----

// lambda = sqrt(sum c * log(b)^2): single squares pull out of the root
std::string length_string(const LengthValue& l) {
  if (l.exact_form.empty()) return "0";
  if (l.exact_form.size() == 1) {
    const LengthTerm& t = l.exact_form[0];
    Int ns, ds;
    bool sq = mpz_root(ns.get_mpz_t(), t.coeff.get_num().get_mpz_t(), 2) != 0;
    sq = mpz_root(ds.get_mpz_t(), t.coeff.get_den().get_mpz_t(), 2) != 0 && sq;
    std::string logpart = "log(" + t.base.str() + ")";
    if (sq) {
      Rat s(ns, ds);
      s.canonicalize();
      return s == 1 ? logpart : to_string(s) + "*" + logpart;
    }
    return "sqrt(" + to_string(t.coeff) + ")*" + logpart;
  }
  std::string s = "sqrt(";
  for (size_t i = 0; i < l.exact_form.size(); ++i) {
    if (i) s += " + ";
    s += to_string(l.exact_form[i].coeff) + "*log(" +
         l.exact_form[i].base.str() + ")^2";
  }
  return s + ")";
}

struct SampleOpts {
  std::string a = "1", b = "1";
  long bound = 2;
  bool killing = false;
};

int cmd_geodesics_sample(const SampleOpts& o, long precision) {
  QuaternionOrderBox box;
  box.a = parse_rat(o.a);
  box.b = parse_rat(o.b);
  box.coefficient_bound = o.bound;
  FuchsianSample s = fuchsian_sample(box, precision);
  for (size_t i = 0; i < s.traces.size(); ++i) {
    json line;
    line["trace"] = to_string(s.traces[i]);
    line["length_std"] = length_string(s.lengths_std[i]);
    line["approx"] = s.lengths_std[i].approx.mid();
    if (o.killing) {
      line["length_killing"] = length_string(s.lengths_killing[i]);
      line["approx_killing"] = s.lengths_killing[i].approx.mid();
    }
    std::cout << line.dump() << "\n";
  }
  return kDecided;
}

struct RankOneOpts {
  std::string value, field = "Q";
};

int cmd_geodesics_rankone(const RankOneOpts& o, long precision) {
  FieldPtr k = parse_field(o.field);
  AlgebraicNumber v = number_from_json(k, json(o.value));
  json out;
  out["value"] = v.str();
  try {
    LengthValue l = length(rank_one_profile(v), precision);
    out["length"] = length_string(l);
    out["approx"] = l.approx.mid();
    emit(out);
  } catch (const elliptic_element&) {
    out["elliptic"] = true;
    emit(out);
  }
  return kDecided;
}

int cmd_geodesics_qspan(const std::string& path, const SearchBudget& budget,
                        long precision) {
  json doc = read_doc(path);
  FieldPtr k = parse_field(doc.value("field", std::string("Q")));
  auto side = [&](const char* key) {
    std::vector<LengthValue> ls;
    for (const json& vj : doc.at(key))
      ls.push_back(length(rank_one_profile(number_from_json(k, vj)), precision));
    return ls;
  };
  QSpanResult r = qspan_equal(side("first"), side("second"), budget);
  json out;
  switch (r.verdict) {
    case SpanCompare::equal: out["verdict"] = "equal"; break;
    case SpanCompare::not_equal: out["verdict"] = "not_equal"; break;
    case SpanCompare::undecided: out["verdict"] = "undecided"; break;
  }
  if (r.verdict == SpanCompare::not_equal) {
    out["witness_side"] = r.witness_side;
    out["witness_index"] = r.witness_index;
  }
  if (r.verdict == SpanCompare::undecided) out["bound"] = r.bound;
  emit(out);
  return r.verdict == SpanCompare::undecided ? kUndecided : kDecided;
}

// ---- hforms ----

struct HformsOpts {
  std::string type;
  long t = 0;
  long quad_d = 5;
  std::string seeds = "0,0";
  long prime_bound = 200;
};

int cmd_hforms_family(const HformsOpts& o) {
  std::vector<Rat> seeds;
  for (const std::string& s : split_commas(o.seeds))
    seeds.push_back(parse_rat(s));
  RecipeResult r = recipe_914(RootSystemType::parse(o.type), o.quad_d, seeds,
                              o.t, o.prime_bound);
  FamilyReport rep = certify_family(r.layout, r.center, o.t);
  json out;
  out["t"] = rep.t;
  out["count"] = rep.count;
  out["globally_distinct"] = rep.globally_distinct;
  out["locally_pm_equal"] = rep.locally_pm_equal;
  emit(out);
  return kDecided;
}

}  // namespace
}  // namespace wct

int main(int argc, char** argv) {
  using namespace wct;
  CLI::App app{"exact scenario runner for weak commensurability data"};
  app.require_subcommand(1);
  long budget_exp = 20;
  long precision = 128;
  app.add_option("--budget-exp", budget_exp,
                 "exponent bound for relation searches");
  app.add_option("--precision", precision, "working precision in bits");

  int rc = kDecided;
  auto budget = [&]() {
    SearchBudget b;
    b.exponent_bound = budget_exp;
    b.precision_bits = precision;
    return b;
  };

  auto ro = std::make_shared<RootsysOpts>();
  CLI::App* rootsys = app.add_subcommand("rootsys", "root system data");
  rootsys->fallthrough();
  rootsys->add_option("--type", ro->type, "type such as A2, D4")->required();
  rootsys->add_flag("--weyl", ro->weyl, "add Weyl order and class count");
  rootsys->add_flag("--autos", ro->autos, "add automorphism data");
  rootsys->callback([&, ro]() { rc = cmd_rootsys(*ro); });

  CLI::App* weakcomm =
      app.add_subcommand("weakcomm", "weak commensurability decisions");
  weakcomm->fallthrough();
  weakcomm->require_subcommand(1);
  auto wo = std::make_shared<WeakcommOpts>();
  CLI::App* check = weakcomm->add_subcommand("check", "compare two tuples");
  check->fallthrough();
  check->add_option("--e1", wo->e1, "first tuple, e.g. 2,1/2");
  check->add_option("--e2", wo->e2, "second tuple");
  check->add_option("--json", wo->json_path,
                    "document with field, e1, e2 (\"-\" for stdin)");
  check->add_option("--mode", wo->mode, "neat or strict");
  check->callback([&, wo]() { rc = cmd_weakcomm_check(*wo, budget()); });
  auto reo = std::make_shared<RelationOpts>();
  CLI::App* relations =
      weakcomm->add_subcommand("relations", "relation lattice of a tuple");
  relations->fallthrough();
  relations->add_option("--values", reo->values, "tuple, e.g. 2,3,6");
  relations->add_option("--json", reo->json_path,
                        "document with field, values");
  relations->callback(
      [&, reo]() { rc = cmd_weakcomm_relations(*reo, budget()); });

  CLI::App* brauer =
      app.add_subcommand("brauer", "central simple algebra scenarios");
  brauer->fallthrough();
  brauer->require_subcommand(1);
  auto e65 = std::make_shared<Ex65Opts>();
  CLI::App* ex65 = brauer->add_subcommand("example65", "four place pair");
  ex65->fallthrough();
  ex65->add_option("--d", e65->d, "algebra degree, above two")->required();
  ex65->add_option("--places", e65->places, "four primes, e.g. 5,7,11,13")
      ->required();
  ex65->add_flag("--refined", e65->refined,
                 "even degree variant with the real place and a fifth prime");
  ex65->callback([&, e65]() { rc = cmd_brauer_example65(*e65); });
  auto e66 = std::make_shared<Ex66Opts>();
  CLI::App* ex66 = brauer->add_subcommand("example66", "involution pair");
  ex66->fallthrough();
  ex66->add_option("--d", e66->d, "odd degree above one")->required();
  ex66->add_option("--quad-d", e66->quad_d, "quadratic field parameter")
      ->required();
  ex66->add_option("--primes", e66->primes, "two split primes, e.g. 11,19")
      ->required();
  ex66->callback([&, e66]() { rc = cmd_brauer_example66(*e66); });
  auto cmp_path = std::make_shared<std::string>();
  CLI::App* cmp = brauer->add_subcommand("compare", "compare two algebras");
  cmp->fallthrough();
  cmp->add_option("--json", *cmp_path, "document with a, b")->required();
  cmp->callback([&, cmp_path]() { rc = cmd_brauer_compare(*cmp_path); });
  auto val_path = std::make_shared<std::string>();
  CLI::App* val = brauer->add_subcommand("validate", "check one algebra");
  val->fallthrough();
  val->add_option("--json", *val_path, "algebra document")->required();
  val->callback([&, val_path]() { rc = cmd_brauer_validate(*val_path); });
  auto emb_path = std::make_shared<std::string>();
  CLI::App* emb = brauer->add_subcommand("embeds", "maximal subfield test");
  emb->fallthrough();
  emb->add_option("--json", *emb_path, "document with algebra, extension")
      ->required();
  emb->callback([&, emb_path]() { rc = cmd_brauer_embeds(*emb_path); });

  auto iso_path = std::make_shared<std::string>();
  CLI::App* iso =
      app.add_subcommand("isogeny", "character lattice isogeny builder");
  iso->fallthrough();
  iso->add_option("--json", *iso_path, "document with t1, chi1, t2, chi2")
      ->required();
  iso->callback([&, iso_path]() { rc = cmd_isogeny(*iso_path, budget()); });

  auto tits_path = std::make_shared<std::string>();
  CLI::App* tits = app.add_subcommand("tits", "local index aggregation");
  tits->fallthrough();
  tits->add_option("--json", *tits_path, "document with type, orbits, places")
      ->required();
  tits->callback([&, tits_path]() { rc = cmd_tits(*tits_path); });

  CLI::App* geo = app.add_subcommand("geodesics", "length scenarios");
  geo->fallthrough();
  geo->require_subcommand(1);
  auto so = std::make_shared<SampleOpts>();
  CLI::App* sample =
      geo->add_subcommand("sample", "quaternion order trace sample");
  sample->fallthrough();
  sample->add_option("--a", so->a, "Hilbert symbol entry a");
  sample->add_option("--b", so->b, "Hilbert symbol entry b");
  sample->add_option("--bound", so->bound, "half-integer coefficient bound");
  sample->add_flag("--killing", so->killing, "add Killing normalization");
  sample->callback([&, so]() { rc = cmd_geodesics_sample(*so, precision); });
  auto r1 = std::make_shared<RankOneOpts>();
  CLI::App* rankone = geo->add_subcommand("rankone", "length of one value");
  rankone->fallthrough();
  rankone->add_option("--value", r1->value, "rational value, e.g. 2")
      ->required();
  rankone->add_option("--field", r1->field, "field label or minimal poly");
  rankone->callback([&, r1]() { rc = cmd_geodesics_rankone(*r1, precision); });
  auto qs_path = std::make_shared<std::string>();
  CLI::App* qspan = geo->add_subcommand("qspan", "compare two length sets");
  qspan->fallthrough();
  qspan->add_option("--json", *qs_path, "document with field, first, second")
      ->required();
  qspan->callback(
      [&, qs_path]() { rc = cmd_geodesics_qspan(*qs_path, budget(), precision); });

  CLI::App* hf = app.add_subcommand("hforms", "invariant vector families");
  hf->fallthrough();
  hf->require_subcommand(1);
  auto ho = std::make_shared<HformsOpts>();
  CLI::App* family = hf->add_subcommand("family", "build and certify");
  family->fallthrough();
  family->add_option("--type", ho->type, "group type: A2, D5, E6, ...")
      ->required();
  family->add_option("--t", ho->t, "sign parameter count")->required();
  family->add_option("--quad-d", ho->quad_d, "real quadratic parameter");
  family->add_option("--seeds", ho->seeds, "two archimedean seeds");
  family->add_option("--prime-bound", ho->prime_bound,
                     "split prime search bound");
  family->callback([&, ho]() { rc = cmd_hforms_family(*ho); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  } catch (const precision_exhausted& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return rc;
}
