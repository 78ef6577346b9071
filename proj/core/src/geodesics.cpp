#include <wct/geodesics.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace wct {

namespace {

// interval of |value| at the profile's designated real embedding, refined
// until it excludes 1 (callers guarantee value != +-1)
Interval abs_at_place(const AlgebraicNumber& v, long place, long prec) {
  for (long p = prec; p <= 64 * prec; p *= 2) {
    Interval av = embed(v, place, p).abs();
    Interval diff = iv_sub(av, Interval::from_long(1, p));
    if (!diff.contains_zero()) return av;
  }
  throw precision_exhausted("cannot separate |value| from 1");
}

bool abs_above_one(const AlgebraicNumber& v, long place, long prec) {
  Interval av = abs_at_place(v, place, prec);
  return iv_sub(av, Interval::from_long(1, prec)).is_positive();
}

// t with f . t = 1 for a primitive integer vector f
std::vector<Int> bezout_one(const std::vector<Int>& f) {
  long n = static_cast<long>(f.size());
  std::vector<Int> t(n, Int(0));
  Int g(0);
  for (long i = 0; i < n; ++i) {
    if (f[i] == 0) continue;
    Int gn, u, v;
    mpz_gcdext(gn.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t(),
               f[i].get_mpz_t());
    for (long j = 0; j < i; ++j) t[j] *= u;
    t[i] = v;
    g = gn;
    if (g == 1) break;
  }
  if (g != 1 && g != -1) throw std::logic_error("vector not primitive");
  if (g == -1)
    for (Int& x : t) x = -x;
  return t;
}

long designated_place(const NumberField& f) {
  long reals = f.num_real_embeddings();
  if (reals == 0)
    throw input_error("profile field needs a real embedding for |values|");
  return reals - 1;
}

std::string canonical_key(const AlgebraicNumber& x) { return x.str(); }

}  // namespace

RootValueProfile rank_one_profile(const AlgebraicNumber& v,
                                  const std::string& label) {
  RootValueProfile p;
  p.type = RootSystemType::parse("A1");
  p.field = v.field;
  p.element_label = label;
  RootSystem rs = build_root_system(p.type);
  p.values.assign(2, AlgebraicNumber());
  long plus = rs.root_index({Int(1)});
  long minus = rs.root_index({Int(-1)});
  p.values[plus] = v;
  p.values[minus] = inverse(v);
  return p;
}

LengthValue length(const RootValueProfile& p, long precision_bits) {
  RootSystem rs = build_root_system(p.type);
  long nroots = static_cast<long>(rs.roots.size());
  if (static_cast<long>(p.values.size()) != nroots)
    throw input_error("profile must assign a value to every root");
  if (!p.field) throw input_error("profile needs a field");
  long place = designated_place(*p.field);

  AlgebraicNumber one = AlgebraicNumber::from_rat(p.field, Rat(1));
  AlgebraicNumber minus_one = AlgebraicNumber::from_rat(p.field, Rat(-1));
  for (long i = 0; i < nroots; ++i) {
    const AlgebraicNumber& v = p.values[i];
    if (!v.field || !v.field->same_as(*p.field))
      throw input_error("profile value outside the profile field");
    if (v.is_zero()) throw input_error("profile values must be nonzero");
    std::vector<Int> neg = rs.roots_simple[i];
    for (Int& c : neg) c = -c;
    long j = rs.root_index(neg);
    if (!(p.values[j] == inverse(v)))
      throw input_error("profile must send -root to the inverse value");
  }

  // roots with |value| = 1 contribute nothing; at a real embedding that
  // means exactly the values +-1
  std::vector<long> live;
  for (long i = 0; i < nroots; ++i)
    if (!(p.values[i] == one) && !(p.values[i] == minus_one)) live.push_back(i);
  if (live.empty())
    throw elliptic_element("every root value has absolute value one");

  // distinct values, normalized above one so log ratios are positive
  std::vector<AlgebraicNumber> distinct;
  std::map<std::string, long> index_of;
  std::vector<long> value_idx(nroots, -1);
  for (long i : live) {
    AlgebraicNumber w = abs_above_one(p.values[i], place, precision_bits)
                            ? p.values[i]
                            : inverse(p.values[i]);
    std::string key = canonical_key(w);
    auto it = index_of.find(key);
    if (it == index_of.end()) {
      index_of[key] = static_cast<long>(distinct.size());
      value_idx[i] = static_cast<long>(distinct.size());
      distinct.push_back(w);
    } else {
      value_idx[i] = it->second;
    }
  }
  long nd = static_cast<long>(distinct.size());

  // dependence classes: union by certified rational log ratio
  SearchBudget budget;
  budget.precision_bits = precision_bits;
  std::vector<long> parent(nd);
  for (long k = 0; k < nd; ++k) parent[k] = k;
  std::function<long(long)> find = [&](long k) {
    return parent[k] == k ? k : parent[k] = find(parent[k]);
  };
  for (long k = 0; k < nd; ++k)
    for (long l = k + 1; l < nd; ++l) {
      if (find(k) == find(l)) continue;
      if (log_ratio_rational(distinct[k], distinct[l], budget).ratio)
        parent[find(l)] = find(k);
    }

  std::map<long, std::vector<long>> classes;
  for (long k = 0; k < nd; ++k) classes[find(k)].push_back(k);

  LengthValue out;
  for (auto& [root_k, members] : classes) {
    long s = static_cast<long>(members.size());
    std::vector<AlgebraicNumber> vals;
    for (long k : members) vals.push_back(distinct[k]);
    // integer log exponents against a common generator of the class group
    std::vector<Int> f;
    bool combined = true;
    if (s == 1) {
      f = {Int(1)};
    } else {
      RelationLattice rel =
          relation_lattice(MultiplicativeTuple(p.field, vals), budget);
      ZMat ker = rel.basis.rows ? z_nullspace(rel.basis) : ZMat::identity(s);
      if (ker.rows == 1)
        f = ker.row(0);
      else
        combined = false;  // incomplete relations: keep the terms separate
    }
    if (combined) {
      AlgebraicNumber g = tuple_power(MultiplicativeTuple(p.field, vals),
                                      bezout_one(f));
      if (!abs_above_one(g, place, precision_bits)) {
        g = inverse(g);
        for (Int& x : f) x = -x;
      }
      Rat coeff(0);
      for (long i : live)
        if (find(value_idx[i]) == root_k) {
          long pos = -1;
          for (long m = 0; m < s; ++m)
            if (members[m] == value_idx[i]) pos = m;
          coeff += Rat(f[pos] * f[pos]);
        }
      out.exact_form.push_back({coeff, g});
    } else {
      for (long m = 0; m < s; ++m) {
        Rat coeff(0);
        for (long i : live)
          if (value_idx[i] == members[m]) coeff += 1;
        out.exact_form.push_back({coeff, distinct[members[m]]});
      }
    }
  }
  std::sort(out.exact_form.begin(), out.exact_form.end(),
            [](const LengthTerm& x, const LengthTerm& y) {
              return canonical_key(x.base) < canonical_key(y.base);
            });

  Interval sq = Interval::from_long(0, precision_bits);
  for (const LengthTerm& term : out.exact_form) {
    Interval lg = iv_log(abs_at_place(term.base, place, precision_bits));
    sq = iv_add(sq, iv_scale(iv_sqr(lg), term.coeff));
  }
  out.approx = iv_sqrt(sq);
  return out;
}

std::vector<AlgebraicNumber> lyapunov_vector(
    const RootValueProfile& p,
    const std::vector<AlgebraicNumber>& simple_positive_characters) {
  RootSystem rs = build_root_system(p.type);
  if (static_cast<long>(p.values.size()) != static_cast<long>(rs.roots.size()))
    throw input_error("profile must assign a value to every root");
  if (static_cast<long>(simple_positive_characters.size()) != rs.rank)
    throw missing_character_value("need one character per simple root");
  std::vector<AlgebraicNumber> out;
  for (long i = 0; i < rs.rank; ++i) {
    std::vector<Int> coords(rs.rank, Int(0));
    coords[i] = 1;
    long idx = rs.root_index(coords);
    AlgebraicNumber doubled = pow(p.values[idx], Int(2));
    if (!(simple_positive_characters[i] == doubled))
      throw missing_character_value(
          "character does not match the doubled simple root value");
    out.push_back(doubled);
  }
  return out;
}

namespace {

// single-log reading of a length: lambda = sqrt(coeff) * log|base|
struct SingleLog {
  Rat coeff;
  AlgebraicNumber base;
  bool ok = false;
};

SingleLog single_log(const LengthValue& l) {
  SingleLog s;
  if (l.exact_form.size() != 1) return s;
  s.coeff = l.exact_form[0].coeff;
  s.base = l.exact_form[0].base;
  s.ok = true;
  return s;
}

bool rat_square_ratio(const Rat& a, const Rat& b) {
  Rat r = a / b;
  Int n = r.get_num(), d = r.get_den();
  Int rn, rd;
  return mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 2) != 0 &&
         mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 2) != 0;
}

}  // namespace

QSpanResult qspan_equal(const std::vector<LengthValue>& l1,
                        const std::vector<LengthValue>& l2,
                        const SearchBudget& budget) {
  QSpanResult res;
  bool any_uncertain = false;
  // a certified mismatch anywhere beats an uncertain member elsewhere, so
  // scan every member of both sides before settling on undecided
  auto match_into = [&](const std::vector<LengthValue>& from,
                        const std::vector<LengthValue>& into, int side,
                        QSpanResult& r) -> bool {
    for (size_t i = 0; i < from.size(); ++i) {
      SingleLog a = single_log(from[i]);
      bool matched = false, certified_all = true;
      for (const LengthValue& cand : into) {
        SingleLog b = single_log(cand);
        if (!a.ok || !b.ok) {
          // multi-log members only match on identical exact forms
          if (from[i].exact_form.size() == cand.exact_form.size()) {
            bool same = true;
            for (size_t k = 0; k < cand.exact_form.size(); ++k)
              if (!(from[i].exact_form[k].coeff == cand.exact_form[k].coeff) ||
                  !(from[i].exact_form[k].base == cand.exact_form[k].base))
                same = false;
            if (same) {
              matched = true;
              break;
            }
          }
          certified_all = false;
          continue;
        }
        LogRatioResult lr = log_ratio_rational(a.base, b.base, budget);
        if (lr.ratio) {
          // rational log ratio: lengths are rationally dependent exactly
          // when the coefficient ratio is a perfect square
          if (rat_square_ratio(a.coeff, b.coeff)) {
            matched = true;
            break;
          }
          continue;
        }
        // certified irrational log ratio is transcendental, so no rational
        // coefficient can bridge it; anything weaker leaves doubt
        if (lr.completeness != Completeness::certified) certified_all = false;
      }
      if (matched) continue;
      if (certified_all) {
        r.verdict = SpanCompare::not_equal;
        r.witness_side = side;
        r.witness_index = static_cast<long>(i);
        return false;
      }
      any_uncertain = true;
    }
    return true;
  };
  if (!match_into(l1, l2, 1, res)) return res;
  if (!match_into(l2, l1, 2, res)) return res;
  if (any_uncertain) {
    res.verdict = SpanCompare::undecided;
    res.bound = budget.exponent_bound;
  } else {
    res.verdict = SpanCompare::equal;
  }
  return res;
}

FuchsianSample fuchsian_sample(const QuaternionOrderBox& box,
                               long precision_bits) {
  if (box.a == 0 || box.b == 0)
    throw input_error("Hilbert pair entries must be nonzero");
  if (box.coefficient_bound < 0) throw input_error("bound must be nonnegative");
  if (box.a < 0 && box.b < 0)
    throw real_ramified("the algebra is definite at the real place");

  std::set<Rat> traces;
  long h = 2 * box.coefficient_bound;
  Rat a = box.a, b = box.b, ab = box.a * box.b;
  for (long h0 = -h; h0 <= h; ++h0)
    for (long h1 = -h; h1 <= h; ++h1)
      for (long h2 = -h; h2 <= h; ++h2)
        for (long h3 = -h; h3 <= h; ++h3) {
          Rat x0(h0, 2), x1(h1, 2), x2(h2, 2), x3(h3, 2);
          Rat nrd = x0 * x0 - a * x1 * x1 - b * x2 * x2 + ab * x3 * x3;
          if (nrd != 1) continue;
          Rat tr = 2 * x0;
          if (tr < 0) tr = -tr;
          if (tr > 2) traces.insert(tr);
        }

  FuchsianSample out;
  for (const Rat& tr : traces) {
    out.traces.push_back(tr);
    // lambda = (tr + sqrt(tr^2 - 4)) / 2 in Q(sqrt d), d the squarefree core
    Rat disc = tr * tr - 4;
    Int dn = disc.get_num(), dd = disc.get_den();
    Int inner = dn * dd;  // sqrt(disc) = sqrt(inner) / dd
    Int m(1), d(1), rest = inner;
    for (Int q(2); q * q <= rest; ++q)
      while (rest % (q * q) == 0) {
        rest /= q * q;
        m *= q;
      }
    d = rest;
    AlgebraicNumber lambda;
    if (d == 1) {
      FieldPtr qf = NumberField::rationals();
      lambda = AlgebraicNumber::from_rat(qf, (tr + Rat(m, dd)) / 2);
    } else {
      FieldPtr k = NumberField::quadratic(to_long(d));
      lambda = AlgebraicNumber(k, {tr / 2, Rat(m, dd) / 2});
    }
    long place = lambda.field->num_real_embeddings() - 1;
    Interval lg = iv_log(abs_at_place(lambda, place, precision_bits));

    LengthValue std_len;
    std_len.exact_form.push_back({Rat(4), lambda});
    std_len.approx = iv_sqrt(iv_scale(iv_sqr(lg), Rat(4)));
    out.lengths_std.push_back(std_len);

    LengthValue kil;
    kil.exact_form.push_back({Rat(8), lambda});
    kil.approx = iv_sqrt(iv_scale(iv_sqr(lg), Rat(8)));
    out.lengths_killing.push_back(kil);
  }
  return out;
}

}  // namespace wct
