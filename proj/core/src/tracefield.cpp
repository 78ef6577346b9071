#include <wct/numfield.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace wct {

namespace {

std::string fmat_key(const FMat& m) {
  std::ostringstream os;
  for (const AlgebraicNumber& x : m.a)
    for (const Rat& c : x.coords) os << c.get_str() << ",";
  return os.str();
}

// basis (as field elements) of the subfield generated by the given elements:
// take the span of 1 and the generators, then close under multiplication
std::vector<AlgebraicNumber> subfield_basis(const FieldPtr& k,
                                            const std::vector<AlgebraicNumber>& gens) {
  long n = k->degree();
  std::vector<std::vector<Rat>> vecs;
  vecs.push_back(AlgebraicNumber::from_rat(k, Rat(1)).coords);
  for (const auto& g : gens) vecs.push_back(g.coords);

  auto reduce_basis = [&](const std::vector<std::vector<Rat>>& v) {
    QMat m(static_cast<long>(v.size()), n);
    for (size_t i = 0; i < v.size(); ++i)
      for (long j = 0; j < n; ++j) m(static_cast<long>(i), j) = v[i][j];
    q_rref(m);
    std::vector<AlgebraicNumber> basis;
    for (long i = 0; i < m.rows; ++i) {
      std::vector<Rat> row = m.row(i);
      if (std::all_of(row.begin(), row.end(), [](const Rat& c) { return c == 0; }))
        continue;
      basis.emplace_back(k, row);
    }
    return basis;
  };

  std::vector<AlgebraicNumber> basis = reduce_basis(vecs);
  for (;;) {
    std::vector<std::vector<Rat>> next;
    for (const auto& b : basis) next.push_back(b.coords);
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = i; j < basis.size(); ++j)
        next.push_back((basis[i] * basis[j]).coords);
    std::vector<AlgebraicNumber> bigger = reduce_basis(next);
    if (bigger.size() == basis.size()) return basis;
    basis = std::move(bigger);
  }
}

long squarefree_core(const Rat& e) {
  if (e == 0) throw input_error("squarefree core of zero");
  Int n = e.get_num() * e.get_den();
  int sign = n < 0 ? -1 : 1;
  n = abs(n);
  Int core(1);
  for (long p : small_primes()) {
    if (n == 1) break;
    long v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    if (v % 2 == 1) core *= p;
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      // even power of a large prime, contributes nothing
    } else {
      core *= n;  // may itself be non-squarefree only for absurdly large inputs
    }
  }
  return to_long(sign * core);
}

// present the subfield spanned by `basis` as its own NumberField; finds a
// primitive element gamma = sum t^i b_i, scales it integral, and returns the
// new field together with gamma as an element of the ambient field
std::pair<FieldPtr, AlgebraicNumber> present_subfield(
    const FieldPtr& k, const std::vector<AlgebraicNumber>& basis) {
  long d = static_cast<long>(basis.size());
  if (d == 1) return {NumberField::rationals(), AlgebraicNumber::from_rat(k, Rat(1))};
  for (long t = 1; t < 200; ++t) {
    AlgebraicNumber gamma = AlgebraicNumber::from_rat(k, Rat(0));
    Rat w(1);
    for (const auto& b : basis) {
      gamma = gamma + w * b;
      w *= t;
    }
    QPoly mp = min_poly_of(gamma);
    if (degree(mp) != d) continue;
    if (d == 2) {
      // canonical quadratic presentation Q(sqrt(core(b^2 - 4c)))
      Rat disc = mp[1] * mp[1] - 4 * mp[0];
      long core = squarefree_core(disc);
      return {NumberField::quadratic(core), gamma};
    }
    // scale gamma so its minimal polynomial has integer coefficients
    Int s(1);
    for (const Rat& c : mp) s = lcm(s, c.get_den());
    AlgebraicNumber scaled = Rat(s) * gamma;
    QPoly smp = min_poly_of(scaled);
    ZPoly zmp;
    for (const Rat& c : smp) {
      if (c.get_den() != 1) throw input_error("integral scaling failed");
      zmp.push_back(c.get_num());
    }
    return {NumberField::from_min_poly(zmp), scaled};
  }
  throw input_error("no primitive element found");
}

}  // namespace

TraceFieldResult trace_field(const std::vector<FMat>& generators, long word_bound,
                             bool adjoint_traces) {
  if (generators.empty()) throw input_error("trace field needs generators");
  FieldPtr k = generators[0].field;
  for (const auto& g : generators)
    if (!g.field->same_as(*k)) throw input_error("generators in different fields");
  if (word_bound < 1) throw input_error("word bound must be positive");

  // alphabet: generators and their inverses, words tracked with inverses so
  // adjoint traces tr(w) tr(w^-1) - 1 come free
  std::vector<std::pair<FMat, FMat>> alphabet;
  for (const auto& g : generators) {
    auto gi = fmat_inverse(g);
    if (!gi) throw input_error("generator is singular");
    alphabet.emplace_back(g, *gi);
    alphabet.emplace_back(*gi, g);
  }

  auto trace_value = [&](const FMat& w, const FMat& wi) {
    AlgebraicNumber t = fmat_trace(w);
    if (!adjoint_traces) return t;
    return t * fmat_trace(wi) - AlgebraicNumber::from_rat(k, Rat(1));
  };

  std::vector<AlgebraicNumber> traces;
  std::vector<long> dim_at_length;
  std::vector<std::pair<FMat, FMat>> layer;
  std::set<std::string> seen;
  {
    FMat id = FMat::identity(k, generators[0].n);
    layer.emplace_back(id, id);
    seen.insert(fmat_key(id));
  }
  for (long len = 1; len <= word_bound; ++len) {
    std::vector<std::pair<FMat, FMat>> next;
    for (const auto& [w, wi] : layer)
      for (const auto& [a, ai] : alphabet) {
        FMat nw = fmat_mul(w, a);
        std::string key = fmat_key(nw);
        if (!seen.insert(key).second) continue;
        FMat nwi = fmat_mul(ai, wi);
        traces.push_back(trace_value(nw, nwi));
        next.emplace_back(std::move(nw), std::move(nwi));
      }
    layer = std::move(next);
    std::vector<AlgebraicNumber> basis = subfield_basis(k, traces);
    dim_at_length.push_back(static_cast<long>(basis.size()));
  }

  std::vector<AlgebraicNumber> basis = subfield_basis(k, traces);
  auto [field, gamma] = present_subfield(k, basis);
  (void)gamma;
  TraceFieldResult r;
  r.field = field;
  r.dimension = static_cast<long>(basis.size());
  r.stabilized = dim_at_length.size() >= 2 &&
                 dim_at_length[dim_at_length.size() - 1] ==
                     dim_at_length[dim_at_length.size() - 2];
  return r;
}

// ---- compositum ----

namespace {

using FPoly = std::vector<AlgebraicNumber>;  // coefficients low to high

void fnormalize(FPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

FPoly fp_mul(const FPoly& a, const FPoly& b, const FieldPtr& k) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, AlgebraicNumber::from_rat(k, Rat(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

std::pair<FPoly, FPoly> fp_divrem(const FPoly& a, const FPoly& b, const FieldPtr& k) {
  FPoly r = a, q;
  fnormalize(r);
  long db = static_cast<long>(b.size()) - 1;
  AlgebraicNumber lead = inverse(b.back());
  if (static_cast<long>(r.size()) - 1 >= db)
    q.assign(r.size() - db, AlgebraicNumber::from_rat(k, Rat(0)));
  while (static_cast<long>(r.size()) - 1 >= db) {
    long shift = static_cast<long>(r.size()) - 1 - db;
    AlgebraicNumber c = r.back() * lead;
    q[shift] = c;
    for (long i = 0; i <= db; ++i)
      r[shift + i] = r[shift + i] - c * b[i];
    r.pop_back();
    fnormalize(r);
  }
  return {q, r};
}

FPoly fp_gcd(FPoly a, FPoly b, const FieldPtr& k) {
  fnormalize(a);
  fnormalize(b);
  while (!b.empty()) {
    auto [q, r] = fp_divrem(a, b, k);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    AlgebraicNumber inv = inverse(a.back());
    for (auto& c : a) c = c * inv;
  }
  return a;
}

AlgebraicNumber fp_eval(const FPoly& p, const AlgebraicNumber& x, const FieldPtr& k) {
  AlgebraicNumber v = AlgebraicNumber::from_rat(k, Rat(0));
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) v = v * x + p[i];
  return v;
}

ComplexBox arch_box(const ArchValue& v) { return ComplexBox(v.re, v.im); }

}  // namespace

CompositumMap compositum(const FieldPtr& k1, const FieldPtr& k2) {
  long n1 = k1->degree(), n2 = k2->degree();
  if (n1 == 1 || n2 == 1) {
    const FieldPtr& big = n1 == 1 ? k2 : k1;
    CompositumMap m;
    m.field = big;
    std::vector<Rat> triv(big->degree(), Rat(0));
    std::vector<Rat> self = AlgebraicNumber::gen(big).coords;
    m.image_gen1 = n1 == 1 ? triv : self;
    m.image_gen2 = n1 == 1 ? self : triv;
    return m;
  }
  if (k1->same_as(*k2)) {
    CompositumMap m;
    m.field = k1;
    m.image_gen1 = AlgebraicNumber::gen(k1).coords;
    m.image_gen2 = m.image_gen1;
    return m;
  }

  // companion matrices of the two minimal polynomials
  auto companion = [](const ZPoly& f) {
    long n = degree(f);
    QMat m(n, n);
    for (long i = 1; i < n; ++i) m(i, i - 1) = Rat(1);
    for (long i = 0; i < n; ++i) m(i, n - 1) = Rat(-f[i]);
    return m;
  };
  QMat ma = companion(k1->min_poly());
  QMat mb = companion(k2->min_poly());
  long nn = n1 * n2;

  for (long t = 1; t <= 40; ++t) {
    // multiplication by alpha + t beta on k1 (x) k2
    QMat mg(nn, nn);
    for (long i1 = 0; i1 < n1; ++i1)
      for (long j1 = 0; j1 < n1; ++j1)
        for (long i2 = 0; i2 < n2; ++i2) {
          if (ma(i1, j1) != 0) mg(i1 * n2 + i2, j1 * n2 + i2) += ma(i1, j1);
        }
    for (long i1 = 0; i1 < n1; ++i1)
      for (long i2 = 0; i2 < n2; ++i2)
        for (long j2 = 0; j2 < n2; ++j2)
          if (mb(i2, j2) != 0) mg(i1 * n2 + i2, i1 * n2 + j2) += Rat(t) * mb(i2, j2);

    std::vector<Rat> cp = charpoly(mg);
    QFactorization fact = factor_qpoly(cp);

    // the factor vanishing at sigma_0(alpha) + t tau_0(beta)
    AlgebraicNumber a1 = AlgebraicNumber::gen(k1);
    AlgebraicNumber a2 = AlgebraicNumber::gen(k2);
    const ZPoly* chosen = nullptr;
    for (long prec = 96; prec <= 3072; prec *= 2) {
      ArchValue va = embed(a1, 0, prec);
      ArchValue vb = embed(a2, 0, prec);
      ComplexBox gb = cb_add(arch_box(va),
                             ComplexBox(iv_scale(arch_box(vb).re, Rat(t)),
                                        iv_scale(arch_box(vb).im, Rat(t))));
      std::vector<const ZPoly*> hits;
      for (const auto& [f, mult] : fact.factors) {
        (void)mult;
        std::vector<Rat> qc;
        for (const Int& c : f) qc.emplace_back(c);
        ComplexBox val(Interval(gb.re.prec()), Interval(gb.re.prec()));
        {
          ComplexBox v(Interval::from_rat(qc.back(), gb.re.prec()), Interval(gb.re.prec()));
          for (long kk = static_cast<long>(qc.size()) - 2; kk >= 0; --kk) {
            v = cb_mul(v, gb);
            v.re = iv_add(v.re, Interval::from_rat(qc[kk], gb.re.prec()));
          }
          val = v;
        }
        if (val.re.contains_zero() && val.im.contains_zero()) hits.push_back(&f);
      }
      if (hits.size() == 1) {
        chosen = hits[0];
        break;
      }
    }
    if (!chosen) throw precision_error("compositum component selection stalled");
    if (degree(*chosen) > 8) throw field_too_large("compositum degree above 8");

    FieldPtr comp = NumberField::from_min_poly(*chosen);
    AlgebraicNumber z = AlgebraicNumber::gen(comp);

    // recover alpha inside the component: gcd of f1(y) and f2((z - y)/t)
    FPoly f1;
    for (const Int& c : k1->min_poly()) f1.push_back(AlgebraicNumber::from_rat(comp, Rat(c)));
    FPoly lin{Rat(1, t) * z, AlgebraicNumber::from_rat(comp, Rat(-1, t))};
    FPoly f2{AlgebraicNumber::from_rat(comp, Rat(k2->min_poly().back()))};
    for (long i = degree(k2->min_poly()) - 1; i >= 0; --i) {
      f2 = fp_mul(f2, lin, comp);
      f2[0] = f2[0] + AlgebraicNumber::from_rat(comp, Rat(k2->min_poly()[i]));
    }
    FPoly g = fp_gcd(f1, f2, comp);
    if (g.size() != 2) continue;  // gamma not primitive for this t, try next
    AlgebraicNumber alpha = -g[0];
    AlgebraicNumber beta = Rat(1, t) * (z - alpha);

    if (!fp_eval(f1, alpha, comp).is_zero())
      throw input_error("compositum internal check failed");
    FPoly f2plain;
    for (const Int& c : k2->min_poly())
      f2plain.push_back(AlgebraicNumber::from_rat(comp, Rat(c)));
    if (!fp_eval(f2plain, beta, comp).is_zero())
      throw input_error("compositum internal check failed");

    CompositumMap m;
    m.field = comp;
    m.image_gen1 = alpha.coords;
    m.image_gen2 = beta.coords;
    return m;
  }
  throw input_error("no primitive compositum generator found");
}

AlgebraicNumber transport(const AlgebraicNumber& x, const FieldPtr& target,
                          const std::vector<Rat>& image_gen) {
  AlgebraicNumber img(target, image_gen);
  // the image must satisfy the source minimal polynomial
  FPoly mp;
  for (const Int& c : x.field->min_poly())
    mp.push_back(AlgebraicNumber::from_rat(target, Rat(c)));
  if (x.field->degree() > 1 && !fp_eval(mp, img, target).is_zero())
    throw input_error("transport image is not a root of the source field polynomial");
  AlgebraicNumber v = AlgebraicNumber::from_rat(target, Rat(0));
  for (long i = static_cast<long>(x.coords.size()) - 1; i >= 0; --i)
    v = v * img + AlgebraicNumber::from_rat(target, x.coords[i]);
  return v;
}

}  // namespace wct
