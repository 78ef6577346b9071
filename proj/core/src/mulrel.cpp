#include <wct/mulrel.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace wct {

namespace {

// ---- exact valuation rows ----

// insert x into a pairwise-coprime base, splitting entries by gcd until every
// inserted integer factors exactly over the base
void coprime_insert(Int x, std::vector<Int>& base) {
  if (x < 0) x = -x;
  if (x <= 1) return;
  for (size_t i = 0; i < base.size();) {
    Int g = gcd(x, base[i]);
    if (g == 1) {
      ++i;
      continue;
    }
    if (g == base[i]) {
      x /= g;
      if (x == 1) return;
      continue;  // same entry again: x may still share a factor with it
    }
    Int b = base[i];
    base.erase(base.begin() + static_cast<long>(i));
    coprime_insert(g, base);
    coprime_insert(b / g, base);
    coprime_insert(x, base);
    return;
  }
  base.push_back(x);
}

// multiplicity of the base element b in x (b from a coprime base covering x)
long base_valuation(const Rat& x, const Int& b) {
  return valuation_z(Int(x.get_num()), b) - valuation_z(Int(x.get_den()), b);
}

struct QuadShape {
  long d = 0;  // field is x^2 - d, d squarefree
  bool ok = false;
};

QuadShape quad_shape(const NumberField& f) {
  QuadShape s;
  if (f.degree() != 2) return s;
  const ZPoly& p = f.min_poly();
  if (p[1] != 0) return s;
  Int d = -p[0];
  if (!d.fits_slong_p()) return s;
  long dl = to_long(d);
  long a = dl < 0 ? -dl : dl;
  if (a <= 1600000000L) {  // squarefree check by trial division
    for (long q = 2; q * q <= a; ++q) {
      while (a % q == 0) {
        a /= q;
        if (a % q == 0) return s;
        break;
      }
    }
    s.d = dl;
    s.ok = true;
  }
  return s;
}

// exact finite-place valuation matrix: rows are places, columns are values
ZMat valuation_matrix(const MultiplicativeTuple& t, const SearchBudget& budget) {
  long n = t.size();
  std::vector<Rat> norms;
  norms.reserve(t.values.size());
  for (const AlgebraicNumber& x : t.values) norms.push_back(norm(x));

  std::vector<Int> base;
  for (const Rat& nm : norms) {
    coprime_insert(Int(nm.get_num()), base);
    coprime_insert(Int(nm.get_den()), base);
  }
  QuadShape qs = quad_shape(*t.field);
  if (qs.ok)
    for (const AlgebraicNumber& x : t.values)
      for (const Rat& c : x.coords) coprime_insert(Int(c.get_den()), base);
  std::sort(base.begin(), base.end());

  std::vector<std::vector<Int>> rows;
  for (const Int& b : base) {
    bool prime = b <= budget.prime_bound && is_prime(b);
    if (qs.ok && prime) {
      // prime-ideal valuations in the quadratic field (finer than the norm)
      std::vector<Place> places;
      switch (splitting_type(qs.d, b)) {
        case SplittingType::split:
          places.push_back(Place::finite(b, QuadTag::split0));
          places.push_back(Place::finite(b, QuadTag::split1));
          break;
        case SplittingType::inert:
          places.push_back(Place::finite(b, QuadTag::inert));
          break;
        case SplittingType::ramified:
          places.push_back(Place::finite(b, QuadTag::ramified));
          break;
      }
      for (const Place& pl : places) {
        std::vector<Int> row(n);
        for (long i = 0; i < n; ++i)
          row[i] = quad_valuation(t.values[i], qs.d, pl);
        rows.push_back(std::move(row));
      }
    } else {
      std::vector<Int> row(n);
      for (long i = 0; i < n; ++i) row[i] = base_valuation(norms[i], b);
      rows.push_back(std::move(row));
    }
  }

  ZMat m(static_cast<long>(rows.size()), n);
  for (long r = 0; r < m.rows; ++r)
    for (long j = 0; j < n; ++j) m(r, j) = rows[r][j];
  return m;
}

// ---- interval logarithmic embeddings ----

// log |embedding j of value i|, outward rounded
std::vector<std::vector<Interval>> log_rows(const MultiplicativeTuple& t,
                                            long prec) {
  long places = t.field->num_arch_places();
  std::vector<std::vector<Interval>> L;
  for (const AlgebraicNumber& x : t.values) {
    std::vector<Interval> row;
    for (long j = 0; j < places; ++j)
      row.push_back(iv_log(embed(x, j, prec).abs()));
    L.push_back(std::move(row));
  }
  return L;
}

// interval enclosure of the log row of the exponent vector e
std::vector<Interval> combine_logs(const std::vector<std::vector<Interval>>& L,
                                   const std::vector<Int>& e, long prec) {
  long places = L.empty() ? 0 : static_cast<long>(L[0].size());
  std::vector<Interval> out;
  for (long j = 0; j < places; ++j) {
    Interval s = Interval::from_long(0, prec);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) s = iv_add(s, iv_scale(L[i][j], Rat(e[i])));
    out.push_back(std::move(s));
  }
  return out;
}

// provable lower bound on the real rank of an interval matrix: pivots must
// exclude zero, elimination is interval arithmetic throughout
long interval_rank_lower_bound(std::vector<std::vector<Interval>> m) {
  long rows = static_cast<long>(m.size());
  long cols = rows ? static_cast<long>(m[0].size()) : 0;
  long rank = 0;
  for (long c = 0; c < cols && rank < rows; ++c) {
    long pivot = -1;
    double best = 0;
    for (long r = rank; r < rows; ++r) {
      if (m[r][c].contains_zero()) continue;
      double mag = m[r][c].mid() < 0 ? -m[r][c].mid() : m[r][c].mid();
      if (pivot < 0 || mag > best) {
        pivot = r;
        best = mag;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (long r = rank + 1; r < rows; ++r) {
      Interval f = iv_div(m[r][c], m[rank][c]);
      for (long j = c; j < cols; ++j)
        m[r][j] = iv_sub(m[r][j], iv_mul(f, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

// enumerate all lattice points of the row lattice of H (in hermite form) with
// every coordinate bounded by B in absolute value
void enumerate_box(const ZMat& h, long bound,
                   const std::function<void(const std::vector<Int>&)>& emit) {
  long r = h.rows, n = h.cols;
  std::vector<long> pivot_col(r, -1);
  for (long k = 0; k < r; ++k)
    for (long j = 0; j < n; ++j)
      if (h(k, j) != 0) {
        pivot_col[k] = j;
        break;
      }
  std::vector<Int> e(n);
  Int B(bound);
  std::function<void(long)> rec = [&](long k) {
    if (k == r) {
      for (long j = 0; j < n; ++j)
        if (e[j] > B || e[j] < -B) return;
      emit(e);
      return;
    }
    long jc = pivot_col[k];
    if (jc < 0) {
      rec(k + 1);
      return;
    }
    Int hkk = h(k, jc), s = e[jc];
    // c with -B <= s + c*hkk <= B
    Int lo, hi;
    mpz_cdiv_q(lo.get_mpz_t(), Int(-B - s).get_mpz_t(), hkk.get_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), Int(B - s).get_mpz_t(), hkk.get_mpz_t());
    for (Int c = lo; c <= hi; ++c) {
      if (c == 0) {
        rec(k + 1);
        continue;
      }
      for (long j = 0; j < n; ++j) e[j] += c * h(k, j);
      rec(k + 1);
      for (long j = 0; j < n; ++j) e[j] -= c * h(k, j);
    }
  };
  rec(0);
}

std::string key_of(const std::vector<Int>& e) {
  std::string s;
  for (const Int& v : e) {
    s += v.get_str();
    s += ',';
  }
  return s;
}

}  // namespace

MultiplicativeTuple::MultiplicativeTuple(FieldPtr f,
                                         std::vector<AlgebraicNumber> v)
    : field(std::move(f)), values(std::move(v)) {
  if (!field) throw input_error("tuple needs a field");
  for (const AlgebraicNumber& x : values) {
    if (!x.field->same_as(*field))
      throw input_error("tuple value outside the common field");
    if (x.is_zero()) throw input_error("tuple values must be nonzero");
  }
}

MultiplicativeTuple MultiplicativeTuple::rationals(const std::vector<Rat>& v) {
  FieldPtr q = NumberField::rationals();
  std::vector<AlgebraicNumber> vals;
  vals.reserve(v.size());
  for (const Rat& x : v) vals.push_back(AlgebraicNumber::from_rat(q, x));
  return MultiplicativeTuple(q, std::move(vals));
}

AlgebraicNumber tuple_power(const MultiplicativeTuple& t,
                            const std::vector<Int>& e) {
  if (static_cast<long>(e.size()) != t.size())
    throw input_error("exponent vector length mismatch");
  AlgebraicNumber acc = AlgebraicNumber::from_rat(t.field, Rat(1));
  for (long i = 0; i < t.size(); ++i)
    if (e[i] != 0) acc = acc * pow(t.values[i], e[i]);
  return acc;
}

RelationLattice relation_lattice(const MultiplicativeTuple& t,
                                 const SearchBudget& budget) {
  long n = t.size();
  RelationLattice out;
  out.tuple_size = n;
  out.basis = ZMat(0, n);
  if (n == 0) return out;

  ZMat m = valuation_matrix(t, budget);
  ZMat kernel = m.rows == 0 ? ZMat::identity(n) : z_nullspace(m);
  long r = kernel.rows;
  if (r == 0) return out;  // certified: no relation satisfies the valuations

  // fast path: every saturated kernel direction is itself a relation, so the
  // relation lattice equals the kernel lattice
  std::vector<long> orders(r, 0);
  bool all_torsion = true;
  for (long k = 0; k < r; ++k) {
    auto ord = root_of_unity_order(tuple_power(t, kernel.row(k)));
    if (ord)
      orders[k] = *ord;
    else
      all_torsion = false;
  }
  if (all_torsion) {
    out.basis = kernel;
    out.torsion_orders = orders;
    return out;
  }

  // some kernel direction has infinite order: collect every relation in the
  // exponent box, then see whether the archimedean logs certify completeness
  long prec = budget.precision_bits;
  auto L = log_rows(t, prec);
  std::vector<std::vector<Int>> found;
  for (long k = 0; k < r; ++k)
    if (orders[k] > 0) found.push_back(kernel.row(k));

  ZMat h = kernel;
  hnf_rows(h);
  std::set<std::string> tried;
  enumerate_box(h, budget.exponent_bound, [&](const std::vector<Int>& e) {
    bool zero = true;
    for (const Int& v : e)
      if (v != 0) zero = false;
    if (zero) return;
    std::vector<Int> neg(e.size());
    for (size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    if (!tried.insert(key_of(e)).second || tried.count(key_of(neg))) return;
    for (const Interval& s : combine_logs(L, e, prec))
      if (!s.contains_zero()) return;  // certified nonzero log: not torsion
    if (root_of_unity_order(tuple_power(t, e))) found.push_back(e);
  });

  ZMat gens(static_cast<long>(found.size()), n);
  for (long i = 0; i < gens.rows; ++i)
    for (long j = 0; j < n; ++j) gens(i, j) = found[i][j];
  ZMat basis = gens.rows ? lattice_saturation(gens) : ZMat(0, n);

  out.basis = basis;
  out.torsion_orders.assign(basis.rows, 0);
  for (long k = 0; k < basis.rows; ++k) {
    auto ord = root_of_unity_order(tuple_power(t, basis.row(k)));
    if (!ord) throw std::logic_error("saturated relation failed verification");
    out.torsion_orders[k] = *ord;
  }

  // rank certificate: relations live in the real kernel of the log map on
  // kernel coordinates, so provable log rank rho bounds their rank by r - rho
  std::vector<std::vector<Interval>> lam;
  for (long k = 0; k < r; ++k) lam.push_back(combine_logs(L, kernel.row(k), prec));
  long rho = interval_rank_lower_bound(std::move(lam));
  if (basis.rows == r - rho) {
    out.completeness = Completeness::certified;
  } else {
    out.completeness = Completeness::bound_relative;
    out.bound = budget.exponent_bound;
  }
  return out;
}

namespace {

// torsion value subgroup generated by the lattice's basis values, with an
// exponent word recorded for each element
std::vector<std::pair<AlgebraicNumber, std::vector<Int>>> torsion_group(
    const MultiplicativeTuple& t, const RelationLattice& lat) {
  long n = t.size();
  std::vector<std::pair<AlgebraicNumber, std::vector<Int>>> group;
  group.emplace_back(AlgebraicNumber::from_rat(t.field, Rat(1)),
                     std::vector<Int>(n));
  std::vector<std::pair<AlgebraicNumber, std::vector<Int>>> gens;
  for (long k = 0; k < lat.basis.rows; ++k)
    if (lat.torsion_orders[k] > 1)
      gens.emplace_back(tuple_power(t, lat.basis.row(k)), lat.basis.row(k));
  for (size_t i = 0; i < group.size(); ++i) {
    if (group.size() > 512) throw std::logic_error("torsion group too large");
    for (const auto& [gv, ge] : gens) {
      AlgebraicNumber v = group[i].first * gv;
      bool seen = false;
      for (const auto& [hv, he] : group)
        if (hv == v) {
          seen = true;
          break;
        }
      if (seen) continue;
      std::vector<Int> w = group[i].second;
      for (long j = 0; j < n; ++j) w[j] += ge[j];
      group.emplace_back(v, std::move(w));
    }
  }
  return group;
}

}  // namespace

WeakCommResult is_weakly_commensurable(const MultiplicativeTuple& e1,
                                       const MultiplicativeTuple& e2,
                                       WeakCommMode mode,
                                       const SearchBudget& budget) {
  MultiplicativeTuple t1 = e1, t2 = e2;
  if (!t1.field->same_as(*t2.field)) {
    CompositumMap cm = compositum(t1.field, t2.field);
    std::vector<AlgebraicNumber> v1, v2;
    for (const AlgebraicNumber& x : t1.values)
      v1.push_back(transport(x, cm.field, cm.image_gen1));
    for (const AlgebraicNumber& x : t2.values)
      v2.push_back(transport(x, cm.field, cm.image_gen2));
    t1 = MultiplicativeTuple(cm.field, std::move(v1));
    t2 = MultiplicativeTuple(cm.field, std::move(v2));
  }
  long n1 = t1.size(), n2 = t2.size();

  std::vector<AlgebraicNumber> joint_vals = t1.values;
  joint_vals.insert(joint_vals.end(), t2.values.begin(), t2.values.end());
  MultiplicativeTuple joint(t1.field, std::move(joint_vals));

  RelationLattice R = relation_lattice(joint, budget);
  RelationLattice R1 = relation_lattice(t1, budget);
  RelationLattice R2 = relation_lattice(t2, budget);

  ZMat direct(R1.basis.rows + R2.basis.rows, n1 + n2);
  for (long k = 0; k < R1.basis.rows; ++k)
    for (long j = 0; j < n1; ++j) direct(k, j) = R1.basis(k, j);
  for (long k = 0; k < R2.basis.rows; ++k)
    for (long j = 0; j < n2; ++j)
      direct(R1.basis.rows + k, n1 + j) = R2.basis(k, j);

  WeakCommResult res;
  bool saw_unverified_row = false;
  for (long k = 0; k < R.basis.rows; ++k) {
    std::vector<Int> row = R.basis.row(k);
    if (lattice_contains(direct, row)) continue;
    // scale by the torsion order so both sides agree exactly
    Int tord(R.torsion_orders[k]);
    std::vector<Int> m(n1), nn(n2);
    for (long j = 0; j < n1; ++j) m[j] = row[j] * tord;
    for (long j = 0; j < n2; ++j) nn[j] = -row[n1 + j] * tord;
    AlgebraicNumber lhs = tuple_power(t1, m);
    AlgebraicNumber rhs = tuple_power(t2, nn);
    if (!(lhs == rhs)) throw std::logic_error("relation row failed to balance");
    bool usable = !lhs.is_one();
    if (mode == WeakCommMode::neat && root_of_unity_order(lhs)) usable = false;
    if (!usable) {
      saw_unverified_row = true;
      continue;
    }
    res.yes = true;
    res.witness = WeakCommWitness{std::move(m), std::move(nn), lhs};
    return res;
  }

  if (mode == WeakCommMode::strict) {
    auto g1 = torsion_group(t1, R1);
    auto g2 = torsion_group(t2, R2);
    for (const auto& [v1, w1] : g1) {
      if (v1.is_one()) continue;
      for (const auto& [v2, w2] : g2)
        if (v1 == v2) {
          res.yes = true;
          res.witness = WeakCommWitness{w1, w2, v1};
          return res;
        }
    }
  }

  bool certified = R.completeness == Completeness::certified &&
                   R1.completeness == Completeness::certified &&
                   R2.completeness == Completeness::certified &&
                   !saw_unverified_row;
  res.completeness =
      certified ? Completeness::certified : Completeness::bound_relative;
  if (!certified) res.bound = budget.exponent_bound;
  return res;
}

LogRatioResult log_ratio_rational(const AlgebraicNumber& a,
                                  const AlgebraicNumber& b,
                                  const SearchBudget& budget) {
  AlgebraicNumber x = a, y = b;
  if (!x.field->same_as(*y.field)) {
    CompositumMap cm = compositum(x.field, y.field);
    x = transport(x, cm.field, cm.image_gen1);
    y = transport(y, cm.field, cm.image_gen2);
  }
  if (x.is_zero() || y.is_zero()) throw input_error("log ratio of zero");
  // designated place: the embedding onto the largest real root, so dominant
  // eigenvalues land above one; complex fields fall back to the first place
  long reals = x.field->num_real_embeddings();
  long place = reals > 0 ? reals - 1 : 0;

  auto abs_gt_one = [&](const AlgebraicNumber& v) {
    if (v.is_rational()) {
      Rat q = v.as_rational();
      return q * q > 1;
    }
    for (long prec = budget.precision_bits; prec <= 8 * budget.precision_bits;
         prec *= 2) {
      Interval av = embed(v, place, prec).abs();
      Interval one = Interval::from_long(1, prec);
      if (iv_sub(av, one).is_positive()) return true;
      if (!iv_sub(av, one).is_negative() && !iv_sub(av, one).is_positive())
        continue;
      return false;
    }
    throw precision_exhausted("cannot separate |value| from 1");
  };
  if (!abs_gt_one(x) || !abs_gt_one(y))
    throw input_error(
        "log ratio needs |a| > 1 and |b| > 1 at the designated place");

  MultiplicativeTuple pair(x.field, {x, y});
  RelationLattice R = relation_lattice(pair, budget);
  LogRatioResult out;
  out.completeness = R.completeness;
  out.bound = R.bound;
  for (long k = 0; k < R.basis.rows; ++k) {
    Int u = R.basis(k, 0), v = R.basis(k, 1);
    if (u == 0 || v == 0) continue;  // would force a torsion value, impossible
    if (u < 0) {
      u = -u;
    } else {
      v = -v;
    }
    Rat ratio(v, u);
    ratio.canonicalize();
    out.ratio = ratio;
    return out;
  }
  return out;
}

}  // namespace wct
