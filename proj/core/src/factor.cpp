#include <wct/poly.hpp>
#include <wct/zmat.hpp>

#include <algorithm>

// factorization in Z[x]: Berlekamp mod a small prime, linear Hensel lifting,
// subset recombination against the Mignotte bound

namespace wct {

namespace {

ZPoly zp_mod(const ZPoly& p, const Int& m) {
  ZPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    mpz_fdiv_r(r[i].get_mpz_t(), p[i].get_mpz_t(), m.get_mpz_t());
  normalize(r);
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
  return zp_mod(z_mul(a, b), m);
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw input_error("non-invertible element in modular arithmetic");
  return r;
}

std::pair<ZPoly, ZPoly> zp_divrem(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly rem = zp_mod(a, m);
  long db = degree(b);
  Int binv = inv_mod(b.back(), m);
  ZPoly quo;
  if (degree(rem) >= db) quo.assign(rem.size() - b.size() + 1, Int(0));
  while (degree(rem) >= db) {
    long k = degree(rem) - db;
    Int f = rem.back() * binv % m;
    quo[k] = f;
    for (long i = 0; i <= db; ++i) {
      rem[k + i] = (rem[k + i] - f * b[i]) % m;
      if (rem[k + i] < 0) rem[k + i] += m;
    }
    normalize(rem);
  }
  normalize(quo);
  return {quo, rem};
}

ZPoly zp_monic(const ZPoly& p, const Int& m) {
  if (p.empty()) return p;
  Int inv = inv_mod(p.back(), m);
  ZPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] * inv % m;
  normalize(r);
  return r;
}

ZPoly zp_gcd(ZPoly a, ZPoly b, const Int& m) {
  a = zp_mod(a, m);
  b = zp_mod(b, m);
  while (!b.empty()) {
    ZPoly r = zp_divrem(a, b, m).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : zp_monic(a, m);
}

ZPoly zp_powmod(ZPoly base, Int e, const ZPoly& mod, const Int& m) {
  ZPoly r{Int(1)};
  base = zp_divrem(base, mod, m).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = zp_divrem(zp_mul(r, base, m), mod, m).second;
    base = zp_divrem(zp_mul(base, base, m), mod, m).second;
    e >>= 1;
  }
  return r;
}

struct ExtGcd {
  ZPoly g, s, t;  // s a + t b = g, g monic
};

ExtGcd zp_extgcd(ZPoly a, ZPoly b, const Int& m) {
  ZPoly s0{Int(1)}, s1, t0, t1{Int(1)};
  a = zp_mod(a, m);
  b = zp_mod(b, m);
  while (!b.empty()) {
    auto [q, r] = zp_divrem(a, b, m);
    a = std::move(b);
    b = std::move(r);
    ZPoly s2 = zp_mod(z_sub(s0, z_mul(q, s1)), m);
    ZPoly t2 = zp_mod(z_sub(t0, z_mul(q, t1)), m);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Int inv = inv_mod(a.back(), m);
  for (ZPoly* p : {&a, &s0, &t0}) {
    for (Int& c : *p) c = c * inv % m;
    normalize(*p);
  }
  return {a, s0, t0};
}

// Berlekamp factorization of a squarefree monic polynomial mod prime p,
// deterministic splitting by exhausting the small field
std::vector<ZPoly> berlekamp(const ZPoly& f, const Int& p) {
  long n = degree(f);
  if (n <= 1) return {f};
  ZMat q(n, n);
  ZPoly xp = zp_powmod(ZPoly{Int(0), Int(1)}, p, f, p);
  ZPoly cur{Int(1)};
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j <= degree(cur); ++j) q(i, j) = cur[j];
    cur = zp_divrem(zp_mul(cur, xp, p), f, p).second;
  }
  for (long i = 0; i < n; ++i) q(i, i) = (q(i, i) - 1 + p) % p;

  // nullspace of (Q - I)^T over F_p
  ZMat mt = q.transposed();
  std::vector<long> pivot_col;
  long r = 0;
  for (long col = 0; col < n && r < n; ++col) {
    long piv = -1;
    for (long i = r; i < n; ++i)
      if (mt(i, col) % p != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (long c = 0; c < n; ++c) std::swap(mt(r, c), mt(piv, c));
    Int inv = inv_mod(mt(r, col), p);
    for (long c = 0; c < n; ++c) mt(r, c) = mt(r, c) * inv % p;
    for (long i = 0; i < n; ++i) {
      if (i == r || mt(i, col) % p == 0) continue;
      Int fmul = mt(i, col);
      for (long c = 0; c < n; ++c) {
        mt(i, c) = (mt(i, c) - fmul * mt(r, c)) % p;
        if (mt(i, c) < 0) mt(i, c) += p;
      }
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<ZPoly> basis;
  std::vector<bool> is_piv(n, false);
  for (long c : pivot_col) is_piv[c] = true;
  for (long free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    ZPoly v(n, Int(0));
    v[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = (p - mt(static_cast<long>(i), free)) % p;
    normalize(v);
    basis.push_back(v);
  }
  size_t nfactors = basis.size();
  std::vector<ZPoly> factors{f};
  for (const ZPoly& v : basis) {
    if (factors.size() >= nfactors) break;
    std::vector<ZPoly> next;
    for (const ZPoly& g : factors) {
      ZPoly rest = g;
      for (Int c(0); c < p && degree(rest) > 0; ++c) {
        ZPoly d = zp_gcd(rest, zp_mod(z_sub(v, ZPoly{c}), p), p);
        if (degree(d) > 0 && degree(d) < degree(rest)) {
          next.push_back(zp_monic(d, p));
          rest = zp_divrem(rest, d, p).first;
        }
      }
      if (degree(rest) > 0) next.push_back(zp_monic(rest, p));
    }
    factors = std::move(next);
  }
  return factors;
}

// linear Hensel step for monic g, h: f = g h (mod pk) lifts to mod pk*p,
// using a g + b h = 1 (mod p)
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, const ZPoly& a,
                 const ZPoly& b, const Int& pk, const Int& p) {
  Int next = pk * p;
  ZPoly e = zp_mod(z_sub(f, z_mul(g, h)), next);
  ZPoly c(e.size());
  for (size_t i = 0; i < e.size(); ++i) c[i] = e[i] / pk;
  c = zp_mod(c, p);
  auto [q, dg] = zp_divrem(zp_mul(b, c, p), g, p);
  ZPoly dh = zp_mod(z_add(z_mul(a, c), z_mul(q, h)), p);
  auto apply = [&](ZPoly& base, const ZPoly& d) {
    ZPoly t = d;
    for (Int& x : t) x *= pk;
    base = zp_mod(z_add(base, t), next);
  };
  apply(g, dg);
  apply(h, dh);
}

// lift f = prod(monic gi) (mod p) to monic factors mod pK >= target; f monic
std::vector<ZPoly> hensel_lift_list(const ZPoly& f, std::vector<ZPoly> gs,
                                    const Int& p, const Int& pK) {
  if (gs.size() == 1) return {zp_mod(f, pK)};
  size_t half = gs.size() / 2;
  ZPoly g{Int(1)}, h{Int(1)};
  for (size_t i = 0; i < half; ++i) g = zp_mul(g, gs[i], p);
  for (size_t i = half; i < gs.size(); ++i) h = zp_mul(h, gs[i], p);
  ExtGcd eg = zp_extgcd(g, h, p);
  if (degree(eg.g) != 0) throw input_error("hensel: factors not coprime");
  Int pk = p;
  while (pk < pK) {
    hensel_step(zp_mod(f, pk * p), g, h, eg.s, eg.t, pk, p);
    pk *= p;
  }
  auto lf = hensel_lift_list(g, {gs.begin(), gs.begin() + static_cast<long>(half)}, p, pK);
  auto rf = hensel_lift_list(h, {gs.begin() + static_cast<long>(half), gs.end()}, p, pK);
  lf.insert(lf.end(), rf.begin(), rf.end());
  return lf;
}

Int mignotte_bound(const ZPoly& f) {
  // sqrt(n+1) * 2^n * height(f) * |lc|
  Int h(0);
  for (const Int& c : f)
    if (abs(c) > h) h = abs(c);
  Int s = sqrt(Int(static_cast<long>(f.size()))) + 1;
  Int b = s * h * abs(f.back());
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), f.size());
  return b;
}

ZPoly symmetric_mod(const ZPoly& p, const Int& m) {
  ZPoly r = zp_mod(p, m);
  Int half = m / 2;
  for (Int& c : r)
    if (c > half) c -= m;
  normalize(r);
  return r;
}

ZPoly z_primitive_pos(const ZPoly& p) {
  ZPoly r = p;
  normalize(r);
  if (r.empty()) return r;
  Int g(0);
  for (const Int& c : r) g = gcd(g, c);
  if (r.back() < 0) g = -g;
  for (Int& c : r) c /= g;
  return r;
}

std::vector<ZPoly> factor_squarefree(const ZPoly& f);

// f monic squarefree
std::vector<ZPoly> factor_squarefree_monic(const ZPoly& f) {
  std::vector<ZPoly> out;
  long n = degree(f);
  if (n == 1) return {f};

  Int best_p(0);
  std::vector<ZPoly> best_factors;
  int tried = 0;
  for (long pr : small_primes()) {
    Int p(pr);
    ZPoly fp = zp_mod(f, p);
    if (degree(fp) != n) continue;  // cannot happen for monic f, kept for safety
    if (degree(zp_gcd(fp, zp_mod(z_derivative(fp), p), p)) != 0) continue;
    auto factors = berlekamp(fp, p);
    if (best_p == 0 || factors.size() < best_factors.size()) {
      best_p = p;
      best_factors = factors;
    }
    if (++tried >= 4 || best_factors.size() == 1) break;
  }
  if (best_p == 0) throw input_error("no usable prime for factorization");
  if (best_factors.size() == 1) return {f};

  Int target = 2 * mignotte_bound(f) + 1;
  Int pK = best_p;
  while (pK < target) pK *= best_p;
  std::vector<ZPoly> lifted = hensel_lift_list(zp_mod(f, pK), best_factors, best_p, pK);

  std::vector<long> live(lifted.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = static_cast<long>(i);
  ZPoly rest = f;
  size_t take = 1;
  while (2 * take <= live.size()) {
    bool found = false;
    std::vector<size_t> idx(take);
    for (size_t i = 0; i < take; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand{Int(1)};
      for (size_t i = 0; i < take; ++i) cand = zp_mul(cand, lifted[live[idx[i]]], pK);
      cand = symmetric_mod(cand, pK);
      auto quo = z_divide_exact(rest, cand);
      if (quo && degree(cand) > 0) {
        out.push_back(cand);
        rest = *quo;
        std::vector<long> keep;
        std::vector<bool> used(live.size(), false);
        for (size_t i = 0; i < take; ++i) used[idx[i]] = true;
        for (size_t i = 0; i < live.size(); ++i)
          if (!used[i]) keep.push_back(live[i]);
        live = std::move(keep);
        found = true;
        break;
      }
      long i = static_cast<long>(take) - 1;
      while (i >= 0 && idx[i] == live.size() - take + static_cast<size_t>(i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (size_t j = static_cast<size_t>(i) + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++take;
  }
  if (degree(rest) > 0) out.push_back(rest);
  return out;
}

// f primitive squarefree with positive leading coefficient
std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  long n = degree(f);
  if (n <= 0) return {};
  if (n == 1) return {f};
  const Int& l = f.back();
  if (l == 1) return factor_squarefree_monic(f);
  // monicize: F(x) = l^(n-1) f(x/l), factor, map back by x -> l x
  ZPoly big(f.size());
  Int scale(1);
  for (long i = n; i >= 0; --i) {
    big[i] = f[i] * scale;
    if (i > 0) scale *= l;
  }
  auto monic_factors = factor_squarefree_monic(big);
  std::vector<ZPoly> out;
  for (const ZPoly& g : monic_factors) {
    ZPoly back(g.size());
    Int s(1);
    for (size_t i = 0; i < g.size(); ++i) {
      back[i] = g[i] * s;
      s *= l;
    }
    out.push_back(z_primitive_pos(back));
  }
  return out;
}

}  // namespace

QFactorization factor_qpoly(const QPoly& p) {
  QFactorization out;
  QPoly q = p;
  normalize(q);
  if (q.empty()) {
    out.content = Rat(0);
    return out;
  }
  ZPoly z = primitive_part(q);
  if (z.back() < 0)
    for (Int& c : z) c = -c;
  out.content = q.back() / Rat(z.back());
  if (degree(z) == 0) return out;

  // squarefree (Yun) decomposition, then factor each squarefree piece
  QPoly f = to_qpoly(z);
  QPoly g = q_gcd(f, q_derivative(f));
  if (degree(g) == 0) {
    for (auto& irr : factor_squarefree(z)) out.factors.emplace_back(irr, 1);
  } else {
    long mult = 1;
    QPoly c = q_divrem(f, g).first;
    QPoly d = q_sub(q_divrem(q_derivative(f), g).first, q_derivative(c));
    while (degree(c) > 0) {
      QPoly a = q_gcd(c, d);
      if (degree(a) > 0)
        for (auto& irr : factor_squarefree(primitive_part(a)))
          out.factors.emplace_back(irr, mult);
      c = q_divrem(c, a).first;
      d = q_sub(q_divrem(d, a).first, q_derivative(c));
      ++mult;
    }
  }
  // reconcile the scalar: content * prod(factors^mult) must reproduce p
  QPoly check{out.content};
  for (auto& [fac, m] : out.factors)
    for (long i = 0; i < m; ++i) check = q_mul(check, to_qpoly(fac));
  if (check != q) {
    QPoly ratio = q_divrem(q, check).first;
    if (degree(ratio) != 0) throw input_error("factorization internal mismatch");
    out.content *= ratio[0];
  }
  return out;
}

bool is_irreducible(const ZPoly& p) {
  if (degree(p) <= 0) return false;
  if (degree(p) == 1) return true;
  auto f = factor_qpoly(to_qpoly(p));
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace wct
