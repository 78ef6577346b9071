#include <wct/numfield.hpp>

#include <algorithm>
#include <utility>

namespace wct {

namespace {

// point interval [v, v]
Interval iv_point(mpfr_srcptr v, long prec) {
  Interval r(prec);
  mpfr_set(r.lo(), v, MPFR_RNDD);
  mpfr_set(r.hi(), v, MPFR_RNDU);
  return r;
}

// symmetric interval [-hi(rad), hi(rad)]
Interval iv_sym(const Interval& rad) {
  Interval r(rad.prec());
  mpfr_set(r.hi(), rad.hi(), MPFR_RNDU);
  mpfr_neg(r.lo(), rad.hi(), MPFR_RNDD);
  return r;
}

// width(v) <= 2^-bits * lower bound of |true value|, so the enclosure is
// relatively narrow no matter where the true value sits inside it
bool rel_narrow(const Interval& v, const Interval& mag, long bits) {
  if (!(mpfr_sgn(mag.lo()) > 0)) return false;
  mpfr_t w, t;
  mpfr_init2(w, v.prec() + 8);
  mpfr_init2(t, v.prec() + 8);
  mpfr_sub(w, v.hi(), v.lo(), MPFR_RNDU);
  mpfr_mul_2si(t, mag.lo(), -bits, MPFR_RNDD);
  bool ok = mpfr_cmp(w, t) <= 0;
  mpfr_clear(w);
  mpfr_clear(t);
  return ok;
}

Interval horner_real(const std::vector<Rat>& coeffs, const Interval& t, long prec) {
  Interval v = Interval::from_rat(coeffs.back(), prec);
  for (long k = static_cast<long>(coeffs.size()) - 2; k >= 0; --k)
    v = iv_add(iv_mul(v, t), Interval::from_rat(coeffs[k], prec));
  return v;
}

ComplexBox horner_complex(const std::vector<Rat>& coeffs, const ComplexBox& t, long prec) {
  ComplexBox v(Interval::from_rat(coeffs.back(), prec), Interval(prec));
  for (long k = static_cast<long>(coeffs.size()) - 2; k >= 0; --k) {
    v = cb_mul(v, t);
    v.re = iv_add(v.re, Interval::from_rat(coeffs[k], prec));
  }
  return v;
}

// plain complex point arithmetic used only to produce candidate roots; all
// guarantees come from the interval certification afterwards
struct MC {
  mpfr_t re, im;
  explicit MC(long prec) {
    mpfr_init2(re, prec);
    mpfr_init2(im, prec);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
  }
  MC(const MC& o) : MC(mpfr_get_prec(o.re)) {
    mpfr_set(re, o.re, MPFR_RNDN);
    mpfr_set(im, o.im, MPFR_RNDN);
  }
  MC& operator=(const MC& o) {
    mpfr_set(re, o.re, MPFR_RNDN);
    mpfr_set(im, o.im, MPFR_RNDN);
    return *this;
  }
  ~MC() {
    mpfr_clear(re);
    mpfr_clear(im);
  }
};

void mc_mul(MC& out, const MC& a, const MC& b) {
  mpfr_t t1, t2;
  long prec = mpfr_get_prec(out.re);
  mpfr_init2(t1, prec);
  mpfr_init2(t2, prec);
  mpfr_fmms(t1, a.re, b.re, a.im, b.im, MPFR_RNDN);  // ac - bd
  mpfr_fmma(t2, a.re, b.im, a.im, b.re, MPFR_RNDN);  // ad + bc
  mpfr_set(out.re, t1, MPFR_RNDN);
  mpfr_set(out.im, t2, MPFR_RNDN);
  mpfr_clear(t1);
  mpfr_clear(t2);
}

void mc_sub(MC& out, const MC& a, const MC& b) {
  mpfr_sub(out.re, a.re, b.re, MPFR_RNDN);
  mpfr_sub(out.im, a.im, b.im, MPFR_RNDN);
}

void mc_div(MC& out, const MC& a, const MC& b) {
  long prec = mpfr_get_prec(out.re);
  mpfr_t d, n1, n2;
  mpfr_init2(d, prec);
  mpfr_init2(n1, prec);
  mpfr_init2(n2, prec);
  mpfr_fmma(d, b.re, b.re, b.im, b.im, MPFR_RNDN);
  mpfr_fmma(n1, a.re, b.re, a.im, b.im, MPFR_RNDN);
  mpfr_fmms(n2, a.im, b.re, a.re, b.im, MPFR_RNDN);
  mpfr_div(out.re, n1, d, MPFR_RNDN);
  mpfr_div(out.im, n2, d, MPFR_RNDN);
  mpfr_clear(d);
  mpfr_clear(n1);
  mpfr_clear(n2);
}

// simultaneous-iteration candidates for the roots of monic p, at prec bits
std::vector<MC> candidate_roots(const ZPoly& p, long prec) {
  long n = degree(p);
  std::vector<MC> coef;
  coef.reserve(n + 1);
  for (long k = 0; k <= n; ++k) {
    MC c(prec);
    mpfr_set_z(c.re, p[k].get_mpz_t(), MPFR_RNDN);
    coef.push_back(c);
  }
  // root bound: 1 + max |a_k| (monic)
  mpfr_t bound, t;
  mpfr_init2(bound, prec);
  mpfr_init2(t, prec);
  mpfr_set_ui(bound, 1, MPFR_RNDN);
  for (long k = 0; k < n; ++k) {
    mpfr_abs(t, coef[k].re, MPFR_RNDU);
    if (mpfr_cmp(t, bound) > 0) mpfr_set(bound, t, MPFR_RNDU);
  }
  mpfr_add_ui(bound, bound, 1, MPFR_RNDU);

  std::vector<MC> z(n, MC(prec));
  {
    MC seed(prec), cur(prec);
    mpfr_set_d(seed.re, 0.4, MPFR_RNDN);
    mpfr_set_d(seed.im, 0.9, MPFR_RNDN);
    mpfr_set_ui(cur.re, 1, MPFR_RNDN);
    for (long i = 0; i < n; ++i) {
      mc_mul(cur, cur, seed);
      mpfr_mul(z[i].re, cur.re, bound, MPFR_RNDN);
      mpfr_mul(z[i].im, cur.im, bound, MPFR_RNDN);
    }
  }

  auto eval = [&](const MC& x, MC& out) {
    out = coef[n];
    for (long k = n - 1; k >= 0; --k) {
      mc_mul(out, out, x);
      mpfr_add(out.re, out.re, coef[k].re, MPFR_RNDN);
    }
  };

  mpfr_t step, tol;
  mpfr_init2(step, prec);
  mpfr_init2(tol, prec);
  mpfr_set_ui(tol, 1, MPFR_RNDN);
  mpfr_mul_2si(tol, tol, -(prec - 8), MPFR_RNDN);
  MC num(prec), den(prec), diff(prec), delta(prec), one(prec);
  mpfr_set_ui(one.re, 1, MPFR_RNDN);
  for (long it = 0; it < 400; ++it) {
    mpfr_set_zero(step, 1);
    for (long i = 0; i < n; ++i) {
      eval(z[i], num);
      den = one;
      for (long j = 0; j < n; ++j) {
        if (j == i) continue;
        mc_sub(diff, z[i], z[j]);
        mc_mul(den, den, diff);
      }
      mc_div(delta, num, den);
      mpfr_sub(z[i].re, z[i].re, delta.re, MPFR_RNDN);
      mpfr_sub(z[i].im, z[i].im, delta.im, MPFR_RNDN);
      mpfr_hypot(t, delta.re, delta.im, MPFR_RNDU);
      if (mpfr_cmp(t, step) > 0) mpfr_set(step, t, MPFR_RNDU);
    }
    if (mpfr_cmp(step, tol) < 0) break;
  }
  mpfr_clear(bound);
  mpfr_clear(t);
  mpfr_clear(step);
  mpfr_clear(tol);
  return z;
}

}  // namespace

struct EmbeddingCache {
  bool real_done = false;
  std::vector<std::pair<Rat, Rat>> real_iso;  // sorted isolating intervals
  long box_prec = 0;
  std::vector<ComplexBox> pair_boxes;  // one per conjugate pair, im > 0, sorted

  static EmbeddingCache& get(const NumberField& f) {
    if (!f.emb_) f.emb_ = std::make_shared<EmbeddingCache>();
    return *f.emb_;
  }

  void ensure_real(const NumberField& f) {
    if (real_done) return;
    real_iso = isolate_real_roots(to_qpoly(f.min_poly()));
    real_done = true;
  }

  // certified boxes for all non-real roots (one representative per pair);
  // every disc D(z_i, n |p(z_i)| / prod_{j != i} |z_i - z_j|) contains a root
  // of monic p, so disjoint discs isolate the roots one-to-one
  void ensure_complex(const NumberField& f, long want_prec) {
    ensure_real(f);
    long n = f.degree();
    long r1 = static_cast<long>(real_iso.size());
    long r2 = (n - r1) / 2;
    if (r2 == 0) {
      box_prec = want_prec;
      return;
    }
    if (box_prec >= want_prec && !pair_boxes.empty()) return;
    const ZPoly& mp = f.min_poly();
    std::vector<Rat> qc;
    for (const Int& c : mp) qc.emplace_back(c);
    for (long W = std::max<long>(want_prec, 128);; W *= 2) {
      if (W > (1L << 22)) throw precision_error("root certification stalled");
      std::vector<MC> z = candidate_roots(mp, W);
      std::vector<ComplexBox> discs;
      bool ok = true;
      for (long i = 0; i < n && ok; ++i) {
        ComplexBox zi(iv_point(z[i].re, W), iv_point(z[i].im, W));
        ComplexBox val = horner_complex(qc, zi, W);
        Interval numer = iv_scale(cb_abs(val), Rat(n));
        Interval denom = Interval::from_long(1, W);
        for (long j = 0; j < n; ++j) {
          if (j == i) continue;
          ComplexBox zj(iv_point(z[j].re, W), iv_point(z[j].im, W));
          denom = iv_mul(denom, cb_abs(cb_sub(zi, zj)));
        }
        if (!denom.is_positive()) {
          ok = false;
          break;
        }
        Interval rad = iv_sym(iv_div(numer, denom));
        discs.emplace_back(iv_add(zi.re, rad), iv_add(zi.im, rad));
      }
      if (ok)
        for (long i = 0; i < n && ok; ++i)
          for (long j = i + 1; j < n; ++j)
            if (!cb_disjoint(discs[i], discs[j])) {
              ok = false;
              break;
            }
      if (ok) {
        std::vector<ComplexBox> pos;
        long touching = 0;
        for (const ComplexBox& b : discs) {
          if (b.im.is_positive())
            pos.push_back(b);
          else if (!b.im.is_negative())
            ++touching;
        }
        // the discs touching the axis must be exactly the real roots
        if (touching == r1 && static_cast<long>(pos.size()) == r2) {
          std::sort(pos.begin(), pos.end(), [](const ComplexBox& a, const ComplexBox& b) {
            double ra = a.re.mid(), rb = b.re.mid();
            if (ra != rb) return ra < rb;
            return a.im.mid() < b.im.mid();
          });
          pair_boxes = std::move(pos);
          box_prec = W;
          return;
        }
      }
    }
  }
};

long NumberField::num_real_embeddings() const {
  EmbeddingCache& c = EmbeddingCache::get(*this);
  c.ensure_real(*this);
  return static_cast<long>(c.real_iso.size());
}

long NumberField::num_complex_pairs() const {
  return (degree() - num_real_embeddings()) / 2;
}

Interval ArchValue::abs() const {
  if (real) return iv_abs(re);
  return cb_abs(ComplexBox(re, im));
}

ArchValue embed(const AlgebraicNumber& x, long index, long prec_bits) {
  const NumberField& f = *x.field;
  EmbeddingCache& cache = EmbeddingCache::get(f);
  cache.ensure_real(f);
  long r1 = static_cast<long>(cache.real_iso.size());
  long r2 = (f.degree() - r1) / 2;
  if (index < 0 || index >= r1 + r2)
    throw input_error("embedding index out of range");
  bool is_real_place = index < r1;

  ArchValue out;
  out.real = is_real_place;
  if (x.is_rational()) {
    long p = std::max<long>(prec_bits + 16, 64);
    out.re = Interval::from_rat(x.coords[0], p);
    out.im = Interval(p);
    return out;
  }

  QPoly mp = to_qpoly(f.min_poly());
  for (long attempt = 0; attempt < 10; ++attempt) {
    long p = std::max<long>(prec_bits, 32) + 64 * (attempt + 1);
    if (is_real_place) {
      auto& [lo, hi] = cache.real_iso[index];
      Rat target = pow_rat(Rat(1, 2), p + 16);
      refine_root(mp, lo, hi, target);
      Interval root = Interval::hull(lo, hi, p + 32);
      Interval v = horner_real(x.coords, root, p + 32);
      if (rel_narrow(v, iv_abs(v), prec_bits)) {
        out.re = v;
        out.im = Interval(v.prec());
        return out;
      }
    } else {
      cache.ensure_complex(f, 2 * p + 64);
      const ComplexBox& root = cache.pair_boxes[index - r1];
      ComplexBox v = horner_complex(x.coords, root, 2 * p + 64);
      Interval mag = cb_abs(v);
      if (rel_narrow(v.re, mag, prec_bits) && rel_narrow(v.im, mag, prec_bits)) {
        out.re = v.re;
        out.im = v.im;
        return out;
      }
      cache.box_prec = 0;  // force recomputation at the next, higher precision
    }
  }
  throw precision_error("embedding did not reach requested relative width");
}

}  // namespace wct
