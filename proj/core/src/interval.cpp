#include <wct/interval.hpp>

#include <algorithm>
#include <sstream>

namespace wct {

Interval Interval::from_rat(const Rat& q, long prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_long(long v, long prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Rat& lo, const Rat& hi, long prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

bool Interval::contains(const Rat& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

double Interval::mid() const {
  return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2;
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

bool Interval::narrower_than(long bits) const {
  mpfr_t w, eps;
  mpfr_init2(w, prec_);
  mpfr_init2(eps, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_set_ui_2exp(eps, 1, -bits, MPFR_RNDN);
  bool ok = mpfr_cmp(w, eps) <= 0;
  mpfr_clear(w);
  mpfr_clear(eps);
  return ok;
}

std::string Interval::str() const {
  char* s1 = nullptr;
  char* s2 = nullptr;
  mpfr_asprintf(&s1, "%.20Rg", lo_);
  mpfr_asprintf(&s2, "%.20Rg", hi_);
  std::string out = std::string("[") + s1 + ", " + s2 + "]";
  mpfr_free_str(s1);
  mpfr_free_str(s2);
  return out;
}

namespace {
long pmax(const Interval& a, const Interval& b) {
  return std::max(a.prec(), b.prec());
}
}  // namespace

Interval iv_neg(const Interval& a) {
  Interval r(a.prec());
  mpfr_neg(r.lo(), a.hi(), MPFR_RNDD);
  mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
  return r;
}

Interval iv_add(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_add(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval iv_sub(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_sub(r.lo(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

Interval iv_mul(const Interval& a, const Interval& b) {
  long p = pmax(a, b);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  bool first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_srcptr x = i ? a.hi() : a.lo();
      mpfr_srcptr y = j ? b.hi() : b.lo();
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo()) < 0) mpfr_set(r.lo(), t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi()) > 0) mpfr_set(r.hi(), t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval iv_div(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw precision_error("interval division by zero-straddling interval");
  long p = pmax(a, b);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  bool first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_srcptr x = i ? a.hi() : a.lo();
      mpfr_srcptr y = j ? b.hi() : b.lo();
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo()) < 0) mpfr_set(r.lo(), t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi()) > 0) mpfr_set(r.hi(), t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval iv_abs(const Interval& a) {
  Interval r(a.prec());
  if (mpfr_sgn(a.lo()) >= 0) return a;
  if (mpfr_sgn(a.hi()) <= 0) return iv_neg(a);
  // straddles zero
  mpfr_set_zero(r.lo(), 1);
  mpfr_t t;
  mpfr_init2(t, a.prec());
  mpfr_neg(t, a.lo(), MPFR_RNDU);
  if (mpfr_cmp(t, a.hi()) > 0)
    mpfr_set(r.hi(), t, MPFR_RNDU);
  else
    mpfr_set(r.hi(), a.hi(), MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval iv_sqr(const Interval& a) {
  Interval ab = iv_abs(a);
  Interval r(a.prec());
  mpfr_mul(r.lo(), ab.lo(), ab.lo(), MPFR_RNDD);
  mpfr_mul(r.hi(), ab.hi(), ab.hi(), MPFR_RNDU);
  return r;
}

Interval iv_sqrt(const Interval& a) {
  Interval r(a.prec());
  if (mpfr_sgn(a.hi()) < 0) throw precision_error("sqrt of negative interval");
  if (mpfr_sgn(a.lo()) <= 0)
    mpfr_set_zero(r.lo(), 1);
  else
    mpfr_sqrt(r.lo(), a.lo(), MPFR_RNDD);
  mpfr_sqrt(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

Interval iv_log(const Interval& a) {
  if (mpfr_sgn(a.lo()) <= 0) throw precision_error("log of non-positive interval");
  Interval r(a.prec());
  mpfr_log(r.lo(), a.lo(), MPFR_RNDD);
  mpfr_log(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

Interval iv_scale(const Interval& a, const Rat& c) {
  return iv_mul(a, Interval::from_rat(c, a.prec()));
}

Interval iv_pow(const Interval& a, long e) {
  if (e == 0) return Interval::from_long(1, a.prec());
  bool invert = e < 0;
  unsigned long k = invert ? -e : e;
  Interval base = a;
  Interval r = Interval::from_long(1, a.prec());
  while (k) {
    if (k & 1) r = iv_mul(r, base);
    base = iv_sqr(base);
    k >>= 1;
  }
  if (invert) r = iv_div(Interval::from_long(1, a.prec()), r);
  return r;
}

Interval iv_hull2(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_min(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

bool iv_disjoint(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.hi(), b.lo()) < 0 || mpfr_cmp(b.hi(), a.lo()) < 0;
}

ComplexBox cb_add(const ComplexBox& a, const ComplexBox& b) {
  return {iv_add(a.re, b.re), iv_add(a.im, b.im)};
}

ComplexBox cb_sub(const ComplexBox& a, const ComplexBox& b) {
  return {iv_sub(a.re, b.re), iv_sub(a.im, b.im)};
}

ComplexBox cb_mul(const ComplexBox& a, const ComplexBox& b) {
  return {iv_sub(iv_mul(a.re, b.re), iv_mul(a.im, b.im)),
          iv_add(iv_mul(a.re, b.im), iv_mul(a.im, b.re))};
}

Interval cb_abs(const ComplexBox& a) {
  return iv_sqrt(iv_add(iv_sqr(a.re), iv_sqr(a.im)));
}

bool cb_disjoint(const ComplexBox& a, const ComplexBox& b) {
  return iv_disjoint(a.re, b.re) || iv_disjoint(a.im, b.im);
}

}  // namespace wct
