#pragma once

#include <wct/rat.hpp>

#include <mpfr.h>

#include <string>

namespace wct {

struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// closed interval with dyadic endpoints, outward rounded at `prec` bits
class Interval {
 public:
  Interval() : Interval(64) {}
  explicit Interval(long prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Interval(const Interval& o) : Interval(o.prec_) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  Interval& operator=(Interval o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval from_rat(const Rat& q, long prec);
  static Interval from_long(long v, long prec);
  // [lo, hi] from two rationals
  static Interval hull(const Rat& lo, const Rat& hi, long prec);

  long prec() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

  bool contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
  }
  bool is_positive() const { return mpfr_sgn(lo_) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_) < 0; }
  bool contains(const Rat& q) const;
  double mid() const;
  double width() const;
  // width <= 2^-bits ?
  bool narrower_than(long bits) const;
  std::string str() const;

 private:
  mpfr_t lo_, hi_;
  long prec_;
};

Interval iv_neg(const Interval& a);
Interval iv_add(const Interval& a, const Interval& b);
Interval iv_sub(const Interval& a, const Interval& b);
Interval iv_mul(const Interval& a, const Interval& b);
// b must not contain zero
Interval iv_div(const Interval& a, const Interval& b);
Interval iv_abs(const Interval& a);
Interval iv_sqr(const Interval& a);
// a must be nonnegative (lo clamped to 0 when it dips below)
Interval iv_sqrt(const Interval& a);
// a must be strictly positive
Interval iv_log(const Interval& a);
Interval iv_scale(const Interval& a, const Rat& c);
Interval iv_pow(const Interval& a, long e);
Interval iv_hull2(const Interval& a, const Interval& b);
bool iv_disjoint(const Interval& a, const Interval& b);

// axis-aligned box in C
struct ComplexBox {
  Interval re, im;
  ComplexBox() = default;
  ComplexBox(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
};

ComplexBox cb_add(const ComplexBox& a, const ComplexBox& b);
ComplexBox cb_sub(const ComplexBox& a, const ComplexBox& b);
ComplexBox cb_mul(const ComplexBox& a, const ComplexBox& b);
Interval cb_abs(const ComplexBox& a);
bool cb_disjoint(const ComplexBox& a, const ComplexBox& b);

}  // namespace wct
