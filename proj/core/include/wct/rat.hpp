#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wct {

using Int = mpz_class;
using Rat = mpq_class;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int pow_int(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

inline Int floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

inline Rat pow_rat(const Rat& a, long e) {
  if (e == 0) return Rat(1);
  Rat base = e > 0 ? a : Rat(1) / a;
  unsigned long k = e > 0 ? e : -e;
  Rat r(1);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

// p-adic valuation of a nonzero integer
inline long valuation_z(Int a, const Int& p) {
  if (a == 0) throw input_error("valuation of zero");
  long v = 0;
  Int q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return v;
    a = q;
    ++v;
  }
}

inline long valuation_q(const Rat& x, const Int& p) {
  if (x == 0) throw input_error("valuation of zero");
  return valuation_z(x.get_num(), p) - valuation_z(x.get_den(), p);
}

// parses "3", "-4/7", "12/8" (reduced on return)
inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw input_error("bad rational: " + s);
  if (q.get_den() == 0) throw input_error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw input_error("integer out of machine range");
  return z.get_si();
}

// deterministic xorshift-based generator used by randomized-but-reproducible
// searches; NOT for anything security related
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  // uniform in [0, n)
  uint64_t below(uint64_t n) { return next() % n; }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }
};

inline const std::vector<long>& small_primes() {
  static const std::vector<long> ps = [] {
    std::vector<long> v;
    std::vector<bool> sieve(20000, true);
    for (long i = 2; i < 20000; ++i)
      if (sieve[i]) {
        v.push_back(i);
        for (long j = 2 * i; j < 20000; j += i) sieve[j] = false;
      }
    return v;
  }();
  return ps;
}

inline bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

}  // namespace wct
