#pragma once

#include <wct/rat.hpp>

#include <utility>
#include <vector>

namespace wct {

// dense polynomials, coefficients ordered low degree to high
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

inline long degree(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }
inline long degree(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

void normalize(ZPoly& p);
void normalize(QPoly& p);

QPoly to_qpoly(const ZPoly& p);
// clears denominators, divides by content; sign of leading coeff preserved
ZPoly primitive_part(const QPoly& p);

QPoly q_add(const QPoly& a, const QPoly& b);
QPoly q_sub(const QPoly& a, const QPoly& b);
QPoly q_mul(const QPoly& a, const QPoly& b);
ZPoly z_mul(const ZPoly& a, const ZPoly& b);
ZPoly z_add(const ZPoly& a, const ZPoly& b);
ZPoly z_sub(const ZPoly& a, const ZPoly& b);
// quotient and remainder over Q (b nonzero)
std::pair<QPoly, QPoly> q_divrem(const QPoly& a, const QPoly& b);
// exact division over Z; nullopt when b does not divide a
std::optional<ZPoly> z_divide_exact(const ZPoly& a, const ZPoly& b);

QPoly q_monic(const QPoly& p);
QPoly q_gcd(QPoly a, QPoly b);  // monic gcd
QPoly q_derivative(const QPoly& p);
ZPoly z_derivative(const ZPoly& p);

Rat q_eval(const QPoly& p, const Rat& x);
Int z_eval(const ZPoly& p, const Int& x);

// p(x^k)
ZPoly z_inflate(const ZPoly& p, long k);

std::string poly_to_string(const ZPoly& p, const std::string& var = "x");
std::string poly_to_string(const QPoly& p, const std::string& var = "x");
// accepts e.g. "x^2-2", "2x^3 + x - 5/3" (rational coefficients allowed;
// result cleared to a primitive integer polynomial only if integral)
QPoly parse_qpoly(const std::string& s, const std::string& var = "x");

// squarefree part p / gcd(p, p')
QPoly q_squarefree_part(const QPoly& p);
bool q_is_squarefree(const QPoly& p);

// factorization over Q: content * prod(factors[i].first ^ factors[i].second)
// with each factor a primitive irreducible ZPoly with positive leading coeff
struct QFactorization {
  Rat content;
  std::vector<std::pair<ZPoly, long>> factors;
};
QFactorization factor_qpoly(const QPoly& p);
bool is_irreducible(const ZPoly& p);

ZPoly cyclotomic_poly(long n);

// real root isolation for a squarefree polynomial: disjoint open intervals
// (lo, hi) with rational non-root endpoints, one real root each, sorted
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const QPoly& p);
// exact count of real roots in (a, b]
long sturm_count(const QPoly& p, const Rat& a, const Rat& b);
// halve an isolating interval of squarefree p until hi - lo <= width
void refine_root(const QPoly& p, Rat& lo, Rat& hi, const Rat& width);

}  // namespace wct
