#include <wct/numfield.hpp>

#include <algorithm>
#include <sstream>

namespace wct {

QmodZ::QmodZ(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  Rat r = c - Rat(floor_rat(c));
  num = r.get_num();
  den = r.get_den();
}

QmodZ QmodZ::parse(const std::string& s) { return QmodZ(parse_rat(s)); }

std::string QmodZ::str() const {
  return num.get_str() + "/" + den.get_str();
}

// ---- NumberField ----

NumberField::NumberField(ZPoly poly, std::string label)
    : min_poly_(std::move(poly)), label_(std::move(label)) {
  degree_ = wct::degree(min_poly_);
  if (degree_ < 1) throw input_error("minimal polynomial must be nonconstant");
  if (degree_ > 8) throw field_too_large("field degree above 8");
  if (min_poly_.back() != 1) throw input_error("minimal polynomial must be monic");
  if (!is_irreducible(min_poly_))
    throw input_error("minimal polynomial is reducible: " + poly_to_string(min_poly_));
  // power_table_[k] = x^(deg+k) reduced, k = 0..deg-2
  std::vector<Rat> cur(degree_ + 1, Rat(0));
  for (long i = 0; i < degree_; ++i) cur[i] = Rat(-min_poly_[i]);
  cur.resize(degree_);
  power_table_.push_back(cur);
  for (long k = 1; k < degree_ - 1; ++k) {
    std::vector<Rat> next(degree_, Rat(0));
    // multiply by x
    for (long i = degree_ - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = Rat(0);
    Rat top = cur[degree_ - 1];
    if (top != 0)
      for (long i = 0; i < degree_; ++i) next[i] += top * power_table_[0][i];
    power_table_.push_back(next);
    cur = std::move(next);
  }
}

FieldPtr NumberField::rationals() {
  static FieldPtr q(new NumberField(ZPoly{Int(0), Int(1)}, "Q"));
  return q;
}

FieldPtr NumberField::quadratic(long d) {
  if (d == 0 || d == 1) throw input_error("quadratic field needs squarefree d != 0, 1");
  for (long f = 2; f * f <= std::abs(d); ++f)
    if (d % (f * f) == 0) throw input_error("quadratic field discriminant part not squarefree");
  std::ostringstream label;
  label << "Q(sqrt(" << d << "))";
  return FieldPtr(new NumberField(ZPoly{Int(-d), Int(0), Int(1)}, label.str()));
}

FieldPtr NumberField::cyclotomic(long n) {
  ZPoly p = cyclotomic_poly(n);
  std::ostringstream label;
  label << "Q(zeta" << n << ")";
  return FieldPtr(new NumberField(p, label.str()));
}

FieldPtr NumberField::from_min_poly(const ZPoly& poly, const std::string& label) {
  std::string l = label.empty() ? "Q[x]/(" + poly_to_string(poly) + ")" : label;
  if (wct::degree(poly) == 1) return rationals();
  return FieldPtr(new NumberField(poly, l));
}

std::vector<Rat> NumberField::reduce(std::vector<Rat> c) const {
  for (long k = static_cast<long>(c.size()) - 1; k >= degree_; --k) {
    Rat top = c[k];
    if (top == 0) continue;
    c[k] = Rat(0);
    const auto& row = power_table_[k - degree_];
    for (long i = 0; i < degree_; ++i) c[i] += top * row[i];
  }
  c.resize(degree_, Rat(0));
  return c;
}

// ---- AlgebraicNumber ----

AlgebraicNumber::AlgebraicNumber(FieldPtr f, std::vector<Rat> c)
    : field(std::move(f)), coords(std::move(c)) {
  if (static_cast<long>(coords.size()) != field->degree())
    throw input_error("coordinate length does not match field degree");
}

AlgebraicNumber AlgebraicNumber::from_rat(const FieldPtr& f, const Rat& q) {
  std::vector<Rat> c(f->degree(), Rat(0));
  c[0] = q;
  return AlgebraicNumber(f, std::move(c));
}

AlgebraicNumber AlgebraicNumber::gen(const FieldPtr& f) {
  std::vector<Rat> c(f->degree(), Rat(0));
  if (f->degree() == 1) {
    // generator of Q[x]/(x) is 0; harmless but almost surely unintended
    return AlgebraicNumber(f, std::move(c));
  }
  c[1] = Rat(1);
  return AlgebraicNumber(f, std::move(c));
}

bool AlgebraicNumber::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return c == 0; });
}

bool AlgebraicNumber::is_one() const {
  if (coords[0] != 1) return false;
  for (size_t i = 1; i < coords.size(); ++i)
    if (coords[i] != 0) return false;
  return true;
}

bool AlgebraicNumber::is_rational() const {
  for (size_t i = 1; i < coords.size(); ++i)
    if (coords[i] != 0) return false;
  return true;
}

Rat AlgebraicNumber::as_rational() const {
  if (!is_rational()) throw input_error("value is not rational");
  return coords[0];
}

std::string AlgebraicNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (!first) os << " + ";
    os << coords[i].get_str();
    if (i >= 1) os << "*a";
    if (i > 1) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& o) const {
  return field->same_as(*o.field) && coords == o.coords;
}

namespace {
void check_same_field(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!a.field->same_as(*b.field))
    throw input_error("mixed number fields in arithmetic");
}
}  // namespace

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  check_same_field(a, b);
  std::vector<Rat> c(a.coords);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
  return AlgebraicNumber(a.field, std::move(c));
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  check_same_field(a, b);
  std::vector<Rat> c(a.coords);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coords[i];
  return AlgebraicNumber(a.field, std::move(c));
}

AlgebraicNumber operator-(const AlgebraicNumber& a) {
  std::vector<Rat> c(a.coords);
  for (Rat& x : c) x = -x;
  return AlgebraicNumber(a.field, std::move(c));
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  check_same_field(a, b);
  long n = a.field->degree();
  std::vector<Rat> prod(2 * n - 1, Rat(0));
  for (long i = 0; i < n; ++i) {
    if (a.coords[i] == 0) continue;
    for (long j = 0; j < n; ++j) prod[i + j] += a.coords[i] * b.coords[j];
  }
  return AlgebraicNumber(a.field, a.field->reduce(std::move(prod)));
}

AlgebraicNumber operator*(const Rat& c, const AlgebraicNumber& a) {
  std::vector<Rat> r(a.coords);
  for (Rat& x : r) x *= c;
  return AlgebraicNumber(a.field, std::move(r));
}

AlgebraicNumber inverse(const AlgebraicNumber& a) {
  if (a.is_zero()) throw input_error("inverse of zero");
  // extended euclid in Q[x] against the minimal polynomial
  QPoly r0 = to_qpoly(a.field->min_poly());
  QPoly r1(a.coords);
  normalize(r1);
  QPoly s0, s1{Rat(1)};
  while (!r1.empty()) {
    auto [q, r2] = q_divrem(r0, r1);
    QPoly s2 = q_sub(s0, q_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0) throw input_error("inverse: element not invertible");
  Rat inv = Rat(1) / r0[0];
  std::vector<Rat> c(s0);
  for (Rat& x : c) x *= inv;
  c.resize(a.field->degree(), Rat(0));
  return AlgebraicNumber(a.field, a.field->reduce(std::move(c)));
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return a * inverse(b);
}

AlgebraicNumber pow(const AlgebraicNumber& a, const Int& e) {
  AlgebraicNumber base = e < 0 ? inverse(a) : a;
  Int k = abs(e);
  AlgebraicNumber r = AlgebraicNumber::from_rat(a.field, Rat(1));
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

QMat mult_matrix(const AlgebraicNumber& a) {
  long n = a.field->degree();
  QMat m(n, n);
  AlgebraicNumber cur = a;
  AlgebraicNumber gen = AlgebraicNumber::gen(a.field);
  for (long j = 0; j < n; ++j) {
    for (long i = 0; i < n; ++i) m(i, j) = cur.coords[i];
    if (j + 1 < n) cur = cur * gen;
  }
  return m;
}

Rat norm(const AlgebraicNumber& a) {
  QMat m = mult_matrix(a);
  // rational determinant via fraction clearing
  long n = m.rows;
  Int den(1);
  for (const Rat& c : m.a) den = lcm(den, c.get_den());
  ZMat z(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Rat v = m(i, j) * Rat(den);
      z(i, j) = v.get_num();
    }
  return Rat(z_det(z)) / pow_rat(Rat(den), n);
}

Rat trace(const AlgebraicNumber& a) {
  QMat m = mult_matrix(a);
  Rat t(0);
  for (long i = 0; i < m.rows; ++i) t += m(i, i);
  return t;
}

QPoly min_poly_of(const AlgebraicNumber& a) {
  long n = a.field->degree();
  // rows: coords of 1, a, a^2, ... until linearly dependent
  QMat rows(0, n);
  std::vector<std::vector<Rat>> pows;
  AlgebraicNumber cur = AlgebraicNumber::from_rat(a.field, Rat(1));
  for (long k = 0;; ++k) {
    pows.push_back(cur.coords);
    QMat m(static_cast<long>(pows.size()), n);
    for (size_t i = 0; i < pows.size(); ++i)
      for (long j = 0; j < n; ++j) m(static_cast<long>(i), j) = pows[i][j];
    if (q_rank(m) < static_cast<long>(pows.size())) {
      // solve c_0 * 1 + ... + c_{k-1} * a^(k-1) = a^k
      QMat sys(n, k);
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < k; ++j) sys(i, j) = pows[j][i];
      std::vector<Rat> rhs(pows.back().begin(), pows.back().end());
      auto sol = q_solve(sys, rhs);
      QPoly mp(static_cast<size_t>(k) + 1, Rat(0));
      mp[k] = Rat(1);
      for (long j = 0; j < k; ++j) mp[j] = -(*sol)[j];
      return mp;
    }
    cur = cur * a;
  }
}

std::optional<long> root_of_unity_order(const AlgebraicNumber& a) {
  if (a.is_zero()) return std::nullopt;
  if (a.is_one()) return 1;
  long deg = a.field->degree();
  // orders m with euler_phi(m) <= degree; all such m are at most 30 for deg 8
  for (long m = 2; m <= 30; ++m) {
    long phi = 0;
    for (long k = 1; k <= m; ++k)
      if (gcd(Int(k), Int(m)) == 1) ++phi;
    if (phi > deg) continue;
    if (pow(a, Int(m)).is_one()) return m;
  }
  return std::nullopt;
}

// ---- places ----

std::string Place::str() const {
  std::ostringstream os;
  if (kind == Kind::arch) {
    os << "inf" << arch_index;
    return os.str();
  }
  os << "p" << p.get_str();
  switch (quad) {
    case QuadTag::none: break;
    case QuadTag::split0: os << "a"; break;
    case QuadTag::split1: os << "b"; break;
    case QuadTag::inert: os << "i"; break;
    case QuadTag::ramified: os << "r"; break;
  }
  return os.str();
}

Place Place::parse(const std::string& s) {
  if (s.rfind("inf", 0) == 0) {
    std::string rest = s.substr(3);
    if (rest.empty() ||
        !std::all_of(rest.begin(), rest.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw input_error("bad place: " + s);
    return Place::arch(std::stol(rest));
  }
  if (s.empty() || s[0] != 'p') throw input_error("bad place: " + s);
  size_t i = 1;
  std::string digits;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
  if (digits.empty()) throw input_error("bad place: " + s);
  QuadTag t = QuadTag::none;
  if (i < s.size()) {
    switch (s[i]) {
      case 'a': t = QuadTag::split0; break;
      case 'b': t = QuadTag::split1; break;
      case 'i': t = QuadTag::inert; break;
      case 'r': t = QuadTag::ramified; break;
      default: throw input_error("bad place: " + s);
    }
    ++i;
  }
  if (i != s.size()) throw input_error("bad place: " + s);
  Int p(digits);
  if (!is_prime(p)) throw input_error("place prime is not prime: " + s);
  return Place::finite(p, t);
}

std::string to_string(SplittingType t) {
  switch (t) {
    case SplittingType::split: return "split";
    case SplittingType::inert: return "inert";
    case SplittingType::ramified: return "ramified";
  }
  return "?";
}

SplittingType splitting_type(long d, const Int& p) {
  if (d == 0 || d == 1) throw input_error("discriminant part must be squarefree, not 0 or 1");
  for (long f = 2; f * f <= std::abs(d); ++f)
    if (d % (f * f) == 0) throw input_error("discriminant part must be squarefree");
  if (!is_prime(p)) throw input_error("place prime is not prime: " + p.get_str());
  long dm4 = ((d % 4) + 4) % 4;
  Int disc = dm4 == 1 ? Int(d) : Int(4 * d);
  if (disc % p == 0) return SplittingType::ramified;
  if (p == 2) {
    // unramified 2 means d = 1 mod 4; split exactly when d = 1 mod 8
    long dm8 = ((d % 8) + 8) % 8;
    return dm8 == 1 ? SplittingType::split : SplittingType::inert;
  }
  Int dd(d);
  int leg = mpz_legendre(dd.get_mpz_t(), p.get_mpz_t());
  return leg == 1 ? SplittingType::split : SplittingType::inert;
}

long valuation(const Rat& x, const Int& p) {
  if (!is_prime(p)) throw input_error("valuation prime is not prime");
  return valuation_q(x, p);
}

namespace {

// lift of sqrt(d) mod p^k (p odd) or mod 2^k (d = 1 mod 8); smallest branch
Int sqrt_mod_pk(long d, const Int& p, long k) {
  Int pk = pow_int(p, k);
  Int dd = Int(d) % pk;
  if (dd < 0) dd += pk;
  Int s(0);
  if (p == 2) {
    // d odd, d = 1 mod 8; build the root bit by bit
    s = 1;
    Int mod(8);
    for (long bit = 3; bit < k; ++bit) {
      Int next_mod = mod * 2;
      if ((s * s - dd) % next_mod != 0) s += mod / 2;
      mod = next_mod;
    }
    s %= pk;
  } else {
    // find a square root mod p by brute force or Tonelli-Shanks for larger p
    Int dp = dd % p;
    Int r(0);
    bool found = false;
    if (p < 5000) {
      for (Int t(0); t < p; ++t)
        if ((t * t - dp) % p == 0) {
          r = t;
          found = true;
          break;
        }
    } else {
      // Tonelli-Shanks
      Int q = p - 1;
      long ss = 0;
      while (mpz_even_p(q.get_mpz_t())) {
        q >>= 1;
        ++ss;
      }
      auto powm = [&](Int b, Int e, const Int& m) {
        Int out;
        mpz_powm(out.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
        return out;
      };
      Int z(2);
      while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
      Int m(ss), c = powm(z, q, p), t = powm(dp, q, p), rr = powm(dp, (q + 1) / 2, p);
      while (t != 1) {
        Int t2 = t;
        long i = 0;
        while (t2 != 1) {
          t2 = t2 * t2 % p;
          ++i;
        }
        Int b = c;
        for (long j = 0; j < m.get_si() - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        rr = rr * b % p;
      }
      r = rr;
      found = true;
    }
    if (!found) throw input_error("no square root found");
    // Hensel: s -> s - (s^2 - d) / (2 s)
    s = r;
    Int mod = p;
    while (mod < pk) {
      mod = mod * mod;
      if (mod > pk) mod = pk;
      Int inv2s;
      Int twos = 2 * s % mod;
      if (mpz_invert(inv2s.get_mpz_t(), twos.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw input_error("hensel lift failed");
      s = (s - (s * s - dd) % mod * inv2s) % mod;
      if (s < 0) s += mod;
    }
    s %= pk;
    // canonical branch, stable across precisions: residue mod p is the
    // smaller of the two square roots mod p
    Int rp = s % p;
    if (rp > p - rp) s = pk - s;
  }
  return s;
}

}  // namespace

long quad_valuation(const AlgebraicNumber& x, long d, const Place& v) {
  if (x.is_zero()) throw input_error("valuation of zero");
  if (v.kind != Place::Kind::finite) throw input_error("finite place expected");
  const Int& p = v.p;
  if (x.field->degree() != 2) {
    if (x.is_rational()) {
      long vp = valuation(x.as_rational(), p);
      return v.quad == QuadTag::ramified ? 2 * vp : vp;
    }
    throw input_error("quadratic field element expected");
  }
  // clear denominators: x = (A + B w) / c
  Int c = lcm(x.coords[0].get_den(), x.coords[1].get_den());
  Rat ca = x.coords[0] * Rat(c), cb = x.coords[1] * Rat(c);
  Int A = ca.get_num(), B = cb.get_num();
  Rat nrm = norm(x);
  long vc = c == 1 ? 0 : valuation_z(c, p);
  SplittingType st = splitting_type(d, p);
  switch (v.quad) {
    case QuadTag::inert: {
      if (st != SplittingType::inert) throw input_error("place does not match splitting");
      Rat ny = nrm * Rat(c * c);
      long vn = valuation_q(ny, p);
      if (vn % 2 != 0) throw input_error("inert valuation parity violated");
      return vn / 2 - vc;
    }
    case QuadTag::ramified: {
      if (st != SplittingType::ramified) throw input_error("place does not match splitting");
      Rat ny = nrm * Rat(c * c);
      return valuation_q(ny, p) - 2 * vc;
    }
    case QuadTag::split0:
    case QuadTag::split1: {
      if (st != SplittingType::split) throw input_error("place does not match splitting");
      Rat ny = nrm * Rat(c * c);
      long vn = ny == 0 ? 0 : valuation_q(ny, p);
      long prec = vn + 3;
      Int s = sqrt_mod_pk(d, p, prec);
      Int pk = pow_int(p, prec);
      Int t0 = (A + B * s) % pk;
      Int t1 = (A - B * s) % pk;
      long v0 = t0 == 0 ? prec : valuation_z(t0, p);
      long v1 = t1 == 0 ? prec : valuation_z(t1, p);
      if (v0 >= prec) v0 = vn - std::min(v1, vn);  // the other branch carries it all
      if (v1 >= prec) v1 = vn - std::min(v0, vn);
      if (v0 + v1 != vn) throw input_error("split valuation consistency check failed");
      return (v.quad == QuadTag::split0 ? v0 : v1) - vc;
    }
    case QuadTag::none:
      throw input_error("place lacks quadratic refinement");
  }
  throw input_error("unreachable");
}

// ---- FMat ----

FMat::FMat(FieldPtr f, long size) : field(std::move(f)), n(size) {
  a.assign(static_cast<size_t>(n * n), AlgebraicNumber::from_rat(field, Rat(0)));
}

FMat FMat::identity(FieldPtr f, long size) {
  FMat m(std::move(f), size);
  for (long i = 0; i < size; ++i) m(i, i) = AlgebraicNumber::from_rat(m.field, Rat(1));
  return m;
}

FMat fmat_mul(const FMat& x, const FMat& y) {
  FMat r(x.field, x.n);
  for (long i = 0; i < x.n; ++i)
    for (long k = 0; k < x.n; ++k) {
      if (x(i, k).is_zero()) continue;
      for (long j = 0; j < x.n; ++j)
        r(i, j) = r(i, j) + x(i, k) * y(k, j);
    }
  return r;
}

std::optional<FMat> fmat_inverse(const FMat& m) {
  long n = m.n;
  FMat work = m;
  FMat inv = FMat::identity(m.field, n);
  for (long col = 0; col < n; ++col) {
    long piv = -1;
    for (long i = col; i < n; ++i)
      if (!work(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    for (long j = 0; j < n; ++j) {
      std::swap(work.a[piv * n + j], work.a[col * n + j]);
      std::swap(inv.a[piv * n + j], inv.a[col * n + j]);
    }
    AlgebraicNumber d = inverse(work(col, col));
    for (long j = 0; j < n; ++j) {
      work(col, j) = work(col, j) * d;
      inv(col, j) = inv(col, j) * d;
    }
    for (long i = 0; i < n; ++i) {
      if (i == col || work(i, col).is_zero()) continue;
      AlgebraicNumber f = work(i, col);
      for (long j = 0; j < n; ++j) {
        work(i, j) = work(i, j) - f * work(col, j);
        inv(i, j) = inv(i, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

AlgebraicNumber fmat_trace(const FMat& m) {
  AlgebraicNumber t = AlgebraicNumber::from_rat(m.field, Rat(0));
  for (long i = 0; i < m.n; ++i) t = t + m(i, i);
  return t;
}

}  // namespace wct
