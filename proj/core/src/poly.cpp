#include <wct/poly.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wct {

void normalize(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
void normalize(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const ZPoly& p) {
  QPoly q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[i] = Rat(p[i]);
  return q;
}

ZPoly primitive_part(const QPoly& p) {
  Int den(1);
  for (const Rat& c : p) den = lcm(den, c.get_den());
  ZPoly z(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    Rat v = p[i] * Rat(den);
    z[i] = v.get_num();
  }
  normalize(z);
  if (z.empty()) return z;
  Int g(0);
  for (const Int& c : z) g = gcd(g, c);
  for (Int& c : z) c /= g;
  return z;
}

QPoly q_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  normalize(r);
  return r;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  normalize(r);
  return r;
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  normalize(r);
  return r;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  normalize(r);
  return r;
}

ZPoly z_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  normalize(r);
  return r;
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  normalize(r);
  return r;
}

std::pair<QPoly, QPoly> q_divrem(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw input_error("polynomial division by zero");
  QPoly rem = a, quo;
  long db = degree(b);
  if (degree(a) >= db) quo.assign(a.size() - b.size() + 1, Rat(0));
  while (degree(rem) >= db) {
    long k = degree(rem) - db;
    Rat f = rem.back() / b.back();
    quo[k] = f;
    for (long i = 0; i <= db; ++i) rem[k + i] -= f * b[i];
    normalize(rem);
  }
  normalize(quo);
  return {quo, rem};
}

std::optional<ZPoly> z_divide_exact(const ZPoly& a, const ZPoly& b) {
  auto [q, r] = q_divrem(to_qpoly(a), to_qpoly(b));
  if (!r.empty()) return std::nullopt;
  ZPoly z(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) return std::nullopt;
    z[i] = q[i].get_num();
  }
  return z;
}

QPoly q_monic(const QPoly& p) {
  if (p.empty()) return p;
  QPoly r = p;
  Rat inv = Rat(1) / p.back();
  for (Rat& c : r) c *= inv;
  return r;
}

QPoly q_gcd(QPoly a, QPoly b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    QPoly r = q_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return q_monic(a);
}

QPoly q_derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rat(static_cast<long>(i));
  normalize(d);
  return d;
}

ZPoly z_derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Int(static_cast<long>(i));
  normalize(d);
  return d;
}

Rat q_eval(const QPoly& p, const Rat& x) {
  Rat r(0);
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

Int z_eval(const ZPoly& p, const Int& x) {
  Int r(0);
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

ZPoly z_inflate(const ZPoly& p, long k) {
  if (p.empty()) return p;
  ZPoly r(static_cast<size_t>(degree(p) * k) + 1, Int(0));
  for (size_t i = 0; i < p.size(); ++i) r[i * k] = p[i];
  return r;
}

std::string poly_to_string(const ZPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(p); i >= 0; --i) {
    const Int& c = p[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    Int ac = abs(c);
    if (i == 0 || ac != 1) os << ac.get_str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::string poly_to_string(const QPoly& p, const std::string& var) {
  if (degree(p) < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(p); i >= 0; --i) {
    const Rat& c = p[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    Rat ac = abs(c);
    if (i == 0 || ac != 1) os << ac.get_str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

QPoly parse_qpoly(const std::string& s, const std::string& var) {
  QPoly out;
  auto bump = [&out](long deg, const Rat& c) {
    if (static_cast<long>(out.size()) <= deg) out.resize(deg + 1, Rat(0));
    out[deg] += c;
  };
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    skip_ws();
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (any) {
      throw input_error("bad polynomial: " + s);
    }
    // coefficient
    std::string num;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
      num += s[i++];
    skip_ws();
    if (!num.empty() && i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
    }
    Rat coef = num.empty() ? Rat(1) : parse_rat(num);
    if (sign < 0) coef = -coef;
    long deg = 0;
    if (i < s.size() && s.compare(i, var.size(), var) == 0) {
      i += var.size();
      skip_ws();
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws();
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
        if (e.empty()) throw input_error("bad exponent in: " + s);
        deg = std::stol(e);
      }
    } else if (num.empty()) {
      throw input_error("bad polynomial: " + s);
    }
    bump(deg, coef);
    any = true;
    skip_ws();
  }
  if (!any) throw input_error("empty polynomial");
  normalize(out);
  return out;
}

QPoly q_squarefree_part(const QPoly& p) {
  if (degree(p) <= 0) return q_monic(p);
  QPoly g = q_gcd(p, q_derivative(p));
  return q_monic(q_divrem(p, g).first);
}

bool q_is_squarefree(const QPoly& p) {
  if (degree(p) <= 1) return true;
  return degree(q_gcd(p, q_derivative(p))) == 0;
}

ZPoly cyclotomic_poly(long n) {
  if (n < 1) throw input_error("cyclotomic index must be positive");
  // x^n - 1 divided by all lower-order cyclotomic factors
  ZPoly num(static_cast<size_t>(n) + 1, Int(0));
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto q = z_divide_exact(num, cyclotomic_poly(d));
    num = *q;
  }
  return num;
}

// ---- Sturm machinery ----

namespace {

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain;
  chain.push_back(p);
  chain.push_back(q_derivative(p));
  while (!chain.back().empty() && degree(chain.back()) > 0) {
    QPoly r = q_divrem(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (Rat& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

long sign_changes_at(const std::vector<QPoly>& chain, const Rat& x) {
  long changes = 0;
  int prev = 0;
  for (const QPoly& q : chain) {
    Rat v = q_eval(q, x);
    int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

Rat cauchy_bound(const QPoly& p) {
  Rat m(0);
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Rat a = abs(p[i] / p.back());
    if (a > m) m = a;
  }
  return m + 1;
}

}  // namespace

long sturm_count(const QPoly& p, const Rat& a, const Rat& b) {
  auto chain = sturm_chain(p);
  return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const QPoly& p) {
  if (degree(p) <= 0) return {};
  if (!q_is_squarefree(p)) throw input_error("root isolation needs a squarefree input");
  auto chain = sturm_chain(p);
  Rat bound = cauchy_bound(p);
  std::vector<std::pair<Rat, Rat>> out;
  struct Seg {
    Rat lo, hi;
    long nroots;
  };
  std::vector<Seg> stack;
  long total = sign_changes_at(chain, -bound) - sign_changes_at(chain, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.nroots == 1) {
      out.emplace_back(s.lo, s.hi);
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    while (q_eval(p, mid) == 0) mid = (s.lo + mid) / 2;  // nudge off a root
    long left = sign_changes_at(chain, s.lo) - sign_changes_at(chain, mid);
    long right = s.nroots - left;
    if (left > 0) stack.push_back({s.lo, mid, left});
    if (right > 0) stack.push_back({mid, s.hi, right});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void refine_root(const QPoly& p, Rat& lo, Rat& hi, const Rat& width) {
  int slo = q_eval(p, lo) > 0 ? 1 : -1;
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    Rat v = q_eval(p, mid);
    if (v == 0) {
      // widen infinitesimally around the exact root; keep endpoints non-roots
      Rat eps = (hi - lo) / 4;
      while (q_eval(p, mid - eps) == 0 || q_eval(p, mid + eps) == 0) eps /= 2;
      if (mid + eps - (mid - eps) > width) {
        eps = width / 3;
      }
      lo = mid - eps;
      hi = mid + eps;
      return;
    }
    int sm = v > 0 ? 1 : -1;
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
}

}  // namespace wct
