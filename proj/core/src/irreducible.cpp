#include <wct/poly.hpp>
#include <wct/rootsys.hpp>

#include <algorithm>

namespace wct {

namespace {

// incremental row-echelon span tracker over Q
struct SpanTracker {
  long n;
  std::vector<std::vector<Rat>> rows;  // echelon, pivot 1
  std::vector<long> pivots;

  explicit SpanTracker(long cols) : n(cols) {}
  long dim() const { return static_cast<long>(rows.size()); }

  // reduces v against the span; returns the residue
  std::vector<Rat> reduce(std::vector<Rat> v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rat& c = v[pivots[r]];
      if (c == 0) continue;
      Rat f = c;
      for (long j = 0; j < n; ++j) v[j] -= f * rows[r][j];
    }
    return v;
  }

  bool contains(const std::vector<Rat>& v) const {
    std::vector<Rat> r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rat& c) { return c == 0; });
  }

  // returns true when v enlarged the span
  bool add(const std::vector<Rat>& v) {
    std::vector<Rat> r = reduce(v);
    long p = -1;
    for (long j = 0; j < n; ++j)
      if (r[j] != 0) {
        p = j;
        break;
      }
    if (p < 0) return false;
    Rat inv = Rat(1) / r[p];
    for (long j = 0; j < n; ++j) r[j] *= inv;
    rows.push_back(std::move(r));
    pivots.push_back(p);
    return true;
  }
};

std::vector<Rat> vectorize(const QMat& m) { return m.a; }

std::vector<Rat> apply_mat(const QMat& g, const std::vector<Rat>& v) {
  std::vector<Rat> r(g.rows, Rat(0));
  for (long i = 0; i < g.rows; ++i)
    for (long j = 0; j < g.cols; ++j)
      if (g(i, j) != 0) r[i] += g(i, j) * v[j];
  return r;
}

// span of the unital algebra generated by the matrices; basis returned
std::vector<QMat> algebra_basis(const std::vector<QMat>& gens, long n) {
  SpanTracker span(n * n);
  std::vector<QMat> basis;
  auto push = [&](const QMat& m) {
    if (span.add(vectorize(m))) {
      basis.push_back(m);
      return true;
    }
    return false;
  };
  push(QMat::identity(n));
  for (const QMat& g : gens) push(g);
  for (size_t next = 0; next < basis.size(); ++next) {
    QMat cur = basis[next];  // copy: basis may reallocate
    for (const QMat& g : gens) push(mat_mul(cur, g));
  }
  return basis;
}

QMat eval_zpoly(const ZPoly& f, const QMat& m) {
  long n = m.rows;
  QMat r(n, n);
  for (long i = 0; i < n; ++i) r(i, i) = Rat(f.back());
  for (long k = static_cast<long>(f.size()) - 2; k >= 0; --k) {
    r = mat_mul(r, m);
    for (long i = 0; i < n; ++i) r(i, i) += Rat(f[k]);
  }
  return r;
}

bool subspace_invariant(const QMat& basis_rows, const std::vector<QMat>& gens) {
  SpanTracker span(basis_rows.cols);
  for (long i = 0; i < basis_rows.rows; ++i) span.add(basis_rows.row(i));
  for (const QMat& g : gens)
    for (long i = 0; i < basis_rows.rows; ++i)
      if (!span.contains(apply_mat(g, basis_rows.row(i)))) return false;
  return true;
}

// smallest invariant subspace containing v; dimension only
long vector_closure_dim(const std::vector<QMat>& gens, const std::vector<Rat>& v) {
  long n = static_cast<long>(v.size());
  SpanTracker span(n);
  std::vector<std::vector<Rat>> queue;
  if (span.add(v)) queue.push_back(v);
  for (size_t next = 0; next < queue.size(); ++next) {
    std::vector<Rat> cur = queue[next];
    for (const QMat& g : gens) {
      std::vector<Rat> img = apply_mat(g, cur);
      if (span.add(img)) queue.push_back(std::move(img));
      if (span.dim() == n) return n;
    }
  }
  return span.dim();
}

QPoly matrix_min_poly(const QMat& m) {
  long n = m.rows;
  SpanTracker span(n * n);
  std::vector<QMat> powers;
  QMat cur = QMat::identity(n);
  for (long k = 0;; ++k) {
    if (!span.add(vectorize(cur))) {
      // solve sum c_i M^i = M^k
      QMat sys(n * n, k);
      for (long j = 0; j < k; ++j)
        for (long e = 0; e < n * n; ++e) sys(e, j) = powers[j].a[e];
      auto sol = q_solve(sys, vectorize(cur));
      QPoly mp(static_cast<size_t>(k) + 1, Rat(0));
      mp[k] = Rat(1);
      for (long j = 0; j < k; ++j) mp[j] = -(*sol)[j];
      return mp;
    }
    powers.push_back(cur);
    cur = mat_mul(cur, m);
    (void)k;
  }
}

// commutant of the generators inside n x n matrices
std::vector<QMat> commutant_basis(const std::vector<QMat>& gens, long n) {
  QMat sys(static_cast<long>(gens.size()) * n * n, n * n);
  long row = 0;
  for (const QMat& g : gens) {
    // (X g - g X)_{ij} = sum_k X_ik g_kj - g_ik X_kj
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        for (long k = 0; k < n; ++k) {
          sys(row, i * n + k) += g(k, j);
          sys(row, k * n + j) -= g(i, k);
        }
        ++row;
      }
  }
  QMat null = q_nullspace(sys);
  std::vector<QMat> basis;
  for (long r = 0; r < null.rows; ++r) {
    QMat x(n, n);
    x.a = null.row(r);
    basis.push_back(std::move(x));
  }
  return basis;
}

bool is_scalar(const QMat& m, Rat* value = nullptr) {
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j)
      if (i != j && m(i, j) != 0) return false;
  for (long i = 1; i < m.rows; ++i)
    if (m(i, i) != m(0, 0)) return false;
  if (value) *value = m(0, 0);
  return true;
}

int hilbert_symbol_inf(const Rat& a, const Rat& b) {
  return (a < 0 && b < 0) ? -1 : 1;
}

// Hilbert symbol (a, b)_p for squarefree-reduced nonzero integers
int hilbert_symbol_p(Int a, Int b, const Int& p) {
  auto strip = [&](Int& x) {
    long v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };
  long alpha = strip(a), beta = strip(b);
  auto leg = [&](const Int& u) { return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()); };
  if (p == 2) {
    auto eps = [](const Int& u) {
      long m = to_long(Int(((u % 8) + 8) % 8));  // odd u: 1,3,5,7
      return (m - 1) / 2 % 2;
    };
    auto omega = [](const Int& u) {
      long m = to_long(Int(((u % 8) + 8) % 8));
      return (m * m - 1) / 8 % 2;
    };
    long e = eps(a) * eps(b) + alpha * omega(b) + beta * omega(a);
    return e % 2 == 0 ? 1 : -1;
  }
  long pe = to_long((p - 1) / 2) % 2;
  int s = 1;
  if ((alpha * beta * pe) % 2 == 1) s = -s;
  if (beta % 2 == 1 && leg(a) == -1) s = -s;
  if (alpha % 2 == 1 && leg(b) == -1) s = -s;
  return s;
}

// is the quaternion algebra (a, b / Q) a division algebra
bool quaternion_is_division(const Rat& aq, const Rat& bq) {
  // clear squares: (a, b) depends on a, b mod squares
  Int a = aq.get_num() * aq.get_den();
  Int b = bq.get_num() * bq.get_den();
  if (hilbert_symbol_inf(Rat(a), Rat(b)) == -1) return true;
  std::vector<Int> ps{Int(2)};
  for (Int x : {a, b}) {
    x = abs(x);
    for (long p : small_primes()) {
      if (x % p == 0) {
        ps.emplace_back(p);
        while (x % p == 0) x /= p;
      }
      if (x == 1) break;
    }
    if (x > 1) ps.push_back(x);  // large prime (inputs here are tiny)
  }
  for (const Int& p : ps)
    if (hilbert_symbol_p(a, b, p) == -1) return true;
  return false;
}

}  // namespace

bool acts_irreducibly_q(const std::vector<QMat>& generators) {
  if (generators.empty()) throw input_error("no generators");
  long n = generators[0].rows;
  for (const QMat& g : generators)
    if (g.rows != n || g.cols != n) throw input_error("generator size mismatch");
  if (n == 1) return true;

  // Burnside: the generated group spans all of End(Q^n) iff the action is
  // absolutely irreducible
  std::vector<QMat> alg = algebra_basis(generators, n);
  if (static_cast<long>(alg.size()) == n * n) return true;

  Rng rng(0x5eed);

  // candidate algebra elements for certificates and factor-kernel witnesses
  std::vector<QMat> candidates = generators;
  for (const QMat& m : alg) candidates.push_back(m);
  for (int k = 0; k < 20; ++k) {
    QMat m(n, n);
    for (const QMat& b : alg) {
      long c = rng.range(-3, 3);
      if (c == 0) continue;
      for (long e = 0; e < n * n; ++e) m.a[e] += Rat(c) * b.a[e];
    }
    candidates.push_back(std::move(m));
  }

  for (const QMat& m : candidates) {
    QFactorization f = factor_qpoly(charpoly(m));
    if (f.factors.size() == 1 && f.factors[0].second == 1 &&
        degree(f.factors[0].first) == n)
      return true;  // irreducible characteristic polynomial
    for (const auto& [fac, mult] : f.factors) {
      (void)mult;
      if (degree(fac) == n) continue;
      QMat ker = q_nullspace(eval_zpoly(fac, m));
      if (ker.rows == 0 || ker.rows == n) continue;
      if (subspace_invariant(ker, generators)) return false;
    }
  }

  // single-vector closures catch scalar-like actions
  for (long i = 0; i < n; ++i) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = Rat(1);
    if (vector_closure_dim(generators, e) < n) return false;
  }
  for (int k = 0; k < 8; ++k) {
    std::vector<Rat> v(n);
    for (long i = 0; i < n; ++i) v[i] = Rat(rng.range(-5, 5));
    if (std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; })) continue;
    if (vector_closure_dim(generators, v) < n) return false;
  }

  // endomorphism algebra of the module (semisimple for the finite groups this
  // library works with); dim 1 forces simplicity
  std::vector<QMat> comm = commutant_basis(generators, n);
  long cdim = static_cast<long>(comm.size());
  if (cdim == 1) return true;

  std::vector<QMat> celems = comm;
  for (size_t i = 0; i < comm.size(); ++i)
    for (size_t j = i + 1; j < comm.size(); ++j) {
      QMat s(n, n), d(n, n);
      for (long e = 0; e < n * n; ++e) {
        s.a[e] = comm[i].a[e] + comm[j].a[e];
        d.a[e] = comm[i].a[e] - comm[j].a[e];
      }
      celems.push_back(std::move(s));
      celems.push_back(std::move(d));
    }
  for (int k = 0; k < 40; ++k) {
    QMat m(n, n);
    for (const QMat& b : comm) {
      long c = rng.range(-4, 4);
      if (c == 0) continue;
      for (long e = 0; e < n * n; ++e) m.a[e] += Rat(c) * b.a[e];
    }
    celems.push_back(std::move(m));
  }

  long best_irr_degree = 0;
  for (const QMat& x : celems) {
    bool zero = std::all_of(x.a.begin(), x.a.end(), [](const Rat& c) { return c == 0; });
    if (zero) continue;
    QPoly mp = matrix_min_poly(x);
    QFactorization f = factor_qpoly(mp);
    if (f.factors.size() == 1 && f.factors[0].second == 1) {
      best_irr_degree = std::max(best_irr_degree, degree(f.factors[0].first));
      continue;
    }
    // reducible minimal polynomial of a commuting operator splits the module
    for (const auto& [fac, mult] : f.factors) {
      (void)mult;
      if (degree(fac) == degree(mp)) continue;
      QMat ker = q_nullspace(eval_zpoly(fac, x));
      if (ker.rows == 0 || ker.rows == n) continue;
      if (subspace_invariant(ker, generators)) return false;
    }
  }

  bool commutative = true;
  for (size_t i = 0; i < comm.size() && commutative; ++i)
    for (size_t j = i + 1; j < comm.size() && commutative; ++j)
      if (!(mat_mul(comm[i], comm[j]) == mat_mul(comm[j], comm[i])))
        commutative = false;

  if (commutative) {
    // commutative semisimple endomorphism algebra with a primitive element of
    // full degree is a field, so the module is simple
    if (best_irr_degree == cdim) return true;
    throw input_error("irreducibility undecided: commutative endomorphisms without primitive element");
  }

  if (cdim == 4) {
    // candidate quaternion endomorphism algebra: extract a standard pair
    QMat iimg(n, n);
    Rat a;
    bool have_i = false;
    for (const QMat& x : celems) {
      QMat y = x;
      QPoly mp = matrix_min_poly(y);
      if (degree(mp) != 2) continue;
      // x^2 - t x + m = 0 -> (x - t/2)^2 = t^2/4 - m
      Rat t = -mp[1];
      for (long d = 0; d < n; ++d) y(d, d) -= t / 2;
      QMat y2 = mat_mul(y, y);
      Rat val;
      if (!is_scalar(y2, &val) || val == 0) continue;
      iimg = y;
      a = val;
      have_i = true;
      break;
    }
    if (have_i) {
      // solve for anticommuting elements inside the commutant
      QMat sys(n * n, 4);
      for (long c = 0; c < 4; ++c) {
        QMat anti = mat_mul(iimg, comm[c]);
        QMat ca = mat_mul(comm[c], iimg);
        for (long e = 0; e < n * n; ++e) sys(e, c) = anti.a[e] + ca.a[e];
      }
      QMat null = q_nullspace(sys);
      for (long r = 0; r < null.rows; ++r) {
        QMat j(n, n);
        for (long c = 0; c < 4; ++c)
          for (long e = 0; e < n * n; ++e)
            j.a[e] += null(r, c) * comm[c].a[e];
        QMat j2 = mat_mul(j, j);
        Rat b;
        if (!is_scalar(j2, &b) || b == 0) continue;
        if (quaternion_is_division(a, b)) return true;
        // split quaternions contain zero divisors; find one by searching the
        // norm form x0^2 - a x1^2 - b x2^2 + ab x3^2 = 0
        QMat ij = mat_mul(iimg, j);
        for (long x0 = 0; x0 <= 30; ++x0)
          for (long x1 = -30; x1 <= 30; ++x1)
            for (long x2 = -30; x2 <= 30; ++x2)
              for (long x3 = -30; x3 <= 30; ++x3) {
                if (x0 == 0 && x1 == 0 && x2 == 0 && x3 == 0) continue;
                Rat norm = Rat(x0 * x0) - a * (x1 * x1) - b * (x2 * x2) +
                           a * b * (x3 * x3);
                if (norm != 0) continue;
                QMat z(n, n);
                for (long d = 0; d < n; ++d) z(d, d) = Rat(x0);
                for (long e = 0; e < n * n; ++e)
                  z.a[e] += Rat(x1) * iimg.a[e] + Rat(x2) * j.a[e] + Rat(x3) * ij.a[e];
                QMat ker = q_nullspace(z);
                if (ker.rows > 0 && ker.rows < n &&
                    subspace_invariant(ker, generators))
                  return false;
              }
      }
    }
  }

  throw input_error("irreducibility undecided at this scale");
}

bool acts_irreducibly(const std::vector<ZMat>& subgroup, const RootSystem& rs,
                      long cap) {
  (void)cap;
  if (subgroup.empty()) throw input_error("no generators");
  std::vector<QMat> gens;
  for (const ZMat& m : subgroup) {
    root_permutation(rs, m);  // validates root-set preservation
    gens.push_back(to_qmat(m));
  }
  return acts_irreducibly_q(gens);
}

}  // namespace wct
