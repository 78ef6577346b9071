#include <wct/zmat.hpp>

#include <algorithm>

namespace wct {

namespace {

void swap_rows(ZMat& m, long i, long j) {
  if (i == j) return;
  for (long c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}

// row_i += f * row_j
void add_mul_row(ZMat& m, long i, long j, const Int& f) {
  if (f == 0) return;
  for (long c = 0; c < m.cols; ++c) m(i, c) += f * m(j, c);
}

}  // namespace

long hnf_rows(ZMat& m, ZMat* u) {
  if (u) *u = ZMat::identity(m.rows);
  long r = 0;
  for (long col = 0; col < m.cols && r < m.rows; ++col) {
    // eliminate below row r in this column via gcd steps
    for (;;) {
      long piv = -1;
      for (long i = r; i < m.rows; ++i)
        if (m(i, col) != 0 && (piv < 0 || abs(m(i, col)) < abs(m(piv, col))))
          piv = i;
      if (piv < 0) break;
      swap_rows(m, r, piv);
      if (u) swap_rows(*u, r, piv);
      bool clean = true;
      for (long i = r + 1; i < m.rows; ++i) {
        if (m(i, col) == 0) continue;
        Int q = m(i, col) / m(r, col);  // truncated division is fine here
        add_mul_row(m, i, r, -q);
        if (u) add_mul_row(*u, i, r, -q);
        if (m(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m(r, col) == 0) continue;
    if (m(r, col) < 0) {
      for (long c = 0; c < m.cols; ++c) m(r, c) = -m(r, c);
      if (u)
        for (long c = 0; c < u->cols; ++c) (*u)(r, c) = -(*u)(r, c);
    }
    // reduce entries above the pivot into [0, pivot)
    for (long i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, col).get_mpz_t(), m(r, col).get_mpz_t());
      add_mul_row(m, i, r, -q);
      if (u) add_mul_row(*u, i, r, -q);
    }
    ++r;
  }
  return r;
}

ZMat z_nullspace(const ZMat& a) {
  // rows of U mapping to zero rows of HNF(A^T) are a kernel basis
  ZMat t = a.transposed();
  ZMat u;
  long rank = hnf_rows(t, &u);
  ZMat ker(t.rows - rank, a.cols);
  for (long i = rank; i < t.rows; ++i)
    for (long j = 0; j < a.cols; ++j) ker(i - rank, j) = u(i, j);
  // normalize the presentation
  hnf_rows(ker);
  return ker;
}

Smith smith_form(const ZMat& a) {
  ZMat s = a;
  ZMat u = ZMat::identity(a.rows), v = ZMat::identity(a.cols);
  long n = std::min(a.rows, a.cols);

  auto col_op = [&](long j, long k, const Int& f) {  // col_j += f * col_k
    if (f == 0) return;
    for (long i = 0; i < s.rows; ++i) s(i, j) += f * s(i, k);
    for (long i = 0; i < v.rows; ++i) v(i, j) += f * v(i, k);
  };
  auto swap_cols = [&](long j, long k) {
    if (j == k) return;
    for (long i = 0; i < s.rows; ++i) std::swap(s(i, j), s(i, k));
    for (long i = 0; i < v.rows; ++i) std::swap(v(i, j), v(i, k));
  };

  long t = 0;
  for (; t < n; ++t) {
    // find smallest nonzero entry in the remaining block
    long pi = -1, pj = -1;
    for (long i = t; i < s.rows; ++i)
      for (long j = t; j < s.cols; ++j)
        if (s(i, j) != 0 &&
            (pi < 0 || abs(s(i, j)) < abs(s(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(s, t, pi);
    swap_rows(u, t, pi);
    swap_cols(t, pj);

    bool again = true;
    while (again) {
      again = false;
      for (long i = t + 1; i < s.rows; ++i) {
        Int q = s(i, t) / s(t, t);
        add_mul_row(s, i, t, -q);
        add_mul_row(u, i, t, -q);
        if (s(i, t) != 0) {
          swap_rows(s, t, i);
          swap_rows(u, t, i);
          again = true;
        }
      }
      for (long j = t + 1; j < s.cols; ++j) {
        Int q = s(t, j) / s(t, t);
        col_op(j, t, -q);
        if (s(t, j) != 0) {
          swap_cols(t, j);
          again = true;
        }
      }
    }
    // ensure divisibility of the remaining block by the pivot
    for (long i = t + 1; i < s.rows; ++i)
      for (long j = t + 1; j < s.cols; ++j)
        if (s(i, j) % s(t, t) != 0) {
          add_mul_row(s, t, i, 1);
          add_mul_row(u, t, i, 1);
          again = true;
          // redo elimination for this pivot
          --t;
          goto next_pivot;
        }
    if (s(t, t) < 0) {
      for (long j = 0; j < s.cols; ++j) s(t, j) = -s(t, j);
      for (long j = 0; j < u.cols; ++j) u(t, j) = -u(t, j);
    }
  next_pivot:;
  }

  Smith out;
  out.u = u;
  out.v = v;
  for (long i = 0; i < n; ++i) {
    if (s(i, i) == 0) break;
    out.diag.push_back(s(i, i));
  }
  return out;
}

std::optional<std::vector<Int>> z_solve(const ZMat& a, const std::vector<Int>& b) {
  // U A V = S  =>  A x = b with x = V y, S y = U b
  Smith sm = smith_form(a);
  std::vector<Int> ub = mat_apply(sm.u, b);
  std::vector<Int> y(a.cols, Int(0));
  for (long i = 0; i < static_cast<long>(ub.size()); ++i) {
    if (i < static_cast<long>(sm.diag.size()) && sm.diag[i] != 0) {
      Int q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ub[i].get_mpz_t(),
                  sm.diag[i].get_mpz_t());
      if (r != 0) return std::nullopt;
      y[i] = q;
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return mat_apply(sm.v, y);
}

Int z_det(const ZMat& a) {
  assert(a.rows == a.cols);
  long n = a.rows;
  if (n == 0) return Int(1);
  ZMat m = a;
  Int prev(1);
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      long piv = -1;
      for (long i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Int(0);
      swap_rows(m, k, piv);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

ZMat lattice_basis(const ZMat& gens) {
  ZMat h = gens;
  long r = hnf_rows(h);
  ZMat b(r, gens.cols);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < gens.cols; ++j) b(i, j) = h(i, j);
  return b;
}

bool lattice_contains(const ZMat& basis, const std::vector<Int>& x) {
  return z_solve(basis.transposed(), x).has_value();
}

bool lattice_subset(const ZMat& sub, const ZMat& sup) {
  for (long i = 0; i < sub.rows; ++i)
    if (!lattice_contains(sup, sub.row(i))) return false;
  return true;
}

ZMat lattice_saturation(const ZMat& gens) {
  if (gens.rows == 0) return lattice_basis(gens);
  return z_nullspace(z_nullspace(gens));
}

Int lattice_index(const ZMat& gens, long n) {
  ZMat b = lattice_basis(gens);
  if (b.rows != n) return Int(0);
  Int d = z_det(b);
  return abs(d);
}

std::vector<long> q_rref(QMat& m) {
  std::vector<long> pivots;
  long r = 0;
  for (long col = 0; col < m.cols && r < m.rows; ++col) {
    long piv = -1;
    for (long i = r; i < m.rows; ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (long c = 0; c < m.cols; ++c) std::swap(m(r, c), m(piv, c));
    Rat inv = Rat(1) / m(r, col);
    for (long c = 0; c < m.cols; ++c) m(r, c) *= inv;
    for (long i = 0; i < m.rows; ++i) {
      if (i == r || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (long c = 0; c < m.cols; ++c) m(i, c) -= f * m(r, c);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

long q_rank(QMat m) { return static_cast<long>(q_rref(m).size()); }

QMat q_nullspace(const QMat& a) {
  QMat m = a;
  std::vector<long> piv = q_rref(m);
  std::vector<bool> is_piv(a.cols, false);
  for (long p : piv) is_piv[p] = true;
  QMat ker(a.cols - static_cast<long>(piv.size()), a.cols);
  long k = 0;
  for (long free = 0; free < a.cols; ++free) {
    if (is_piv[free]) continue;
    ker(k, free) = Rat(1);
    for (size_t i = 0; i < piv.size(); ++i)
      ker(k, piv[i]) = -m(static_cast<long>(i), free);
    ++k;
  }
  return ker;
}

std::optional<QMat> q_inverse(const QMat& a) {
  assert(a.rows == a.cols);
  long n = a.rows;
  QMat m(n, 2 * n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = Rat(1);
  }
  std::vector<long> piv = q_rref(m);
  if (static_cast<long>(piv.size()) != n || piv.back() != n - 1)
    return std::nullopt;
  QMat inv(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
  return inv;
}

std::optional<std::vector<Rat>> q_solve(const QMat& a, const std::vector<Rat>& b) {
  QMat m(a.rows, a.cols + 1);
  for (long i = 0; i < a.rows; ++i) {
    for (long j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
    m(i, a.cols) = b[i];
  }
  std::vector<long> piv = q_rref(m);
  if (!piv.empty() && piv.back() == a.cols) return std::nullopt;
  std::vector<Rat> x(a.cols, Rat(0));
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m(static_cast<long>(i), a.cols);
  return x;
}

std::vector<Rat> charpoly(const QMat& m) {
  // Faddeev-LeVerrier: exact over Q, fine at these dimensions
  assert(m.rows == m.cols);
  long n = m.rows;
  std::vector<Rat> c(static_cast<size_t>(n) + 1);
  c[n] = Rat(1);
  QMat mk = QMat::identity(n);
  for (long k = 1; k <= n; ++k) {
    mk = mat_mul(m, mk);
    Rat tr(0);
    for (long i = 0; i < n; ++i) tr += mk(i, i);
    Rat ck = -tr / Rat(k);
    c[n - k] = ck;
    for (long i = 0; i < n; ++i) mk(i, i) += ck;
  }
  return c;
}

}  // namespace wct
