#pragma once

#include <wct/rat.hpp>

#include <cassert>
#include <vector>

namespace wct {

// dense row-major matrices; lattices are presented by generator rows
template <class T>
struct Mat {
  long rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r * c)) {}
  Mat(long r, long c, std::initializer_list<T> v) : rows(r), cols(c), a(v) {
    assert(static_cast<long>(a.size()) == r * c);
  }

  T& operator()(long i, long j) { return a[static_cast<size_t>(i * cols + j)]; }
  const T& operator()(long i, long j) const {
    return a[static_cast<size_t>(i * cols + j)];
  }

  static Mat identity(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  Mat transposed() const {
    Mat t(cols, rows);
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<T> row(long i) const {
    return std::vector<T>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

using ZMat = Mat<Int>;
using QMat = Mat<Rat>;

template <class T>
Mat<T> mat_mul(const Mat<T>& x, const Mat<T>& y) {
  assert(x.cols == y.rows);
  Mat<T> r(x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i)
    for (long k = 0; k < x.cols; ++k) {
      const T& v = x(i, k);
      if (v == 0) continue;
      for (long j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

template <class T>
std::vector<T> mat_apply(const Mat<T>& m, const std::vector<T>& v) {
  assert(m.cols == static_cast<long>(v.size()));
  std::vector<T> r(m.rows);
  for (long i = 0; i < m.rows; ++i) {
    T s(0);
    for (long j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

inline QMat to_qmat(const ZMat& m) {
  QMat q(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
  return q;
}

// row Hermite normal form (echelon, positive pivots, reduced above);
// returns rank, H in place; optionally tracks U with H = U * A
long hnf_rows(ZMat& m, ZMat* u = nullptr);

// basis rows of { x in Z^cols : A x = 0 }; the kernel lattice is saturated
ZMat z_nullspace(const ZMat& a);

// Smith normal form: returns diagonal d_1 | d_2 | ... and U, V with U A V = S
struct Smith {
  std::vector<Int> diag;
  ZMat u, v;  // unimodular
};
Smith smith_form(const ZMat& a);

// one integer solution of A x = b, if any
std::optional<std::vector<Int>> z_solve(const ZMat& a, const std::vector<Int>& b);

// determinant (Bareiss, fraction free)
Int z_det(const ZMat& a);

// --- lattice helpers (lattice = Z-span of the rows of a matrix) ---

// canonical basis of the row lattice (nonzero HNF rows)
ZMat lattice_basis(const ZMat& gens);
// is x in the row lattice of B
bool lattice_contains(const ZMat& basis, const std::vector<Int>& x);
// is every row of sub inside the row lattice of sup
bool lattice_subset(const ZMat& sub, const ZMat& sup);
// saturation: (Q-span of rows) intersected with Z^n
ZMat lattice_saturation(const ZMat& gens);
// index [Z^n : L] for a full-rank row lattice in Z^n (0 when rank deficient)
Int lattice_index(const ZMat& gens, long n);

// --- rational linear algebra ---

// reduced row echelon form; returns pivot columns
std::vector<long> q_rref(QMat& m);
long q_rank(QMat m);
// basis rows of { x in Q^cols : A x = 0 }
QMat q_nullspace(const QMat& a);
std::optional<QMat> q_inverse(const QMat& a);
// one solution of A x = b over Q, if any
std::optional<std::vector<Rat>> q_solve(const QMat& a, const std::vector<Rat>& b);

// characteristic polynomial det(x I - M), coefficients low to high
std::vector<Rat> charpoly(const QMat& m);

}  // namespace wct
