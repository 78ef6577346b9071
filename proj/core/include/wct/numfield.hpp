#pragma once

#include <wct/interval.hpp>
#include <wct/poly.hpp>
#include <wct/zmat.hpp>

#include <compare>
#include <map>
#include <memory>
#include <optional>

namespace wct {

// residue a/b mod 1, kept reduced with 0 <= a < b
struct QmodZ {
  Int num{0}, den{1};

  QmodZ() = default;
  explicit QmodZ(const Rat& q);
  QmodZ(long a, long b) : QmodZ(Rat(a, b)) {}

  static QmodZ parse(const std::string& s);

  Rat rat() const { return Rat(num, den); }
  Int order() const { return den; }
  bool is_zero() const { return num == 0; }
  std::string str() const;

  QmodZ operator+(const QmodZ& o) const { return QmodZ(rat() + o.rat()); }
  QmodZ operator-() const { return QmodZ(-rat()); }
  QmodZ operator-(const QmodZ& o) const { return QmodZ(rat() - o.rat()); }
  QmodZ scaled(const Int& k) const { return QmodZ(Rat(k) * rat()); }

  auto operator<=>(const QmodZ&) const = default;
};

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

struct AlgebraicNumber;

// number field Q[x]/(min_poly), degree <= 8, min_poly monic irreducible
class NumberField {
 public:
  static FieldPtr rationals();
  static FieldPtr quadratic(long d);
  static FieldPtr cyclotomic(long n);
  static FieldPtr from_min_poly(const ZPoly& monic_irreducible,
                                const std::string& label = "");

  long degree() const { return degree_; }
  const ZPoly& min_poly() const { return min_poly_; }
  const std::string& label() const { return label_; }
  bool same_as(const NumberField& o) const { return min_poly_ == o.min_poly_; }

  long num_real_embeddings() const;
  long num_complex_pairs() const;
  long num_arch_places() const {
    return num_real_embeddings() + num_complex_pairs();
  }

  // reduce a polynomial in the generator modulo min_poly
  std::vector<Rat> reduce(std::vector<Rat> coeffs) const;

 private:
  friend struct EmbeddingCache;
  NumberField(ZPoly poly, std::string label);

  ZPoly min_poly_;
  std::string label_;
  long degree_;
  std::vector<std::vector<Rat>> power_table_;  // x^deg .. x^(2deg-2) reduced
  mutable std::shared_ptr<struct EmbeddingCache> emb_;
};

struct AlgebraicNumber {
  FieldPtr field;
  std::vector<Rat> coords;  // in the power basis 1, x, .., x^(deg-1)

  AlgebraicNumber() = default;
  AlgebraicNumber(FieldPtr f, std::vector<Rat> c);
  static AlgebraicNumber from_rat(const FieldPtr& f, const Rat& q);
  static AlgebraicNumber gen(const FieldPtr& f);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rat as_rational() const;  // requires is_rational
  std::string str() const;

  bool operator==(const AlgebraicNumber& o) const;
};

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a);
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator*(const Rat& c, const AlgebraicNumber& a);
AlgebraicNumber inverse(const AlgebraicNumber& a);
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber pow(const AlgebraicNumber& a, const Int& e);

QMat mult_matrix(const AlgebraicNumber& a);
Rat norm(const AlgebraicNumber& a);
Rat trace(const AlgebraicNumber& a);
QPoly min_poly_of(const AlgebraicNumber& a);  // monic over Q
// order of a as a root of unity, nullopt when not torsion
std::optional<long> root_of_unity_order(const AlgebraicNumber& a);

// ---- places ----

enum class QuadTag { none, split0, split1, inert, ramified };

struct Place {
  enum class Kind { arch, finite };
  Kind kind = Kind::finite;
  long arch_index = 0;  // arch places: reals first, then complex pairs
  Int p{0};             // finite: rational prime below
  QuadTag quad = QuadTag::none;

  static Place arch(long index) {
    Place v;
    v.kind = Kind::arch;
    v.arch_index = index;
    return v;
  }
  static Place finite(Int prime, QuadTag t = QuadTag::none) {
    Place v;
    v.p = std::move(prime);
    v.quad = t;
    return v;
  }

  std::string str() const;  // "inf0", "p5", "p5a", "p5b", "p5i", "p5r"
  static Place parse(const std::string& s);
  auto operator<=>(const Place&) const = default;
};

enum class SplittingType { split, inert, ramified };
std::string to_string(SplittingType t);

// behaviour of the rational prime p in Q(sqrt d), d squarefree, not 0 or 1
SplittingType splitting_type(long d, const Int& p);

// p-adic valuation of a nonzero rational
long valuation(const Rat& x, const Int& p);
// valuation at a finite place of a quadratic field Q(sqrt d)
long quad_valuation(const AlgebraicNumber& x, long d, const Place& v);

// ---- certified archimedean embeddings ----

struct ArchValue {
  bool real = true;
  Interval re, im;
  Interval abs() const;
};

// value of x under arch embedding `index`, interval outward-rounded so the
// result width is below 2^-prec relative to its magnitude
ArchValue embed(const AlgebraicNumber& x, long index, long prec_bits);

// ---- matrices over a number field and trace fields ----

struct FMat {
  FieldPtr field;
  long n = 0;
  std::vector<AlgebraicNumber> a;

  FMat() = default;
  FMat(FieldPtr f, long size);
  AlgebraicNumber& operator()(long i, long j) { return a[i * n + j]; }
  const AlgebraicNumber& operator()(long i, long j) const { return a[i * n + j]; }
  static FMat identity(FieldPtr f, long size);
};

FMat fmat_mul(const FMat& x, const FMat& y);
std::optional<FMat> fmat_inverse(const FMat& m);
AlgebraicNumber fmat_trace(const FMat& m);

struct TraceFieldResult {
  FieldPtr field;
  bool stabilized = false;
  long dimension = 0;
};

// subfield generated by traces of words of length <= word_bound in the
// generators and their inverses; adjoint_traces uses tr(w) tr(w^-1) - 1
TraceFieldResult trace_field(const std::vector<FMat>& generators,
                             long word_bound, bool adjoint_traces = false);

// ---- compositum ----

struct CompositumMap {
  FieldPtr field;                 // compositum presentation
  std::vector<Rat> image_gen1;    // image of first generator, coords in field
  std::vector<Rat> image_gen2;
};

struct field_too_large : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// smallest common presentation of two fields (degree capped at 8)
CompositumMap compositum(const FieldPtr& k1, const FieldPtr& k2);
// move x into field `target` along the image of its generator
AlgebraicNumber transport(const AlgebraicNumber& x, const FieldPtr& target,
                          const std::vector<Rat>& image_gen);

}  // namespace wct
