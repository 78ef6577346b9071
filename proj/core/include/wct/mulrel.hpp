#pragma once

#include <wct/numfield.hpp>
#include <wct/zmat.hpp>

#include <optional>

namespace wct {

// tuple of nonzero numbers in a common field, the carrier for relation search
struct MultiplicativeTuple {
  FieldPtr field;
  std::vector<AlgebraicNumber> values;

  MultiplicativeTuple() = default;
  MultiplicativeTuple(FieldPtr f, std::vector<AlgebraicNumber> v);
  static MultiplicativeTuple rationals(const std::vector<Rat>& v);

  long size() const { return static_cast<long>(values.size()); }
};

struct SearchBudget {
  long exponent_bound = 20;
  long prime_bound = 10000;
  long precision_bits = 128;
};

enum class Completeness { certified, bound_relative };

// saturated lattice of exponent vectors e with prod values^e a root of unity;
// torsion_orders[k] is the exact order of the value of basis row k
struct RelationLattice {
  long tuple_size = 0;
  ZMat basis;
  std::vector<long> torsion_orders;
  Completeness completeness = Completeness::certified;
  long bound = 0;  // exponent bound backing a bound_relative answer
};

struct precision_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// every basis row is exactly verified by powering in the field; completeness
// is certified when the lattice provably equals the full relation lattice,
// else no further relation exists with max |exponent| <= budget bound
RelationLattice relation_lattice(const MultiplicativeTuple& t,
                                 const SearchBudget& budget = {});

// value of prod values^e in the field (exact powering)
AlgebraicNumber tuple_power(const MultiplicativeTuple& t,
                            const std::vector<Int>& e);

enum class WeakCommMode { strict, neat };

struct WeakCommWitness {
  std::vector<Int> m, n;
  AlgebraicNumber common_value;  // prod e1^m = prod e2^n, nontrivial
};

struct WeakCommResult {
  bool yes = false;
  std::optional<WeakCommWitness> witness;
  Completeness completeness = Completeness::certified;  // backs a no answer
  long bound = 0;
};

// yes iff some prod e1^m = prod e2^n with the common value != 1 (strict) or
// not a root of unity (neat); tuples are moved into a common field first
WeakCommResult is_weakly_commensurable(const MultiplicativeTuple& e1,
                                       const MultiplicativeTuple& e2,
                                       WeakCommMode mode,
                                       const SearchBudget& budget = {});

struct LogRatioResult {
  std::optional<Rat> ratio;  // log|a| / log|b| when dependent
  Completeness completeness = Completeness::certified;
  long bound = 0;
};

// reduced p/q with a^q = (root of unity) * b^p, requires |a| > 1, |b| > 1 at
// the designated place: the largest real embedding of the common field, or
// the first archimedean place when no real embedding exists
LogRatioResult log_ratio_rational(const AlgebraicNumber& a,
                                  const AlgebraicNumber& b,
                                  const SearchBudget& budget = {});

}  // namespace wct
