#pragma once

#include <wct/mulrel.hpp>
#include <wct/rootsys.hpp>

namespace wct {

// torus data of a semisimple element: the value of every root on it, indexed
// like build_root_system(type).roots; the absolute values are read at the
// largest real embedding of the field
struct RootValueProfile {
  RootSystemType type;
  FieldPtr field;
  std::vector<AlgebraicNumber> values;
  std::string element_label;
};

// A1 profile with alpha -> v and -alpha -> 1/v
RootValueProfile rank_one_profile(const AlgebraicNumber& v,
                                  const std::string& label = "");

struct LengthTerm {
  Rat coeff;
  AlgebraicNumber base;
};

// closed-geodesic length: lambda^2 = sum coeff * (log |base|)^2, with the
// interval enclosing lambda itself
struct LengthValue {
  std::vector<LengthTerm> exact_form;
  Interval approx;
  long period_divisor = 1;
};

struct elliptic_element : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct missing_character_value : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct real_ramified : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sqrt of the sum of squared root logs, with multiplicatively dependent
// values combined onto a common base so coefficients stay rational
LengthValue length(const RootValueProfile& p, long precision_bits = 128);

// values of the doubled simple roots on the profile, validated against it;
// entry i is the exact number whose log is the i-th Lyapunov coordinate
std::vector<AlgebraicNumber> lyapunov_vector(
    const RootValueProfile& p,
    const std::vector<AlgebraicNumber>& simple_positive_characters);

enum class SpanCompare { equal, not_equal, undecided };

struct QSpanResult {
  SpanCompare verdict = SpanCompare::equal;
  int witness_side = 0;     // 1 or 2 when a witness is present
  long witness_index = -1;  // index of the unmatched member
  long bound = 0;           // backs an undecided verdict
};

// Q-span comparison of single-log length sets: equal iff every member of
// either side has a rational ratio to some member of the other
QSpanResult qspan_equal(const std::vector<LengthValue>& l1,
                        const std::vector<LengthValue>& l2,
                        const SearchBudget& budget = {});

struct QuaternionOrderBox {
  Rat a, b;  // Hilbert pair of the quaternion algebra
  long coefficient_bound = 1;
};

// hyperbolic elements found in the half-integer coefficient box: distinct
// absolute traces above two, each with both length normalizations
struct FuchsianSample {
  std::vector<Rat> traces;
  std::vector<LengthValue> lengths_std;      // 2 log(lambda)
  std::vector<LengthValue> lengths_killing;  // 2 sqrt(2) log(lambda)
};

FuchsianSample fuchsian_sample(const QuaternionOrderBox& box,
                               long precision_bits = 128);

}  // namespace wct
