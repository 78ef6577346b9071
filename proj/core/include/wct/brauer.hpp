#pragma once

#include <wct/numfield.hpp>

#include <utility>

namespace wct {

struct degree_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct base_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invalid_degree : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_split : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct even_degree : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// central simple algebra of degree d over a number field, recorded through
// its local invariants in Q/Z; places not listed carry invariant zero
struct CSAInvariants {
  FieldPtr base_field;
  long degree = 0;  // d >= 2
  std::vector<std::pair<Place, QmodZ>> invariants;
};

// consistency check result; problem holds the first violated condition
struct CsaReport {
  bool ok = false;
  std::string problem;
};

// checks torsion orders against the degree, the archimedean value
// constraints, and that the invariants sum to zero
CsaReport validate_csa(const CSAInvariants& a);

// places with nonzero invariant, sorted; the algebra splits exactly at the
// co-finite complement
std::vector<Place> ramified_places(const CSAInvariants& a);

// a field extension known only through its local degree profile
struct ExtensionLocalDegrees {
  long degree = 0;
  std::vector<std::pair<Place, long>> local_degrees;
};

// true iff at every ramified place the invariant order divides the recorded
// local degree, which characterizes the maximal subfields
bool embeds_as_maximal_subfield(const ExtensionLocalDegrees& ext,
                                const CSAInvariants& a);

struct CompareResult {
  bool isomorphic = false;
  bool anti_isomorphic = false;
  bool same_maximal_subfields = false;
  bool same_split_places = false;
};

// pointwise comparison of two invariant maps over the same base field:
// equality, negation, equal orders, and equal zero sets
CompareResult compare(const CSAInvariants& a, const CSAInvariants& b);

// degree-d pair ramified at four finite places, with invariants 1/d, 1/d,
// -1/d, -1/d against 1/d, -1/d, 1/d, -1/d; with the refinement flag (even d,
// five places) both algebras also carry 1/2 at the real place and at the
// fifth place
std::pair<CSAInvariants, CSAInvariants> build_example_65(
    long d, const std::vector<Place>& places, bool real_refinement = false);

// a rational place that splits in the quadratic extension, with the two
// places above it
struct SplitPlaceTriple {
  Place below;
  Place above0;
  Place above1;
};

// algebra with a second-kind involution datum: the quadratic extension, the
// split places carrying the nonzero invariants, and the declared behavior
// at the remaining real places
struct InvolutionPairData {
  long quad_d = 0;  // the extension is Q(sqrt(quad_d))
  long degree = 0;  // odd, > 1
  std::vector<SplitPlaceTriple> split_pairs;
  CSAInvariants algebra;
  bool quasi_split_at_inert_reals = true;  // declared choice, not derived
};

struct Example66 {
  InvolutionPairData first;
  InvolutionPairData second;
};

// odd-degree pair over Q(sqrt(quad_d)) ramified above two split rational
// primes, pairing the places straight in one algebra and crossed in the
// other
Example66 build_example_66(long d, long quad_d, const Int& p1, const Int& p2);

// embedding test for extensions carrying the order-two automorphism over
// the quadratic field: decided entirely by the local degrees at the places
// above the two split rational primes
bool embeds_with_involution(const InvolutionPairData& a,
                            const ExtensionLocalDegrees& ext);

}  // namespace wct
