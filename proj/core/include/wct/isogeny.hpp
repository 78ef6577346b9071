#pragma once

#include <wct/mulrel.hpp>
#include <wct/rootsys.hpp>

namespace wct {

// finite group acting on a character lattice Z^rank by integer matrices
struct GaloisModule {
  long rank = 0;
  long group_order = 0;
  std::vector<ZMat> action;  // one matrix per group element, closed set

  // throws input_error unless the matrices are unimodular, include the
  // identity, close under multiplication, and match the declared sizes
  void validate() const;
};

// element data: the value of every standard basis character, extended to all
// characters multiplicatively; galois_images optionally declares how each
// group element acts on the field (image of the generator), enabling the
// compatibility spot-check
struct TorusElementData {
  GaloisModule module;
  FieldPtr field;
  std::vector<AlgebraicNumber> values;
  std::vector<AlgebraicNumber> galois_images;  // empty or one per element
};

struct value_inconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_irreducible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct kernel_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct value_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// value of the character chi on the element: the monomial in the basis values
AlgebraicNumber character_value(const TorusElementData& t,
                                const std::vector<Int>& chi);

struct NuData {
  ZMat orbit;   // rank x group_order, column k = action[k] * chi
  ZMat image;   // basis rows of the Z-span of the orbit
  ZMat kernel;  // basis rows of { a : orbit * a lands in the value relations }
  Completeness completeness = Completeness::certified;  // of the relations
};

// the evaluation map Z[G] -> Z^rank, a -> sum a_k (g_k chi), together with
// the exponent vectors it sends to torsion values on the element
NuData nu_data(const GaloisModule& m, const std::vector<Int>& chi,
               const TorusElementData& element, const SearchBudget& budget = {});

struct IsogenyResult {
  ZMat pi_star;  // rank2 x rank1 integer matrix on character lattices
  Int d;         // index of the orbit span of chi1 in Z^rank1
  Int m1, m2;    // m1 = d^2, m2 = d
};

// builds pi_star with pi_star(chi1) = d chi2 from matching evaluation
// kernels, then verifies the element identity exactly: for every basis
// character e, (pi_star e)(t2) ^ d = e(t1) ^ (d^2)
IsogenyResult build_isogeny(const TorusElementData& t1,
                            const std::vector<Int>& chi1,
                            const TorusElementData& t2,
                            const std::vector<Int>& chi2,
                            const SearchBudget& budget = {});

// does a rational multiple of pi_star carry the first root system onto the
// second (root coordinates written in the respective character lattices)
MatchResult check_root_compat(const IsogenyResult& result,
                              const RootSystem& rs1, const RootSystem& rs2);

}  // namespace wct
