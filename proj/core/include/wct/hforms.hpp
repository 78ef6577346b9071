#pragma once

#include <wct/numfield.hpp>
#include <wct/rootsys.hpp>

namespace wct {

struct unsupported_type : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct unbalanceable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct no_split_places : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// center size ell of the simply connected group and the character order d
struct CenterData {
  RootSystemType group_type;
  long ell = 0;
  long d = 0;  // divides ell; defaults to ell (full character order)
};

// ell by type: n+1 for A_n (n > 1), 4 for D_{2n+1} (n > 1), 3 for E6
CenterData center_order(RootSystemType t);

// seed local invariant at one place
struct SeedInvariant {
  Place v;
  QmodZ rho;
};

// the place data of the construction: seeds on V, and 2(t+1) auxiliary
// places v'_0, v''_0, ..., v'_t, v''_t with their order-ell generators
struct PlaceLayout {
  std::vector<SeedInvariant> seeds;
  std::vector<Place> split_places;  // even count, pairs (v'_j, v''_j)
  std::vector<QmodZ> generators;    // one per split place, chi value 1/d

  long t() const { return static_cast<long>(split_places.size()) / 2 - 1; }
};

// one local-invariant vector x(epsilon): support with values, plus the sign
// pattern that produced it
struct InvariantVector {
  std::vector<std::pair<Place, QmodZ>> components;  // layout order
  std::vector<int> epsilon;
};

// the vector with seeds on V, the generator at v'_0, the balancing solution
// at v''_0, and the sign-twisted generators at the remaining pairs; the
// chi-weighted sum over all places is zero
InvariantVector build_invariant_vector(const PlaceLayout& layout,
                                       const CenterData& center,
                                       const std::vector<int>& epsilon);

struct FamilyReport {
  long t = 0;
  long count = 0;  // 2^t
  bool globally_distinct = false;
  bool locally_pm_equal = false;
  std::vector<std::string> details;  // failing pairs, empty when certified
  std::vector<std::string> notes;    // computed vs consumed statements
};

// builds all 2^t vectors (sign patterns ordered as binary strings) and
// checks pairwise x != +-y globally and x_v = +-y_v at every place
FamilyReport certify_family(const PlaceLayout& layout,
                            const CenterData& center, long t);

struct RecipeResult {
  PlaceLayout layout;
  CenterData center;
  std::vector<std::string> notes;  // declared scenario choices
};

// scenario assembly over a real quadratic field: two archimedean seed
// declarations plus 2(t+1) places above split primes found below the bound
RecipeResult recipe_914(RootSystemType type, long real_quadratic_d,
                        const std::vector<Rat>& arch_seeds, long t,
                        long prime_bound = 200);

}  // namespace wct
