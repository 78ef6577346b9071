#pragma once

#include <wct/zmat.hpp>

#include <map>
#include <optional>
#include <string>

namespace wct {

struct size_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family { A, B, C, D, E, F, G };

struct RootSystemType {
  Family family = Family::A;
  long rank = 1;

  static RootSystemType parse(const std::string& s);  // "A2", "D4", ...
  std::string str() const;
  void validate() const;  // throws input_error on invalid (family, rank)
  bool operator==(const RootSystemType&) const = default;
};

// irreducible reduced root system in Bourbaki ambient coordinates, stored as
// integer vectors; the inner product is scaled so short roots have squared
// length 2
struct RootSystem {
  RootSystemType type;
  long rank = 0;
  long ambient = 0;
  std::vector<std::vector<Int>> roots;         // ambient coordinates
  std::vector<std::vector<Int>> simple;        // ambient coordinates, Bourbaki order
  std::vector<std::vector<Int>> roots_simple;  // same roots in simple-root coordinates
  QMat gram;                                   // ambient x ambient
  ZMat cartan;                                 // c_ij = <alpha_i, alpha_j^vee>

  // inner product of ambient vectors
  Rat inner(const std::vector<Int>& x, const std::vector<Int>& y) const;
  // index into roots of a vector in simple-root coordinates, -1 if absent
  long root_index(const std::vector<Int>& simple_coords) const;
  bool is_root(const std::vector<Int>& simple_coords) const {
    return root_index(simple_coords) >= 0;
  }

  std::map<std::vector<Int>, long> index_map;  // simple coords -> root index
};

RootSystem build_root_system(RootSystemType t);

// group elements act on simple-root coordinates by integer matrices
// (columns are the images of the simple roots)
struct OrthoElement {
  ZMat matrix;
  std::vector<long> root_perm;  // image index of each root
};

// permutation induced on rs.roots; throws input_error if the matrix does not
// preserve the root set
std::vector<long> root_permutation(const RootSystem& rs, const ZMat& m);

// matrix of the reflection in simple root i, acting on simple-root coordinates
ZMat simple_reflection(const RootSystem& rs, long i);

// breadth-first closure of the generated group; throws size_limit_error at cap
std::vector<ZMat> group_closure(const std::vector<ZMat>& generators, long cap);

struct WeylInfo {
  Int order;
  long nontrivial_classes = 0;
  std::vector<ZMat> elements;
};

WeylInfo weyl_group(const RootSystem& rs, long cap = 1000000);

enum class AutQuotient { trivial, order2_minus_identity, order2_other, S3 };
std::string to_string(AutQuotient q);

struct AutStructure {
  Int aut_order;
  AutQuotient quotient = AutQuotient::trivial;
  std::vector<ZMat> diagram_autos;  // nontrivial diagram automorphisms
};

AutStructure automorphism_structure(const RootSystem& rs, long cap = 1000000);

// do the given elements generate a group containing every simple reflection
bool contains_weyl(const std::vector<ZMat>& subgroup, const RootSystem& rs,
                   long cap = 1000000);

// exact irreducibility of the generated group acting on Q[Phi] (simple-root
// coordinates); decided with certificates, see irreducible.cpp
bool acts_irreducibly(const std::vector<ZMat>& subgroup, const RootSystem& rs,
                      long cap = 1000000);

// same decision for an arbitrary finite set of rational matrices acting on
// Q^n; exposed for tests and for character-lattice actions
bool acts_irreducibly_q(const std::vector<QMat>& generators);

struct MatchResult {
  enum class Kind { scaled, span_only, no_match } kind = Kind::no_match;
  Rat t;  // valid when kind == scaled
};

// linear_map is rank2 x rank1 rational, written in simple-root coordinates
MatchResult match_root_systems(const QMat& linear_map, const RootSystem& rs1,
                               const RootSystem& rs2);

struct not_diagram_automorphism : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// orbit partition of the simple roots under the group generated by the given
// permutations of {0..rank-1}; each generator must preserve Cartan integers
std::vector<std::vector<long>> star_orbits(
    const std::vector<std::vector<long>>& generators, const RootSystem& rs);

}  // namespace wct
