#pragma once

#include <wct/numfield.hpp>
#include <wct/rootsys.hpp>

namespace wct {

// index datum over one field: a partition of the simple roots into star
// orbits and the orbit-closed set of distinguished vertices
struct IndexDatum {
  RootSystemType type;
  std::vector<std::vector<long>> orbits;  // partition of {0..rank-1}
  std::vector<long> distinguished;        // simple-root indices
};

struct IndexReport {
  bool ok = true;
  bool quasi_split = false;  // every vertex distinguished
  std::vector<std::string> problems;
};

IndexReport validate_index(const IndexDatum& d);

// local index data over one diagram; places absent from the list are
// quasi-split there (every orbit distinguished)
struct LocalIndexFamily {
  RootSystemType type;
  std::vector<std::vector<long>> global_orbits;
  std::vector<std::pair<Place, IndexDatum>> per_place;
};

struct inconsistent_orbits : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalIndexResult {
  std::vector<std::vector<long>> orbits;  // distinguished at every place
  long global_rank = 0;
};

// the global orbits whose vertices are distinguished at every listed place
GlobalIndexResult everywhere_distinguished(const LocalIndexFamily& f);

struct MinRankResult {
  long min_local_rank = 0;
  bool equals_global = false;
  // the local-global rank equality is a theorem only for types B, C, E8,
  // F4, G2; elsewhere the numbers are reported without that reading
  bool formula_applicable = false;
};

MinRankResult min_rank_check(const LocalIndexFamily& f);

}  // namespace wct
