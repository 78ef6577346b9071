#include <wct/titsindex.hpp>

#include <algorithm>
#include <set>

namespace wct {

namespace {

// partition problems of `orbits` over {0..rank-1}, appended as text
void check_partition(const std::vector<std::vector<long>>& orbits, long rank,
                     std::vector<std::string>& problems) {
  std::vector<long> seen(rank, 0);
  for (const std::vector<long>& orb : orbits) {
    if (orb.empty()) problems.push_back("empty orbit");
    for (long v : orb) {
      if (v < 0 || v >= rank) {
        problems.push_back("orbit vertex out of range");
        continue;
      }
      ++seen[v];
    }
  }
  for (long v = 0; v < rank; ++v) {
    if (seen[v] == 0) problems.push_back("vertex missing from the orbits");
    if (seen[v] > 1) problems.push_back("vertex repeated across orbits");
  }
}

}  // namespace

IndexReport validate_index(const IndexDatum& d) {
  IndexReport rep;
  d.type.validate();
  long rank = d.type.rank;
  check_partition(d.orbits, rank, rep.problems);

  std::set<long> dist;
  for (long v : d.distinguished) {
    if (v < 0 || v >= rank) {
      rep.problems.push_back("distinguished vertex out of range");
      continue;
    }
    if (!dist.insert(v).second)
      rep.problems.push_back("distinguished vertex repeated");
  }
  for (const std::vector<long>& orb : d.orbits) {
    long in = 0;
    for (long v : orb)
      if (dist.count(v)) ++in;
    if (in != 0 && in != static_cast<long>(orb.size()))
      rep.problems.push_back("distinguished set cuts an orbit");
  }
  rep.ok = rep.problems.empty();
  rep.quasi_split = rep.ok && static_cast<long>(dist.size()) == rank;
  return rep;
}

namespace {

void check_family(const LocalIndexFamily& f) {
  f.type.validate();
  std::vector<std::string> problems;
  check_partition(f.global_orbits, f.type.rank, problems);
  if (!problems.empty())
    throw inconsistent_orbits("global orbits: " + problems.front());

  for (const auto& [place, datum] : f.per_place) {
    if (!(datum.type == f.type))
      throw inconsistent_orbits("local datum type differs at " + place.str());
    IndexReport rep = validate_index(datum);
    if (!rep.ok)
      throw inconsistent_orbits("local datum at " + place.str() + ": " +
                                rep.problems.front());
    // each local orbit must sit inside one global orbit
    for (const std::vector<long>& lorb : datum.orbits) {
      bool inside = false;
      for (const std::vector<long>& gorb : f.global_orbits) {
        bool all = true;
        for (long v : lorb)
          if (std::find(gorb.begin(), gorb.end(), v) == gorb.end()) all = false;
        if (all) inside = true;
      }
      if (!inside)
        throw inconsistent_orbits(
            "local orbit crosses global orbits at " + place.str());
    }
  }
}

}  // namespace

GlobalIndexResult everywhere_distinguished(const LocalIndexFamily& f) {
  check_family(f);
  GlobalIndexResult out;
  for (const std::vector<long>& gorb : f.global_orbits) {
    bool everywhere = true;
    for (const auto& [place, datum] : f.per_place) {
      std::set<long> dist(datum.distinguished.begin(),
                          datum.distinguished.end());
      for (long v : gorb)
        if (!dist.count(v)) everywhere = false;
    }
    if (everywhere) out.orbits.push_back(gorb);
  }
  out.global_rank = static_cast<long>(out.orbits.size());
  return out;
}

MinRankResult min_rank_check(const LocalIndexFamily& f) {
  check_family(f);
  MinRankResult out;
  // the unlisted places are quasi-split: every global orbit distinguished
  long min_rank = static_cast<long>(f.global_orbits.size());
  for (const auto& [place, datum] : f.per_place) {
    std::set<long> dist(datum.distinguished.begin(),
                        datum.distinguished.end());
    long local = 0;
    for (const std::vector<long>& orb : datum.orbits) {
      bool all = true;
      for (long v : orb)
        if (!dist.count(v)) all = false;
      if (all) ++local;
    }
    min_rank = std::min(min_rank, local);
  }
  out.min_local_rank = min_rank;
  out.equals_global = min_rank == everywhere_distinguished(f).global_rank;
  out.formula_applicable =
      f.type.family == Family::B || f.type.family == Family::C ||
      f.type.family == Family::F || f.type.family == Family::G ||
      (f.type.family == Family::E && f.type.rank == 8);
  return out;
}

}  // namespace wct
