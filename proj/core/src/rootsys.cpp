#include <wct/rootsys.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace wct {

RootSystemType RootSystemType::parse(const std::string& s) {
  if (s.size() < 2) throw input_error("bad root system type: " + s);
  RootSystemType t;
  switch (s[0]) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'G': t.family = Family::G; break;
    default: throw input_error("bad root system type: " + s);
  }
  try {
    t.rank = std::stol(s.substr(1));
  } catch (const std::exception&) {
    throw input_error("bad root system type: " + s);
  }
  t.validate();
  return t;
}

std::string RootSystemType::str() const {
  static const char* names = "ABCDEFG";
  std::ostringstream os;
  os << names[static_cast<int>(family)] << rank;
  return os.str();
}

void RootSystemType::validate() const {
  if (rank < 1 || rank > 12) throw input_error("rank out of range: " + str());
  switch (family) {
    case Family::A: return;
    case Family::B:
    case Family::C:
      if (rank < 2) throw input_error("B/C need rank >= 2: " + str());
      return;
    case Family::D:
      if (rank < 3) throw input_error("D needs rank >= 3: " + str());
      return;
    case Family::E:
      if (rank < 6 || rank > 8) throw input_error("E rank must be 6..8: " + str());
      return;
    case Family::F:
      if (rank != 4) throw input_error("F rank must be 4: " + str());
      return;
    case Family::G:
      if (rank != 2) throw input_error("G rank must be 2: " + str());
      return;
  }
  throw input_error("bad family");
}

Rat RootSystem::inner(const std::vector<Int>& x, const std::vector<Int>& y) const {
  Rat s(0);
  for (long i = 0; i < ambient; ++i)
    for (long j = 0; j < ambient; ++j)
      if (gram(i, j) != 0) s += gram(i, j) * Rat(x[i] * y[j]);
  return s;
}

long RootSystem::root_index(const std::vector<Int>& simple_coords) const {
  auto it = index_map.find(simple_coords);
  return it == index_map.end() ? -1 : it->second;
}

namespace {

long expected_root_count(const RootSystemType& t) {
  long n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

std::vector<Int> vec(std::initializer_list<long> v) {
  std::vector<Int> r;
  for (long x : v) r.emplace_back(x);
  return r;
}

}  // namespace

RootSystem build_root_system(RootSystemType t) {
  t.validate();
  RootSystem rs;
  rs.type = t;
  rs.rank = t.rank;
  long n = t.rank;

  // simple roots in Bourbaki coordinates; diagonal Gram scaled so short roots
  // have squared length 2 (E-series and F4 coordinates doubled for integrality)
  Rat gscale(1);
  switch (t.family) {
    case Family::A: {
      rs.ambient = n + 1;
      for (long i = 0; i < n; ++i) {
        std::vector<Int> a(rs.ambient, 0);
        a[i] = 1;
        a[i + 1] = -1;
        rs.simple.push_back(a);
      }
      break;
    }
    case Family::B: {
      rs.ambient = n;
      gscale = 2;
      for (long i = 0; i + 1 < n; ++i) {
        std::vector<Int> a(n, 0);
        a[i] = 1;
        a[i + 1] = -1;
        rs.simple.push_back(a);
      }
      std::vector<Int> a(n, 0);
      a[n - 1] = 1;
      rs.simple.push_back(a);
      break;
    }
    case Family::C: {
      rs.ambient = n;
      for (long i = 0; i + 1 < n; ++i) {
        std::vector<Int> a(n, 0);
        a[i] = 1;
        a[i + 1] = -1;
        rs.simple.push_back(a);
      }
      std::vector<Int> a(n, 0);
      a[n - 1] = 2;
      rs.simple.push_back(a);
      break;
    }
    case Family::D: {
      rs.ambient = n;
      for (long i = 0; i + 1 < n; ++i) {
        std::vector<Int> a(n, 0);
        a[i] = 1;
        a[i + 1] = -1;
        rs.simple.push_back(a);
      }
      std::vector<Int> a(n, 0);
      a[n - 2] = 1;
      a[n - 1] = 1;
      rs.simple.push_back(a);
      break;
    }
    case Family::E: {
      rs.ambient = 8;
      gscale = Rat(1, 4);  // coordinates doubled below
      // Bourbaki E8 simple roots, first `n` of them
      std::vector<std::vector<Int>> e8;
      e8.push_back(vec({1, -1, -1, -1, -1, -1, -1, 1}));  // (e1+e8-rest)/2, doubled
      e8.push_back(vec({2, 2, 0, 0, 0, 0, 0, 0}));
      for (long k = 0; k < 6; ++k) {
        std::vector<Int> a(8, 0);
        a[k] = -2;
        a[k + 1] = 2;
        e8.push_back(a);
      }
      for (long i = 0; i < n; ++i) rs.simple.push_back(e8[i]);
      break;
    }
    case Family::F: {
      rs.ambient = 4;
      gscale = Rat(1, 2);  // coordinates doubled
      rs.simple.push_back(vec({0, 2, -2, 0}));
      rs.simple.push_back(vec({0, 0, 2, -2}));
      rs.simple.push_back(vec({0, 0, 0, 2}));
      rs.simple.push_back(vec({1, -1, -1, -1}));
      break;
    }
    case Family::G: {
      rs.ambient = 3;
      rs.simple.push_back(vec({1, -1, 0}));
      rs.simple.push_back(vec({-2, 1, 1}));
      break;
    }
  }

  rs.gram = QMat(rs.ambient, rs.ambient);
  for (long i = 0; i < rs.ambient; ++i) rs.gram(i, i) = gscale;

  // Cartan matrix c_ij = 2 (a_i, a_j) / (a_j, a_j)
  rs.cartan = ZMat(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Rat c = 2 * rs.inner(rs.simple[i], rs.simple[j]) /
              rs.inner(rs.simple[j], rs.simple[j]);
      if (c.get_den() != 1) throw input_error("non-integral Cartan entry");
      rs.cartan(i, j) = c.get_num();
    }

  // reflection closure of the simple roots, tracked in simple-root coordinates
  std::map<std::vector<Int>, std::vector<Int>> seen;  // simple coords -> ambient
  std::deque<std::pair<std::vector<Int>, std::vector<Int>>> queue;
  for (long i = 0; i < n; ++i) {
    std::vector<Int> sc(n, 0);
    sc[i] = 1;
    seen.emplace(sc, rs.simple[i]);
    queue.emplace_back(sc, rs.simple[i]);
  }
  while (!queue.empty()) {
    auto [sc, amb] = queue.front();
    queue.pop_front();
    for (long i = 0; i < n; ++i) {
      // s_i(x) = x - <x, a_i^vee> a_i ; in simple coords the pairing is
      // sum_j sc_j c_ji
      Int pair(0);
      for (long j = 0; j < n; ++j) pair += sc[j] * rs.cartan(j, i);
      std::vector<Int> nsc = sc;
      nsc[i] -= pair;
      if (seen.count(nsc)) continue;
      std::vector<Int> namb = amb;
      for (long k = 0; k < rs.ambient; ++k) namb[k] -= pair * rs.simple[i][k];
      seen.emplace(nsc, namb);
      queue.emplace_back(nsc, namb);
    }
  }
  // include negatives (closure from simple roots reaches them, but be safe)
  for (const auto& [sc, amb] : std::map<std::vector<Int>, std::vector<Int>>(seen)) {
    std::vector<Int> nsc(sc), namb(amb);
    for (Int& x : nsc) x = -x;
    for (Int& x : namb) x = -x;
    if (!seen.count(nsc)) seen.emplace(nsc, namb);
  }

  for (const auto& [sc, amb] : seen) {
    rs.index_map.emplace(sc, static_cast<long>(rs.roots.size()));
    rs.roots.push_back(amb);
    rs.roots_simple.push_back(sc);
  }

  if (static_cast<long>(rs.roots.size()) != expected_root_count(t))
    throw input_error("root count mismatch for " + t.str());
  return rs;
}

std::vector<long> root_permutation(const RootSystem& rs, const ZMat& m) {
  long count = static_cast<long>(rs.roots.size());
  std::vector<long> perm(count, -1);
  std::vector<bool> hit(count, false);
  for (long r = 0; r < count; ++r) {
    std::vector<Int> img = mat_apply(m, rs.roots_simple[r]);
    long idx = rs.root_index(img);
    if (idx < 0) throw input_error("matrix does not preserve the root set");
    perm[r] = idx;
    hit[idx] = true;
  }
  for (bool h : hit)
    if (!h) throw input_error("matrix is not injective on roots");
  return perm;
}

ZMat simple_reflection(const RootSystem& rs, long i) {
  long n = rs.rank;
  ZMat m = ZMat::identity(n);
  // s_i(a_j) = a_j - c_ji a_i
  for (long j = 0; j < n; ++j) m(i, j) -= rs.cartan(j, i);
  return m;
}

namespace {

std::string mat_key(const ZMat& m) {
  std::ostringstream os;
  for (const Int& x : m.a) os << x.get_str() << ",";
  return os.str();
}

}  // namespace

std::vector<ZMat> group_closure(const std::vector<ZMat>& generators, long cap) {
  if (generators.empty()) throw input_error("no generators");
  long n = generators[0].rows;
  std::vector<ZMat> elements;
  std::set<std::string> seen;
  std::deque<ZMat> queue;
  ZMat id = ZMat::identity(n);
  elements.push_back(id);
  seen.insert(mat_key(id));
  queue.push_back(id);
  while (!queue.empty()) {
    ZMat cur = std::move(queue.front());
    queue.pop_front();
    for (const ZMat& g : generators) {
      ZMat next = mat_mul(cur, g);
      if (!seen.insert(mat_key(next)).second) continue;
      if (static_cast<long>(elements.size()) >= cap)
        throw size_limit_error("group closure exceeds element cap");
      elements.push_back(next);
      queue.push_back(std::move(next));
    }
  }
  return elements;
}

WeylInfo weyl_group(const RootSystem& rs, long cap) {
  std::vector<ZMat> gens;
  for (long i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection(rs, i));
  WeylInfo info;
  info.elements = group_closure(gens, cap);
  info.order = static_cast<long>(info.elements.size());

  // conjugacy classes by orbit partition under conjugation by generators
  // (simple reflections are involutions, so g^-1 = g)
  std::map<std::string, long> index_of;
  for (size_t i = 0; i < info.elements.size(); ++i)
    index_of.emplace(mat_key(info.elements[i]), static_cast<long>(i));
  std::vector<bool> visited(info.elements.size(), false);
  long classes = 0;
  for (size_t start = 0; start < info.elements.size(); ++start) {
    if (visited[start]) continue;
    ++classes;
    std::deque<long> queue{static_cast<long>(start)};
    visited[start] = true;
    while (!queue.empty()) {
      long cur = queue.front();
      queue.pop_front();
      for (const ZMat& g : gens) {
        ZMat conj = mat_mul(mat_mul(g, info.elements[cur]), g);
        long idx = index_of.at(mat_key(conj));
        if (!visited[idx]) {
          visited[idx] = true;
          queue.push_back(idx);
        }
      }
    }
  }
  info.nontrivial_classes = classes - 1;
  return info;
}

std::string to_string(AutQuotient q) {
  switch (q) {
    case AutQuotient::trivial: return "trivial";
    case AutQuotient::order2_minus_identity: return "order2_minus_identity";
    case AutQuotient::order2_other: return "order2_other";
    case AutQuotient::S3: return "S3";
  }
  return "?";
}

AutStructure automorphism_structure(const RootSystem& rs, long cap) {
  long n = rs.rank;
  // diagram automorphisms: permutations of the simple roots preserving the
  // Cartan matrix, extended linearly
  std::vector<long> perm(n);
  for (long i = 0; i < n; ++i) perm[i] = i;
  std::vector<ZMat> diagram;
  do {
    bool ok = true;
    for (long i = 0; i < n && ok; ++i)
      for (long j = 0; j < n && ok; ++j)
        if (rs.cartan(perm[i], perm[j]) != rs.cartan(i, j)) ok = false;
    if (!ok) continue;
    bool is_id = true;
    for (long i = 0; i < n; ++i)
      if (perm[i] != i) is_id = false;
    if (is_id) continue;
    ZMat m(n, n);
    for (long j = 0; j < n; ++j) m(perm[j], j) = 1;
    diagram.push_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<ZMat> gens;
  for (long i = 0; i < n; ++i) gens.push_back(simple_reflection(rs, i));
  std::vector<ZMat> weyl = group_closure(gens, cap);
  long weyl_order = static_cast<long>(weyl.size());
  for (const ZMat& d : diagram) gens.push_back(d);
  std::vector<ZMat> aut = group_closure(gens, cap);

  AutStructure s;
  s.aut_order = static_cast<long>(aut.size());
  s.diagram_autos = diagram;
  long index = static_cast<long>(aut.size()) / weyl_order;
  if (index == 1) {
    s.quotient = AutQuotient::trivial;
  } else if (index == 6) {
    s.quotient = AutQuotient::S3;
  } else if (index == 2) {
    // distinguish by whether -identity represents the nontrivial coset
    ZMat minus = ZMat::identity(n);
    for (long i = 0; i < n; ++i) minus(i, i) = -1;
    bool minus_in_weyl = false;
    for (const ZMat& w : weyl)
      if (w == minus) {
        minus_in_weyl = true;
        break;
      }
    s.quotient = minus_in_weyl ? AutQuotient::order2_other
                               : AutQuotient::order2_minus_identity;
  } else {
    throw input_error("unexpected automorphism quotient order");
  }
  return s;
}

bool contains_weyl(const std::vector<ZMat>& subgroup, const RootSystem& rs, long cap) {
  for (const ZMat& m : subgroup) root_permutation(rs, m);  // validates
  std::vector<ZMat> closure = group_closure(subgroup, cap);
  std::set<std::string> keys;
  for (const ZMat& m : closure) keys.insert(mat_key(m));
  for (long i = 0; i < rs.rank; ++i)
    if (!keys.count(mat_key(simple_reflection(rs, i)))) return false;
  return true;
}

MatchResult match_root_systems(const QMat& linear_map, const RootSystem& rs1,
                               const RootSystem& rs2) {
  if (linear_map.rows != rs2.rank || linear_map.cols != rs1.rank)
    throw input_error("linear map has wrong dimensions");
  // B2 and C2 are the same abstract type
  auto norm_type = [](RootSystemType t) {
    if (t.family == Family::B && t.rank == 2) t.family = Family::C;
    return t;
  };
  if (!(norm_type(rs1.type) == norm_type(rs2.type)))
    throw input_error("root systems of different types");
  {
    QMat m = linear_map;
    if (q_rank(m) != rs1.rank) throw input_error("linear map not invertible");
  }

  auto apply = [&](const std::vector<Int>& sc) {
    std::vector<Rat> v(rs2.rank, Rat(0));
    for (long i = 0; i < rs2.rank; ++i)
      for (long j = 0; j < rs1.rank; ++j)
        if (linear_map(i, j) != 0) v[i] += linear_map(i, j) * Rat(sc[j]);
    return v;
  };
  auto scaled_root_index = [&](const std::vector<Rat>& v, const Rat& t) -> long {
    std::vector<Int> w(rs2.rank);
    for (long i = 0; i < rs2.rank; ++i) {
      Rat s = t * v[i];
      if (s.get_den() != 1) return -1;
      w[i] = s.get_num();
    }
    return rs2.root_index(w);
  };

  // candidate scalings: those sending the image of the first root to a root
  std::vector<Rat> u = apply(rs1.roots_simple[0]);
  std::set<Rat> candidates;
  for (const auto& s2 : rs2.roots_simple) {
    // is s2 = c * u for rational c?
    Rat c;
    bool found = false, ok = true;
    for (long i = 0; i < rs2.rank && ok; ++i) {
      if (u[i] == 0) {
        if (s2[i] != 0) ok = false;
        continue;
      }
      Rat ci = Rat(s2[i]) / u[i];
      if (!found) {
        c = ci;
        found = true;
      } else if (ci != c) {
        ok = false;
      }
    }
    // sign free: Phi = -Phi, so canonicalize candidates to positive
    if (ok && found && c != 0) candidates.insert(abs(c));
  }
  for (const Rat& t : candidates) {
    bool all = true;
    for (const auto& sc : rs1.roots_simple)
      if (scaled_root_index(apply(sc), t) < 0) {
        all = false;
        break;
      }
    if (all) {
      MatchResult r;
      r.kind = MatchResult::Kind::scaled;
      r.t = t;
      return r;
    }
  }

  // no single scaling; for the self-dual types report span compatibility when
  // every root lands on a rational multiple of a root
  RootSystemType t1 = norm_type(rs1.type);
  bool self_dual = (t1.family == Family::C && t1.rank == 2) ||
                   t1.family == Family::F || t1.family == Family::G;
  if (self_dual) {
    bool lines = true;
    for (const auto& sc : rs1.roots_simple) {
      std::vector<Rat> v = apply(sc);
      bool hit = false;
      for (const auto& s2 : rs2.roots_simple) {
        bool ok = true;
        Rat c;
        bool found = false;
        for (long i = 0; i < rs2.rank && ok; ++i) {
          if (v[i] == 0) {
            if (s2[i] != 0) ok = false;
            continue;
          }
          Rat ci = Rat(s2[i]) / v[i];
          if (!found) {
            c = ci;
            found = true;
          } else if (ci != c) {
            ok = false;
          }
        }
        if (ok && found) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        lines = false;
        break;
      }
    }
    if (lines) {
      MatchResult r;
      r.kind = MatchResult::Kind::span_only;
      return r;
    }
  }
  MatchResult r;
  r.kind = MatchResult::Kind::no_match;
  return r;
}

std::vector<std::vector<long>> star_orbits(
    const std::vector<std::vector<long>>& generators, const RootSystem& rs) {
  long n = rs.rank;
  for (const auto& p : generators) {
    if (static_cast<long>(p.size()) != n)
      throw not_diagram_automorphism("permutation has wrong length");
    std::vector<bool> hit(n, false);
    for (long v : p) {
      if (v < 0 || v >= n || hit[v])
        throw not_diagram_automorphism("not a permutation of the simple roots");
      hit[v] = true;
    }
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        if (rs.cartan(p[i], p[j]) != rs.cartan(i, j))
          throw not_diagram_automorphism("permutation breaks Cartan integers");
  }
  // orbits of the generated permutation group = connected components
  std::vector<long> parent(n);
  for (long i = 0; i < n; ++i) parent[i] = i;
  std::function<long(long)> find = [&](long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : generators)
    for (long i = 0; i < n; ++i) {
      long a = find(i), b = find(p[i]);
      if (a != b) parent[a] = b;
    }
  std::map<long, std::vector<long>> groups;
  for (long i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<long>> orbits;
  for (auto& [root, members] : groups) {
    (void)root;
    std::sort(members.begin(), members.end());
    orbits.push_back(members);
  }
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

}  // namespace wct
