#include <wct/isogeny.hpp>

#include <algorithm>

namespace wct {

namespace {

bool is_identity(const ZMat& m) {
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j)
      if (m(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

// sigma applied coordinatewise: evaluate the coordinate polynomial at the
// declared image of the field generator
AlgebraicNumber apply_field_map(const AlgebraicNumber& x,
                                const AlgebraicNumber& gen_image) {
  AlgebraicNumber out = AlgebraicNumber::from_rat(gen_image.field, Rat(0));
  for (size_t k = x.coords.size(); k-- > 0;)
    out = out * gen_image +
          AlgebraicNumber::from_rat(gen_image.field, x.coords[k]);
  return out;
}

void check_element(const TorusElementData& t) {
  t.module.validate();
  if (!t.field) throw input_error("element data needs a field");
  if (static_cast<long>(t.values.size()) != t.module.rank)
    throw input_error("need one value per basis character");
  for (const AlgebraicNumber& v : t.values) {
    if (!v.field || !v.field->same_as(*t.field))
      throw input_error("element value outside the declared field");
    if (v.is_zero()) throw input_error("element values must be nonzero");
  }
  if (t.galois_images.empty()) return;
  if (static_cast<long>(t.galois_images.size()) != t.module.group_order)
    throw input_error("need one galois image per group element");

  // declared images must be conjugates of the generator
  const ZPoly& mp = t.field->min_poly();
  for (const AlgebraicNumber& img : t.galois_images) {
    if (!img.field || !img.field->same_as(*t.field))
      throw input_error("galois image outside the declared field");
    AlgebraicNumber acc = AlgebraicNumber::from_rat(t.field, Rat(0));
    for (size_t k = mp.size(); k-- > 0;)
      acc = acc * img + AlgebraicNumber::from_rat(t.field, Rat(mp[k]));
    if (!acc.is_zero())
      throw value_inconsistent("declared galois image is not a conjugate");
  }

  // spot-check: value(g e_j) must be the declared conjugate of value(e_j)
  for (long k = 0; k < t.module.group_order; ++k) {
    for (long j = 0; j < t.module.rank; ++j) {
      std::vector<Int> moved(t.module.rank, Int(0));
      for (long i = 0; i < t.module.rank; ++i)
        moved[i] = t.module.action[k](i, j);
      AlgebraicNumber lhs = character_value(t, moved);
      AlgebraicNumber rhs = apply_field_map(t.values[j], t.galois_images[k]);
      if (!(lhs == rhs))
        throw value_inconsistent(
            "value of a moved character disagrees with the declared "
            "conjugate");
    }
  }
}

}  // namespace

void GaloisModule::validate() const {
  if (rank <= 0) throw input_error("module rank must be positive");
  if (group_order <= 0 ||
      static_cast<long>(action.size()) != group_order)
    throw input_error("need one action matrix per group element");
  bool has_id = false;
  for (const ZMat& m : action) {
    if (m.rows != rank || m.cols != rank)
      throw input_error("action matrix size does not match the rank");
    Int det = z_det(m);
    if (det != 1 && det != -1)
      throw input_error("action matrices must be unimodular");
    if (is_identity(m)) has_id = true;
  }
  if (!has_id) throw input_error("the action set must contain the identity");
  auto present = [&](const ZMat& m) {
    for (const ZMat& g : action)
      if (g == m) return true;
    return false;
  };
  for (const ZMat& a : action)
    for (const ZMat& b : action)
      if (!present(mat_mul(a, b)))
        throw input_error("the action set is not closed under products");
}

AlgebraicNumber character_value(const TorusElementData& t,
                                const std::vector<Int>& chi) {
  if (static_cast<long>(chi.size()) != t.module.rank)
    throw input_error("character length does not match the rank");
  AlgebraicNumber out = AlgebraicNumber::from_rat(t.field, Rat(1));
  for (long i = 0; i < t.module.rank; ++i)
    if (chi[i] != 0) out = out * pow(t.values[i], chi[i]);
  return out;
}

NuData nu_data(const GaloisModule& m, const std::vector<Int>& chi,
               const TorusElementData& element, const SearchBudget& budget) {
  m.validate();
  check_element(element);
  if (m.rank != element.module.rank ||
      m.group_order != element.module.group_order)
    throw input_error("module does not match the element data");
  if (static_cast<long>(chi.size()) != m.rank)
    throw input_error("character length does not match the rank");
  bool zero = true;
  for (const Int& c : chi)
    if (c != 0) zero = false;
  if (zero) throw input_error("the character must be nonzero");

  NuData out;
  out.orbit = ZMat(m.rank, m.group_order);
  ZMat orbit_rows(m.group_order, m.rank);
  for (long k = 0; k < m.group_order; ++k) {
    std::vector<Int> img = mat_apply(m.action[k], chi);
    for (long i = 0; i < m.rank; ++i) {
      out.orbit(i, k) = img[i];
      orbit_rows(k, i) = img[i];
    }
  }
  out.image = lattice_basis(orbit_rows);

  RelationLattice rel = relation_lattice(
      MultiplicativeTuple(element.field, element.values), budget);
  out.completeness = rel.completeness;

  // a is in the kernel iff orbit * a is an integer combination of relation
  // rows: solve (orbit | -rel^T) and project onto the a block
  long r = rel.basis.rows;
  ZMat stacked(m.rank, m.group_order + r);
  for (long i = 0; i < m.rank; ++i) {
    for (long k = 0; k < m.group_order; ++k) stacked(i, k) = out.orbit(i, k);
    for (long k = 0; k < r; ++k)
      stacked(i, m.group_order + k) = -rel.basis(k, i);
  }
  ZMat ker = z_nullspace(stacked);
  ZMat proj(ker.rows, m.group_order);
  for (long i = 0; i < ker.rows; ++i)
    for (long k = 0; k < m.group_order; ++k) proj(i, k) = ker(i, k);
  out.kernel = lattice_basis(proj);
  return out;
}

IsogenyResult build_isogeny(const TorusElementData& t1,
                            const std::vector<Int>& chi1,
                            const TorusElementData& t2,
                            const std::vector<Int>& chi2,
                            const SearchBudget& budget) {
  if (t1.module.group_order != t2.module.group_order)
    throw input_error("the elements must share one group");

  // the common value lambda = chi1(t1) = chi2(t2), of infinite order
  AlgebraicNumber l1 = character_value(t1, chi1);
  AlgebraicNumber l2 = character_value(t2, chi2);
  if (!l1.field->same_as(*l2.field)) {
    CompositumMap cm = compositum(t1.field, t2.field);
    l1 = transport(l1, cm.field, cm.image_gen1);
    l2 = transport(l2, cm.field, cm.image_gen2);
  }
  if (!(l1 == l2))
    throw value_mismatch("the characters disagree on the elements");
  if (root_of_unity_order(l1))
    throw value_mismatch(
        "the common value must have infinite order; pass to a power that "
        "does");

  NuData n1 = nu_data(t1.module, chi1, t1, budget);
  NuData n2 = nu_data(t2.module, chi2, t2, budget);
  if (n1.image.rows < t1.module.rank)
    throw not_irreducible("the first orbit does not span its lattice");
  if (n2.image.rows < t2.module.rank)
    throw not_irreducible("the second orbit does not span its lattice");
  if (!lattice_subset(n1.kernel, n2.kernel) ||
      !lattice_subset(n2.kernel, n1.kernel))
    throw kernel_mismatch("the evaluation kernels differ");

  IsogenyResult res;
  res.d = lattice_index(n1.image, t1.module.rank);
  res.m1 = res.d * res.d;
  res.m2 = res.d;

  // column j of pi_star: pick a with orbit1 a = d e_j, send it through nu2
  long r1 = t1.module.rank, r2 = t2.module.rank;
  res.pi_star = ZMat(r2, r1);
  for (long j = 0; j < r1; ++j) {
    std::vector<Int> target(r1, Int(0));
    target[j] = res.d;
    std::optional<std::vector<Int>> a = z_solve(n1.orbit, target);
    if (!a) throw std::logic_error("index-scaled basis vector left the span");
    std::vector<Int> img = mat_apply(n2.orbit, *a);
    for (long i = 0; i < r2; ++i) res.pi_star(i, j) = img[i];
  }

  std::vector<Int> mapped = mat_apply(res.pi_star, chi1);
  for (long i = 0; i < r2; ++i)
    if (mapped[i] != res.d * chi2[i])
      throw kernel_mismatch("the built map does not scale the character");

  // element identity, exact on every basis character:
  // (pi_star e_j)(t2) ^ d = e_j(t1) ^ (d^2)
  for (long j = 0; j < r1; ++j) {
    std::vector<Int> col(r2);
    for (long i = 0; i < r2; ++i) col[i] = res.pi_star(i, j);
    AlgebraicNumber lhs = pow(character_value(t2, col), res.d);
    AlgebraicNumber rhs = pow(t1.values[j], res.m1);
    if (!lhs.field->same_as(*rhs.field)) {
      CompositumMap cm = compositum(t2.field, t1.field);
      lhs = transport(lhs, cm.field, cm.image_gen1);
      rhs = transport(rhs, cm.field, cm.image_gen2);
    }
    if (!(lhs == rhs))
      throw kernel_mismatch("the element identity fails on a basis character");
  }
  return res;
}

MatchResult check_root_compat(const IsogenyResult& result,
                              const RootSystem& rs1, const RootSystem& rs2) {
  return match_root_systems(to_qmat(result.pi_star), rs1, rs2);
}

}  // namespace wct
