#pragma once
// Hom objects between unital po-groups: [A,B] with its positive homs, the
// subgroup [A,B]_h, the interval Gamma([A,B], h), the GEA [A,B]_GEA, and the
// internal adjunction [E, Gamma(B,v)] = [Gr E, (B,v)]_GEA.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "effalg/hom_gea.hpp"
#include "effalg/pog.hpp"

namespace effalg {

/// A is directed (u is an order unit), so its cone generators generate A and a
/// hom out of A is fixed by the images of the cone generators.
struct ConeCoordinates {
  IntMatrix express;             // group generators x cone generators
  std::vector<IntVec> relations; // integer relations among cone generators
};

inline ConeCoordinates cone_coordinates(const UnitalPoGroup& a) {
  ConeCoordinates c{IntMatrix(a.group.gens(), a.cone.size()), relation_module(a.group, a.cone)};
  for (std::size_t i = 0; i < a.group.gens(); ++i) {
    const auto x = express_in_span(a.group, a.cone, a.group.generator(i));
    if (!x) throw std::invalid_argument("cone generators do not generate the group");
    for (std::size_t j = 0; j < a.cone.size(); ++j) c.express(i, j) = (*x)[j];
  }
  return c;
}

inline GroupHom hom_from_cone_images(const UnitalPoGroup& a, const UnitalPoGroup& b, const ConeCoordinates& cc,
                                     const std::vector<GroupElement>& images) {
  IntMatrix m(a.group.gens(), b.group.gens());
  for (std::size_t i = 0; i < a.group.gens(); ++i) {
    IntVec row(b.group.gens());
    for (std::size_t j = 0; j < a.cone.size(); ++j)
      if (cc.express(i, j) != 0) row = add(row, scale(cc.express(i, j), images[j].coords));
    row = b.group.element(row).coords;
    for (std::size_t k = 0; k < row.size(); ++k) m(i, k) = row[k];
  }
  return GroupHom(a.group, b.group, m);
}

struct HomEnumeration {
  GammaStatus status = GammaStatus::ok;
  std::vector<GroupHom> homs;
  std::vector<std::vector<GroupElement>> cone_images;
  std::string note;
};

/// All homs f with 0 <= f(c_j) <= upper_j for each cone generator c_j, accepted by `keep`.
inline HomEnumeration enumerate_homs_below(const UnitalPoGroup& a, const UnitalPoGroup& b,
                                           const std::vector<GroupElement>& upper,
                                           const std::function<bool(const GroupHom&)>& keep,
                                           std::size_t budget = kDefaultGammaBudget) {
  HomEnumeration out;
  const ConeCoordinates cc = cone_coordinates(a);
  const std::size_t k = a.cone.size();
  std::vector<std::vector<GroupElement>> options(k);
  for (std::size_t j = 0; j < k; ++j) {
    GammaResult iv = interval_below(b, upper[j], budget);
    if (iv.status != GammaStatus::ok) {
      out.status = iv.status;
      out.note = "image interval of cone generator " + std::to_string(j) + " not enumerated";
      return out;
    }
    options[j] = std::move(iv.elements);
  }
  // A relation can be checked once its last nonzero coefficient is assigned.
  std::vector<std::vector<std::size_t>> due(k);
  for (std::size_t r = 0; r < cc.relations.size(); ++r) {
    std::size_t last = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (cc.relations[r][j] != 0) last = j;
    due[last].push_back(r);
  }
  std::vector<GroupElement> pick(k);
  std::function<void(std::size_t)> go = [&](std::size_t j) {
    if (out.status != GammaStatus::ok) return;
    if (j == k) {
      GroupHom f = hom_from_cone_images(a, b, cc, pick);
      if (!keep(f)) return;
      if (out.homs.size() >= budget) {
        out.status = GammaStatus::budget_exhausted;
        out.note = "hom count exceeds budget";
        return;
      }
      out.homs.push_back(std::move(f));
      out.cone_images.push_back(pick);
      return;
    }
    for (const auto& y : options[j]) {
      pick[j] = y;
      bool ok = true;
      for (std::size_t r : due[j]) {
        IntVec s(b.group.gens());
        for (std::size_t t = 0; t <= j; ++t)
          if (cc.relations[r][t] != 0) s = add(s, scale(cc.relations[r][t], pick[t].coords));
        if (!b.group.is_zero(s)) {
          ok = false;
          break;
        }
      }
      if (ok) go(j + 1);
    }
  };
  go(0);
  return out;
}

/// Gamma([A,B], h): homs f with 0 <= f <= h, sums defined when they stay below h.
struct HomInterval {
  GammaStatus status = GammaStatus::ok;
  std::vector<GroupHom> homs;  // homs[0] is zero
  std::optional<EffectAlgebra> algebra;
  std::string note;

  std::optional<Elem> index_of(const GroupHom& f) const {
    for (std::size_t i = 0; i < homs.size(); ++i)
      if (homs[i] == f) return static_cast<Elem>(i);
    return std::nullopt;
  }
};

inline HomInterval gamma_hom_interval(const UnitalPoGroup& a, const UnitalPoGroup& b, const GroupHom& h,
                                      std::size_t budget = kDefaultGammaBudget) {
  HomInterval out;
  std::vector<GroupElement> upper;
  for (const auto& c : a.cone) upper.push_back(h.apply(c));
  HomEnumeration en = enumerate_homs_below(a, b, upper, [](const GroupHom&) { return true; }, budget);
  out.status = en.status;
  out.note = en.note;
  if (en.status != GammaStatus::ok) return out;
  // Zero first, then the enumeration order.
  const GroupHom zero = GroupHom::zero(a.group, b.group);
  out.homs.push_back(zero);
  for (auto& f : en.homs)
    if (!(f == zero)) out.homs.push_back(std::move(f));
  const auto top = out.index_of(h);
  if (!top) {
    out.status = GammaStatus::invalid;
    out.note = "h is not positive";
    return out;
  }
  const int n = static_cast<int>(out.homs.size());
  PartialTable t(n, *top);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (auto s = out.index_of(add_homs(out.homs[i], out.homs[j]))) t.at(i, j) = *s;
  const ValidationReport v = validate_effect_algebra(t);
  if (!v.valid()) {
    out.status = GammaStatus::invalid;
    out.note = v.summary();
    return out;
  }
  out.algebra = EffectAlgebra(std::move(t));
  return out;
}

/// [A,B]_GEA: positive g with g(u) <= v; g (+) k defined iff (g + k)(u) <= v.
struct PogHomGEA {
  GammaStatus status = GammaStatus::ok;
  std::vector<GroupHom> homs;  // homs[0] is zero
  PartialTable table;
  std::string note;

  std::optional<int> index_of(const GroupHom& f) const {
    for (std::size_t i = 0; i < homs.size(); ++i)
      if (homs[i] == f) return static_cast<int>(i);
    return std::nullopt;
  }
};

inline PogHomGEA pog_hom_gea(const UnitalPoGroup& a, const UnitalPoGroup& b,
                             std::size_t budget = kDefaultGammaBudget) {
  PogHomGEA out;
  // c_j <= n_j u forces g(c_j) <= n_j g(u) <= n_j v.
  std::vector<GroupElement> upper;
  for (const auto& c : a.cone) {
    const auto d = dominated_by_multiple(a, a.unit, c);
    if (d.status != Tri::yes) {
      out.status = GammaStatus::undecided;
      out.note = "cone generator not certified below a multiple of the unit";
      return out;
    }
    upper.push_back(b.group.times(d.n, b.unit));
  }
  auto below_v = [&](const GroupHom& g) { return leq(b, g.apply(a.unit), b.unit) == Tri::yes; };
  HomEnumeration en = enumerate_homs_below(a, b, upper, below_v, budget);
  out.status = en.status;
  out.note = en.note;
  if (en.status != GammaStatus::ok) return out;
  const GroupHom zero = GroupHom::zero(a.group, b.group);
  out.homs.push_back(zero);
  for (auto& f : en.homs)
    if (!(f == zero)) out.homs.push_back(std::move(f));
  const int n = static_cast<int>(out.homs.size());
  out.table = PartialTable(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (auto s = out.index_of(add_homs(out.homs[i], out.homs[j]))) out.table.at(i, j) = *s;
  return out;
}

/// [A,B]_h = { f : -n h <= f <= n h }. Testing on cone generators, f lies in
/// it iff each f(c_j) lies in the subgroup of B with order unit h(c_j), so it
/// is the kernel of Hom(A,B) -> (+)_j B / B_0(h(c_j)).
struct HomSubgroup {
  HomGroup hom;
  std::vector<GroupHom> generators;
  bool complete = true;  // false: every reflection used was only a lower bound
};

inline HomSubgroup hom_h_subgroup(const UnitalPoGroup& a, const UnitalPoGroup& b, const GroupHom& h) {
  HomSubgroup out{hom_group(a.group, b.group), {}, true};
  std::vector<FpAbGroup> quotients;
  for (const auto& c : a.cone) {
    const Reflection r = pogp_reflection(b, h.apply(c));
    if (!r.complete) out.complete = false;
    std::vector<IntVec> rels = b.group.relations().row_list();
    for (const auto& g : r.generators) rels.push_back(g.coords);
    quotients.emplace_back(b.group.gens(), IntMatrix::from_rows(rels, b.group.gens()));
  }
  const DirectSum target = direct_sum(quotients);
  const std::size_t nh = out.hom.group.gens();
  IntMatrix m(nh, target.group.gens());
  for (std::size_t t = 0; t < nh; ++t) {
    const GroupHom ft(a.group, b.group, out.hom.hom_matrices[t]);
    for (std::size_t j = 0; j < a.cone.size(); ++j) {
      const IntVec img = ft.apply(a.cone[j]).coords;
      for (std::size_t k = 0; k < img.size(); ++k) m(t, target.offsets[j] + k) = img[k];
    }
  }
  for (const IntVec& x : kernel_generators(GroupHom(out.hom.group, target.group, m)))
    out.generators.emplace_back(a.group, b.group, hom_matrix(out.hom, x, a.group.gens(), b.group.gens()));
  return out;
}

struct HomPogObjects {
  HomGroup hom;
  HomSubgroup h_subgroup;
  HomInterval gamma;
};

inline HomPogObjects build_hom_pog_objects(const UnitalPoGroup& a, const UnitalPoGroup& b, const GroupHom& h,
                                           std::size_t budget = kDefaultGammaBudget) {
  return {hom_group(a.group, b.group), hom_h_subgroup(a, b, h), gamma_hom_interval(a, b, h, budget)};
}

/// Phi: [Gr E, (B,v)]_GEA -> [E, Gamma(B,v)], g |-> Gamma(g) o eta_E.
struct PhiReport {
  GammaStatus status = GammaStatus::ok;
  std::size_t left_size = 0;   // |[E, Gamma(B,v)]|
  std::size_t right_size = 0;  // |[Gr E, (B,v)]_GEA|
  std::vector<int> phi;        // right index -> left index, -1 if the image is not a gea-hom
  std::vector<int> inverse;    // left index -> right index
  bool bijective = false;
  bool zero_preserved = false;
  bool orthogonality_preserved = false;
  bool orthogonality_reflected = false;
  bool sums_preserved = false;
  std::string note;

  bool ok() const {
    return status == GammaStatus::ok && bijective && zero_preserved && orthogonality_preserved &&
           orthogonality_reflected && sums_preserved;
  }
};

inline PhiReport phi_internal_adjunction(const EffectAlgebra& e, const UnitalPoGroup& b,
                                         std::size_t budget = kDefaultGammaBudget) {
  PhiReport r;
  const GammaResult gamma = gamma_interval(b, budget);
  if (gamma.status != GammaStatus::ok) {
    r.status = gamma.status;
    r.note = "Gamma(B,v): " + gamma.note;
    return r;
  }
  const HomGEA left = build_hom_gea(e, *gamma.algebra);
  const UniversalGroup gr = gr_universal_group(e);
  const PogHomGEA right = pog_hom_gea(gr.pog, b, budget);
  if (right.status != GammaStatus::ok) {
    r.status = right.status;
    r.note = "[Gr E, B]_GEA: " + right.note;
    return r;
  }
  r.left_size = static_cast<std::size_t>(left.size());
  r.right_size = right.homs.size();
  for (const auto& g : right.homs) {
    std::vector<Elem> m;
    bool ok = true;
    for (Elem x = 0; x < e.size() && ok; ++x) {
      const auto idx = gamma.index_of(g.apply(gr.eta[x]));
      if (!idx) ok = false;
      else m.push_back(*idx);
    }
    const auto li = ok ? left.index_of(m) : std::nullopt;
    r.phi.push_back(li ? *li : -1);
  }
  r.inverse.assign(r.left_size, -1);
  bool injective = true;
  for (std::size_t i = 0; i < r.phi.size(); ++i) {
    if (r.phi[i] < 0) {
      injective = false;
      continue;
    }
    if (r.inverse[r.phi[i]] >= 0) injective = false;
    r.inverse[r.phi[i]] = static_cast<int>(i);
  }
  r.bijective = injective && r.left_size == r.right_size;
  if (!r.bijective) return r;
  r.zero_preserved = r.phi[0] == 0;
  r.orthogonality_preserved = r.orthogonality_reflected = r.sums_preserved = true;
  const int n = static_cast<int>(r.right_size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto rs = right.table.at(i, j);
      const auto ls = left.table.at(r.phi[i], r.phi[j]);
      if (rs && !ls) r.orthogonality_preserved = false;
      if (!rs && ls) r.orthogonality_reflected = false;
      if (rs && ls && r.phi[*rs] != *ls) r.sums_preserved = false;
    }
  return r;
}

}  // namespace effalg
