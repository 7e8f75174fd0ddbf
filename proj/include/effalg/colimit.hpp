#pragma once
// Diagrams of unital po-groups and of effect algebras, their colimits, and the
// comparison colim(E (x) F(d)) -> E (x) colim F(d).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "effalg/category.hpp"
#include "effalg/pog.hpp"
#include "effalg/saturation.hpp"
#include "effalg/tensor_ea.hpp"

namespace effalg {

// ---------------------------------------------------------------- POG_u

struct PogDiagram {
  FiniteCategory category;
  std::vector<UnitalPoGroup> objects;
  std::vector<GroupHom> arrows;  // one per arrow of the category, identities included

  bool functorial() const {
    for (int f = 0; f < category.arrow_count(); ++f) {
      const Arrow& a = category.arrow(f);
      if (!(arrows[f].domain() == objects[a.src].group) || !(arrows[f].codomain() == objects[a.dst].group))
        return false;
      if (!arrows[f].is_well_defined()) return false;
      if (arrows[f].apply(objects[a.src].unit) != objects[a.dst].unit) return false;
      if (category.is_identity(f) && !(arrows[f] == GroupHom::identity(objects[a.src].group))) return false;
      for (int g = 0; g < category.arrow_count(); ++g) {
        const int gf = category.compose(g, f);
        if (gf >= 0 && !(compose(arrows[g], arrows[f]) == arrows[gf])) return false;
      }
    }
    return true;
  }

  PogDiagram restrict_to(const Subcategory& sub) const {
    std::vector<int> obj_index(static_cast<std::size_t>(category.objects()), -1);
    for (std::size_t i = 0; i < sub.objects.size(); ++i) obj_index[sub.objects[i]] = static_cast<int>(i);
    std::vector<int> arrow_index(static_cast<std::size_t>(category.arrow_count()), -1);
    for (std::size_t i = 0; i < sub.arrows.size(); ++i) arrow_index[sub.arrows[i]] = static_cast<int>(i);
    std::vector<Arrow> arrows;
    std::vector<int> ident(sub.objects.size(), -1);
    for (int f : sub.arrows) {
      const Arrow& a = category.arrow(f);
      if (category.is_identity(f)) ident[obj_index[a.src]] = static_cast<int>(arrows.size());
      arrows.push_back({obj_index[a.src], obj_index[a.dst], a.name});
    }
    const std::size_t m = arrows.size();
    std::vector<int> comp(m * m, -1);
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t f = 0; f < m; ++f) {
        const int h = category.compose(sub.arrows[g], sub.arrows[f]);
        if (h >= 0) comp[g * m + f] = arrow_index[h];
      }
    PogDiagram d;
    d.category = FiniteCategory::from_table(static_cast<int>(sub.objects.size()), std::move(arrows),
                                            std::move(ident), std::move(comp));
    for (int o : sub.objects) d.objects.push_back(objects[o]);
    for (int f : sub.arrows) d.arrows.push_back(this->arrows[f]);
    return d;
  }
};

/// D extended by an initial object (Z,1), each new arrow sending 1 to the unit of its target.
/// D sits inside as the full subcategory on the old objects.
inline PogDiagram with_initial_object(const PogDiagram& d) {
  PogDiagram out;
  out.category = d.category.with_initial_object();
  out.objects = d.objects;
  const UnitalPoGroup z = integers(1);
  out.objects.push_back(z);
  out.arrows = d.arrows;
  out.arrows.push_back(GroupHom::identity(z.group));
  for (const UnitalPoGroup& b : d.objects)
    out.arrows.push_back(GroupHom(z.group, b.group, IntMatrix::from_rows({b.unit.coords}, b.group.gens())));
  return out;
}

struct PogColimit {
  UnitalPoGroup apex;
  std::vector<GroupHom> legs;
  bool cocone_verified = false;
  std::vector<std::size_t> quotiented;  // cone generators identified with 0 by the lineality quotient
  bool complete = true;                 // false if some lineality test was undecided
};

/// Direct sum, one relation per arrow and generator, units identified, then
/// the quotient by the largest subgroup inside the cone so that it stays strict.
inline PogColimit colimit_pog(const PogDiagram& d) {
  const int n = d.category.objects();
  if (n == 0) {
    UnitalPoGroup z = integers(1);
    return {z, {}, true, {}, true};
  }
  std::vector<FpAbGroup> parts;
  for (const auto& o : d.objects) parts.push_back(o.group);
  const DirectSum ds = direct_sum(parts);
  const std::size_t g = ds.group.gens();
  auto embed = [&](int obj, const IntVec& x) {
    IntVec v(g);
    for (std::size_t i = 0; i < x.size(); ++i) v[ds.offsets[obj] + i] = x[i];
    return v;
  };
  std::vector<IntVec> rels = ds.group.relations().row_list();
  for (int f = 0; f < d.category.arrow_count(); ++f) {
    if (d.category.is_identity(f)) continue;
    const Arrow& a = d.category.arrow(f);
    for (std::size_t i = 0; i < d.objects[a.src].group.gens(); ++i) {
      IntVec e(d.objects[a.src].group.gens());
      e[i] = 1;
      rels.push_back(sub(embed(a.dst, d.arrows[f].apply(e).coords), embed(a.src, e)));
    }
  }
  for (int o = 1; o < n; ++o)
    rels.push_back(sub(embed(o, d.objects[o].unit.coords), embed(0, d.objects[0].unit.coords)));
  std::vector<IntVec> cone;
  for (int o = 0; o < n; ++o)
    for (const auto& c : d.objects[o].cone) cone.push_back(embed(o, c.coords));

  PogColimit out;
  UnitalPoGroup pre = make_pog(FpAbGroup(g, IntMatrix::from_rows(rels, g)), cone, embed(0, d.objects[0].unit.coords));
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<IntVec> extra;
    for (std::size_t i = 0; i < pre.cone.size(); ++i) {
      const auto dec = cone_member(pre, pre.group.neg(pre.cone[i]));
      if (dec.member()) extra.push_back(pre.cone[i].coords);
      else if (!dec.refuted()) out.complete = false;
    }
    if (extra.empty()) break;
    out.quotiented.push_back(extra.size());
    std::vector<IntVec> r2 = pre.group.relations().row_list();
    r2.insert(r2.end(), extra.begin(), extra.end());
    pre = make_pog(FpAbGroup(g, IntMatrix::from_rows(r2, g)), cone, pre.unit.coords);
  }
  const ReducedPresentation red = reduce_presentation(pre.group);
  std::vector<IntVec> rcone;
  for (const auto& c : pre.cone) rcone.push_back(mul(c.coords, red.to_reduced));
  out.apex = make_pog(red.group, rcone, mul(pre.unit.coords, red.to_reduced));
  for (int o = 0; o < n; ++o) {
    const std::size_t go = d.objects[o].group.gens();
    IntMatrix m(go, red.group.gens());
    for (std::size_t i = 0; i < go; ++i) {
      IntVec e(go);
      e[i] = 1;
      const IntVec img = red.group.element(mul(embed(o, e), red.to_reduced)).coords;
      for (std::size_t j = 0; j < img.size(); ++j) m(i, j) = img[j];
    }
    out.legs.emplace_back(d.objects[o].group, red.group, m);
  }
  out.cocone_verified = true;
  for (int f = 0; f < d.category.arrow_count(); ++f) {
    const Arrow& a = d.category.arrow(f);
    if (!(compose(out.legs[a.dst], d.arrows[f]) == out.legs[a.src])) out.cocone_verified = false;
  }
  for (int o = 0; o < n; ++o)
    if (!out.legs[o].is_well_defined()) out.cocone_verified = false;
  return out;
}

/// The map colim(F restricted to sub) -> colim(F) induced by the legs, and whether it is an iso.
struct RestrictionComparison {
  PogColimit restricted;
  PogColimit full;
  std::optional<GroupHom> map;
  PogIsoReport iso;
};

inline RestrictionComparison compare_restriction(const PogDiagram& d, const Subcategory& sub) {
  RestrictionComparison r;
  const PogDiagram dr = d.restrict_to(sub);
  r.restricted = colimit_pog(dr);
  r.full = colimit_pog(d);
  if (sub.objects.empty()) {
    // colim of the empty diagram is the initial (Z,1): 1 |-> unit.
    r.map = GroupHom(r.restricted.apex.group, r.full.apex.group,
                     IntMatrix::from_rows({r.full.apex.unit.coords}, r.full.apex.group.gens()));
  } else {
    // Reduced generators of the restricted apex, expressed through its legs.
    const FpAbGroup& rg = r.restricted.apex.group;
    std::vector<GroupElement> images_src;  // leg images of object generators in the restricted apex
    std::vector<GroupElement> images_dst;  // the same generators pushed into the full apex
    for (std::size_t i = 0; i < sub.objects.size(); ++i) {
      const int o = sub.objects[i];
      for (std::size_t k = 0; k < d.objects[o].group.gens(); ++k) {
        IntVec e(d.objects[o].group.gens());
        e[k] = 1;
        images_src.push_back(r.restricted.legs[i].apply(e));
        images_dst.push_back(r.full.legs[o].apply(e));
      }
    }
    IntMatrix m(rg.gens(), r.full.apex.group.gens());
    for (std::size_t j = 0; j < rg.gens(); ++j) {
      const auto coef = express_in_span(rg, images_src, rg.generator(j));
      if (!coef) throw std::logic_error("compare_restriction: legs do not generate the colimit");
      IntVec img(r.full.apex.group.gens());
      for (std::size_t t = 0; t < coef->size(); ++t) img = add(img, scale((*coef)[t], images_dst[t].coords));
      img = r.full.apex.group.element(img).coords;
      for (std::size_t k = 0; k < img.size(); ++k) m(j, k) = img[k];
    }
    r.map = GroupHom(rg, r.full.apex.group, m);
  }
  if (!r.map->is_well_defined()) throw std::logic_error("compare_restriction: induced map not well defined");
  r.iso = check_pog_iso(*r.map, r.restricted.apex, r.full.apex);
  return r;
}

// ---------------------------------------------------------------- EA

struct EaDiagram {
  FiniteCategory category;
  std::vector<EffectAlgebra> objects;
  std::vector<std::vector<Elem>> arrows;  // ea-hom maps, identities included

  bool functorial() const {
    for (int f = 0; f < category.arrow_count(); ++f) {
      const Arrow& a = category.arrow(f);
      const EAMorphism m{objects[a.src], objects[a.dst], arrows[f], MorphismKind::ea};
      if (!validate_morphism(m).valid()) return false;
      if (category.is_identity(f) && arrows[f] != objects[a.src].elements()) return false;
      for (int g = 0; g < category.arrow_count(); ++g) {
        const int gf = category.compose(g, f);
        if (gf < 0) continue;
        for (Elem x = 0; x < objects[a.src].size(); ++x)
          if (arrows[g][arrows[f][x]] != arrows[gf][x]) return false;
      }
    }
    return true;
  }

  bool discrete() const {
    for (int f = 0; f < category.arrow_count(); ++f)
      if (!category.is_identity(f)) return false;
    return true;
  }
};

struct EaColimit {
  SaturationStatus status = SaturationStatus::ok;
  std::optional<EffectAlgebra> apex;
  std::vector<std::vector<Elem>> legs;
  bool cocone_verified = false;
  std::vector<std::string> transcript;
};

/// Horizontal sum with its two coprojections.
inline EaColimit horizontal_sum_with_legs(const EffectAlgebra& e, const EffectAlgebra& f) {
  EaColimit c;
  c.apex = horizontal_sum(e, f);
  const int n = c.apex->size();
  std::vector<Elem> le(static_cast<std::size_t>(e.size())), lf(static_cast<std::size_t>(f.size()));
  if (n == 1) {
    c.legs = {le, lf};
    return c;
  }
  const Elem top = n - 1;
  Elem next = 1;
  for (Elem a = 0; a < e.size(); ++a) le[a] = a == 0 ? 0 : a == e.one() ? top : next++;
  for (Elem a = 0; a < f.size(); ++a) lf[a] = a == 0 ? 0 : a == f.one() ? top : next++;
  c.legs = {le, lf};
  return c;
}

inline bool verify_ea_cocone(const EaDiagram& d, const EffectAlgebra& apex, const std::vector<std::vector<Elem>>& legs) {
  for (int o = 0; o < d.category.objects(); ++o)
    if (!validate_morphism(EAMorphism{d.objects[o], apex, legs[o], MorphismKind::ea}).valid()) return false;
  for (int f = 0; f < d.category.arrow_count(); ++f) {
    const Arrow& a = d.category.arrow(f);
    for (Elem x = 0; x < d.objects[a.src].size(); ++x)
      if (legs[a.dst][d.arrows[f][x]] != legs[a.src][x]) return false;
  }
  return true;
}

/// Coproducts exactly as horizontal sums; other shapes by presentation saturation.
inline EaColimit colimit_ea(const EaDiagram& d, std::size_t budget = kDefaultSaturationBudget) {
  const int n = d.category.objects();
  EaColimit out;
  if (n == 0) {
    out.apex = EffectAlgebra::two_element();
    out.cocone_verified = true;
    return out;
  }
  if (d.discrete()) {
    out.apex = d.objects[0];
    out.legs = {d.objects[0].elements()};
    for (int o = 1; o < n; ++o) {
      EaColimit step = horizontal_sum_with_legs(*out.apex, d.objects[o]);
      for (auto& leg : out.legs)
        for (auto& x : leg) x = step.legs[0][x];
      out.legs.push_back(step.legs[1]);
      out.apex = step.apex;
    }
    out.transcript.push_back("coproduct computed as a horizontal sum");
  } else {
    Saturation s;
    std::vector<int> offset;
    for (const auto& e : d.objects) offset.push_back(s.add_elements(e.size()));
    s.set_zero(offset[0]);
    s.set_one(offset[0] + d.objects[0].one());
    for (int o = 0; o < n; ++o) {
      const EffectAlgebra& e = d.objects[o];
      s.identify(offset[o], offset[0]);
      s.identify(offset[o] + e.one(), offset[0] + d.objects[0].one());
      for (Elem a = 1; a < e.size(); ++a)
        for (Elem b = a; b < e.size(); ++b)
          if (auto c = e.sum(a, b)) s.add_sum(offset[o] + a, offset[o] + b, offset[o] + *c);
    }
    for (int f = 0; f < d.category.arrow_count(); ++f) {
      const Arrow& a = d.category.arrow(f);
      for (Elem x = 0; x < d.objects[a.src].size(); ++x) s.identify(offset[a.src] + x, offset[a.dst] + d.arrows[f][x]);
    }
    SaturationResult r = s.run(budget);
    out.status = r.status;
    out.transcript = r.transcript;
    if (r.status != SaturationStatus::ok) return out;
    out.apex = r.algebra;
    for (int o = 0; o < n; ++o) {
      std::vector<Elem> leg(static_cast<std::size_t>(d.objects[o].size()));
      for (Elem x = 0; x < d.objects[o].size(); ++x) leg[x] = r.map[offset[o] + x];
      out.legs.push_back(std::move(leg));
    }
    out.transcript.push_back("saturated presentation: " + std::to_string(r.classes) + " classes, " +
                             std::to_string(r.created) + " created elements");
  }
  out.cocone_verified = verify_ea_cocone(d, *out.apex, out.legs);
  return out;
}

/// Unique ea-hom out of a colimit apex agreeing with a cocone, if any.
inline std::vector<std::vector<Elem>> induced_maps(const EaColimit& c, const EffectAlgebra& target,
                                                   const std::vector<std::vector<Elem>>& cocone,
                                                   std::size_t limit = 2) {
  const EffectAlgebra& apex = *c.apex;
  AdditiveSolver s(target, apex.size());
  s.fix(0, 0);
  s.fix(apex.one(), target.one());
  add_domain_sums(s, apex, [](Elem x) { return x; });
  for (std::size_t o = 0; o < c.legs.size(); ++o)
    for (std::size_t x = 0; x < c.legs[o].size(); ++x) s.fix(c.legs[o][x], cocone[o][x]);
  return s.all(limit);
}

enum class ComparisonStatus { iso, not_iso, undecided };

struct ComparisonReport {
  ComparisonStatus status = ComparisonStatus::undecided;
  std::size_t left_size = 0;   // |colim(E (x) F(d))|
  std::size_t right_size = 0;  // |E (x) colim F|
  std::vector<Elem> map;
  bool candidates_certified = true;
  std::string note;
};

/// h: colim_d (E (x) F(d)) -> E (x) colim_d F(d), induced by id_E (x) (legs).
inline ComparisonReport canonical_comparison(const EffectAlgebra& e, const EaDiagram& d, int certify_bound = 0,
                                             std::size_t budget = kDefaultSaturationBudget) {
  ComparisonReport r;
  auto certified = [&](const TensorCandidate& c) {
    return certify_bound <= 0 || certify_universal(c, certify_bound).certified();
  };
  const EaColimit colim = colimit_ea(d, budget);
  if (colim.status != SaturationStatus::ok || !colim.cocone_verified) {
    r.note = "colimit of the diagram not computed";
    return r;
  }
  const TensorSaturation right = saturate_tensor(e, *colim.apex, budget);
  if (!right.candidate) {
    r.note = "E (x) colim F not computed within budget";
    return r;
  }
  const int n = d.category.objects();
  EaDiagram td;
  td.category = d.category;
  std::vector<TensorCandidate> cands;
  for (int o = 0; o < n; ++o) {
    const TensorSaturation t = saturate_tensor(e, d.objects[o], budget);
    if (!t.candidate) {
      r.note = "E (x) F(d) not computed within budget";
      return r;
    }
    if (!certified(*t.candidate)) r.candidates_certified = false;
    cands.push_back(*t.candidate);
    td.objects.push_back(t.candidate->algebra);
  }
  if (!certified(*right.candidate)) r.candidates_certified = false;
  const EAMorphism id_e = identity_morphism(e);
  for (int f = 0; f < d.category.arrow_count(); ++f) {
    const Arrow& a = d.category.arrow(f);
    const EAMorphism ff{d.objects[a.src], d.objects[a.dst], d.arrows[f], MorphismKind::ea};
    const HomFactorization hf = tensor_of_homs(id_e, ff, cands[a.src], cands[a.dst]);
    if (!hf.map) {
      r.note = "id (x) F(f) does not factor uniquely";
      return r;
    }
    td.arrows.push_back(hf.map->map);
  }
  const EaColimit left = colimit_ea(td, budget);
  if (left.status != SaturationStatus::ok || !left.cocone_verified) {
    r.note = "colimit of the tensored diagram not computed";
    return r;
  }
  std::vector<std::vector<Elem>> cocone;
  for (int o = 0; o < n; ++o) {
    const EAMorphism leg{d.objects[o], *colim.apex, colim.legs[o], MorphismKind::ea};
    const HomFactorization hf = tensor_of_homs(id_e, leg, cands[o], *right.candidate);
    if (!hf.map) {
      r.note = "id (x) leg does not factor uniquely";
      return r;
    }
    cocone.push_back(hf.map->map);
  }
  if (n == 0) cocone = {};
  r.left_size = static_cast<std::size_t>(left.apex->size());
  r.right_size = static_cast<std::size_t>(right.candidate->algebra.size());
  std::vector<std::vector<Elem>> hs;
  if (n == 0) {
    // Empty diagram: colimits are the initial 2 and E (x) 2 ~ E; h is the unique map out of 2.
    hs = enumerate_morphisms(*left.apex, right.candidate->algebra, MorphismKind::ea).empty()
             ? std::vector<std::vector<Elem>>{}
             : std::vector<std::vector<Elem>>{enumerate_morphisms(*left.apex, right.candidate->algebra,
                                                                  MorphismKind::ea)[0].map};
  } else {
    hs = induced_maps(left, right.candidate->algebra, cocone);
  }
  if (hs.size() != 1) {
    r.note = hs.empty() ? "no induced map" : "induced map not unique";
    return r;
  }
  r.map = hs[0];
  const EAMorphism h{*left.apex, right.candidate->algebra, hs[0], MorphismKind::ea};
  r.status = is_ea_isomorphism(h) ? ComparisonStatus::iso : ComparisonStatus::not_iso;
  if (!r.candidates_certified && r.status == ComparisonStatus::iso) r.status = ComparisonStatus::undecided;
  return r;
}

}  // namespace effalg
