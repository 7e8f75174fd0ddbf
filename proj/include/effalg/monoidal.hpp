#pragma once
// Gr as a strong monoidal functor, checked on finite instances: the comparison
// map gamma: Gr(E (x) F) -> Gr E (x) Gr F, its inverse mu, the unit map epsilon,
// unitality, associativity, the conjugacy square and the hom-interval iso.
//
// Every diagram is checked by evaluating both composites on elements [x],
// [x] (x) [y] or ([x] (x) [y]) (x) [z]. These generate the domains, so agreement
// on them is agreement of the homomorphisms; the full matrices are compared too.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "effalg/hom_gea.hpp"
#include "effalg/pog.hpp"
#include "effalg/pog_hom.hpp"
#include "effalg/tensor_ea.hpp"

namespace effalg {

struct CheckedEquation {
  std::string label;
  std::string lhs;  // normal forms
  std::string rhs;
  bool holds = false;
};

struct MonoidalReport {
  bool passed = true;
  bool undecided = false;
  std::vector<CheckedEquation> equations;
  std::vector<std::string> notes;

  bool ok() const { return passed && !undecided; }

  bool check(std::string label, const IntVec& lhs, const IntVec& rhs) {
    const bool holds = lhs == rhs;
    equations.push_back({std::move(label), to_string(lhs), to_string(rhs), holds});
    passed = passed && holds;
    return holds;
  }

  bool check(std::string label, bool holds) {
    equations.push_back({std::move(label), holds ? "true" : "false", "true", holds});
    passed = passed && holds;
    return holds;
  }

  void fail(std::string note) {
    passed = false;
    notes.push_back(std::move(note));
  }

  void give_up(std::string note) {
    undecided = true;
    notes.push_back(std::move(note));
  }

  void absorb(const MonoidalReport& other, const std::string& prefix) {
    for (const auto& e : other.equations) equations.push_back({prefix + e.label, e.lhs, e.rhs, e.holds});
    for (const auto& n : other.notes) notes.push_back(prefix + n);
    passed = passed && other.passed;
    undecided = undecided || other.undecided;
  }

  const CheckedEquation* first_failure() const {
    for (const auto& e : equations)
      if (!e.holds) return &e;
    return nullptr;
  }
};

/// For each element of the candidate, a list of pairs (a, b) whose simple
/// tensors sum to it; nullopt when the element is not generated.
inline std::vector<std::optional<std::vector<std::pair<Elem, Elem>>>> simple_decompositions(
    const TensorCandidate& c) {
  const EffectAlgebra& g = c.algebra;
  std::vector<std::optional<std::vector<std::pair<Elem, Elem>>>> dec(static_cast<std::size_t>(g.size()));
  dec[0] = std::vector<std::pair<Elem, Elem>>{};
  for (Elem a = 0; a < c.left.size(); ++a)
    for (Elem b = 0; b < c.right.size(); ++b) {
      const Elem t = c.beta(a, b);
      if (!dec[t]) dec[t] = std::vector<std::pair<Elem, Elem>>{{a, b}};
    }
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem x = 0; x < g.size(); ++x)
      for (Elem y = x; y < g.size(); ++y)
        if (dec[x] && dec[y])
          if (auto s = g.sum(x, y); s && !dec[*s]) {
            auto v = *dec[x];
            v.insert(v.end(), dec[y]->begin(), dec[y]->end());
            dec[*s] = std::move(v);
            grew = true;
          }
  }
  return dec;
}

/// gamma_{E,F} with everything needed to evaluate it.
struct ComparisonMap {
  TensorCandidate candidate;
  CertificationReport certification;
  UniversalGroup gr_left;
  UniversalGroup gr_right;
  UniversalGroup gr_tensor;
  PogTensor target;  // Gr E (x) Gr F
  std::optional<GroupHom> gamma;
  MonoidalReport report;

  /// [x] (x) [y] in the target.
  GroupElement pure(Elem x, Elem y) const { return target.pure(gr_left.eta[x], gr_right.eta[y]); }
};

/// Defines gamma on every [t] through a decomposition of t into simple tensors,
/// then checks each defining relation of Gr(E (x) F) and [x (x) y] |-> [x] (x) [y].
inline ComparisonMap gamma_map(const TensorCandidate& c, int certify_bound = kDefaultCertificationBound) {
  ComparisonMap m{c,
                  certify_bound > 0 ? certify_universal(c, certify_bound) : CertificationReport{},
                  gr_universal_group(c.left),
                  gr_universal_group(c.right),
                  gr_universal_group(c.algebra),
                  {},
                  std::nullopt,
                  {}};
  m.target = tensor_pog(m.gr_left.pog, m.gr_right.pog);
  if (certify_bound > 0 && !m.certification.certified()) {
    m.report.fail("candidate not certified: " + m.certification.note);
    return m;
  }
  const auto dec = simple_decompositions(c);
  const FpAbGroup& tg = m.target.pog.group;
  std::vector<IntVec> value;
  for (Elem t = 0; t < c.algebra.size(); ++t) {
    if (!dec[t]) {
      m.report.fail("element " + std::to_string(t) + " is not a sum of simple tensors");
      return m;
    }
    IntVec v(tg.gens());
    for (auto [a, b] : *dec[t]) v = add(v, m.pure(a, b).coords);
    value.push_back(tg.element(v).coords);
  }
  const IntMatrix& pres = m.gr_tensor.presentation;
  for (std::size_t r = 0; r < pres.rows(); ++r) {
    IntVec img(tg.gens());
    for (std::size_t t = 0; t < pres.cols(); ++t)
      if (pres(r, t) != 0) img = add(img, scale(pres(r, t), value[t]));
    m.report.check("relation " + std::to_string(r) + " of Gr(E (x) F) maps to 0", tg.element(img).coords,
                   tg.zero().coords);
  }
  const std::size_t k = m.gr_tensor.pog.group.gens();
  IntMatrix mat(k, tg.gens());
  for (std::size_t i = 0; i < k; ++i) {
    IntVec row(tg.gens());
    for (Elem t = 0; t < c.algebra.size(); ++t) {
      const Int& coef = m.gr_tensor.from_reduced(i, static_cast<std::size_t>(t));
      if (coef != 0) row = add(row, scale(coef, value[t]));
    }
    for (std::size_t j = 0; j < row.size(); ++j) mat(i, j) = row[j];
  }
  GroupHom g(m.gr_tensor.pog.group, tg, mat);
  if (!m.report.check("gamma well defined on the reduced presentation", g.is_well_defined())) return m;
  for (Elem a = 0; a < c.left.size(); ++a)
    for (Elem b = 0; b < c.right.size(); ++b)
      m.report.check("gamma[" + std::to_string(a) + "(x)" + std::to_string(b) + "]",
                     g.apply(m.gr_tensor.eta[c.beta(a, b)]).coords, m.pure(a, b).coords);
  m.gamma = std::move(g);
  return m;
}

inline std::optional<ComparisonMap> gamma_map(const EffectAlgebra& e, const EffectAlgebra& f,
                                              int certify_bound = kDefaultCertificationBound,
                                              std::size_t budget = kDefaultSaturationBudget) {
  const TensorSaturation t = saturate_tensor(e, f, budget);
  if (!t.candidate) return std::nullopt;
  return gamma_map(*t.candidate, certify_bound);
}

/// The unique ea-hom domain -> target with the given values, if exactly one exists.
inline std::optional<std::vector<Elem>> unique_hom_with(const EffectAlgebra& domain, const EffectAlgebra& target,
                                                        const std::vector<std::pair<Elem, Elem>>& values) {
  AdditiveSolver s(target, domain.size());
  s.fix(0, 0);
  s.fix(domain.one(), target.one());
  add_domain_sums(s, domain, [](Elem x) { return x; });
  for (auto [x, y] : values) s.fix(x, y);
  auto all = s.all(2);
  if (all.size() != 1) return std::nullopt;
  return all[0];
}

/// gamma is a po-group iso respecting units, and mu = gamma^-1 is a two-sided inverse.
inline MonoidalReport verify_gamma_iso(const ComparisonMap& m) {
  MonoidalReport r;
  if (!m.gamma) {
    r.fail("gamma not constructed");
    return r;
  }
  const PogIsoReport iso = check_pog_iso(*m.gamma, m.gr_tensor.pog, m.target.pog);
  r.check("gamma is a group isomorphism", iso.group_iso);
  if (!iso.group_iso) return r;
  r.check("gamma([1 (x) 1]) = [1] (x) [1]", m.gamma->apply(m.gr_tensor.pog.unit).coords, m.target.pog.unit.coords);
  if (iso.cones_match == Tri::unknown) r.give_up("cone comparison undecided within budget");
  else r.check("gamma and mu map cone generators into the cones", iso.cones_match == Tri::yes);
  const GroupHom& mu = *iso.inverse;
  r.check("mu o gamma = id", compose(mu, *m.gamma) == GroupHom::identity(m.gr_tensor.pog.group));
  r.check("gamma o mu = id", compose(*m.gamma, mu) == GroupHom::identity(m.target.pog.group));
  for (Elem a = 0; a < m.candidate.left.size(); ++a)
    for (Elem b = 0; b < m.candidate.right.size(); ++b)
      r.check("mu([" + std::to_string(a) + "] (x) [" + std::to_string(b) + "])", mu.apply(m.pure(a, b)).coords,
              m.gr_tensor.eta[m.candidate.beta(a, b)].coords);
  return r;
}

/// epsilon: (Z,1) -> Gr(2), 1 |-> [1].
inline MonoidalReport verify_epsilon() {
  MonoidalReport r;
  const UniversalGroup g2 = gr_universal_group(EffectAlgebra::two_element());
  const UnitalPoGroup z = integers(1);
  const GroupHom eps(z.group, g2.pog.group, IntMatrix::from_rows({g2.eta[1].coords}, g2.pog.group.gens()));
  const PogIsoReport iso = check_pog_iso(eps, z, g2.pog);
  r.check("epsilon is an isomorphism of unital po-groups", iso.ok());
  return r;
}

/// Naturality of gamma along g: E -> E', h: F -> F'.
inline MonoidalReport verify_naturality(const ComparisonMap& src, const ComparisonMap& dst, const EAMorphism& g,
                                        const EAMorphism& h) {
  MonoidalReport r;
  if (!src.gamma || !dst.gamma) {
    r.fail("gamma not constructed");
    return r;
  }
  const HomFactorization gh = tensor_of_homs(g, h, src.candidate, dst.candidate);
  if (!gh.map) {
    r.fail("g (x) h does not factor uniquely");
    return r;
  }
  const GroupHom left = compose(*dst.gamma, gr_morphism(src.gr_tensor, dst.gr_tensor, gh.map->map));
  const GroupHom right = compose(tensor_homs(gr_morphism(src.gr_left, dst.gr_left, g.map),
                                             gr_morphism(src.gr_right, dst.gr_right, h.map), src.target.data,
                                             dst.target.data),
                                 *src.gamma);
  for (Elem a = 0; a < src.candidate.left.size(); ++a)
    for (Elem b = 0; b < src.candidate.right.size(); ++b) {
      const GroupElement x = src.gr_tensor.eta[src.candidate.beta(a, b)];
      r.check("naturality at [" + std::to_string(a) + " (x) " + std::to_string(b) + "]", left.apply(x).coords,
              right.apply(x).coords);
    }
  r.check("naturality as homomorphisms", left == right);
  return r;
}

/// gamma o Gr(iota_{E,F}) = iota'_{Gr E, Gr F}, x |-> x (x) [1].
inline MonoidalReport verify_iota_compatibility(const ComparisonMap& m) {
  MonoidalReport r;
  if (!m.gamma) {
    r.fail("gamma not constructed");
    return r;
  }
  const GroupHom gi = compose(*m.gamma, gr_morphism(m.gr_left, m.gr_tensor, iota(m.candidate).map));
  for (Elem a = 0; a < m.candidate.left.size(); ++a)
    r.check("iota at [" + std::to_string(a) + "]", gi.apply(m.gr_left.eta[a]).coords,
            m.target.pure(m.gr_left.eta[a], m.gr_right.pog.unit).coords);
  return r;
}

/// Both unitality squares for E: gamma_{2,E} o Gr(lambda^-1) = (! (x) 1) o lambda'^-1 and
/// gamma_{E,2} o Gr(rho^-1) = (1 (x) !) o rho'^-1.
inline MonoidalReport verify_unitality(const EffectAlgebra& e, int certify_bound = kDefaultCertificationBound) {
  MonoidalReport r;
  const EffectAlgebra two = EffectAlgebra::two_element();
  const UnitalPoGroup z = integers(1);
  for (int side = 0; side < 2; ++side) {
    const std::string name = side == 0 ? "left unitality" : "right unitality";
    const auto m = side == 0 ? gamma_map(two, e, certify_bound) : gamma_map(e, two, certify_bound);
    if (!m || !m->gamma) {
      r.fail(name + ": comparison map not constructed");
      continue;
    }
    r.absorb(m->report, name + ": ");
    // lambda_E: 2 (x) E -> E, 1 (x) x |-> x (resp. rho_E: x (x) 1 |-> x)
    std::vector<std::pair<Elem, Elem>> fixes;
    for (Elem x = 0; x < e.size(); ++x)
      fixes.push_back({side == 0 ? m->candidate.beta(1, x) : m->candidate.beta(x, 1), x});
    const auto lam = unique_hom_with(m->candidate.algebra, e, fixes);
    if (!lam || !r.check(name + ": structure map is an ea-iso",
                         is_ea_isomorphism(EAMorphism{m->candidate.algebra, e, *lam, MorphismKind::ea})))
      continue;
    std::vector<Elem> inv(static_cast<std::size_t>(e.size()));
    for (Elem t = 0; t < m->candidate.algebra.size(); ++t) inv[(*lam)[t]] = t;
    const UniversalGroup& gre = side == 0 ? m->gr_right : m->gr_left;
    const GroupHom left = compose(*m->gamma, gr_morphism(gre, m->gr_tensor, inv));
    // lambda'^-1: B -> Z (x) B and rho'^-1: A -> A (x) Z are identities on coordinates.
    const UniversalGroup& gr2 = side == 0 ? m->gr_left : m->gr_right;
    const GroupHom bang(z.group, gr2.pog.group, IntMatrix::from_rows({gr2.eta[1].coords}, gr2.pog.group.gens()));
    const GroupHom id = GroupHom::identity(gre.pog.group);
    const PogTensor zt = side == 0 ? tensor_pog(z, gre.pog) : tensor_pog(gre.pog, z);
    const GroupHom unit_inv(gre.pog.group, zt.pog.group, IntMatrix::identity(gre.pog.group.gens()));
    if (!r.check(name + ": unitor of Gr is well defined", unit_inv.is_well_defined())) continue;
    const GroupHom bang_id = side == 0 ? tensor_homs(bang, id, zt.data, m->target.data)
                                       : tensor_homs(id, bang, zt.data, m->target.data);
    const GroupHom right = compose(bang_id, unit_inv);
    for (Elem x = 0; x < e.size(); ++x)
      r.check(name + " at [" + std::to_string(x) + "]", left.apply(gre.eta[x]).coords,
              right.apply(gre.eta[x]).coords);
    r.check(name + " as homomorphisms", left == right);
  }
  return r;
}

/// The associativity diagram on ([x] (x) [y]) (x) [z]:
/// mu_{E,FG} o (1 (x) mu_{F,G}) o alpha' = Gr(alpha) o mu_{EF,G} o (mu_{E,F} (x) 1).
inline MonoidalReport verify_associativity(const EffectAlgebra& e, const EffectAlgebra& f, const EffectAlgebra& g,
                                           int certify_bound = kDefaultCertificationBound) {
  MonoidalReport r;
  const auto ef = gamma_map(e, f, certify_bound);
  const auto fg = gamma_map(f, g, certify_bound);
  if (!ef || !fg || !ef->gamma || !fg->gamma) {
    r.fail("inner comparison maps not constructed");
    return r;
  }
  const auto ef_g = gamma_map(ef->candidate.algebra, g, certify_bound);
  const auto e_fg = gamma_map(e, fg->candidate.algebra, certify_bound);
  if (!ef_g || !e_fg || !ef_g->gamma || !e_fg->gamma) {
    r.fail("outer comparison maps not constructed");
    return r;
  }
  const ComparisonMap* maps[] = {&*ef, &*fg, &*ef_g, &*e_fg};
  const char* names[] = {"EF", "FG", "(EF)G", "E(FG)"};
  std::vector<GroupHom> mu;
  for (int i = 0; i < 4; ++i) {
    const IsomorphismDecision d = is_isomorphism(*maps[i]->gamma);
    if (!r.check(std::string("gamma_") + names[i] + " invertible", d.is_iso)) return r;
    mu.push_back(*d.inverse);
  }
  // alpha in EA: (x (x) y) (x) z |-> x (x) (y (x) z)
  std::vector<std::pair<Elem, Elem>> fixes;
  for (Elem x = 0; x < e.size(); ++x)
    for (Elem y = 0; y < f.size(); ++y)
      for (Elem z = 0; z < g.size(); ++z)
        fixes.push_back({ef_g->candidate.beta(ef->candidate.beta(x, y), z),
                         e_fg->candidate.beta(x, fg->candidate.beta(y, z))});
  const auto alpha = unique_hom_with(ef_g->candidate.algebra, e_fg->candidate.algebra, fixes);
  if (!alpha || !r.check("alpha is an ea-iso", is_ea_isomorphism(EAMorphism{ef_g->candidate.algebra,
                                                                            e_fg->candidate.algebra, *alpha,
                                                                            MorphismKind::ea})))
    return r;
  const GroupHom gr_alpha = gr_morphism(ef_g->gr_tensor, e_fg->gr_tensor, *alpha);

  const UnitalPoGroup &ge = ef->gr_left.pog, &gg = fg->gr_right.pog;
  const PogTensor ab_c = tensor_pog(ef->target.pog, gg);  // (Gr E (x) Gr F) (x) Gr G
  const PogTensor a_bc = tensor_pog(ge, fg->target.pog);  // Gr E (x) (Gr F (x) Gr G)
  // Both triple tensors use the coordinate (i, j, k) in the same position.
  const GroupHom alpha_pog(ab_c.pog.group, a_bc.pog.group, IntMatrix::identity(ab_c.pog.group.gens()));
  if (!r.check("alpha' is well defined", alpha_pog.is_well_defined())) return r;
  const GroupHom top = compose(
      mu[3], compose(tensor_homs(GroupHom::identity(ge.group), mu[1], a_bc.data, e_fg->target.data), alpha_pog));
  const GroupHom bottom = compose(
      gr_alpha, compose(mu[2], tensor_homs(mu[0], GroupHom::identity(gg.group), ab_c.data, ef_g->target.data)));
  for (Elem x = 0; x < e.size(); ++x)
    for (Elem y = 0; y < f.size(); ++y)
      for (Elem z = 0; z < g.size(); ++z) {
        const GroupElement gen = ab_c.pure(ef->pure(x, y), fg->gr_right.eta[z]);
        const std::string at = "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
        r.check("associativity at " + at, top.apply(gen).coords, bottom.apply(gen).coords);
        r.check("associativity value at " + at, top.apply(gen).coords,
                e_fg->gr_tensor.eta[e_fg->candidate.beta(x, fg->candidate.beta(y, z))].coords);
      }
  r.check("associativity as homomorphisms", top == bottom);
  return r;
}

struct StrongMonoidalReport {
  MonoidalReport gamma_iso;
  MonoidalReport epsilon;
  MonoidalReport unitality;
  MonoidalReport associativity;
  MonoidalReport iota;

  MonoidalReport combined() const {
    MonoidalReport r;
    r.absorb(gamma_iso, "gamma: ");
    r.absorb(epsilon, "epsilon: ");
    r.absorb(unitality, "unitality: ");
    r.absorb(associativity, "associativity: ");
    r.absorb(iota, "iota: ");
    r.notes.push_back("checked on generating elements; agreement there is agreement of homomorphisms");
    return r;
  }

  bool ok() const { return combined().ok(); }
};

inline StrongMonoidalReport verify_strong_monoidality(const EffectAlgebra& e, const EffectAlgebra& f,
                                                      const EffectAlgebra& g,
                                                      int certify_bound = kDefaultCertificationBound) {
  StrongMonoidalReport r;
  if (const auto m = gamma_map(e, f, certify_bound)) {
    r.gamma_iso.absorb(m->report, "");
    r.gamma_iso.absorb(verify_gamma_iso(*m), "");
    r.iota = verify_iota_compatibility(*m);
  } else {
    r.gamma_iso.fail("tensor candidate not constructed");
  }
  r.epsilon = verify_epsilon();
  r.unitality.absorb(verify_unitality(e, certify_bound), "E: ");
  r.unitality.absorb(verify_unitality(f, certify_bound), "F: ");
  r.associativity = verify_associativity(e, f, g, certify_bound);
  return r;
}

/// The conjugacy square at F: y |-> (x |-> {gamma[x (x) y]}) against y |-> beta(g_y), g_y: [x] |-> [x] (x) [y].
inline MonoidalReport verify_conjugacy_square(const ComparisonMap& m, std::size_t budget = kDefaultGammaBudget) {
  MonoidalReport r;
  if (!m.gamma) {
    r.fail("gamma not constructed");
    return r;
  }
  const EffectAlgebra& e = m.candidate.left;
  const EffectAlgebra& f = m.candidate.right;
  const GammaResult gamma = gamma_interval(m.target.pog, budget);
  if (gamma.status != GammaStatus::ok) {
    r.give_up("Gamma(Gr E (x) Gr F): " + gamma.note);
    return r;
  }
  // h = iota': [x] |-> [x] (x) [1], the base point of the coslice.
  const UniversalGroup& ge = m.gr_left;
  auto tensor_with = [&](const GroupElement& y) {
    IntMatrix mat(ge.pog.group.gens(), m.target.pog.group.gens());
    for (std::size_t k = 0; k < ge.pog.group.gens(); ++k) {
      const IntVec v = m.target.pure(ge.pog.group.generator(k), y).coords;
      for (std::size_t j = 0; j < v.size(); ++j) mat(k, j) = v[j];
    }
    return GroupHom(ge.pog.group, m.target.pog.group, mat);
  };
  const GroupHom h = tensor_with(m.gr_right.pog.unit);
  const HomInterval homs = gamma_hom_interval(ge.pog, m.target.pog, h, budget);
  if (homs.status != GammaStatus::ok) {
    r.give_up("Gamma([Gr E, Gr E (x) Gr F], h): " + homs.note);
    return r;
  }
  std::vector<std::vector<Elem>> first, second;
  for (Elem y = 0; y < f.size(); ++y) {
    std::vector<Elem> c1, c2;
    const GroupHom gy = tensor_with(m.gr_right.eta[y]);
    r.check("eta'_F(" + std::to_string(y) + ") lies in Gamma([A, B], h)", homs.index_of(gy).has_value());
    for (Elem x = 0; x < e.size(); ++x) {
      const GroupElement v1 = m.gamma->apply(m.gr_tensor.eta[m.candidate.beta(x, y)]);
      const GroupElement v2 = gy.apply(ge.eta[x]);
      r.check("square at y=" + std::to_string(y) + ", x=" + std::to_string(x), v1.coords, v2.coords);
      const auto i1 = gamma.index_of(v1), i2 = gamma.index_of(v2);
      if (!i1 || !i2) {
        r.fail("value outside Gamma at y=" + std::to_string(y) + ", x=" + std::to_string(x));
        return r;
      }
      c1.push_back(*i1);
      c2.push_back(*i2);
    }
    first.push_back(std::move(c1));
    second.push_back(std::move(c2));
  }
  // Both composites land in [E, Gamma(...)] below the image of 1.
  const HomGEA ambient = build_hom_gea(e, *gamma.algebra);
  for (Elem y = 0; y < f.size(); ++y)
    r.check("composite at y=" + std::to_string(y) + " is a gea-hom", ambient.index_of(first[y]).has_value());
  // Composite y |-> map is itself an ea-hom F -> [E, Gamma]_{f}.
  if (r.passed) {
    const IntervalEA iv = build_interval(ambient, first[f.one()]);
    std::vector<Elem> as_hom;
    for (Elem y = 0; y < f.size(); ++y) {
      const auto idx = iv.index_of(first[y]);
      if (!idx) {
        r.fail("composite at y=" + std::to_string(y) + " is not below the image of 1");
        return r;
      }
      as_hom.push_back(*idx);
    }
    r.check("y |-> composite is an ea-hom into the interval",
            validate_morphism(EAMorphism{f, iv.algebra, as_hom, MorphismKind::ea}).valid());
  }
  return r;
}

struct AdjunctionIsoReport {
  MonoidalReport report;
  std::size_t left_size = 0;   // |[E, Gamma(B,v)]_hbar|
  std::size_t right_size = 0;  // |Gamma([Gr E, B], h)|
  std::vector<Elem> bijection;  // right index -> left index

  bool ok() const { return report.ok(); }
};

/// [E, Gamma(B,v)]_hbar ~ Gamma([Gr E, B], h) through g |-> gbar, gbar(x) = {g([x])}.
inline AdjunctionIsoReport verify_under_adjunction_iso(const EffectAlgebra& e, const UnitalPoGroup& b,
                                                       const GroupHom& h, std::size_t budget = kDefaultGammaBudget) {
  AdjunctionIsoReport out;
  MonoidalReport& r = out.report;
  const UniversalGroup gr = gr_universal_group(e);
  if (!(h.domain() == gr.pog.group) || !(h.codomain() == b.group)) {
    r.fail("h is not a map Gr E -> B");
    return out;
  }
  const GammaResult gamma = gamma_interval(b, budget);
  if (gamma.status != GammaStatus::ok) {
    r.give_up("Gamma(B,v): " + gamma.note);
    return out;
  }
  auto bar = [&](const GroupHom& g) -> std::optional<std::vector<Elem>> {
    std::vector<Elem> m;
    for (Elem x = 0; x < e.size(); ++x) {
      const auto i = gamma.index_of(g.apply(gr.eta[x]));
      if (!i) return std::nullopt;
      m.push_back(*i);
    }
    return m;
  };
  const auto hbar = bar(h);
  if (!r.check("hbar lands in Gamma(B,v)", hbar.has_value())) return out;
  const HomGEA ambient = build_hom_gea(e, *gamma.algebra);
  if (!r.check("hbar is a gea-hom", ambient.index_of(*hbar).has_value())) return out;
  const IntervalEA left = build_interval(ambient, *hbar);
  const HomInterval right = gamma_hom_interval(gr.pog, b, h, budget);
  if (right.status != GammaStatus::ok) {
    r.give_up("Gamma([Gr E, B], h): " + right.note);
    return out;
  }
  out.left_size = static_cast<std::size_t>(left.algebra.size());
  out.right_size = right.homs.size();
  for (const auto& g : right.homs) {
    const auto gb = bar(g);
    const auto idx = gb ? left.index_of(*gb) : std::nullopt;
    if (!idx) {
      r.fail("gbar not in the left interval");
      return out;
    }
    out.bijection.push_back(*idx);
  }
  const EAMorphism phi{*right.algebra, left.algebra, out.bijection, MorphismKind::ea};
  r.check("|left| = |right|", out.left_size == out.right_size);
  r.check("g |-> gbar is an ea-isomorphism", is_ea_isomorphism(phi));
  return out;
}

}  // namespace effalg
