#pragma once
// Unital partially ordered Abelian groups with finitely generated cones.
//
// Cone membership is decided by certificates: a nonnegative integer
// combination (member), a rational functional that is nonnegative on the
// cone and negative on the query (refuted), or an exhausted bounded search
// under a strictly positive functional (refuted by exhaustion).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "effalg/effect_algebra.hpp"
#include "effalg/fpab.hpp"
#include "effalg/lp.hpp"
#include "effalg/numeric.hpp"

namespace effalg {

enum class Tri { yes, no, unknown };

struct UnitalPoGroup {
  FpAbGroup group;
  std::vector<GroupElement> cone;  // nonzero, duplicate-free, first-occurrence order
  GroupElement unit;

  GroupElement element(const IntVec& x) const { return group.element(x); }
};

inline UnitalPoGroup make_pog(const FpAbGroup& g, const std::vector<IntVec>& cone, const IntVec& unit) {
  UnitalPoGroup a{g, {}, g.element(unit)};
  std::set<GroupElement> seen;
  for (const IntVec& c : cone) {
    GroupElement e = g.element(c);
    if (is_zero_vec(e.coords) || !seen.insert(e).second) continue;
    a.cone.push_back(std::move(e));
  }
  return a;
}

/// (Z, cone N, unit n).
inline UnitalPoGroup integers(long n) { return make_pog(FpAbGroup::free(1), {int_vec({1})}, int_vec({n})); }

/// (Z^k, cone N^k, given unit).
inline UnitalPoGroup standard_lattice(const IntVec& unit) {
  const std::size_t k = unit.size();
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < k; ++i) {
    IntVec e(k);
    e[i] = 1;
    gens.push_back(e);
  }
  return make_pog(FpAbGroup::free(k), gens, unit);
}

/// Coordinates of x on the free invariant summands; rational functionals live on these.
inline RatVec free_part(const FpAbGroup& g, const IntVec& x) {
  const IntVec y = mul(x, g.smith().V);
  RatVec out;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (g.modulus(i) == 0) out.emplace_back(y[i]);
  return out;
}

inline std::size_t free_dim(const FpAbGroup& g) { return g.free_rank(); }

enum class ConeStatus { member, refuted, unknown };
enum class RefutationKind { none, functional, exhaustion };

struct ConeDecision {
  ConeStatus status = ConeStatus::unknown;
  IntVec lambda;        // member: nonnegative coefficients over the cone generators
  RefutationKind refutation = RefutationKind::none;
  RatVec functional;    // on free coordinates
  IntVec caps;          // exhaustion: per-generator coefficient caps that were swept
  std::uint64_t nodes = 0;

  bool member() const { return status == ConeStatus::member; }
  bool refuted() const { return status == ConeStatus::refuted; }
};

inline constexpr long kDefaultConeBudget = 64;

namespace detail {

struct ConeSearch {
  const UnitalPoGroup& a;
  std::vector<RatVec> free_gens;
  IntVec caps;
  std::optional<RatVec> positive;  // strictly positive on every generator with nonzero free part
  long sum_budget;
  std::uint64_t node_limit;
  std::uint64_t nodes = 0;
  bool hit_limit = false;
  IntVec lambda;

  bool residual_feasible(const RatVec& r, std::size_t from) const {
    const std::size_t d = r.size();
    if (d == 0) return true;
    RatMatrix m(d, a.cone.size() - from);
    for (std::size_t j = from; j < a.cone.size(); ++j)
      for (std::size_t i = 0; i < d; ++i) m(i, j - from) = free_gens[j][i];
    return solve_feasibility(m, r).feasible;
  }

  bool go(std::size_t i, const IntVec& residual, long used) {
    if (++nodes > node_limit) {
      hit_limit = true;
      return false;
    }
    if (i == a.cone.size()) return a.group.is_zero(residual);
    const RatVec r = free_part(a.group, residual);
    if (positive && dot(*positive, r) < 0) return false;
    if (!residual_feasible(r, i)) return false;
    Int cap = caps[i];
    if (!positive && cap > sum_budget - used) cap = sum_budget - used;
    IntVec cur = residual;
    for (Int k = 0; k <= cap; ++k) {
      lambda[i] = k;
      if (go(i + 1, cur, used + static_cast<long>(k.get_si()))) return true;
      if (hit_limit) return false;
      cur = sub(cur, a.cone[i].coords);
    }
    lambda[i] = 0;
    return false;
  }
};

}  // namespace detail

/// Decides v in the cone of A. `budget` bounds the coefficient sum when no
/// strictly positive functional exists and scales the node limit otherwise.
inline ConeDecision cone_member(const UnitalPoGroup& a, const GroupElement& v, long budget = kDefaultConeBudget) {
  ConeDecision out;
  const std::size_t k = a.cone.size();
  if (a.group.is_zero(v.coords)) {
    out.status = ConeStatus::member;
    out.lambda.assign(k, Int(0));
    return out;
  }
  const std::size_t d = free_dim(a.group);
  std::vector<RatVec> fg;
  for (const auto& c : a.cone) fg.push_back(free_part(a.group, c.coords));
  const RatVec w = free_part(a.group, v.coords);

  RatMatrix m(d, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < d; ++i) m(i, j) = fg[j][i];
  const LpResult lp = solve_feasibility(m, w);
  if (!lp.feasible) {
    out.status = ConeStatus::refuted;
    out.refutation = RefutationKind::functional;
    out.functional = lp.farkas;
    return out;
  }

  std::vector<RatVec> nonzero;
  for (const auto& g : fg)
    if (std::any_of(g.begin(), g.end(), [](const Rational& q) { return q != 0; })) nonzero.push_back(g);
  std::optional<RatVec> pos;
  if (nonzero.empty()) pos = RatVec(d);
  else pos = find_functional(nonzero, RatVec(nonzero.size(), Rational(1)), d);

  detail::ConeSearch s{a, fg, IntVec(k), pos, budget, static_cast<std::uint64_t>(budget) * 4096, 0, false,
                       IntVec(k)};
  for (std::size_t j = 0; j < k; ++j) {
    const bool torsion = std::all_of(fg[j].begin(), fg[j].end(), [](const Rational& q) { return q == 0; });
    if (torsion) {
      const auto ord = a.group.order(a.cone[j]);
      s.caps[j] = ord ? Int(*ord - 1) : Int(budget);
    } else if (pos) {
      const Rational q = dot(*pos, w) / dot(*pos, fg[j]);
      s.caps[j] = q < 0 ? Int(0) : Int(floor_div(q.get_num(), q.get_den()));
    } else {
      s.caps[j] = budget;
    }
  }
  const bool found = s.go(0, v.coords, 0);
  out.nodes = s.nodes;
  if (found) {
    out.status = ConeStatus::member;
    out.lambda = s.lambda;
    return out;
  }
  if (!s.hit_limit && pos) {
    out.status = ConeStatus::refuted;
    out.refutation = RefutationKind::exhaustion;
    out.functional = *pos;
    out.caps = s.caps;
  }
  return out;
}

inline ConeDecision cone_member(const UnitalPoGroup& a, const IntVec& v, long budget = kDefaultConeBudget) {
  return cone_member(a, a.group.element(v), budget);
}

/// Re-checks a decision without reusing the search that produced it.
inline bool verify_cone_decision(const UnitalPoGroup& a, const GroupElement& v, const ConeDecision& d) {
  const std::size_t k = a.cone.size();
  if (d.status == ConeStatus::unknown) return true;
  if (d.status == ConeStatus::member) {
    if (d.lambda.size() != k) return false;
    IntVec s(a.group.gens());
    for (std::size_t j = 0; j < k; ++j) {
      if (d.lambda[j] < 0) return false;
      s = add(s, scale(d.lambda[j], a.cone[j].coords));
    }
    return a.group.is_zero(sub(s, v.coords));
  }
  const RatVec w = free_part(a.group, v.coords);
  if (d.functional.size() != w.size()) return false;
  if (d.refutation == RefutationKind::functional) {
    for (const auto& c : a.cone)
      if (dot(d.functional, free_part(a.group, c.coords)) < 0) return false;
    return dot(d.functional, w) < 0;
  }
  if (d.refutation != RefutationKind::exhaustion || d.caps.size() != k) return false;
  std::vector<RatVec> fg;
  for (const auto& c : a.cone) fg.push_back(free_part(a.group, c.coords));
  const Rational target = dot(d.functional, w);
  for (std::size_t j = 0; j < k; ++j) {
    const Rational yc = dot(d.functional, fg[j]);
    const bool torsion = std::all_of(fg[j].begin(), fg[j].end(), [](const Rational& q) { return q == 0; });
    if (torsion) {
      const auto ord = a.group.order(a.cone[j]);
      if (!ord || d.caps[j] < *ord - 1) return false;
    } else {
      if (yc <= 0) return false;
      if (target >= 0 && Rational(d.caps[j] + 1) * yc <= target) return false;
    }
  }
  // Plain box sweep with only the functional bound for pruning.
  IntVec lam(k);
  std::function<bool(std::size_t, const IntVec&, Rational)> sweep = [&](std::size_t j, const IntVec& res,
                                                                         Rational left) -> bool {
    if (left < 0) return false;
    if (j == k) return a.group.is_zero(res);
    IntVec cur = res;
    const Rational yc = dot(d.functional, fg[j]);
    for (Int t = 0; t <= d.caps[j]; ++t) {
      if (sweep(j + 1, cur, left - Rational(t) * yc)) return true;
      cur = sub(cur, a.cone[j].coords);
    }
    return false;
  };
  return !sweep(0, v.coords, target);
}

inline Tri leq(const UnitalPoGroup& a, const GroupElement& x, const GroupElement& y, long budget = kDefaultConeBudget) {
  const ConeDecision d = cone_member(a, a.group.minus(y, x), budget);
  return d.member() ? Tri::yes : d.refuted() ? Tri::no : Tri::unknown;
}

/// A functional y >= 0 on the cone with y(x) = 0 and y(target) >= 1, if one exists.
inline std::optional<RatVec> face_separator(const UnitalPoGroup& a, const GroupElement& x, const GroupElement& target) {
  const std::size_t d = free_dim(a.group);
  std::vector<RatVec> rows;
  RatVec lower;
  for (const auto& c : a.cone) {
    rows.push_back(free_part(a.group, c.coords));
    lower.emplace_back(0);
  }
  const RatVec fx = free_part(a.group, x.coords);
  rows.push_back(fx);
  lower.emplace_back(0);
  RatVec nfx = fx;
  for (auto& q : nfx) q = -q;
  rows.push_back(nfx);
  lower.emplace_back(0);
  rows.push_back(free_part(a.group, target.coords));
  lower.emplace_back(1);
  return find_functional(rows, lower, d);
}

/// Is c <= n x for some n? Certified upward by doubling n, refuted by a face separator.
struct DominationDecision {
  Tri status = Tri::unknown;
  Int n = 0;
  std::optional<RatVec> separator;
};

inline DominationDecision dominated_by_multiple(const UnitalPoGroup& a, const GroupElement& x,
                                               const GroupElement& c, long max_n = 64,
                                               long budget = kDefaultConeBudget) {
  DominationDecision out;
  if (auto y = face_separator(a, x, c)) {
    out.status = Tri::no;
    out.separator = y;
    return out;
  }
  for (long n = 1; n <= max_n; n *= 2) {
    const ConeDecision d = cone_member(a, a.group.minus(a.group.times(n, x), c), budget);
    if (d.member()) {
      out.status = Tri::yes;
      out.n = n;
      return out;
    }
  }
  return out;
}

struct OrderUnitReport {
  Tri status = Tri::yes;
  std::vector<std::size_t> undecided;  // generator indices (2i for +e_i, 2i+1 for -e_i)
  std::optional<std::size_t> witness;
};

/// u is an order unit iff every +-generator lies below some multiple of u.
inline OrderUnitReport check_order_unit(const UnitalPoGroup& a, long max_n = 64) {
  OrderUnitReport r;
  if (!cone_member(a, a.unit).member()) {
    r.status = Tri::no;
    return r;
  }
  for (std::size_t i = 0; i < a.group.gens(); ++i)
    for (int s = 0; s < 2; ++s) {
      GroupElement e = a.group.generator(i);
      if (s) e = a.group.neg(e);
      const auto d = dominated_by_multiple(a, a.unit, e, max_n);
      if (d.status == Tri::no) {
        r.status = Tri::no;
        r.witness = 2 * i + s;
        return r;
      }
      if (d.status == Tri::unknown) {
        r.status = Tri::unknown;
        r.undecided.push_back(2 * i + s);
      }
    }
  return r;
}

/// Pointed cone: no torsion generator, and some functional is strictly positive on every generator.
inline bool cone_is_strict(const UnitalPoGroup& a) {
  std::vector<RatVec> nonzero;
  for (const auto& c : a.cone) {
    RatVec f = free_part(a.group, c.coords);
    if (std::all_of(f.begin(), f.end(), [](const Rational& q) { return q == 0; })) return false;
    nonzero.push_back(std::move(f));
  }
  if (nonzero.empty()) return true;
  return find_functional(nonzero, RatVec(nonzero.size(), Rational(1)), free_dim(a.group)).has_value();
}

/// Tensor product in POG_u. Every positive element of A or B is a nonnegative
/// combination of cone generators, and a (x) b is bilinear, so pure tensors of
/// generators already generate the cone of all sums of positive pure tensors.
struct PogTensor {
  UnitalPoGroup pog;
  GroupTensor data;

  GroupElement pure(const GroupElement& x, const GroupElement& y) const { return data.pure(x, y); }
};

inline PogTensor tensor_pog(const UnitalPoGroup& a, const UnitalPoGroup& b) {
  GroupTensor t = tensor_groups(a.group, b.group);
  std::vector<IntVec> cone;
  for (const auto& x : a.cone)
    for (const auto& y : b.cone) cone.push_back(t.pure(x.coords, y.coords));
  UnitalPoGroup p = make_pog(t.group, cone, t.pure(a.unit.coords, b.unit.coords));
  return {std::move(p), std::move(t)};
}

/// Isomorphism of unital po-groups: group iso sending the unit to the unit and
/// each cone generator into the target cone, with the inverse doing the same.
struct PogIsoReport {
  bool group_iso = false;
  bool unit_matches = false;
  Tri cones_match = Tri::unknown;
  std::optional<GroupHom> inverse;

  bool ok() const { return group_iso && unit_matches && cones_match == Tri::yes; }
};

inline Tri maps_cone_into(const GroupHom& f, const UnitalPoGroup& src, const UnitalPoGroup& dst,
                          long budget = kDefaultConeBudget) {
  Tri r = Tri::yes;
  for (const auto& c : src.cone) {
    const auto d = cone_member(dst, f.apply(c), budget);
    if (d.refuted()) return Tri::no;
    if (!d.member()) r = Tri::unknown;
  }
  return r;
}

inline PogIsoReport check_pog_iso(const GroupHom& f, const UnitalPoGroup& src, const UnitalPoGroup& dst) {
  PogIsoReport r;
  const IsomorphismDecision iso = is_isomorphism(f);
  r.group_iso = iso.is_iso;
  if (!iso.is_iso) return r;
  r.inverse = iso.inverse;
  r.unit_matches = f.apply(src.unit) == dst.unit;
  const Tri fwd = maps_cone_into(f, src, dst);
  const Tri bwd = maps_cone_into(*iso.inverse, dst, src);
  r.cones_match = (fwd == Tri::no || bwd == Tri::no) ? Tri::no
                  : (fwd == Tri::yes && bwd == Tri::yes) ? Tri::yes
                                                         : Tri::unknown;
  return r;
}

/// Gr(E) on reduced generators with the unit map eta.
struct UniversalGroup {
  EffectAlgebra algebra;
  UnitalPoGroup pog;
  std::vector<GroupElement> eta;  // eta[x] = [x]
  IntMatrix presentation;         // relations on one generator per element
  IntMatrix to_reduced;
  IntMatrix from_reduced;
};

inline UniversalGroup gr_universal_group(const EffectAlgebra& e) {
  const int n = e.size();
  std::vector<IntVec> rels;
  IntVec z(static_cast<std::size_t>(n));
  z[0] = 1;
  rels.push_back(z);
  for (Elem a = 1; a < n; ++a)
    for (Elem b = a; b < n; ++b)
      if (auto s = e.sum(a, b)) {
        IntVec r(static_cast<std::size_t>(n));
        r[a] += 1;
        r[b] += 1;
        r[*s] -= 1;
        rels.push_back(r);
      }
  const IntMatrix pres = IntMatrix::from_rows(rels, static_cast<std::size_t>(n));
  const FpAbGroup full(static_cast<std::size_t>(n), pres);
  ReducedPresentation red = reduce_presentation(full);
  std::vector<GroupElement> eta;
  std::vector<IntVec> cone;
  for (Elem x = 0; x < n; ++x) {
    eta.push_back(red.group.element(red.to_reduced.row(static_cast<std::size_t>(x))));
    if (x != 0) cone.push_back(eta.back().coords);
  }
  UnitalPoGroup p = make_pog(red.group, cone, eta[e.one()].coords);
  return {e, std::move(p), std::move(eta), pres, red.to_reduced, red.from_reduced};
}

/// Gr(f) for an ea-hom (or gea-hom) given as a map of element indices.
/// values[0] = 0 and values[a] + values[b] = values[a (+) b] in the target.
inline bool values_additive(const EffectAlgebra& e, const FpAbGroup& target, const std::vector<IntVec>& values) {
  if (values.size() != static_cast<std::size_t>(e.size())) return false;
  if (!target.is_zero(values[0])) return false;
  for (Elem a = 0; a < e.size(); ++a)
    for (Elem b = 0; b < e.size(); ++b)
      if (auto s = e.sum(a, b))
        if (!target.is_zero(sub(add(values[a], values[b]), values[*s]))) return false;
  return true;
}

/// The hom Gr(E) -> target with [x] |-> values[x]; agrees with values everywhere iff they are additive.
inline GroupHom hom_from_values(const UniversalGroup& src, const FpAbGroup& target, const std::vector<IntVec>& values) {
  const std::size_t g = src.pog.group.gens();
  IntMatrix m(g, target.gens());
  for (std::size_t k = 0; k < g; ++k)
    for (Elem x = 0; x < src.algebra.size(); ++x) {
      const Int& c = src.from_reduced(k, static_cast<std::size_t>(x));
      if (c == 0) continue;
      for (std::size_t j = 0; j < target.gens(); ++j) m(k, j) += c * values[x][j];
    }
  return GroupHom(src.pog.group, target, m);
}

inline GroupHom gr_morphism(const UniversalGroup& src, const UniversalGroup& dst, const std::vector<Elem>& f) {
  const std::size_t g = src.pog.group.gens();
  IntMatrix m(g, dst.pog.group.gens());
  for (std::size_t k = 0; k < g; ++k) {
    IntVec row(dst.pog.group.gens());
    for (Elem x = 0; x < src.algebra.size(); ++x) {
      const Int& c = src.from_reduced(k, static_cast<std::size_t>(x));
      if (c != 0) row = add(row, scale(c, dst.eta[f[x]].coords));
    }
    for (std::size_t j = 0; j < row.size(); ++j) m(k, j) = row[j];
  }
  return GroupHom(src.pog.group, dst.pog.group, m);
}

enum class GammaStatus { ok, undecided, budget_exhausted, invalid };

struct GammaResult {
  GammaStatus status = GammaStatus::ok;
  std::vector<GroupElement> elements;  // elements[0] is zero
  std::optional<EffectAlgebra> algebra;
  std::optional<GroupElement> offending;
  std::string note;

  std::optional<Elem> index_of(const GroupElement& g) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == g) return static_cast<Elem>(i);
    return std::nullopt;
  }
};

inline constexpr std::size_t kDefaultGammaBudget = 512;

/// Elements of [0, top] by breadth-first closure of {0} under adding cone
/// generators: every partial sum of a positive element below top is again below top.
inline GammaResult interval_below(const UnitalPoGroup& a, const GroupElement& top,
                                  std::size_t budget = kDefaultGammaBudget,
                                  long cone_budget = kDefaultConeBudget) {
  GammaResult r;
  const GroupElement zero = a.group.zero();
  {
    const auto d = cone_member(a, top, cone_budget);
    if (!d.member()) {
      r.status = d.refuted() ? GammaStatus::invalid : GammaStatus::undecided;
      r.offending = top;
      r.note = "top is not known to be positive";
      return r;
    }
  }
  std::set<GroupElement> seen{zero};
  std::deque<GroupElement> queue{zero};
  r.elements.push_back(zero);
  while (!queue.empty()) {
    const GroupElement x = queue.front();
    queue.pop_front();
    for (const auto& c : a.cone) {
      GroupElement y = a.group.plus(x, c);
      if (seen.count(y)) continue;
      const auto d = cone_member(a, a.group.minus(top, y), cone_budget);
      if (d.status == ConeStatus::unknown) {
        r.status = GammaStatus::undecided;
        r.offending = y;
        return r;
      }
      if (!d.member()) continue;
      if (r.elements.size() >= budget) {
        r.status = GammaStatus::budget_exhausted;
        r.offending = y;
        r.note = "interval not finite within budget";
        return r;
      }
      seen.insert(y);
      r.elements.push_back(y);
      queue.push_back(y);
    }
  }
  return r;
}

/// Gamma(A, u) = [0, u] with a (+) b defined iff a + b <= u, i.e. iff a + b is again in [0, u].
inline GammaResult gamma_interval(const UnitalPoGroup& a, std::size_t budget = kDefaultGammaBudget,
                                  long cone_budget = kDefaultConeBudget) {
  GammaResult r = interval_below(a, a.unit, budget, cone_budget);
  if (r.status != GammaStatus::ok) return r;
  std::map<GroupElement, Elem> index;
  for (std::size_t i = 0; i < r.elements.size(); ++i) index[r.elements[i]] = static_cast<Elem>(i);
  const int n = static_cast<int>(r.elements.size());
  const auto top = index.find(a.unit);
  if (top == index.end()) {
    r.status = GammaStatus::invalid;
    r.note = "unit not reached from zero by cone generators";
    return r;
  }
  PartialTable t(n, top->second);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(a.group.plus(r.elements[i], r.elements[j]));
      if (it != index.end()) t.at(i, j) = it->second;
    }
  const ValidationReport v = validate_effect_algebra(t);
  if (!v.valid()) {
    r.status = GammaStatus::invalid;
    r.note = v.summary();
    return r;
  }
  r.algebra = EffectAlgebra(std::move(t));
  return r;
}

enum class InterpolationStatus { found, none_within_bound, refuted, precondition_failed };

struct InterpolationResult {
  InterpolationStatus status = InterpolationStatus::none_within_bound;
  std::optional<GroupElement> interpolant;
  std::vector<int> offending_pair;  // (i, j) with a_i <= b_j not established
  std::size_t examined = 0;
};

/// Searches c with a1, a2 <= c <= b1, b2 among a1 + (cone combinations) below b1.
inline InterpolationResult check_interpolation(const UnitalPoGroup& a, const GroupElement& a1,
                                               const GroupElement& a2, const GroupElement& b1,
                                               const GroupElement& b2, std::size_t budget = kDefaultGammaBudget,
                                               long cone_budget = kDefaultConeBudget) {
  InterpolationResult r;
  const GroupElement* lo[2] = {&a1, &a2};
  const GroupElement* hi[2] = {&b1, &b2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (leq(a, *lo[i], *hi[j], cone_budget) != Tri::yes) {
        r.status = InterpolationStatus::precondition_failed;
        r.offending_pair = {i + 1, j + 1};
        return r;
      }
  std::set<GroupElement> seen{a1};
  std::deque<GroupElement> queue{a1};
  bool exhaustive = true;
  while (!queue.empty()) {
    const GroupElement c = queue.front();
    queue.pop_front();
    ++r.examined;
    const Tri t2 = leq(a, a2, c, cone_budget);
    const Tri t3 = leq(a, c, b2, cone_budget);
    if (t2 == Tri::yes && t3 == Tri::yes) {
      r.status = InterpolationStatus::found;
      r.interpolant = c;
      return r;
    }
    if (t2 == Tri::unknown || t3 == Tri::unknown) exhaustive = false;
    for (const auto& g : a.cone) {
      GroupElement y = a.group.plus(c, g);
      if (seen.count(y)) continue;
      const Tri below = leq(a, y, b1, cone_budget);
      if (below == Tri::unknown) exhaustive = false;
      if (below != Tri::yes) continue;
      if (seen.size() >= budget) {
        r.status = InterpolationStatus::none_within_bound;
        return r;
      }
      seen.insert(y);
      queue.push_back(y);
    }
  }
  r.status = exhaustive ? InterpolationStatus::refuted : InterpolationStatus::none_within_bound;
  return r;
}

/// A0 = { a : -n x <= a <= n x for some n }. It is generated by the cone
/// generators lying below a multiple of x: if -n x <= a <= n x then a + n x is a
/// positive element below 2n x, and every generator in its expansion is below it.
struct Reflection {
  std::vector<GroupElement> generators;
  std::vector<std::size_t> included;   // cone generator indices in A0
  std::vector<std::size_t> excluded;   // refuted by a face separator
  std::vector<std::size_t> undecided;
  bool complete = true;                // false means "lower bound"

  bool contains(const UnitalPoGroup& a, const GroupElement& v) const {
    return express_in_span(a.group, generators, v).has_value();
  }
};

inline Reflection pogp_reflection(const UnitalPoGroup& a, const GroupElement& x, long max_n = 64,
                                  long budget = kDefaultConeBudget) {
  Reflection r;
  for (std::size_t i = 0; i < a.cone.size(); ++i) {
    const auto d = dominated_by_multiple(a, x, a.cone[i], max_n, budget);
    if (d.status == Tri::yes) {
      r.included.push_back(i);
      r.generators.push_back(a.cone[i]);
    } else if (d.status == Tri::no) {
      r.excluded.push_back(i);
    } else {
      r.undecided.push_back(i);
      r.complete = false;
    }
  }
  return r;
}

}  // namespace effalg
