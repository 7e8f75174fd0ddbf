#pragma once
// The generalized effect algebra [E,F] of gea-homs under pointwise sum, its
// intervals [E,F]_h, and the transposes between bimorphisms E x F -> G and
// ea-homs F -> [E,G]_h.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "effalg/effect_algebra.hpp"
#include "effalg/morphism.hpp"

namespace effalg {

struct HomGEA {
  EffectAlgebra domain;
  EffectAlgebra codomain;
  std::vector<std::vector<Elem>> maps;  // sorted lexicographically; index 0 is the zero map
  PartialTable table;                   // GEA table on map indices (its `one` field is unused)

  int size() const { return static_cast<int>(maps.size()); }

  std::optional<int> index_of(const std::vector<Elem>& m) const {
    auto it = std::lower_bound(maps.begin(), maps.end(), m);
    if (it == maps.end() || *it != m) return std::nullopt;
    return static_cast<int>(it - maps.begin());
  }

  bool algebraic_leq(int f, int g) const {
    for (int c = 0; c < size(); ++c)
      if (table.at(f, c) == std::optional<Elem>(g)) return true;
    return false;
  }

  bool pointwise_leq(int f, int g) const {
    for (Elem a = 0; a < domain.size(); ++a)
      if (!codomain.leq(maps[f][a], maps[g][a])) return false;
    return true;
  }
};

/// Pointwise sum of two maps when defined at every argument.
inline std::optional<std::vector<Elem>> pointwise_sum(const EffectAlgebra& cod, const std::vector<Elem>& f,
                                                      const std::vector<Elem>& g) {
  std::vector<Elem> s(f.size());
  for (std::size_t a = 0; a < f.size(); ++a) {
    const auto v = cod.sum(f[a], g[a]);
    if (!v) return std::nullopt;
    s[a] = *v;
  }
  return s;
}

inline HomGEA build_hom_gea(const EffectAlgebra& e, const EffectAlgebra& f) {
  HomGEA h{e, f, {}, {}};
  for (auto& m : enumerate_morphisms(e, f, MorphismKind::gea)) h.maps.push_back(std::move(m.map));
  std::sort(h.maps.begin(), h.maps.end());
  const int n = h.size();
  h.table = PartialTable(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (auto s = pointwise_sum(f, h.maps[i], h.maps[j])) {
        const auto k = h.index_of(*s);
        if (!k) throw std::logic_error("build_hom_gea: pointwise sum is not a gea-hom");
        h.table.at(i, j) = *k;
      }
  return h;
}

struct IntervalEA {
  HomGEA ambient;
  std::vector<int> members;  // ambient indices of maps below the top, ascending
  int top = 0;               // index of h within members
  EffectAlgebra algebra;

  const std::vector<Elem>& map(Elem i) const { return ambient.maps[members[i]]; }

  std::optional<Elem> index_of(const std::vector<Elem>& m) const {
    const auto k = ambient.index_of(m);
    if (!k) return std::nullopt;
    auto it = std::lower_bound(members.begin(), members.end(), *k);
    if (it == members.end() || *it != *k) return std::nullopt;
    return static_cast<Elem>(it - members.begin());
  }
};

inline IntervalEA build_interval(const HomGEA& ambient, const std::vector<Elem>& h) {
  const auto hi = ambient.index_of(h);
  if (!hi) throw std::invalid_argument("build_interval: h is not a gea-hom between the given algebras");
  IntervalEA iv{ambient, {}, 0, EffectAlgebra::one_element()};
  for (int g = 0; g < ambient.size(); ++g)
    if (ambient.algebraic_leq(g, *hi)) iv.members.push_back(g);
  const int n = static_cast<int>(iv.members.size());
  std::map<int, int> local;
  for (int i = 0; i < n; ++i) local[iv.members[i]] = i;
  iv.top = local.at(*hi);
  PartialTable t(n, iv.top);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (auto s = ambient.table.at(iv.members[i], iv.members[j])) {
        auto it = local.find(*s);
        if (it != local.end()) t.at(i, j) = it->second;
      }
  iv.algebra = EffectAlgebra(std::move(t));
  return iv;
}

inline IntervalEA build_interval(const EffectAlgebra& e, const EffectAlgebra& f, const std::vector<Elem>& h) {
  return build_interval(build_hom_gea(e, f), h);
}

struct Transpose {
  IntervalEA interval;  // [E,G]_h with h = beta(-, 1)
  EAMorphism map;       // F -> interval.algebra
};

inline Transpose transpose_forward(const Bimorphism& beta) {
  if (!validate_morphism(beta).valid()) throw std::invalid_argument("transpose_forward: invalid bimorphism");
  const EffectAlgebra& e = beta.left;
  const EffectAlgebra& f = beta.right;
  std::vector<Elem> h(static_cast<std::size_t>(e.size()));
  for (Elem a = 0; a < e.size(); ++a) h[a] = beta(a, f.one());
  IntervalEA iv = build_interval(e, beta.target, h);
  std::vector<Elem> m(static_cast<std::size_t>(f.size()));
  for (Elem b = 0; b < f.size(); ++b) {
    std::vector<Elem> col(static_cast<std::size_t>(e.size()));
    for (Elem a = 0; a < e.size(); ++a) col[a] = beta(a, b);
    const auto idx = iv.index_of(col);
    if (!idx) throw std::logic_error("transpose_forward: column is not below h");
    m[b] = *idx;
  }
  EAMorphism out{f, iv.algebra, std::move(m), MorphismKind::ea};
  if (!validate_morphism(out).valid()) throw std::logic_error("transpose_forward: result is not an ea-hom");
  return {std::move(iv), std::move(out)};
}

inline Bimorphism transpose_backward(const IntervalEA& iv, const EAMorphism& g) {
  if (!(g.codomain == iv.algebra) || g.kind != MorphismKind::ea || !validate_morphism(g).valid())
    throw std::invalid_argument("transpose_backward: not an ea-hom into the interval");
  const EffectAlgebra& e = iv.ambient.domain;
  const EffectAlgebra& f = g.domain;
  Bimorphism beta{e, f, iv.ambient.codomain, std::vector<Elem>(static_cast<std::size_t>(e.size()) * f.size())};
  for (Elem a = 0; a < e.size(); ++a)
    for (Elem b = 0; b < f.size(); ++b) beta.table[static_cast<std::size_t>(a) * f.size() + b] = iv.map(g.map[b])[a];
  if (!validate_morphism(beta).valid()) throw std::invalid_argument("transpose_backward: top of the interval does not send 1 to 1");
  return beta;
}

}  // namespace effalg
