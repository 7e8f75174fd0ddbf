#pragma once
// Finite categories, coslices and finality.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace effalg {

struct Arrow {
  int src = 0;
  int dst = 0;
  std::string name;
};

/// Objects 0..objects-1; arrows include the identities; compose(g, f) = g o f.
class FiniteCategory {
 public:
  FiniteCategory() = default;

  /// Free category on an acyclic graph: arrows are the paths (including identities).
  static FiniteCategory free_on(int objects, const std::vector<Arrow>& edges) {
    FiniteCategory c;
    c.objects_ = objects;
    std::vector<std::vector<int>> paths;  // edge sequences, applied left to right
    for (int o = 0; o < objects; ++o) {
      c.arrows_.push_back({o, o, "id" + std::to_string(o)});
      c.identity_.push_back(o);
      paths.push_back({});
    }
    // Extend paths breadth-first; acyclicity bounds the length by the object count.
    for (std::size_t e = 0; e < edges.size(); ++e) {
      c.arrows_.push_back(edges[e]);
      paths.push_back({static_cast<int>(e)});
    }
    std::size_t start = static_cast<std::size_t>(objects);
    for (int len = 2; len <= objects; ++len) {
      const std::size_t end = c.arrows_.size();
      for (std::size_t p = start; p < end; ++p) {
        if (static_cast<int>(paths[p].size()) != len - 1) continue;
        for (std::size_t e = 0; e < edges.size(); ++e)
          if (edges[e].src == c.arrows_[p].dst) {
            auto q = paths[p];
            q.push_back(static_cast<int>(e));
            c.arrows_.push_back({c.arrows_[p].src, edges[e].dst, edges[e].name + "." + c.arrows_[p].name});
            paths.push_back(q);
          }
      }
      start = end;
    }
    if (c.arrows_.size() > 4096) throw std::invalid_argument("free_on: graph too large or cyclic");
    const std::size_t m = c.arrows_.size();
    c.compose_.assign(m * m, -1);
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t f = 0; f < m; ++f) {
        if (c.arrows_[f].dst != c.arrows_[g].src) continue;
        std::vector<int> q = paths[f];
        q.insert(q.end(), paths[g].begin(), paths[g].end());
        for (std::size_t h = 0; h < m; ++h)
          if (paths[h] == q && c.arrows_[h].src == c.arrows_[f].src && c.arrows_[h].dst == c.arrows_[g].dst) {
            c.compose_[g * m + f] = static_cast<int>(h);
            break;
          }
      }
    return c;
  }

  /// Explicit construction; `compose` must be total on composable pairs.
  static FiniteCategory from_table(int objects, std::vector<Arrow> arrows, std::vector<int> identity,
                                   std::vector<int> compose) {
    FiniteCategory c;
    c.objects_ = objects;
    c.arrows_ = std::move(arrows);
    c.identity_ = std::move(identity);
    c.compose_ = std::move(compose);
    return c;
  }

  int objects() const { return objects_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int f) const { return arrows_[f]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int identity(int o) const { return identity_[o]; }
  bool is_identity(int f) const { return identity_[arrows_[f].src] == f; }
  int compose(int g, int f) const { return compose_[static_cast<std::size_t>(g) * arrows_.size() + f]; }

  std::vector<int> arrows_between(int a, int b) const {
    std::vector<int> out;
    for (int f = 0; f < arrow_count(); ++f)
      if (arrows_[f].src == a && arrows_[f].dst == b) out.push_back(f);
    return out;
  }

  /// Identities, closure of composition, associativity.
  bool valid() const {
    const int m = arrow_count();
    if (static_cast<int>(identity_.size()) != objects_) return false;
    for (int o = 0; o < objects_; ++o) {
      const Arrow& i = arrows_[identity_[o]];
      if (i.src != o || i.dst != o) return false;
    }
    for (int f = 0; f < m; ++f) {
      if (compose(f, identity_[arrows_[f].src]) != f) return false;
      if (compose(identity_[arrows_[f].dst], f) != f) return false;
    }
    for (int f = 0; f < m; ++f)
      for (int g = 0; g < m; ++g) {
        const bool ok = arrows_[f].dst == arrows_[g].src;
        const int gf = compose(g, f);
        if (ok != (gf >= 0)) return false;
        if (!ok) continue;
        if (arrows_[gf].src != arrows_[f].src || arrows_[gf].dst != arrows_[g].dst) return false;
        for (int h = 0; h < m; ++h)
          if (arrows_[g].dst == arrows_[h].src && compose(h, gf) != compose(compose(h, g), f)) return false;
      }
    return true;
  }

  /// Adds a new object (index objects()) with exactly one arrow to every object.
  FiniteCategory with_initial_object() const {
    const int d0 = objects_;
    const int m = arrow_count();
    std::vector<Arrow> arrows = arrows_;
    std::vector<int> ident = identity_;
    arrows.push_back({d0, d0, "id*"});
    ident.push_back(m);
    std::vector<int> to(static_cast<std::size_t>(objects_));
    for (int o = 0; o < objects_; ++o) {
      to[o] = static_cast<int>(arrows.size());
      arrows.push_back({d0, o, "i" + std::to_string(o)});
    }
    const std::size_t n = arrows.size();
    std::vector<int> comp(n * n, -1);
    for (int g = 0; g < m; ++g)
      for (int f = 0; f < m; ++f) comp[g * n + f] = compose(g, f);
    comp[m * n + m] = m;
    for (int o = 0; o < objects_; ++o) {
      comp[to[o] * n + m] = to[o];
      for (int g = 0; g < m; ++g)
        if (arrows_[g].src == o) comp[g * n + to[o]] = to[arrows_[g].dst];
    }
    return from_table(objects_ + 1, std::move(arrows), std::move(ident), std::move(comp));
  }

 private:
  int objects_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<int> identity_;
  std::vector<int> compose_;
};

struct Subcategory {
  std::vector<int> objects;
  std::vector<int> arrows;

  bool has_object(int o) const { return std::find(objects.begin(), objects.end(), o) != objects.end(); }
  bool has_arrow(int f) const { return std::find(arrows.begin(), arrows.end(), f) != arrows.end(); }
};

inline Subcategory full_subcategory(const FiniteCategory& c, std::vector<int> objects) {
  Subcategory s{std::move(objects), {}};
  for (int f = 0; f < c.arrow_count(); ++f)
    if (s.has_object(c.arrow(f).src) && s.has_object(c.arrow(f).dst)) s.arrows.push_back(f);
  return s;
}

inline Subcategory whole(const FiniteCategory& c) {
  std::vector<int> all(static_cast<std::size_t>(c.objects()));
  std::iota(all.begin(), all.end(), 0);
  return full_subcategory(c, all);
}

/// Only the identities of the given objects.
inline Subcategory discrete_subcategory(const FiniteCategory& c, std::vector<int> objects) {
  Subcategory s{std::move(objects), {}};
  for (int o : s.objects) s.arrows.push_back(c.identity(o));
  return s;
}

/// d | sub: objects are arrows d -> e with e in sub, morphisms are sub-arrows h with h o f = f'.
struct Coslice {
  FiniteCategory category;
  std::vector<int> object_arrows;  // object i of the coslice is the arrow object_arrows[i] of the base
};

inline Coslice coslice(const FiniteCategory& c, int d, const Subcategory& sub) {
  Coslice out;
  for (int f = 0; f < c.arrow_count(); ++f)
    if (c.arrow(f).src == d && sub.has_object(c.arrow(f).dst)) out.object_arrows.push_back(f);
  const int n = static_cast<int>(out.object_arrows.size());
  std::vector<Arrow> arrows;
  std::vector<int> base;  // base arrow of each coslice arrow
  std::vector<int> ident(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int f = out.object_arrows[i], g = out.object_arrows[j];
      for (int h : sub.arrows)
        if (c.arrow(h).src == c.arrow(f).dst && c.arrow(h).dst == c.arrow(g).dst && c.compose(h, f) == g) {
          if (i == j && h == c.identity(c.arrow(f).dst)) ident[i] = static_cast<int>(arrows.size());
          arrows.push_back({i, j, c.arrow(h).name});
          base.push_back(h);
        }
    }
  const std::size_t m = arrows.size();
  std::vector<int> comp(m * m, -1);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (arrows[f].dst != arrows[g].src) continue;
      const int h = c.compose(base[g], base[f]);
      for (std::size_t k = 0; k < m; ++k)
        if (base[k] == h && arrows[k].src == arrows[f].src && arrows[k].dst == arrows[g].dst) {
          comp[g * m + f] = static_cast<int>(k);
          break;
        }
    }
  out.category = FiniteCategory::from_table(n, std::move(arrows), std::move(ident), std::move(comp));
  return out;
}

/// Nonempty and connected as an undirected graph.
inline bool is_connected(const FiniteCategory& c) {
  const int n = c.objects();
  if (n == 0) return false;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Arrow& a : c.arrows()) parent[find(a.src)] = find(a.dst);
  for (int o = 1; o < n; ++o)
    if (find(o) != find(0)) return false;
  return true;
}

struct FinalityReport {
  bool final = true;
  std::optional<int> witness;  // object with a disconnected (or empty) coslice
};

inline FinalityReport is_final(const FiniteCategory& c, const Subcategory& sub) {
  FinalityReport r;
  for (int d = 0; d < c.objects(); ++d)
    if (!is_connected(coslice(c, d, sub).category)) {
      r.final = false;
      r.witness = d;
      return r;
    }
  return r;
}

}  // namespace effalg
