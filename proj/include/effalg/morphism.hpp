#pragma once
// Homomorphisms and bimorphisms between finite effect algebras, plus the
// additive constraint solver used to enumerate them.

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "effalg/effect_algebra.hpp"

namespace effalg {

/// Backtracking search for assignments v: vars -> target elements with
/// v[x] (+) v[y] == v[z] for every registered triple.
class AdditiveSolver {
 public:
  AdditiveSolver(EffectAlgebra target, int variables)
      : target_(std::move(target)), n_(variables), fixed_(variables, -1), by_var_(variables) {}

  void fix(int var, Elem value) {
    if (fixed_[var] >= 0 && fixed_[var] != value) infeasible_ = true;
    fixed_[var] = value;
  }

  /// Restrict a variable to a subset of the target.
  void restrict(int var, std::vector<Elem> allowed) {
    if (domains_.empty()) domains_.resize(static_cast<std::size_t>(n_));
    domains_[var] = std::move(allowed);
  }

  void add_sum(int x, int y, int z) {
    const int id = static_cast<int>(cons_.size());
    cons_.push_back({x, y, z});
    by_var_[x].push_back(id);
    if (y != x) by_var_[y].push_back(id);
    if (z != x && z != y) by_var_[z].push_back(id);
  }

  /// Calls visit for each solution (in lexicographic order of variables);
  /// stop early by returning false. Returns the number of solutions visited.
  std::size_t solve(const std::function<bool(const std::vector<Elem>&)>& visit) {
    if (infeasible_) return 0;
    val_.assign(static_cast<std::size_t>(n_), -1);
    trail_.clear();
    count_ = 0;
    stop_ = false;
    for (int v = 0; v < n_; ++v)
      if (fixed_[v] >= 0 && val_[v] < 0 && !assign(v, fixed_[v])) return 0;
    search(0, visit);
    return count_;
  }

  std::vector<std::vector<Elem>> all(std::size_t limit = std::numeric_limits<std::size_t>::max()) {
    std::vector<std::vector<Elem>> out;
    solve([&](const std::vector<Elem>& s) {
      out.push_back(s);
      return out.size() < limit;
    });
    return out;
  }

 private:
  struct Sum {
    int x, y, z;
  };

  bool allowed(int var, Elem value) const {
    if (domains_.empty() || domains_[var].empty()) return true;
    for (Elem e : domains_[var])
      if (e == value) return true;
    return false;
  }

  bool set(int var, Elem value, std::vector<int>& queue) {
    if (val_[var] >= 0) return val_[var] == value;
    if (!allowed(var, value)) return false;
    val_[var] = value;
    trail_.push_back(var);
    queue.push_back(var);
    return true;
  }

  bool assign(int var, Elem value) {
    std::vector<int> queue;
    if (!set(var, value, queue)) return false;
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      for (int id : by_var_[v]) {
        const Sum& c = cons_[id];
        const Elem a = val_[c.x], b = val_[c.y], s = val_[c.z];
        if (a >= 0 && b >= 0) {
          const auto r = target_.sum(a, b);
          if (!r || !set(c.z, *r, queue)) return false;
        } else if (a >= 0 && s >= 0) {
          const auto r = target_.minus(s, a);
          if (!r || !set(c.y, *r, queue)) return false;
        } else if (b >= 0 && s >= 0) {
          const auto r = target_.minus(s, b);
          if (!r || !set(c.x, *r, queue)) return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      val_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  void search(int from, const std::function<bool(const std::vector<Elem>&)>& visit) {
    int v = from;
    while (v < n_ && val_[v] >= 0) ++v;
    if (v == n_) {
      ++count_;
      if (!visit(val_)) stop_ = true;
      return;
    }
    for (Elem e = 0; e < target_.size() && !stop_; ++e) {
      const std::size_t mark = trail_.size();
      if (assign(v, e)) search(v + 1, visit);
      undo(mark);
    }
  }

  EffectAlgebra target_;
  int n_;
  std::vector<Elem> fixed_;
  std::vector<std::vector<int>> by_var_;
  std::vector<std::vector<Elem>> domains_;
  std::vector<Sum> cons_;
  std::vector<Elem> val_;
  std::vector<int> trail_;
  std::size_t count_ = 0;
  bool stop_ = false;
  bool infeasible_ = false;
};

enum class MorphismKind { ea, gea };

struct EAMorphism {
  EffectAlgebra domain;
  EffectAlgebra codomain;
  std::vector<Elem> map;
  MorphismKind kind = MorphismKind::ea;

  Elem operator()(Elem a) const { return map[a]; }
  friend bool operator==(const EAMorphism&, const EAMorphism&) = default;
};

struct Bimorphism {
  EffectAlgebra left;
  EffectAlgebra right;
  EffectAlgebra target;
  std::vector<Elem> table;  // row-major left.size() x right.size()

  Elem operator()(Elem a, Elem b) const {
    return table[static_cast<std::size_t>(a) * right.size() + b];
  }
  friend bool operator==(const Bimorphism&, const Bimorphism&) = default;
};

namespace detail {

inline void check_additive(const EffectAlgebra& dom, const EffectAlgebra& cod,
                           const std::function<Elem(Elem)>& f, ViolationSink& sink,
                           std::vector<Elem> prefix) {
  auto with = [&](std::vector<Elem> w) {
    w.insert(w.begin(), prefix.begin(), prefix.end());
    return w;
  };
  if (f(0) != 0) sink.add("zero", with({0, f(0)}));
  for (Elem a = 0; a < dom.size(); ++a)
    for (Elem b = a; b < dom.size(); ++b)
      if (auto s = dom.sum(a, b)) {
        const auto img = cod.sum(f(a), f(b));
        if (img != std::optional<Elem>(f(*s))) sink.add("additivity", with({a, b}));
      }
}

}  // namespace detail

inline ValidationReport validate_morphism(const EAMorphism& m) {
  ValidationReport r;
  detail::ViolationSink sink(r);
  if (m.map.size() != static_cast<std::size_t>(m.domain.size())) {
    sink.add("shape", {static_cast<Elem>(m.map.size()), m.domain.size()});
    return r;
  }
  for (Elem a = 0; a < m.domain.size(); ++a)
    if (m.map[a] < 0 || m.map[a] >= m.codomain.size()) {
      sink.add("range", {a, m.map[a]});
      return r;
    }
  detail::check_additive(m.domain, m.codomain, [&](Elem a) { return m.map[a]; }, sink, {});
  if (m.kind == MorphismKind::ea && m.map[m.domain.one()] != m.codomain.one())
    sink.add("top", {m.domain.one(), m.map[m.domain.one()]});
  return r;
}

inline ValidationReport validate_morphism(const Bimorphism& b) {
  ValidationReport r;
  detail::ViolationSink sink(r);
  const int nl = b.left.size(), nr = b.right.size();
  if (b.table.size() != static_cast<std::size_t>(nl) * nr) {
    sink.add("shape", {static_cast<Elem>(b.table.size()), nl, nr});
    return r;
  }
  for (Elem v : b.table)
    if (v < 0 || v >= b.target.size()) {
      sink.add("range", {v});
      return r;
    }
  for (Elem a = 0; a < nl; ++a)
    detail::check_additive(b.right, b.target, [&](Elem y) { return b(a, y); }, sink, {0, a});
  for (Elem y = 0; y < nr; ++y)
    detail::check_additive(b.left, b.target, [&](Elem x) { return b(x, y); }, sink, {1, y});
  if (b(b.left.one(), b.right.one()) != b.target.one())
    sink.add("top", {b.left.one(), b.right.one(), b(b.left.one(), b.right.one())});
  return r;
}

/// Registers v[a] (+) v[b] == v[a(+)b] for all defined sums with a <= b (up to symmetry).
inline void add_domain_sums(AdditiveSolver& s, const EffectAlgebra& dom,
                            const std::function<int(Elem)>& var) {
  for (Elem a = 1; a < dom.size(); ++a)
    for (Elem b = a; b < dom.size(); ++b)
      if (auto c = dom.sum(a, b)) s.add_sum(var(a), var(b), var(*c));
}

inline std::vector<EAMorphism> enumerate_morphisms(const EffectAlgebra& e, const EffectAlgebra& f,
                                                   MorphismKind kind) {
  AdditiveSolver s(f, e.size());
  s.fix(0, 0);
  if (kind == MorphismKind::ea) s.fix(e.one(), f.one());
  add_domain_sums(s, e, [](Elem a) { return a; });
  std::vector<EAMorphism> out;
  for (auto& m : s.all()) out.push_back({e, f, std::move(m), kind});
  return out;
}

/// Variables (a, b) numbered a * |F| + b.
inline AdditiveSolver bimorphism_solver(const EffectAlgebra& e, const EffectAlgebra& f,
                                        const EffectAlgebra& g) {
  const int nf = f.size();
  AdditiveSolver s(g, e.size() * nf);
  for (Elem a = 0; a < e.size(); ++a) s.fix(a * nf, 0);
  for (Elem b = 0; b < nf; ++b) s.fix(b, 0);
  s.fix(e.one() * nf + f.one(), g.one());
  for (Elem a = 0; a < e.size(); ++a)
    add_domain_sums(s, f, [&](Elem b) { return a * nf + b; });
  for (Elem b = 0; b < nf; ++b)
    add_domain_sums(s, e, [&](Elem a) { return a * nf + b; });
  return s;
}

inline std::vector<Bimorphism> enumerate_bimorphisms(const EffectAlgebra& e, const EffectAlgebra& f,
                                                     const EffectAlgebra& g) {
  AdditiveSolver s = bimorphism_solver(e, f, g);
  std::vector<Bimorphism> out;
  for (auto& t : s.all()) out.push_back({e, f, g, std::move(t)});
  return out;
}

inline EAMorphism compose(const EAMorphism& g, const EAMorphism& f) {
  if (!(f.codomain == g.domain)) throw std::invalid_argument("compose: algebras do not match");
  std::vector<Elem> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  const MorphismKind k =
      (f.kind == MorphismKind::ea && g.kind == MorphismKind::ea) ? MorphismKind::ea : MorphismKind::gea;
  return {f.domain, g.codomain, std::move(m), k};
}

inline EAMorphism identity_morphism(const EffectAlgebra& e) {
  return {e, e, e.elements(), MorphismKind::ea};
}

}  // namespace effalg
