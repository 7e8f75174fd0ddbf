#pragma once
// Isomorphism testing, canonical forms and enumeration of finite effect algebras.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "effalg/effect_algebra.hpp"

namespace effalg {

/// Table code after relabelling: entry value or -1, row-major.
using TableCode = std::vector<int>;

namespace detail {

inline TableCode encode(const EffectAlgebra& e, const std::vector<Elem>& perm) {
  const int n = e.size();
  TableCode code(static_cast<std::size_t>(n) * n + 1, -1);
  code[0] = perm[e.one()];
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (auto s = e.sum(a, b)) code[1 + static_cast<std::size_t>(perm[a]) * n + perm[b]] = perm[*s];
  return code;
}

/// Isomorphism-invariant fingerprint of an element: (down-set size, up-set size, orthogonal count, idempotent-sum flag).
inline std::vector<std::array<int, 4>> element_keys(const EffectAlgebra& e) {
  std::vector<std::array<int, 4>> keys(static_cast<std::size_t>(e.size()));
  for (Elem a = 0; a < e.size(); ++a) {
    int down = 0, up = 0, orth = 0;
    for (Elem b = 0; b < e.size(); ++b) {
      down += e.leq(b, a);
      up += e.leq(a, b);
      orth += e.orthogonal(a, b);
    }
    const auto aa = e.sum(a, a);
    keys[a] = {down, up, orth, aa ? (*aa == e.one() ? 2 : 1) : 0};
  }
  return keys;
}

}  // namespace detail

/// Canonical relabelling: zero stays 0, one moves to size-1, and the middle
/// elements are permuted to minimise the table code. Exhaustive within
/// classes of equal element keys.
inline TableCode canonical_code(const EffectAlgebra& e) {
  const int n = e.size();
  if (n == 1) return detail::encode(e, {0});
  const auto keys = detail::element_keys(e);
  std::vector<Elem> middle;
  for (Elem a = 1; a < n; ++a)
    if (a != e.one()) middle.push_back(a);
  // Order middles by key; only permutations that keep keys sorted are tried.
  std::stable_sort(middle.begin(), middle.end(), [&](Elem a, Elem b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> block_start;
  for (std::size_t i = 0; i < middle.size(); ++i)
    if (i == 0 || keys[middle[i]] != keys[middle[i - 1]]) block_start.push_back(i);
  block_start.push_back(middle.size());

  std::vector<Elem> order = middle;
  for (std::size_t k = 0; k + 1 < block_start.size(); ++k)
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(block_start[k]),
              order.begin() + static_cast<std::ptrdiff_t>(block_start[k + 1]));
  std::optional<TableCode> best;
  std::vector<Elem> perm(static_cast<std::size_t>(n));
  // Iterate over the product of per-block permutations.
  while (true) {
    perm[0] = 0;
    perm[e.one()] = n - 1;
    for (std::size_t i = 0; i < order.size(); ++i) perm[order[i]] = static_cast<Elem>(i + 1);
    TableCode c = detail::encode(e, perm);
    if (!best || c < *best) best = std::move(c);
    std::size_t k = 0;
    for (; k + 1 < block_start.size(); ++k) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(block_start[k]);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(block_start[k + 1]);
      if (std::next_permutation(first, last)) break;
    }
    if (k + 1 == block_start.size()) break;
  }
  return *best;
}

inline EffectAlgebra decode(const TableCode& code) {
  std::size_t n = 0;
  while (n * n + 1 < code.size()) ++n;
  PartialTable t(static_cast<int>(n), code[0]);
  for (std::size_t i = 0; i < n * n; ++i)
    if (code[1 + i] >= 0) t.entries[i] = code[1 + i];
  return EffectAlgebra(std::move(t));
}

inline EffectAlgebra canonical_form(const EffectAlgebra& e) { return decode(canonical_code(e)); }

/// Backtracking isomorphism search with element-key pruning; returns map[a] in f.
inline std::optional<std::vector<Elem>> find_isomorphism(const EffectAlgebra& e, const EffectAlgebra& f) {
  const int n = e.size();
  if (n != f.size()) return std::nullopt;
  const auto ke = detail::element_keys(e);
  const auto kf = detail::element_keys(f);
  {
    auto se = ke, sf = kf;
    std::sort(se.begin(), se.end());
    std::sort(sf.begin(), sf.end());
    if (se != sf) return std::nullopt;
  }
  std::vector<Elem> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto consistent = [&](Elem a) {
    for (Elem b = 0; b < n; ++b) {
      if (map[b] < 0) continue;
      const auto s = e.sum(a, b);
      const auto t = f.sum(map[a], map[b]);
      if (s.has_value() != t.has_value()) return false;
      if (s && map[*s] >= 0 && map[*s] != *t) return false;
    }
    return true;
  };
  std::function<bool(Elem)> go = [&](Elem a) -> bool {
    if (a == n) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          const auto s = e.sum(x, y);
          const auto t = f.sum(map[x], map[y]);
          if (s.has_value() != t.has_value() || (s && map[*s] != *t)) return false;
        }
      return true;
    }
    for (Elem c = 0; c < n; ++c) {
      if (used[c] || ke[a] != kf[c]) continue;
      if ((a == 0) != (c == 0) || (a == e.one()) != (c == f.one())) continue;
      map[a] = c;
      used[c] = 1;
      if (consistent(a) && go(a + 1)) return true;
      map[a] = -1;
      used[c] = 0;
    }
    return false;
  };
  if (go(0)) return map;
  return std::nullopt;
}

inline bool is_isomorphic(const EffectAlgebra& e, const EffectAlgebra& f) {
  return find_isomorphism(e, f).has_value();
}

struct EnumerationResult {
  std::vector<EffectAlgebra> algebras;  // canonical forms, sorted by code
  bool complete = true;                 // false when the step budget ran out
  std::uint64_t steps = 0;
};

namespace detail {

/// Search over symmetric middle tables with a fixed complement involution.
class TableSearch {
 public:
  TableSearch(int n, std::vector<Elem> comp, std::uint64_t budget, std::set<TableCode>& found,
              std::uint64_t& steps)
      : n_(n), one_(n - 1), comp_(std::move(comp)), budget_(budget), found_(found), steps_(steps),
        t_(n, n - 1), decided_(static_cast<std::size_t>(n) * n, 0) {
    for (Elem a = 0; a < n; ++a) {
      set(0, a, a);
      for (Elem b = 1; b < n; ++b)
        if (b == one_ || a == one_) mark(a, b);
    }
    for (Elem a = 1; a < one_; ++a) set(a, comp_[a], one_);
    for (Elem a = 1; a < one_; ++a)
      for (Elem b = a; b < one_; ++b)
        if (!decided(a, b)) pairs_.push_back({a, b});
  }

  bool run() {
    go(0);
    return !exhausted_;
  }

 private:
  bool decided(Elem a, Elem b) const { return decided_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  void mark(Elem a, Elem b) {
    decided_[static_cast<std::size_t>(a) * n_ + b] = 1;
    decided_[static_cast<std::size_t>(b) * n_ + a] = 1;
  }
  void unmark(Elem a, Elem b) {
    decided_[static_cast<std::size_t>(a) * n_ + b] = 0;
    decided_[static_cast<std::size_t>(b) * n_ + a] = 0;
    t_.at(a, b).reset();
    t_.at(b, a).reset();
  }
  void set(Elem a, Elem b, Elem v) {
    t_.at(a, b) = v;
    t_.at(b, a) = v;
    mark(a, b);
  }

  // Kleene associativity on fully decided triples, plus cancellation in touched rows.
  bool locally_ok(Elem a, Elem b) const {
    for (Elem r : {a, b}) {
      std::vector<char> seen(static_cast<std::size_t>(n_), 0);
      for (Elem c = 0; c < n_; ++c)
        if (decided(r, c) && t_.at(r, c)) {
          if (seen[*t_.at(r, c)]) return false;
          seen[*t_.at(r, c)] = 1;
        }
    }
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y) {
        if (!decided(x, y)) continue;
        const auto xy = t_.at(x, y);
        for (Elem z = 0; z < n_; ++z) {
          if (!decided(y, z)) continue;
          const auto yz = t_.at(y, z);
          if (xy && !decided(*xy, z)) continue;
          if (yz && !decided(x, *yz)) continue;
          const auto lhs = xy ? t_.at(*xy, z) : std::nullopt;
          const auto rhs = yz ? t_.at(x, *yz) : std::nullopt;
          if (lhs != rhs) return false;
        }
      }
    return true;
  }

  void go(std::size_t k) {
    if (exhausted_) return;
    if (++steps_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (k == pairs_.size()) {
      if (validate_effect_algebra(t_).valid()) found_.insert(canonical_code(EffectAlgebra(t_)));
      return;
    }
    const auto [a, b] = pairs_[k];
    // Undefined first, then each admissible middle value.
    mark(a, b);
    if (locally_ok(a, b)) go(k + 1);
    unmark(a, b);
    for (Elem v = 1; v < one_ && !exhausted_; ++v) {
      if (v == a || v == b) continue;
      set(a, b, v);
      if (locally_ok(a, b)) go(k + 1);
      unmark(a, b);
    }
  }

  int n_;
  Elem one_;
  std::vector<Elem> comp_;
  std::uint64_t budget_;
  std::set<TableCode>& found_;
  std::uint64_t& steps_;
  PartialTable t_;
  std::vector<char> decided_;
  std::vector<std::pair<Elem, Elem>> pairs_;
  bool exhausted_ = false;
};

inline EnumerationResult collect(const std::set<TableCode>& codes, bool complete, std::uint64_t steps) {
  EnumerationResult r;
  r.complete = complete;
  r.steps = steps;
  for (const auto& c : codes) r.algebras.push_back(decode(c));
  return r;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultEnumerationBudget = 50'000'000;

/// All effect algebras with n elements up to isomorphism. The complement
/// involution is fixed up to relabelling (fixed points first, then 2-cycles),
/// the remaining middle sums are searched with incremental associativity and
/// cancellation pruning, and survivors are deduplicated by canonical code.
inline EnumerationResult enumerate_effect_algebras(int n, std::uint64_t budget = kDefaultEnumerationBudget) {
  if (n < 1) throw std::invalid_argument("enumerate_effect_algebras: n must be positive");
  std::set<TableCode> codes;
  std::uint64_t steps = 0;
  if (n == 1) {
    codes.insert(canonical_code(EffectAlgebra::one_element()));
    return detail::collect(codes, true, 0);
  }
  const int m = n - 2;
  bool complete = true;
  for (int fixed = m % 2; fixed <= m && complete; fixed += 2) {
    std::vector<Elem> comp(static_cast<std::size_t>(n), 0);
    comp[0] = n - 1;
    comp[n - 1] = 0;
    for (Elem a = 1; a <= fixed; ++a) comp[a] = a;
    for (Elem a = fixed + 1; a + 1 <= m; a += 2) {
      comp[a] = a + 1;
      comp[a + 1] = a;
    }
    detail::TableSearch s(n, comp, budget, codes, steps);
    complete = s.run();
  }
  return detail::collect(codes, complete, steps);
}

/// Independent brute-force enumerator for cross-checking (n <= 5): every
/// symmetric assignment of middle sums, full validation, dedupe by explicit
/// isomorphism search rather than canonical codes.
inline std::vector<EffectAlgebra> enumerate_effect_algebras_naive(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("enumerate_effect_algebras_naive: n must be in 1..5");
  if (n == 1) return {EffectAlgebra::one_element()};
  const Elem one = n - 1;
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 1; a < one; ++a)
    for (Elem b = a; b < one; ++b) pairs.push_back({a, b});
  std::vector<EffectAlgebra> reps;
  std::vector<int> choice(pairs.size(), 0);  // 0 = undefined, v = value v
  while (true) {
    PartialTable t(n, one);
    for (Elem a = 0; a < n; ++a) {
      t.at(0, a) = a;
      t.at(a, 0) = a;
    }
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (choice[i] > 0) {
        t.at(pairs[i].first, pairs[i].second) = choice[i];
        t.at(pairs[i].second, pairs[i].first) = choice[i];
      }
    if (validate_effect_algebra(t).valid()) {
      EffectAlgebra e(t);
      bool seen = false;
      for (const auto& r : reps)
        if (is_isomorphic(r, e)) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back(e);
    }
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] <= one) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  return reps;
}

}  // namespace effalg
