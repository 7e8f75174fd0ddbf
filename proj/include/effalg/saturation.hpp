#pragma once
// Congruence saturation for effect algebra presentations.
//
// Formal elements live in a union-find; sum facts x (+) y = z are closed under
// the rules every effect algebra forces: zero is neutral, sums are functions,
// cancellation, positivity, a (+) 1 defined only for a = 0, and Kleene
// associativity (which may introduce new formal elements). When nothing fires
// any more, the classes and facts form a partial algebra that is validated as
// an effect algebra; each step is forced, so a valid result is initial among
// effect algebras satisfying the presentation.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "effalg/effect_algebra.hpp"

namespace effalg {

enum class SaturationStatus { ok, budget_exhausted, invalid };

struct SaturationResult {
  SaturationStatus status = SaturationStatus::ok;
  std::optional<EffectAlgebra> algebra;
  std::vector<Elem> map;  // formal element -> algebra index (valid when ok)
  std::size_t classes = 0;
  std::size_t created = 0;
  std::vector<std::string> transcript;
};

inline constexpr std::size_t kDefaultSaturationBudget = 256;

class Saturation {
 public:
  int add_element() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }

  int add_elements(int n) {
    const int first = static_cast<int>(parent_.size());
    for (int i = 0; i < n; ++i) add_element();
    return first;
  }

  void add_sum(int a, int b, int c) { facts_.push_back({a, b, c}); }
  void identify(int a, int b) { pending_merges_.push_back({a, b}); }
  void set_zero(int z) { zero_ = z; }
  void set_one(int o) { one_ = o; }

  int size() const { return static_cast<int>(parent_.size()); }

  SaturationResult run(std::size_t budget = kDefaultSaturationBudget) {
    SaturationResult r;
    const int initial = size();
    for (auto [a, b] : pending_merges_) unite(a, b);
    pending_merges_.clear();
    while (true) {
      normalize();
      if (live_count() > budget) {
        r.status = SaturationStatus::budget_exhausted;
        r.classes = live_count();
        r.created = static_cast<std::size_t>(size() - initial);
        r.transcript.push_back("element budget " + std::to_string(budget) + " exhausted");
        return r;
      }
      if (associativity_pass(false)) continue;
      if (associativity_pass(true)) continue;
      break;
    }
    r.created = static_cast<std::size_t>(size() - initial);
    return extract(std::move(r));
  }

 private:
  struct Fact {
    int a, b, c;
  };

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::size_t live_count() {
    std::size_t n = 0;
    for (int x = 0; x < size(); ++x) n += find(x) == x;
    return n;
  }

  // Canonicalise facts and apply the merge rules until stable.
  void normalize() {
    while (true) {
      bool merged = false;
      const int z = find(zero_), o = find(one_);
      for (int x = 0; x < size(); ++x)
        if (find(x) == x) facts_.push_back({z, x, x});
      table_.clear();
      by_result_.clear();
      std::vector<Fact> kept;
      for (Fact f : facts_) {
        f = {find(f.a), find(f.b), find(f.c)};
        if (f.a > f.b) std::swap(f.a, f.b);
        auto [it, fresh] = table_.emplace(std::make_pair(f.a, f.b), f.c);
        if (!fresh) {
          if (it->second != f.c) merged |= unite(it->second, f.c);
          continue;
        }
        kept.push_back(f);
      }
      facts_ = std::move(kept);
      for (const Fact& f : facts_) {
        // cancellation, in both argument positions
        for (auto [x, y] : {std::make_pair(f.a, f.b), std::make_pair(f.b, f.a)}) {
          auto [it, fresh] = by_result_.emplace(std::make_pair(x, f.c), y);
          if (!fresh && it->second != y) merged |= unite(it->second, y);
        }
        if (f.c == z) merged |= unite(f.a, z) | unite(f.b, z);
        if (f.a == o) merged |= unite(f.b, z);
        if (f.b == o) merged |= unite(f.a, z);
      }
      if (!merged) return;
    }
  }

  std::optional<int> lookup(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = table_.find({a, b});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  // (a (+) b) (+) c = d forces b (+) c = e and a (+) e = d.
  bool associativity_pass(bool create) {
    std::vector<Fact> added;
    std::map<std::pair<int, int>, int> fresh;
    std::vector<std::vector<std::pair<int, int>>> by_left(static_cast<std::size_t>(size()));
    for (const Fact& f : facts_) {
      by_left[f.a].push_back({f.b, f.c});
      if (f.a != f.b) by_left[f.b].push_back({f.a, f.c});
    }
    const int z = find(zero_);
    for (const Fact& f : facts_) {
      for (auto [a, b] : {std::make_pair(f.a, f.b), std::make_pair(f.b, f.a)}) {
        if (a == z || b == z) continue;
        for (auto [c, d] : by_left[f.c]) {
          if (c == z) continue;
          std::optional<int> bc = lookup(b, c);
          if (!bc) {
            auto key = std::minmax(b, c);
            auto it = fresh.find(key);
            if (it != fresh.end()) bc = it->second;
          }
          if (!bc) {
            if (!create) continue;
            const int e = add_element();
            fresh[std::minmax(b, c)] = e;
            added.push_back({b, c, e});
            bc = e;
          }
          const auto ad = lookup(a, *bc);
          if (!ad || *ad != d) added.push_back({a, *bc, d});
        }
      }
      if (create && !added.empty()) break;
    }
    if (added.empty()) return false;
    facts_.insert(facts_.end(), added.begin(), added.end());
    return true;
  }

  SaturationResult extract(SaturationResult r) {
    const int z = find(zero_), o = find(one_);
    std::vector<int> reps;
    for (int x = 0; x < size(); ++x)
      if (find(x) == x && x != z && x != o) reps.push_back(x);
    std::map<int, Elem> index{{z, 0}};
    Elem next = 1;
    for (int x : reps) index[x] = next++;
    if (o != z) index[o] = next++;
    const int n = static_cast<int>(index.size());
    r.classes = static_cast<std::size_t>(n);
    PartialTable t(n, index.at(o));
    for (const Fact& f : facts_) {
      t.at(index.at(f.a), index.at(f.b)) = index.at(f.c);
      t.at(index.at(f.b), index.at(f.a)) = index.at(f.c);
    }
    const ValidationReport v = validate_effect_algebra(t);
    if (!v.valid()) {
      r.status = SaturationStatus::invalid;
      r.transcript.push_back("saturated structure is not an effect algebra: " + v.summary());
      return r;
    }
    r.algebra = EffectAlgebra(std::move(t));
    r.map.resize(static_cast<std::size_t>(size()));
    for (int x = 0; x < size(); ++x) r.map[x] = index.at(find(x));
    return r;
  }

  std::vector<int> parent_;
  std::vector<Fact> facts_;
  std::vector<std::pair<int, int>> pending_merges_;
  std::map<std::pair<int, int>, int> table_;
  std::map<std::pair<int, int>, int> by_result_;
  int zero_ = 0;
  int one_ = 0;
};

}  // namespace effalg
