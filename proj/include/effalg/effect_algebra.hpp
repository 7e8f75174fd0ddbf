#pragma once
// Finite effect algebras as dense partial sum tables.
//
// Elements are indices 0..size-1 and the zero element is always index 0.
// A PartialTable is raw, possibly invalid data; EffectAlgebra only exists
// for tables that passed validate_effect_algebra().

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace effalg {

using Elem = int;

struct PartialTable {
  int size = 0;
  Elem one = 0;
  std::vector<std::optional<Elem>> entries;  // size * size, row-major; nullopt = undefined

  PartialTable() = default;
  PartialTable(int n, Elem top) : size(n), one(top), entries(static_cast<std::size_t>(n) * n) {}

  std::optional<Elem>& at(Elem a, Elem b) { return entries[static_cast<std::size_t>(a) * size + b]; }
  const std::optional<Elem>& at(Elem a, Elem b) const {
    return entries[static_cast<std::size_t>(a) * size + b];
  }

  friend bool operator==(const PartialTable&, const PartialTable&) = default;
};

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::size_t total = 0;  // may exceed violations.size(); witnesses are capped per axiom

  bool valid() const { return total == 0; }

  bool has(const std::string& axiom) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.axiom == axiom; });
  }

  std::string summary() const {
    if (valid()) return "valid";
    std::ostringstream os;
    os << total << " violation(s)";
    for (const auto& v : violations) {
      os << "; " << v.axiom << " (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
      os << ")";
    }
    return os.str();
  }
};

namespace detail {

class ViolationSink {
 public:
  explicit ViolationSink(ValidationReport& r, std::size_t cap = 8) : report_(r), cap_(cap) {}
  void add(const std::string& axiom, std::vector<Elem> witness) {
    ++report_.total;
    std::size_t seen = 0;
    for (const auto& v : report_.violations)
      if (v.axiom == axiom) ++seen;
    if (seen < cap_) report_.violations.push_back({axiom, std::move(witness)});
  }

 private:
  ValidationReport& report_;
  std::size_t cap_;
};

inline bool table_in_range(const PartialTable& t, ViolationSink& sink) {
  bool ok = t.size >= 1 && t.one >= 0 && t.one < t.size &&
            t.entries.size() == static_cast<std::size_t>(t.size) * t.size;
  if (!ok) {
    sink.add("shape", {t.size, t.one});
    return false;
  }
  for (Elem a = 0; a < t.size; ++a)
    for (Elem b = 0; b < t.size; ++b)
      if (auto v = t.at(a, b); v && (*v < 0 || *v >= t.size)) {
        sink.add("range", {a, b, *v});
        ok = false;
      }
  return ok;
}

/// Partial commutative monoid, cancellation and positivity: the axioms shared with GEAs.
inline void check_pcm_axioms(const PartialTable& t, ViolationSink& sink) {
  const int n = t.size;
  for (Elem a = 0; a < n; ++a)
    if (t.at(0, a) != std::optional<Elem>(a) || t.at(a, 0) != std::optional<Elem>(a))
      sink.add("zero-neutral", {a});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (t.at(a, b) != t.at(b, a)) sink.add("commutativity", {a, b});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const auto ab = t.at(a, b);
      for (Elem c = 0; c < n; ++c) {
        const auto bc = t.at(b, c);
        std::optional<Elem> lhs = ab ? t.at(*ab, c) : std::nullopt;
        std::optional<Elem> rhs = bc ? t.at(a, *bc) : std::nullopt;
        if (lhs != rhs) sink.add("associativity", {a, b, c});
      }
    }
  for (Elem a = 0; a < n; ++a) {
    std::vector<Elem> seen(static_cast<std::size_t>(n), -1);
    for (Elem b = 0; b < n; ++b) {
      const auto ab = t.at(a, b);
      if (!ab) continue;
      if (seen[*ab] >= 0) sink.add("cancellation", {a, seen[*ab], b});
      else seen[*ab] = b;
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (t.at(a, b) == std::optional<Elem>(0) && (a != 0 || b != 0)) sink.add("positivity", {a, b});
}

inline std::vector<char> derived_leq(const PartialTable& t) {
  const int n = t.size;
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c)
      if (auto b = t.at(a, c)) leq[static_cast<std::size_t>(a) * n + *b] = 1;
  return leq;
}

inline void check_order(const PartialTable& t, ViolationSink& sink, bool bounded) {
  const int n = t.size;
  const auto leq = derived_leq(t);
  auto le = [&](Elem a, Elem b) { return leq[static_cast<std::size_t>(a) * n + b] != 0; };
  for (Elem a = 0; a < n; ++a) {
    if (!le(a, a)) sink.add("order-reflexive", {a});
    if (!le(0, a)) sink.add("order-bottom", {a});
    if (bounded && !le(a, t.one)) sink.add("order-top", {a});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (le(a, b) && le(b, a)) sink.add("order-antisymmetric", {a, b});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      for (Elem c = 0; c < n; ++c)
        if (le(b, c) && !le(a, c)) sink.add("order-transitive", {a, b, c});
    }
}

}  // namespace detail

/// Checks every effect algebra axiom; violations are data, never exceptions.
inline ValidationReport validate_effect_algebra(const PartialTable& t) {
  ValidationReport r;
  detail::ViolationSink sink(r);
  if (!detail::table_in_range(t, sink)) return r;
  detail::check_pcm_axioms(t, sink);
  const int n = t.size;
  // (iii) unique complement
  for (Elem a = 0; a < n; ++a) {
    std::vector<Elem> comps;
    for (Elem b = 0; b < n; ++b)
      if (t.at(a, b) == std::optional<Elem>(t.one)) comps.push_back(b);
    if (comps.size() != 1) {
      std::vector<Elem> w{a};
      w.insert(w.end(), comps.begin(), comps.end());
      sink.add("complement", w);
    }
  }
  // (iv) a (+) 1 defined iff a = 0, and then equals 1
  for (Elem a = 0; a < n; ++a) {
    const auto s = t.at(a, t.one);
    if (a == 0 && s != std::optional<Elem>(t.one)) sink.add("top", {a, t.one});
    if (a != 0 && s) sink.add("top", {a, t.one});
  }
  detail::check_order(t, sink, true);
  return r;
}

/// Generalized effect algebra axioms (no top element).
inline ValidationReport validate_generalized_effect_algebra(const PartialTable& t) {
  ValidationReport r;
  detail::ViolationSink sink(r);
  PartialTable copy = t;
  copy.one = 0;
  if (!detail::table_in_range(copy, sink)) return r;
  detail::check_pcm_axioms(t, sink);
  detail::check_order(t, sink, false);
  return r;
}

class InvalidAlgebra : public std::runtime_error {
 public:
  explicit InvalidAlgebra(ValidationReport r)
      : std::runtime_error("invalid effect algebra: " + r.summary()), report_(std::move(r)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A validated finite effect algebra with its derived order, complement and subtraction.
class EffectAlgebra {
 public:
  EffectAlgebra() : EffectAlgebra(one_element()) {}

  explicit EffectAlgebra(PartialTable t) {
    auto report = validate_effect_algebra(t);
    if (!report.valid()) throw InvalidAlgebra(std::move(report));
    auto impl = std::make_shared<Impl>();
    impl->table = std::move(t);
    derive(*impl);
    impl_ = std::move(impl);
  }

  static EffectAlgebra one_element() {
    PartialTable t(1, 0);
    t.at(0, 0) = 0;
    return EffectAlgebra(std::move(t));
  }

  /// Chain C_n = {0, ..., n} with i (+) j = i + j when i + j <= n.
  static EffectAlgebra chain(int n) {
    if (n < 0) throw std::invalid_argument("chain: n must be nonnegative");
    PartialTable t(n + 1, n);
    for (Elem i = 0; i <= n; ++i)
      for (Elem j = 0; i + j <= n; ++j) t.at(i, j) = i + j;
    return EffectAlgebra(std::move(t));
  }

  static EffectAlgebra two_element() { return chain(1); }

  /// Subsets of an n-set under disjoint union; element index = bitmask.
  static EffectAlgebra boolean(int n) {
    if (n < 0 || n > 10) throw std::invalid_argument("boolean: n out of range");
    const int size = 1 << n;
    PartialTable t(size, size - 1);
    for (Elem a = 0; a < size; ++a)
      for (Elem b = 0; b < size; ++b)
        if ((a & b) == 0) t.at(a, b) = a | b;
    return EffectAlgebra(std::move(t));
  }

  int size() const { return impl_->table.size; }
  Elem zero() const { return 0; }
  Elem one() const { return impl_->table.one; }
  const PartialTable& table() const { return impl_->table; }

  std::optional<Elem> sum(Elem a, Elem b) const { return impl_->table.at(a, b); }
  bool orthogonal(Elem a, Elem b) const { return impl_->table.at(a, b).has_value(); }
  bool leq(Elem a, Elem b) const { return impl_->leq[index(a, b)] != 0; }
  /// b (-) a, defined iff a <= b.
  std::optional<Elem> minus(Elem b, Elem a) const { return impl_->minus[index(b, a)]; }
  Elem complement(Elem a) const { return impl_->complement[a]; }

  std::vector<Elem> elements() const {
    std::vector<Elem> v(static_cast<std::size_t>(size()));
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  /// Relabel with perm[old] = new; perm must fix 0.
  EffectAlgebra relabel(const std::vector<Elem>& perm) const {
    PartialTable t(size(), perm[one()]);
    for (Elem a = 0; a < size(); ++a)
      for (Elem b = 0; b < size(); ++b)
        if (auto s = sum(a, b)) t.at(perm[a], perm[b]) = perm[*s];
    return EffectAlgebra(std::move(t));
  }

  friend bool operator==(const EffectAlgebra& a, const EffectAlgebra& b) {
    return a.impl_ == b.impl_ || a.table() == b.table();
  }

 private:
  std::size_t index(Elem a, Elem b) const { return static_cast<std::size_t>(a) * size() + b; }

  struct Impl {
    PartialTable table;
    std::vector<char> leq;
    std::vector<std::optional<Elem>> minus;
    std::vector<Elem> complement;
  };

  static void derive(Impl& d) {
    const int n = d.table.size;
    const auto idx = [n](Elem a, Elem b) { return static_cast<std::size_t>(a) * n + b; };
    d.leq.assign(static_cast<std::size_t>(n) * n, 0);
    d.minus.assign(static_cast<std::size_t>(n) * n, std::nullopt);
    d.complement.assign(static_cast<std::size_t>(n), 0);
    for (Elem a = 0; a < n; ++a)
      for (Elem c = 0; c < n; ++c)
        if (auto b = d.table.at(a, c)) {
          d.leq[idx(a, *b)] = 1;
          d.minus[idx(*b, a)] = c;
          if (*b == d.table.one) d.complement[a] = c;
        }
  }

  std::shared_ptr<const Impl> impl_;
};

/// Coproduct in EA: glue the two algebras at 0 and 1, no sums across.
/// A one-element operand absorbs everything (0 = 1 is forced), giving the one-element algebra.
inline EffectAlgebra horizontal_sum(const EffectAlgebra& e, const EffectAlgebra& f) {
  if (e.size() == 1 || f.size() == 1) return EffectAlgebra::one_element();
  const int n = e.size() + f.size() - 2;
  const Elem top = n - 1;
  std::vector<Elem> me(static_cast<std::size_t>(e.size())), mf(static_cast<std::size_t>(f.size()));
  Elem next = 1;
  for (Elem a = 0; a < e.size(); ++a) me[a] = a == 0 ? 0 : a == e.one() ? top : next++;
  for (Elem a = 0; a < f.size(); ++a) mf[a] = a == 0 ? 0 : a == f.one() ? top : next++;
  PartialTable t(n, top);
  for (Elem a = 0; a < e.size(); ++a)
    for (Elem b = 0; b < e.size(); ++b)
      if (auto s = e.sum(a, b)) t.at(me[a], me[b]) = me[*s];
  for (Elem a = 0; a < f.size(); ++a)
    for (Elem b = 0; b < f.size(); ++b)
      if (auto s = f.sum(a, b)) t.at(mf[a], mf[b]) = mf[*s];
  return EffectAlgebra(std::move(t));
}

/// MO2: {0, x, y, 1} with x (+) x = 1 = y (+) y and x, y not orthogonal.
inline EffectAlgebra mo2() { return horizontal_sum(EffectAlgebra::chain(2), EffectAlgebra::chain(2)); }

/// First violating quadruple of (a(+)b)(-)(c(+)d) = (a(-)c)(+)(b(-)d), if any.
inline std::optional<std::vector<Elem>> check_vol_identity(const EffectAlgebra& e) {
  const int n = e.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const auto ab = e.sum(a, b);
      if (!ab) continue;
      for (Elem c = 0; c < n; ++c) {
        if (!e.leq(c, a)) continue;
        for (Elem d = 0; d < n; ++d) {
          if (!e.leq(d, b)) continue;
          const auto cd = e.sum(c, d);
          std::optional<Elem> lhs = cd ? e.minus(*ab, *cd) : std::nullopt;
          const auto ac = e.minus(a, c);
          const auto bd = e.minus(b, d);
          std::optional<Elem> rhs = (ac && bd) ? e.sum(*ac, *bd) : std::nullopt;
          if (!lhs || lhs != rhs) return std::vector<Elem>{a, b, c, d};
        }
      }
    }
  return std::nullopt;
}

struct RdpResult {
  bool decomposition_form = true;   // a <= b1 (+) b2  =>  a = a1 (+) a2, ai <= bi
  bool refinement_form = true;      // a1 (+) a2 = b1 (+) b2  =>  2x2 refinement matrix
  std::vector<Elem> decomposition_witness;  // (a, b1, b2)
  std::vector<Elem> refinement_witness;     // (a1, a2, b1, b2)

  bool pass() const { return decomposition_form && refinement_form; }
  bool forms_agree() const { return decomposition_form == refinement_form; }
};

/// Riesz decomposition property, checked in both classical formulations.
inline RdpResult check_rdp(const EffectAlgebra& e) {
  const int n = e.size();
  RdpResult r;
  for (Elem b1 = 0; b1 < n && r.decomposition_form; ++b1)
    for (Elem b2 = 0; b2 < n && r.decomposition_form; ++b2) {
      const auto s = e.sum(b1, b2);
      if (!s) continue;
      for (Elem a = 0; a < n; ++a) {
        if (!e.leq(a, *s)) continue;
        bool found = false;
        for (Elem a1 = 0; a1 < n && !found; ++a1) {
          if (!e.leq(a1, b1)) continue;
          const auto a2 = e.minus(a, a1);
          found = a2 && e.leq(*a2, b2);
        }
        if (!found) {
          r.decomposition_form = false;
          r.decomposition_witness = {a, b1, b2};
          break;
        }
      }
    }
  for (Elem a1 = 0; a1 < n && r.refinement_form; ++a1)
    for (Elem a2 = 0; a2 < n && r.refinement_form; ++a2) {
      const auto s = e.sum(a1, a2);
      if (!s) continue;
      for (Elem b1 = 0; b1 < n; ++b1) {
        const auto b2 = e.minus(*s, b1);
        if (!b2) continue;
        bool found = false;
        for (Elem c11 = 0; c11 < n && !found; ++c11) {
          const auto c12 = e.minus(a1, c11);
          const auto c21 = e.minus(b1, c11);
          if (!c12 || !c21) continue;
          const auto c22 = e.minus(a2, *c21);
          found = c22 && e.sum(*c12, *c22) == std::optional<Elem>(*b2);
        }
        if (!found) {
          r.refinement_form = false;
          r.refinement_witness = {a1, a2, b1, *b2};
          break;
        }
      }
    }
  return r;
}

}  // namespace effalg
