#pragma once
// The lex po-groups A = Q x-> G and B = Q x-> H with G = {(x,y,z) : x+y+z even}
// and H = Z, their tensor product, and bounded interpolation experiments.
//
// Two cone variants: as_printed uses G+ = {0} x 2Z x 2Z and H+ = 2Z, which are
// subgroups, so the resulting order is only a preorder; nonneg_cone uses
// {0} x 2N x 2N and 2N. All arithmetic is exact.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "effalg/numeric.hpp"

namespace effalg::wehrung {

enum class Variant { as_printed, nonneg_cone };

inline const char* variant_name(Variant v) { return v == Variant::as_printed ? "as-printed" : "nonneg-cone"; }

enum class Side { A, B };

inline bool even(const Int& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

/// (head, tail): tail has length 3 (an element of G) for A and 1 for B.
struct LexElement {
  Rational head;
  IntVec tail;

  friend bool operator==(const LexElement& x, const LexElement& y) { return x.head == y.head && x.tail == y.tail; }
};

inline LexElement lex(const Rational& head, std::initializer_list<long> tail) { return {head, int_vec(tail)}; }

inline bool valid(Side s, const LexElement& x) {
  if (s == Side::B) return x.tail.size() == 1;
  return x.tail.size() == 3 && even(x.tail[0] + x.tail[1] + x.tail[2]);
}

inline LexElement operator+(const LexElement& x, const LexElement& y) { return {x.head + y.head, add(x.tail, y.tail)}; }
inline LexElement operator-(const LexElement& x, const LexElement& y) { return {x.head - y.head, sub(x.tail, y.tail)}; }

inline bool tail_positive(Variant v, Side s, const IntVec& t) {
  if (s == Side::B) return even(t[0]) && (v == Variant::as_printed || t[0] >= 0);
  if (t[0] != 0 || !even(t[1]) || !even(t[2])) return false;
  return v == Variant::as_printed || (t[1] >= 0 && t[2] >= 0);
}

/// Lex rule: head > 0, or head = 0 and the tail is in the declared cone.
inline bool positive(Variant v, Side s, const LexElement& x) {
  return x.head > 0 || (x.head == 0 && tail_positive(v, s, x.tail));
}

struct LexComparison {
  bool leq = false;
  bool preorder = false;  // the variant's cone is a subgroup
};

inline LexComparison lex_leq(Variant v, Side s, const LexElement& x, const LexElement& y) {
  return {positive(v, s, y - x), v == Variant::as_printed};
}

inline LexElement unit(Side s) { return s == Side::A ? lex(1, {0, 0, 0}) : lex(1, {0}); }

struct NamedCheck {
  std::string name;
  bool holds = false;
};

struct Model {
  Variant variant = Variant::nonneg_cone;
  LexElement unit_a = unit(Side::A);
  LexElement unit_b = unit(Side::B);
  bool cone_is_subgroup = false;  // cone and -cone meet outside 0
  std::vector<NamedCheck> checks;

  bool valid() const {
    for (const auto& c : checks)
      if (!c.holds) return false;
    return true;
  }
};

/// Builds A and B and validates units and cone axioms on a fixed grid of tails.
inline Model build_wehrung(Variant v) {
  Model m;
  m.variant = v;
  auto add_check = [&](std::string name, bool ok) { m.checks.push_back({std::move(name), ok}); };
  add_check("u_A is positive", positive(v, Side::A, m.unit_a));
  add_check("u_B is positive", positive(v, Side::B, m.unit_b));
  add_check("u_A in A", valid(Side::A, m.unit_a));
  add_check("u_B in B", valid(Side::B, m.unit_b));

  std::vector<LexElement> as, bs;
  const Rational heads[] = {Rational(-1), Rational(0), Rational(1, 2), Rational(3)};
  for (const auto& h : heads) {
    for (long x = -2; x <= 2; ++x)
      for (long y = -2; y <= 2; ++y)
        for (long z = -2; z <= 2; ++z)
          if ((x + y + z) % 2 == 0) as.push_back(lex(h, {x, y, z}));
    for (long x = -3; x <= 3; ++x) bs.push_back(lex(h, {x}));
  }
  for (Side s : {Side::A, Side::B}) {
    const auto& xs = s == Side::A ? as : bs;
    const LexElement& u = s == Side::A ? m.unit_a : m.unit_b;
    const std::string tag = s == Side::A ? "A" : "B";
    bool zero = positive(v, s, xs[0] - xs[0]);
    bool closed = true, order_unit = true, strict = true;
    for (const auto& x : xs) {
      // n u - x is positive as soon as n exceeds the head of x
      const Int n = floor_div(x.head.get_num(), x.head.get_den()) + 1;
      LexElement nu{Rational(n) * u.head, u.tail};
      order_unit = order_unit && positive(v, s, nu - x);
      if (positive(v, s, x) && positive(v, s, LexElement{-x.head, scale(Int(-1), x.tail)}) &&
          !(x.head == 0 && is_zero_vec(x.tail)))
        strict = false;
      for (const auto& y : xs)
        if (positive(v, s, x) && positive(v, s, y) && !positive(v, s, x + y)) closed = false;
    }
    add_check(tag + ": 0 is positive", zero);
    add_check(tag + ": cone closed under addition", closed);
    add_check(tag + ": unit is an order unit", order_unit);
    if (!strict) m.cone_is_subgroup = true;
  }
  return m;
}

// ---------------------------------------------------------------- A (x) B

/// (Q + G) (x) (Q + H) = Q(x)Q + Q(x)H + G(x)Q + G(x)H. G(x)Q = Q^3 and G(x)H = G
/// are written in the ambient Z^3 coordinates of G.
struct TensorABElement {
  Rational qq;
  Rational qh;
  std::vector<Rational> gq = std::vector<Rational>(3);
  IntVec gh = IntVec(3);

  friend bool operator==(const TensorABElement&, const TensorABElement&) = default;
};

inline bool valid(const TensorABElement& v) { return v.gh.size() == 3 && even(v.gh[0] + v.gh[1] + v.gh[2]); }

inline TensorABElement operator+(const TensorABElement& x, const TensorABElement& y) {
  TensorABElement r{x.qq + y.qq, x.qh + y.qh, std::vector<Rational>(3), add(x.gh, y.gh)};
  for (int i = 0; i < 3; ++i) r.gq[i] = x.gq[i] + y.gq[i];
  return r;
}

inline TensorABElement operator-(const TensorABElement& x) {
  TensorABElement r{-x.qq, -x.qh, std::vector<Rational>(3), scale(Int(-1), x.gh)};
  for (int i = 0; i < 3; ++i) r.gq[i] = -x.gq[i];
  return r;
}

inline TensorABElement operator-(const TensorABElement& x, const TensorABElement& y) { return x + (-y); }

inline TensorABElement pure(const LexElement& a, const LexElement& b) {
  TensorABElement r;
  r.qq = a.head * b.head;
  r.qh = a.head * Rational(b.tail[0]);
  for (int i = 0; i < 3; ++i) {
    r.gq[i] = Rational(a.tail[i]) * b.head;
    r.gh[i] = a.tail[i] * b.tail[0];
  }
  return r;
}

/// A basis of G inside Z^3: G(x)H is free of rank 3 on b_i (x) 1.
inline std::vector<IntVec> g_basis() { return {int_vec({1, 1, 0}), int_vec({0, 1, 1}), int_vec({0, 0, 2})}; }

/// Coordinates of g in g_basis(); nullopt when g is not in G.
inline std::optional<IntVec> g_coords(const IntVec& g) {
  // g = c0 (1,1,0) + c1 (0,1,1) + c2 (0,0,2)
  const Int c0 = g[0];
  const Int c1 = g[1] - c0;
  const Int twice = g[2] - c1;
  if (!even(twice)) return std::nullopt;
  return IntVec{c0, c1, twice / 2};
}

enum class Invariant {
  head_sign,           // Q(x)Q part of every positive pure tensor is >= 0
  gq_first,            // head 0: G(x)Q first coordinate is 0
  gh_parity,           // head 0: G(x)H entries are even
  nonneg_signs,        // nonneg, head 0: Q(x)H >= 0 and G(x)Q >= 0
  nonneg_gq_zero,      // nonneg, head 0, G(x)Q = 0: G(x)H / 2 lies in G
  nonneg_qh_zero,      // nonneg, head 0, Q(x)H = 0: G(x)H first entry 0; G(x)Q_i = 0 forces G(x)H_i in 4N
};

inline const char* invariant_name(Invariant i) {
  switch (i) {
    case Invariant::head_sign: return "head-sign";
    case Invariant::gq_first: return "gq-first-coordinate";
    case Invariant::gh_parity: return "gh-parity";
    case Invariant::nonneg_signs: return "nonneg-signs";
    case Invariant::nonneg_gq_zero: return "nonneg-gq-zero";
    case Invariant::nonneg_qh_zero: return "nonneg-qh-zero";
  }
  return "?";
}

enum class DecisionStatus { member, refuted, unknown };

struct TermPair {
  LexElement a;
  LexElement b;
};

struct TensorConeDecision {
  DecisionStatus status = DecisionStatus::unknown;
  std::vector<TermPair> decomposition;  // member: sum of pure tensors of positives
  std::optional<Invariant> certificate;  // refuted: violated invariant
  std::string note;
};

inline bool divisible4_nonneg(const Int& x) { return x >= 0 && mpz_divisible_ui_p(x.get_mpz_t(), 4) != 0; }

/// True when v violates the invariant (which applies to the variant).
inline bool violates(Variant var, Invariant inv, const TensorABElement& v) {
  const bool head0 = v.qq == 0;
  const bool gq_zero = v.gq[0] == 0 && v.gq[1] == 0 && v.gq[2] == 0;
  switch (inv) {
    case Invariant::head_sign: return v.qq < 0;
    case Invariant::gq_first: return head0 && v.gq[0] != 0;
    case Invariant::gh_parity: return head0 && !(even(v.gh[0]) && even(v.gh[1]) && even(v.gh[2]));
    case Invariant::nonneg_signs:
      return var == Variant::nonneg_cone && head0 && (v.qh < 0 || v.gq[1] < 0 || v.gq[2] < 0);
    case Invariant::nonneg_gq_zero: {
      if (var != Variant::nonneg_cone || !head0 || !gq_zero) return false;
      if (!(even(v.gh[0]) && even(v.gh[1]) && even(v.gh[2]))) return false;
      const IntVec half{v.gh[0] / 2, v.gh[1] / 2, v.gh[2] / 2};
      return !g_coords(half).has_value();
    }
    case Invariant::nonneg_qh_zero:
      if (var != Variant::nonneg_cone || !head0 || v.qh != 0) return false;
      if (v.gh[0] != 0) return true;
      if (v.gq[1] == 0 && !divisible4_nonneg(v.gh[1])) return true;
      if (v.gq[2] == 0 && !divisible4_nonneg(v.gh[2])) return true;
      return false;
  }
  return false;
}

inline TensorABElement sum_of(const std::vector<TermPair>& terms) {
  TensorABElement s;
  for (const auto& t : terms) s = s + pure(t.a, t.b);
  return s;
}

/// Re-checks a decision: decompositions must consist of positives and sum to v;
/// refutations must name an invariant that v violates.
inline bool verify_decision(Variant var, const TensorABElement& v, const TensorConeDecision& d) {
  if (d.status == DecisionStatus::member) {
    for (const auto& t : d.decomposition)
      if (!valid(Side::A, t.a) || !valid(Side::B, t.b) || !positive(var, Side::A, t.a) ||
          !positive(var, Side::B, t.b))
        return false;
    return sum_of(d.decomposition) == v;
  }
  if (d.status == DecisionStatus::refuted) return d.certificate && violates(var, *d.certificate, v);
  return true;
}

inline Int sign_of(const Rational& x) { return x > 0 ? Int(1) : Int(-1); }

inline Rational abs_q(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Positive even N with N * w integral and even, for a rational vector w.
inline Int clearing_multiple(const std::vector<Rational>& w) {
  Int n = 2;
  for (const auto& x : w) n = lcm(n, Int(2) * x.get_den());
  return n;
}

/// Membership of v in the cone generated by a (x) b, a in A+, b in B+.
/// Head > 0: explicit decomposition. Head < 0: refuted. Head 0: the invariants
/// are also sufficient, and a decomposition is constructed when none is violated.
inline TensorConeDecision ab_tensor_cone_member(Variant var, const TensorABElement& v, std::size_t max_terms = 16) {
  TensorConeDecision d;
  if (!valid(v)) {
    d.note = "G(x)H part is not in G";
    return d;
  }
  for (Invariant inv : {Invariant::head_sign, Invariant::gq_first, Invariant::gh_parity, Invariant::nonneg_signs,
                        Invariant::nonneg_gq_zero, Invariant::nonneg_qh_zero})
    if (violates(var, inv, v)) {
      d.status = DecisionStatus::refuted;
      d.certificate = inv;
      return d;
    }
  std::vector<TermPair>& t = d.decomposition;
  if (v.qq > 0) {
    Rational share = v.qq / 4;
    Rational rest = v.qq;
    TensorABElement cur;
    // G(x)H: (1, w) (x) (share, 1) adds share w to G(x)Q and 1 to Q(x)H
    if (!is_zero_vec(v.gh)) {
      t.push_back({{Rational(1), v.gh}, lex(share, {1})});
      rest -= share;
    }
    cur = sum_of(t);
    // Q(x)Q(x)H correction: (|c|, 0) (x) (share/|c|, sign c)
    const Rational c = v.qh - cur.qh;
    if (c != 0) {
      t.push_back({lex(abs_q(c), {0, 0, 0}), LexElement{share / abs_q(c), IntVec{sign_of(c)}}});
      rest -= share;
    }
    cur = sum_of(t);
    std::vector<Rational> w(3);
    for (int i = 0; i < 3; ++i) w[i] = v.gq[i] - cur.gq[i];
    if (!(w[0] == 0 && w[1] == 0 && w[2] == 0)) {
      const Int n = clearing_multiple(w);
      IntVec g(3);
      for (int i = 0; i < 3; ++i) {
        const Rational x = w[i] * n;
        g[i] = x.get_num();
      }
      t.push_back({LexElement{share * n, g}, LexElement{Rational(1) / n, IntVec{0}}});
      rest -= share;
    }
    t.push_back({lex(rest, {0, 0, 0}), lex(1, {0})});
  } else if (var == Variant::as_printed) {
    // Every element with head 0, even G(x)H and G(x)Q_0 = 0 is reached.
    for (int i = 1; i <= 2; ++i)
      if (v.gq[i] != 0) {
        IntVec g(3);
        g[i] = 2 * sign_of(v.gq[i]);
        t.push_back({LexElement{0, g}, LexElement{abs_q(v.gq[i]) / 2, IntVec{0}}});
      }
    if (v.qh != 0) t.push_back({lex(abs_q(v.qh) / 2, {0, 0, 0}), LexElement{0, IntVec{2 * sign_of(v.qh)}}});
    const Int x = v.gh[0] / 2;
    const Int xpar = mpz_odd_p(x.get_mpz_t()) ? Int(1) : Int(0);
    if (x != 0 || xpar != 0) {
      // 2 (x, xpar, 0) through (1, g) (x) (0, 2) + (1, 0) (x) (0, -2)
      t.push_back({LexElement{1, IntVec{x, xpar, 0}}, lex(0, {2})});
      t.push_back({lex(1, {0, 0, 0}), lex(0, {-2})});
    }
    const Int rem[] = {0, v.gh[1] / 2 - xpar, v.gh[2] / 2};
    for (int i = 1; i <= 2; ++i)
      if (rem[i] != 0) {
        IntVec g(3), ng(3);
        g[i] = 2;
        ng[i] = -2;
        t.push_back({LexElement{0, g}, LexElement{1, IntVec{rem[i]}}});
        t.push_back({LexElement{0, ng}, lex(1, {0})});
      }
  } else {
    const Rational s = v.gq[1], u = v.gq[2];
    Int h1 = 0, h2 = 0;
    IntVec half{v.gh[0] / 2, v.gh[1] / 2, v.gh[2] / 2};
    if (v.qh > 0) {
      // 2g from (qh/2, g) (x) (0, 2); parity of g fixed through h1 or h2
      if (!g_coords(sub(half, IntVec{0, h1, h2}))) {
        if (s > 0) h1 = 1;
        else h2 = 1;  // u > 0 here: otherwise nonneg_gq_zero is violated
      }
      const IntVec g = sub(half, IntVec{0, h1, h2});
      t.push_back({LexElement{v.qh / 2, g}, lex(0, {2})});
    } else {
      if (s > 0) h1 = half[1];
      if (u > 0) h2 = half[2];
      const IntVec r = sub(v.gh, IntVec{0, 2 * h1, 2 * h2});
      for (int i = 1; i <= 2; ++i)
        if (r[i] != 0) {
          IntVec g(3);
          g[i] = r[i] / 2;  // r_i in 4N
          t.push_back({LexElement{0, g}, lex(0, {2})});
        }
    }
    if (s > 0) t.push_back({lex(0, {0, 2, 0}), LexElement{s / 2, IntVec{h1}}});
    if (u > 0) t.push_back({lex(0, {0, 0, 2}), LexElement{u / 2, IntVec{h2}}});
  }
  d.status = DecisionStatus::member;
  if (t.size() > max_terms || sum_of(t) != v) {
    d.status = DecisionStatus::unknown;
    d.note = "construction did not reproduce the element";
    t.clear();
  }
  return d;
}

// ---------------------------------------------------------------- interpolation

struct Quadruple {
  LexElement a1, a2, b1, b2;
};

struct SamplingReport {
  Variant variant = Variant::nonneg_cone;
  Side side = Side::A;
  std::size_t samples = 0;
  std::size_t attempts = 0;
  std::size_t interpolated = 0;
  std::optional<Quadruple> failure;

  bool ok() const { return samples > 0 && interpolated == samples && !failure; }
};

/// An interpolant a_i <= c <= b_j searched with heads in {max a, midpoint} and tails in a box.
inline std::optional<LexElement> find_interpolant(Variant v, Side s, const Quadruple& q, long box) {
  auto leq = [&](const LexElement& x, const LexElement& y) { return lex_leq(v, s, x, y).leq; };
  auto ok = [&](const LexElement& c) {
    return leq(q.a1, c) && leq(q.a2, c) && leq(c, q.b1) && leq(c, q.b2);
  };
  const Rational m = std::max(q.a1.head, q.a2.head);
  const Rational mm = std::min(q.b1.head, q.b2.head);
  std::vector<Rational> heads{m};
  if (m < mm) heads.insert(heads.begin(), (m + mm) / 2);
  for (const auto& h : heads) {
    if (s == Side::B) {
      for (long x = -box; x <= box; ++x)
        if (LexElement c = lex(h, {x}); ok(c)) return c;
    } else {
      for (long x = -box; x <= box; ++x)
        for (long y = -box; y <= box; ++y)
          for (long z = -box; z <= box; ++z)
            if ((x + y + z) % 2 == 0)
              if (LexElement c = lex(h, {x, y, z}); ok(c)) return c;
    }
  }
  return std::nullopt;
}

inline LexElement random_element(Side s, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> head(0, 2), coord(-bound, bound);
  const Rational h = make_rational(head(rng), 2);
  if (s == Side::B) return lex(h, {coord(rng)});
  long x = coord(rng), y = coord(rng), z = coord(rng);
  if ((x + y + z) % 2 != 0) z += z < bound ? 1 : -1;
  return lex(h, {x, y, z});
}

/// Random quadruples a1, a2 <= b1, b2 with heads in {0, 1/2, 1} and tail entries bounded by `bound`.
inline SamplingReport sample_interpolation(Variant v, Side s, std::size_t samples = 1000, long bound = 8,
                                           std::uint64_t seed = 20240601) {
  SamplingReport r;
  r.variant = v;
  r.side = s;
  std::mt19937_64 rng(seed);
  auto leq = [&](const LexElement& x, const LexElement& y) { return lex_leq(v, s, x, y).leq; };
  while (r.samples < samples && r.attempts < samples * 1000) {
    ++r.attempts;
    Quadruple q{random_element(s, rng, bound), random_element(s, rng, bound), random_element(s, rng, bound),
                random_element(s, rng, bound)};
    if (!(leq(q.a1, q.b1) && leq(q.a1, q.b2) && leq(q.a2, q.b1) && leq(q.a2, q.b2))) continue;
    ++r.samples;
    if (find_interpolant(v, s, q, bound + 2)) ++r.interpolated;
    else if (!r.failure) r.failure = q;
  }
  return r;
}

// Search in A (x) B restricted to elements with Q(x)Q part 0. If a1, a2 <= b1, b2
// all have head 0, every interpolant has head 0 as well (heads are monotone),
// and on head 0 the invariants above characterise the cone exactly. Elements are
// kept as small integers: qh and gq scaled by 2, gh as is.
struct SliceElement {
  long qh2 = 0;
  long gq2[3] = {0, 0, 0};
  long gh[3] = {0, 0, 0};

  TensorABElement exact() const {
    TensorABElement t;
    t.qh = make_rational(qh2, 2);
    for (int i = 0; i < 3; ++i) {
      t.gq[i] = make_rational(gq2[i], 2);
      t.gh[i] = gh[i];
    }
    return t;
  }
};

inline SliceElement slice_diff(const SliceElement& x, const SliceElement& y) {
  SliceElement d;
  d.qh2 = x.qh2 - y.qh2;
  for (int i = 0; i < 3; ++i) {
    d.gq2[i] = x.gq2[i] - y.gq2[i];
    d.gh[i] = x.gh[i] - y.gh[i];
  }
  return d;
}

inline long mod_pos(long x, long m) { return ((x % m) + m) % m; }

/// Cone membership for head-0 elements, same rules as the invariants.
inline bool slice_positive(Variant var, const SliceElement& d) {
  if (d.gq2[0] != 0) return false;
  for (int i = 0; i < 3; ++i)
    if (mod_pos(d.gh[i], 2) != 0) return false;
  if (var == Variant::as_printed) return true;
  if (d.qh2 < 0 || d.gq2[1] < 0 || d.gq2[2] < 0) return false;
  if (d.gq2[1] == 0 && d.gq2[2] == 0 && mod_pos(d.gh[0] + d.gh[1] + d.gh[2], 4) != 0) return false;
  if (d.qh2 == 0) {
    if (d.gh[0] != 0) return false;
    for (int i = 1; i <= 2; ++i)
      if (d.gq2[i] == 0 && (d.gh[i] < 0 || mod_pos(d.gh[i], 4) != 0)) return false;
  }
  return true;
}

struct SliceInterpolation {
  bool exists = false;
  SliceElement interpolant;  // qh2 and gq2 in quarter units (doubled once more)
  std::size_t candidates = 0;
};

namespace detail {

inline SliceElement doubled(const SliceElement& e) {
  SliceElement d = e;
  d.qh2 *= 2;
  for (int k = 0; k < 3; ++k) d.gq2[k] *= 2;
  return d;
}

// Only signs of qh2 and gq2 enter the cone rules, so quarter units need no rescaling.
inline bool positive_quarter(Variant var, const SliceElement& d) {
  SliceElement e = d;
  e.qh2 = (e.qh2 > 0) - (e.qh2 < 0);
  for (int k = 0; k < 3; ++k) e.gq2[k] = (e.gq2[k] > 0) - (e.gq2[k] < 0);
  return slice_positive(var, e);
}

// A coordinate of c matters only through "equal to an input" or its position
// between inputs, so inputs and pairwise midpoints cover every case.
template <class Get>
std::vector<long> quarter_candidates(const SliceElement dq[4], Get get) {
  std::vector<long> c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c.push_back((get(dq[i]) + get(dq[j])) / 2);
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

inline bool interpolates(Variant var, const SliceElement& c, const SliceElement dq[4]) {
  return positive_quarter(var, slice_diff(c, dq[0])) && positive_quarter(var, slice_diff(c, dq[1])) &&
         positive_quarter(var, slice_diff(dq[2], c)) && positive_quarter(var, slice_diff(dq[3], c));
}

}  // namespace detail

/// Test oracle: scans gh entries in a box 4 beyond the inputs, which covers every
/// combination of bounds and residues mod 4.
inline SliceInterpolation slice_interpolant_bruteforce(Variant var, const SliceElement q[4]) {
  SliceInterpolation out;
  SliceElement dq[4];
  for (int i = 0; i < 4; ++i) dq[i] = detail::doubled(q[i]);
  const auto qhs = detail::quarter_candidates(dq, [](const SliceElement& e) { return e.qh2; });
  const auto g0s = detail::quarter_candidates(dq, [](const SliceElement& e) { return e.gq2[0]; });
  const auto g1s = detail::quarter_candidates(dq, [](const SliceElement& e) { return e.gq2[1]; });
  const auto g2s = detail::quarter_candidates(dq, [](const SliceElement& e) { return e.gq2[2]; });
  long lo[3], hi[3];
  for (int k = 0; k < 3; ++k) {
    lo[k] = hi[k] = q[0].gh[k];
    for (int i = 1; i < 4; ++i) {
      lo[k] = std::min(lo[k], q[i].gh[k]);
      hi[k] = std::max(hi[k], q[i].gh[k]);
    }
    lo[k] -= 4;
    hi[k] += 4;
  }
  SliceElement c;
  for (long qh : qhs)
    for (long g0 : g0s)
      for (long g1 : g1s)
        for (long g2 : g2s) {
          c.qh2 = qh;
          c.gq2[0] = g0;
          c.gq2[1] = g1;
          c.gq2[2] = g2;
          for (long x = lo[0]; x <= hi[0]; ++x)
            for (long y = lo[1]; y <= hi[1]; ++y)
              for (long z = lo[2]; z <= hi[2]; ++z) {
                c.gh[0] = x;
                c.gh[1] = y;
                c.gh[2] = z;
                ++out.candidates;
                if (detail::interpolates(var, c, dq)) {
                  out.exists = true;
                  out.interpolant = c;
                  return out;
                }
              }
        }
  return out;
}

/// Exact decision. For each choice of the rational coordinates, the gh entries of c
/// face per-entry equalities, bounds and residues mod 4 plus one residue condition
/// on their sum; each entry offers at most four residues, which are tried jointly.
inline SliceInterpolation slice_interpolant(Variant var, const SliceElement q[4]) {
  SliceInterpolation out;
  SliceElement dq[4];
  for (int i = 0; i < 4; ++i) dq[i] = detail::doubled(q[i]);
  const auto qhs = detail::quarter_candidates(dq, [](const SliceElement& e) { return e.qh2; });
  const auto g0s = detail::quarter_candidates(dq, [](const SliceElement& e) { return e.gq2[0]; });
  const auto g1s = detail::quarter_candidates(dq, [](const SliceElement& e) { return e.gq2[1]; });
  const auto g2s = detail::quarter_candidates(dq, [](const SliceElement& e) { return e.gq2[2]; });
  for (int i = 0; i < 4; ++i)
    if (detail::interpolates(var, dq[i], dq)) {
      out.exists = true;
      out.interpolant = dq[i];
      return out;
    }
  constexpr long kNone = std::numeric_limits<long>::min();
  SliceElement c;
  for (long qh : qhs)
    for (long g0 : g0s)
      for (long g1 : g1s)
        for (long g2 : g2s) {
          ++out.candidates;
          c.qh2 = qh;
          c.gq2[0] = g0;
          c.gq2[1] = g1;
          c.gq2[2] = g2;
          long eq[3] = {kNone, kNone, kNone}, lower[3] = {kNone, kNone, kNone}, upper[3] = {kNone, kNone, kNone};
          long mod4[3] = {-1, -1, -1}, parity[3] = {-1, -1, -1};
          long sum_mod4 = -1;
          bool feasible = true;
          auto need = [&](long& slot, long value) {
            if (slot >= 0 && slot != value) feasible = false;
            slot = value;
          };
          for (int i = 0; i < 4 && feasible; ++i) {
            const bool lower_side = i < 2;  // c - a_i, else b_j - c
            SliceElement d = lower_side ? slice_diff(c, dq[i]) : slice_diff(dq[i], c);
            d.gh[0] = d.gh[1] = d.gh[2] = 0;
            // rational part of the cone rules, gh set aside
            if (d.gq2[0] != 0) feasible = false;
            if (var == Variant::nonneg_cone && (d.qh2 < 0 || d.gq2[1] < 0 || d.gq2[2] < 0)) feasible = false;
            if (!feasible) break;
            for (int k = 0; k < 3; ++k) need(parity[k], mod_pos(dq[i].gh[k], 2));
            if (var == Variant::as_printed) continue;
            if (d.gq2[1] == 0 && d.gq2[2] == 0) need(sum_mod4, mod_pos(dq[i].gh[0] + dq[i].gh[1] + dq[i].gh[2], 4));
            if (d.qh2 != 0) continue;
            if (eq[0] != kNone && eq[0] != dq[i].gh[0]) feasible = false;
            eq[0] = dq[i].gh[0];
            for (int k = 1; k <= 2; ++k)
              if (d.gq2[k] == 0) {
                need(mod4[k], mod_pos(dq[i].gh[k], 4));
                if (lower_side) lower[k] = lower[k] == kNone ? dq[i].gh[k] : std::max(lower[k], dq[i].gh[k]);
                else upper[k] = upper[k] == kNone ? dq[i].gh[k] : std::min(upper[k], dq[i].gh[k]);
              }
          }
          if (!feasible) continue;
          // per entry: one admissible value for each residue mod 4
          std::vector<long> options[3];
          for (int k = 0; k < 3; ++k)
            for (long rho = 0; rho < 4; ++rho) {
              if (parity[k] >= 0 && rho % 2 != parity[k]) continue;
              if (mod4[k] >= 0 && rho != mod4[k]) continue;
              long v;
              if (eq[k] != kNone) v = eq[k];
              else if (lower[k] != kNone) v = lower[k] + mod_pos(rho - lower[k], 4);
              else if (upper[k] != kNone) v = upper[k] - mod_pos(upper[k] - rho, 4);
              else v = rho;
              if (mod_pos(v, 4) != rho) continue;
              if (lower[k] != kNone && v < lower[k]) continue;
              if (upper[k] != kNone && v > upper[k]) continue;
              options[k].push_back(v);
            }
          for (long x : options[0])
            for (long y : options[1])
              for (long z : options[2]) {
                if (sum_mod4 >= 0 && mod_pos(x + y + z, 4) != sum_mod4) continue;
                c.gh[0] = x;
                c.gh[1] = y;
                c.gh[2] = z;
                if (!detail::interpolates(var, c, dq)) continue;  // guards the derivation above
                out.exists = true;
                out.interpolant = c;
                return out;
              }
        }
  return out;
}

struct FailureSearchReport {
  Variant variant = Variant::nonneg_cone;
  int bound = 0;
  std::size_t grid_size = 0;
  std::size_t quadruples = 0;  // a1 = 0, a2 <= b1, b2 in the grid
  std::size_t interpolated = 0;
  std::optional<std::vector<TensorABElement>> witness;  // a1, a2, b1, b2
  std::vector<std::string> transcript;

  bool exhausted() const { return !witness; }
};

/// Quadruples in the head-0 slice of A (x) B with a1 = 0 (translation invariance),
/// qh, gq_1, gq_2 in {0, 1} and gh entries even in [-bound, bound].
inline FailureSearchReport interpolation_failure_search(Variant var, int bound = 4, unsigned jobs = 1) {
  FailureSearchReport r;
  r.variant = var;
  r.bound = bound;
  std::vector<SliceElement> grid;
  for (long qh = 0; qh <= 1; ++qh)
    for (long s = 0; s <= 1; ++s)
      for (long t = 0; t <= 1; ++t)
        for (long x = -bound; x <= bound; x += 2)
          for (long y = -bound; y <= bound; y += 2)
            for (long z = -bound; z <= bound; z += 2) {
              SliceElement e;
              e.qh2 = 2 * qh;
              e.gq2[1] = 2 * s;
              e.gq2[2] = 2 * t;
              e.gh[0] = x;
              e.gh[1] = y;
              e.gh[2] = z;
              grid.push_back(e);
            }
  r.grid_size = grid.size();
  const SliceElement zero;
  std::vector<std::size_t> above_zero;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (slice_positive(var, grid[i])) above_zero.push_back(i);

  struct Partial {
    std::size_t quadruples = 0, interpolated = 0;
    std::optional<std::array<SliceElement, 4>> witness;
  };
  std::vector<Partial> parts(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t a = next++; a < grid.size(); a = next++) {
      const SliceElement& a2 = grid[a];
      Partial& p = parts[a];
      std::vector<std::size_t> up;
      for (std::size_t i : above_zero)
        if (slice_positive(var, slice_diff(grid[i], a2))) up.push_back(i);
      for (std::size_t x = 0; x < up.size(); ++x)
        for (std::size_t y = x; y < up.size(); ++y) {
          const SliceElement q[4] = {zero, a2, grid[up[x]], grid[up[y]]};
          ++p.quadruples;
          if (slice_interpolant(var, q).exists) ++p.interpolated;
          else if (!p.witness) p.witness = std::array<SliceElement, 4>{q[0], q[1], q[2], q[3]};
        }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& p : parts) {
    r.quadruples += p.quadruples;
    r.interpolated += p.interpolated;
    if (p.witness && !r.witness) {
      const auto& w = *p.witness;
      r.witness = std::vector<TensorABElement>{w[0].exact(), w[1].exact(), w[2].exact(), w[3].exact()};
      r.transcript.push_back("no interpolant: every case of the head-0 cone rules was tried");
    }
  }
  r.transcript.push_back("grid elements: " + std::to_string(r.grid_size));
  r.transcript.push_back("quadruples a1 = 0, a2 <= b1, b2: " + std::to_string(r.quadruples));
  r.transcript.push_back("interpolated: " + std::to_string(r.interpolated));
  r.transcript.push_back(r.witness ? "witness found" : "exhausted: every quadruple in the grid interpolates");
  return r;
}

}  // namespace effalg::wehrung
