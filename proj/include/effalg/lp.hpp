#pragma once
// Exact rational feasibility for { x >= 0 : A x = b } by phase-one simplex
// with Bland's rule. Infeasible systems come back with a Farkas vector y:
// y A >= 0 and y b < 0.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "effalg/numeric.hpp"

namespace effalg {

struct RatMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> data;

  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Rational& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct LpResult {
  bool feasible = false;
  RatVec x;       // feasible point when feasible
  RatVec farkas;  // y with y A >= 0, y b < 0 otherwise
};

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline LpResult solve_feasibility(const RatMatrix& a, const RatVec& b) {
  const std::size_t m = a.rows, n = a.cols;
  if (b.size() != m) throw std::invalid_argument("solve_feasibility: shape mismatch");
  // Tableau columns: n originals, m artificials, then the right-hand side.
  const std::size_t w = n + m + 1;
  std::vector<Rational> t(m * w);
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return t[r * w + c]; };
  std::vector<int> sign(m, 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (b[r] < 0) sign[r] = -1;
    for (std::size_t c = 0; c < n; ++c) at(r, c) = sign[r] * a(r, c);
    at(r, n + r) = 1;
    at(r, w - 1) = sign[r] * b[r];
    basis[r] = n + r;
  }
  // Reduced cost of column c for the phase-one objective (sum of artificials).
  auto reduced = [&](std::size_t c) {
    Rational cost = c >= n && c < n + m ? Rational(1) : Rational(0);
    for (std::size_t r = 0; r < m; ++r)
      if (basis[r] >= n) cost -= at(r, c);
    return cost;
  };
  while (true) {
    std::size_t enter = w;
    for (std::size_t c = 0; c + 1 < w; ++c)
      if (reduced(c) < 0) {
        enter = c;
        break;
      }
    if (enter == w) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (at(r, enter) <= 0) continue;
      const Rational ratio = at(r, w - 1) / at(r, enter);
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("solve_feasibility: unbounded phase-one problem");
    const Rational piv = at(leave, enter);
    for (std::size_t c = 0; c < w; ++c) at(leave, c) /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || at(r, enter) == 0) continue;
      const Rational f = at(r, enter);
      for (std::size_t c = 0; c < w; ++c) at(r, c) -= f * at(leave, c);
    }
    basis[leave] = enter;
  }
  Rational objective = 0;
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] >= n) objective += at(r, w - 1);
  LpResult out;
  if (objective == 0) {
    out.feasible = true;
    out.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r)
      if (basis[r] < n) out.x[basis[r]] = at(r, w - 1);
    return out;
  }
  // Phase-one duals pi_r = 1 - reduced(artificial r); y = -pi, mapped back through the row signs.
  out.farkas.assign(m, Rational(0));
  for (std::size_t r = 0; r < m; ++r) out.farkas[r] = -(Rational(1) - reduced(n + r)) * sign[r];
  return out;
}

/// Checks y A >= 0 and y b < 0 exactly.
inline bool verify_farkas(const RatMatrix& a, const RatVec& b, const RatVec& y) {
  if (y.size() != a.rows) return false;
  for (std::size_t c = 0; c < a.cols; ++c) {
    Rational s = 0;
    for (std::size_t r = 0; r < a.rows; ++r) s += y[r] * a(r, c);
    if (s < 0) return false;
  }
  return dot(y, b) < 0;
}

/// Some y with y . g_i >= lower_i for each row g_i of `gens` (y unrestricted in sign).
inline std::optional<RatVec> find_functional(const std::vector<RatVec>& gens, const RatVec& lower,
                                             std::size_t dim) {
  // y = p - q, slack s_i: (p - q) . g_i - s_i = lower_i.
  const std::size_t k = gens.size();
  RatMatrix a(k, 2 * dim + k);
  RatVec b(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      a(i, j) = gens[i][j];
      a(i, dim + j) = -gens[i][j];
    }
    a(i, 2 * dim + i) = -1;
    b[i] = lower[i];
  }
  const LpResult r = solve_feasibility(a, b);
  if (!r.feasible) return std::nullopt;
  RatVec y(dim);
  for (std::size_t j = 0; j < dim; ++j) y[j] = r.x[j] - r.x[dim + j];
  return y;
}

}  // namespace effalg
