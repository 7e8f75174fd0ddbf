#pragma once
// Exact integer matrices and the Smith normal form.
//
// Every finitely presented Abelian group computation in the library goes
// through smith_normal_form(); the transformation matrices are returned so
// callers can re-verify U * M * V == D independently.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace effalg {

using Int = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

inline Int abs_value(const Int& x) { return x < 0 ? Int(-x) : x; }

/// Nonnegative remainder of x modulo m (m > 0).
inline Int mod_floor(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int floor_div(const Int& x, const Int& m) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return q;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Rational make_rational(const Int& num, const Int& den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero_vec(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec scale(const Int& k, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

inline IntVec negate(const IntVec& a) { return scale(Int(-1), a); }

inline IntVec int_vec(std::initializer_list<long> xs) {
  IntVec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

/// Dense row-major integer matrix. Vectors act on the left: x -> x * M.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("IntMatrix: data size mismatch");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVec> rs;
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    for (const auto& r : rows) rs.push_back(int_vec(r));
    return from_rows(rs, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const {
    return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  std::vector<IntVec> row_list() const {
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Row vector times matrix.
inline IntVec mul(const IntVec& x, const IntMatrix& m) {
  if (x.size() != m.rows()) throw std::invalid_argument("mul: shape mismatch");
  IntVec y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
  }
  return y;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline bool is_unimodular(const IntMatrix& m) {
  return m.rows() == m.cols() && abs_value(determinant(m)) == 1;
}

/// U * M * V == D with U, V unimodular and d_0 | d_1 | ... on the diagonal.
/// Vinv is the inverse of V, maintained alongside it.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix Vinv;
  std::size_t rank = 0;

  IntVec diagonal() const {
    IntVec d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

/// Pivot: nonzero entry of least absolute value in the trailing submatrix,
/// ties broken by lowest row then lowest column.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()),
              IntMatrix::identity(m.cols()), 0};
  IntMatrix& d = s.D;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  auto col_add = [&](std::size_t dst, std::size_t src, const Int& k) {
    d.add_col(dst, src, k);
    s.V.add_col(dst, src, k);
    s.Vinv.add_row(src, dst, Int(-k));
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    s.V.swap_cols(a, b);
    s.Vinv.swap_rows(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Int& k) {
    d.add_row(dst, src, k);
    s.U.add_row(dst, src, k);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    s.U.swap_rows(a, b);
  };

  const std::size_t diag = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < diag; ++t) {
    bool any = false;
    while (true) {
      std::size_t pr = 0, pc = 0;
      bool found = false;
      Int best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          Int a = abs_value(d(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (!found) break;
      any = true;
      row_swap(t, pr);
      col_swap(t, pc);
      const Int p = d(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / p;
        row_add(i, t, Int(-q));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / p;
        col_add(j, t, Int(-q));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % p != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      row_add(t, *bad_row, Int(1));
    }
    if (!any) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  s.rank = t;
  return s;
}

/// Checks U*M*V == D, diagonal shape, divisibility chain and unimodularity.
inline bool verify_smith_form(const IntMatrix& m, const SmithForm& s) {
  if (!(s.U * m * s.V == s.D)) return false;
  if (!is_unimodular(s.U) || !is_unimodular(s.V)) return false;
  if (!(s.V * s.Vinv == IntMatrix::identity(s.V.rows()))) return false;
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j && s.D(i, j) != 0) return false;
  const IntVec diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (i < s.rank && diag[i] == 0) return false;
    if (i >= s.rank && diag[i] != 0) return false;
    if (i + 1 < s.rank && diag[i + 1] % diag[i] != 0) return false;
  }
  return true;
}

/// Basis (as rows) of the integer left kernel {z : z * M = 0}.
inline std::vector<IntVec> left_kernel(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  std::vector<IntVec> out;
  for (std::size_t i = s.rank; i < m.rows(); ++i) out.push_back(s.U.row(i));
  return out;
}

/// Integer solution x of x * M == b, if one exists.
inline std::optional<IntVec> solve_left(const IntMatrix& m, const IntVec& b, const SmithForm& s) {
  if (b.size() != m.cols()) throw std::invalid_argument("solve_left: shape mismatch");
  const IntVec bv = mul(b, s.V);
  IntVec w(m.rows());
  for (std::size_t i = 0; i < m.cols(); ++i) {
    if (i < s.rank) {
      if (bv[i] % s.D(i, i) != 0) return std::nullopt;
      w[i] = bv[i] / s.D(i, i);
    } else if (bv[i] != 0) {
      return std::nullopt;
    }
  }
  return mul(w, s.U);
}

inline std::optional<IntVec> solve_left(const IntMatrix& m, const IntVec& b) {
  return solve_left(m, b, smith_normal_form(m));
}

/// Basis of the lattice spanned by the given rows (length `dim` each).
inline std::vector<IntVec> lattice_basis(const std::vector<IntVec>& generators, std::size_t dim) {
  if (generators.empty()) return {};
  const IntMatrix g = IntMatrix::from_rows(generators, dim);
  const SmithForm s = smith_normal_form(g);
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < s.rank; ++i) out.push_back(scale(s.D(i, i), s.Vinv.row(i)));
  return out;
}

}  // namespace effalg
