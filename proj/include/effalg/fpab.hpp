#pragma once
// Finitely presented Abelian groups Z^g / rowspace(R).
//
// Elements are stored as canonical representatives in generator
// coordinates: x is mapped to invariant coordinates y = x V, torsion
// coordinates are reduced modulo d_i, and the result is mapped back with
// V^{-1}. Two elements are equal iff their canonical representatives are.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "effalg/numeric.hpp"

namespace effalg {

class FpAbGroup;

struct GroupElement {
  IntVec coords;  // canonical representative in generator coordinates

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    return a.coords <=> b.coords;
  }
};

class FpAbGroup {
 public:
  FpAbGroup() : FpAbGroup(0, IntMatrix(0, 0)) {}

  FpAbGroup(std::size_t gens, IntMatrix rels) {
    if (rels.rows() > 0 && rels.cols() != gens)
      throw std::invalid_argument("FpAbGroup: relation width differs from generator count");
    if (rels.rows() == 0) rels = IntMatrix(0, gens);
    auto impl = std::make_shared<Impl>();
    impl->gens = gens;
    impl->rels = std::move(rels);
    impl->snf = smith_normal_form(impl->rels);
    impl->modulus.assign(gens, Int(0));
    for (std::size_t i = 0; i < impl->snf.rank; ++i) impl->modulus[i] = impl->snf.D(i, i);
    impl_ = std::move(impl);
  }

  static FpAbGroup free(std::size_t n) { return FpAbGroup(n, IntMatrix(0, n)); }

  static FpAbGroup cyclic(long order) {
    return FpAbGroup(1, IntMatrix::from_ints({{order}}));
  }

  std::size_t gens() const { return impl_->gens; }
  const IntMatrix& relations() const { return impl_->rels; }
  const SmithForm& smith() const { return impl_->snf; }

  /// Invariant coordinates reduced modulo the invariant factors.
  IntVec invariant_coords(const IntVec& x) const {
    check_width(x);
    IntVec y = mul(x, impl_->snf.V);
    for (std::size_t i = 0; i < y.size(); ++i) {
      const Int& m = impl_->modulus[i];
      if (m != 0) y[i] = mod_floor(y[i], m);
    }
    return y;
  }

  GroupElement element(const IntVec& x) const {
    return GroupElement{mul(invariant_coords(x), impl_->snf.Vinv)};
  }

  GroupElement generator(std::size_t i) const {
    IntVec e(gens());
    e.at(i) = 1;
    return element(e);
  }

  GroupElement zero() const { return GroupElement{IntVec(gens())}; }

  GroupElement plus(const GroupElement& a, const GroupElement& b) const {
    return element(add(a.coords, b.coords));
  }
  GroupElement minus(const GroupElement& a, const GroupElement& b) const {
    return element(sub(a.coords, b.coords));
  }
  GroupElement neg(const GroupElement& a) const { return element(negate(a.coords)); }
  GroupElement times(const Int& k, const GroupElement& a) const {
    return element(scale(k, a.coords));
  }

  bool is_zero(const IntVec& x) const { return is_zero_vec(invariant_coords(x)); }

  /// Invariant factors d_i > 1 (torsion part), in divisibility order.
  IntVec torsion_factors() const {
    IntVec t;
    for (const Int& m : impl_->modulus)
      if (m > 1) t.push_back(m);
    return t;
  }

  std::size_t free_rank() const { return gens() - impl_->snf.rank; }

  /// Full invariant factor list: the nontrivial torsion factors followed by a 0 per free summand.
  IntVec invariant_factors() const {
    IntVec f = torsion_factors();
    for (std::size_t i = 0; i < free_rank(); ++i) f.emplace_back(0);
    return f;
  }

  bool is_trivial() const { return torsion_factors().empty() && free_rank() == 0; }

  /// Positions (in invariant coordinates) that survive the reduction.
  std::vector<std::size_t> essential_coords() const {
    std::vector<std::size_t> k;
    for (std::size_t i = 0; i < gens(); ++i)
      if (impl_->modulus[i] != 1) k.push_back(i);
    return k;
  }

  /// Invariant-coordinate modulus of coordinate i (0 for free coordinates).
  const Int& modulus(std::size_t i) const { return impl_->modulus.at(i); }

  /// Additive order of an element; nullopt when infinite.
  std::optional<Int> order(const GroupElement& a) const {
    const IntVec y = invariant_coords(a.coords);
    Int ord = 1;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == 0) continue;
      const Int& m = impl_->modulus[i];
      if (m == 0) return std::nullopt;
      ord = lcm(ord, m / gcd(y[i], m));
    }
    return ord;
  }

  friend bool operator==(const FpAbGroup& a, const FpAbGroup& b) {
    return a.impl_ == b.impl_ || (a.gens() == b.gens() && a.relations() == b.relations());
  }

 private:
  struct Impl {
    std::size_t gens = 0;
    IntMatrix rels;
    SmithForm snf;
    IntVec modulus;
  };

  void check_width(const IntVec& x) const {
    if (x.size() != gens())
      throw std::invalid_argument("FpAbGroup: element has " + std::to_string(x.size()) +
                                  " coordinates, group has " + std::to_string(gens()) +
                                  " generators");
  }

  std::shared_ptr<const Impl> impl_;
};

/// The same group on its essential invariant coordinates, with the maps both ways.
struct ReducedPresentation {
  FpAbGroup group;
  IntMatrix to_reduced;    // original gens x reduced gens
  IntMatrix from_reduced;  // reduced gens x original gens
};

inline ReducedPresentation reduce_presentation(const FpAbGroup& g) {
  const auto keep = g.essential_coords();
  std::vector<IntVec> rels;
  for (std::size_t k = 0; k < keep.size(); ++k)
    if (g.modulus(keep[k]) != 0) {
      IntVec r(keep.size());
      r[k] = g.modulus(keep[k]);
      rels.push_back(r);
    }
  FpAbGroup reduced(keep.size(), IntMatrix::from_rows(rels, keep.size()));
  IntMatrix to(g.gens(), keep.size());
  IntMatrix from(keep.size(), g.gens());
  const SmithForm& s = g.smith();
  for (std::size_t k = 0; k < keep.size(); ++k) {
    for (std::size_t i = 0; i < g.gens(); ++i) {
      to(i, k) = s.V(i, keep[k]);
      from(k, i) = s.Vinv(keep[k], i);
    }
  }
  return {reduced, to, from};
}

/// Homomorphism given by images of generators: x -> x * matrix.
class GroupHom {
 public:
  GroupHom(FpAbGroup domain, FpAbGroup codomain, IntMatrix matrix)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != domain_.gens() || matrix_.cols() != codomain_.gens())
      throw std::invalid_argument("GroupHom: matrix shape does not match groups");
  }

  static GroupHom identity(const FpAbGroup& g) {
    return GroupHom(g, g, IntMatrix::identity(g.gens()));
  }

  static GroupHom zero(const FpAbGroup& a, const FpAbGroup& b) {
    return GroupHom(a, b, IntMatrix(a.gens(), b.gens()));
  }

  const FpAbGroup& domain() const { return domain_; }
  const FpAbGroup& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupElement apply(const GroupElement& x) const {
    return codomain_.element(mul(x.coords, matrix_));
  }
  GroupElement apply(const IntVec& x) const { return codomain_.element(mul(x, matrix_)); }

  /// Every relation of the domain must land in the relation lattice of the codomain.
  bool is_well_defined() const {
    for (std::size_t r = 0; r < domain_.relations().rows(); ++r)
      if (!codomain_.is_zero(mul(domain_.relations().row(r), matrix_))) return false;
    return true;
  }

  std::vector<GroupElement> generator_images() const {
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < domain_.gens(); ++i) out.push_back(codomain_.element(matrix_.row(i)));
    return out;
  }

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
           a.generator_images() == b.generator_images();
  }

 private:
  FpAbGroup domain_;
  FpAbGroup codomain_;
  IntMatrix matrix_;
};

/// g after f.
inline GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!(f.codomain() == g.domain())) throw std::invalid_argument("compose: groups do not match");
  return GroupHom(f.domain(), g.codomain(), f.matrix() * g.matrix());
}

inline GroupHom add_homs(const GroupHom& f, const GroupHom& g) {
  IntMatrix m = f.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += g.matrix()(i, j);
  return GroupHom(f.domain(), f.codomain(), m);
}

inline GroupHom scale_hom(const Int& k, const GroupHom& f) {
  IntMatrix m = f.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= k;
  return GroupHom(f.domain(), f.codomain(), m);
}

/// Tensor product presentation on generators e_ij (index i * right_gens + j).
struct GroupTensor {
  FpAbGroup group;
  std::size_t left_gens = 0;
  std::size_t right_gens = 0;

  IntVec pure(const IntVec& a, const IntVec& b) const {
    IntVec t(left_gens * right_gens);
    for (std::size_t i = 0; i < left_gens; ++i)
      for (std::size_t j = 0; j < right_gens; ++j) t[i * right_gens + j] = a[i] * b[j];
    return t;
  }

  GroupElement pure(const GroupElement& a, const GroupElement& b) const {
    return group.element(pure(a.coords, b.coords));
  }
};

inline GroupTensor tensor_groups(const FpAbGroup& a, const FpAbGroup& b) {
  const std::size_t ga = a.gens(), gb = b.gens();
  std::vector<IntVec> rels;
  for (std::size_t r = 0; r < a.relations().rows(); ++r)
    for (std::size_t j = 0; j < gb; ++j) {
      IntVec row(ga * gb);
      for (std::size_t i = 0; i < ga; ++i) row[i * gb + j] = a.relations()(r, i);
      rels.push_back(row);
    }
  for (std::size_t r = 0; r < b.relations().rows(); ++r)
    for (std::size_t i = 0; i < ga; ++i) {
      IntVec row(ga * gb);
      for (std::size_t j = 0; j < gb; ++j) row[i * gb + j] = b.relations()(r, j);
      rels.push_back(row);
    }
  return GroupTensor{FpAbGroup(ga * gb, IntMatrix::from_rows(rels, ga * gb)), ga, gb};
}

/// f (x) g on tensor presentations built by tensor_groups.
inline GroupHom tensor_homs(const GroupHom& f, const GroupHom& g, const GroupTensor& src,
                            const GroupTensor& dst) {
  const IntMatrix& mf = f.matrix();
  const IntMatrix& mg = g.matrix();
  IntMatrix m(src.group.gens(), dst.group.gens());
  for (std::size_t i = 0; i < mf.rows(); ++i)
    for (std::size_t j = 0; j < mg.rows(); ++j)
      for (std::size_t k = 0; k < mf.cols(); ++k)
        for (std::size_t l = 0; l < mg.cols(); ++l)
          m(i * src.right_gens + j, k * dst.right_gens + l) = mf(i, k) * mg(j, l);
  return GroupHom(src.group, dst.group, m);
}

struct IsomorphismDecision {
  bool is_iso = false;
  std::optional<GroupHom> inverse;
  std::optional<IntVec> kernel_witness;  // domain element outside the relations that maps to 0
  IntVec cokernel_factors;               // invariant factors of codomain / image
};

/// Decides bijectivity of the induced map via the Smith form of [M; R_codomain].
inline IsomorphismDecision is_isomorphism(const GroupHom& f) {
  const FpAbGroup& a = f.domain();
  const FpAbGroup& b = f.codomain();
  const std::size_t ga = a.gens(), gb = b.gens();
  const std::size_t rb = b.relations().rows();
  IntMatrix stacked(ga + rb, gb);
  for (std::size_t i = 0; i < ga; ++i)
    for (std::size_t j = 0; j < gb; ++j) stacked(i, j) = f.matrix()(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < gb; ++j) stacked(ga + i, j) = b.relations()(i, j);
  const SmithForm s = smith_normal_form(stacked);

  IsomorphismDecision out;
  const FpAbGroup coker(gb, stacked);
  out.cokernel_factors = coker.invariant_factors();
  const bool surjective = out.cokernel_factors.empty();

  bool injective = true;
  for (std::size_t i = s.rank; i < ga + rb; ++i) {
    const IntVec z = s.U.row(i);
    IntVec x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(ga));
    if (!a.is_zero(x)) {
      injective = false;
      out.kernel_witness = x;
      break;
    }
  }
  if (!surjective || !injective) return out;

  IntMatrix inv(gb, ga);
  for (std::size_t j = 0; j < gb; ++j) {
    IntVec e(gb);
    e[j] = 1;
    const auto z = solve_left(stacked, e, s);
    if (!z) throw std::logic_error("is_isomorphism: surjective map without preimage");
    for (std::size_t i = 0; i < ga; ++i) inv(j, i) = (*z)[i];
  }
  out.is_iso = true;
  out.inverse = GroupHom(b, a, inv);
  return out;
}

/// Integer relations among a family of elements: all lambda with sum lambda_k x_k == 0.
inline std::vector<IntVec> relation_module(const FpAbGroup& g, const std::vector<GroupElement>& xs) {
  const std::size_t k = xs.size();
  const std::size_t r = g.relations().rows();
  IntMatrix stacked(k + r, g.gens());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < g.gens(); ++j) stacked(i, j) = xs[i].coords[j];
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < g.gens(); ++j) stacked(k + i, j) = g.relations()(i, j);
  std::vector<IntVec> out;
  for (const IntVec& z : left_kernel(stacked)) {
    IntVec lam(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(k));
    if (!is_zero_vec(lam)) out.push_back(lam);
  }
  return out;
}

/// Integer coefficients expressing `target` over the family xs, if it lies in their span.
inline std::optional<IntVec> express_in_span(const FpAbGroup& g, const std::vector<GroupElement>& xs,
                                             const GroupElement& target) {
  const std::size_t k = xs.size();
  const std::size_t r = g.relations().rows();
  IntMatrix stacked(k + r, g.gens());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < g.gens(); ++j) stacked(i, j) = xs[i].coords[j];
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < g.gens(); ++j) stacked(k + i, j) = g.relations()(i, j);
  const auto z = solve_left(stacked, target.coords);
  if (!z) return std::nullopt;
  return IntVec(z->begin(), z->begin() + static_cast<std::ptrdiff_t>(k));
}

/// Hom(A, B) as a finitely presented group; generator t corresponds to hom_matrices[t].
struct HomGroup {
  FpAbGroup group;
  std::vector<IntMatrix> hom_matrices;
};

inline HomGroup hom_group(const FpAbGroup& a, const FpAbGroup& b) {
  const std::size_t ga = a.gens(), gb = b.gens();
  const std::size_t ra = a.relations().rows(), rb = b.relations().rows();
  // Unknowns (M, Y): R_A M - Y R_B == 0, one column per (relation of A, generator of B).
  const std::size_t nm = ga * gb, ny = ra * rb;
  IntMatrix c(nm + ny, ra * gb);
  for (std::size_t k = 0; k < ra; ++k)
    for (std::size_t j = 0; j < gb; ++j) {
      const std::size_t col = k * gb + j;
      for (std::size_t i = 0; i < ga; ++i) c(i * gb + j, col) = a.relations()(k, i);
      for (std::size_t l = 0; l < rb; ++l) c(nm + k * rb + l, col) = -b.relations()(l, j);
    }
  std::vector<IntVec> kernel_m;
  if (ra == 0) {
    for (std::size_t t = 0; t < nm; ++t) {
      IntVec e(nm);
      e[t] = 1;
      kernel_m.push_back(e);
    }
  } else {
    for (const IntVec& z : left_kernel(c)) kernel_m.emplace_back(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(nm));
  }
  const std::vector<IntVec> basis = lattice_basis(kernel_m, nm);
  std::vector<IntVec> trivial;
  for (std::size_t i = 0; i < ga; ++i)
    for (std::size_t l = 0; l < rb; ++l) {
      IntVec v(nm);
      for (std::size_t j = 0; j < gb; ++j) v[i * gb + j] = b.relations()(l, j);
      trivial.push_back(v);
    }
  std::vector<IntVec> rels;
  if (!basis.empty()) {
    const IntMatrix bm = IntMatrix::from_rows(basis, nm);
    const SmithForm s = smith_normal_form(bm);
    for (const IntVec& v : trivial) {
      const auto x = solve_left(bm, v, s);
      if (!x) throw std::logic_error("hom_group: trivial hom outside the hom lattice");
      if (!is_zero_vec(*x)) rels.push_back(*x);
    }
  }
  HomGroup out{FpAbGroup(basis.size(), IntMatrix::from_rows(rels, basis.size())), {}};
  for (const IntVec& v : basis) out.hom_matrices.emplace_back(ga, gb, v);
  return out;
}

/// Block-diagonal presentation of A_1 (+) ... (+) A_k; offsets[i] is the first generator of A_i.
struct DirectSum {
  FpAbGroup group;
  std::vector<std::size_t> offsets;
};

inline DirectSum direct_sum(const std::vector<FpAbGroup>& parts) {
  std::size_t total = 0;
  std::vector<std::size_t> offsets;
  for (const auto& p : parts) {
    offsets.push_back(total);
    total += p.gens();
  }
  std::vector<IntVec> rels;
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (std::size_t r = 0; r < parts[k].relations().rows(); ++r) {
      IntVec row(total);
      for (std::size_t j = 0; j < parts[k].gens(); ++j) row[offsets[k] + j] = parts[k].relations()(r, j);
      rels.push_back(row);
    }
  return {FpAbGroup(total, IntMatrix::from_rows(rels, total)), offsets};
}

/// Generators (domain coordinates) of the kernel of f.
inline std::vector<IntVec> kernel_generators(const GroupHom& f) {
  const std::size_t ga = f.domain().gens(), gb = f.codomain().gens();
  const std::size_t rb = f.codomain().relations().rows();
  IntMatrix stacked(ga + rb, gb);
  for (std::size_t i = 0; i < ga; ++i)
    for (std::size_t j = 0; j < gb; ++j) stacked(i, j) = f.matrix()(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < gb; ++j) stacked(ga + i, j) = f.codomain().relations()(i, j);
  std::vector<IntVec> out;
  for (const IntVec& z : left_kernel(stacked)) {
    IntVec x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(ga));
    if (!f.domain().is_zero(x)) out.push_back(x);
  }
  return out;
}

/// The hom represented by coordinates x over the generators of a HomGroup.
inline IntMatrix hom_matrix(const HomGroup& h, const IntVec& x, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t t = 0; t < x.size(); ++t)
    if (x[t] != 0)
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) += x[t] * h.hom_matrices[t](i, j);
  return m;
}

}  // namespace effalg
