#pragma once
// Tensor product candidates for finite effect algebras: construction by
// saturation, bounded certification of the universal property, the induced
// action on homs, iota and the symmetry.

#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "effalg/enumerate.hpp"
#include "effalg/morphism.hpp"
#include "effalg/saturation.hpp"

namespace effalg {

struct TensorCandidate {
  EffectAlgebra left;
  EffectAlgebra right;
  EffectAlgebra algebra;
  Bimorphism beta;
};

struct TensorSaturation {
  std::optional<TensorCandidate> candidate;
  SaturationResult saturation;
};

/// Free partial structure on formal tensors a (x) b subject to the bimorphism laws.
inline TensorSaturation saturate_tensor(const EffectAlgebra& e, const EffectAlgebra& f,
                                        std::size_t budget = kDefaultSaturationBudget) {
  const int ne = e.size(), nf = f.size();
  Saturation s;
  s.add_elements(ne * nf);
  auto id = [nf](Elem a, Elem b) { return a * nf + b; };
  s.set_zero(id(0, 0));
  s.set_one(id(e.one(), f.one()));
  for (Elem a = 0; a < ne; ++a) s.identify(id(a, 0), id(0, 0));
  for (Elem b = 0; b < nf; ++b) s.identify(id(0, b), id(0, 0));
  for (Elem a = 0; a < ne; ++a)
    for (Elem b1 = 1; b1 < nf; ++b1)
      for (Elem b2 = b1; b2 < nf; ++b2)
        if (auto c = f.sum(b1, b2)) s.add_sum(id(a, b1), id(a, b2), id(a, *c));
  for (Elem b = 0; b < nf; ++b)
    for (Elem a1 = 1; a1 < ne; ++a1)
      for (Elem a2 = a1; a2 < ne; ++a2)
        if (auto c = e.sum(a1, a2)) s.add_sum(id(a1, b), id(a2, b), id(*c, b));
  TensorSaturation out;
  out.saturation = s.run(budget);
  if (out.saturation.status != SaturationStatus::ok) return out;
  const EffectAlgebra& g = *out.saturation.algebra;
  std::vector<Elem> table(static_cast<std::size_t>(ne) * nf);
  for (Elem a = 0; a < ne; ++a)
    for (Elem b = 0; b < nf; ++b) table[static_cast<std::size_t>(id(a, b))] = out.saturation.map[id(a, b)];
  Bimorphism beta{e, f, g, std::move(table)};
  if (!validate_morphism(beta).valid()) {
    out.saturation.status = SaturationStatus::invalid;
    out.saturation.transcript.push_back("induced map is not a bimorphism");
    return out;
  }
  out.candidate = TensorCandidate{e, f, g, std::move(beta)};
  return out;
}

/// Elements not reachable from simple tensors by orthosums; empty iff generated.
inline std::vector<Elem> ungenerated_elements(const TensorCandidate& c) {
  const EffectAlgebra& g = c.algebra;
  std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
  for (Elem v : c.beta.table) in[v] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem x = 0; x < g.size(); ++x)
      for (Elem y = 0; y < g.size(); ++y)
        if (in[x] && in[y])
          if (auto s = g.sum(x, y); s && !in[*s]) {
            in[*s] = 1;
            grew = true;
          }
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < g.size(); ++x)
    if (!in[x]) out.push_back(x);
  return out;
}

/// ea-homs h: G -> target with h(beta(a,b)) = gamma(a,b); at most `limit` are returned.
inline std::vector<std::vector<Elem>> factorizations(const TensorCandidate& c, const EffectAlgebra& target,
                                                     const std::vector<Elem>& gamma, std::size_t limit = 2) {
  const EffectAlgebra& g = c.algebra;
  AdditiveSolver s(target, g.size());
  s.fix(0, 0);
  s.fix(g.one(), target.one());
  add_domain_sums(s, g, [](Elem x) { return x; });
  for (std::size_t i = 0; i < gamma.size(); ++i) s.fix(c.beta.table[i], gamma[i]);
  return s.all(limit);
}

enum class CertificationStatus { certified_to_bound, refuted };

struct CertificationReport {
  CertificationStatus status = CertificationStatus::certified_to_bound;
  int bound = 0;                 // largest fully swept target size
  std::size_t targets = 0;
  std::size_t bimorphisms = 0;
  std::vector<Elem> ungenerated;  // generation precheck witness
  std::optional<EffectAlgebra> witness_target;
  std::vector<Elem> witness_bimorphism;
  std::size_t witness_factorizations = 0;
  std::string note;

  bool certified() const { return status == CertificationStatus::certified_to_bound; }
};

inline constexpr int kDefaultCertificationBound = 6;

/// Every bimorphism into every target of size <= bound factors uniquely through the candidate.
inline CertificationReport certify_universal(const TensorCandidate& c, int bound = kDefaultCertificationBound,
                                             unsigned jobs = 1) {
  CertificationReport r;
  r.ungenerated = ungenerated_elements(c);
  if (!r.ungenerated.empty()) {
    r.status = CertificationStatus::refuted;
    r.note = "generation precheck failed: element " + std::to_string(r.ungenerated.front()) +
             " is not an orthosum of simple tensors";
    return r;
  }
  std::vector<EffectAlgebra> targets;
  for (int n = 1; n <= bound; ++n) {
    EnumerationResult en = enumerate_effect_algebras(n);
    if (!en.complete) {
      r.note = "enumeration budget exhausted at size " + std::to_string(n);
      break;
    }
    targets.insert(targets.end(), en.algebras.begin(), en.algebras.end());
    r.bound = n;
  }
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (!failed) {
      const std::size_t i = next++;
      if (i >= targets.size()) return;
      AdditiveSolver solver = bimorphism_solver(c.left, c.right, targets[i]);
      std::size_t count = 0;
      solver.solve([&](const std::vector<Elem>& gamma) {
        ++count;
        const auto fs = factorizations(c, targets[i], gamma);
        if (fs.size() != 1) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failed) {
            failed = true;
            r.status = CertificationStatus::refuted;
            r.witness_target = targets[i];
            r.witness_bimorphism = gamma;
            r.witness_factorizations = fs.size();
            r.note = fs.empty() ? "bimorphism does not factor" : "bimorphism factors non-uniquely";
          }
          return false;
        }
        return !failed;
      });
      std::lock_guard<std::mutex> lock(mu);
      r.bimorphisms += count;
      ++r.targets;
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return r;
}

/// Replays a refutation witness: true when the bimorphism really fails to factor uniquely.
inline bool replay_refutation(const TensorCandidate& c, const CertificationReport& r) {
  if (r.certified()) return false;
  if (!r.ungenerated.empty()) return !ungenerated_elements(c).empty();
  if (!r.witness_target) return false;
  Bimorphism b{c.left, c.right, *r.witness_target, r.witness_bimorphism};
  if (!validate_morphism(b).valid()) return false;
  return factorizations(c, *r.witness_target, r.witness_bimorphism).size() != 1;
}

inline EAMorphism iota(const TensorCandidate& c) {
  std::vector<Elem> m(static_cast<std::size_t>(c.left.size()));
  for (Elem a = 0; a < c.left.size(); ++a) m[a] = c.beta(a, c.right.one());
  return {c.left, c.algebra, std::move(m), MorphismKind::ea};
}

struct HomFactorization {
  std::optional<EAMorphism> map;
  std::size_t solutions = 0;  // 1 when the factorization exists and is unique
};

/// g (x) h: the unique hom with (g (x) h)(beta1(a,b)) = beta2(g(a), h(b)).
inline HomFactorization tensor_of_homs(const EAMorphism& g, const EAMorphism& h, const TensorCandidate& src,
                                       const TensorCandidate& dst) {
  std::vector<Elem> gamma(static_cast<std::size_t>(src.left.size()) * src.right.size());
  for (Elem a = 0; a < src.left.size(); ++a)
    for (Elem b = 0; b < src.right.size(); ++b)
      gamma[static_cast<std::size_t>(a) * src.right.size() + b] = dst.beta(g(a), h(b));
  HomFactorization out;
  const auto fs = factorizations(src, dst.algebra, gamma);
  out.solutions = fs.size();
  if (fs.size() == 1) out.map = EAMorphism{src.algebra, dst.algebra, fs[0], MorphismKind::ea};
  return out;
}

/// a (x) b |-> b (x) a between candidates for E (x) F and F (x) E.
inline HomFactorization symmetry(const TensorCandidate& ef, const TensorCandidate& fe) {
  std::vector<Elem> gamma(static_cast<std::size_t>(ef.left.size()) * ef.right.size());
  for (Elem a = 0; a < ef.left.size(); ++a)
    for (Elem b = 0; b < ef.right.size(); ++b)
      gamma[static_cast<std::size_t>(a) * ef.right.size() + b] = fe.beta(b, a);
  HomFactorization out;
  const auto fs = factorizations(ef, fe.algebra, gamma);
  out.solutions = fs.size();
  if (fs.size() == 1) out.map = EAMorphism{ef.algebra, fe.algebra, fs[0], MorphismKind::ea};
  return out;
}

/// A bijective ea-hom whose inverse is also an ea-hom.
inline bool is_ea_isomorphism(const EAMorphism& m) {
  if (m.domain.size() != m.codomain.size() || !validate_morphism(m).valid()) return false;
  std::vector<Elem> inv(static_cast<std::size_t>(m.codomain.size()), -1);
  for (Elem a = 0; a < m.domain.size(); ++a) {
    if (inv[m.map[a]] >= 0) return false;
    inv[m.map[a]] = a;
  }
  return validate_morphism(EAMorphism{m.codomain, m.domain, inv, MorphismKind::ea}).valid();
}

}  // namespace effalg
