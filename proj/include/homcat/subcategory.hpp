#pragma once

// Subcategories as finite generator lists with add-closure semantics, the
// ideal of morphisms factoring through them, factor (stable) hom spaces, and
// precovers/preenvelopes. Quantified conditions ("for every object") are
// always evaluated against an explicit test-object registry; callers carry
// that caveat into their reports.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "homcat/module_ops.hpp"

namespace homcat {

class Subcategory {
 public:
  static Subcategory all(std::string name = "all") {
    Subcategory s;
    s.name_ = std::move(name);
    s.all_ = true;
    return s;
  }

  static Subcategory add(std::string name, std::vector<Module> generators) {
    Subcategory s;
    s.name_ = std::move(name);
    for (Module& g : generators) {
      bool dup = false;
      for (const Module& h : s.gens_) dup = dup || h == g;
      if (!dup) s.gens_.push_back(std::move(g));
    }
    if (s.gens_.empty()) throw std::invalid_argument("subcategory: no generators");
    return s;
  }

  bool is_all() const { return all_; }
  const std::string& name() const { return name_; }
  const std::vector<Module>& generators() const { return gens_; }

  std::string key() const {
    if (all_) return "<all>";
    std::string k;
    for (const Module& g : gens_) k += g.key() + "&";
    return k;
  }

 private:
  std::string name_;
  std::vector<Module> gens_;
  bool all_ = false;
};

struct IdealSubspace {
  Module src, tgt;
  std::vector<ModuleMorphism> basis;  // canonical echelon basis
  std::size_t dimension = 0;
};

// {v.u : u: A -> X, v: X -> B, X in add(generators)}. A generator list
// suffices because the ideal is additive in the middle object.
inline IdealSubspace ideal_subspace(Cat& cat, const Subcategory& x, const Module& a,
                                    const Module& b) {
  IdealSubspace out{a, b, {}, 0};
  if (x.is_all()) {
    out.basis = cat.hom(a, b).basis;
    out.dimension = out.basis.size();
    return out;
  }
  std::vector<Matrix> flats;
  for (const Module& g : x.generators()) {
    const HomSpace& in = cat.hom(a, g);
    const HomSpace& outh = cat.hom(g, b);
    for (const ModuleMorphism& u : in.basis)
      for (const ModuleMorphism& v : outh.basis) flats.push_back(compose(v, u).flatten());
  }
  for (const Matrix& c : span_basis(flats, ModuleMorphism::coord_dim(a, b), a.field()))
    out.basis.push_back(ModuleMorphism::from_coords(a, b, c));
  out.dimension = out.basis.size();
  return out;
}

// A hom space of the factor category A/X: coset representatives plus the data
// needed to reduce any morphism to canonical coset coordinates.
struct FactorHom {
  Module src, tgt;
  std::size_t hom_dim = 0;
  std::size_t ideal_dim = 0;
  std::size_t dimension = 0;               // hom_dim - ideal_dim
  std::vector<ModuleMorphism> ideal_basis;
  std::vector<ModuleMorphism> coset_reps;  // independent modulo the ideal
  Matrix express;                          // [ideal basis | coset reps] columns
};

// Morphisms of A considered modulo a subcategory X, with memoized ideals and
// factor hom spaces. Holds a reference to the ambient category handle; the
// owner keeps it alive.
class StableCat {
 public:
  StableCat(Cat& cat, Subcategory x) : cat_(&cat), x_(std::move(x)) {}

  Cat& category() const { return *cat_; }
  const Subcategory& modulo() const { return x_; }

  const IdealSubspace& ideal(const Module& a, const Module& b) const {
    std::pair<std::string, std::string> key{a.key(), b.key()};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = ideals_.find(key);
      if (it != ideals_.end()) return *it->second;
    }
    auto computed = std::make_shared<IdealSubspace>(ideal_subspace(*cat_, x_, a, b));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = ideals_.emplace(key, std::move(computed));
    return *it->second;
  }

  const FactorHom& factor_hom(const Module& a, const Module& b) const {
    std::pair<std::string, std::string> key{a.key(), b.key()};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = factors_.find(key);
      if (it != factors_.end()) return *it->second;
    }
    auto computed = std::make_shared<FactorHom>(build_factor_hom(a, b));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = factors_.emplace(key, std::move(computed));
    return *it->second;
  }

  // Canonical coset coordinates of a morphism relative to factor_hom's reps.
  Matrix coset_coords(const ModuleMorphism& f) const {
    const FactorHom& fh = factor_hom(f.source(), f.target());
    if (fh.dimension == 0) return Matrix(0, 1, f.field());
    auto sol = solve_linear(fh.express, f.flatten());
    if (!sol.particular) throw std::runtime_error("internal: morphism outside its hom space");
    Matrix c(fh.dimension, 1, f.field());
    for (std::size_t i = 0; i < fh.dimension; ++i)
      c.set(i, 0, sol.particular->at(fh.ideal_dim + i, 0));
    return c;
  }

  ModuleMorphism coset_reduce(const ModuleMorphism& f) const {
    const FactorHom& fh = factor_hom(f.source(), f.target());
    ModuleMorphism r = ModuleMorphism::zero(f.source(), f.target());
    Matrix c = coset_coords(f);
    for (std::size_t i = 0; i < fh.dimension; ++i)
      r = r + fh.coset_reps[i].scaled(c.at(i, 0));
    return r;
  }

  bool coset_zero(const ModuleMorphism& f) const { return coset_coords(f).is_zero(); }

  bool coset_equal(const ModuleMorphism& f, const ModuleMorphism& g) const {
    return coset_coords(f) == coset_coords(g);
  }

 private:
  Cat* cat_;
  Subcategory x_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::string, std::string>, std::shared_ptr<const IdealSubspace>> ideals_;
  mutable std::map<std::pair<std::string, std::string>, std::shared_ptr<const FactorHom>> factors_;

  FactorHom build_factor_hom(const Module& a, const Module& b) const {
    const HomSpace& hom = cat_->hom(a, b);
    const IdealSubspace& idl = ideal(a, b);
    FactorHom fh;
    fh.src = a;
    fh.tgt = b;
    fh.hom_dim = hom.dimension;
    fh.ideal_dim = idl.dimension;
    fh.ideal_basis = idl.basis;
    std::vector<Matrix> span;
    for (const ModuleMorphism& m : idl.basis) span.push_back(m.flatten());
    for (const ModuleMorphism& h : hom.basis) {
      Matrix v = h.flatten();
      if (!in_span(v, span)) {
        span.push_back(v);
        fh.coset_reps.push_back(h);
      }
    }
    fh.dimension = fh.coset_reps.size();
    std::size_t coord = ModuleMorphism::coord_dim(a, b);
    fh.express = Matrix(coord, fh.ideal_dim + fh.dimension, a.field());
    std::size_t j = 0;
    for (const ModuleMorphism& m : idl.basis) fh.express.paste(m.flatten(), 0, j++);
    for (const ModuleMorphism& m : fh.coset_reps) fh.express.paste(m.flatten(), 0, j++);
    return fh;
  }
};

// Morphism considered in the factor category; the modulo context lives in the
// StableCat that produced it.
struct FactorMorphism {
  ModuleMorphism rep;

  const Module& source() const { return rep.source(); }
  const Module& target() const { return rep.target(); }
};

struct FactorIsoWitness {
  bool iso = false;
  std::optional<ModuleMorphism> inverse;
};

// f is invertible in A/X iff some g satisfies g.f - 1 in X(A,A) and
// f.g - 1 in X(B,B); both constraints are solved simultaneously.
inline FactorIsoWitness is_factor_iso(const StableCat& s, const ModuleMorphism& f) {
  const Module& a = f.source();
  const Module& b = f.target();
  const FieldSpec& fld = f.field();
  std::size_t unknowns = ModuleMorphism::coord_dim(b, a);
  std::vector<MembershipConstraint> cs;
  // g must be an intertwiner.
  Matrix inter = intertwiner_system(b, a);
  cs.push_back({inter, Matrix(inter.rows(), 1, fld), {}});
  // g.f - id_A in X(A,A)
  std::vector<Matrix> ideal_a;
  for (const ModuleMorphism& m : s.ideal(a, a).basis) ideal_a.push_back(m.flatten());
  cs.push_back({precompose_matrix(f, a), ModuleMorphism::identity(a).flatten(), ideal_a});
  // f.g - id_B in X(B,B)
  std::vector<Matrix> ideal_b;
  for (const ModuleMorphism& m : s.ideal(b, b).basis) ideal_b.push_back(m.flatten());
  cs.push_back({postcompose_matrix(f, b), ModuleMorphism::identity(b).flatten(), ideal_b});
  AffineSolution sol = solve_affine_membership(unknowns, fld, cs);
  if (!sol.solvable()) return {};
  return FactorIsoWitness{true, ModuleMorphism::from_coords(b, a, *sol.particular)};
}

// Assembled right approximation sum_i G_i^{dim Hom(G_i, A)} -> A; every map
// from add(G) factors through it by construction.
inline ModuleMorphism precover(Cat& cat, const Subcategory& g, const Module& a) {
  if (g.is_all()) throw std::invalid_argument("precover: needs a generator-presented subcategory");
  const Algebra& alg = cat.algebra();
  std::vector<Module> parts;
  std::vector<const ModuleMorphism*> comps;
  for (const Module& gen : g.generators())
    for (const ModuleMorphism& u : cat.hom(gen, a).basis) {
      parts.push_back(gen);
      comps.push_back(&u);
    }
  SumResult sum = direct_sum(parts, alg);
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    Matrix m(a.dim(v), sum.sum.dim(v), alg.field());
    std::size_t c0 = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      m.paste(comps[p]->map(v), 0, c0);
      c0 += parts[p].dim(v);
    }
    maps.push_back(std::move(m));
  }
  return ModuleMorphism(sum.sum, a, maps);
}

inline ModuleMorphism preenvelope(Cat& cat, const Subcategory& g, const Module& a) {
  if (g.is_all()) throw std::invalid_argument("preenvelope: needs a generator-presented subcategory");
  const Algebra& alg = cat.algebra();
  std::vector<Module> parts;
  std::vector<const ModuleMorphism*> comps;
  for (const Module& gen : g.generators())
    for (const ModuleMorphism& u : cat.hom(a, gen).basis) {
      parts.push_back(gen);
      comps.push_back(&u);
    }
  SumResult sum = direct_sum(parts, alg);
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    Matrix m(sum.sum.dim(v), a.dim(v), alg.field());
    std::size_t r0 = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      m.paste(comps[p]->map(v), r0, 0);
      r0 += parts[p].dim(v);
    }
    maps.push_back(std::move(m));
  }
  return ModuleMorphism(a, sum.sum, maps);
}

// M lies in add(G) iff the canonical precover splits.
inline bool is_in_add(Cat& cat, const Subcategory& g, const Module& m) {
  if (g.is_all()) return true;
  return is_split_epi(precover(cat, g, m)).split;
}

enum class RelSide { monic, epic };

// X-monic: Hom(f, X) surjective for every X in X (checked on generators; the
// ambient case reduces to the split test).
inline bool is_relative_monic(Cat& cat, const ModuleMorphism& f, const Subcategory& x,
                              RelSide side) {
  if (x.is_all())
    return side == RelSide::monic ? is_split_mono(f).split : is_split_epi(f).split;
  for (const Module& g : x.generators()) {
    if (side == RelSide::monic) {
      // Hom(B, G) -> Hom(A, G) must be onto.
      const HomSpace& from_b = cat.hom(f.target(), g);
      std::vector<Matrix> images;
      for (const ModuleMorphism& u : from_b.basis) images.push_back(compose(u, f).flatten());
      std::size_t rank = span_basis(images, ModuleMorphism::coord_dim(f.source(), g), f.field()).size();
      if (rank != cat.hom(f.source(), g).dimension) return false;
    } else {
      // Hom(G, A) -> Hom(G, B) must be onto.
      const HomSpace& to_a = cat.hom(g, f.source());
      std::vector<Matrix> images;
      for (const ModuleMorphism& u : to_a.basis) images.push_back(compose(f, u).flatten());
      std::size_t rank = span_basis(images, ModuleMorphism::coord_dim(g, f.target()), f.field()).size();
      if (rank != cat.hom(g, f.target()).dimension) return false;
    }
  }
  return true;
}

// g is a weak cokernel of f over the given test objects: Hom(C,T) -> Hom(B,T)
// -> Hom(A,T) exact in the middle for each T.
inline bool weak_cokernel_check(Cat& cat, const ModuleMorphism& f, const ModuleMorphism& g,
                                const std::vector<Module>& tests) {
  if (!compose(g, f).is_zero())
    throw std::invalid_argument("composite-nonzero: weak cokernel check needs g.f = 0");
  for (const Module& t : tests) {
    std::vector<Matrix> images;
    for (const ModuleMorphism& u : cat.hom(g.target(), t).basis)
      images.push_back(compose(u, g).flatten());
    std::size_t im_rank =
        span_basis(images, ModuleMorphism::coord_dim(g.source(), t), f.field()).size();
    const HomSpace& mid = cat.hom(g.source(), t);
    std::vector<Matrix> kernel_cols;
    for (const ModuleMorphism& u : mid.basis) kernel_cols.push_back(compose(u, f).flatten());
    Matrix km(ModuleMorphism::coord_dim(f.source(), t), mid.dimension, f.field());
    for (std::size_t j = 0; j < kernel_cols.size(); ++j) km.paste(kernel_cols[j], 0, j);
    std::size_t ker_dim = mid.dimension - km.rank();
    if (im_rank != ker_dim) return false;
  }
  return true;
}

// Dual: f is a weak kernel of g over the test objects.
inline bool weak_kernel_check(Cat& cat, const ModuleMorphism& f, const ModuleMorphism& g,
                              const std::vector<Module>& tests) {
  if (!compose(g, f).is_zero())
    throw std::invalid_argument("composite-nonzero: weak kernel check needs g.f = 0");
  for (const Module& t : tests) {
    std::vector<Matrix> images;
    for (const ModuleMorphism& u : cat.hom(t, f.source()).basis)
      images.push_back(compose(f, u).flatten());
    std::size_t im_rank =
        span_basis(images, ModuleMorphism::coord_dim(t, f.target()), f.field()).size();
    const HomSpace& mid = cat.hom(t, f.target());
    std::vector<Matrix> kernel_cols;
    for (const ModuleMorphism& u : mid.basis) kernel_cols.push_back(compose(g, u).flatten());
    Matrix km(ModuleMorphism::coord_dim(t, g.target()), mid.dimension, f.field());
    for (std::size_t j = 0; j < kernel_cols.size(); ++j) km.paste(kernel_cols[j], 0, j);
    std::size_t ker_dim = mid.dimension - km.rank();
    if (im_rank != ker_dim) return false;
  }
  return true;
}

}  // namespace homcat
