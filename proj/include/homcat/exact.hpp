#pragma once

// The exact-category calculus on the abelian exact structure of a module
// category: conflations, pushouts/pullbacks, Ext^1 via projective
// presentations, and instance verification of the exact-structure axioms.

#include <cstddef>
#include <string>
#include <vector>

#include "homcat/report.hpp"
#include "homcat/subcategory.hpp"

namespace homcat {

struct Conflation {
  ModuleMorphism left;   // i : A -> B
  ModuleMorphism right;  // d : B -> C

  const Module& a() const { return left.source(); }
  const Module& b() const { return left.target(); }
  const Module& c() const { return right.target(); }

  std::string to_string() const {
    return a().display_name() + " >-> " + b().display_name() + " ->> " + c().display_name();
  }
};

// Exactness at all three spots by rank arithmetic, per vertex.
inline bool is_conflation(const ModuleMorphism& i, const ModuleMorphism& d) {
  if (i.target() != d.source()) return false;
  if (!compose(d, i).is_zero()) return false;
  for (std::size_t v = 0; v < i.source().algebra().vertex_count(); ++v) {
    std::size_t ri = i.map(v).rank();
    std::size_t rd = d.map(v).rank();
    if (ri != i.source().dim(v)) return false;           // i mono
    if (rd != d.target().dim(v)) return false;           // d epi
    if (ri + rd != i.target().dim(v)) return false;      // im i = ker d
  }
  return true;
}

inline bool is_conflation(const Conflation& c) { return is_conflation(c.left, c.right); }

inline Conflation split_conflation(Cat& cat, const Module& a, const Module& c) {
  SumResult s = direct_sum({a, c}, cat.algebra());
  return Conflation{s.injections[0], s.projections[1]};
}

// A >-(1)-> A -> 0 and 0 -> A -(1)-> A.
inline Conflation right_zero_conflation(Cat& cat, const Module& a) {
  return Conflation{ModuleMorphism::identity(a), ModuleMorphism::zero(a, Module::zero(cat.algebra()))};
}
inline Conflation left_zero_conflation(Cat& cat, const Module& a) {
  return Conflation{ModuleMorphism::zero(Module::zero(cat.algebra()), a), ModuleMorphism::identity(a)};
}

// Pushout of the conflation along g: A -> A': cokernel of (i, -g)^t.
inline Conflation pushout_conflation(Cat& cat, const Conflation& c, const ModuleMorphism& g) {
  if (g.source() != c.a()) throw std::invalid_argument("pushout: map must start at the left end");
  const Algebra& alg = cat.algebra();
  SumResult ba = direct_sum({c.b(), g.target()}, alg);
  ModuleMorphism u = compose(ba.injections[0], c.left) - compose(ba.injections[1], g);
  QuotientResult q = cokernel(u);
  ModuleMorphism new_left = compose(q.projection, ba.injections[1]);
  // Induced map E -> C, via the linear section of the projection: (d, 0)
  // kills the image of u, so the composite is independent of the section.
  std::vector<Matrix> hmaps;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    Matrix d0(c.c().dim(v), ba.sum.dim(v), alg.field());
    d0.paste(c.right.map(v), 0, 0);
    hmaps.push_back(d0 * q.section[v]);
  }
  ModuleMorphism new_right(q.quot, c.c(), hmaps);
  Conflation out{new_left, new_right};
  if (!is_conflation(out)) throw std::runtime_error("internal: pushout is not a conflation");
  return out;
}

// Pullback of the conflation along f: C' -> C: kernel of (d, -f).
inline Conflation pullback_conflation(Cat& cat, const Conflation& c, const ModuleMorphism& f) {
  if (f.target() != c.c()) throw std::invalid_argument("pullback: map must end at the right end");
  const Algebra& alg = cat.algebra();
  SumResult bc = direct_sum({c.b(), f.source()}, alg);
  ModuleMorphism w = compose(c.right, bc.projections[0]) - compose(f, bc.projections[1]);
  SubmoduleResult k = kernel(w);
  // A -> P: (i, 0) corestricted to the kernel.
  ModuleMorphism into_sum = compose(bc.injections[0], c.left);
  std::vector<Matrix> amaps;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v)
    amaps.push_back(detail::coords_in_basis(k.inclusion.map(v), into_sum.map(v)));
  ModuleMorphism new_left(c.a(), k.sub, amaps);
  ModuleMorphism new_right = compose(bc.projections[1], k.inclusion);
  Conflation out{new_left, new_right};
  if (!is_conflation(out)) throw std::runtime_error("internal: pullback is not a conflation");
  return out;
}

// Equivalence of conflations with the same end objects: a middle morphism
// commuting with both legs (necessarily an isomorphism, by the short five
// lemma in the abelian backend).
inline bool conflations_equivalent(Cat& cat, const Conflation& c1, const Conflation& c2) {
  if (c1.a() != c2.a() || c1.c() != c2.c()) return false;
  const FieldSpec& f = cat.field();
  std::size_t unknowns = ModuleMorphism::coord_dim(c1.b(), c2.b());
  Matrix inter = intertwiner_system(c1.b(), c2.b());
  std::vector<MembershipConstraint> cs;
  cs.push_back({inter, Matrix(inter.rows(), 1, f), {}});
  cs.push_back({precompose_matrix(c1.left, c2.b()), c2.left.flatten(), {}});
  cs.push_back({postcompose_matrix(c2.right, c1.b()), c1.right.flatten(), {}});
  AffineSolution sol = solve_affine_membership(unknowns, f, cs);
  if (!sol.solvable()) return false;
  ModuleMorphism mid = ModuleMorphism::from_coords(c1.b(), c2.b(), *sol.particular);
  return mid.is_iso();
}

struct Ext1Space {
  Module arg_c, arg_a;
  std::size_t dimension = 0;
  std::vector<Conflation> representatives;
};

// Ext^1(C, A) from a given projective presentation cover: P ->> C:
// coker(Hom(P, A) -> Hom(Omega C, A)); representatives are pushouts of the
// syzygy conflation along coset representatives.
inline Ext1Space ext1_from_presentation(Cat& cat, const ModuleMorphism& cover, const Module& a) {
  Ext1Space out;
  out.arg_c = cover.target();
  out.arg_a = a;
  SubmoduleResult syz = kernel(cover);
  Conflation pres{syz.inclusion, cover};
  const HomSpace& from_omega = cat.hom(syz.sub, a);
  std::vector<Matrix> restricted;
  for (const ModuleMorphism& u : cat.hom(cover.source(), a).basis)
    restricted.push_back(compose(u, syz.inclusion).flatten());
  std::vector<Matrix> span =
      span_basis(restricted, ModuleMorphism::coord_dim(syz.sub, a), cat.field());
  for (const ModuleMorphism& phi : from_omega.basis) {
    Matrix v = phi.flatten();
    if (in_span(v, span)) continue;
    span.push_back(v);
    out.representatives.push_back(pushout_conflation(cat, pres, phi));
  }
  out.dimension = out.representatives.size();
  return out;
}

inline Ext1Space ext1(Cat& cat, const Module& c, const Module& a) {
  return ext1_from_presentation(cat, projective_cover(c), a);
}

// Instance verification of (Ex0), (Ex1), (Ex1)op, (Ex2), (Ex2)op and weak
// idempotent completeness, over a registry of conflations and test objects.
inline Report exactness_axiom_suite(Cat& cat, const std::vector<Conflation>& conflations,
                                    const std::vector<Module>& objects) {
  Report rep;
  rep.command = "exactness-axioms";
  const Algebra& alg = cat.algebra();
  Module zero = Module::zero(alg);

  // (Ex0): the identity of the zero object is an inflation.
  rep.add("(Ex0) identity of zero is an inflation",
          is_conflation(ModuleMorphism::identity(zero), ModuleMorphism::identity(zero)));

  for (std::size_t i = 0; i < conflations.size(); ++i) {
    CheckRecord& r = rep.add("registry conflation #" + std::to_string(i) + " is a conflation",
                             is_conflation(conflations[i]));
    if (r.status == CheckStatus::fail) r.witnesses.push_back(conflations[i].to_string());
  }

  // Sample pool: registry conflations plus canonical split ones.
  std::vector<Conflation> pool = conflations;
  for (const Module& m : objects) {
    pool.push_back(right_zero_conflation(cat, m));
    pool.push_back(left_zero_conflation(cat, m));
  }
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j)
      if (i != j) pool.push_back(split_conflation(cat, objects[i], objects[j]));

  // (Ex1): composable deflations compose to deflations.
  std::size_t done = 0;
  bool ok = true;
  std::string witness;
  for (const Conflation& c1 : pool)
    for (const Conflation& c2 : pool) {
      if (c1.c() != c2.b()) continue;
      ModuleMorphism comp = compose(c2.right, c1.right);
      SubmoduleResult k = kernel(comp);
      ++done;
      if (!is_conflation(k.inclusion, comp)) {
        ok = false;
        witness = c1.to_string() + " then " + c2.to_string();
      }
    }
  if (done == 0) {
    rep.vacuous("(Ex1) deflations closed under composition", "no composable pairs in registry");
  } else {
    CheckRecord& r = rep.add("(Ex1) deflations closed under composition", ok);
    r.caveats.push_back("checked over " + std::to_string(done) + " composable pairs");
    if (!ok) r.witnesses.push_back(witness);
  }

  // (Ex1)op: composable inflations.
  done = 0;
  ok = true;
  for (const Conflation& c1 : pool)
    for (const Conflation& c2 : pool) {
      if (c1.b() != c2.a()) continue;
      ModuleMorphism comp = compose(c2.left, c1.left);
      QuotientResult q = cokernel(comp);
      ++done;
      if (!is_conflation(comp, q.projection)) {
        ok = false;
        witness = c1.to_string() + " then " + c2.to_string();
      }
    }
  if (done == 0) {
    rep.vacuous("(Ex1)op inflations closed under composition", "no composable pairs in registry");
  } else {
    CheckRecord& r = rep.add("(Ex1)op inflations closed under composition", ok);
    r.caveats.push_back("checked over " + std::to_string(done) + " composable pairs");
    if (!ok) r.witnesses.push_back(witness);
  }

  // (Ex2): pullbacks of deflations along registry morphisms are deflations.
  done = 0;
  ok = true;
  for (const Conflation& c : pool)
    for (const Module& t : objects)
      for (const ModuleMorphism& f : cat.hom(t, c.c()).basis) {
        ++done;
        try {
          pullback_conflation(cat, c, f);
        } catch (const std::exception&) {
          ok = false;
          witness = c.to_string() + " along " + t.display_name() + " -> " + c.c().display_name();
        }
      }
  if (done == 0)
    rep.vacuous("(Ex2) pullbacks exist with deflation legs", "no test morphisms");
  else {
    CheckRecord& r = rep.add("(Ex2) pullbacks exist with deflation legs", ok);
    r.caveats.push_back("checked over " + std::to_string(done) + " pullbacks");
    if (!ok) r.witnesses.push_back(witness);
  }

  // (Ex2)op: pushouts of inflations.
  done = 0;
  ok = true;
  for (const Conflation& c : pool)
    for (const Module& t : objects)
      for (const ModuleMorphism& g : cat.hom(c.a(), t).basis) {
        ++done;
        try {
          pushout_conflation(cat, c, g);
        } catch (const std::exception&) {
          ok = false;
          witness = c.to_string() + " along " + c.a().display_name() + " -> " + t.display_name();
        }
      }
  if (done == 0)
    rep.vacuous("(Ex2)op pushouts exist with inflation legs", "no test morphisms");
  else {
    CheckRecord& r = rep.add("(Ex2)op pushouts exist with inflation legs", ok);
    r.caveats.push_back("checked over " + std::to_string(done) + " pushouts");
    if (!ok) r.witnesses.push_back(witness);
  }

  // Weak idempotent completeness: every split monomorphism is an inflation.
  done = 0;
  ok = true;
  for (const Module& m : objects)
    for (const Module& n : objects)
      for (const ModuleMorphism& f : cat.hom(m, n).basis) {
        if (!is_split_mono(f).split) continue;
        ++done;
        QuotientResult q = cokernel(f);
        if (!is_conflation(f, q.projection)) {
          ok = false;
          witness = m.display_name() + " -> " + n.display_name();
        }
      }
  if (done == 0)
    rep.vacuous("split monomorphisms are inflations", "no split monos among test morphisms");
  else {
    CheckRecord& r = rep.add("split monomorphisms are inflations", ok);
    r.caveats.push_back("checked over " + std::to_string(done) + " split monos");
    if (!ok) r.witnesses.push_back(witness);
  }

  return rep;
}

}  // namespace homcat
