#pragma once

// Kernels, cokernels, direct sums, radical/socle/top, projective covers,
// injective envelopes and split tests. Everything is plain linear algebra on
// vertex spaces; the admissible-relations assumption makes the radical the
// arrow-generated submodule and the socle the joint arrow kernel.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcat/morphism.hpp"

namespace homcat {

struct SubmoduleResult {
  Module sub;
  ModuleMorphism inclusion;
};

struct QuotientResult {
  Module quot;
  ModuleMorphism projection;
  std::vector<Matrix> section;  // vertex-wise right inverse of the projection (linear only)
};

struct SumResult {
  Module sum;
  std::vector<ModuleMorphism> injections;
  std::vector<ModuleMorphism> projections;
};

namespace detail {

// Unique solution of B x = rhs for injective B (column-independent).
inline Matrix coords_in_basis(const Matrix& b, const Matrix& rhs) {
  Matrix x(b.cols(), rhs.cols(), b.field());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    auto sol = solve_linear(b, rhs.column(j));
    if (!sol.solvable()) throw std::runtime_error("internal: vector not in subspace");
    x.paste(*sol.particular, 0, j);
  }
  return x;
}

inline Matrix basis_matrix(const std::vector<Matrix>& basis, std::size_t dim, const FieldSpec& f) {
  Matrix b(dim, basis.size(), f);
  for (std::size_t j = 0; j < basis.size(); ++j) b.paste(basis[j], 0, j);
  return b;
}

}  // namespace detail

// Submodule spanned per vertex by the given independent columns; the spans
// must be arrow-stable.
inline SubmoduleResult submodule_from_bases(const Module& m,
                                            const std::vector<std::vector<Matrix>>& bases) {
  const Algebra& alg = m.algebra();
  const FieldSpec& f = m.field();
  std::vector<Matrix> incl;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    incl.push_back(detail::basis_matrix(bases[v], m.dim(v), f));
    dims.push_back(bases[v].size());
  }
  std::vector<Matrix> actions;
  for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
    const Arrow& ar = alg.arrows()[a];
    actions.push_back(detail::coords_in_basis(incl[ar.tgt], m.action(a) * incl[ar.src]));
  }
  Module sub(alg, dims, actions);
  return SubmoduleResult{sub, ModuleMorphism(sub, m, incl)};
}

// Quotient of m by arrow-stable subspaces (given as canonical bases).
inline QuotientResult quotient_by_subspaces(const Module& m,
                                            const std::vector<std::vector<Matrix>>& spans) {
  const Algebra& alg = m.algebra();
  const FieldSpec& f = m.field();
  std::vector<Matrix> proj, section;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    std::size_t n = m.dim(v);
    std::vector<Matrix> extended = spans[v];
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(n, 1, f);
      e.set(j, 0, f.one());
      if (!in_span(e, extended)) {
        extended.push_back(e);
        chosen.push_back(j);
      }
    }
    std::size_t k = spans[v].size(), q = chosen.size();
    // Invert [W | E]; the bottom q rows of the inverse express the quotient
    // coordinates.
    Matrix we(n, n, f);
    for (std::size_t j = 0; j < k; ++j) we.paste(spans[v][j], 0, j);
    for (std::size_t j = 0; j < q; ++j) we.set(chosen[j], k + j, f.one());
    Matrix aug = Matrix::hstack({we, Matrix::identity(n, f)}, f, n);
    Matrix inv = aug.rref().reduced;
    Matrix p(q, n, f);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < n; ++j) p.set(i, j, inv.at(k + i, n + j));
    Matrix s(n, q, f);
    for (std::size_t j = 0; j < q; ++j) s.set(chosen[j], j, f.one());
    proj.push_back(std::move(p));
    section.push_back(std::move(s));
    dims.push_back(q);
  }
  std::vector<Matrix> actions;
  for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
    const Arrow& ar = alg.arrows()[a];
    actions.push_back(proj[ar.tgt] * m.action(a) * section[ar.src]);
  }
  Module quot(alg, dims, actions);
  return QuotientResult{quot, ModuleMorphism(m, quot, proj), section};
}

inline SubmoduleResult kernel(const ModuleMorphism& f) {
  std::vector<std::vector<Matrix>> bases;
  for (std::size_t v = 0; v < f.source().algebra().vertex_count(); ++v)
    bases.push_back(f.map(v).kernel_basis());
  return submodule_from_bases(f.source(), bases);
}

inline QuotientResult cokernel(const ModuleMorphism& f) {
  const FieldSpec& fld = f.field();
  std::vector<std::vector<Matrix>> spans;
  for (std::size_t v = 0; v < f.source().algebra().vertex_count(); ++v) {
    std::vector<Matrix> cols;
    for (std::size_t j = 0; j < f.map(v).cols(); ++j) cols.push_back(f.map(v).column(j));
    spans.push_back(span_basis(cols, f.target().dim(v), fld));
  }
  return quotient_by_subspaces(f.target(), spans);
}

// Epi-mono factorization f = inclusion . onto_image.
struct ImageResult {
  Module image;
  ModuleMorphism inclusion;    // image -> target
  ModuleMorphism onto_image;   // source -> image
};

inline ImageResult image(const ModuleMorphism& f) {
  const FieldSpec& fld = f.field();
  std::vector<std::vector<Matrix>> bases;
  for (std::size_t v = 0; v < f.source().algebra().vertex_count(); ++v) {
    std::vector<Matrix> cols;
    for (std::size_t j = 0; j < f.map(v).cols(); ++j) cols.push_back(f.map(v).column(j));
    bases.push_back(span_basis(cols, f.target().dim(v), fld));
  }
  SubmoduleResult sub = submodule_from_bases(f.target(), bases);
  std::vector<Matrix> onto;
  for (std::size_t v = 0; v < f.source().algebra().vertex_count(); ++v)
    onto.push_back(detail::coords_in_basis(sub.inclusion.map(v), f.map(v)));
  return ImageResult{sub.sub, sub.inclusion, ModuleMorphism(f.source(), sub.sub, onto)};
}

inline SumResult direct_sum(const std::vector<Module>& mods, const Algebra& alg) {
  const FieldSpec& f = alg.field();
  for (const Module& m : mods)
    if (m.algebra() != alg) throw std::invalid_argument("algebra-mismatch: direct_sum");
  std::vector<std::size_t> dims(alg.vertex_count(), 0);
  for (const Module& m : mods)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += m.dim(v);
  std::vector<Matrix> actions;
  for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
    const Arrow& ar = alg.arrows()[a];
    Matrix blk(dims[ar.tgt], dims[ar.src], f);
    std::size_t r0 = 0, c0 = 0;
    for (const Module& m : mods) {
      blk.paste(m.action(a), r0, c0);
      r0 += m.dim(ar.tgt);
      c0 += m.dim(ar.src);
    }
    actions.push_back(std::move(blk));
  }
  std::string name;
  if (!mods.empty() && mods.size() <= 4) {
    bool all_named = true;
    for (const Module& m : mods) all_named = all_named && !m.name().empty();
    if (all_named) {
      for (std::size_t i = 0; i < mods.size(); ++i)
        name += (i ? "+" : "") + mods[i].name();
    }
  }
  Module sum(alg, dims, actions, name);
  SumResult out{sum, {}, {}};
  std::vector<std::size_t> at(alg.vertex_count(), 0);
  for (const Module& m : mods) {
    std::vector<Matrix> inj, prj;
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
      Matrix i(dims[v], m.dim(v), f), p(m.dim(v), dims[v], f);
      for (std::size_t k = 0; k < m.dim(v); ++k) {
        i.set(at[v] + k, k, f.one());
        p.set(k, at[v] + k, f.one());
      }
      inj.push_back(std::move(i));
      prj.push_back(std::move(p));
    }
    out.injections.emplace_back(m, sum, inj);
    out.projections.emplace_back(sum, m, prj);
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) at[v] += m.dim(v);
  }
  return out;
}

// rad M = sum of arrow images (valid under admissible relations).
inline SubmoduleResult radical(const Module& m) {
  const Algebra& alg = m.algebra();
  std::vector<std::vector<Matrix>> bases(alg.vertex_count());
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    std::vector<Matrix> cols;
    for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
      if (alg.arrows()[a].tgt != v) continue;
      for (std::size_t j = 0; j < m.action(a).cols(); ++j) cols.push_back(m.action(a).column(j));
    }
    bases[v] = span_basis(cols, m.dim(v), m.field());
  }
  return submodule_from_bases(m, bases);
}

// soc M = joint kernel of all arrow actions out of each vertex.
inline SubmoduleResult socle(const Module& m) {
  const Algebra& alg = m.algebra();
  const FieldSpec& f = m.field();
  std::vector<std::vector<Matrix>> bases(alg.vertex_count());
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    std::vector<Matrix> stacked;
    for (std::size_t a = 0; a < alg.arrows().size(); ++a)
      if (alg.arrows()[a].src == v) stacked.push_back(m.action(a));
    Matrix sys = stacked.empty() ? Matrix(0, m.dim(v), f)
                                 : Matrix::vstack(stacked, f, m.dim(v));
    bases[v] = sys.kernel_basis();
  }
  return submodule_from_bases(m, bases);
}

inline QuotientResult top(const Module& m) {
  const Algebra& alg = m.algebra();
  std::vector<std::vector<Matrix>> spans(alg.vertex_count());
  SubmoduleResult rad = radical(m);
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    std::vector<Matrix> cols;
    for (std::size_t j = 0; j < rad.inclusion.map(v).cols(); ++j)
      cols.push_back(rad.inclusion.map(v).column(j));
    spans[v] = span_basis(cols, m.dim(v), m.field());
  }
  return quotient_by_subspaces(m, spans);
}

// P(top M) ->> M, assembled from path actions on lifts of a top basis.
inline ModuleMorphism projective_cover(const Module& m) {
  const Algebra& alg = m.algebra();
  const FieldSpec& f = m.field();
  QuotientResult t = top(m);
  std::vector<Module> parts;
  std::vector<Matrix> lifts;  // lift of each top basis vector, in block order
  std::vector<std::size_t> part_vertex;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v)
    for (std::size_t l = 0; l < t.quot.dim(v); ++l) {
      parts.push_back(Module::projective(alg, v));
      lifts.push_back(t.section[v].column(l));
      part_vertex.push_back(v);
    }
  SumResult sum = direct_sum(parts, alg);
  // Component P(v) -> M: basis path p (src v) goes to (path action of p) lift.
  std::vector<Matrix> maps;
  for (std::size_t w = 0; w < alg.vertex_count(); ++w)
    maps.push_back(Matrix(m.dim(w), sum.sum.dim(w), f));
  std::vector<std::size_t> at(alg.vertex_count(), 0);
  for (std::size_t part = 0; part < parts.size(); ++part) {
    std::size_t v = part_vertex[part];
    std::vector<std::size_t> cols_by_vertex(alg.vertex_count(), 0);
    for (std::size_t b = 0; b < alg.basis().size(); ++b) {
      const Path& p = alg.basis()[b];
      if (p.src != v) continue;
      Matrix vec = lifts[part];
      for (std::size_t a : p.arrows) vec = m.action(a) * vec;
      std::size_t w = p.tgt;
      maps[w].paste(vec, 0, at[w] + cols_by_vertex[w]);
      ++cols_by_vertex[w];
    }
    for (std::size_t w = 0; w < alg.vertex_count(); ++w) at[w] += parts[part].dim(w);
  }
  ModuleMorphism cover(sum.sum, m, maps);
  if (!cover.is_epi()) throw std::runtime_error("internal: projective cover not surjective");
  return cover;
}

// M >-> E(soc M), found by solving the intertwining system with the socle
// pinned to the canonical socle of the injective sum.
inline ModuleMorphism injective_envelope(const Module& m) {
  const Algebra& alg = m.algebra();
  const FieldSpec& f = m.field();
  SubmoduleResult soc = socle(m);
  std::vector<Module> parts;
  std::vector<std::size_t> part_vertex;
  std::vector<Matrix> soc_vectors;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v)
    for (std::size_t l = 0; l < soc.sub.dim(v); ++l) {
      parts.push_back(Module::injective(alg, v));
      part_vertex.push_back(v);
      soc_vectors.push_back(soc.inclusion.map(v).column(l));
    }
  SumResult sum = direct_sum(parts, alg);
  const Module& e = sum.sum;
  if (m.is_zero_module()) return ModuleMorphism::zero(m, e);
  // Position of the trivial-path coordinate inside each injective part: the
  // trivial path sorts first within its v -> v block, so it sits at offset 0
  // of the part's vertex-v component.
  std::vector<std::size_t> unit_pos;
  {
    std::vector<std::size_t> at(alg.vertex_count(), 0);
    for (std::size_t part = 0; part < parts.size(); ++part) {
      std::size_t v = part_vertex[part];
      unit_pos.push_back(at[v]);
      for (std::size_t w = 0; w < alg.vertex_count(); ++w) at[w] += parts[part].dim(w);
    }
  }
  std::size_t unknowns = ModuleMorphism::coord_dim(m, e);
  Matrix inter = intertwiner_system(m, e);
  // Value constraints: phi_v(socle vector) = unit of the matching part.
  std::vector<std::size_t> offset(alg.vertex_count(), 0);
  for (std::size_t v = 1; v < alg.vertex_count(); ++v)
    offset[v] = offset[v - 1] + e.dim(v - 1) * m.dim(v - 1);
  std::size_t extra = 0;
  for (std::size_t part = 0; part < parts.size(); ++part) extra += e.dim(part_vertex[part]);
  Matrix sys(inter.rows() + extra, unknowns, f);
  Matrix rhs(inter.rows() + extra, 1, f);
  sys.paste(inter, 0, 0);
  std::size_t row0 = inter.rows();
  for (std::size_t part = 0; part < parts.size(); ++part) {
    std::size_t v = part_vertex[part];
    const Matrix& b = soc_vectors[part];
    for (std::size_t i = 0; i < e.dim(v); ++i) {
      for (std::size_t j = 0; j < m.dim(v); ++j)
        sys.set(row0 + i, offset[v] + i * m.dim(v) + j, b.at(j, 0));
      rhs.set(row0 + i, 0, i == unit_pos[part] ? f.one() : f.zero());
    }
    row0 += e.dim(v);
  }
  auto sol = solve_linear(sys, rhs);
  if (!sol.solvable()) throw std::runtime_error("internal: injective envelope system unsolvable");
  ModuleMorphism env = ModuleMorphism::from_coords(m, e, *sol.particular);
  if (!env.is_mono()) throw std::runtime_error("internal: injective envelope not injective");
  return env;
}

struct SplitWitness {
  bool split = false;
  std::optional<ModuleMorphism> witness;  // section (epi case) or retraction (mono case)
};

// Solves f . g = id over intertwiners g.
inline SplitWitness is_split_epi(const ModuleMorphism& f) {
  const Module& m = f.source();
  const Module& n = f.target();
  const FieldSpec& fld = f.field();
  std::size_t unknowns = ModuleMorphism::coord_dim(n, m);
  Matrix inter = intertwiner_system(n, m);
  std::size_t extra = 0;
  for (std::size_t v = 0; v < m.algebra().vertex_count(); ++v) extra += n.dim(v) * n.dim(v);
  Matrix sys(inter.rows() + extra, unknowns, fld);
  Matrix rhs(inter.rows() + extra, 1, fld);
  sys.paste(inter, 0, 0);
  std::vector<std::size_t> offset(m.algebra().vertex_count(), 0);
  for (std::size_t v = 1; v < m.algebra().vertex_count(); ++v)
    offset[v] = offset[v - 1] + m.dim(v - 1) * n.dim(v - 1);
  std::size_t row0 = inter.rows();
  for (std::size_t v = 0; v < m.algebra().vertex_count(); ++v) {
    // (f_v g_v)[i][j] = delta_ij ; unknown g_v[k][j] has coefficient f_v[i][k].
    for (std::size_t i = 0; i < n.dim(v); ++i)
      for (std::size_t j = 0; j < n.dim(v); ++j) {
        std::size_t r = row0 + i * n.dim(v) + j;
        for (std::size_t k = 0; k < m.dim(v); ++k)
          sys.set(r, offset[v] + k * n.dim(v) + j, f.map(v).at(i, k));
        rhs.set(r, 0, i == j ? fld.one() : fld.zero());
      }
    row0 += n.dim(v) * n.dim(v);
  }
  auto sol = solve_linear(sys, rhs);
  if (!sol.solvable()) return {};
  return SplitWitness{true, ModuleMorphism::from_coords(n, m, *sol.particular)};
}

// Solves g . f = id over intertwiners g.
inline SplitWitness is_split_mono(const ModuleMorphism& f) {
  const Module& m = f.source();
  const Module& n = f.target();
  const FieldSpec& fld = f.field();
  std::size_t unknowns = ModuleMorphism::coord_dim(n, m);
  Matrix inter = intertwiner_system(n, m);
  std::size_t extra = 0;
  for (std::size_t v = 0; v < m.algebra().vertex_count(); ++v) extra += m.dim(v) * m.dim(v);
  Matrix sys(inter.rows() + extra, unknowns, fld);
  Matrix rhs(inter.rows() + extra, 1, fld);
  sys.paste(inter, 0, 0);
  std::vector<std::size_t> offset(m.algebra().vertex_count(), 0);
  for (std::size_t v = 1; v < m.algebra().vertex_count(); ++v)
    offset[v] = offset[v - 1] + m.dim(v - 1) * n.dim(v - 1);
  std::size_t row0 = inter.rows();
  for (std::size_t v = 0; v < m.algebra().vertex_count(); ++v) {
    // (g_v f_v)[i][j] = delta_ij ; unknown g_v[i][k] has coefficient f_v[k][j].
    for (std::size_t i = 0; i < m.dim(v); ++i)
      for (std::size_t j = 0; j < m.dim(v); ++j) {
        std::size_t r = row0 + i * m.dim(v) + j;
        for (std::size_t k = 0; k < n.dim(v); ++k)
          sys.set(r, offset[v] + i * n.dim(v) + k, f.map(v).at(k, j));
        rhs.set(r, 0, i == j ? fld.one() : fld.zero());
      }
    row0 += m.dim(v) * m.dim(v);
  }
  auto sol = solve_linear(sys, rhs);
  if (!sol.solvable()) return {};
  return SplitWitness{true, ModuleMorphism::from_coords(n, m, *sol.particular)};
}

}  // namespace homcat
