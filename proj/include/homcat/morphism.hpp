#pragma once

// Intertwiners between representations, their flat coordinate form, and hom
// spaces computed as kernels of the intertwining system. Flattening order is
// fixed (vertices in order, row-major within a vertex) — coset bases, ideals
// and caches all speak this coordinate language.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "homcat/module.hpp"

namespace homcat {

class ModuleMorphism {
 public:
  ModuleMorphism() = default;

  ModuleMorphism(Module src, Module tgt, std::vector<Matrix> maps)
      : src_(std::move(src)), tgt_(std::move(tgt)), maps_(std::move(maps)) {
    validate();
  }

  static ModuleMorphism zero(const Module& src, const Module& tgt) {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < src.algebra().vertex_count(); ++v)
      maps.push_back(Matrix(tgt.dim(v), src.dim(v), src.field()));
    return ModuleMorphism(src, tgt, std::move(maps));
  }

  static ModuleMorphism identity(const Module& m) {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < m.algebra().vertex_count(); ++v)
      maps.push_back(Matrix::identity(m.dim(v), m.field()));
    return ModuleMorphism(m, m, std::move(maps));
  }

  const Module& source() const { return src_; }
  const Module& target() const { return tgt_; }
  const Matrix& map(std::size_t v) const { return maps_[v]; }
  const FieldSpec& field() const { return src_.field(); }

  bool is_zero() const {
    for (const Matrix& m : maps_)
      if (!m.is_zero()) return false;
    return true;
  }

  std::size_t total_rank() const {
    std::size_t r = 0;
    for (const Matrix& m : maps_) r += m.rank();
    return r;
  }

  bool is_mono() const { return total_rank() == src_.total_dim(); }
  bool is_epi() const { return total_rank() == tgt_.total_dim(); }
  bool is_iso() const { return is_mono() && is_epi(); }

  static std::size_t coord_dim(const Module& src, const Module& tgt) {
    std::size_t n = 0;
    for (std::size_t v = 0; v < src.algebra().vertex_count(); ++v) n += tgt.dim(v) * src.dim(v);
    return n;
  }

  Matrix flatten() const {
    Matrix col(coord_dim(src_, tgt_), 1, field());
    std::size_t at = 0;
    for (const Matrix& m : maps_)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) col.set(at++, 0, m.at(i, j));
    return col;
  }

  static ModuleMorphism from_coords(const Module& src, const Module& tgt, const Matrix& col) {
    std::vector<Matrix> maps;
    std::size_t at = 0;
    for (std::size_t v = 0; v < src.algebra().vertex_count(); ++v) {
      Matrix m(tgt.dim(v), src.dim(v), src.field());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, col.at(at++, 0));
      maps.push_back(std::move(m));
    }
    return ModuleMorphism(src, tgt, std::move(maps));
  }

  friend ModuleMorphism operator+(const ModuleMorphism& a, const ModuleMorphism& b) {
    require_parallel(a, b);
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < a.maps_.size(); ++v) maps.push_back(a.maps_[v] + b.maps_[v]);
    return ModuleMorphism(a.src_, a.tgt_, std::move(maps));
  }

  friend ModuleMorphism operator-(const ModuleMorphism& a, const ModuleMorphism& b) {
    require_parallel(a, b);
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < a.maps_.size(); ++v) maps.push_back(a.maps_[v] - b.maps_[v]);
    return ModuleMorphism(a.src_, a.tgt_, std::move(maps));
  }

  ModuleMorphism operator-() const {
    std::vector<Matrix> maps;
    for (const Matrix& m : maps_) maps.push_back(-m);
    return ModuleMorphism(src_, tgt_, std::move(maps));
  }

  ModuleMorphism scaled(const Scalar& c) const {
    std::vector<Matrix> maps;
    for (const Matrix& m : maps_) maps.push_back(m.scaled(c));
    return ModuleMorphism(src_, tgt_, std::move(maps));
  }

  friend bool operator==(const ModuleMorphism& a, const ModuleMorphism& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.maps_ == b.maps_;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t v = 0; v < maps_.size(); ++v) {
      if (v) s += " ";
      s += src_.algebra().vertices()[v] + ":" + maps_[v].to_string();
    }
    return s;
  }

 private:
  Module src_, tgt_;
  std::vector<Matrix> maps_;

  void validate() const {
    if (src_.algebra() != tgt_.algebra())
      throw std::invalid_argument("algebra-mismatch: morphism endpoints over different algebras");
    if (maps_.size() != src_.algebra().vertex_count())
      throw std::invalid_argument("morphism: vertex map table size mismatch");
    for (std::size_t v = 0; v < maps_.size(); ++v)
      if (maps_[v].rows() != tgt_.dim(v) || maps_[v].cols() != src_.dim(v))
        throw std::invalid_argument("morphism: vertex map shape mismatch");
    const auto& arrows = src_.algebra().arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      if (maps_[arrows[a].tgt] * src_.action(a) != tgt_.action(a) * maps_[arrows[a].src])
        throw std::invalid_argument("morphism: not an intertwiner at arrow " + arrows[a].label);
    }
  }

  static void require_parallel(const ModuleMorphism& a, const ModuleMorphism& b) {
    if (a.src_ != b.src_ || a.tgt_ != b.tgt_)
      throw std::invalid_argument("morphism: not parallel");
  }
};

inline ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  if (f.target() != g.source())
    throw std::invalid_argument("composability-mismatch: compose(g, f) needs target(f) = source(g)");
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.source().algebra().vertex_count(); ++v)
    maps.push_back(g.map(v) * f.map(v));
  return ModuleMorphism(f.source(), g.target(), std::move(maps));
}

struct HomSpace {
  Module src, tgt;
  std::vector<ModuleMorphism> basis;  // deterministic echelon order
  std::size_t dimension = 0;
};

// The intertwining equations as one linear system over the flat coordinates
// of a would-be morphism src -> tgt. Rows: one block per arrow.
inline Matrix intertwiner_system(const Module& src, const Module& tgt) {
  const FieldSpec& f = src.field();
  const Algebra& alg = src.algebra();
  std::size_t unknowns = ModuleMorphism::coord_dim(src, tgt);
  std::vector<std::size_t> offset(alg.vertex_count(), 0);
  for (std::size_t v = 1; v < alg.vertex_count(); ++v)
    offset[v] = offset[v - 1] + tgt.dim(v - 1) * src.dim(v - 1);
  std::size_t rows = 0;
  for (const Arrow& a : alg.arrows()) rows += tgt.dim(a.tgt) * src.dim(a.src);
  Matrix sys(rows, unknowns, f);
  std::size_t row0 = 0;
  for (std::size_t ai = 0; ai < alg.arrows().size(); ++ai) {
    const Arrow& a = alg.arrows()[ai];
    const Matrix& ms = src.action(ai);
    const Matrix& mt = tgt.action(ai);
    // (F_w . ms - mt . F_u)[i][j] = 0 for i < tgt.dim(w), j < src.dim(u)
    for (std::size_t i = 0; i < tgt.dim(a.tgt); ++i)
      for (std::size_t j = 0; j < src.dim(a.src); ++j) {
        std::size_t r = row0 + i * src.dim(a.src) + j;
        for (std::size_t k = 0; k < src.dim(a.tgt); ++k) {
          std::size_t idx = offset[a.tgt] + i * src.dim(a.tgt) + k;
          sys.set(r, idx, f.add(sys.at(r, idx), ms.at(k, j)));
        }
        for (std::size_t k = 0; k < tgt.dim(a.src); ++k) {
          std::size_t idx = offset[a.src] + k * src.dim(a.src) + j;
          sys.set(r, idx, f.sub(sys.at(r, idx), mt.at(i, k)));
        }
      }
    row0 += tgt.dim(a.tgt) * src.dim(a.src);
  }
  return sys;
}

inline HomSpace hom_basis(const Module& src, const Module& tgt) {
  if (src.algebra() != tgt.algebra())
    throw std::invalid_argument("algebra-mismatch: hom over different algebras");
  HomSpace hs{src, tgt, {}, 0};
  for (const Matrix& k : intertwiner_system(src, tgt).kernel_basis())
    hs.basis.push_back(ModuleMorphism::from_coords(src, tgt, k));
  hs.dimension = hs.basis.size();
  return hs;
}

// Matrix of the linear map Hom(a, src g) -> Hom(a, tgt g), x |-> g . x, on
// flat coordinates.
inline Matrix postcompose_matrix(const ModuleMorphism& g, const Module& a) {
  const Algebra& alg = a.algebra();
  const FieldSpec& f = a.field();
  const Module& b = g.source();
  const Module& c = g.target();
  Matrix m(ModuleMorphism::coord_dim(a, c), ModuleMorphism::coord_dim(a, b), f);
  std::size_t row_off = 0, col_off = 0;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    // (g_v x_v)[i][j] = sum_k g_v[i][k] x_v[k][j]
    for (std::size_t i = 0; i < c.dim(v); ++i)
      for (std::size_t j = 0; j < a.dim(v); ++j)
        for (std::size_t k = 0; k < b.dim(v); ++k)
          m.set(row_off + i * a.dim(v) + j, col_off + k * a.dim(v) + j, g.map(v).at(i, k));
    row_off += c.dim(v) * a.dim(v);
    col_off += b.dim(v) * a.dim(v);
  }
  return m;
}

// Matrix of the linear map Hom(tgt f, b) -> Hom(src f, b), x |-> x . f.
inline Matrix precompose_matrix(const ModuleMorphism& f, const Module& b) {
  const Algebra& alg = b.algebra();
  const FieldSpec& fld = b.field();
  const Module& a0 = f.source();
  const Module& a = f.target();
  Matrix m(ModuleMorphism::coord_dim(a0, b), ModuleMorphism::coord_dim(a, b), fld);
  std::size_t row_off = 0, col_off = 0;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    // (x_v f_v)[i][j] = sum_k x_v[i][k] f_v[k][j]
    for (std::size_t i = 0; i < b.dim(v); ++i)
      for (std::size_t j = 0; j < a0.dim(v); ++j)
        for (std::size_t k = 0; k < a.dim(v); ++k)
          m.set(row_off + i * a0.dim(v) + j, col_off + i * a.dim(v) + k, f.map(v).at(k, j));
    row_off += b.dim(v) * a0.dim(v);
    col_off += b.dim(v) * a.dim(v);
  }
  return m;
}

// Ambient-category handle: the algebra plus a hom-space memo table. The table
// is idempotent under concurrent population (results are deterministic).
class Cat {
 public:
  explicit Cat(Algebra alg) : alg_(std::move(alg)) {}

  const Algebra& algebra() const { return alg_; }
  const FieldSpec& field() const { return alg_.field(); }

  const HomSpace& hom(const Module& a, const Module& b) const {
    std::pair<std::string, std::string> key{a.key(), b.key()};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return *it->second;
    }
    auto computed = std::make_shared<HomSpace>(hom_basis(a, b));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache_.emplace(key, std::move(computed));
    return *it->second;
  }

 private:
  Algebra alg_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::string, std::string>, std::shared_ptr<const HomSpace>> cache_;
};

}  // namespace homcat
