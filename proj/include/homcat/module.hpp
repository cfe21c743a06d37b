#pragma once

// Finite-dimensional representations of a quiver algebra and everything the
// approximation-theoretic layers ask of them. A module assigns a vector space
// to each vertex and a matrix to each arrow; relations are checked on
// construction. Object identity is the canonical key of (dims, actions):
// isomorphic-but-unequal modules are distinct objects on purpose.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homcat/algebra.hpp"

namespace homcat {

class Module {
 public:
  Module() = default;

  Module(Algebra alg, std::vector<std::size_t> dims, std::vector<Matrix> actions,
         std::string name = "") {
    auto d = std::make_shared<Data>(std::move(alg));
    d->dims = std::move(dims);
    d->actions = std::move(actions);
    d->name = std::move(name);
    validate(*d);
    d->key = make_key(*d);
    d_ = std::move(d);
  }

  static Module zero(const Algebra& alg) {
    std::vector<std::size_t> dims(alg.vertex_count(), 0);
    std::vector<Matrix> actions;
    for (std::size_t a = 0; a < alg.arrows().size(); ++a)
      actions.push_back(Matrix(0, 0, alg.field()));
    return Module(alg, dims, actions, "0");
  }

  static Module simple(const Algebra& alg, std::size_t vertex, std::string name = "") {
    std::vector<std::size_t> dims(alg.vertex_count(), 0);
    dims[vertex] = 1;
    std::vector<Matrix> actions;
    for (const Arrow& a : alg.arrows())
      actions.push_back(Matrix(dims[a.tgt], dims[a.src], alg.field()));
    return Module(alg, dims, actions,
                  name.empty() ? "S(" + alg.vertices()[vertex] + ")" : std::move(name));
  }

  // Indecomposable projective at a vertex: basis paths starting there, arrows
  // acting by appending.
  static Module projective(const Algebra& alg, std::size_t vertex, std::string name = "") {
    const FieldSpec& f = alg.field();
    std::vector<std::size_t> rows = basis_at(alg, vertex, /*by_src=*/true);
    std::vector<std::size_t> dims(alg.vertex_count(), 0);
    for (std::size_t b : rows) ++dims[alg.basis()[b].tgt];
    std::vector<Matrix> actions;
    for (std::size_t ai = 0; ai < alg.arrows().size(); ++ai) {
      const Arrow& a = alg.arrows()[ai];
      std::vector<std::size_t> dom = filter_by_tgt(alg, rows, a.src);
      std::vector<std::size_t> cod = filter_by_tgt(alg, rows, a.tgt);
      Matrix m(cod.size(), dom.size(), f);
      for (std::size_t j = 0; j < dom.size(); ++j) {
        Path p = alg.basis()[dom[j]];
        p.arrows.push_back(ai);
        p.tgt = a.tgt;
        std::vector<Scalar> cls = alg.path_class(p);
        for (std::size_t i = 0; i < cod.size(); ++i) m.set(i, j, cls[cod[i]]);
      }
      actions.push_back(std::move(m));
    }
    return Module(alg, dims, actions,
                  name.empty() ? "P(" + alg.vertices()[vertex] + ")" : std::move(name));
  }

  // Indecomposable injective at a vertex: dual coordinates on basis paths
  // ending there, arrows acting by dualized pre-concatenation.
  static Module injective(const Algebra& alg, std::size_t vertex, std::string name = "") {
    const FieldSpec& f = alg.field();
    std::vector<std::size_t> rows = basis_at(alg, vertex, /*by_src=*/false);
    std::vector<std::size_t> dims(alg.vertex_count(), 0);
    for (std::size_t b : rows) ++dims[alg.basis()[b].src];
    std::vector<Matrix> actions;
    for (std::size_t ai = 0; ai < alg.arrows().size(); ++ai) {
      const Arrow& a = alg.arrows()[ai];
      std::vector<std::size_t> dom = filter_by_src(alg, rows, a.src);
      std::vector<std::size_t> cod = filter_by_src(alg, rows, a.tgt);
      Matrix m(cod.size(), dom.size(), f);
      for (std::size_t i = 0; i < cod.size(); ++i) {
        Path aq{a.src, vertex, {ai}};
        const Path& q = alg.basis()[cod[i]];
        aq.arrows.insert(aq.arrows.end(), q.arrows.begin(), q.arrows.end());
        std::vector<Scalar> cls = alg.path_class(aq);
        for (std::size_t j = 0; j < dom.size(); ++j) m.set(i, j, cls[dom[j]]);
      }
      actions.push_back(std::move(m));
    }
    return Module(alg, dims, actions,
                  name.empty() ? "I(" + alg.vertices()[vertex] + ")" : std::move(name));
  }

  const Algebra& algebra() const { return d_->alg; }
  const std::vector<std::size_t>& dims() const { return d_->dims; }
  std::size_t dim(std::size_t v) const { return d_->dims[v]; }
  std::size_t total_dim() const {
    std::size_t t = 0;
    for (std::size_t d : d_->dims) t += d;
    return t;
  }
  const Matrix& action(std::size_t arrow) const { return d_->actions[arrow]; }
  const std::string& name() const { return d_->name; }
  const std::string& key() const { return d_->key; }
  const FieldSpec& field() const { return d_->alg.field(); }
  bool is_zero_module() const { return total_dim() == 0; }

  std::string display_name() const {
    if (!d_->name.empty()) return d_->name;
    std::string s = "dims(";
    for (std::size_t v = 0; v < d_->dims.size(); ++v) {
      if (v) s += ",";
      s += std::to_string(d_->dims[v]);
    }
    return s + ")";
  }

  Module renamed(std::string name) const {
    Module m = *this;
    auto d = std::make_shared<Data>(*d_);
    d->name = std::move(name);
    m.d_ = std::move(d);
    return m;
  }

  friend bool operator==(const Module& a, const Module& b) { return a.key() == b.key(); }
  friend bool operator!=(const Module& a, const Module& b) { return !(a == b); }

 private:
  struct Data {
    explicit Data(Algebra a) : alg(std::move(a)) {}
    Algebra alg;
    std::vector<std::size_t> dims;
    std::vector<Matrix> actions;
    std::string name;
    std::string key;
  };
  std::shared_ptr<const Data> d_;

  static std::vector<std::size_t> basis_at(const Algebra& alg, std::size_t vertex, bool by_src) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < alg.basis().size(); ++b) {
      const Path& p = alg.basis()[b];
      if ((by_src ? p.src : p.tgt) == vertex) out.push_back(b);
    }
    return out;
  }
  static std::vector<std::size_t> filter_by_tgt(const Algebra& alg,
                                                const std::vector<std::size_t>& rows,
                                                std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t b : rows)
      if (alg.basis()[b].tgt == v) out.push_back(b);
    return out;
  }
  static std::vector<std::size_t> filter_by_src(const Algebra& alg,
                                                const std::vector<std::size_t>& rows,
                                                std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t b : rows)
      if (alg.basis()[b].src == v) out.push_back(b);
    return out;
  }

  static void validate(const Data& d) {
    if (d.dims.size() != d.alg.vertex_count())
      throw std::invalid_argument("module: dims table size mismatch");
    if (d.actions.size() != d.alg.arrows().size())
      throw std::invalid_argument("module: action table size mismatch");
    for (std::size_t a = 0; a < d.actions.size(); ++a) {
      const Arrow& ar = d.alg.arrows()[a];
      if (d.actions[a].rows() != d.dims[ar.tgt] || d.actions[a].cols() != d.dims[ar.src] ||
          d.actions[a].field() != d.alg.field())
        throw std::invalid_argument("module: action shape mismatch for arrow " + ar.label);
    }
    // Every relation must evaluate to the zero matrix.
    for (const Relation& rel : d.alg.relations()) {
      std::size_t src = d.alg.arrows()[rel.front().arrows.front()].src;
      std::size_t tgt = d.alg.arrows()[rel.front().arrows.back()].tgt;
      Matrix sum(d.dims[tgt], d.dims[src], d.alg.field());
      for (const RelationTerm& t : rel) {
        Matrix m = Matrix::identity(d.dims[src], d.alg.field());
        for (std::size_t a : t.arrows) m = d.actions[a] * m;
        sum = sum + m.scaled(t.coeff);
      }
      if (!sum.is_zero())
        throw std::invalid_argument("module: relation violated (" + relation_text(d.alg, rel) + ")");
    }
  }

  static std::string relation_text(const Algebra& alg, const Relation& rel) {
    std::string s;
    for (std::size_t t = 0; t < rel.size(); ++t) {
      if (t) s += " + ";
      s += alg.field().to_string(rel[t].coeff) + "*";
      for (std::size_t k = 0; k < rel[t].arrows.size(); ++k) {
        if (k) s += "*";
        s += alg.arrows()[rel[t].arrows[k]].label;
      }
    }
    return s;
  }

  static std::string make_key(const Data& d) {
    std::string k = d.alg.key() + "|";
    for (std::size_t v : d.dims) k += std::to_string(v) + ",";
    k += "|";
    for (const Matrix& m : d.actions) k += m.to_string() + ";";
    return k;
  }
};

}  // namespace homcat
