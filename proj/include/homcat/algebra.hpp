#pragma once

// Quiver algebras with relations. The algebra is presented by a quiver and a
// list of relations (linear combinations of parallel paths, every term of
// length >= 2), and realized as the span of path classes enumerated up to
// path_cap. The build succeeds only when every path of length path_cap is
// zero modulo the relation ideal; that certificate bounds the arrow ideal's
// nilpotency, which the radical/socle/cover machinery depends on.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcat/matrix.hpp"

namespace homcat {

struct Arrow {
  std::string label;
  std::size_t src, tgt;  // vertex indices
};

// Arrows in application order: arrows[0] first. Empty = trivial path at src.
struct Path {
  std::size_t src, tgt;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
};

struct RelationTerm {
  Scalar coeff;
  std::vector<std::size_t> arrows;  // application order, length >= 2
};
using Relation = std::vector<RelationTerm>;

class Algebra {
 public:
  static Algebra build(FieldSpec field, std::vector<std::string> vertices,
                       std::vector<Arrow> arrows, std::vector<Relation> relations,
                       std::size_t path_cap) {
    if (path_cap < 1) throw std::invalid_argument("algebra: path_cap must be >= 1");
    auto d = std::make_shared<Data>();
    d->field = field;
    d->vertices = std::move(vertices);
    d->arrows = std::move(arrows);
    d->relations = std::move(relations);
    d->path_cap = path_cap;
    validate_quiver(*d);
    validate_relations(*d);
    enumerate_paths(*d);
    reduce_modulo_relations(*d);
    build_multiplication(*d);
    d->key = make_key(*d);
    return Algebra(std::move(d));
  }

  const FieldSpec& field() const { return d_->field; }
  const std::vector<std::string>& vertices() const { return d_->vertices; }
  std::size_t vertex_count() const { return d_->vertices.size(); }
  const std::vector<Arrow>& arrows() const { return d_->arrows; }
  const std::vector<Relation>& relations() const { return d_->relations; }
  std::size_t path_cap() const { return d_->path_cap; }
  std::size_t dimension() const { return d_->basis.size(); }
  const std::vector<Path>& basis() const { return d_->basis; }
  const std::string& key() const { return d_->key; }

  std::size_t vertex_index(const std::string& label) const {
    for (std::size_t v = 0; v < d_->vertices.size(); ++v)
      if (d_->vertices[v] == label) return v;
    throw std::invalid_argument("algebra: unknown vertex " + label);
  }

  std::size_t arrow_index(const std::string& label) const {
    for (std::size_t a = 0; a < d_->arrows.size(); ++a)
      if (d_->arrows[a].label == label) return a;
    throw std::invalid_argument("algebra: unknown arrow " + label);
  }

  // Class of an arbitrary path as a coefficient vector over the basis.
  // Paths of length >= path_cap are certified zero.
  std::vector<Scalar> path_class(const Path& p) const {
    if (p.length() >= d_->path_cap) return std::vector<Scalar>(dimension(), d_->field.zero());
    return d_->canon[d_->path_index.at(path_key(p))];
  }

  // Product of basis classes i then j ("do i, then j"): zero unless
  // tgt(i) = src(j).
  const std::vector<Scalar>& mult(std::size_t i, std::size_t j) const {
    return d_->mult[i * dimension() + j];
  }

  std::string path_to_string(const Path& p) const {
    if (p.arrows.empty()) return "e_" + d_->vertices[p.src];
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
      if (k) s += "*";
      s += d_->arrows[p.arrows[k]].label;
    }
    return s;
  }

  // Parses "a*b + 2*c*d" into a relation; terms must be parallel paths of
  // length >= 2. Used by the workspace loader and tests.
  Relation parse_relation_text(const std::string& text) const {
    return parse_relation(d_->arrows, d_->field, text);
  }

  static Relation parse_relation(const std::vector<Arrow>& arrows, const FieldSpec& field,
                                 const std::string& text) {
    Relation rel;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
    bool first = true;
    while (true) {
      skip_ws();
      if (i == text.size()) break;
      long long sign = 1;
      if (!first || text[i] == '+' || text[i] == '-') {
        if (text[i] == '+') {
          ++i;
        } else if (text[i] == '-') {
          sign = -1;
          ++i;
        } else if (!first) {
          throw std::invalid_argument("malformed relation: expected + or - in '" + text + "'");
        }
      }
      first = false;
      skip_ws();
      long long coeff = 1;
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        coeff = std::stoll(text.substr(i, j - i));
        i = j;
        skip_ws();
        if (i >= text.size() || text[i] != '*')
          throw std::invalid_argument("malformed relation: coefficient without path in '" + text + "'");
        ++i;
      }
      std::vector<std::size_t> seq;
      while (true) {
        skip_ws();
        std::size_t j = i;
        while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
          ++j;
        if (j == i) throw std::invalid_argument("malformed relation: expected arrow name in '" + text + "'");
        std::string label = text.substr(i, j - i);
        i = j;
        bool found = false;
        for (std::size_t a = 0; a < arrows.size(); ++a)
          if (arrows[a].label == label) {
            seq.push_back(a);
            found = true;
            break;
          }
        if (!found) throw std::invalid_argument("malformed relation: unknown arrow '" + label + "'");
        skip_ws();
        if (i < text.size() && text[i] == '*') {
          ++i;
          continue;
        }
        break;
      }
      rel.push_back(RelationTerm{field.from_int(sign * coeff), seq});
    }
    if (rel.empty()) throw std::invalid_argument("malformed relation: empty");
    return rel;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.d_->key == b.d_->key; }
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

 private:
  struct Data {
    FieldSpec field = FieldSpec::gf(2);
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    std::size_t path_cap = 1;
    std::vector<Path> all_paths;                       // coordinate order: len desc, src asc, lex asc
    std::map<std::string, std::size_t> path_index;     // key -> coordinate
    std::vector<Path> basis;                           // len asc, src asc, lex asc
    std::vector<std::size_t> basis_coord;              // basis position -> coordinate
    std::vector<std::vector<Scalar>> canon;            // coordinate -> class over basis
    std::vector<std::vector<Scalar>> mult;             // (i * dim + j) -> class over basis
    std::string key;
  };

  std::shared_ptr<const Data> d_;
  explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  static std::string path_key(const Path& p) {
    std::string k = std::to_string(p.src) + ":";
    for (std::size_t a : p.arrows) k += std::to_string(a) + ",";
    return k;
  }

  static void validate_quiver(const Data& d) {
    if (d.vertices.empty()) throw std::invalid_argument("algebra: no vertices");
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
      if (d.vertices[v].empty() || std::isdigit(static_cast<unsigned char>(d.vertices[v][0])))
        throw std::invalid_argument("algebra: bad vertex label");
      for (std::size_t w = v + 1; w < d.vertices.size(); ++w)
        if (d.vertices[v] == d.vertices[w]) throw std::invalid_argument("algebra: duplicate vertex label");
    }
    for (const Arrow& a : d.arrows) {
      if (a.src >= d.vertices.size() || a.tgt >= d.vertices.size())
        throw std::invalid_argument("algebra: arrow endpoint out of range");
      if (a.label.empty() || std::isdigit(static_cast<unsigned char>(a.label[0])))
        throw std::invalid_argument("algebra: bad arrow label");
    }
    for (std::size_t a = 0; a < d.arrows.size(); ++a)
      for (std::size_t b = a + 1; b < d.arrows.size(); ++b)
        if (d.arrows[a].label == d.arrows[b].label)
          throw std::invalid_argument("algebra: duplicate arrow label");
  }

  static void validate_relations(const Data& d) {
    for (const Relation& rel : d.relations) {
      if (rel.empty()) throw std::invalid_argument("malformed relation: empty");
      std::size_t src = 0, tgt = 0;
      bool have = false;
      for (const RelationTerm& t : rel) {
        if (t.arrows.size() < 2)
          throw std::invalid_argument("malformed relation: term of length < 2 (relations must be admissible)");
        for (std::size_t k = 0; k < t.arrows.size(); ++k) {
          if (t.arrows[k] >= d.arrows.size())
            throw std::invalid_argument("malformed relation: arrow index out of range");
          if (k > 0 && d.arrows[t.arrows[k]].src != d.arrows[t.arrows[k - 1]].tgt)
            throw std::invalid_argument("malformed relation: non-composable term");
        }
        std::size_t s = d.arrows[t.arrows.front()].src;
        std::size_t e = d.arrows[t.arrows.back()].tgt;
        if (!have) {
          src = s;
          tgt = e;
          have = true;
        } else if (s != src || e != tgt) {
          throw std::invalid_argument("malformed relation: terms are not parallel paths");
        }
      }
    }
  }

  static void enumerate_paths(Data& d) {
    std::vector<Path> current;
    for (std::size_t v = 0; v < d.vertices.size(); ++v) current.push_back(Path{v, v, {}});
    std::vector<Path> all = current;
    for (std::size_t len = 1; len <= d.path_cap; ++len) {
      std::vector<Path> next;
      for (const Path& p : current)
        for (std::size_t a = 0; a < d.arrows.size(); ++a)
          if (d.arrows[a].src == p.tgt) {
            Path q = p;
            q.arrows.push_back(a);
            q.tgt = d.arrows[a].tgt;
            next.push_back(std::move(q));
          }
      all.insert(all.end(), next.begin(), next.end());
      current = std::move(next);
      if (all.size() > 20000)
        throw std::runtime_error("algebra: path enumeration overflow (reduce path_cap)");
    }
    std::sort(all.begin(), all.end(), [](const Path& a, const Path& b) {
      if (a.length() != b.length()) return a.length() > b.length();
      if (a.src != b.src) return a.src < b.src;
      return a.arrows < b.arrows;
    });
    d.all_paths = std::move(all);
    for (std::size_t i = 0; i < d.all_paths.size(); ++i)
      d.path_index[path_key(d.all_paths[i])] = i;
  }

  static void reduce_modulo_relations(Data& d) {
    const FieldSpec& f = d.field;
    std::size_t n = d.all_paths.size();
    // Generators of the relation ideal inside the length-capped path space.
    std::vector<Matrix> gens;
    for (const Relation& rel : d.relations) {
      std::size_t maxlen = 0;
      for (const RelationTerm& t : rel) maxlen = std::max(maxlen, t.arrows.size());
      std::size_t rsrc = d.arrows[rel.front().arrows.front()].src;
      std::size_t rtgt = d.arrows[rel.front().arrows.back()].tgt;
      for (const Path& p : d.all_paths) {
        if (p.tgt != rsrc) continue;
        for (const Path& q : d.all_paths) {
          if (q.src != rtgt) continue;
          if (p.length() + maxlen + q.length() > d.path_cap) continue;
          Matrix v(n, 1, f);
          for (const RelationTerm& t : rel) {
            Path prq{p.src, q.tgt, p.arrows};
            prq.arrows.insert(prq.arrows.end(), t.arrows.begin(), t.arrows.end());
            prq.arrows.insert(prq.arrows.end(), q.arrows.begin(), q.arrows.end());
            std::size_t c = d.path_index.at(path_key(prq));
            v.set(c, 0, f.add(v.at(c, 0), t.coeff));
          }
          if (!v.is_zero()) gens.push_back(std::move(v));
        }
      }
    }
    std::vector<Matrix> w = span_basis(gens, n, f);  // canonical RREF rows as columns
    // Pivot of each reduced generator = its first nonzero coordinate.
    std::map<std::size_t, std::size_t> pivot_row;  // coordinate -> index into w
    for (std::size_t r = 0; r < w.size(); ++r) {
      for (std::size_t c = 0; c < n; ++c)
        if (!f.is_zero(w[r].at(c, 0))) {
          pivot_row[c] = r;
          break;
        }
    }
    // Basis classes: non-pivot coordinates, reordered shortest first.
    std::vector<std::size_t> basis_coords;
    for (std::size_t c = 0; c < n; ++c)
      if (!pivot_row.count(c)) basis_coords.push_back(c);
    std::sort(basis_coords.begin(), basis_coords.end(), [&](std::size_t a, std::size_t b) {
      const Path &pa = d.all_paths[a], &pb = d.all_paths[b];
      if (pa.length() != pb.length()) return pa.length() < pb.length();
      if (pa.src != pb.src) return pa.src < pb.src;
      return pa.arrows < pb.arrows;
    });
    std::map<std::size_t, std::size_t> basis_pos;
    for (std::size_t i = 0; i < basis_coords.size(); ++i) basis_pos[basis_coords[i]] = i;
    std::size_t dim = basis_coords.size();
    // Canonical class of every coordinate, computed right to left so pivot
    // reductions only refer to already-finished columns.
    d.canon.assign(n, std::vector<Scalar>(dim, f.zero()));
    for (std::size_t c = n; c-- > 0;) {
      auto bp = basis_pos.find(c);
      if (bp != basis_pos.end()) {
        d.canon[c][bp->second] = f.one();
        continue;
      }
      const Matrix& row = w[pivot_row.at(c)];
      for (std::size_t j = c + 1; j < n; ++j) {
        if (f.is_zero(row.at(j, 0))) continue;
        Scalar coef = f.neg(row.at(j, 0));
        for (std::size_t b = 0; b < dim; ++b)
          d.canon[c][b] = f.add(d.canon[c][b], f.mul(coef, d.canon[j][b]));
      }
    }
    // Finite-dimensionality / nilpotency certificate: every path of length
    // path_cap must be zero modulo the relations.
    for (std::size_t c = 0; c < n; ++c) {
      if (d.all_paths[c].length() != d.path_cap) continue;
      for (std::size_t b = 0; b < dim; ++b)
        if (!f.is_zero(d.canon[c][b]))
          throw std::runtime_error("infinite-dimensional-suspected: path '" +
                                   label_path(d, d.all_paths[c]) + "' survives at path_cap " +
                                   std::to_string(d.path_cap));
    }
    d.basis_coord = basis_coords;
    for (std::size_t c : basis_coords) d.basis.push_back(d.all_paths[c]);
  }

  static std::string label_path(const Data& d, const Path& p) {
    if (p.arrows.empty()) return "e_" + d.vertices[p.src];
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
      if (k) s += "*";
      s += d.arrows[p.arrows[k]].label;
    }
    return s;
  }

  static void build_multiplication(Data& d) {
    const FieldSpec& f = d.field;
    std::size_t dim = d.basis.size();
    d.mult.assign(dim * dim, std::vector<Scalar>(dim, f.zero()));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const Path &pi = d.basis[i], &pj = d.basis[j];
        if (pi.tgt != pj.src) continue;
        Path c{pi.src, pj.tgt, pi.arrows};
        c.arrows.insert(c.arrows.end(), pj.arrows.begin(), pj.arrows.end());
        if (c.length() >= d.path_cap) continue;  // certified zero at and past the cap
        d.mult[i * dim + j] = d.canon[d.path_index.at(path_key(c))];
      }
    // Associativity spot check on all basis triples.
    auto mul_class = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
      std::vector<Scalar> r(dim, f.zero());
      for (std::size_t i = 0; i < dim; ++i) {
        if (f.is_zero(x[i])) continue;
        for (std::size_t j = 0; j < dim; ++j) {
          if (f.is_zero(y[j])) continue;
          const std::vector<Scalar>& m = d.mult[i * dim + j];
          Scalar c = f.mul(x[i], y[j]);
          for (std::size_t b = 0; b < dim; ++b) r[b] = f.add(r[b], f.mul(c, m[b]));
        }
      }
      return r;
    };
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Scalar> ij = d.mult[i * dim + j];
        for (std::size_t k = 0; k < dim; ++k) {
          std::vector<Scalar> ek(dim, f.zero());
          ek[k] = f.one();
          std::vector<Scalar> l = mul_class(ij, ek);
          std::vector<Scalar> r = mul_class([&] {
            std::vector<Scalar> ei(dim, f.zero());
            ei[i] = f.one();
            return ei;
          }(), d.mult[j * dim + k]);
          if (l != r) throw std::runtime_error("algebra: multiplication table not associative");
        }
      }
  }

  static std::string make_key(const Data& d) {
    std::string k = d.field.kind() == FieldKind::rationals
                        ? "Q"
                        : "GF" + std::to_string(d.field.characteristic());
    k += ";V:";
    for (const auto& v : d.vertices) k += v + ",";
    k += ";A:";
    for (const Arrow& a : d.arrows)
      k += a.label + ":" + std::to_string(a.src) + ">" + std::to_string(a.tgt) + ",";
    k += ";R:";
    for (const Relation& r : d.relations) {
      for (const RelationTerm& t : r) {
        k += d.field.to_string(t.coeff) + "*";
        for (std::size_t a : t.arrows) k += std::to_string(a) + ".";
        k += "+";
      }
      k += "|";
    }
    k += ";cap" + std::to_string(d.path_cap);
    return k;
  }
};

}  // namespace homcat
