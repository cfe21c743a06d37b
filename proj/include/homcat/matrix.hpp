#pragma once

// Dense exact matrices and the solvers every categorical question reduces to.
// Elimination pivots are deterministic (leftmost nonzero column, topmost row),
// so bases, coset representatives and reports are reproducible run to run.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcat/field.hpp"

namespace homcat {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), field_(FieldSpec::gf(2)) {}

  Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
      : rows_(rows), cols_(cols), field_(field), e_(rows * cols, field.zero()) {}

  static Matrix identity(std::size_t n, FieldSpec field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
  }

  static Matrix zero(std::size_t rows, std::size_t cols, FieldSpec field) {
    return Matrix(rows, cols, field);
  }

  // Row-major integer initializer, mostly for tests and fixtures.
  static Matrix from_rows(FieldSpec field, const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c, field);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("matrix: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, field.from_int(rows[i][j]));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v) { e_[r * cols_ + c] = std::move(v); }

  bool is_zero() const {
    for (const Scalar& s : e_)
      if (!field_.is_zero(s)) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.field_.add(a.e_[i], b.e_[i]);
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.field_.sub(a.e_[i], b.e_[i]);
    return r;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (Scalar& s : r.e_) s = field_.neg(s);
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("matrix: field mismatch");
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix: dimension mismatch in product");
    Matrix r(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.field_.is_zero(a.at(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          r.set(i, j, a.field_.add(r.at(i, j), a.field_.mul(a.at(i, k), b.at(k, j))));
      }
    return r;
  }

  Matrix scaled(const Scalar& c) const {
    Matrix r = *this;
    for (Scalar& s : r.e_) s = field_.mul(s, c);
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
  }

  Matrix column(std::size_t j) const {
    Matrix c(rows_, 1, field_);
    for (std::size_t i = 0; i < rows_; ++i) c.set(i, 0, at(i, j));
    return c;
  }

  // Writes `other` into this matrix with top-left corner at (r0, c0).
  void paste(const Matrix& other, std::size_t r0, std::size_t c0) {
    if (r0 + other.rows_ > rows_ || c0 + other.cols_ > cols_)
      throw std::invalid_argument("matrix: paste out of range");
    for (std::size_t i = 0; i < other.rows_; ++i)
      for (std::size_t j = 0; j < other.cols_; ++j) set(r0 + i, c0 + j, other.at(i, j));
  }

  static Matrix hstack(const std::vector<Matrix>& parts, FieldSpec field, std::size_t rows) {
    std::size_t cols = 0;
    for (const Matrix& p : parts) {
      if (p.rows() != rows) throw std::invalid_argument("matrix: hstack row mismatch");
      cols += p.cols();
    }
    Matrix r(rows, cols, field);
    std::size_t at_col = 0;
    for (const Matrix& p : parts) {
      r.paste(p, 0, at_col);
      at_col += p.cols();
    }
    return r;
  }

  static Matrix vstack(const std::vector<Matrix>& parts, FieldSpec field, std::size_t cols) {
    std::size_t rows = 0;
    for (const Matrix& p : parts) {
      if (p.cols() != cols) throw std::invalid_argument("matrix: vstack col mismatch");
      rows += p.rows();
    }
    Matrix r(rows, cols, field);
    std::size_t at_row = 0;
    for (const Matrix& p : parts) {
      r.paste(p, at_row, 0);
      at_row += p.rows();
    }
    return r;
  }

  struct Echelon;
  Echelon rref() const;
  std::size_t rank() const;
  std::vector<Matrix> kernel_basis() const;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ",";
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += field_.to_string(at(i, j));
      }
      s += "]";
    }
    s += "]";
    return s;
  }

 private:
  std::size_t rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> e_;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(e_[a * cols_ + j], e_[b * cols_ + j]);
  }

  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_ || field_ != b.field_)
      throw std::invalid_argument("matrix: shape or field mismatch");
  }
};

struct Matrix::Echelon {
  Matrix reduced;                        // RREF
  std::vector<std::size_t> pivot_cols;   // increasing
};

inline Matrix::Echelon Matrix::rref() const {
  Echelon e{*this, {}};
  Matrix& m = e.reduced;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < cols_ && pr < rows_; ++pc) {
    std::size_t sel = pr;
    while (sel < rows_ && field_.is_zero(m.at(sel, pc))) ++sel;
    if (sel == rows_) continue;
    m.swap_rows(pr, sel);
    Scalar piv_inv = field_.inv(m.at(pr, pc));
    for (std::size_t j = pc; j < cols_; ++j) m.set(pr, j, field_.mul(m.at(pr, j), piv_inv));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pr || field_.is_zero(m.at(i, pc))) continue;
      Scalar f = m.at(i, pc);
      for (std::size_t j = pc; j < cols_; ++j)
        m.set(i, j, field_.sub(m.at(i, j), field_.mul(f, m.at(pr, j))));
    }
    e.pivot_cols.push_back(pc);
    ++pr;
  }
  return e;
}

inline std::size_t Matrix::rank() const { return rref().pivot_cols.size(); }

// Basis of { x : M x = 0 }, one column per free column, in increasing
// free-column order.
inline std::vector<Matrix> Matrix::kernel_basis() const {
  Echelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : e.pivot_cols) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (is_pivot[j]) continue;
    Matrix v(cols_, 1, field_);
    v.set(j, 0, field_.one());
    for (std::size_t pi = 0; pi < e.pivot_cols.size(); ++pi)
      v.set(e.pivot_cols[pi], 0, field_.neg(e.reduced.at(pi, j)));
    basis.push_back(std::move(v));
  }
  return basis;
}

struct AffineSolution {
  std::optional<Matrix> particular;   // column vector, absent when inconsistent
  std::vector<Matrix> kernel_basis;   // independent column vectors

  bool solvable() const { return particular.has_value(); }
};

// Exact solution of M x = b: a particular solution when consistent, plus a
// basis of ker M either way.
inline AffineSolution solve_linear(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows() || b.cols() != 1 || b.field() != m.field())
    throw std::invalid_argument("solve_linear: dimension mismatch");
  const FieldSpec& f = m.field();
  Matrix aug = Matrix::hstack({m, b}, f, m.rows());
  Matrix::Echelon e = aug.rref();
  AffineSolution sol;
  sol.kernel_basis = m.kernel_basis();
  bool consistent = true;
  for (std::size_t p : e.pivot_cols)
    if (p == m.cols()) consistent = false;
  if (consistent) {
    Matrix x(m.cols(), 1, f);
    for (std::size_t pi = 0; pi < e.pivot_cols.size(); ++pi)
      x.set(e.pivot_cols[pi], 0, e.reduced.at(pi, m.cols()));
    sol.particular = std::move(x);
  }
  return sol;
}

// Canonical basis of a span of column vectors: RREF rows of the transpose,
// read back as columns. Canonical for the subspace, hence cache friendly.
inline std::vector<Matrix> span_basis(const std::vector<Matrix>& vectors, std::size_t dim,
                                      const FieldSpec& f) {
  if (vectors.empty()) return {};
  Matrix rows(vectors.size(), dim, f);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].rows() != dim || vectors[i].cols() != 1)
      throw std::invalid_argument("span_basis: bad vector shape");
    for (std::size_t j = 0; j < dim; ++j) rows.set(i, j, vectors[i].at(j, 0));
  }
  Matrix::Echelon e = rows.rref();
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    Matrix v(dim, 1, f);
    for (std::size_t j = 0; j < dim; ++j) v.set(j, 0, e.reduced.at(i, j));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Membership test: is v in the span of `basis`?
inline bool in_span(const Matrix& v, const std::vector<Matrix>& basis) {
  if (basis.empty()) return v.is_zero();
  Matrix m = Matrix::hstack(basis, v.field(), v.rows());
  return solve_linear(m, v).solvable();
}

// One constraint of the generic membership solver: L x - c must land in the
// span of `subspace`.
struct MembershipConstraint {
  Matrix linear;                  // k x n
  Matrix offset;                  // k x 1
  std::vector<Matrix> subspace;   // columns, k x 1 each
};

// Finds x with L_i x - c_i in V_i for all i, by adjoining subspace coordinates
// as auxiliary unknowns and solving the stacked system. Auxiliary columns come
// first so elimination spends its pivots on them; a vacuous constraint then
// yields the zero particular. The solution is projected back to the x
// unknowns; projected kernel vectors are re-reduced so they stay independent.
inline AffineSolution solve_affine_membership(std::size_t unknowns, const FieldSpec& f,
                                              const std::vector<MembershipConstraint>& cs) {
  std::size_t aux = 0;
  for (const MembershipConstraint& c : cs) {
    if (c.linear.cols() != unknowns || c.offset.rows() != c.linear.rows() || c.offset.cols() != 1)
      throw std::invalid_argument("solve_affine_membership: dimension mismatch");
    for (const Matrix& v : c.subspace)
      if (v.rows() != c.linear.rows() || v.cols() != 1)
        throw std::invalid_argument("solve_affine_membership: dimension mismatch");
    aux += c.subspace.size();
  }
  std::size_t total_rows = 0;
  for (const MembershipConstraint& c : cs) total_rows += c.linear.rows();
  Matrix m(total_rows, aux + unknowns, f);
  Matrix rhs(total_rows, 1, f);
  std::size_t row0 = 0, aux0 = 0;
  for (const MembershipConstraint& c : cs) {
    m.paste(c.linear, row0, aux);
    for (std::size_t k = 0; k < c.subspace.size(); ++k)
      m.paste(-c.subspace[k], row0, aux0 + k);
    rhs.paste(c.offset, row0, 0);
    row0 += c.linear.rows();
    aux0 += c.subspace.size();
  }
  AffineSolution full = solve_linear(m, rhs);
  AffineSolution out;
  if (full.particular) {
    Matrix x(unknowns, 1, f);
    for (std::size_t i = 0; i < unknowns; ++i) x.set(i, 0, full.particular->at(aux + i, 0));
    out.particular = std::move(x);
  }
  std::vector<Matrix> projected;
  for (const Matrix& k : full.kernel_basis) {
    Matrix x(unknowns, 1, f);
    for (std::size_t i = 0; i < unknowns; ++i) x.set(i, 0, k.at(aux + i, 0));
    if (!x.is_zero()) projected.push_back(std::move(x));
  }
  out.kernel_basis = span_basis(projected, unknowns, f);
  return out;
}

}  // namespace homcat
