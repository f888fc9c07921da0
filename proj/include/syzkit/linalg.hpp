#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syzkit/rational.hpp"

namespace syzkit {

// Dense rational matrix. Row-major, every entry present.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  bool operator==(const DenseMatrix& o) const = default;

  DenseMatrix operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
    DenseMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply shape");
    std::vector<Rat> r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  bool is_zero() const {
    for (const Rat& e : entries_)
      if (e != 0) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

struct RrefResult {
  DenseMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan over Q. Unique reduced row-echelon form.
inline RrefResult rref(DenseMatrix m) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(piv, j), m.at(rank, j));
    Rat inv = 1 / m.at(rank, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(rank, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(rank, j);
    }
    pivots.push_back(col);
    ++rank;
  }
  return {std::move(m), rank, std::move(pivots)};
}

inline std::size_t rank(const DenseMatrix& m) { return rref(m).rank; }

// Row-reduced exact basis of a subspace of Q^ambient. The canonical RREF
// basis makes equality an entry-wise comparison.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  // Span of the rows of m (zero rows dropped, basis canonicalized).
  static Subspace span_of_rows(const DenseMatrix& m) {
    RrefResult r = rref(m);
    Subspace s;
    s.ambient_ = m.cols();
    s.basis_ = DenseMatrix(r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        s.basis_.at(i, j) = r.reduced.at(i, j);
    s.pivots_ = std::move(r.pivot_cols);
    return s;
  }

  static Subspace span_of_vectors(const std::vector<std::vector<Rat>>& vecs,
                                  std::size_t ambient_dim) {
    DenseMatrix m(vecs.size(), ambient_dim);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (vecs[i].size() != ambient_dim)
        throw std::invalid_argument("vector length != ambient dimension");
      for (std::size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = vecs[i][j];
    }
    return span_of_rows(m);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const DenseMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  std::vector<Rat> basis_vector(std::size_t i) const {
    std::vector<Rat> v(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) v[j] = basis_.at(i, j);
    return v;
  }

  bool contains(const std::vector<Rat>& v) const {
    if (v.size() != ambient_)
      throw std::invalid_argument("vector length != ambient dimension");
    // Reduce v against the RREF basis; membership iff residual is zero.
    std::vector<Rat> w = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      const Rat& coef = w[pivots_[i]];
      if (coef == 0) continue;
      Rat f = coef;
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
    for (const Rat& x : w)
      if (x != 0) return false;
    return true;
  }

  // Coordinates of v in the RREF basis; nullopt if v is not in the span.
  std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const {
    if (v.size() != ambient_)
      throw std::invalid_argument("vector length != ambient dimension");
    std::vector<Rat> coords(dim(), Rat(0));
    std::vector<Rat> w = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      Rat f = w[pivots_[i]];
      if (f == 0) continue;
      coords[i] = f;
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
    for (const Rat& x : w)
      if (x != 0) return std::nullopt;
    return coords;
  }

 private:
  std::size_t ambient_ = 0;
  DenseMatrix basis_;
  std::vector<std::size_t> pivots_;
};

inline bool subspace_equal(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("subspace_equal: ambient dimension mismatch");
  return u.basis() == v.basis();
}

// Canonical basis of {v : m v = 0}.
inline Subspace kernel_basis(const DenseMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rat>> vecs;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < r.rank; ++i)
      v[r.pivot_cols[i]] = -r.reduced.at(i, free_col);
    vecs.push_back(std::move(v));
  }
  return Subspace::span_of_vectors(vecs, m.cols());
}

}  // namespace syzkit
