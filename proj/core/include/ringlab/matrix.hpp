#ifndef RINGLAB_MATRIX_HPP
#define RINGLAB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ringlab/field.hpp"

namespace ringlab {

/// Dense matrix over a field F. Row-major storage.
template <class F>
class DenseMatrix {
 public:
  using Elem = typename F::Elem;

  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(std::size_t rows, std::size_t cols, Elem fill = Elem{})
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Elem* row(std::size_t r) { return a_.data() + r * cols_; }
  const Elem* row(std::size_t r) const { return a_.data() + r * cols_; }

  void append_row(const std::vector<Elem>& v) {
    if (v.size() != cols_) {
      if (rows_ == 0) cols_ = v.size();
      else throw std::invalid_argument("append_row: width mismatch");
    }
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
  }

  std::vector<Elem> row_vec(std::size_t r) const {
    return std::vector<Elem>(row(r), row(r) + cols_);
  }

  bool operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

template <class F>
struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  DenseMatrix<F> R;
};

/// Reduced row echelon form. Pivot choice: scan columns left to right, take
/// the first row (in order) with a nonzero entry; this fixed rule makes every
/// downstream basis choice reproducible.
template <class F>
RrefResult<F> rref(const F& k, const DenseMatrix<F>& m) {
  RrefResult<F> out;
  out.R = m;
  DenseMatrix<F>& r = out.R;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t c = 0; c < r.cols() && pr < r.rows(); ++c) {
    std::size_t sel = pr;
    while (sel < r.rows() && k.is_zero(r.at(sel, c))) ++sel;
    if (sel == r.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < r.cols(); ++j)
        std::swap(r.at(pr, j), r.at(sel, j));
    // normalize pivot row
    auto piv_inv = k.inv(r.at(pr, c));
    for (std::size_t j = c; j < r.cols(); ++j)
      r.at(pr, j) = k.mul(r.at(pr, j), piv_inv);
    // eliminate the column everywhere else
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pr) continue;
      auto f = r.at(i, c);
      if (k.is_zero(f)) continue;
      for (std::size_t j = c; j < r.cols(); ++j)
        r.at(i, j) = k.sub(r.at(i, j), k.mul(f, r.at(pr, j)));
    }
    out.pivot_columns.push_back(c);
    ++pr;
  }
  out.rank = out.pivot_columns.size();
  return out;
}

template <class F>
std::size_t rank(const F& k, const DenseMatrix<F>& m) {
  return rref(k, m).rank;
}

/// Basis of {v : M v = 0}, canonical form: one vector per non-pivot column,
/// with a 1 in that coordinate and support otherwise only on pivot columns.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& k,
                                                        const DenseMatrix<F>& m) {
  auto rr = rref(k, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<typename F::Elem> v(m.cols(), k.zero());
    v[c] = k.one();
    for (std::size_t i = 0; i < rr.rank; ++i)
      v[rr.pivot_columns[i]] = k.neg(rr.R.at(i, c));
    out.push_back(std::move(v));
  }
  return out;
}

/// Solve M x = b; free coordinates are set to zero. Returns nullopt when the
/// system is inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const F& k,
                                                   const DenseMatrix<F>& m,
                                                   const std::vector<typename F::Elem>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  DenseMatrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto rr = rref(k, aug);
  for (auto c : rr.pivot_columns)
    if (c == m.cols()) return std::nullopt;  // pivot in the RHS column
  std::vector<typename F::Elem> x(m.cols(), k.zero());
  for (std::size_t i = 0; i < rr.rank; ++i)
    x[rr.pivot_columns[i]] = rr.R.at(i, m.cols());
  return x;
}

/// A k-subspace of a fixed coordinate space, kept as the canonical rref basis
/// of its row space.
template <class F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(const F& k, const DenseMatrix<F>& vectors) {
    Subspace s(vectors.cols());
    auto rr = rref(k, vectors);
    for (std::size_t i = 0; i < rr.rank; ++i) s.basis_.append_row(rr.R.row_vec(i));
    if (rr.rank == 0) s.basis_ = DenseMatrix<F>(0, vectors.cols());
    s.pivots_ = rr.pivot_columns;
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const DenseMatrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v modulo the subspace (zero iff v is a member).
  std::vector<Elem> reduce(const F& k, std::vector<Elem> v) const {
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      auto c = v[pivots_[i]];
      if (k.is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        v[j] = k.sub(v[j], k.mul(c, basis_.at(i, j)));
    }
    return v;
  }

  bool contains(const F& k, const std::vector<Elem>& v) const {
    auto r = reduce(k, v);
    for (auto& e : r)
      if (!k.is_zero(e)) return false;
    return true;
  }

  bool contains(const F& k, const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(k, other.basis_.row_vec(i))) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  Subspace sum(const F& k, const Subspace& other) const {
    DenseMatrix<F> stack(0, ambient_);
    for (std::size_t i = 0; i < dim(); ++i) stack.append_row(basis_.row_vec(i));
    for (std::size_t i = 0; i < other.dim(); ++i) stack.append_row(other.basis_.row_vec(i));
    return span(k, stack);
  }

  /// Intersection via the kernel of the concatenated coefficient map.
  Subspace intersect(const F& k, const Subspace& other) const {
    std::size_t d1 = dim(), d2 = other.dim();
    if (d1 == 0 || d2 == 0) return Subspace(ambient_);
    // columns: coefficients (a, b); rows: ambient coordinates of a.B1 - b.B2
    DenseMatrix<F> m(ambient_, d1 + d2);
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t r = 0; r < ambient_; ++r) m.at(r, j) = basis_.at(j, r);
    for (std::size_t j = 0; j < d2; ++j)
      for (std::size_t r = 0; r < ambient_; ++r)
        m.at(r, d1 + j) = k.neg(other.basis_.at(j, r));
    auto ker = kernel_basis(k, m);
    DenseMatrix<F> vecs(0, ambient_);
    for (auto& coef : ker) {
      std::vector<Elem> v(ambient_, k.zero());
      for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t r = 0; r < ambient_; ++r)
          v[r] = k.add(v[r], k.mul(coef[j], basis_.at(j, r)));
      vecs.append_row(v);
    }
    return span(k, vecs);
  }

 private:
  std::size_t ambient_;
  DenseMatrix<F> basis_;  // rref rows
  std::vector<std::size_t> pivots_;
};

}  // namespace ringlab

#endif
