#include "hsymp/linalg.hpp"

#include <utility>

namespace hsymp {

RatVec zero_vec(std::size_t n) { return RatVec(n); }

RatVec basis_vec(std::size_t n, std::size_t i) {
  RatVec v(n);
  v[i] = 1;
  return v;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

RatVec add(const RatVec& u, const RatVec& v) {
  RatVec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
  return w;
}

RatVec sub(const RatVec& u, const RatVec& v) {
  RatVec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
  return w;
}

RatVec scale(const Rational& c, const RatVec& v) {
  RatVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = c * v[i];
  return w;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) throw input_error("matrix entry count does not match shape");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_ints(std::size_t rows, std::size_t cols,
                               std::initializer_list<long> entries) {
  RatMatrix m(rows, cols);
  std::size_t k = 0;
  for (long e : entries) m.a_[k++] = e;
  if (k != rows * cols) throw input_error("matrix literal count does not match shape");
  return m;
}

RatVec RatMatrix::row(std::size_t i) const {
  return RatVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

RatVec RatMatrix::col(std::size_t j) const {
  RatVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RatMatrix::is_antisymmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  RatMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  RatMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& y = o.at(k, j);
        if (sgn(y) != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

RatVec RatMatrix::operator*(const RatVec& v) const {
  RatVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& x = at(i, j);
      if (sgn(x) != 0 && sgn(v[j]) != 0) r[i] += x * v[j];
    }
  return r;
}

RatMatrix operator*(const Rational& c, const RatMatrix& m) {
  RatMatrix r(m.rows_, m.cols_);
  for (std::size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = c * m.a_[k];
  return r;
}

RatMatrix from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return RatMatrix(0, 0);
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw input_error("ragged rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix rref(const RatMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  RatMatrix w = m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && sgn(w.at(sel, col)) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < cols; ++j) swap(w.at(sel, j), w.at(pivot_row, j));
    const Rational inv_pivot = 1 / w.at(pivot_row, col);
    for (std::size_t j = col; j < cols; ++j) w.at(pivot_row, j) *= inv_pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || sgn(w.at(r, col)) == 0) continue;
      const Rational f = w.at(r, col);
      for (std::size_t j = col; j < cols; ++j) w.at(r, j) -= f * w.at(pivot_row, j);
    }
    ++pivot_row;
  }
  RatMatrix out(pivot_row, cols);
  for (std::size_t i = 0; i < pivot_row; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = w.at(i, j);
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rows(); }

RatMatrix nullspace(const RatMatrix& m) {
  const RatMatrix r = rref(m);
  const std::size_t n = m.cols();
  std::vector<std::size_t> pivot_col(r.rows());
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t j = 0;
    while (j < n && sgn(r.at(i, j)) == 0) ++j;
    pivot_col[i] = j;
    is_pivot[j] = true;
  }
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rows(); ++i) v[pivot_col[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return RatMatrix(0, n);
  return from_rows(basis);
}

Rational det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw input_error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix w = m;
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && sgn(w.at(sel, col)) == 0) ++sel;
    if (sel == n) return Rational(0);
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) swap(w.at(sel, j), w.at(col, j));
      d = -d;
    }
    d *= w.at(col, col);
    const Rational inv_pivot = 1 / w.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(w.at(r, col)) == 0) continue;
      const Rational f = w.at(r, col) * inv_pivot;
      for (std::size_t j = col; j < n; ++j) w.at(r, j) -= f * w.at(col, j);
    }
  }
  return d;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw input_error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const RatMatrix r = rref(aug);
  if (r.rows() < n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r.at(i, j) != (i == j ? 1 : 0)) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

namespace {

// Symmetric row+column update w += f * (row/col k), keeping symmetry.
void add_row_col(RatMatrix& w, std::size_t i, std::size_t k, const Rational& f) {
  const std::size_t n = w.rows();
  for (std::size_t j = 0; j < n; ++j) w.at(i, j) += f * w.at(k, j);
  for (std::size_t j = 0; j < n; ++j) w.at(j, i) += f * w.at(j, k);
}

}  // namespace

Signature congruence_signature(const RatMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw input_error("signature of non-symmetric matrix");
  const std::size_t n = symmetric.rows();
  RatMatrix w = symmetric;
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(w.at(k, k)) == 0) {
      std::size_t swap_with = n;
      for (std::size_t r = k + 1; r < n; ++r)
        if (sgn(w.at(r, r)) != 0) {
          swap_with = r;
          break;
        }
      if (swap_with < n) {
        for (std::size_t j = 0; j < n; ++j) swap(w.at(k, j), w.at(swap_with, j));
        for (std::size_t j = 0; j < n; ++j) swap(w.at(j, k), w.at(j, swap_with));
      } else {
        std::size_t mate = n;
        for (std::size_t r = k + 1; r < n; ++r)
          if (sgn(w.at(k, r)) != 0) {
            mate = r;
            break;
          }
        if (mate == n) {
          ++sig.zero;
          continue;
        }
        add_row_col(w, k, mate, Rational(1));
      }
    }
    const Rational pivot = w.at(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(w.at(r, k)) == 0) continue;
      add_row_col(w, r, k, -w.at(r, k) / pivot);
    }
    if (sgn(pivot) > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

}  // namespace hsymp
