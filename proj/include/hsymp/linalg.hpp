#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "hsymp/rational.hpp"

namespace hsymp {

using RatVec = std::vector<Rational>;

RatVec zero_vec(std::size_t n);
RatVec basis_vec(std::size_t n, std::size_t i);
bool is_zero(const RatVec& v);
RatVec add(const RatVec& u, const RatVec& v);
RatVec sub(const RatVec& u, const RatVec& v);
RatVec scale(const Rational& c, const RatVec& v);

/// Dense matrix over exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RatMatrix identity(std::size_t n);
  /// Row-major construction from long literals, for tests and fixtures.
  static RatMatrix from_ints(std::size_t rows, std::size_t cols,
                             std::initializer_list<long> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;
  RatVec col(std::size_t j) const;
  RatMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator-() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatVec operator*(const RatVec& v) const;
  friend RatMatrix operator*(const Rational& c, const RatMatrix& m);
  bool operator==(const RatMatrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Builds a matrix whose rows are the given vectors (all the same length).
RatMatrix from_rows(const std::vector<RatVec>& rows);

/// Reduced row echelon form; drops zero rows, so the result's row count is
/// the rank.
RatMatrix rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Rows of the result form a basis of {v : m v = 0}.
RatMatrix nullspace(const RatMatrix& m);

Rational det(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Sylvester signature of a symmetric matrix by rational congruence
/// diagonalization; no floating point involved.
Signature congruence_signature(const RatMatrix& symmetric);

}  // namespace hsymp
