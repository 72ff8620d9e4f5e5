#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trilie/rational.hpp"

namespace trilie {

/// Coordinate vector over the rationals.
using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec basis_vec(std::size_t n, std::size_t i);
bool vzero(const Vec& a);
Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vscale(const Rational& c, const Vec& a);
/// a += c*b, in place.
void vaxpy(Vec& a, const Rational& c, const Vec& b);
std::string to_string(const Vec& a);

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_cols(const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);
  void set_col(std::size_t c, const Vec& v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix mul(const Matrix& a, const Matrix& b);
Vec mul(const Matrix& a, const Vec& x);
Matrix madd(const Matrix& a, const Matrix& b);
Matrix msub(const Matrix& a, const Matrix& b);
Matrix mscale(const Rational& c, const Matrix& a);
Matrix transpose(const Matrix& a);
std::string to_string(const Matrix& a);

/// Result of Gauss-Jordan elimination: the unique reduced row-echelon form,
/// pivot columns in increasing order, and the rank.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Fully reduced row-echelon form. Deterministic: pivots are chosen as the
/// first row with a nonzero entry, scanning columns left to right.
Echelon rref(Matrix m);

/// Rank via rref().
std::size_t rank(const Matrix& m);

/// Rank by an independent elimination route: fraction-free Bareiss
/// elimination run on the matrix with row and column order reversed (rows
/// are cleared of denominators first; neither step changes the rank).
/// Always agrees with rank(); having two routes makes that checkable.
std::size_t rank_bareiss_reversed(const Matrix& m);

/// A linear subspace of Q^ambient, stored as its unique canonical basis:
/// the nonzero rows of the reduced row-echelon form of any spanning set.
/// Equal subspaces therefore compare equal representation-wise.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
  /// Exact membership test by reduction against the canonical basis.
  bool contains(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;
};

/// Canonical subspace spanned by the given vectors.
Subspace span_of(std::size_t ambient, const std::vector<Vec>& vectors);

/// Null space {x : m x = 0}, canonical basis.
Subspace kernel(const Matrix& m);

/// Column space of m, canonical basis.
Subspace column_space(const Matrix& m);

/// One exact solution of m x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Determinant of a square matrix (throws DimensionMismatch otherwise).
Rational determinant(Matrix m);

/// Inverse of a square matrix; throws NotInvertible if singular.
Matrix inverse(const Matrix& m);

/// dim(whole) - dim(sub), after verifying sub really is contained in whole.
/// Throws NotASubspace if it is not, DimensionMismatch on distinct ambients.
std::size_t quotient_dim(const Subspace& whole, const Subspace& sub);

} // namespace trilie
