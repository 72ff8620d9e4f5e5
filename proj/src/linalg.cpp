#include "trilie/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "trilie/errors.hpp"

namespace trilie {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool vzero(const Vec& a) {
  return std::all_of(a.begin(), a.end(),
                     [](const Rational& x) { return x == 0; });
}

namespace {

void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("vector sizes " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()));
  }
}

} // namespace

Vec vadd(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vsub(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vscale(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

void vaxpy(Vec& a, const Rational& c, const Vec& b) {
  require_same_size(a, b);
  if (c == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

std::string to_string(const Vec& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << a[i];
  }
  os << ")";
  return os.str();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols) {
  if (cols.empty()) return Matrix();
  Matrix m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw DimensionMismatch("set_row length");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void Matrix::set_col(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw DimensionMismatch("set_col length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& x) { return x == 0; });
}

Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shapes");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

Vec mul(const Matrix& a, const Vec& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shapes");
  Vec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0 && x[j] != 0) r[i] += a(i, j) * x[j];
    }
  }
  return r;
}

Matrix madd(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix sum shapes");
  }
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix msub(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix difference shapes");
  }
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Matrix mscale(const Rational& c, const Matrix& a) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

std::string to_string(const Matrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? "\n" : "") << "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ", ";
      os << a(i, j);
    }
    os << "]";
  }
  return os.str();
}

Echelon rref(Matrix m) {
  Echelon e;
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < nc && lead < nr; ++c) {
    // First row at or below `lead` with a nonzero entry in column c.
    std::size_t p = lead;
    while (p < nr && m(p, c) == 0) ++p;
    if (p == nr) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < nc; ++j) std::swap(m(p, j), m(lead, j));
    }
    const Rational inv = Rational(1) / m(lead, c);
    for (std::size_t j = c; j < nc; ++j) m(lead, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == lead || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < nc; ++j) m(i, j) -= f * m(lead, j);
    }
    e.pivots.push_back(c);
    ++lead;
  }
  e.rank = e.pivots.size();
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::size_t rank_bareiss_reversed(const Matrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  // Reverse row and column order, then clear denominators row by row so the
  // elimination below can stay in integers throughout.
  std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < nc; ++j) {
      l = lcm(l, denominator(m(nr - 1 - i, nc - 1 - j)));
    }
    for (std::size_t j = 0; j < nc; ++j) {
      const Rational& q = m(nr - 1 - i, nc - 1 - j);
      a[i][j] = numerator(q) * (l / denominator(q));
    }
  }
  // Bareiss fraction-free elimination: every inner division is exact.
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient) throw DimensionMismatch("membership ambient");
  Vec w = v;
  // Each canonical basis row has a leading 1 in a column where every other
  // row is 0, so one pass of eliminations decides membership.
  for (const Vec& b : basis) {
    std::size_t lead = 0;
    while (lead < b.size() && b[lead] == 0) ++lead;
    if (lead == b.size()) continue;
    vaxpy(w, -w[lead], b);
  }
  return vzero(w);
}

Subspace span_of(std::size_t ambient, const std::vector<Vec>& vectors) {
  for (const Vec& v : vectors) {
    if (v.size() != ambient) throw DimensionMismatch("span ambient");
  }
  Subspace s;
  s.ambient = ambient;
  if (vectors.empty()) return s;
  Echelon e = rref(Matrix::from_rows(vectors));
  for (std::size_t i = 0; i < e.rank; ++i) s.basis.push_back(e.reduced.row(i));
  return s;
}

Subspace kernel(const Matrix& m) {
  Echelon e = rref(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < nc; ++j) {
    if (is_pivot[j]) continue;
    Vec v(nc);
    v[j] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      v[e.pivots[i]] = -e.reduced(i, j);
    }
    gens.push_back(std::move(v));
  }
  return span_of(nc, gens);
}

Subspace column_space(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  return span_of(m.rows(), cols);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve rhs length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug));
  Vec x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt; // pivot in the rhs column
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

Rational determinant(Matrix m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = Rational(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  // Invertible iff the left block reduced to the identity.
  if (e.rank < n || e.pivots[n - 1] >= n) {
    throw NotInvertible("matrix of rank " + std::to_string(rank(m)));
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::size_t quotient_dim(const Subspace& whole, const Subspace& sub) {
  if (whole.ambient != sub.ambient) {
    throw DimensionMismatch("quotient ambients differ");
  }
  for (const Vec& v : sub.basis) {
    if (!whole.contains(v)) {
      throw NotASubspace("quotient by a non-subspace");
    }
  }
  return whole.dim() - sub.dim();
}

} // namespace trilie
