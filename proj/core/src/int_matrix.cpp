#include "omn/int_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "omn/errors.hpp"

namespace omn {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<BigInt>>& columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InvalidInput("columns of unequal length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
  std::vector<BigInt> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t target, std::size_t source, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col(std::size_t target, std::size_t source, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw InvalidInput("determinant of a non-square matrix");
  std::vector<Rational> a(data_.begin(), data_.end());
  const std::size_t n = rows_;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot * n + col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      det = -det;
    }
    det *= a[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = a[r * n + col] / a[col * n + col];
      if (sgn(f) == 0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
    }
  }
  return det.get_num();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
  }
  os << "]";
  return os.str();
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

namespace {

/// Position of a nonzero entry of least absolute value in the block [t.., t..].
bool least_entry(const IntMatrix& d, std::size_t t, std::size_t& row, std::size_t& col) {
  bool found = false;
  for (std::size_t r = t; r < d.rows(); ++r)
    for (std::size_t c = t; c < d.cols(); ++c) {
      if (d(r, c) == 0) continue;
      if (!found || abs(d(r, c)) < abs(d(row, col))) {
        row = r;
        col = c;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = s.D;
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t row = t, col = t;
    if (!least_entry(d, t, row, col)) break;
    for (;;) {
      d.swap_rows(t, row);
      s.U.swap_rows(t, row);
      d.swap_cols(t, col);
      s.V.swap_cols(t, col);
      bool clean = true;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        const BigInt q = d(r, t) / d(t, t);
        d.add_row(r, t, -q);
        s.U.add_row(r, t, -q);
        if (d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        const BigInt q = d(t, c) / d(t, t);
        d.add_col(c, t, -q);
        s.V.add_col(c, t, -q);
        if (d(t, c) != 0) clean = false;
      }
      if (clean) {
        // the pivot must divide the remaining block
        for (std::size_t r = t + 1; r < d.rows() && clean; ++r)
          for (std::size_t c = t + 1; c < d.cols(); ++c)
            if (mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t()) == 0) {
              d.add_row(t, r, 1);
              s.U.add_row(t, r, 1);
              clean = false;
              break;
            }
      }
      if (clean) break;
      least_entry(d, t, row, col);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> a(n * 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r * 2 * n + c] = m(r, c);
    a[r * 2 * n + n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot * 2 * n + col]) == 0) ++pivot;
    if (pivot == n) throw InvalidInput("matrix is singular");
    for (std::size_t c = 0; c < 2 * n; ++c) std::swap(a[pivot * 2 * n + c], a[col * 2 * n + c]);
    const Rational inv = 1 / a[col * 2 * n + col];
    for (std::size_t c = 0; c < 2 * n; ++c) a[col * 2 * n + c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rational f = a[r * 2 * n + col];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < 2 * n; ++c) a[r * 2 * n + c] -= f * a[col * 2 * n + c];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& v = a[r * 2 * n + n + c];
      if (v.get_den() != 1) throw InvalidInput("matrix is not unimodular");
      out(r, c) = v.get_num();
    }
  return out;
}

}  // namespace omn
