#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torlens/base.hpp"
#include "torlens/polynomial.hpp"

namespace torlens {

// Dense matrix over arbitrary-precision integers, row-major storage.
// Zero-dimensional matrices are legal (they arise as exterior powers).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) {
        throw std::invalid_argument("from_rows: ragged rows");
      }
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) {
      throw std::invalid_argument("matrix product: dimension mismatch");
    }
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& aik = at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          out.at(i, j) += aik * o.at(k, j);
        }
      }
    }
    return out;
  }

  IntMatrix operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument("matrix sum: dimension mismatch");
    }
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      out.data_[i] = data_[i] + o.data_[i];
    }
    return out;
  }

  IntMatrix operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument("matrix difference: dimension mismatch");
    }
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      out.data_[i] = data_[i] - o.data_[i];
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += (i == 0) ? "[" : ", [";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j > 0) out += ", ";
        out += at(i, j).str();
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

inline IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const IntMatrix& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  IntMatrix out(r, c);
  std::size_t ro = 0, co = 0;
  for (const IntMatrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(ro + i, co + j) = b.at(i, j);
      }
    }
    ro += b.rows();
    co += b.cols();
  }
  return out;
}

inline IntMatrix matrix_power(const IntMatrix& a, Int e) {
  if (!a.is_square()) {
    throw std::invalid_argument("matrix_power: matrix must be square");
  }
  if (e < 0) throw std::domain_error("matrix_power: negative exponent");
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (e > 0) {
    if ((e & 1) != 0) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

// Fraction-free (Bareiss) determinant with row pivoting; every intermediate
// entry is a minor of the input, so the divisions are exact.
inline Int determinant(const IntMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("determinant: matrix must be square");
  }
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      }
      if (piv == n) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        if (num % prev != 0) {
          throw InternalConsistencyError("determinant: inexact division");
        }
        m.at(i, j) = num / prev;
      }
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

// Rank over the rationals, by division-free elimination with per-row gcd
// normalization to keep entries small.
inline std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t r = m.rows(), c = m.cols();
  std::size_t rk = 0;
  for (std::size_t col = 0; col < c && rk < r; ++col) {
    std::size_t piv = r;
    for (std::size_t i = rk; i < r; ++i) {
      if (m.at(i, col) != 0 &&
          (piv == r || abs(m.at(i, col)) < abs(m.at(piv, col)))) {
        piv = i;
      }
    }
    if (piv == r) continue;
    m.swap_rows(rk, piv);
    for (std::size_t i = rk + 1; i < r; ++i) {
      if (m.at(i, col) == 0) continue;
      const Int g = gcd(m.at(rk, col), m.at(i, col));
      const Int fr = m.at(i, col) / g;
      const Int fp = m.at(rk, col) / g;
      m.at(i, col) = 0;
      Int rowg = 0;
      for (std::size_t j = col + 1; j < c; ++j) {
        m.at(i, j) = m.at(i, j) * fp - m.at(rk, j) * fr;
        rowg = gcd(rowg, m.at(i, j));
      }
      if (rowg > 1) {
        for (std::size_t j = col + 1; j < c; ++j) m.at(i, j) /= rowg;
      }
    }
    ++rk;
  }
  return rk;
}

inline long long rational_kernel_rank(const IntMatrix& a) {
  return static_cast<long long>(a.cols()) - static_cast<long long>(rank(a));
}

// u * a * v == d with u, v unimodular and d diagonal; diagonal holds the
// invariant factors (nonnegative, each dividing the next, zeros trailing).
struct SnfDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::vector<Int> diagonal;
};

inline SnfDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);

  auto row_swap = [&](std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    u.swap_rows(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    v.swap_cols(i, j);
  };
  // row dst -= q * row src, as left-multiplication by an elementary matrix
  auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < c; ++j) d.at(dst, j) -= q * d.at(src, j);
    for (std::size_t j = 0; j < r; ++j) u.at(dst, j) -= q * u.at(src, j);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < r; ++i) d.at(i, dst) -= q * d.at(i, src);
    for (std::size_t i = 0; i < c; ++i) v.at(i, dst) -= q * v.at(i, src);
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t j = 0; j < c; ++j) d.at(i, j) = -d.at(i, j);
    for (std::size_t j = 0; j < r; ++j) u.at(i, j) = -u.at(i, j);
  };

  const std::size_t t_max = std::min(r, c);
  for (std::size_t t = 0; t < t_max; ++t) {
    bool submatrix_zero = false;
    for (;;) {
      // Pick the smallest-magnitude nonzero entry as pivot; this keeps the
      // quotients and the transforms small.
      bool found = false;
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < r; ++i) {
        for (std::size_t j = t; j < c; ++j) {
          if (d.at(i, j) == 0) continue;
          if (!found || abs(d.at(i, j)) < abs(d.at(bi, bj))) {
            bi = i;
            bj = j;
            found = true;
          }
        }
      }
      if (!found) {
        submatrix_zero = true;
        break;
      }
      row_swap(t, bi);
      col_swap(t, bj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d.at(i, t) == 0) continue;
        const Int q = d.at(i, t) / d.at(t, t);
        if (q != 0) row_axpy(i, t, q);
        if (d.at(i, t) != 0) dirty = true;  // remainder smaller than pivot
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d.at(t, j) == 0) continue;
        const Int q = d.at(t, j) / d.at(t, t);
        if (q != 0) col_axpy(j, t, q);
        if (d.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot divides its row and column; force it to divide the rest of
      // the submatrix so the diagonal forms a divisibility chain.
      bool fixed = false;
      for (std::size_t i = t + 1; i < r && !fixed; ++i) {
        for (std::size_t j = t + 1; j < c && !fixed; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_axpy(t, i, Int(-1));  // row t += row i
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
    if (submatrix_zero) break;
    if (d.at(t, t) < 0) row_negate(t);
  }

  SnfDecomposition out{std::move(u), std::move(d), std::move(v), {}};
  out.diagonal.reserve(t_max);
  for (std::size_t i = 0; i < t_max; ++i) out.diagonal.push_back(out.d.at(i, i));

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (i != j && out.d.at(i, j) != 0) {
        throw InternalConsistencyError("smith_normal_form: not diagonal");
      }
    }
  }
  for (std::size_t i = 0; i + 1 < t_max; ++i) {
    const Int& a0 = out.diagonal[i];
    const Int& a1 = out.diagonal[i + 1];
    if (a0 < 0 || a1 < 0 || (a0 == 0 && a1 != 0) ||
        (a0 != 0 && a1 != 0 && a1 % a0 != 0)) {
      throw InternalConsistencyError(
          "smith_normal_form: diagonal is not a divisibility chain");
    }
  }
  return out;
}

// All strictly increasing j-element index tuples from {0, ..., n-1}, in
// lexicographic order.  j == 0 yields the single empty tuple.
inline std::vector<std::vector<std::size_t>> lex_subsets(std::size_t n,
                                                         std::size_t j) {
  std::vector<std::vector<std::size_t>> out;
  if (j > n) return out;
  std::vector<std::size_t> cur(j);
  std::iota(cur.begin(), cur.end(), std::size_t{0});
  for (;;) {
    out.push_back(cur);
    std::size_t i = j;
    while (i > 0 && cur[i - 1] == n - j + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t t = i; t < j; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

// Matrix of all j-by-j minors; row and column subsets run in lexicographic
// order, so the result is the induced map on the j-th exterior power.
inline IntMatrix exterior_power(const IntMatrix& a, std::size_t j) {
  if (j > std::max(a.rows(), a.cols())) {
    throw std::domain_error("exterior_power: index out of range");
  }
  const auto rsub = lex_subsets(a.rows(), j);
  const auto csub = lex_subsets(a.cols(), j);
  IntMatrix out(rsub.size(), csub.size());
  IntMatrix minor(j, j);
  for (std::size_t ri = 0; ri < rsub.size(); ++ri) {
    for (std::size_t ci = 0; ci < csub.size(); ++ci) {
      for (std::size_t x = 0; x < j; ++x) {
        for (std::size_t y = 0; y < j; ++y) {
          minor.at(x, y) = a.at(rsub[ri][x], csub[ci][y]);
        }
      }
      out.at(ri, ci) = determinant(minor);
    }
  }
  return out;
}

// det(x*I - a) by the Faddeev-LeVerrier recursion; all divisions are exact
// over the integers.  Coefficients are returned lowest degree first.
inline IntPolynomial characteristic_polynomial(const IntMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument(
        "characteristic_polynomial: matrix must be square");
  }
  const std::size_t n = a.rows();
  std::vector<Int> coeffs(n + 1);
  coeffs[n] = 1;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const IntMatrix am = a * m;
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i);
    if (tr % Int(k) != 0) {
      throw InternalConsistencyError(
          "characteristic_polynomial: inexact trace division");
    }
    const Int ck = -tr / Int(k);
    coeffs[n - k] = ck;
    if (k < n) {
      m = am;
      for (std::size_t i = 0; i < n; ++i) m.at(i, i) += ck;
    }
  }
  return IntPolynomial(std::move(coeffs));
}

// Exact inverse of a matrix with determinant +-1.
inline IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("inverse_unimodular: matrix must be square");
  }
  const Int det = determinant(a);
  if (det != 1 && det != -1) {
    throw std::domain_error("inverse_unimodular: determinant is not +-1");
  }
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a.at(i, j));
    m[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) {
      throw InternalConsistencyError("inverse_unimodular: singular pivot");
    }
    std::swap(m[k], m[piv]);
    const Rational scale = m[k][k];
    for (std::size_t j = k; j < 2 * n; ++j) m[k][j] /= scale;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      const Rational f = m[i][k];
      for (std::size_t j = k; j < 2 * n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = m[i][n + j];
      if (denominator(q) != 1) {
        throw InternalConsistencyError("inverse_unimodular: non-integer entry");
      }
      inv.at(i, j) = numerator(q);
    }
  }
  if (a * inv != IntMatrix::identity(n)) {
    throw InternalConsistencyError("inverse_unimodular: verification failed");
  }
  return inv;
}

}  // namespace torlens
