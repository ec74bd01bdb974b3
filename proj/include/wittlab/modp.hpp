#pragma once

// Prime-field arithmetic and the exact linear algebra used by the
// character-table engine.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "wittlab/error.hpp"

namespace wittlab::modp {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic in F_p for p < 2^31 (products fit in 64 bits).
class Field {
 public:
  explicit Field(u64 p) : p_(p) {
    if (!is_prime(p) || p >= (u64{1} << 31))
      throw PreconditionError("modulus must be a prime below 2^31");
  }

  u64 p() const noexcept { return p_; }

  u64 add(u64 a, u64 b) const noexcept {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const noexcept { return (a * b) % p_; }

  u64 pow(u64 a, u64 e) const noexcept {
    u64 r = 1 % p_;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  u64 inv(u64 a) const {
    if (a % p_ == 0) throw ComputationError("division by zero in F_p");
    return pow(a, p_ - 2);
  }

  u64 from_int(std::int64_t v) const noexcept {
    auto m = static_cast<std::int64_t>(p_);
    auto r = v % m;
    return static_cast<u64>(r < 0 ? r + m : r);
  }

  /// Symmetric lift into (-p/2, p/2].
  std::int64_t to_signed(u64 a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_)
                      : static_cast<std::int64_t>(a);
  }

 private:
  u64 p_;
};

/// Smallest prime p with p = 1 (mod exponent) and p > 2 * order.
inline u64 select_prime(u64 exponent, u64 order) {
  if (exponent == 0) throw PreconditionError("exponent must be positive");
  u64 k = (2 * order) / exponent + 1;
  for (;; ++k) {
    u64 p = k * exponent + 1;
    if (p > (u64{1} << 31)) throw ComputationError("no suitable prime below 2^31");
    if (p > 2 * order && is_prime(p)) return p;
  }
}

/// Smallest generator of the multiplicative group of F_p.
inline u64 primitive_root(u64 p) {
  Field f(p);
  if (p == 2) return 1;
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](u64 q) { return f.pow(g, (p - 1) / q) != 1; });
    if (ok) return g;
  }
  throw ComputationError("no primitive root found");
}

/// Row-major dense matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  u64& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  u64 operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<u64> data_;
};

/// Brings `rows` into reduced row-echelon form in place and drops zero rows.
/// Returns the pivot column of each surviving row.
inline std::vector<std::size_t> rref(const Field& f, std::vector<Vec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    u64 s = f.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = f.mul(x, s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      u64 m = rows[r][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] = f.sub(rows[r][c], f.mul(m, rows[rank][c]));
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

/// Basis of the right kernel {x : M x = 0}.
inline std::vector<Vec> nullspace(const Field& f, const Matrix& m) {
  std::vector<Vec> rows(m.rows(), Vec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  auto pivots = rref(f, rows);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(rows[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Characteristic polynomial det(xI - M), coefficients from constant term
/// upward, via similarity reduction to upper Hessenberg form.
inline Vec charpoly(const Field& f, Matrix h) {
  const std::size_t n = h.rows();
  if (n != h.cols()) throw PreconditionError("charpoly needs a square matrix");
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      h.swap_rows(i, m);
      h.swap_cols(i, m);
    }
    u64 pinv = f.inv(h(m, m - 1));
    for (std::size_t k = m + 1; k < n; ++k) {
      u64 u = f.mul(h(k, m - 1), pinv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(k, j) = f.sub(h(k, j), f.mul(u, h(m, j)));
      for (std::size_t j = 0; j < n; ++j) h(j, m) = f.add(h(j, m), f.mul(u, h(j, k)));
    }
  }
  // p_{m+1} = (x - h_mm) p_m - sum_{i<m} h_im * (prod_{j=i+1..m} h_{j,j-1}) p_i
  std::vector<Vec> polys{Vec{1}};
  for (std::size_t m = 0; m < n; ++m) {
    const Vec& pm = polys[m];
    Vec next(m + 2, 0);
    for (std::size_t d = 0; d < pm.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], pm[d]);
      next[d] = f.sub(next[d], f.mul(h(m, m), pm[d]));
    }
    u64 t = 1;
    for (std::size_t ii = m; ii-- > 0;) {
      t = f.mul(t, h(ii + 1, ii));
      if (t == 0) break;
      u64 c = f.mul(h(ii, m), t);
      if (c == 0) continue;
      for (std::size_t d = 0; d < polys[ii].size(); ++d)
        next[d] = f.sub(next[d], f.mul(c, polys[ii][d]));
    }
    polys.push_back(std::move(next));
  }
  return polys.back();
}

inline u64 evaluate(const Field& f, const Vec& poly, u64 x) {
  u64 r = 0;
  for (std::size_t d = poly.size(); d-- > 0;) r = f.add(f.mul(r, x), poly[d]);
  return r;
}

/// All distinct roots in F_p, ascending, found by exhaustive evaluation.
inline std::vector<u64> roots(const Field& f, const Vec& poly) {
  std::vector<u64> out;
  std::size_t degree = poly.size() - 1;
  for (u64 x = 0; x < f.p() && out.size() < degree; ++x)
    if (evaluate(f, poly, x) == 0) out.push_back(x);
  return out;
}

}  // namespace wittlab::modp
