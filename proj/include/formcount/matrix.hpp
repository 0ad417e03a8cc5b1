#pragma once

// 2x2 invertible matrices over GF(p) (the acting group) and small dense
// matrices over any finite field (companion matrices, span tests).

#include "formcount/finitefield.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace formcount {

/// An element of GL(2,p), row-major [[a,b],[c,d]].
class Mat2 {
 public:
  Mat2(const PrimeField& field, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
      : f_(field), a_(f_.from_int(a)), b_(f_.from_int(b)), c_(f_.from_int(c)), d_(f_.from_int(d)) {
    if (det() == 0) throw std::invalid_argument("Mat2: singular matrix " + to_string());
  }

  static Mat2 identity(const PrimeField& f) { return {f, 1, 0, 0, 1}; }
  static Mat2 scalar(const PrimeField& f, std::uint64_t lambda) {
    const auto l = static_cast<std::int64_t>(lambda);
    return {f, l, 0, 0, l};
  }
  static Mat2 diagonal(const PrimeField& f, std::uint64_t x, std::uint64_t y) {
    return {f, static_cast<std::int64_t>(x), 0, 0, static_cast<std::int64_t>(y)};
  }

  const PrimeField& field() const { return f_; }
  std::uint64_t a() const { return a_; }
  std::uint64_t b() const { return b_; }
  std::uint64_t c() const { return c_; }
  std::uint64_t d() const { return d_; }

  std::uint64_t det() const { return f_.sub(f_.mul(a_, d_), f_.mul(b_, c_)); }
  std::uint64_t trace() const { return f_.add(a_, d_); }
  bool is_scalar() const { return b_ == 0 && c_ == 0 && a_ == d_; }

  friend Mat2 operator*(const Mat2& g, const Mat2& h) {
    if (!(g.f_ == h.f_)) throw std::invalid_argument("Mat2: operands over different fields");
    const PrimeField& f = g.f_;
    auto s = [&](std::uint64_t x1, std::uint64_t y1, std::uint64_t x2, std::uint64_t y2) {
      return static_cast<std::int64_t>(f.add(f.mul(x1, y1), f.mul(x2, y2)));
    };
    return {f, s(g.a_, h.a_, g.b_, h.c_), s(g.a_, h.b_, g.b_, h.d_), s(g.c_, h.a_, g.d_, h.c_),
            s(g.c_, h.b_, g.d_, h.d_)};
  }

  Mat2 pow(std::uint64_t k) const {
    Mat2 result = identity(f_), base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      base = base * base;
      k >>= 1U;
    }
    return result;
  }

  Mat2 inverse() const {
    const auto di = f_.inv(det());
    auto e = [&](std::uint64_t v) { return static_cast<std::int64_t>(f_.mul(v, di)); };
    return {f_, e(d_), e(f_.neg(b_)), e(f_.neg(c_)), e(a_)};
  }

  std::string to_string() const {
    return "[[" + std::to_string(a_) + "," + std::to_string(b_) + "],[" + std::to_string(c_) + "," +
           std::to_string(d_) + "]]";
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  PrimeField f_;
  std::uint64_t a_, b_, c_, d_;
};

/// Dense row-major matrix over a finite field.
template <FiniteField F>
class Matrix {
 public:
  Matrix(F field, std::size_t rows, std::size_t cols)
      : f_(std::move(field)), rows_(rows), cols_(cols), v_(rows * cols, 0) {}

  const F& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
  }

  /// Rank by Gaussian elimination.
  std::size_t rank() const {
    Matrix m = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
      std::size_t piv = r;
      while (piv < rows_ && m(piv, col) == 0) ++piv;
      if (piv == rows_) continue;
      m.swap_rows(piv, r);
      const auto inv = f_.inv(m(r, col));
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (m(i, col) == 0) continue;
        const auto u = f_.mul(m(i, col), inv);
        for (std::size_t j = col; j < cols_; ++j) m(i, j) = f_.sub(m(i, j), f_.mul(u, m(r, j)));
      }
      ++r;
    }
    return r;
  }

  /// Characteristic polynomial det(xI - M) via Hessenberg reduction.
  Polynomial<F> charpoly() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::charpoly: matrix is not square");
    const std::size_t n = rows_;
    Matrix h = *this;
    for (std::size_t m = 1; m + 1 < n; ++m) {
      std::size_t i = m;
      while (i < n && h(i, m - 1) == 0) ++i;
      if (i == n) continue;
      if (i != m) {
        h.swap_rows(i, m);
        h.swap_cols(i, m);
      }
      const auto t_inv = f_.inv(h(m, m - 1));
      for (i = m + 1; i < n; ++i) {
        if (h(i, m - 1) == 0) continue;
        const auto u = f_.mul(h(i, m - 1), t_inv);
        for (std::size_t j = 0; j < n; ++j) h(i, j) = f_.sub(h(i, j), f_.mul(u, h(m, j)));
        for (std::size_t j = 0; j < n; ++j) h(j, m) = f_.add(h(j, m), f_.mul(u, h(j, i)));
      }
    }
    // p[k] is the characteristic polynomial of the leading k x k block.
    using P = Polynomial<F>;
    std::vector<P> p{P::constant(f_, f_.one())};
    const P x = P::x(f_);
    for (std::size_t m = 1; m <= n; ++m) {
      P pm = (x - P::constant(f_, h(m - 1, m - 1))) * p[m - 1];
      std::uint64_t t = f_.one();
      for (std::size_t i = 1; i < m; ++i) {
        t = f_.mul(t, h(m - i, m - i - 1));
        pm = pm - p[m - i - 1].scaled(f_.mul(t, h(m - i - 1, m - 1)));
      }
      p.push_back(std::move(pm));
    }
    return p[n];
  }

 private:
  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }

  F f_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> v_;
};

}  // namespace formcount
