#ifndef XHERM_WRONSKIAN_HPP
#define XHERM_WRONSKIAN_HPP

#include <utility>
#include <vector>

#include "xherm/int_poly.hpp"

namespace xherm {

using PolyMatrix = std::vector<std::vector<IntPoly>>;

namespace detail {

inline IntPoly det2(const IntPoly& a, const IntPoly& b, const IntPoly& c, const IntPoly& d) {
  return a * d - b * c;
}

inline IntPoly det3(const PolyMatrix& m) {
  return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
         m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
         m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

// Fraction-free Gaussian elimination. Every division by the previous pivot is
// exact in Z[x]; a zero pivot is replaced by a row swap.
inline IntPoly bareiss(PolyMatrix m) {
  const std::size_t n = m.size();
  bool negate = false;
  IntPoly prev = IntPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = divexact(t, prev);
      }
    }
    prev = m[k][k];
  }
  IntPoly d = std::move(m[n - 1][n - 1]);
  return negate ? -d : d;
}

}  // namespace detail

// Determinant of a square matrix of polynomials. Cofactor expansion up to
// 3x3, Bareiss elimination beyond.
inline IntPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant: matrix is not square");
  switch (n) {
    case 0: return IntPoly::constant(1);
    case 1: return m[0][0];
    case 2: return detail::det2(m[0][0], m[0][1], m[1][0], m[1][1]);
    case 3: return detail::det3(m);
    default: return detail::bareiss(m);
  }
}

// Rows 0..rows-1 hold derivatives 0..rows-1 of each input (one column per input).
inline PolyMatrix derivative_matrix(const std::vector<IntPoly>& fs, std::size_t rows) {
  PolyMatrix m(rows, std::vector<IntPoly>(fs.size()));
  for (std::size_t j = 0; j < fs.size(); ++j) {
    IntPoly d = fs[j];
    for (std::size_t i = 0; i < rows; ++i) {
      m[i][j] = d;
      d = derivative(d);
    }
  }
  return m;
}

// Wr[f_1, ..., f_m] = det( f_j^{(i)} ), i = 0..m-1.
inline IntPoly wronskian(const std::vector<IntPoly>& fs) {
  if (fs.empty()) throw DomainError("wronskian: empty input list");
  return determinant(derivative_matrix(fs, fs.size()));
}

}  // namespace xherm

#endif  // XHERM_WRONSKIAN_HPP
