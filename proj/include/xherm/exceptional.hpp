#ifndef XHERM_EXCEPTIONAL_HPP
#define XHERM_EXCEPTIONAL_HPP

// Generalized Hermite polynomials H_lambda and exceptional Hermite
// polynomials P_n, built two ways: as a direct Wronskian and from cached
// last-column cofactors.

#include <string>
#include <vector>

#include "xherm/bigfloat.hpp"
#include "xherm/hermite.hpp"
#include "xherm/int_poly.hpp"
#include "xherm/partition.hpp"
#include "xherm/wronskian.hpp"

namespace xherm {

namespace detail {

inline std::vector<IntPoly> hermite_columns(const Partition& lambda) {
  std::vector<IntPoly> cols;
  for (int k : lambda.hermite_indices()) cols.push_back(hermite(k));
  return cols;
}

inline void require_domain(const Partition& lambda, int n) {
  if (n < lambda.size() - lambda.length())
    throw DomainError("P_n is defined only for n >= |lambda| - r = " +
                      std::to_string(lambda.size() - lambda.length()) + " (got n = " + std::to_string(n) + ")");
}

inline void require_admissible(const Partition& lambda, int n) {
  require_domain(lambda, n);
  if (!is_admissible(lambda, n))
    throw DomainError("degree " + std::to_string(n) + " is forbidden for partition " + lambda.to_string());
}

}  // namespace detail

// H_lambda = Wr[H_{k_r}, ..., H_{k_1}]; H_() = 1.
inline IntPoly generalized_hermite(const Partition& lambda) {
  if (lambda.empty()) return IntPoly::constant(1);
  return wronskian(detail::hermite_columns(lambda));
}

// P_n = Wr[H_{k_r}, ..., H_{k_1}, H_{n-|lambda|+r}]. Zero on forbidden degrees.
inline IntPoly exceptional_hermite(const Partition& lambda, int n) {
  detail::require_domain(lambda, n);
  std::vector<IntPoly> cols = detail::hermite_columns(lambda);
  cols.push_back(hermite(n - lambda.size() + lambda.length()));
  return wronskian(cols);
}

// Signed last-column cofactors (Q_0, ..., Q_{r-1}, Q_r = H_lambda) so that
// P_n = sum_j Q_j H_N^{(j)},  N = n - |lambda| + r,  deg Q_j = |lambda| + j - r.
inline std::vector<IntPoly> cofactor_coefficients(const Partition& lambda) {
  const std::size_t r = static_cast<std::size_t>(lambda.length());
  if (r == 0) return {IntPoly::constant(1)};
  PolyMatrix m = derivative_matrix(detail::hermite_columns(lambda), r + 1);
  std::vector<IntPoly> q;
  q.reserve(r + 1);
  for (std::size_t j = 0; j <= r; ++j) {
    PolyMatrix minor;
    minor.reserve(r);
    for (std::size_t i = 0; i <= r; ++i)
      if (i != j) minor.push_back(m[i]);
    IntPoly d = determinant(minor);
    q.push_back(((j + r) % 2 == 0) ? d : -d);
  }
  return q;
}

// P = sum_j coeff[j] * H_{top - j}; terms with negative Hermite index vanish.
struct HermiteSeries {
  std::vector<IntPoly> coeff;
  int top = 0;

  int degree_bound() const {
    int d = -1;
    for (std::size_t j = 0; j < coeff.size(); ++j)
      if (!coeff[j].is_zero() && top - static_cast<int>(j) >= 0)
        d = std::max(d, coeff[j].degree() + top - static_cast<int>(j));
    return d;
  }

  // Exact P(0), from H_k(0): 1, 0, -2, 0, 12, ...
  mpz_class value_at_zero() const {
    if (top < 0) return 0;
    std::vector<mpz_class> h0(static_cast<std::size_t>(top) + 1, 0);
    h0[0] = 1;
    for (int k = 1; k + 1 <= top; ++k) h0[static_cast<std::size_t>(k + 1)] = -2 * k * h0[static_cast<std::size_t>(k - 1)];
    mpz_class acc = 0;
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      int idx = top - static_cast<int>(j);
      if (idx < 0) break;
      acc += coeff[j][0] * h0[static_cast<std::size_t>(idx)];
    }
    return acc;
  }

  IntPoly expand() const {
    IntPoly out;
    const int lo = std::max(0, top - static_cast<int>(coeff.size()) + 1);
    if (top < 0) return out;
    std::vector<IntPoly> h = hermite_range(lo, top);
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      int idx = top - static_cast<int>(j);
      if (idx < lo) break;
      out += coeff[j] * h[static_cast<std::size_t>(idx - lo)];
    }
    return out;
  }
};

// Compute-once cofactor cache for one partition.
class ExceptionalFamily {
 public:
  explicit ExceptionalFamily(Partition lambda)
      : lambda_(std::move(lambda)), degrees_(lambda_), cofactors_(cofactor_coefficients(lambda_)) {}

  const Partition& partition() const { return lambda_; }
  const DegreeSequence& degrees() const { return degrees_; }
  const std::vector<IntPoly>& cofactors() const { return cofactors_; }
  const IntPoly& hermite_lambda() const { return cofactors_.back(); }

  // P_n as sum_j Qtilde_j H_{N-j} with Qtilde_j = Q_j * 2^j N!/(N-j)!.
  HermiteSeries series(int n) const {
    detail::require_domain(lambda_, n);
    const int N = n - lambda_.size() + lambda_.length();
    HermiteSeries s;
    s.top = N;
    for (std::size_t j = 0; j < cofactors_.size(); ++j)
      s.coeff.push_back(cofactors_[j] * hermite_derivative_factor(N, static_cast<int>(j)));
    return s;
  }

  // Same result as exceptional_hermite(lambda, n), without a determinant per n.
  IntPoly polynomial(int n) const {
    detail::require_admissible(lambda_, n);
    return series(n).expand();
  }

 private:
  Partition lambda_;
  DegreeSequence degrees_;
  std::vector<IntPoly> cofactors_;
};

inline IntPoly exceptional_fast(const Partition& lambda, int n) { return ExceptionalFamily(lambda).polynomial(n); }

// W_lambda(x) = exp(-x^2) / H_lambda(x)^2 for even lambda.
inline BigFloat weight_eval(const Partition& lambda, const BigFloat& x, long bits = kDefaultBits) {
  if (!lambda.is_even()) throw DomainError("weight_eval: partition " + lambda.to_string() + " is not even");
  IntPoly h = generalized_hermite(lambda);
  BigFloat xx(bits);
  xx = x;
  xx.round_to(bits);
  BigFloat hv(bits);
  for (int k = h.degree(); k >= 0; --k) {
    hv *= xx;
    hv += BigFloat(h[k], bits);
  }
  BigFloat e = exp(-(xx * xx));
  return e / (hv * hv);
}

}  // namespace xherm

#endif  // XHERM_EXCEPTIONAL_HPP
