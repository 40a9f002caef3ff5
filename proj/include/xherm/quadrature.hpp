#ifndef XHERM_QUADRATURE_HPP
#define XHERM_QUADRATURE_HPP

// Gauss-Hermite rules (weight e^{-x^2}). Nodes are eigenvalues of the
// symmetric Jacobi matrix (implicit QL), Newton-polished; weights come from
// the Christoffel function 1 / sum_k p_k(x)^2 over the orthonormal
// polynomials, which keeps tiny tail weights relatively accurate.

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <type_traits>
#include <utility>
#include <vector>

#include "xherm/bigfloat.hpp"
#include "xherm/int_poly.hpp"

namespace xherm {

template <class T>
struct QuadratureRule {
  std::vector<T> nodes;  // ascending
  std::vector<T> weights;
};

namespace detail {

template <class T>
T make_scalar(double v, long bits) {
  if constexpr (std::is_same_v<T, double>) return v;
  else return T(v, bits);
}
template <class T>
T scalar_pi(long bits) {
  if constexpr (std::is_same_v<T, double>) return std::acos(-1.0);
  else return pi(bits);
}

// Eigenvalues of a symmetric tridiagonal matrix by QL with implicit shifts
// (diagonal d, off-diagonal e with e[i] coupling i and i+1).
template <class T>
bool tridiagonal_ql(std::vector<T>& d, std::vector<T>& e, long bits, int max_sweeps) {
  using std::abs;
  using std::sqrt;
  const int n = static_cast<int>(d.size());
  e.push_back(make_scalar<T>(0.0, bits));
  const T eps = make_scalar<T>(std::ldexp(1.0, std::is_same_v<T, double> ? -52 : static_cast<int>(-bits + 4)), bits);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        T dd = abs(d[m]) + abs(d[m + 1]);
        if (abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (++iter > max_sweeps) return false;
        T g = (d[l + 1] - d[l]) / (e[l] * 2L);
        T r = sqrt(g * g + 1L);
        T sr = g < 0.0 ? -r : r;
        g = d[m] - d[l] + e[l] / (g + sr);
        T s = make_scalar<T>(1.0, bits), c = make_scalar<T>(1.0, bits), p = make_scalar<T>(0.0, bits);
        int i = m - 1;
        for (; i >= l; --i) {
          T f = s * e[i];
          T b = c * e[i];
          r = sqrt(f * f + g * g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = make_scalar<T>(0.0, bits);
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + c * b * 2L;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = make_scalar<T>(0.0, bits);
      }
    } while (m != l);
  }
  e.pop_back();
  return true;
}

}  // namespace detail

// N-point Gauss-Hermite rule in T (double or BigFloat at `bits`).
template <class T>
QuadratureRule<T> gauss_hermite(int n, long bits = kDefaultBits) {
  if (n < 1) throw DomainError("gauss_hermite: need at least one node");
  std::vector<T> d(static_cast<std::size_t>(n), detail::make_scalar<T>(0.0, bits));
  using std::sqrt;
  std::vector<T> e;
  std::vector<T> b;  // b[k] = sqrt(k/2), k = 0..n
  for (int k = 0; k <= n; ++k) {
    T v = detail::make_scalar<T>(static_cast<double>(k), bits);
    v /= 2L;
    b.push_back(sqrt(v));
  }
  for (int k = 1; k < n; ++k) e.push_back(b[static_cast<std::size_t>(k)]);
  if (!detail::tridiagonal_ql(d, e, bits, 60)) throw ConvergenceError("gauss_hermite: QL iteration did not converge");
  std::sort(d.begin(), d.end());

  // Orthonormal recurrence p_{k+1} = (x p_k - b_k p_{k-1}) / b_{k+1}, p_0 = pi^{-1/4}.
  const T p0 = sqrt(sqrt(detail::scalar_pi<T>(bits)));
  auto run = [&](const T& x, T& pn, T& pn1, T& sumsq) {
    T prev = detail::make_scalar<T>(0.0, bits);
    T cur = detail::make_scalar<T>(1.0, bits) / p0;
    sumsq = cur * cur;
    for (int k = 0; k < n; ++k) {
      T next = (x * cur - b[static_cast<std::size_t>(k)] * prev) / b[static_cast<std::size_t>(k + 1)];
      prev = std::move(cur);
      cur = std::move(next);
      if (k + 1 < n) sumsq += cur * cur;
    }
    pn = std::move(cur);
    pn1 = std::move(prev);
  };
  QuadratureRule<T> rule;
  for (int i = 0; i < n; ++i) {
    T x = d[static_cast<std::size_t>(i)];
    T pn = x, pn1 = x, sumsq = x;
    // p_n' = sqrt(2n) p_{n-1} at the nodes of p_n (up to the p_n term, which is ~0).
    const T dfac = b[static_cast<std::size_t>(n)] * 2L;
    for (int it = 0; it < 3; ++it) {
      run(x, pn, pn1, sumsq);
      if (pn1 == 0.0) break;
      x -= pn / (dfac * pn1);
    }
    run(x, pn, pn1, sumsq);
    rule.nodes.push_back(x);
    rule.weights.push_back(detail::make_scalar<T>(1.0, bits) / sumsq);
  }
  return rule;
}

// Process-wide cache of multiprecision rules keyed by (points, bits).
inline std::shared_ptr<const QuadratureRule<BigFloat>> cached_gauss_hermite(int n, long bits) {
  static std::mutex mu;
  static std::map<std::pair<int, long>, std::shared_ptr<const QuadratureRule<BigFloat>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, bits});
    if (it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule<BigFloat>>(gauss_hermite<BigFloat>(n, bits));
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace({n, bits}, rule).first->second;
}

}  // namespace xherm

#endif  // XHERM_QUADRATURE_HPP
