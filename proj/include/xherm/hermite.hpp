#ifndef XHERM_HERMITE_HPP
#define XHERM_HERMITE_HPP

// Physicists' Hermite polynomials: H_0 = 1, H_1 = 2x, H_{k+1} = 2x H_k - 2k H_{k-1}.

#include <vector>

#include "xherm/int_poly.hpp"

namespace xherm {

// H_lo, ..., H_hi (inclusive) from one pass of the recurrence.
inline std::vector<IntPoly> hermite_range(int lo, int hi) {
  if (lo < 0 || hi < lo) throw DomainError("hermite_range: need 0 <= lo <= hi");
  std::vector<IntPoly> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  // Work on raw coefficient vectors: the recurrence never cancels the top term.
  std::vector<mpz_class> prev;        // H_{k-1}
  std::vector<mpz_class> cur{1};      // H_k
  for (int k = 0; k <= hi; ++k) {
    if (k >= lo) out.emplace_back(cur);
    std::vector<mpz_class> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2 * k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

inline IntPoly hermite(int n) {
  if (n < 0) throw DomainError("hermite: negative degree");
  return hermite_range(n, n).front();
}

// Multiplier c with H_N^{(j)} = c * H_{N-j}, namely 2^j N!/(N-j)!; zero when j > N.
inline mpz_class hermite_derivative_factor(int N, int j) {
  if (j > N) return 0;
  mpz_class f = 1;
  for (int t = 0; t < j; ++t) f *= 2 * (N - t);
  return f;
}

}  // namespace xherm

#endif  // XHERM_HERMITE_HPP
