#ifndef XHERM_ASSIGNMENT_HPP
#define XHERM_ASSIGNMENT_HPP

// Exact assignment on small square cost matrices: bottleneck first (minimise
// the largest matched cost), ties broken by the smallest total cost.

#include <algorithm>
#include <limits>
#include <vector>

#include "xherm/int_poly.hpp"

namespace xherm {

struct Assignment {
  std::vector<int> match;  // row i -> column match[i]
  double bottleneck = 0;
  double total = 0;
};

namespace detail {

inline bool augment(int u, const std::vector<std::vector<char>>& ok, std::vector<int>& col_of, std::vector<char>& seen) {
  for (std::size_t v = 0; v < ok[static_cast<std::size_t>(u)].size(); ++v) {
    if (!ok[static_cast<std::size_t>(u)][v] || seen[v]) continue;
    seen[v] = 1;
    if (col_of[v] < 0 || augment(col_of[v], ok, col_of, seen)) {
      col_of[v] = u;
      return true;
    }
  }
  return false;
}

inline bool has_perfect_matching(const std::vector<std::vector<double>>& c, double t) {
  const std::size_t n = c.size();
  std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ok[i][j] = c[i][j] <= t;
  std::vector<int> col_of(n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<char> seen(n, 0);
    if (!augment(static_cast<int>(u), ok, col_of, seen)) return false;
  }
  return true;
}

// Hungarian algorithm (potentials form), minimum total cost.
inline std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0), v(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0), way(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(n) + 1, inf);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      const int i0 = p[static_cast<std::size_t>(j0)];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        double cur = a[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)] -
                     u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j) match[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
  return match;
}

}  // namespace detail

inline Assignment bottleneck_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  for (const auto& row : cost)
    if (row.size() != n) throw DomainError("bottleneck_assignment: cost matrix must be square");
  Assignment out;
  if (n == 0) return out;
  std::vector<double> vals;
  for (const auto& row : cost) vals.insert(vals.end(), row.begin(), row.end());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::size_t lo = 0, hi = vals.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (detail::has_perfect_matching(cost, vals[mid])) hi = mid;
    else lo = mid + 1;
  }
  const double t = vals[lo];
  // Edges above the bottleneck get a prohibitive (but finite) cost.
  double big = 1;
  for (double v : vals) big += std::abs(v);
  std::vector<std::vector<double>> c = cost;
  for (auto& row : c)
    for (double& v : row)
      if (v > t) v = big * static_cast<double>(n + 1);
  out.match = detail::min_cost_assignment(c);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = cost[i][static_cast<std::size_t>(out.match[i])];
    out.bottleneck = std::max(out.bottleneck, v);
    out.total += v;
  }
  return out;
}

}  // namespace xherm

#endif  // XHERM_ASSIGNMENT_HPP
