#ifndef XHERM_ROOTS_HPP
#define XHERM_ROOTS_HPP

// Simultaneous (Aberth-Ehrlich) root finding with a double-precision global
// phase and an MPFR polishing phase, plus exact Sturm-based real-root
// isolation used as an independent cross-check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "xherm/bigfloat.hpp"
#include "xherm/evaluators.hpp"
#include "xherm/exceptional.hpp"
#include "xherm/gcd.hpp"
#include "xherm/int_poly.hpp"
#include "xherm/partition.hpp"
#include "xherm/sturm.hpp"

namespace xherm {

struct PrecisionConfig {
  long bits = kDefaultBits;
  int max_iterations = 800;
  // log2 of the relative Newton-step size accepted as converged; 0 means -bits/2.
  long convergence_log2 = 0;
  // log2 of the |Im z| below which a root is declared real; 0 means -bits/4.
  long real_axis_snap_log2 = 0;
  // Largest degree for which certification also runs an exact Sturm count.
  int sturm_max_degree = 400;
  int max_escalations = 4;

  long convergence_exponent() const { return convergence_log2 != 0 ? convergence_log2 : -bits / 2; }
  long snap_exponent() const { return real_axis_snap_log2 != 0 ? real_axis_snap_log2 : -bits / 4; }

  void validate() const {
    if (bits < 64) throw DomainError("precision must be at least 64 bits");
    if (max_iterations < 1) throw DomainError("max_iterations must be positive");
    if (convergence_exponent() >= 0 || snap_exponent() >= 0) throw DomainError("thresholds must be below 1");
  }

  PrecisionConfig with_bits(long b) const {
    PrecisionConfig c = *this;
    c.bits = b;
    return c;
  }
};

struct RealRoot {
  BigFloat x;
  BigFloat residual;  // |p(x) / p'(x)|
};

struct ComplexRoot {
  BigComplex z;
  BigFloat residual;
};

struct RootSet {
  std::vector<RealRoot> regular;         // ascending
  std::vector<ComplexRoot> exceptional;  // conjugation-closed, ordered by (re, im)
  long precision_bits = 0;
  int degree = 0;
  int iterations = 0;
  bool converged = false;
  bool conjugate_closed = true;
  bool clustered = false;  // two roots closer than the polishing could separate
  std::string diagnostic;

  int total() const { return static_cast<int>(regular.size() + exceptional.size()); }

  std::vector<BigComplex> all() const {
    std::vector<BigComplex> out;
    for (const auto& r : regular) out.emplace_back(r.x, BigFloat(r.x.prec()));
    for (const auto& e : exceptional) out.push_back(e.z);
    return out;
  }
  std::vector<BigFloat> regular_values() const {
    std::vector<BigFloat> out;
    for (const auto& r : regular) out.push_back(r.x);
    return out;
  }
  std::vector<BigComplex> exceptional_values() const {
    std::vector<BigComplex> out;
    for (const auto& e : exceptional) out.push_back(e.z);
    return out;
  }
};

namespace detail {

// Initial guesses on a slightly perturbed circle; the angular offset and the
// alternating radius keep guesses off the real axis and away from the
// symmetry lines of even/odd polynomials.
inline std::vector<std::complex<double>> circle_guesses(int d, double radius) {
  std::vector<std::complex<double>> z;
  z.reserve(static_cast<std::size_t>(d));
  const double two_pi = 2.0 * M_PI;
  for (int k = 0; k < d; ++k) {
    double theta = two_pi * (k + 0.25) / d + 0.4;
    double rho = radius * (1.0 + 0.03 * ((k % 3) - 1));
    z.emplace_back(rho * std::cos(theta), rho * std::sin(theta));
  }
  return z;
}

// Global phase in double precision. Returns iteration count; `done` marks
// roots whose relative Aberth step fell below `tol`.
template <RootEvaluator E>
int aberth_double(const E& ev, std::vector<std::complex<double>>& z, int max_iter, double tol) {
  const std::size_t d = z.size();
  std::vector<char> done(d, 0);
  int it = 0;
  for (; it < max_iter; ++it) {
    std::size_t active = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      ++active;
      std::complex<double> ratio = ev.newton_ratio(z[k]);
      if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) {
        // Landed on a critical point; nudge.
        z[k] *= std::complex<double>(1.0 + 1e-7, 1e-7);
        continue;
      }
      std::complex<double> s = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      std::complex<double> w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[k] -= w;
      if (std::abs(w) <= tol * std::max(1.0, std::abs(z[k]))) done[k] = 1;
    }
    if (active == 0) break;
  }
  return it;
}

}  // namespace detail

// All zeros of the polynomial behind `ev`.
template <RootEvaluator E>
RootSet find_roots_with(const E& ev, const PrecisionConfig& cfg, int exact_zeros_at_origin = 0) {
  cfg.validate();
  const long bits = cfg.bits;
  const int d = ev.degree();
  RootSet out;
  out.precision_bits = bits;
  out.degree = d + exact_zeros_at_origin;

  std::vector<std::complex<double>> z0 = detail::circle_guesses(d, ev.initial_radius());
  int it = detail::aberth_double(ev, z0, cfg.max_iterations, 1e-14);
  out.iterations = it;

  // Polishing phase: Aberth steps at full precision until every relative step
  // is below 2^{conv}; a final pass recomputes residuals at the settled roots.
  std::vector<BigComplex> z;
  z.reserve(static_cast<std::size_t>(d));
  for (const auto& c : z0) z.emplace_back(c, bits);
  auto ws = ev.workspace(bits);
  BigComplex p(bits), dp(bits), ratio(bits), sum(bits), diff(bits), inv(bits), w(bits), t(bits);
  ComplexScratch scratch(bits);
  std::vector<BigFloat> step(static_cast<std::size_t>(d), BigFloat(bits));
  const long conv = cfg.convergence_exponent();
  const int polish_cap = std::max(8, cfg.max_iterations / 4);
  bool converged = false;
  int extra = 0;
  for (int pit = 0; pit < polish_cap; ++pit) {
    bool all_small = true;
    for (int k = 0; k < d; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      ev.eval(zk, p, dp, ws);
      if (dp.is_zero()) continue;
      div_into(ratio, p, dp, scratch);
      mpfr_set_zero(sum.re().raw(), 1);
      mpfr_set_zero(sum.im().raw(), 1);
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        mpfr_sub(diff.re().raw(), zk.re().raw(), z[static_cast<std::size_t>(j)].re().raw(), MPFR_RNDN);
        mpfr_sub(diff.im().raw(), zk.im().raw(), z[static_cast<std::size_t>(j)].im().raw(), MPFR_RNDN);
        inv_into(inv, diff, scratch);
        sum += inv;
      }
      // w = ratio / (1 - ratio * sum)
      mul_into(t, ratio, sum);
      mpfr_ui_sub(t.re().raw(), 1, t.re().raw(), MPFR_RNDN);
      mpfr_neg(t.im().raw(), t.im().raw(), MPFR_RNDN);
      div_into(w, ratio, t, scratch);
      if (!w.re().is_finite() || !w.im().is_finite()) w = ratio;
      zk -= w;
      BigFloat aw = w.abs();
      BigFloat az = zk.abs();
      if (az < 1.0) az = 1.0;
      step[static_cast<std::size_t>(k)] = aw / az;
      const BigFloat& sk = step[static_cast<std::size_t>(k)];
      if (!sk.is_zero() && sk.exponent() > conv) all_small = false;
    }
    out.iterations = it + pit + 1;
    if (all_small) {
      // One more sweep squeezes out the remaining digits.
      if (++extra >= 2) {
        converged = true;
        break;
      }
    }
  }

  // Classify, snap, polish reals.
  const long snap = cfg.snap_exponent();
  std::vector<RealRoot> reals;
  std::vector<ComplexRoot> cplx;
  BigFloat one(1L, bits);
  for (int k = 0; k < d; ++k) {
    auto& zk = z[static_cast<std::size_t>(k)];
    BigFloat aim = abs(zk.im());
    if (aim.is_zero() || aim.exponent() <= snap) {
      BigComplex x(zk.re(), BigFloat(bits));
      for (int nit = 0; nit < 40; ++nit) {
        ev.eval(x, p, dp, ws);
        if (dp.re().is_zero()) break;
        BigFloat stepr = p.re() / dp.re();
        x.re() -= stepr;
        BigFloat ax = abs(x.re());
        if (ax < 1.0) ax = 1.0;
        if (stepr.is_zero() || (abs(stepr) / ax).exponent() <= -bits + 8) break;
      }
      ev.eval(x, p, dp, ws);
      BigFloat res = dp.re().is_zero() ? BigFloat(1L, bits) : abs(p.re() / dp.re());
      reals.push_back({x.re(), res});
    } else {
      ev.eval(zk, p, dp, ws);
      BigFloat res = dp.is_zero() ? BigFloat(1L, bits) : (p / dp).abs();
      cplx.push_back({zk, res});
    }
  }

  // Pair each upper-half-plane root with the nearest lower one and make the
  // pair exactly conjugate.
  std::vector<ComplexRoot> upper, lower;
  for (auto& c : cplx) (c.z.im().sign() > 0 ? upper : lower).push_back(std::move(c));
  if (upper.size() != lower.size()) {
    out.conjugate_closed = false;
    out.diagnostic += "non-real roots are not conjugation-closed; ";
  }
  std::vector<char> used(lower.size(), 0);
  std::vector<ComplexRoot> closed;
  for (auto& u : upper) {
    std::optional<std::size_t> best;
    BigFloat bestd(bits);
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (used[i]) continue;
      BigFloat dd = (lower[i].z.conj() - u.z).abs();
      if (!best || dd < bestd) {
        best = i;
        bestd = dd;
      }
    }
    if (!best) continue;
    used[*best] = 1;
    BigComplex m = u.z + lower[*best].z.conj();
    m.re().mul_2exp(-1);
    m.im().mul_2exp(-1);
    BigFloat res = u.residual < lower[*best].residual ? lower[*best].residual : u.residual;
    closed.push_back({m, res});
    closed.push_back({m.conj(), res});
  }
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (!used[i]) closed.push_back(std::move(lower[i]));
  std::sort(closed.begin(), closed.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    if (a.z.re() != b.z.re()) return a.z.re() < b.z.re();
    return a.z.im() < b.z.im();
  });

  // Residual gate.
  bool residual_ok = true;
  auto below = [&](const BigFloat& res, const BigFloat& scale) {
    BigFloat s = scale < 1.0 ? one : scale;
    return res.is_zero() || (res / s).exponent() <= conv;
  };
  for (const auto& r : reals) residual_ok = residual_ok && below(r.residual, abs(r.x));
  for (const auto& c : closed) residual_ok = residual_ok && below(c.residual, c.z.abs());

  // Clusters: two distinct roots closer than 2^{conv/2}.
  std::vector<BigComplex> all;
  for (const auto& r : reals) all.emplace_back(r.x, BigFloat(bits));
  for (const auto& c : closed) all.push_back(c.z);
  for (std::size_t i = 0; i < all.size() && !out.clustered; ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      BigFloat dd = (all[i] - all[j]).abs();
      if (dd.is_zero() || dd.exponent() <= conv / 2) {
        out.clustered = true;
        break;
      }
    }

  for (int k = 0; k < exact_zeros_at_origin; ++k) reals.push_back({BigFloat(bits), BigFloat(bits)});
  std::sort(reals.begin(), reals.end(), [](const RealRoot& a, const RealRoot& b) { return a.x < b.x; });

  out.regular = std::move(reals);
  out.exceptional = std::move(closed);
  out.converged = converged && residual_ok && out.conjugate_closed;
  if (!converged) out.diagnostic += "polishing did not reach the step threshold; ";
  if (!residual_ok) out.diagnostic += "some residual above threshold; ";
  if (out.clustered) out.diagnostic += "cluster of non-separating roots; ";
  return out;
}

// Roots of an integer polynomial. Exact zeros at the origin are split off first.
inline RootSet find_roots(const IntPoly& p, const PrecisionConfig& cfg = {}) {
  if (p.is_zero() || p.degree() < 1) throw DomainError("find_roots: need a nonzero polynomial of degree >= 1");
  const int v = p.valuation();
  if (v == p.degree()) {
    RootSet out;
    out.precision_bits = cfg.bits;
    out.degree = v;
    out.converged = true;
    for (int k = 0; k < v; ++k) out.regular.push_back({BigFloat(cfg.bits), BigFloat(cfg.bits)});
    return out;
  }
  std::vector<mpz_class> c(p.coeffs().begin() + v, p.coeffs().end());
  return find_roots_with(MonomialEvaluator(IntPoly(std::move(c))), cfg, v);
}

inline RootSet find_roots(const HermiteSeries& s, const PrecisionConfig& cfg = {}) {
  return find_roots_with(HermiteSeriesEvaluator(s), cfg);
}

// Real-zero count predicted by the Sturm oscillation argument:
// n - |lambda| + #{ j : lambda_j - j >= n - |lambda| }.
inline int expected_regular_count(const Partition& lambda, int n) {
  const int s = lambda.size();
  int extra = 0;
  for (int j = 1; j <= lambda.length(); ++j)
    if (lambda.part(j) - j >= n - s) ++extra;
  return n - s + extra;
}

struct Classification {
  int regular_count = 0;
  int exceptional_count = 0;
  int expected_regular = 0;
  int expected_exceptional = 0;
  bool matches = false;
};

inline Classification classify(const Partition& lambda, int n, const RootSet& roots) {
  Classification c;
  c.regular_count = static_cast<int>(roots.regular.size());
  c.exceptional_count = static_cast<int>(roots.exceptional.size());
  c.expected_regular = expected_regular_count(lambda, n);
  c.expected_exceptional = n - c.expected_regular;
  c.matches = c.regular_count == c.expected_regular && c.exceptional_count == c.expected_exceptional;
  return c;
}

struct CertifiedRoots {
  RootSet roots;
  Classification classification;
  int sturm_count = -1;  // -1 when the degree exceeded cfg.sturm_max_degree
  int escalations = 0;
  bool certified = false;
};

// Zeros of P_n with two-sided certification. The numeric real/non-real split
// must match an exact Sturm count (up to cfg.sturm_max_degree) and, for even
// partitions, the oscillation formula. A zero at the origin is split off with
// its exact multiplicity. Precision doubles on failure.
inline CertifiedRoots certified_roots(const ExceptionalFamily& fam, int n, const PrecisionConfig& cfg = {}) {
  const HermiteSeries s = fam.series(n);
  if (!fam.degrees().contains(n))
    throw DomainError("degree " + std::to_string(n) + " is forbidden for partition " + fam.partition().to_string());
  const bool even = fam.partition().is_even();
  const bool zero_at_origin = sgn(s.value_at_zero()) == 0;
  const bool want_sturm = n <= cfg.sturm_max_degree;
  IntPoly p;
  if (want_sturm || zero_at_origin) p = s.expand();
  const int v = zero_at_origin ? p.valuation() : 0;
  // Real zeros counted with multiplicity, assuming the rest is squarefree;
  // if it is not, the numeric count disagrees and certification fails.
  std::optional<int> sturm;
  if (want_sturm) {
    std::vector<mpz_class> c(p.coeffs().begin() + v, p.coeffs().end());
    const IntPoly q(std::move(c));
    sturm = (q.degree() >= 1 ? sturm_real_root_count(q) : 0) + v;
  }
  CertifiedRoots out;
  PrecisionConfig c = cfg;
  for (int esc = 0; esc <= cfg.max_escalations; ++esc) {
    if (v >= 2) {
      out.roots = find_roots(p, c);
    } else {
      out.roots = find_roots(s, c);
      if (zero_at_origin && !out.roots.regular.empty()) {
        // P_n(0) = 0 exactly: the real root nearest the origin is that zero.
        auto it = std::min_element(out.roots.regular.begin(), out.roots.regular.end(),
                                   [](const RealRoot& a, const RealRoot& b) { return abs(a.x) < abs(b.x); });
        it->x = BigFloat(c.bits);
        it->residual = BigFloat(c.bits);
      }
    }
    out.classification = classify(fam.partition(), n, out.roots);
    if (!even) {
      // The oscillation formula is for even partitions; Sturm stands in.
      out.classification.expected_regular = sturm.value_or(-1);
      out.classification.expected_exceptional = sturm ? n - *sturm : -1;
      out.classification.matches = sturm && *sturm == out.classification.regular_count;
    }
    out.sturm_count = sturm.value_or(-1);
    out.escalations = esc;
    const bool ok = out.roots.converged && out.classification.matches &&
                    (!sturm || *sturm == out.classification.regular_count);
    if (ok) {
      out.certified = true;
      return out;
    }
    c.bits *= 2;
  }
  return out;
}

struct IsolatedRoot {
  mpq_class lo;  // root in (lo, hi]
  mpq_class hi;
  BigFloat value;
};

// Exact isolation of every distinct real root by Sturm bisection, then
// refinement (exact sign bisection, then safeguarded Newton) to `bits`.
inline std::vector<IsolatedRoot> real_roots_certified(const IntPoly& p, long bits = kDefaultBits) {
  if (p.is_zero()) throw DomainError("real_roots_certified: zero polynomial");
  std::vector<IsolatedRoot> out;
  if (p.degree() < 1) return out;
  SturmChain chain(p);
  const IntPoly q = squarefree_part(p);
  const IntPoly dq = derivative(q);
  const unsigned long k = root_bound_log2(p);
  mpq_class bound;
  mpz_class b2;
  mpz_ui_pow_ui(b2.get_mpz_t(), 2, k);
  bound = b2;

  struct Work {
    mpq_class a, b;
    int count;
  };
  std::vector<Work> stack{{-bound, bound, chain.count(Endpoint::at(-bound), Endpoint::at(bound))}};
  std::vector<std::pair<mpq_class, mpq_class>> isolated;
  while (!stack.empty()) {
    Work w = stack.back();
    stack.pop_back();
    if (w.count == 0) continue;
    if (w.count == 1) {
      isolated.emplace_back(w.a, w.b);
      continue;
    }
    mpq_class mid = (w.a + w.b) / 2;
    int left = chain.count(Endpoint::at(w.a), Endpoint::at(mid));
    stack.push_back({mid, w.b, w.count - left});
    stack.push_back({w.a, mid, left});
  }
  std::sort(isolated.begin(), isolated.end());

  for (auto [a, b] : isolated) {
    IsolatedRoot r{a, b, BigFloat(bits)};
    if (sign_at(q, b) == 0) {
      r.value = BigFloat(b, bits);
      r.lo = b;
      out.push_back(std::move(r));
      continue;
    }
    // Move `a` inward until q(a) != 0 so the bracket has a strict sign change.
    while (sign_at(q, a) == 0) {
      mpq_class a2 = (a + b) / 2;
      while (chain.count(Endpoint::at(a2), Endpoint::at(b)) != 1) a2 = (a + a2) / 2;
      a = a2;
    }
    const int sb = sign_at(q, b);
    // Exact bisection to ~60 bits of relative width.
    mpq_class width = b - a;
    mpq_class mag = abs(a) > abs(b) ? mpq_class(abs(a)) : mpq_class(abs(b));
    if (mag < 1) mag = 1;
    mpq_class target = mag / mpq_class(mpz_class(1) << 60);
    while (width > target) {
      mpq_class mid = (a + b) / 2;
      int sm = sign_at(q, mid);
      if (sm == 0) {
        a = b = mid;
        break;
      }
      if (sm == sb) b = mid;
      else a = mid;
      width = b - a;
    }
    r.lo = a;
    r.hi = b;
    BigFloat x(mpq_class((a + b) / 2), bits);
    if (a != b) {
      BigFloat lo(a, bits), hi(b, bits);
      for (int it = 0; it < 60; ++it) {
        BigFloat fv(bits), dv(bits);
        for (int i = q.degree(); i >= 0; --i) {
          dv *= x;
          dv += fv;
          fv *= x;
          fv += BigFloat(q[i], bits);
        }
        if (dv.is_zero()) break;
        BigFloat nx = x - fv / dv;
        if (nx < lo || nx > hi) break;
        BigFloat st = abs(nx - x);
        x = nx;
        BigFloat ax = abs(x);
        if (ax < 1.0) ax = BigFloat(1L, bits);
        if (st.is_zero() || (st / ax).exponent() <= -bits + 4) break;
      }
    }
    r.value = std::move(x);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace xherm

#endif  // XHERM_ROOTS_HPP
