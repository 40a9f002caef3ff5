#ifndef XHERM_VERIFY_HPP
#define XHERM_VERIFY_HPP

// Exact checks of the identities satisfied by P_n and H_lambda, the
// simple-zero scan over partitions, and numeric orthogonality/interlacing.

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "xherm/bigfloat.hpp"
#include "xherm/eval.hpp"
#include "xherm/exceptional.hpp"
#include "xherm/gcd.hpp"
#include "xherm/hermite.hpp"
#include "xherm/int_poly.hpp"
#include "xherm/parallel.hpp"
#include "xherm/partition.hpp"
#include "xherm/quadrature.hpp"
#include "xherm/roots.hpp"

namespace xherm {

enum class Outcome { kPass, kFail, kInconclusive };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "fail";
    case Outcome::kInconclusive: return "inconclusive";
  }
  return "?";
}

// Numeric residue of P^2 e^{-x^2} / H^2 around a multiple zero of H.
struct ContourResidue {
  std::complex<double> center;
  std::complex<double> residue;
  double radius = 0;
  double relative = 0;  // |residue| / (radius * max |f| on the circle)
};

struct IdentityVerdict {
  std::string identity;
  Partition lambda;
  int n = 0;
  std::optional<int> m;
  Outcome outcome = Outcome::kFail;
  bool vacuous = false;  // nothing to check (e.g. H_lambda = 1, empty window)
  IntPoly witness;       // must be the zero polynomial
  std::string note;
  std::vector<ContourResidue> contour;

  bool pass() const { return outcome == Outcome::kPass; }
};

namespace detail {

inline IdentityVerdict verdict(std::string name, const Partition& lambda, int n, IntPoly witness) {
  IdentityVerdict v;
  v.identity = std::move(name);
  v.lambda = lambda;
  v.n = n;
  v.witness = std::move(witness);
  v.outcome = v.witness.is_zero() ? Outcome::kPass : Outcome::kFail;
  return v;
}

inline void note_degree(IdentityVerdict& v, const IntPoly& p, int n) {
  if (p.degree() != n) {
    v.outcome = Outcome::kFail;
    v.note += "deg P_" + std::to_string(n) + " = " + std::to_string(p.degree()) + "; ";
  }
}

// Clears denominators of a rational polynomial (result zero iff input zero).
inline IntPoly clear_denominators(const RatPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out;
  for (const auto& c : p.coeffs()) out.push_back(mpz_class(c.get_num() * (l / c.get_den())));
  return IntPoly(std::move(out));
}

// Truncated power series helpers over Q (first `len` coefficients).
inline std::vector<mpq_class> series_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                                         std::size_t len) {
  std::vector<mpq_class> c(len, 0);
  for (std::size_t i = 0; i < len && i < a.size(); ++i)
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline std::vector<mpq_class> series_inv(const std::vector<mpq_class>& a, std::size_t len) {
  std::vector<mpq_class> b(len, 0);
  b[0] = 1 / a[0];
  for (std::size_t k = 1; k < len; ++k) {
    mpq_class s = 0;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) s += a[i] * b[k - i];
    b[k] = -s / a[0];
  }
  return b;
}

inline std::vector<mpq_class> series_of(const IntPoly& p, std::size_t len) {
  std::vector<mpq_class> s(len, 0);
  for (std::size_t i = 0; i < len; ++i) s[i] = p[static_cast<int>(i)];
  return s;
}

}  // namespace detail

// P_n'' H - 2 (x H + H') P_n' + (H'' + 2 x H' + (2n - 2|lambda|) H) P_n = 0.
inline IdentityVerdict check_ode(const ExceptionalFamily& fam, int n) {
  const IntPoly p = fam.polynomial(n);
  const IntPoly& h = fam.hermite_lambda();
  const IntPoly x = x_poly();
  const IntPoly h1 = derivative(h), h2 = derivative(h, 2);
  const mpz_class e = 2 * (n - fam.partition().size());
  IntPoly w = derivative(p, 2) * h;
  w -= (x * h + h1) * derivative(p) * mpz_class(2);
  w += (h2 + x * h1 * mpz_class(2) + h * e) * p;
  IdentityVerdict v = detail::verdict("ode", fam.partition(), n, std::move(w));
  detail::note_degree(v, p, n);
  return v;
}

inline IdentityVerdict check_ode(const Partition& lambda, int n) { return check_ode(ExceptionalFamily(lambda), n); }

// With D = P_n P_m' - P_n' P_m:
//   2 (n - m) P_n P_m H = D' H - 2 x H D - 2 H' D.
inline IdentityVerdict check_perfect_derivative(const ExceptionalFamily& fam, int n, int m) {
  if (n == m) throw DomainError("check_perfect_derivative: need n != m");
  const IntPoly pn = fam.polynomial(n);
  const IntPoly pm = fam.polynomial(m);
  const IntPoly& h = fam.hermite_lambda();
  const IntPoly d = pn * derivative(pm) - derivative(pn) * pm;
  IntPoly w = derivative(d) * h;
  w -= (x_poly() * h + derivative(h)) * d * mpz_class(2);
  w -= pn * pm * h * mpz_class(2 * (n - m));
  IdentityVerdict v = detail::verdict("perfect_derivative", fam.partition(), n, std::move(w));
  v.m = m;
  detail::note_degree(v, pn, n);
  detail::note_degree(v, pm, m);
  return v;
}

inline IdentityVerdict check_perfect_derivative(const Partition& lambda, int n, int m) {
  return check_perfect_derivative(ExceptionalFamily(lambda), n, m);
}

// Residues of P_n^2 e^{-x^2} / H^2 vanish. At a simple zero z of H this is
// P(z) B(z) = 0 with B = 2 P' H' - P H'' - 2 x P H', so the factor of H
// carrying its simple zeros must divide B (after removing zeros shared with
// P, where the pole cancels). A multiple zero at the origin is checked
// exactly through the Laurent coefficient; multiple zeros elsewhere get a
// trapezoid contour estimate and an inconclusive verdict.
inline IdentityVerdict check_residues(const ExceptionalFamily& fam, int n, long bits = kDefaultBits) {
  const IntPoly p = fam.polynomial(n);
  const IntPoly& h = fam.hermite_lambda();
  const IntPoly h1 = derivative(h);
  IntPoly b = derivative(p) * h1 * mpz_class(2);
  b -= p * derivative(h, 2);
  b -= x_poly() * p * h1 * mpz_class(2);

  if (h.degree() < 1) {
    IdentityVerdict v = detail::verdict("residue", fam.partition(), n, {});
    v.vacuous = true;
    v.note = "H_lambda is constant: no poles; ";
    detail::note_degree(v, p, n);
    return v;
  }

  const IntPoly g = gcd(h, h1);
  const IntPoly s = squarefree_part(h);
  IntPoly simple = primitive_part(divexact(s, gcd(s, g)));
  const IntPoly shared = gcd(simple, p);
  if (shared.degree() >= 1) simple = primitive_part(divexact(simple, shared));

  IdentityVerdict v = detail::verdict("residue", fam.partition(), n,
                                      simple.degree() >= 1 ? pseudo_remainder(b, simple) : IntPoly{});
  detail::note_degree(v, p, n);
  if (shared.degree() >= 1) v.note += "P_n shares " + std::to_string(shared.degree()) + " zero(s) with H_lambda; ";

  const int k0 = h.valuation();
  if (k0 >= 2) {
    // Residue at 0 = [x^{2k-1}] P^2 e^{-x^2} / G^2 with H = x^k G.
    const std::size_t len = static_cast<std::size_t>(2 * k0);
    std::vector<mpz_class> gc(h.coeffs().begin() + k0, h.coeffs().end());
    IntPoly gpoly(std::move(gc));
    std::vector<mpq_class> ex(len, 0);
    mpq_class term = 1;
    for (std::size_t i = 0; 2 * i < len; ++i) {
      ex[2 * i] = term;
      term = -term / mpq_class(static_cast<long>(i + 1));
    }
    auto num = detail::series_mul(detail::series_of(p * p, len), ex, len);
    auto f = detail::series_mul(num, detail::series_inv(detail::series_of(gpoly * gpoly, len), len), len);
    const mpq_class& res0 = f[len - 1];
    if (sgn(res0) != 0) {
      v.outcome = Outcome::kFail;
      v.note += "residue at 0 is " + res0.get_str() + "; ";
    } else {
      v.note += "origin (multiplicity " + std::to_string(k0) + ") checked exactly; ";
    }
  }

  IntPoly multiple = primitive_part(gcd(s, g));
  if (multiple.valuation() > 0) {
    std::vector<mpz_class> c(multiple.coeffs().begin() + multiple.valuation(), multiple.coeffs().end());
    multiple = IntPoly(std::move(c));
  }
  if (multiple.degree() >= 1) {
    if (v.outcome == Outcome::kPass) v.outcome = Outcome::kInconclusive;
    v.note += "H_lambda has multiple zeros away from 0; contour estimates attached; ";
    PrecisionConfig cfg;
    cfg.bits = bits;
    const std::vector<BigComplex> centers = find_roots(multiple, cfg).all();
    const std::vector<BigComplex> distinct = find_roots(s, cfg).all();
    constexpr int kPoints = 128;
    for (const BigComplex& c : centers) {
      double rho = 0.25;
      const std::complex<double> cd = c.to_complex();
      for (const BigComplex& o : distinct) {
        double dd = std::abs(o.to_complex() - cd);
        if (dd > 1e-12) rho = std::min(rho, 0.4 * dd);
      }
      std::complex<double> acc = 0;
      double fmax = 0;
      for (int k = 0; k < kPoints; ++k) {
        const double th = 2 * M_PI * k / kPoints;
        const std::complex<double> e(std::cos(th), std::sin(th));
        BigComplex z(cd + rho * e, bits);
        BigComplex pv = eval_bigfloat(p, z, bits).value;
        BigComplex hv = eval_bigfloat(h, z, bits).value;
        BigComplex f = pv * pv * exp(-(z * z)) / (hv * hv);
        std::complex<double> fd = f.to_complex();
        fmax = std::max(fmax, std::abs(fd));
        acc += fd * e;
      }
      acc *= rho / kPoints;
      v.contour.push_back({cd, acc, rho, fmax > 0 ? std::abs(acc) / (rho * fmax) : 0.0});
    }
  }
  return v;
}

inline IdentityVerdict check_residues(const Partition& lambda, int n, long bits = kDefaultBits) {
  return check_residues(ExceptionalFamily(lambda), n, bits);
}

// Coefficients c_k of p = sum_k c_k H_k (entry k of the result).
inline RatPoly hermite_expansion(const IntPoly& p) {
  if (p.is_zero()) return {};
  const int d = p.degree();
  const std::vector<IntPoly> h = hermite_range(0, d);
  RatPoly rem = to_rational(p);
  std::vector<mpq_class> c(static_cast<std::size_t>(d) + 1, 0);
  for (int k = d; k >= 0 && !rem.is_zero(); --k) {
    if (rem.degree() < k) continue;
    mpq_class ck = rem.leading();
    mpq_class two_k = mpq_class(mpz_class(1) << static_cast<unsigned>(k));
    ck /= two_k;
    c[static_cast<std::size_t>(k)] = ck;
    RatPoly t = to_rational(h[static_cast<std::size_t>(k)]);
    t *= ck;
    rem -= t;
  }
  return RatPoly(std::move(c));
}

// Hermite-basis support: the coefficients of H_k vanish for k < n - s, with
// s = |lambda| + r unless `window` is given. The witness is the (integer
// scaled) part of P_n below the window.
inline IdentityVerdict check_hermite_window(const ExceptionalFamily& fam, int n, std::optional<int> window = {}) {
  const Partition& lambda = fam.partition();
  const int s = window.value_or(lambda.size() + lambda.length());
  const int cut = n - s;
  const IntPoly p = fam.polynomial(n);
  if (cut <= 0) {
    IdentityVerdict v = detail::verdict("hermite_window", lambda, n, {});
    v.vacuous = true;
    v.note = "window H_" + std::to_string(std::max(cut, 0)) + "..H_" + std::to_string(n) + " covers every index; ";
    detail::note_degree(v, p, n);
    return v;
  }
  const RatPoly c = hermite_expansion(p);
  RatPoly below;
  const std::vector<IntPoly> h = hermite_range(0, cut - 1);
  int lowest = -1;
  for (int k = cut - 1; k >= 0; --k) {
    const mpq_class ck = c[k];
    if (sgn(ck) == 0) continue;
    lowest = k;
    RatPoly t = to_rational(h[static_cast<std::size_t>(k)]);
    t *= ck;
    below += t;
  }
  IdentityVerdict v = detail::verdict("hermite_window", lambda, n, detail::clear_denominators(below));
  detail::note_degree(v, p, n);
  if (lowest >= 0) v.note += "nonzero H_" + std::to_string(lowest) + " coefficient below window start H_" +
                             std::to_string(cut) + "; ";
  return v;
}

inline IdentityVerdict check_hermite_window(const Partition& lambda, int n, std::optional<int> window = {}) {
  return check_hermite_window(ExceptionalFamily(lambda), n, window);
}

// ---------------------------------------------------------------------------
// Orthogonality by Gauss-Hermite quadrature.

struct OrthogonalityReport {
  Partition lambda;
  int n = 0, m = 0;
  double normalized = 0;  // |<P_n, P_m>| / (|P_n| |P_m|)
  int points = 0;         // rule size of the reported estimate
  bool converged = false;
  std::vector<std::pair<int, double>> history;
  double tolerance = 1e-10;

  bool pass() const { return converged && normalized < tolerance; }
};

inline double orthogonality_estimate(const ExceptionalFamily& fam, const IntPoly& pn, const IntPoly& pm, int points,
                                     long bits) {
  auto rule = cached_gauss_hermite(points, bits);
  const IntPoly& h = fam.hermite_lambda();
  BigFloat snm(bits), snn(bits), smm(bits);
  for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
    const BigFloat& x = rule->nodes[i];
    BigFloat a = eval_bigfloat(pn, x, bits).value.re();
    BigFloat b = eval_bigfloat(pm, x, bits).value.re();
    BigFloat hv = eval_bigfloat(h, x, bits).value.re();
    BigFloat w = rule->weights[i] / (hv * hv);
    snm += w * a * b;
    snn += w * a * a;
    smm += w * b * b;
  }
  return (abs(snm) / sqrt(snn * smm)).to_double();
}

// Doubles the rule size from `quad_points` until two successive estimates
// agree within `tol` (at most `max_doublings` times).
inline OrthogonalityReport check_orthogonality(const ExceptionalFamily& fam, int n, int m, int quad_points = 200,
                                               double tol = 1e-10, long bits = kDefaultBits,
                                               int max_doublings = 3) {
  const Partition& lambda = fam.partition();
  if (!lambda.is_even()) throw DomainError("check_orthogonality: partition " + lambda.to_string() + " is not even");
  if (n == m) throw DomainError("check_orthogonality: need n != m");
  if (quad_points < 1) throw DomainError("check_orthogonality: need at least one quadrature point");
  const IntPoly pn = fam.polynomial(n), pm = fam.polynomial(m);
  OrthogonalityReport r;
  r.lambda = lambda;
  r.n = n;
  r.m = m;
  r.tolerance = tol;
  int pts = quad_points;
  double prev = orthogonality_estimate(fam, pn, pm, pts, bits);
  r.history.emplace_back(pts, prev);
  for (int k = 0; k < max_doublings; ++k) {
    pts *= 2;
    double cur = orthogonality_estimate(fam, pn, pm, pts, bits);
    r.history.emplace_back(pts, cur);
    const bool settled = std::abs(cur - prev) <= tol;
    prev = cur;
    if (settled) {
      r.converged = true;
      break;
    }
  }
  r.normalized = prev;
  r.points = pts;
  return r;
}

inline OrthogonalityReport check_orthogonality(const Partition& lambda, int n, int m, int quad_points = 200,
                                               double tol = 1e-10, long bits = kDefaultBits) {
  return check_orthogonality(ExceptionalFamily(lambda), n, m, quad_points, tol, bits);
}

// ---------------------------------------------------------------------------
// Simple-zero scan.

enum class ScanOutcome { kAllSimple, kSimpleExceptOrigin, kCounterexample };

inline const char* to_string(ScanOutcome o) {
  switch (o) {
    case ScanOutcome::kAllSimple: return "all-simple";
    case ScanOutcome::kSimpleExceptOrigin: return "simple-except-origin";
    case ScanOutcome::kCounterexample: return "counterexample";
  }
  return "?";
}

struct ScanVerdict {
  Partition lambda;
  IntPoly gcd;  // gcd(H_lambda, H_lambda')
  ScanOutcome verdict = ScanOutcome::kAllSimple;
  int origin_multiplicity = 0;  // multiplicity of 0 as a zero of H_lambda
};

inline ScanVerdict scan_partition(const Partition& lambda) {
  ScanVerdict v;
  v.lambda = lambda;
  const IntPoly h = generalized_hermite(lambda);
  v.origin_multiplicity = h.valuation();
  v.gcd = h.degree() >= 1 ? gcd(h, derivative(h)) : IntPoly::constant(1);
  const int val = v.gcd.valuation();
  if (v.gcd.degree() == 0) v.verdict = ScanOutcome::kAllSimple;
  else if (v.gcd.degree() == val) v.verdict = ScanOutcome::kSimpleExceptOrigin;
  else v.verdict = ScanOutcome::kCounterexample;
  return v;
}

// Every partition with 1 <= |lambda| <= max_size, in enumeration order.
inline std::vector<ScanVerdict> veselov_scan(int max_size, int workers = 1) {
  if (max_size < 1) throw DomainError("veselov_scan: max_size must be at least 1");
  return parallel_map(partitions_up_to(max_size), workers, scan_partition);
}

// ---------------------------------------------------------------------------
// Interlacing with the zeros of H_n.

struct InterlacingReport {
  Partition lambda;
  int n = 0;
  int intervals = 0;  // n - 1 gaps between consecutive zeros of H_n
  int occupied = 0;   // gaps containing at least one real zero of P_n
  int required = 0;   // n - |lambda| - r
  bool skipped = false;
  std::string note;

  bool pass() const { return skipped || occupied >= required; }
};

inline InterlacingReport check_interlacing(const ExceptionalFamily& fam, int n, const PrecisionConfig& cfg = {}) {
  const Partition& lambda = fam.partition();
  if (!lambda.is_even()) throw DomainError("check_interlacing: partition " + lambda.to_string() + " is not even");
  const int s = lambda.size() + lambda.length();
  if (n <= s) throw DomainError("check_interlacing: need n > |lambda| + r = " + std::to_string(s));
  InterlacingReport r;
  r.lambda = lambda;
  r.n = n;
  r.intervals = n - 1;
  r.required = n - s;
  if (lambda.empty()) {
    r.skipped = true;
    r.note = "P_n = H_n: comparison with itself is degenerate";
    return r;
  }
  const RootSet hz = find_roots(hermite(n), cfg);
  if (!hz.converged || static_cast<int>(hz.regular.size()) != n)
    throw ConvergenceError("check_interlacing: zeros of H_" + std::to_string(n) + " not certified");
  const CertifiedRoots pz = certified_roots(fam, n, cfg);
  if (!pz.certified) throw ConvergenceError("check_interlacing: zeros of P_" + std::to_string(n) + " not certified");
  std::size_t j = 0;
  const auto& xs = pz.roots.regular;
  for (int k = 0; k + 1 < n; ++k) {
    const BigFloat& lo = hz.regular[static_cast<std::size_t>(k)].x;
    const BigFloat& hi = hz.regular[static_cast<std::size_t>(k + 1)].x;
    while (j < xs.size() && xs[j].x <= lo) ++j;
    if (j < xs.size() && xs[j].x < hi) ++r.occupied;
  }
  return r;
}

inline InterlacingReport check_interlacing(const Partition& lambda, int n, const PrecisionConfig& cfg = {}) {
  return check_interlacing(ExceptionalFamily(lambda), n, cfg);
}

}  // namespace xherm

#endif  // XHERM_VERIFY_HPP
