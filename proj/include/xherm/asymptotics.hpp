#ifndef XHERM_ASYMPTOTICS_HPP
#define XHERM_ASYMPTOTICS_HPP

// Numerical reproduction of the large-n behaviour of P_n: Mehler-Heine
// scaling at the origin, central zero spacing, the semicircle law for the
// real zeros, and the attraction of the non-real zeros to those of H_lambda.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "xherm/assignment.hpp"
#include "xherm/bigfloat.hpp"
#include "xherm/evaluators.hpp"
#include "xherm/exceptional.hpp"
#include "xherm/partition.hpp"
#include "xherm/roots.hpp"
#include "xherm/verify.hpp"

namespace xherm {

enum class Parity { kEven, kOdd };

inline const char* to_string(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

// ---------------------------------------------------------------------------
// Root cache shared by all tables.

class RootCache {
 public:
  std::shared_ptr<const ExceptionalFamily> family(const Partition& lambda) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = families_[lambda.parts()];
    if (!slot) slot = std::make_shared<const ExceptionalFamily>(lambda);
    return slot;
  }

  // Certified zeros of P_n; throws ConvergenceError when certification fails.
  std::shared_ptr<const CertifiedRoots> roots(const Partition& lambda, int n, const PrecisionConfig& cfg) {
    const Key key{lambda.parts(), n, cfg.bits};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = roots_.find(key);
      if (it != roots_.end()) return it->second;
    }
    auto fam = family(lambda);
    auto r = std::make_shared<const CertifiedRoots>(certified_roots(*fam, n, cfg));
    if (!r->certified)
      throw ConvergenceError("zeros of P_" + std::to_string(n) + " for " + lambda.to_string() +
                             " not certified: " + r->roots.diagnostic);
    std::lock_guard<std::mutex> lock(mu_);
    return roots_.try_emplace(key, r).first->second;
  }

 private:
  using Key = std::tuple<std::vector<int>, int, long>;
  std::mutex mu_;
  std::map<std::vector<int>, std::shared_ptr<const ExceptionalFamily>> families_;
  std::map<Key, std::shared_ptr<const CertifiedRoots>> roots_;
};

inline RootCache& default_root_cache() {
  static RootCache cache;
  return cache;
}

// ---------------------------------------------------------------------------
// Tables.

struct TableRow {
  int n = 0;
  int k = 0;
  std::string label;
  double observed = 0;
  double target = 0;
  double error = 0;
};

struct LogLogFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // RMS deviation of log y from the fitted line
};

struct ConvergenceTable {
  std::string quantity;
  Partition lambda;
  std::vector<TableRow> rows;
  std::optional<LogLogFit> fit;
};

inline LogLogFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("loglog_fit: need at least two points");
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) throw DomainError("loglog_fit: values must be positive");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  LogLogFit f;
  f.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  f.intercept = (sy - f.slope * sx) / m;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = std::log(y[i]) - (f.intercept + f.slope * std::log(x[i]));
    ss += d * d;
  }
  f.residual = std::sqrt(ss / m);
  return f;
}

// ---------------------------------------------------------------------------
// Mehler-Heine scaling.
//
// Even:  sign sqrt(n pi) / (2^{2n-|lambda|+2r} (n-|lambda|/2+r/2)! n^{r/2}) P_{2n}(x / (2 sqrt n))
// Odd:   sign sqrt(pi)   / (2^{2n-|lambda|+2r+1} (n-|lambda|/2+r/2)! n^{r/2}) P_{2n+1}(x / (2 sqrt n))
// with sign = (-1)^{n-|lambda|/2}; limits H_lambda(0) cos x and H_lambda(0) sin x.

struct MHScaling {
  Partition lambda;
  int n = 0;
  Parity parity = Parity::kEven;
  int sign = 1;
  long pow2 = 0;           // denominator 2^{pow2}
  long factorial_arg = 0;  // denominator (factorial_arg)!
  bool radicand_n = true;  // sqrt(n pi) if true, sqrt(pi) otherwise
  int sqrt_n_power = 0;    // extra factor (sqrt n)^{sqrt_n_power}

  int degree() const { return parity == Parity::kEven ? 2 * n : 2 * n + 1; }

  // sign / (2^{pow2} factorial_arg!): the rational part of the constant.
  mpq_class rational_part() const {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(factorial_arg));
    mpz_class d = f << static_cast<mp_bitcnt_t>(pow2);
    return mpq_class(mpz_class(sign), d);
  }

  BigFloat value(long bits) const {
    BigFloat r = sqrt(pi(bits) * (radicand_n ? static_cast<long>(n) : 1L));
    r /= factorial(static_cast<unsigned long>(factorial_arg), bits);
    r.mul_2exp(-pow2);
    if (sqrt_n_power != 0) {
      BigFloat nn(static_cast<long>(n), bits);
      BigFloat e(static_cast<long>(sqrt_n_power), bits);
      e /= 2L;
      BigFloat f(bits);
      mpfr_pow(f.raw(), nn.raw(), e.raw(), MPFR_RNDN);
      r *= f;
    }
    if (sign < 0) r = -r;
    return r;
  }

  std::string to_string() const {
    std::string s = sign < 0 ? "-" : "";
    s += radicand_n ? "sqrt(" + std::to_string(n) + " pi)" : "sqrt(pi)";
    s += " / (2^" + std::to_string(pow2) + " * " + std::to_string(factorial_arg) + "!";
    if (sqrt_n_power != 0) s += " * " + std::to_string(n) + "^(" + std::to_string(-sqrt_n_power) + "/2)";
    return s + ")";
  }
};

inline MHScaling mh_scaling(const Partition& lambda, int n, Parity parity) {
  if (!lambda.is_even()) throw DomainError("mh_scaling: partition " + lambda.to_string() + " is not even");
  const int s = lambda.size(), r = lambda.length();
  MHScaling m;
  m.lambda = lambda;
  m.n = n;
  m.parity = parity;
  if (n < 1 || n - s / 2 + r / 2 < 0) throw DomainError("mh_scaling: n too small for " + lambda.to_string());
  m.sign = ((n - s / 2) % 2 == 0) ? 1 : -1;
  m.pow2 = 2L * n - s + 2L * r + (parity == Parity::kOdd ? 1 : 0);
  m.factorial_arg = n - s / 2 + r / 2;
  m.radicand_n = parity == Parity::kEven;
  m.sqrt_n_power = -r;
  if (!is_admissible(lambda, m.degree()))
    throw DomainError("degree " + std::to_string(m.degree()) + " is forbidden for partition " + lambda.to_string());
  return m;
}

// Evaluates the scaled left-hand side at many x for one (lambda, n, parity).
class MHEvaluator {
 public:
  MHEvaluator(const ExceptionalFamily& fam, int n, Parity parity, long bits = kDefaultBits)
      : scaling_(mh_scaling(fam.partition(), n, parity)),
        bits_(bits),
        ev_(fam.series(scaling_.degree())),
        ws_(ev_.workspace(bits)),
        constant_(scaling_.value(bits)),
        half_inv_sqrt_n_(sqrt(BigFloat(static_cast<long>(n), bits))) {
    half_inv_sqrt_n_ = BigFloat(1L, bits) / (half_inv_sqrt_n_ * 2L);
  }

  const MHScaling& scaling() const { return scaling_; }

  BigFloat operator()(const BigFloat& x) {
    BigComplex z(x * half_inv_sqrt_n_, BigFloat(bits_));
    BigComplex p(bits_), dp(bits_);
    ev_.eval(z, p, dp, ws_);
    return constant_ * p.re();
  }

 private:
  MHScaling scaling_;
  long bits_;
  HermiteSeriesEvaluator ev_;
  HermiteSeriesEvaluator::Workspace ws_;
  BigFloat constant_;
  BigFloat half_inv_sqrt_n_;
};

inline BigFloat mh_scaled_eval(const Partition& lambda, int n, Parity parity, const BigFloat& x,
                               long bits = kDefaultBits) {
  ExceptionalFamily fam(lambda);
  MHEvaluator ev(fam, n, parity, bits);
  return ev(x);
}

struct MHError {
  double sup = 0;
  double at = 0;
};

// sup over the grid -xmax, -xmax + step, ..., xmax of |scaled - H_lambda(0) trig(x)|.
inline MHError mh_sup_error(const ExceptionalFamily& fam, int n, Parity parity, double xmax = 4.0,
                            double step = 0.05, long bits = kDefaultBits) {
  MHEvaluator ev(fam, n, parity, bits);
  const double h0 = mpz_get_d(fam.hermite_lambda()[0].get_mpz_t());
  const long steps = std::lround(2 * xmax / step);
  MHError e;
  for (long i = 0; i <= steps; ++i) {
    const double x = -xmax + static_cast<double>(i) * step;
    const double v = ev(BigFloat(x, bits)).to_double();
    const double target = h0 * (parity == Parity::kEven ? std::cos(x) : std::sin(x));
    const double err = std::abs(v - target);
    if (err > e.sup) {
      e.sup = err;
      e.at = x;
    }
  }
  return e;
}

inline ConvergenceTable mh_table(const Partition& lambda, const std::vector<int>& ns, Parity parity,
                                 double xmax = 4.0, double step = 0.05, long bits = kDefaultBits) {
  ExceptionalFamily fam(lambda);
  ConvergenceTable t;
  t.quantity = std::string("mehler_heine_sup_error_") + to_string(parity);
  t.lambda = lambda;
  std::vector<int> sorted = ns;
  std::sort(sorted.begin(), sorted.end());
  for (int n : sorted) {
    MHError e = mh_sup_error(fam, n, parity, xmax, step, bits);
    t.rows.push_back({n, 0, to_string(parity), e.sup, 0.0, e.sup});
  }
  return t;
}

// ---------------------------------------------------------------------------
// Central zero spacing: 2 sqrt(n) x_{k+n+1-|lambda|/2} of P_{2n} -> pi/2 + k pi,
// and of P_{2n+1} -> k pi.

inline void require_large_degree(const Partition& lambda, int degree) {
  if (!is_admissible(lambda, degree))
    throw DomainError("degree " + std::to_string(degree) + " is forbidden for partition " + lambda.to_string());
  if (degree < lambda.size() + lambda.part(1))
    throw DomainError("degree " + std::to_string(degree) + " is below |lambda| + lambda_1 = " +
                      std::to_string(lambda.size() + lambda.part(1)));
}

inline ConvergenceTable zero_spacing_table(const Partition& lambda, const std::vector<int>& ks,
                                           const std::vector<int>& ns, const PrecisionConfig& cfg = {},
                                           RootCache& cache = default_root_cache()) {
  if (!lambda.is_even()) throw DomainError("zero_spacing_table: partition " + lambda.to_string() + " is not even");
  ConvergenceTable t;
  t.quantity = "zero_spacing_error";
  t.lambda = lambda;
  std::vector<int> sorted = ns;
  std::sort(sorted.begin(), sorted.end());
  for (Parity par : {Parity::kEven, Parity::kOdd}) {
    for (int k : ks) {
      for (int n : sorted) {
        const int deg = par == Parity::kEven ? 2 * n : 2 * n + 1;
        require_large_degree(lambda, deg);
        auto r = cache.roots(lambda, deg, cfg);
        const auto& xs = r->roots.regular;
        const int idx = k + n + 1 - lambda.size() / 2;  // 1-based
        if (idx < 1 || idx > static_cast<int>(xs.size()))
          throw DomainError("zero index " + std::to_string(idx) + " out of range for P_" + std::to_string(deg));
        BigFloat scaled = xs[static_cast<std::size_t>(idx - 1)].x * sqrt(BigFloat(static_cast<long>(n), cfg.bits));
        scaled *= 2L;
        const double obs = scaled.to_double();
        const double target = par == Parity::kEven ? M_PI / 2 + k * M_PI : k * M_PI;
        const BigFloat tgt = par == Parity::kEven ? pi(cfg.bits) * static_cast<long>(2 * k + 1) / 2L
                                                  : pi(cfg.bits) * static_cast<long>(k);
        const double err = abs(scaled - tgt).to_double();
        t.rows.push_back({n, k, to_string(par), obs, target, err});
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Semicircle law.

inline double semicircle_cdf(double x) {
  if (x <= -1) return 0;
  if (x >= 1) return 1;
  return 0.5 + (x * std::sqrt(1 - x * x) + std::asin(x)) / M_PI;
}

// sup_x |G(x) - F(x)| where G puts mass `mass` on each point of `points`.
// Total mass below 1 shows up as a deficiency at the right end.
inline double ks_semicircle(std::vector<double> points, double mass) {
  std::sort(points.begin(), points.end());
  double d = 0;
  double g = 0;
  for (double p : points) {
    const double f = semicircle_cdf(p);
    d = std::max(d, std::abs(g - f));
    g += mass;
    d = std::max(d, std::abs(g - f));
  }
  return std::max(d, std::abs(g - 1.0));
}

// Two discrete measures (points with uniform masses).
inline double ks_distance(std::vector<double> a, double mass_a, std::vector<double> b, double mass_b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() || j < b.size()) {
    double x = (j >= b.size() || (i < a.size() && a[i] <= b[j])) ? a[i] : b[j];
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) * mass_a - static_cast<double>(j) * mass_b));
  }
  return d;
}

struct SemicircleReport {
  Partition lambda;
  int n = 0;
  int regular = 0;
  double distance = 0;
  double deficiency = 0;  // 1 - regular / n
};

// KS distance of the scaled real zeros x / sqrt(2n) (mass 1/n each) to the
// semicircle distribution on [-1, 1].
inline SemicircleReport semicircle_distance(const Partition& lambda, int n, const PrecisionConfig& cfg = {},
                                            RootCache& cache = default_root_cache()) {
  if (!lambda.is_even()) throw DomainError("semicircle_distance: partition " + lambda.to_string() + " is not even");
  if (!lambda.empty()) require_large_degree(lambda, n);
  auto r = cache.roots(lambda, n, cfg);
  std::vector<double> y;
  const double scale = std::sqrt(2.0 * n);
  for (const auto& x : r->roots.regular) y.push_back(x.x.to_double() / scale);
  SemicircleReport s;
  s.lambda = lambda;
  s.n = n;
  s.regular = static_cast<int>(y.size());
  s.distance = ks_semicircle(y, 1.0 / n);
  s.deficiency = 1.0 - static_cast<double>(y.size()) / n;
  return s;
}

// ---------------------------------------------------------------------------
// Attraction of the exceptional zeros.

struct MatchedPair {
  std::complex<double> hermite_zero;  // z_j
  std::complex<double> pn_zero;       // z_{k,n}
  double distance = 0;
};

struct AttractionRow {
  int n = 0;
  std::vector<MatchedPair> pairs;
  double max_distance = 0;
  bool mutual_nearest = true;  // each matched pair are each other's nearest neighbours
  bool half_plane = true;      // Im z_{k,n} > Im z_j whenever Im z_j > 0
  std::string anomaly;
};

struct AttractionReport {
  Partition lambda;
  std::vector<AttractionRow> rows;
  ConvergenceTable table;
  double sup_scaled = 0;  // max_n d_n sqrt(n)
  double min_scaled = 0;  // min_n d_n sqrt(n)

  bool bijective() const {
    return std::all_of(rows.begin(), rows.end(), [](const AttractionRow& r) { return r.mutual_nearest; });
  }
  bool half_plane() const {
    return std::all_of(rows.begin(), rows.end(), [](const AttractionRow& r) { return r.half_plane; });
  }
};

inline std::vector<BigComplex> hermite_lambda_zeros(const Partition& lambda, const PrecisionConfig& cfg) {
  const IntPoly h = generalized_hermite(lambda);
  if (h.degree() < 1) return {};
  RootSet r = find_roots(h, cfg);
  if (!r.converged) throw ConvergenceError("zeros of H_lambda for " + lambda.to_string() + " not converged");
  return r.all();
}

inline AttractionRow match_exceptional(const std::vector<std::complex<double>>& hz,
                                       const std::vector<std::complex<double>>& pz, int n) {
  AttractionRow row;
  row.n = n;
  if (hz.size() != pz.size()) {
    row.mutual_nearest = false;
    row.anomaly = "P_n has " + std::to_string(pz.size()) + " non-real zeros, H_lambda has " +
                  std::to_string(hz.size()) + " zeros";
    return row;
  }
  const std::size_t m = hz.size();
  std::vector<std::vector<double>> cost(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) cost[i][j] = std::abs(hz[i] - pz[j]);
  Assignment a = bottleneck_assignment(cost);
  row.max_distance = a.bottleneck;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = static_cast<std::size_t>(a.match[i]);
    row.pairs.push_back({hz[i], pz[j], cost[i][j]});
    const auto row_min = std::min_element(cost[i].begin(), cost[i].end()) - cost[i].begin();
    std::size_t col_min = 0;
    for (std::size_t t = 1; t < m; ++t)
      if (cost[t][j] < cost[col_min][j]) col_min = t;
    if (static_cast<std::size_t>(row_min) != j || col_min != i) {
      row.mutual_nearest = false;
      row.anomaly += "zero " + std::to_string(i) + " of H_lambda is not mutually nearest to its partner; ";
    }
    if (hz[i].imag() > 0 && !(pz[j].imag() > hz[i].imag())) row.half_plane = false;
    if (hz[i].imag() < 0 && !(pz[j].imag() < hz[i].imag())) row.half_plane = false;
  }
  return row;
}

inline AttractionReport exceptional_attraction(const Partition& lambda, const std::vector<int>& ns,
                                               const PrecisionConfig& cfg = {},
                                               RootCache& cache = default_root_cache()) {
  if (!lambda.is_even()) throw DomainError("exceptional_attraction: partition " + lambda.to_string() + " is not even");
  if (lambda.empty()) throw DomainError("exceptional_attraction: empty partition has no exceptional zeros");
  if (scan_partition(lambda).verdict != ScanOutcome::kAllSimple)
    throw DomainError("exceptional_attraction: H_lambda has multiple zeros for " + lambda.to_string());
  AttractionReport rep;
  rep.lambda = lambda;
  rep.table.quantity = "max_matched_distance";
  rep.table.lambda = lambda;
  std::vector<std::complex<double>> hz;
  for (const auto& z : hermite_lambda_zeros(lambda, cfg)) hz.push_back(z.to_complex());
  std::vector<int> sorted = ns;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> xs, ys;
  rep.min_scaled = std::numeric_limits<double>::infinity();
  for (int n : sorted) {
    require_large_degree(lambda, n);
    auto r = cache.roots(lambda, n, cfg);
    std::vector<std::complex<double>> pz;
    for (const auto& e : r->roots.exceptional) pz.push_back(e.z.to_complex());
    AttractionRow row = match_exceptional(hz, pz, n);
    rep.table.rows.push_back({n, 0, "", row.max_distance, 0.0, row.max_distance});
    xs.push_back(n);
    ys.push_back(row.max_distance);
    const double sc = row.max_distance * std::sqrt(static_cast<double>(n));
    rep.sup_scaled = std::max(rep.sup_scaled, sc);
    rep.min_scaled = std::min(rep.min_scaled, sc);
    rep.rows.push_back(std::move(row));
  }
  if (xs.size() >= 2) rep.table.fit = loglog_fit(xs, ys);
  return rep;
}

// ---------------------------------------------------------------------------
// Zero balance at a simple zero z_j of H_lambda:
//   sum_k 1/(z_j - x_k) + sum_k 1/(z_j - z_{k,n}) = z_j + sum_{k != j} 1/(z_j - z_k).

struct ZeroBalance {
  std::complex<double> z;
  double residual = 0;
  bool collision = false;  // a zero of P_n sits on z_j
};

inline std::vector<ZeroBalance> zero_balance_residuals(const Partition& lambda, int n, const PrecisionConfig& cfg = {},
                                                       RootCache& cache = default_root_cache()) {
  const long bits = cfg.bits;
  auto r = cache.roots(lambda, n, cfg);
  const std::vector<BigComplex> hz = hermite_lambda_zeros(lambda, cfg);
  const std::vector<BigComplex> pz = r->roots.all();
  const long snap = cfg.snap_exponent();
  std::vector<ZeroBalance> out;
  for (std::size_t j = 0; j < hz.size(); ++j) {
    const BigComplex& zj = hz[j];
    ZeroBalance zb;
    zb.z = zj.to_complex();
    BigComplex lhs(bits), rhs = zj;
    for (const BigComplex& w : pz) {
      BigComplex d = zj - w;
      BigFloat ad = d.abs();
      if (ad.is_zero() || ad.exponent() <= snap) {
        zb.collision = true;
        continue;
      }
      lhs += BigComplex(BigFloat(1L, bits), BigFloat(bits)) / d;
    }
    for (std::size_t k = 0; k < hz.size(); ++k) {
      if (k == j) continue;
      rhs += BigComplex(BigFloat(1L, bits), BigFloat(bits)) / (zj - hz[k]);
    }
    zb.residual = (lhs - rhs).abs().to_double();
    out.push_back(zb);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Overlay data: zeros of H_lambda and of P_n.

struct ZeroOverlay {
  std::vector<std::complex<double>> hermite_lambda;
  std::vector<std::complex<double>> pn;
};

inline ZeroOverlay zero_overlay(const Partition& lambda, int n, const PrecisionConfig& cfg = {},
                                RootCache& cache = default_root_cache()) {
  ZeroOverlay o;
  for (const auto& z : hermite_lambda_zeros(lambda, cfg)) o.hermite_lambda.push_back(z.to_complex());
  for (const auto& z : cache.roots(lambda, n, cfg)->roots.all()) o.pn.push_back(z.to_complex());
  return o;
}

}  // namespace xherm

#endif  // XHERM_ASYMPTOTICS_HPP
