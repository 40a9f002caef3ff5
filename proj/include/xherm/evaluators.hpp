#ifndef XHERM_EVALUATORS_HPP
#define XHERM_EVALUATORS_HPP

// Point evaluators used by the root finder. Each one supplies
//   - a scale-free Newton ratio p/p' in double precision (coarse stage), and
//   - p and p' at a requested MPFR precision (polishing stage).
// The double path carries a running power-of-two rescale so that
// polynomials far outside double range still give a usable ratio.

#include <climits>
#include <cmath>
#include <complex>
#include <concepts>
#include <vector>

#include "xherm/bigfloat.hpp"
#include "xherm/exceptional.hpp"
#include "xherm/int_poly.hpp"

namespace xherm {

template <class E>
concept RootEvaluator = requires(const E& e, std::complex<double> z, const BigComplex& bz, BigComplex& out,
                                 typename E::Workspace& ws, long bits) {
  { e.degree() } -> std::convertible_to<int>;
  { e.initial_radius() } -> std::convertible_to<double>;
  { e.newton_ratio(z) } -> std::same_as<std::complex<double>>;
  { e.workspace(bits) } -> std::same_as<typename E::Workspace>;
  e.eval(bz, out, out, ws);
};

namespace detail {

constexpr int kRescaleExp = 512;

// Coefficients as doubles sharing one power-of-two scale; entries far below
// the largest underflow to zero, which is harmless for a ratio.
inline std::vector<double> scaled_doubles(const std::vector<const mpz_class*>& cs, long* shift_out = nullptr) {
  long emax = LONG_MIN;
  std::vector<std::pair<double, long>> me;
  me.reserve(cs.size());
  for (const mpz_class* c : cs) {
    long e = 0;
    double m = (sgn(*c) == 0) ? 0.0 : mpz_get_d_2exp(&e, c->get_mpz_t());
    me.emplace_back(m, e);
    if (m != 0.0) emax = std::max(emax, e);
  }
  if (emax == LONG_MIN) emax = 0;
  std::vector<double> out;
  out.reserve(cs.size());
  for (auto [m, e] : me) out.push_back(m == 0.0 ? 0.0 : std::ldexp(m, static_cast<int>(std::max(e - emax, -2000L))));
  if (shift_out) *shift_out = emax;
  return out;
}

inline void maybe_rescale(std::complex<double>& a, std::complex<double>& b, int& scale) {
  if (std::abs(a.real()) + std::abs(a.imag()) > std::ldexp(1.0, kRescaleExp)) {
    a = std::ldexp(1.0, -kRescaleExp) * a;
    b = std::ldexp(1.0, -kRescaleExp) * b;
    scale += kRescaleExp;
  }
}

}  // namespace detail

// Horner on the monomial coefficients of an IntPoly.
class MonomialEvaluator {
 public:
  struct Workspace {
    std::vector<BigFloat> coeff;
    BigComplex tmp;
  };

  explicit MonomialEvaluator(IntPoly p) : p_(std::move(p)) {
    if (p_.degree() < 1) throw DomainError("root finding needs a polynomial of degree >= 1");
    std::vector<const mpz_class*> cs;
    for (const auto& c : p_.coeffs()) cs.push_back(&c);
    d_ = detail::scaled_doubles(cs);
  }

  const IntPoly& poly() const { return p_; }
  int degree() const { return p_.degree(); }

  // Geometric mean of the root moduli, |a_0 / a_d|^{1/d}, guarded for a_0 = 0.
  double initial_radius() const {
    int v = p_.valuation();
    double la = mpz_log2(p_.leading());
    double l0 = mpz_log2(p_[v]);
    double r = std::exp2((l0 - la) / (degree() - v));
    return std::isfinite(r) && r > 0 ? r : 1.0;
  }

  std::complex<double> newton_ratio(std::complex<double> z) const {
    std::complex<double> p = 0.0, dp = 0.0;
    int scale = 0;
    for (int k = degree(); k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + (scale > 2000 ? 0.0 : std::ldexp(d_[static_cast<std::size_t>(k)], -scale));
      detail::maybe_rescale(p, dp, scale);
      detail::maybe_rescale(dp, p, scale);
    }
    return p / dp;
  }

  Workspace workspace(long bits) const {
    Workspace ws{{}, BigComplex(bits)};
    for (const auto& c : p_.coeffs()) ws.coeff.emplace_back(c, bits);
    return ws;
  }

  void eval(const BigComplex& z, BigComplex& p, BigComplex& dp, Workspace& ws) const {
    mpfr_set_zero(p.re().raw(), 1);
    mpfr_set_zero(p.im().raw(), 1);
    mpfr_set_zero(dp.re().raw(), 1);
    mpfr_set_zero(dp.im().raw(), 1);
    for (int k = degree(); k >= 0; --k) {
      mul_into(ws.tmp, dp, z);
      mpfr_add(dp.re().raw(), ws.tmp.re().raw(), p.re().raw(), MPFR_RNDN);
      mpfr_add(dp.im().raw(), ws.tmp.im().raw(), p.im().raw(), MPFR_RNDN);
      mul_into(ws.tmp, p, z);
      mpfr_add(p.re().raw(), ws.tmp.re().raw(), ws.coeff[static_cast<std::size_t>(k)].raw(), MPFR_RNDN);
      mpfr_set(p.im().raw(), ws.tmp.im().raw(), MPFR_RNDN);
    }
  }

 private:
  static double mpz_log2(const mpz_class& a) {
    long e = 0;
    double m = mpz_get_d_2exp(&e, a.get_mpz_t());
    return std::log2(std::abs(m)) + static_cast<double>(e);
  }

  IntPoly p_;
  std::vector<double> d_;
};

// sum_j c_j(x) H_{top-j}(x) with the Hermite values from the three-term
// recurrence. Stable at degrees where monomial Horner cancels catastrophically.
class HermiteSeriesEvaluator {
 public:
  struct Workspace {
    std::vector<std::vector<BigFloat>> coeff;
    std::vector<BigComplex> window;  // H_{top-J-1}, ..., H_top
    BigComplex h0, h1, h2, tmp, c, dc, acc;
  };

  explicit HermiteSeriesEvaluator(HermiteSeries s) : s_(std::move(s)) {
    degree_ = s_.degree_bound();
    if (degree_ < 1) throw DomainError("root finding needs a polynomial of degree >= 1");
    std::vector<const mpz_class*> cs;
    for (const auto& q : s_.coeff)
      for (const auto& c : q.coeffs()) cs.push_back(&c);
    std::vector<double> flat = detail::scaled_doubles(cs);
    std::size_t at = 0;
    for (const auto& q : s_.coeff) {
      d_.emplace_back(flat.begin() + static_cast<long>(at), flat.begin() + static_cast<long>(at + q.coeffs().size()));
      at += q.coeffs().size();
    }
  }

  const HermiteSeries& series() const { return s_; }
  int degree() const { return degree_; }
  // Zeros of H_N lie inside |x| < sqrt(2N+1); the cofactors add a bounded cloud near the origin.
  double initial_radius() const { return std::sqrt(2.0 * std::max(s_.top, 1) + 1.0); }

  std::complex<double> newton_ratio(std::complex<double> z) const {
    const int J = static_cast<int>(s_.coeff.size()) - 1;
    const int lo = s_.top - J - 1;
    std::vector<std::complex<double>> win(static_cast<std::size_t>(J + 2), 0.0);
    std::complex<double> hm1 = 0.0, h = 1.0;  // H_{k-1}, H_k
    int scale = 0;
    for (int k = 0; k <= s_.top; ++k) {
      if (k >= lo) win[static_cast<std::size_t>(k - lo)] = h;
      std::complex<double> next = 2.0 * z * h - 2.0 * static_cast<double>(k) * hm1;
      hm1 = h;
      h = next;
      if (std::abs(h.real()) + std::abs(h.imag()) > std::ldexp(1.0, detail::kRescaleExp)) {
        const double f = std::ldexp(1.0, -detail::kRescaleExp);
        h *= f;
        hm1 *= f;
        for (auto& w : win) w *= f;
        scale += detail::kRescaleExp;
      }
    }
    std::complex<double> p = 0.0, dp = 0.0;
    for (int j = 0; j <= J; ++j) {
      const int idx = s_.top - j;
      if (idx < 0) break;
      const auto& cj = d_[static_cast<std::size_t>(j)];
      std::complex<double> c = 0.0, dc = 0.0;
      for (int i = static_cast<int>(cj.size()) - 1; i >= 0; --i) {
        dc = dc * z + c;
        c = c * z + cj[static_cast<std::size_t>(i)];
      }
      const std::complex<double> hv = win[static_cast<std::size_t>(idx - lo)];
      const std::complex<double> hd = idx >= 1 ? 2.0 * idx * win[static_cast<std::size_t>(idx - 1 - lo)] : 0.0;
      p += c * hv;
      dp += dc * hv + c * hd;
    }
    return p / dp;
  }

  Workspace workspace(long bits) const {
    Workspace ws;
    for (const auto& q : s_.coeff) {
      std::vector<BigFloat> v;
      for (const auto& c : q.coeffs()) v.emplace_back(c, bits);
      ws.coeff.push_back(std::move(v));
    }
    ws.window.assign(s_.coeff.size() + 1, BigComplex(bits));
    ws.h0 = ws.h1 = ws.h2 = ws.tmp = ws.c = ws.dc = ws.acc = BigComplex(bits);
    return ws;
  }

  void eval(const BigComplex& z, BigComplex& p, BigComplex& dp, Workspace& ws) const {
    const int J = static_cast<int>(s_.coeff.size()) - 1;
    const int lo = s_.top - J - 1;
    for (auto& w : ws.window) set_zero(w);
    // ws.h0 = H_{k-1}, ws.h1 = H_k
    set_zero(ws.h0);
    mpfr_set_ui(ws.h1.re().raw(), 1, MPFR_RNDN);
    mpfr_set_zero(ws.h1.im().raw(), 1);
    for (int k = 0; k <= s_.top; ++k) {
      if (k >= lo) copy(ws.window[static_cast<std::size_t>(k - lo)], ws.h1);
      if (k == s_.top) break;
      // h2 = 2 z h1 - 2k h0
      mul_into(ws.h2, ws.h1, z);
      mpfr_mul_2ui(ws.h2.re().raw(), ws.h2.re().raw(), 1, MPFR_RNDN);
      mpfr_mul_2ui(ws.h2.im().raw(), ws.h2.im().raw(), 1, MPFR_RNDN);
      mpfr_mul_ui(ws.tmp.re().raw(), ws.h0.re().raw(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
      mpfr_mul_ui(ws.tmp.im().raw(), ws.h0.im().raw(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
      mpfr_sub(ws.h2.re().raw(), ws.h2.re().raw(), ws.tmp.re().raw(), MPFR_RNDN);
      mpfr_sub(ws.h2.im().raw(), ws.h2.im().raw(), ws.tmp.im().raw(), MPFR_RNDN);
      swap(ws.h0, ws.h1);
      swap(ws.h1, ws.h2);
    }
    set_zero(p);
    set_zero(dp);
    for (int j = 0; j <= J; ++j) {
      const int idx = s_.top - j;
      if (idx < 0) break;
      const auto& cj = ws.coeff[static_cast<std::size_t>(j)];
      set_zero(ws.c);
      set_zero(ws.dc);
      for (int i = static_cast<int>(cj.size()) - 1; i >= 0; --i) {
        mul_into(ws.tmp, ws.dc, z);
        mpfr_add(ws.dc.re().raw(), ws.tmp.re().raw(), ws.c.re().raw(), MPFR_RNDN);
        mpfr_add(ws.dc.im().raw(), ws.tmp.im().raw(), ws.c.im().raw(), MPFR_RNDN);
        mul_into(ws.tmp, ws.c, z);
        mpfr_add(ws.c.re().raw(), ws.tmp.re().raw(), cj[static_cast<std::size_t>(i)].raw(), MPFR_RNDN);
        mpfr_set(ws.c.im().raw(), ws.tmp.im().raw(), MPFR_RNDN);
      }
      const BigComplex& hv = ws.window[static_cast<std::size_t>(idx - lo)];
      mul_into(ws.tmp, ws.c, hv);
      p += ws.tmp;
      mul_into(ws.tmp, ws.dc, hv);
      dp += ws.tmp;
      if (idx >= 1) {
        mul_into(ws.tmp, ws.c, ws.window[static_cast<std::size_t>(idx - 1 - lo)]);
        ws.tmp *= static_cast<long>(2 * idx);
        dp += ws.tmp;
      }
    }
  }

 private:
  static void set_zero(BigComplex& z) {
    mpfr_set_zero(z.re().raw(), 1);
    mpfr_set_zero(z.im().raw(), 1);
  }
  static void copy(BigComplex& dst, const BigComplex& src) {
    mpfr_set(dst.re().raw(), src.re().raw(), MPFR_RNDN);
    mpfr_set(dst.im().raw(), src.im().raw(), MPFR_RNDN);
  }

  HermiteSeries s_;
  int degree_ = 0;
  std::vector<std::vector<double>> d_;
};

}  // namespace xherm

#endif  // XHERM_EVALUATORS_HPP
