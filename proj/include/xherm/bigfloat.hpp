#ifndef XHERM_BIGFLOAT_HPP
#define XHERM_BIGFLOAT_HPP

// Thin RAII layer over MPFR. Every value carries its own precision; binary
// operators produce a result at the larger of the two operand precisions.

#include <mpfr.h>
#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <complex>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>

namespace xherm {

inline constexpr long kDefaultBits = 256;

class BigFloat {
 public:
  explicit BigFloat(long bits = kDefaultBits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double x, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  BigFloat(long x, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  BigFloat(int x, long bits) : BigFloat(static_cast<long>(x), bits) {}
  BigFloat(const mpz_class& x, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  BigFloat(const mpq_class& x, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const std::string& s, long bits) {
    mpfr_init2(v_, bits);
    mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    // Steal the limbs and leave `o` as a valid 2-bit zero.
    *v_ = *o.v_;
    mpfr_init2(o.v_, MPFR_PREC_MIN);
  }
  // Assignment adopts the source precision (plain value semantics).
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  friend void swap(BigFloat& a, BigFloat& b) noexcept { mpfr_swap(a.v_, b.v_); }
  BigFloat& operator=(double x) {
    mpfr_set_d(v_, x, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator=(long x) {
    mpfr_set_si(v_, x, MPFR_RNDN);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  long prec() const { return mpfr_get_prec(v_); }
  // Changes precision, rounding the current value.
  void round_to(long bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  // Mantissa in [0.5, 1) and binary exponent; safe for values outside double range.
  std::pair<double, long> frexp() const {
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return {m, e};
  }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  long exponent() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

  // Decimal string with `digits` significant digits (0 = enough to round-trip).
  std::string to_string(int digits = 0) const {
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    if (digits <= 0) digits = static_cast<int>(std::ceil(prec() * 0.30103)) + 1;
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits) + "Rg";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  BigFloat& operator+=(const BigFloat& o) {
    widen(o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(const BigFloat& o) {
    widen(o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const BigFloat& o) {
    widen(o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator/=(const BigFloat& o) {
    widen(o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator+=(long x) {
    mpfr_add_si(v_, v_, x, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(long x) {
    mpfr_sub_si(v_, v_, x, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(long x) {
    mpfr_mul_si(v_, v_, x, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator/=(long x) {
    mpfr_div_si(v_, v_, x, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const mpz_class& x) {
    mpfr_mul_z(v_, v_, x.get_mpz_t(), MPFR_RNDN);
    return *this;
  }
  BigFloat& mul_2exp(long e) {
    mpfr_mul_2si(v_, v_, e, MPFR_RNDN);
    return *this;
  }

  BigFloat operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator+(BigFloat a, long b) { return a += b; }
  friend BigFloat operator-(BigFloat a, long b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, long b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, long b) { return a /= b; }
  friend BigFloat operator*(long b, BigFloat a) { return a *= b; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator==(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, double b) {
    int c = mpfr_cmp_d(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.to_string(20); }

 private:
  void widen(const BigFloat& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  }

  mpfr_t v_;
};

#define XHERM_BIGFLOAT_UNARY(name, fn)              \
  inline BigFloat name(const BigFloat& x) {         \
    BigFloat r(x.prec());                           \
    fn(r.raw(), x.raw(), MPFR_RNDN);                \
    return r;                                       \
  }
XHERM_BIGFLOAT_UNARY(abs, mpfr_abs)
XHERM_BIGFLOAT_UNARY(sqrt, mpfr_sqrt)
XHERM_BIGFLOAT_UNARY(exp, mpfr_exp)
XHERM_BIGFLOAT_UNARY(log, mpfr_log)
XHERM_BIGFLOAT_UNARY(sin, mpfr_sin)
XHERM_BIGFLOAT_UNARY(cos, mpfr_cos)
XHERM_BIGFLOAT_UNARY(asin, mpfr_asin)
XHERM_BIGFLOAT_UNARY(log2, mpfr_log2)
#undef XHERM_BIGFLOAT_UNARY

inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.prec(), b.prec()));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

inline BigFloat pi(long bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

// n! as a float; exact up to rounding of the final value.
inline BigFloat factorial(unsigned long n, long bits) {
  BigFloat r(bits);
  mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
  return r;
}

inline BigFloat ldexp(BigFloat x, long e) { return x.mul_2exp(e); }

// 2^{-bits}: unit roundoff of a `bits`-precision float.
inline BigFloat unit_roundoff(long bits) {
  BigFloat r(1L, 64);
  return r.mul_2exp(-bits);
}

// Complex number over BigFloat. Arithmetic is written out by hand; the hot
// loops in the root finder use the in-place forms to avoid temporaries.
class BigComplex {
 public:
  explicit BigComplex(long bits = kDefaultBits) : re_(bits), im_(bits) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(std::complex<double> z, long bits) : re_(z.real(), bits), im_(z.imag(), bits) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  BigFloat& re() { return re_; }
  BigFloat& im() { return im_; }
  long prec() const { return std::max(re_.prec(), im_.prec()); }

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  BigComplex& operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  BigComplex& operator*=(const BigFloat& s) {
    re_ *= s;
    im_ *= s;
    return *this;
  }
  BigComplex& operator*=(long s) {
    re_ *= s;
    im_ *= s;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) {
    BigFloat t(re_);
    t *= o.re_;
    BigFloat u(im_);
    u *= o.im_;
    im_ *= o.re_;
    BigFloat w(re_);
    w *= o.im_;
    im_ += w;
    re_ = std::move(t);
    re_ -= u;
    return *this;
  }
  BigComplex& operator/=(const BigComplex& o) {
    BigFloat den = o.norm();
    BigComplex c(o.re_, -o.im_);
    *this *= c;
    re_ /= den;
    im_ /= den;
    return *this;
  }

  BigComplex operator-() const { return BigComplex(-re_, -im_); }
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }

  // |z|^2
  BigFloat norm() const {
    BigFloat a(re_);
    a *= re_;
    BigFloat b(im_);
    b *= im_;
    return a += b;
  }
  BigFloat abs() const { return hypot(re_, im_); }
  BigComplex conj() const { return BigComplex(re_, -im_); }

  friend void swap(BigComplex& a, BigComplex& b) noexcept {
    swap(a.re_, b.re_);
    swap(a.im_, b.im_);
  }

 private:
  BigFloat re_;
  BigFloat im_;
};

inline BigFloat abs(const BigComplex& z) { return z.abs(); }

inline BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.re());
  return BigComplex(m * cos(z.im()), m * sin(z.im()));
}

// Scratch registers for allocation-free complex arithmetic in inner loops.
struct ComplexScratch {
  explicit ComplexScratch(long bits) : t1(bits), t2(bits), t3(bits) {}
  BigFloat t1, t2, t3;
};

// out = a * b; `out` must not alias a or b.
inline void mul_into(BigComplex& out, const BigComplex& a, const BigComplex& b) {
  mpfr_mul(out.re().raw(), a.re().raw(), b.re().raw(), MPFR_RNDN);
  mpfr_fms(out.re().raw(), a.im().raw(), b.im().raw(), out.re().raw(), MPFR_RNDN);
  mpfr_neg(out.re().raw(), out.re().raw(), MPFR_RNDN);
  mpfr_mul(out.im().raw(), a.re().raw(), b.im().raw(), MPFR_RNDN);
  mpfr_fma(out.im().raw(), a.im().raw(), b.re().raw(), out.im().raw(), MPFR_RNDN);
}

// out = 1 / a; `out` must not alias a.
inline void inv_into(BigComplex& out, const BigComplex& a, ComplexScratch& s) {
  mpfr_sqr(s.t1.raw(), a.re().raw(), MPFR_RNDN);
  mpfr_fma(s.t1.raw(), a.im().raw(), a.im().raw(), s.t1.raw(), MPFR_RNDN);
  mpfr_div(out.re().raw(), a.re().raw(), s.t1.raw(), MPFR_RNDN);
  mpfr_div(out.im().raw(), a.im().raw(), s.t1.raw(), MPFR_RNDN);
  mpfr_neg(out.im().raw(), out.im().raw(), MPFR_RNDN);
}

// out = a / b; `out` must not alias a or b.
inline void div_into(BigComplex& out, const BigComplex& a, const BigComplex& b, ComplexScratch& s) {
  mpfr_sqr(s.t1.raw(), b.re().raw(), MPFR_RNDN);
  mpfr_fma(s.t1.raw(), b.im().raw(), b.im().raw(), s.t1.raw(), MPFR_RNDN);
  // (a.re b.re + a.im b.im, a.im b.re - a.re b.im) / |b|^2
  mpfr_mul(s.t2.raw(), a.re().raw(), b.re().raw(), MPFR_RNDN);
  mpfr_fma(s.t2.raw(), a.im().raw(), b.im().raw(), s.t2.raw(), MPFR_RNDN);
  mpfr_mul(s.t3.raw(), a.re().raw(), b.im().raw(), MPFR_RNDN);
  mpfr_fms(s.t3.raw(), a.im().raw(), b.re().raw(), s.t3.raw(), MPFR_RNDN);
  mpfr_div(out.re().raw(), s.t2.raw(), s.t1.raw(), MPFR_RNDN);
  mpfr_div(out.im().raw(), s.t3.raw(), s.t1.raw(), MPFR_RNDN);
}

}  // namespace xherm

#endif  // XHERM_BIGFLOAT_HPP
