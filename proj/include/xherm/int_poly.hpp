#ifndef XHERM_INT_POLY_HPP
#define XHERM_INT_POLY_HPP

// Dense univariate polynomials over Z and Q (GMP coefficients, ascending by degree).

#include <gmpxx.h>

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xherm {

// Caller passed something outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure did not reach its target accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kZeroDegree = -1;

template <class Coeff>
class DensePoly {
 public:
  using coeff_type = Coeff;

  DensePoly() = default;
  DensePoly(std::initializer_list<Coeff> c) : c_(c) { trim(); }
  explicit DensePoly(std::vector<Coeff> c) : c_(std::move(c)) { trim(); }

  static DensePoly constant(Coeff v) { return DensePoly(std::vector<Coeff>{std::move(v)}); }
  // c * x^k
  static DensePoly monomial(Coeff c, int k) {
    std::vector<Coeff> v(static_cast<std::size_t>(k) + 1, Coeff(0));
    v.back() = std::move(c);
    return DensePoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  // Coefficient of x^k (zero beyond the degree).
  Coeff operator[](int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Coeff(0);
  }
  const Coeff& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }
  // Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return static_cast<int>(i);
    return 0;
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const Coeff& s) {
    if (sgn(s) == 0) {
      c_.clear();
      return *this;
    }
    for (auto& a : c_) a *= s;
    return *this;
  }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  DensePoly operator-() const {
    DensePoly r(*this);
    for (auto& a : r.c_) a = -a;
    return r;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const Coeff& s) { return a *= s; }
  friend DensePoly operator*(const Coeff& s, DensePoly a) { return a *= s; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(r));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  // Multiply by x^k.
  DensePoly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Coeff> r(static_cast<std::size_t>(k), Coeff(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return DensePoly(std::move(r));
  }

  // p(-x)
  DensePoly reflected() const {
    DensePoly r(*this);
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  std::string to_string(char var = 'x') const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Coeff& a = c_[static_cast<std::size_t>(k)];
      if (sgn(a) == 0) continue;
      Coeff m = abs(a);
      if (!first) os << (sgn(a) < 0 ? " - " : " + ");
      else if (sgn(a) < 0) os << "-";
      first = false;
      if (k == 0 || m != 1) os << m;
      if (k >= 1) os << var;
      if (k >= 2) os << '^' << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = DensePoly<mpz_class>;
using RatPoly = DensePoly<mpq_class>;

inline IntPoly x_poly() { return IntPoly{0, 1}; }

// j-th formal derivative.
template <class Coeff>
DensePoly<Coeff> derivative(const DensePoly<Coeff>& p, int j = 1) {
  if (j < 0) throw DomainError("derivative order must be non-negative");
  if (j == 0) return p;
  if (p.degree() < j) return {};
  std::vector<Coeff> r(static_cast<std::size_t>(p.degree() - j + 1));
  for (int k = j; k <= p.degree(); ++k) {
    mpz_class f = 1;  // k (k-1) ... (k-j+1)
    for (int t = 0; t < j; ++t) f *= (k - t);
    r[static_cast<std::size_t>(k - j)] = p[k] * Coeff(f);
  }
  return DensePoly<Coeff>(std::move(r));
}

// Positive gcd of the coefficients (0 for the zero polynomial).
inline mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& a : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// p / content(p), normalized to a positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (sgn(p.leading()) < 0) g = -g;
  std::vector<mpz_class> c = p.coeffs();
  for (auto& a : c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

inline IntPoly divexact(const IntPoly& p, const mpz_class& d) {
  std::vector<mpz_class> c = p.coeffs();
  for (auto& a : c) {
    if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) throw DomainError("inexact scalar division");
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(c));
}

struct IntDivision {
  IntPoly quotient;
  IntPoly remainder;
  bool exact = false;  // true when every quotient coefficient was integral and remainder is zero
};

// Division over Z: proceeds while the leading coefficient of the running
// remainder is divisible by lc(b). `exact` reports a zero remainder with an
// integral quotient.
inline IntDivision divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  IntDivision out;
  if (a.degree() < b.degree()) {
    out.remainder = a;
    out.exact = a.is_zero();
    return out;
  }
  std::vector<mpz_class> r = a.coeffs();
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const auto& bc = b.coeffs();
  const mpz_class& lb = b.leading();
  int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    mpz_class& top = r[static_cast<std::size_t>(k)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      r.resize(static_cast<std::size_t>(k) + 1);
      out.quotient = IntPoly(std::move(q));
      out.remainder = IntPoly(std::move(r));
      out.exact = false;
      return out;
    }
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    int shift = k - db;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= t * bc[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(shift)] = std::move(t);
  }
  out.quotient = IntPoly(std::move(q));
  out.remainder = IntPoly(std::move(r));
  out.exact = out.remainder.is_zero();
  return out;
}

// a / b, which must be exact over Z.
inline IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  IntDivision d = divide(a, b);
  if (!d.exact) throw DomainError("polynomial division is not exact");
  return d.quotient;
}

inline bool divides(const IntPoly& d, const IntPoly& p) {
  if (p.is_zero()) return true;
  if (d.is_zero()) return false;
  return divide(p, d).exact;
}

// Pseudo-remainder: lc(b)^{deg a - deg b + 1} a mod b, computed without fractions.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const mpz_class& lb = b.leading();
  int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    mpz_class top = r[static_cast<std::size_t>(k)];
    for (int i = 0; i <= k; ++i) r[static_cast<std::size_t>(i)] *= lb;
    int shift = k - db;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= top * bc[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(db));
  return IntPoly(std::move(r));
}

// Exact value at an integer point.
inline mpz_class eval(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + p[k];
  return acc;
}

// Sign of p(num / 2^shift) without forming the rational: evaluates the
// homogenized polynomial sum c_k num^k 2^{shift (d-k)} exactly.
inline int sign_at_dyadic(const IntPoly& p, const mpz_class& num, unsigned long shift) {
  if (p.is_zero()) return 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, shift);
  mpz_class acc = p.leading();
  mpz_class pw = 1;
  for (int k = p.degree() - 1; k >= 0; --k) {
    pw *= scale;
    acc = acc * num + p[k] * pw;
  }
  return sgn(acc);
}

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<mpq_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.emplace_back(a);
  return RatPoly(std::move(c));
}

}  // namespace xherm

#endif  // XHERM_INT_POLY_HPP
