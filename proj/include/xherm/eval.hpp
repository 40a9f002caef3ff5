#ifndef XHERM_EVAL_HPP
#define XHERM_EVAL_HPP

#include "xherm/bigfloat.hpp"
#include "xherm/int_poly.hpp"

namespace xherm {

struct Evaluation {
  BigComplex value;
  // |computed - exact| <= error_bound, where "exact" is p at the given z.
  BigFloat error_bound;
};

// Horner evaluation at `bits` precision.
//
// Each complex multiply-add loses at most a few units of roundoff, so the
// classical Horner analysis gives
//   |err| <= 4 (d + 1) u * sum_k |a_k| |z|^k,   u = 2^{-bits},
// which is what `error_bound` reports (coefficient rounding included).
inline Evaluation eval_bigfloat(const IntPoly& p, const BigComplex& z, long bits = kDefaultBits) {
  if (bits < 64) throw DomainError("eval_bigfloat: need at least 64 bits");
  BigComplex zz{BigFloat(bits), BigFloat(bits)};
  zz.re() = z.re();
  zz.im() = z.im();
  zz.re().round_to(bits);
  zz.im().round_to(bits);
  BigComplex acc(bits);
  BigComplex tmp(bits);
  BigFloat mag(bits);  // running sum |a_k| |z|^k by Horner on |z|
  BigFloat az = zz.abs();
  BigFloat coeff(bits);
  for (int k = p.degree(); k >= 0; --k) {
    mul_into(tmp, acc, zz);
    mpfr_set_z(coeff.raw(), p[k].get_mpz_t(), MPFR_RNDN);
    mpfr_add(acc.re().raw(), tmp.re().raw(), coeff.raw(), MPFR_RNDN);
    mpfr_set(acc.im().raw(), tmp.im().raw(), MPFR_RNDN);
    mag *= az;
    mpfr_abs(coeff.raw(), coeff.raw(), MPFR_RNDN);
    mag += coeff;
  }
  BigFloat bound = mag * unit_roundoff(bits) * (4L * (p.degree() + 2));
  return {std::move(acc), std::move(bound)};
}

inline Evaluation eval_bigfloat(const IntPoly& p, const BigFloat& x, long bits = kDefaultBits) {
  return eval_bigfloat(p, BigComplex(x, BigFloat(bits)), bits);
}

}  // namespace xherm

#endif  // XHERM_EVAL_HPP
