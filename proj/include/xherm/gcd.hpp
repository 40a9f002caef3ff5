#ifndef XHERM_GCD_HPP
#define XHERM_GCD_HPP

#include <utility>

#include "xherm/int_poly.hpp"

namespace xherm {

// Primitive gcd over Z[x] by the subresultant remainder sequence.
// The result has positive leading coefficient and content 1.
inline IntPoly gcd(IntPoly a, IntPoly b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.degree() < b.degree()) std::swap(a, b);
  a = primitive_part(a);
  b = primitive_part(b);
  mpz_class g = 1;
  mpz_class h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return IntPoly::constant(1);
    mpz_class hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    a = std::move(b);
    b = divexact(r, g * hd);
    g = a.leading();
    // h <- g^delta / h^{delta-1}
    mpz_class gd;
    mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
    if (delta == 0) {
      h = h * gd;  // h^{1} * g^0
    } else {
      mpz_class hd1;
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
  }
  return primitive_part(b);
}

// p / gcd(p, p'): same roots as p, each simple.
inline IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() < 1) return primitive_part(p);
  return primitive_part(divexact(primitive_part(p), gcd(p, derivative(p))));
}

}  // namespace xherm

#endif  // XHERM_GCD_HPP
