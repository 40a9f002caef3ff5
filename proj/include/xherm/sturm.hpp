#ifndef XHERM_STURM_HPP
#define XHERM_STURM_HPP

#include <optional>
#include <vector>

#include "xherm/int_poly.hpp"

namespace xherm {

// A real endpoint: a rational, or one of the two infinities.
struct Endpoint {
  enum class Kind { kNegInf, kFinite, kPosInf };
  Kind kind = Kind::kFinite;
  mpq_class value = 0;

  static Endpoint neg_inf() { return {Kind::kNegInf, 0}; }
  static Endpoint pos_inf() { return {Kind::kPosInf, 0}; }
  static Endpoint at(mpq_class q) {
    q.canonicalize();
    return {Kind::kFinite, std::move(q)};
  }
};

// Sign of p at a rational point (exact).
inline int sign_at(const IntPoly& p, const mpq_class& q) {
  if (p.is_zero()) return 0;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  mpz_class acc = p.leading();
  mpz_class pw = 1;
  for (int k = p.degree() - 1; k >= 0; --k) {
    pw *= den;
    acc = acc * num + p[k] * pw;
  }
  return sgn(acc);
}

inline int sign_at(const IntPoly& p, const Endpoint& e) {
  if (p.is_zero()) return 0;
  switch (e.kind) {
    case Endpoint::Kind::kPosInf: return sgn(p.leading());
    case Endpoint::Kind::kNegInf: return (p.degree() % 2 == 0 ? 1 : -1) * sgn(p.leading());
    default: return sign_at(p, e.value);
  }
}

// Sturm chain p_0 = p, p_1 = p', p_{k+1} = -prem(p_{k-1}, p_k) with positive
// scaling and content removed at every step. If p has repeated roots the
// chain is divided through by its last element, so sign variations count
// distinct roots.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p) {
    if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
    chain_.push_back(primitive_part(p));
    if (p.degree() == 0) return;
    chain_.push_back(primitive_part(derivative(p)));
    for (;;) {
      const IntPoly& a = chain_[chain_.size() - 2];
      const IntPoly& b = chain_.back();
      IntPoly r = pseudo_remainder(a, b);
      if (r.is_zero()) break;
      // prem multiplies by lc(b)^{da-db+1}; undo a negative multiplier's sign.
      const int power = a.degree() - b.degree() + 1;
      if (sgn(b.leading()) < 0 && power % 2 == 1) r = -r;
      mpz_class c = content(r);
      chain_.push_back(divexact(-r, c));
      if (chain_.back().degree() == 0) break;
    }
    if (chain_.back().degree() > 0) {
      IntPoly g = chain_.back();
      for (auto& q : chain_) q = divexact(q, g);
    }
  }

  const std::vector<IntPoly>& polys() const { return chain_; }

  int variations(const Endpoint& e) const {
    int count = 0;
    int last = 0;
    for (const auto& q : chain_) {
      int s = sign_at(q, e);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Distinct real roots in (a, b].
  int count(const Endpoint& a, const Endpoint& b) const { return variations(a) - variations(b); }

 private:
  std::vector<IntPoly> chain_;
};

// Number of distinct real roots of p in (a, b].
inline int sturm_real_root_count(const IntPoly& p, const Endpoint& a = Endpoint::neg_inf(),
                                 const Endpoint& b = Endpoint::pos_inf()) {
  return SturmChain(p).count(a, b);
}

// Smallest k with every real root of p inside (-2^k, 2^k) (Cauchy bound).
inline unsigned long root_bound_log2(const IntPoly& p) {
  if (p.degree() < 1) return 0;
  // 1 + max |a_i / a_d| < 2^k
  mpz_class lc = abs(p.leading());
  mpz_class m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, mpz_class(abs(p[i])));
  mpz_class q = m / lc + 2;
  return mpz_sizeinbase(q.get_mpz_t(), 2) + 1;
}

}  // namespace xherm

#endif  // XHERM_STURM_HPP
