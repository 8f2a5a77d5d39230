#include "sdnb/group_algebra.hpp"

#include "sdnb/polyring.hpp"

namespace sdnb {

namespace {

void check_compat(const GaElement& a, const GaElement& b) {
  if (a.n != b.n || !same_field(a.fq, b.fq))
    throw domain_error("group algebra: mismatched ring parameters");
}

void check_ctx(const GaElement& a, const Field& ctx_n) {
  if (ctx_n.deg() != a.n || !same_field(ctx_n.base(), a.fq))
    throw domain_error("group algebra: context is not a degree-n extension of the coefficient field");
}

}  // namespace

GaElement ga_zero(Field::Ptr fq, size_t n) {
  return {fq, n, std::vector<Elem>(n, fq->zero())};
}

GaElement ga_one(Field::Ptr fq, size_t n) { return ga_monomial(fq, n, 0); }

GaElement ga_monomial(Field::Ptr fq, size_t n, size_t k) {
  GaElement a = ga_zero(fq, n);
  a.coeffs[k % n] = fq->one();
  return a;
}

bool ga_equal(const GaElement& a, const GaElement& b) {
  return a.n == b.n && a.coeffs == b.coeffs && same_field(a.fq, b.fq);
}

bool ga_is_zero(const GaElement& a) {
  for (const auto& c : a.coeffs)
    if (!a.fq->is_zero(c)) return false;
  return true;
}

GaElement ga_add(const GaElement& a, const GaElement& b) {
  check_compat(a, b);
  GaElement out = a;
  for (size_t i = 0; i < a.n; ++i) out.coeffs[i] = a.fq->add(a.coeffs[i], b.coeffs[i]);
  return out;
}

GaElement ga_sub(const GaElement& a, const GaElement& b) {
  check_compat(a, b);
  GaElement out = a;
  for (size_t i = 0; i < a.n; ++i) out.coeffs[i] = a.fq->sub(a.coeffs[i], b.coeffs[i]);
  return out;
}

GaElement ga_neg(const GaElement& a) {
  GaElement out = a;
  for (auto& c : out.coeffs) c = a.fq->neg(c);
  return out;
}

GaElement ga_scale(const Elem& c, const GaElement& a) {
  GaElement out = a;
  for (auto& x : out.coeffs) x = a.fq->mul(c, x);
  return out;
}

GaElement ga_mul(const GaElement& a, const GaElement& b) {
  check_compat(a, b);
  const Field& k = *a.fq;
  GaElement out = ga_zero(a.fq, a.n);
  for (size_t i = 0; i < a.n; ++i) {
    if (k.is_zero(a.coeffs[i])) continue;
    for (size_t j = 0; j < a.n; ++j) {
      if (k.is_zero(b.coeffs[j])) continue;
      size_t t = i + j >= a.n ? i + j - a.n : i + j;
      out.coeffs[t] = k.add(out.coeffs[t], k.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return out;
}

GaElement conjugate(const GaElement& a) {
  GaElement out = ga_zero(a.fq, a.n);
  for (size_t i = 0; i < a.n; ++i) out.coeffs[(a.n - i) % a.n] = a.coeffs[i];
  return out;
}

Elem augmentation(const GaElement& a) {
  Elem s = a.fq->zero();
  for (const auto& c : a.coeffs) s = a.fq->add(s, c);
  return s;
}

GaElement ga_inverse(const GaElement& a) {
  const Field& k = *a.fq;
  polyring::Poly ap(a.coeffs.begin(), a.coeffs.end());
  polyring::normalize(k, ap);
  polyring::Poly xn1(a.n + 1, k.zero());
  xn1[0] = k.neg(k.one());
  xn1[a.n] = k.one();
  polyring::Poly g, s;
  polyring::ext_gcd(k, ap, xn1, g, s);
  if (polyring::degree(g) != 0) {
    polyring::Poly gm = polyring::make_monic(k, g);
    throw domain_error("ga_inverse: element not invertible, gcd with X^n-1 has degree " +
                       std::to_string(polyring::degree(gm)));
  }
  Elem ginv = k.inv(g[0]);
  GaElement out = ga_zero(a.fq, a.n);
  for (size_t i = 0; i < s.size(); ++i) out.coeffs[i % a.n] = k.add(out.coeffs[i % a.n], k.mul(s[i], ginv));
  return out;
}

Elem act(const GaElement& a, const Elem& x, const Field& ctx_n) {
  check_ctx(a, ctx_n);
  Elem acc = ctx_n.zero();
  Elem conj = x;
  for (size_t i = 0; i < a.n; ++i) {
    if (!a.fq->is_zero(a.coeffs[i])) {
      Elem term = ctx_n.scale(a.coeffs[i], conj);
      ctx_n.add_raw(acc.data(), term.data(), acc.data());
    }
    if (i + 1 < a.n) conj = ctx_n.frobenius_base(conj);
  }
  return acc;
}

GaElement compute_R(const Elem& alpha, const Field& ctx_n) {
  size_t n = ctx_n.deg();
  GaElement r = ga_zero(ctx_n.base(), n);
  Elem conj = alpha;
  for (size_t i = 0; i < n; ++i) {
    r.coeffs[i] = ctx_n.trace_of_product(alpha, conj);
    if (i + 1 < n) conj = ctx_n.frobenius_base(conj);
  }
  return r;
}

namespace testing {

std::vector<std::vector<Elem>> circulant_of(const GaElement& a) {
  std::vector<std::vector<Elem>> m(a.n, std::vector<Elem>(a.n));
  for (size_t i = 0; i < a.n; ++i)
    for (size_t j = 0; j < a.n; ++j) m[i][j] = a.coeffs[(j + a.n - i) % a.n];
  return m;
}

}  // namespace testing

}  // namespace sdnb
