#pragma once

#include <vector>

#include "sdnb/field.hpp"

namespace sdnb {

/// Element of F_q[X]/(X^n - 1), identified with the group algebra F_q[G] of
/// the Galois group by mapping the Frobenius to X.
struct GaElement {
  Field::Ptr fq;
  size_t n = 0;
  std::vector<Elem> coeffs;  // coefficient of X^k at index k, n entries
};

GaElement ga_zero(Field::Ptr fq, size_t n);
GaElement ga_one(Field::Ptr fq, size_t n);
GaElement ga_monomial(Field::Ptr fq, size_t n, size_t k);
bool ga_equal(const GaElement& a, const GaElement& b);
bool ga_is_zero(const GaElement& a);

GaElement ga_add(const GaElement& a, const GaElement& b);
GaElement ga_sub(const GaElement& a, const GaElement& b);
GaElement ga_neg(const GaElement& a);
GaElement ga_scale(const Elem& c, const GaElement& a);
/// Cyclic convolution.
GaElement ga_mul(const GaElement& a, const GaElement& b);
/// The bar involution X -> X^{n-1}.
GaElement conjugate(const GaElement& a);
/// Sum of coefficients.
Elem augmentation(const GaElement& a);
/// Inverse in F_q[X]/(X^n - 1); throws domain_error when gcd(a, X^n-1) != 1.
GaElement ga_inverse(const GaElement& a);

/// The module action: act(a, x) = sum_k a_k x^{q^k} in ctx_n (extension of
/// a.fq of degree n).
Elem act(const GaElement& a, const Elem& x, const Field& ctx_n);

/// R = sum_i tr(alpha * alpha^{q^i}) X^i for a normal element alpha of ctx_n.
GaElement compute_R(const Elem& alpha, const Field& ctx_n);

namespace testing {
/// Circulant matrix of a group-algebra element (row i, column j holds the
/// coefficient at index j - i mod n). Test support only.
std::vector<std::vector<Elem>> circulant_of(const GaElement& a);
}  // namespace testing

}  // namespace sdnb
