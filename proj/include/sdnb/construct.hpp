#pragma once

#include <optional>

#include "sdnb/fourier.hpp"
#include "sdnb/group_algebra.hpp"

namespace sdnb {

/// A verified self-dual normal basis generator for F_{q^n}/F_q.
struct SdnbCertificate {
  Field::Ptr fq;
  Field::Ptr ctx_n;  // F_{q^n} as a degree-n extension of fq
  u64 q = 0;
  u64 n = 0;
  Elem gamma;
  std::optional<GaElement> v;  // the v*conj(v) = R solution used, when applicable
  std::optional<u64> complexity;
};

/// Lempel-Weinberger existence conditions.
bool existence_check(u64 q, u64 n);

/// tr(gamma^{q^i} gamma^{q^j}) = delta_{ij} for all i, j.
bool verify_sdnb(const Elem& gamma, const Field& ctx_n);

/// Semi-simple case: a v with v * conjugate(v) = R(alpha), built per
/// cyclotomic class through the evaluation transform.
GaElement solve_semisimple(const Elem& alpha, const Field& ctx_n, const FourierCtx& fc);

/// Ramified odd case (n = p^e, p odd): omega with omega^2 = R(alpha) and
/// conjugate(omega) = omega, by Hensel lifting from the augmentation.
GaElement solve_ramified(const Elem& alpha, const Field& ctx_n);

/// q even, n = 2: any beta with tr(beta) = 1 generates an SDNB.
SdnbCertificate construct_even_quadratic(Field::Ptr fq);

/// Full pipeline for F_{q^n}/F_q; auto-splits mixed degrees n = n1 * p^e
/// through the compositum.
SdnbCertificate construct(Field::Ptr fq, u64 n);
SdnbCertificate construct(u64 q, u64 n);

/// Compositum of coprime-degree certificates over the same F_q; the
/// complexity of the product generator is the product of the complexities.
SdnbCertificate compose_coprime(const SdnbCertificate& a, const SdnbCertificate& b);

/// Reinterpret a certificate for F_{q^n}/F_q as one for F_{q^{rn}}/F_{q^r}
/// (gcd(n, r) = 1); same generator, same complexity.
SdnbCertificate base_extension(const SdnbCertificate& cert, u64 r);

namespace testing {
/// Scalars for the mixed self-paired fallback: smallest t >= 2 with -t a
/// nonzero square mod p, returned with eta = smallest square root of -t.
/// Checks that -(t-1) is not a square mod p.
std::pair<u64, u64> case_c_scan(u64 p);
}  // namespace testing

}  // namespace sdnb
