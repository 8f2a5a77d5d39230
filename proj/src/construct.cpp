#include "sdnb/construct.hpp"

#include <functional>

#include "sdnb/polyring.hpp"
#include "sdnb/search.hpp"

namespace sdnb {

bool existence_check(u64 q, u64 n) {
  if (q < 2 || n < 1) throw domain_error("existence_check: need q >= 2, n >= 1");
  if (n % 2 == 1) return true;
  return q % 2 == 0 && n % 4 == 2;
}

bool verify_sdnb(const Elem& gamma, const Field& ctx_n) {
  const size_t n = ctx_n.deg();
  std::vector<Elem> conj(n);
  conj[0] = gamma;
  for (size_t i = 1; i < n; ++i) conj[i] = ctx_n.frobenius_base(conj[i - 1]);
  const Field& fq = *ctx_n.base();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      Elem t = ctx_n.trace_of_product(conj[i], conj[j]);
      if (i == j ? !fq.equal(t, fq.one()) : !fq.is_zero(t)) return false;
    }
  return true;
}

namespace {

// Assigns val to the representative slot of cls and propagates along the
// orbit by Frobenius, keeping the frequency vector coherent.
void assign_orbit(const Field& ext, const CyclotomicClass& cls, const Elem& val,
                  std::vector<Elem>& freq) {
  Elem cur = val;
  for (size_t j = 0; j < cls.members.size(); ++j) {
    freq[cls.members[j]] = cur;
    if (j + 1 < cls.members.size()) cur = ext.frobenius_base(cur);
  }
}

u64 smallest_sqrt_mod(u64 a, u64 p) {
  for (u64 x = 1; x < p; ++x)
    if (mulmod_u64(x, x, p) == a % p) return x;
  return 0;
}

}  // namespace

namespace testing {

std::pair<u64, u64> case_c_scan(u64 p) {
  for (u64 t = 2; t < 2 * p + 2; ++t) {
    u64 mt = (p - t % p) % p;
    if (mt == 0) continue;
    u64 eta = smallest_sqrt_mod(mt, p);
    if (eta == 0) continue;
    if (smallest_sqrt_mod((2 * p - (t - 1)) % p, p) != 0)
      throw internal_error("case_c_scan: -(t-1) is a square despite minimal t");
    return {t, eta};
  }
  throw internal_error("case_c_scan: no admissible t found");
}

}  // namespace testing

GaElement solve_semisimple(const Elem& alpha, const Field& ctx_n, const FourierCtx& fc) {
  const Field::Ptr& fq = ctx_n.base();
  const Field& ext = *fc.ext();
  const u64 n = fc.n();
  const u64 p = fq->p();

  GaElement R = compute_R(alpha, ctx_n);
  std::vector<Elem> Rhat = fc.forward(R);
  std::vector<Elem> freq(n, ext.zero());

  for (const CyclotomicClass& cls : fc.decomposition().classes) {
    switch (cls.kind) {
      case ClassKind::Zero:
        // R(1) = tr(alpha)^2; v(1) = tr(alpha) works.
        freq[0] = ext.embed_base(ctx_n.trace_to_base(alpha));
        break;
      case ClassKind::Paired:
        if (cls.rep < cls.partner_rep) {
          assign_orbit(ext, cls, Rhat[cls.rep], freq);
          assign_orbit(ext, fc.decomposition().class_of(cls.partner_rep), ext.one(), freq);
        }
        break;
      case ClassKind::SelfPaired: {
        const Elem& Rs = Rhat[cls.rep];
        // s q^k = -s mod n at the halfway point of the orbit
        const unsigned k = (unsigned)(cls.members.size() / 2);
        if (cls.members[k] != n - cls.rep)
          throw internal_error("solve_semisimple: orbit midpoint is not the negation");
        auto j_invariant = [&](const Elem& u) { return ext.equal(ext.frobenius_base(u, k), u); };
        auto root = ext.sqrt(Rs);
        if (!root) throw internal_error("solve_semisimple: R_s has no square root");
        Elem vs;
        if (j_invariant(*root)) {
          vs = *root;
        } else {
          auto root2 = ext.sqrt(ext.neg(Rs));
          if (!root2) throw internal_error("solve_semisimple: -R_s has no square root");
          if (!j_invariant(*root2)) {
            vs = *root2;
          } else {
            // both invariant options fail; mix them with prime-field scalars
            auto [t, eta] = testing::case_c_scan(p);
            u64 nu = smallest_sqrt_mod((t - 1) % p, p);
            if (nu == 0 && (t - 1) % p != 0)
              throw internal_error("solve_semisimple: t - 1 has no square root mod p");
            Elem num = ext.add(ext.scale(ext.base()->from_u64(nu), *root), *root2);
            vs = ext.scale(ext.base()->inv(ext.base()->from_u64(eta)), num);
          }
        }
        assign_orbit(ext, cls, vs, freq);
        break;
      }
    }
  }

  GaElement v = fc.inverse(freq);
  if (!ga_equal(ga_mul(v, conjugate(v)), R))
    throw internal_error("solve_semisimple: v * conjugate(v) != R");
  return v;
}

GaElement solve_ramified(const Elem& alpha, const Field& ctx_n) {
  const Field::Ptr& fq = ctx_n.base();
  const u64 n = ctx_n.deg();
  if (fq->p() % 2 == 0) throw domain_error("solve_ramified: requires odd characteristic");

  GaElement R = compute_R(alpha, ctx_n);
  Elem tr_a = ctx_n.trace_to_base(alpha);
  if (fq->is_zero(tr_a)) throw internal_error("solve_ramified: normal element has zero trace");
  if (!fq->equal(augmentation(R), fq->mul(tr_a, tr_a)))
    throw internal_error("solve_ramified: augmentation(R) != tr(alpha)^2");

  // Newton iteration for omega^2 = R in the local ring F_q[X]/(X^n - 1);
  // the defect valuation at (X - 1) doubles each step.
  GaElement omega = ga_zero(fq, n);
  omega.coeffs[0] = tr_a;
  Elem two = fq->from_u64(2);
  unsigned cap = 3;
  for (u64 v = 1; v < n; v *= 2) ++cap;
  for (unsigned it = 0; it < cap; ++it) {
    GaElement diff = ga_sub(R, ga_mul(omega, omega));
    if (ga_is_zero(diff)) break;
    GaElement step = ga_mul(diff, ga_inverse(ga_scale(two, omega)));
    omega = ga_add(omega, step);
  }
  if (!ga_equal(ga_mul(omega, omega), R))
    throw internal_error("solve_ramified: Newton iteration did not converge");
  if (!ga_equal(conjugate(omega), omega))
    throw internal_error("solve_ramified: omega is not self-conjugate");
  return omega;
}

SdnbCertificate construct_even_quadratic(Field::Ptr fq) {
  if (fq->p() != 2) throw domain_error("construct_even_quadratic: requires characteristic 2");
  Field::Ptr ctx2 = Field::extension(fq, (size_t)2);
  Elem x = ctx2->zero();
  ctx2->set_coeff(x, 1, fq->one());
  Elem t = ctx2->trace_to_base(x);
  // tr(x) = 0 would force x into the base field
  if (fq->is_zero(t)) throw internal_error("construct_even_quadratic: generator has zero trace");
  Elem beta = ctx2->scale(fq->inv(t), x);
  if (!verify_sdnb(beta, *ctx2))
    throw internal_error("construct_even_quadratic: verification failed");
  SdnbCertificate cert;
  cert.fq = fq;
  cert.ctx_n = ctx2;
  cert.q = fq->size_u64();
  cert.n = 2;
  cert.gamma = beta;
  return cert;
}

SdnbCertificate construct(Field::Ptr fq, u64 n) {
  const u64 q = fq->size_u64();
  const u64 p = fq->p();
  if (!existence_check(q, n))
    throw nonexistence_error("no self-dual normal basis for these parameters");

  u64 n1 = n, pe = 1;
  while (n1 % p == 0) {
    n1 /= p;
    pe *= p;
  }

  if (n1 > 1 && pe > 1) {
    return compose_coprime(construct(fq, n1), construct(fq, pe));
  }
  if (pe > 1 && p == 2) {
    // existence restricts even characteristic to n = 2 exactly
    if (pe != 2 || n1 != 1) throw internal_error("construct: unexpected even-degree split");
    return construct_even_quadratic(fq);
  }

  SdnbCertificate cert;
  cert.fq = fq;
  cert.q = q;
  cert.n = n;
  cert.ctx_n = Field::extension(fq, (size_t)n);
  if (n == 1) {
    cert.gamma = cert.ctx_n->one();
  } else {
    Elem alpha = cert.ctx_n->find_normal_element();
    GaElement v;
    if (pe > 1) {
      v = solve_ramified(alpha, *cert.ctx_n);
    } else {
      FourierCtx fc = FourierCtx::create(fq, n);
      v = solve_semisimple(alpha, *cert.ctx_n, fc);
    }
    cert.gamma = act(ga_inverse(v), alpha, *cert.ctx_n);
    cert.v = std::move(v);
  }
  if (!verify_sdnb(cert.gamma, *cert.ctx_n))
    throw internal_error("construct: generator failed self-duality verification");
  return cert;
}

SdnbCertificate construct(u64 q, u64 n) { return construct(Field::make_fq(q), n); }

namespace {

// Image of cert.gamma under the embedding of cert.ctx_n into big that sends
// the tower generator to a root of cert's modulus; coords holds the embedding
// of cert's base field into big.
Elem embed_gamma(const Field& big, const SdnbCertificate& cert,
                 const std::function<Elem(const Elem&)>& lift_coeff) {
  polyring::Poly h;
  h.reserve(cert.ctx_n->modulus().size());
  for (const Elem& c : cert.ctx_n->modulus()) h.push_back(lift_coeff(c));
  Elem root = polyring::find_root(big, h);
  Elem out = big.zero();
  for (size_t j = cert.ctx_n->deg(); j-- > 0;) {
    out = big.mul(out, root);
    out = big.add(out, lift_coeff(cert.ctx_n->coeff(cert.gamma, j)));
  }
  return out;
}

u64 cert_complexity(const SdnbCertificate& c) {
  if (c.complexity) return *c.complexity;
  return complexity(c.gamma, *c.ctx_n);
}

}  // namespace

SdnbCertificate compose_coprime(const SdnbCertificate& a, const SdnbCertificate& b) {
  if (!same_field(a.fq, b.fq)) throw domain_error("compose_coprime: mismatched base fields");
  if (gcd_u64(a.n, b.n) != 1) throw domain_error("compose_coprime: degrees must be coprime");
  if (a.n == 1) return b;
  if (b.n == 1) return a;

  SdnbCertificate out;
  out.fq = a.fq;
  out.q = a.q;
  out.n = a.n * b.n;
  out.ctx_n = Field::extension(a.fq, (size_t)out.n);
  const Field& big = *out.ctx_n;
  auto lift = [&](const Elem& c) { return big.embed_base(c); };
  Elem ga = embed_gamma(big, a, lift);
  Elem gb = embed_gamma(big, b, lift);
  out.gamma = big.mul(ga, gb);
  if (!verify_sdnb(out.gamma, big))
    throw internal_error("compose_coprime: product failed self-duality verification");
  u64 ca = cert_complexity(a), cb = cert_complexity(b);
  u64 cprod = complexity(out.gamma, big);
  if (cprod != ca * cb)
    throw internal_error("compose_coprime: complexity is not multiplicative");
  out.complexity = cprod;
  return out;
}

SdnbCertificate base_extension(const SdnbCertificate& cert, u64 r) {
  if (r == 0) throw domain_error("base_extension: r must be positive");
  if (gcd_u64(cert.n, r) != 1)
    throw domain_error("base_extension: extension degree must be coprime to n");
  if (r == 1) return cert;

  SdnbCertificate out;
  out.fq = Field::extension(cert.fq, (size_t)r);
  out.q = out.fq->size_u64();
  out.n = cert.n;
  out.ctx_n = Field::extension(out.fq, (size_t)cert.n);
  const Field& big = *out.ctx_n;
  auto lift = [&](const Elem& c) { return big.embed_base(out.fq->embed_base(c)); };
  out.gamma = embed_gamma(big, cert, lift);
  if (!verify_sdnb(out.gamma, big))
    throw internal_error("base_extension: generator failed self-duality verification");
  u64 c0 = cert_complexity(cert);
  u64 c1 = complexity(out.gamma, big);
  if (c1 != c0) throw internal_error("base_extension: complexity changed");
  out.complexity = c1;
  return out;
}

}  // namespace sdnb
