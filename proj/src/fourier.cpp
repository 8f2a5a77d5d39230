#include "sdnb/fourier.hpp"

#include <random>

namespace sdnb {

FourierCtx FourierCtx::create(Field::Ptr fq, u64 n) {
  FourierCtx ctx;
  ctx.fq_ = fq;
  ctx.n_ = n;
  ctx.dec_ = decompose(n, fq->size_u64());
  ctx.ext_ = Field::extension(fq, (size_t)ctx.dec_.m);
  Elem zeta = ctx.ext_->element_of_order(n);
  ctx.zeta_pow_.resize(n);
  ctx.zeta_pow_[0] = ctx.ext_->one();
  for (u64 k = 1; k < n; ++k) ctx.zeta_pow_[k] = ctx.ext_->mul(ctx.zeta_pow_[k - 1], zeta);
  ctx.inv_n_ = fq->inv(fq->from_u64(n));
  // sanity: round trip on a deterministic pseudo-random element
  std::mt19937_64 rng(n * 0x100000001b3ull + fq->dim());
  GaElement probe = ga_zero(fq, n);
  std::uniform_int_distribution<u64> coord(0, fq->p() - 1);
  for (auto& c : probe.coeffs)
    for (auto& x : c) x = coord(rng);
  if (!ga_equal(ctx.inverse(ctx.forward(probe)), probe))
    throw internal_error("FourierCtx: inverse(forward(u)) != u at construction");
  return ctx;
}

std::vector<Elem> FourierCtx::forward(const GaElement& u) const {
  if (u.n != n_ || !same_field(u.fq, fq_)) throw domain_error("forward: mismatched element");
  std::vector<Elem> out(n_);
  for (u64 s = 0; s < n_; ++s) {
    const Elem& x = zeta_pow_[s];
    Elem acc = ext_->zero();
    for (size_t k = n_; k-- > 0;) {
      acc = ext_->mul(acc, x);
      Elem c = ext_->embed_base(u.coeffs[k]);
      ext_->add_raw(acc.data(), c.data(), acc.data());
    }
    out[s] = std::move(acc);
  }
  return out;
}

GaElement FourierCtx::inverse(const std::vector<Elem>& vals) const {
  if (vals.size() != n_) throw domain_error("inverse: expected n components");
  for (u64 s = 0; s < n_; ++s) {
    u64 qs = (u64)((u128)s * dec_.q % n_);
    if (!ext_->equal(vals[qs], ext_->frobenius_base(vals[s])))
      throw domain_error("inverse: result not rational over F_q (input not Frobenius-coherent)");
  }
  GaElement out = ga_zero(fq_, n_);
  for (u64 t = 0; t < n_; ++t) {
    const Elem& x = zeta_pow_[(n_ - t) % n_];  // zeta^{-t}
    Elem acc = ext_->zero();
    for (size_t i = n_; i-- > 0;) {
      acc = ext_->mul(acc, x);
      ext_->add_raw(acc.data(), vals[i].data(), acc.data());
    }
    if (!ext_->in_base(acc))
      throw internal_error("inverse: coefficient escaped F_q despite coherent input");
    out.coeffs[t] = fq_->mul(inv_n_, ext_->project_base(acc));
  }
  return out;
}

std::vector<Elem> FourierCtx::conjugate_in_frequency(const std::vector<Elem>& vals) const {
  if (vals.size() != n_) throw domain_error("conjugate_in_frequency: expected n components");
  std::vector<Elem> out(n_);
  for (u64 s = 0; s < n_; ++s) out[(n_ - s) % n_] = vals[s];
  return out;
}

}  // namespace sdnb
