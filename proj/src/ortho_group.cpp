#include "sdnb/ortho_group.hpp"

namespace sdnb {

namespace {

void assign_orbit(const Field& ext, const CyclotomicClass& cls, const Elem& val,
                  std::vector<Elem>& freq) {
  Elem cur = val;
  for (size_t j = 0; j < cls.members.size(); ++j) {
    freq[cls.members[j]] = cur;
    if (j + 1 < cls.members.size()) cur = ext.frobenius_base(cur);
  }
}

std::vector<std::vector<u64>> pascal_mod_p(u64 rows, u64 p) {
  std::vector<std::vector<u64>> b(rows + 1);
  for (u64 a = 0; a <= rows; ++a) {
    b[a].assign(a + 1, 1);
    for (u64 k = 1; k < a; ++k) b[a][k] = (b[a - 1][k - 1] + b[a - 1][k]) % p;
  }
  return b;
}

void split_degree(u64 n, u64 p, u64& n1, u64& pe) {
  n1 = n;
  pe = 1;
  while (n1 % p == 0) {
    n1 /= p;
    pe *= p;
  }
}

}  // namespace

BigUint predicted_cardinality(u64 q, u64 n) {
  u64 p;
  unsigned r;
  prime_power_decompose(q, p, r);
  if (n == 0) throw domain_error("predicted_cardinality: n must be positive");
  if (p == 2 && n == 2) return BigUint(q);
  if (n % 2 == 0)
    throw unsupported_error("predicted_cardinality: even degree beyond n = 2 not supported");
  u64 n1, pe;
  split_degree(n, p, n1, pe);
  if (n1 > 1 && pe > 1)
    throw unsupported_error("predicted_cardinality: mixed degree not supported");
  if (pe > 1) {
    BigUint card = BigUint::pow(q, (unsigned)((n - 1) / 2));
    card.mul_small(2);
    return card;
  }
  ClassCensus census = class_type_census(decompose(n, q));
  BigUint card(p % 2 == 1 ? 2 : 1);
  for (u64 c : census.c) card.mul_small(checked_pow_u64(q, (unsigned)c) + 1);
  for (u64 d : census.d) card.mul_small(checked_pow_u64(q, (unsigned)d) - 1);
  return card;
}

GroupSpec group_spec(Field::Ptr fq, u64 n) {
  GroupSpec spec;
  spec.fq = fq;
  spec.q = fq->size_u64();
  spec.n = n;
  const u64 p = fq->p();
  if (n == 0) throw domain_error("group_spec: n must be positive");
  spec.cardinality = predicted_cardinality(spec.q, n);

  if (p == 2 && n == 2) {
    spec.kind = GroupCase::RamifiedEvenN2;
    return spec;
  }
  u64 n1, pe;
  split_degree(n, p, n1, pe);
  if (pe > 1) {
    spec.kind = GroupCase::RamifiedOdd;
    spec.binom = pascal_mod_p(n, p);
    return spec;
  }

  spec.kind = GroupCase::Semisimple;
  spec.fc = std::make_shared<const FourierCtx>(FourierCtx::create(fq, n));
  const Field& ext = *spec.fc->ext();
  if (p % 2 == 1) {
    GroupSpec::Slot sign;
    sign.kind = ClassKind::Zero;
    sign.rep = 0;
    sign.order = 2;
    sign.gen = ext.neg(ext.one());
    spec.slots.push_back(std::move(sign));
  }
  for (const CyclotomicClass& cls : spec.fc->decomposition().classes) {
    if (cls.kind == ClassKind::Zero) continue;
    if (cls.kind == ClassKind::Paired && cls.rep > cls.partner_rep) continue;
    GroupSpec::Slot slot;
    slot.kind = cls.kind;
    slot.rep = cls.rep;
    if (cls.kind == ClassKind::SelfPaired) {
      u64 c = cls.members.size() / 2;
      slot.order = checked_pow_u64(spec.q, (unsigned)c) + 1;
    } else {
      slot.order = checked_pow_u64(spec.q, (unsigned)cls.members.size()) - 1;
    }
    slot.gen = ext.element_of_order(slot.order);
    spec.slots.push_back(std::move(slot));
  }
  return spec;
}

SolutionStream::SolutionStream(GroupSpec spec) : spec_(std::move(spec)) {
  if (spec_.kind != GroupCase::Semisimple) return;
  const Field& ext = *spec_.fc->ext();
  powers_.resize(spec_.slots.size());
  for (size_t i = 0; i < spec_.slots.size(); ++i) {
    const GroupSpec::Slot& slot = spec_.slots[i];
    if (slot.order > (1u << 16)) continue;  // fall back to pow() per item
    powers_[i].resize(slot.order);
    powers_[i][0] = ext.one();
    for (u64 e = 1; e < slot.order; ++e) powers_[i][e] = ext.mul(powers_[i][e - 1], slot.gen);
  }
}

u64 SolutionStream::size() const {
  if (!spec_.cardinality.fits_u64())
    throw unsupported_error("SolutionStream: cardinality exceeds 64 bits");
  return spec_.cardinality.to_u64();
}

GaElement SolutionStream::at(u64 index) const {
  if (index >= size()) throw domain_error("SolutionStream: index out of range");
  const Field::Ptr& fq = spec_.fq;
  const u64 n = spec_.n;

  if (spec_.kind == GroupCase::RamifiedEvenN2) {
    // v = a + (a+1) X; v * conjugate(v) = (a + a + 1)^2 = 1 in characteristic 2
    GaElement v = ga_zero(fq, n);
    Elem a = fq->from_index(index);
    v.coeffs[0] = a;
    v.coeffs[1] = fq->add(a, fq->one());
    return v;
  }

  if (spec_.kind == GroupCase::RamifiedOdd) {
    const u64 q = spec_.q;
    const u64 h = (n - 1) / 2;
    // digits: sign of v_0 first, then the free odd coefficients v_1, v_3, ...
    std::vector<Elem> c(n, fq->zero());
    u64 idx = index;
    c[0] = (idx % 2) ? fq->neg(fq->one()) : fq->one();
    idx /= 2;
    for (u64 t = 0; t < h; ++t) {
      c[2 * t + 1] = fq->from_index(idx % q);
      idx /= q;
    }
    // even coefficients: the degree-2i relation is linear in v_{2i} with
    // coefficient 2 v_0
    Elem inv_lead = fq->inv(fq->mul(fq->from_u64(2), c[0]));
    for (u64 i = 1; i <= h; ++i) {
      Elem rest = fq->zero();
      for (u64 j = 1; j <= 2 * i; ++j)
        for (u64 k = 0; k <= j; ++k) {
          if (j == 2 * i && (k == 0 || k == j)) continue;  // the v_{2i} terms
          u64 a = n - k, b = 2 * i - j;
          if (b > a) continue;
          u64 bc = spec_.binom[a][b];
          if (bc == 0) continue;
          Elem term = fq->mul(c[k], c[j - k]);
          term = fq->mul(fq->from_u64(bc), term);
          rest = (k % 2) ? fq->sub(rest, term) : fq->add(rest, term);
        }
      c[2 * i] = fq->neg(fq->mul(rest, inv_lead));
    }
    // back to the standard basis: v = sum_i c_i (X - 1)^i, deg (X-1)^i < n
    GaElement v = ga_zero(fq, n);
    std::vector<Elem> pw(n, fq->zero());
    pw[0] = fq->one();
    for (u64 i = 0; i < n; ++i) {
      for (u64 t = 0; t <= i; ++t)
        v.coeffs[t] = fq->add(v.coeffs[t], fq->mul(c[i], pw[t]));
      if (i + 1 < n)
        for (u64 t = i + 2; t-- > 0;)
          pw[t] = fq->sub(t > 0 ? pw[t - 1] : fq->zero(), pw[t]);
    }
    return v;
  }

  // semisimple
  const FourierCtx& fc = *spec_.fc;
  const Field& ext = *fc.ext();
  const CyclotomicDecomposition& dec = fc.decomposition();
  std::vector<Elem> freq(n, ext.one());
  freq[0] = ext.one();
  u64 idx = index;
  for (size_t i = 0; i < spec_.slots.size(); ++i) {
    const GroupSpec::Slot& slot = spec_.slots[i];
    u64 digit = idx % slot.order;
    idx /= slot.order;
    if (slot.kind == ClassKind::Zero) {
      if (digit == 1) freq[0] = ext.neg(ext.one());
      continue;
    }
    auto power = [&](u64 e) {
      return powers_[i].empty() ? ext.pow(slot.gen, e) : powers_[i][e];
    };
    const CyclotomicClass& cls = dec.class_of(slot.rep);
    Elem val = power(digit);
    assign_orbit(ext, cls, val, freq);
    if (slot.kind == ClassKind::Paired) {
      const CyclotomicClass& partner = dec.class_of(cls.partner_rep);
      const u64 d = cls.members.size();
      // the slot at n - rep must hold val^{-1}; walk it back to the partner
      // representative with inverse Frobenius steps
      size_t j0 = 0;
      while (partner.members[j0] != n - cls.rep) ++j0;
      Elem w = power((slot.order - digit) % slot.order);
      Elem pval = ext.frobenius_base(w, (unsigned)((d - j0) % d));
      assign_orbit(ext, partner, pval, freq);
    }
  }
  return fc.inverse(freq);
}

GaElement skew_to_ga(const SkewVector& r) {
  const u64 n = r.n;
  if (n % 2 == 0 || r.r.size() != (n - 1) / 2)
    throw domain_error("skew_to_ga: expected (n-1)/2 components, n odd");
  GaElement out = ga_zero(r.fq, n);
  for (u64 i = 1; i <= (n - 1) / 2; ++i) {
    out.coeffs[i] = r.r[i - 1];
    out.coeffs[n - i] = r.fq->neg(r.r[i - 1]);
  }
  return out;
}

GaElement macwilliams_iterate(const SkewVector& r) {
  const Field::Ptr& fq = r.fq;
  const u64 n = r.n;
  if (fq->p() % 2 == 0) throw domain_error("macwilliams_iterate: requires odd characteristic");
  GaElement rg = skew_to_ga(r);
  GaElement r2 = ga_mul(rg, rg);
  Elem inv2 = fq->inv(fq->from_u64(2));
  Elem inv4 = fq->mul(inv2, inv2);
  // fixed point of s = -r^2 + s^2/4; the defect gains (X-1)-adic valuation
  // every step, and everything here is nilpotent past valuation n
  GaElement s = ga_zero(fq, n);
  bool settled = false;
  for (u64 it = 0; it <= n + 1; ++it) {
    GaElement next = ga_add(ga_neg(r2), ga_scale(inv4, ga_mul(s, s)));
    if (ga_equal(next, s)) {
      settled = true;
      break;
    }
    s = std::move(next);
  }
  if (!settled) throw internal_error("macwilliams_iterate: no fixed point within the cap");
  GaElement w = ga_sub(rg, ga_scale(inv2, s));
  GaElement one = ga_one(fq, n);
  GaElement u = ga_add(one, w);
  if (!ga_equal(ga_mul(u, conjugate(u)), one))
    throw internal_error("macwilliams_iterate: (1+w)(1+conj(w)) != 1");
  return w;
}

Elem generator_from_solution(const SdnbCertificate& cert, const GaElement& v) {
  return act(conjugate(v), cert.gamma, *cert.ctx_n);
}

}  // namespace sdnb
