#include "sdnb/field.hpp"

#include <cstring>
#include <random>

#include "sdnb/polyring.hpp"

namespace sdnb {

Field::Ptr Field::prime(u64 p) {
  if (!is_prime_u64(p)) throw domain_error("characteristic " + std::to_string(p) + " is not prime");
  auto f = Ptr(new Field());
  auto* m = const_cast<Field*>(f.get());
  m->p_ = p;
  m->size_ = BigUint(p);
  return f;
}

Field::Ptr Field::extension(Ptr base, std::vector<Elem> modulus) {
  if (!base) throw domain_error("extension: null base field");
  if (modulus.size() < 2) throw domain_error("extension: modulus must have degree >= 1");
  size_t deg = modulus.size() - 1;
  for (const auto& c : modulus) {
    if (c.size() != base->dim()) throw domain_error("extension: modulus coefficient has wrong length");
  }
  if (!base->equal(modulus.back(), base->one())) throw domain_error("extension: modulus must be monic");
  {
    polyring::Poly f(modulus.begin(), modulus.end());
    if (!polyring::is_irreducible(*base, f)) throw domain_error("extension: modulus is reducible");
  }
  auto f = Ptr(new Field());
  auto* m = const_cast<Field*>(f.get());
  m->base_ = base;
  m->p_ = base->p();
  m->deg_ = deg;
  m->dim_ = base->dim() * deg;
  m->size_ = BigUint::pow(m->p_, (unsigned)m->dim_);
  m->modulus_ = std::move(modulus);
  m->init_extension_tables();
  return f;
}

Field::Ptr Field::extension(Ptr base, size_t degree) {
  if (degree < 1) throw domain_error("extension: degree must be >= 1");
  u64 bsize;
  try {
    bsize = base->size_u64();
  } catch (const std::overflow_error&) {
    throw unsupported_error("extension: base field too large for modulus enumeration");
  }
  // lowest-index monic irreducible; index digits are the coefficients,
  // constant term least significant
  for (u64 idx = 0;; ++idx) {
    std::vector<Elem> mod(degree + 1);
    u64 t = idx;
    bool overflow = false;
    for (size_t j = 0; j < degree; ++j) {
      mod[j] = base->from_index(t % bsize);
      t /= bsize;
    }
    if (t) overflow = true;
    mod[degree] = base->one();
    if (overflow) throw internal_error("extension: exhausted modulus candidates");
    polyring::Poly f(mod.begin(), mod.end());
    if (polyring::is_irreducible(*base, f)) return extension(base, std::move(mod));
  }
}

Field::Ptr Field::make_fq(u64 q) {
  u64 p;
  unsigned r;
  prime_power_decompose(q, p, r);
  auto fp = prime(p);
  return r == 1 ? fp : extension(fp, (size_t)r);
}

u64 Field::size_u64() const {
  if (!size_.fits_u64()) throw std::overflow_error("field size exceeds 64 bits");
  return size_.to_u64();
}

Elem Field::one() const {
  Elem e(dim_, 0);
  e[0] = 1 % p_;
  return e;
}

bool Field::is_zero(const Elem& a) const { return is_zero_raw(a.data()); }

bool Field::is_zero_raw(const u64* a) const {
  for (size_t i = 0; i < dim_; ++i)
    if (a[i]) return false;
  return true;
}

Elem Field::from_u64(u64 v) const {
  Elem e(dim_, 0);
  e[0] = v % p_;
  return e;
}

Elem Field::from_index(u64 idx) const {
  Elem e(dim_, 0);
  for (size_t i = 0; i < dim_ && idx; ++i) {
    e[i] = idx % p_;
    idx /= p_;
  }
  if (idx) throw domain_error("from_index: index out of range");
  return e;
}

u64 Field::to_index(const Elem& a) const {
  u64 idx = 0;
  for (size_t i = dim_; i-- > 0;) {
    if (a[i] && (u128)idx * p_ + a[i] > UINT64_MAX) throw std::overflow_error("to_index overflow");
    idx = idx * p_ + a[i];
  }
  return idx;
}

void Field::add_raw(const u64* a, const u64* b, u64* out) const {
  for (size_t i = 0; i < dim_; ++i) {
    u64 s = a[i] + b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
}

void Field::sub_raw(const u64* a, const u64* b, u64* out) const {
  for (size_t i = 0; i < dim_; ++i) {
    u64 s = a[i] + p_ - b[i];
    out[i] = s >= p_ ? s - p_ : s;
  }
}

Elem Field::add(const Elem& a, const Elem& b) const {
  Elem out(dim_);
  add_raw(a.data(), b.data(), out.data());
  return out;
}

Elem Field::sub(const Elem& a, const Elem& b) const {
  Elem out(dim_);
  sub_raw(a.data(), b.data(), out.data());
  return out;
}

Elem Field::neg(const Elem& a) const {
  Elem out(dim_);
  for (size_t i = 0; i < dim_; ++i) out[i] = a[i] ? p_ - a[i] : 0;
  return out;
}

void Field::mul_raw(const u64* a, const u64* b, u64* out) const {
  if (!base_) {
    out[0] = mulmod_u64(a[0], b[0], p_);
    return;
  }
  const Field& B = *base_;
  const size_t bd = B.dim_;
  std::vector<u64> conv((2 * deg_ - 1) * bd, 0);
  std::vector<u64> tmp(bd);
  for (size_t i = 0; i < deg_; ++i) {
    if (B.is_zero_raw(a + i * bd)) continue;
    for (size_t j = 0; j < deg_; ++j) {
      if (B.is_zero_raw(b + j * bd)) continue;
      B.mul_raw(a + i * bd, b + j * bd, tmp.data());
      u64* c = conv.data() + (i + j) * bd;
      for (size_t t = 0; t < bd; ++t) {
        u64 s = c[t] + tmp[t];
        c[t] = s >= p_ ? s - p_ : s;
      }
    }
  }
  std::memcpy(out, conv.data(), deg_ * bd * sizeof(u64));
  for (size_t k = deg_; k <= 2 * deg_ - 2; ++k) {
    const u64* carry = conv.data() + k * bd;
    if (B.is_zero_raw(carry)) continue;
    axpy_raw(carry, red_table_[k - deg_].data(), out);
  }
}

void Field::axpy_raw(const u64* scalar_base, const u64* x, u64* acc) const {
  const Field& B = *base_;
  const size_t bd = B.dim_;
  std::vector<u64> tmp(bd);
  for (size_t j = 0; j < deg_; ++j) {
    if (B.is_zero_raw(x + j * bd)) continue;
    B.mul_raw(x + j * bd, scalar_base, tmp.data());
    u64* c = acc + j * bd;
    for (size_t t = 0; t < bd; ++t) {
      u64 s = c[t] + tmp[t];
      c[t] = s >= p_ ? s - p_ : s;
    }
  }
}

Elem Field::mul(const Elem& a, const Elem& b) const {
  Elem out(dim_);
  mul_raw(a.data(), b.data(), out.data());
  return out;
}

Elem Field::inv(const Elem& a) const {
  if (is_zero(a)) throw domain_error("inversion of zero");
  if (!base_) return {powmod_u64(a[0], p_ - 2, p_)};
  const Field& B = *base_;
  polyring::Poly ap;
  for (size_t j = 0; j < deg_; ++j) ap.push_back(coeff(a, j));
  polyring::normalize(B, ap);
  polyring::Poly mp(modulus_.begin(), modulus_.end());
  polyring::Poly g, s;
  polyring::ext_gcd(B, ap, mp, g, s);
  if (polyring::degree(g) != 0) throw internal_error("inv: element not invertible in a field");
  Elem ginv = B.inv(g[0]);
  Elem out = zero();
  for (size_t j = 0; j < s.size() && j < deg_; ++j) set_coeff(out, j, B.mul(s[j], ginv));
  return out;
}

Elem Field::pow(const Elem& a, u64 e) const {
  Elem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Elem Field::pow(const Elem& a, const BigUint& e) const {
  Elem r = one();
  for (size_t i = e.bit_length(); i-- > 0;) {
    r = mul(r, r);
    if (e.bit(i)) r = mul(r, a);
  }
  return r;
}

Elem Field::embed_base(const Elem& b) const {
  if (!base_) throw domain_error("embed_base: prime field has no base");
  if (b.size() != base_->dim()) throw domain_error("embed_base: wrong element length");
  Elem e(dim_, 0);
  std::copy(b.begin(), b.end(), e.begin());
  return e;
}

bool Field::in_base(const Elem& a) const {
  for (size_t i = base_->dim(); i < dim_; ++i)
    if (a[i]) return false;
  return true;
}

Elem Field::project_base(const Elem& a) const {
  if (!in_base(a)) throw domain_error("project_base: element not in the base field");
  return Elem(a.begin(), a.begin() + base_->dim());
}

Elem Field::coeff(const Elem& a, size_t j) const {
  const size_t bd = base_->dim();
  return Elem(a.begin() + j * bd, a.begin() + (j + 1) * bd);
}

void Field::set_coeff(Elem& a, size_t j, const Elem& b) const {
  const size_t bd = base_->dim();
  std::copy(b.begin(), b.end(), a.begin() + j * bd);
}

Elem Field::scale(const Elem& b, const Elem& a) const {
  if (!base_) return mul(b, a);
  Elem out(dim_);
  const size_t bd = base_->dim();
  std::vector<u64> tmp(bd);
  for (size_t j = 0; j < deg_; ++j) {
    base_->mul_raw(a.data() + j * bd, b.data(), tmp.data());
    std::copy(tmp.begin(), tmp.end(), out.begin() + j * bd);
  }
  return out;
}

Elem Field::frobenius_base(const Elem& a, unsigned k) const {
  if (!base_) return a;
  Elem cur = a;
  const unsigned steps = (unsigned)(k % deg_);
  for (unsigned t = 0; t < steps; ++t) {
    Elem next = zero();
    for (size_t j = 0; j < deg_; ++j) {
      Elem c = coeff(cur, j);
      if (base_->is_zero(c)) continue;
      Elem term = scale(c, frob_gen_powers_[j]);
      add_raw(next.data(), term.data(), next.data());
    }
    cur = std::move(next);
  }
  return cur;
}

Elem Field::trace_to_base(const Elem& a) const {
  if (!base_) return a;
  Elem acc = base_->zero();
  const size_t bd = base_->dim();
  std::vector<u64> tmp(bd);
  for (size_t j = 0; j < deg_; ++j) {
    base_->mul_raw(a.data() + j * bd, basis_traces_[j].data(), tmp.data());
    base_->add_raw(acc.data(), tmp.data(), acc.data());
  }
  return acc;
}

Elem Field::trace_of_product(const Elem& a, const Elem& b) const {
  if (!base_) return mul(a, b);
  const size_t bd = base_->dim();
  Elem acc = base_->zero();
  std::vector<u64> tmp(bd), prod(bd);
  for (size_t i = 0; i < deg_; ++i) {
    if (base_->is_zero_raw(a.data() + i * bd)) continue;
    for (size_t j = 0; j < deg_; ++j) {
      if (base_->is_zero_raw(b.data() + j * bd)) continue;
      base_->mul_raw(a.data() + i * bd, b.data() + j * bd, prod.data());
      base_->mul_raw(prod.data(), power_traces_[i + j].data(), tmp.data());
      base_->add_raw(acc.data(), tmp.data(), acc.data());
    }
  }
  return acc;
}

void Field::init_extension_tables() {
  const Field& B = *base_;
  const size_t bd = B.dim();
  // x^deg mod f = -(c_0 + c_1 x + ...)
  Elem top = zero();
  for (size_t j = 0; j < deg_; ++j) set_coeff(top, j, B.neg(modulus_[j]));
  red_table_.push_back(top);
  for (size_t k = deg_ + 1; k <= 2 * deg_ - 2; ++k) {
    const Elem& prev = red_table_.back();
    Elem next = zero();
    for (size_t j = deg_ - 1; j-- > 0;) set_coeff(next, j + 1, coeff(prev, j));
    Elem carry = coeff(prev, deg_ - 1);
    if (!B.is_zero(carry)) {
      Elem t = scale(carry, red_table_[0]);
      add_raw(next.data(), t.data(), next.data());
    }
    red_table_.push_back(std::move(next));
  }
  // powers of x^{|base|} for the relative Frobenius
  Elem xe = zero();
  if (deg_ >= 2) {
    set_coeff(xe, 1, B.one());
  } else {
    // x = -c_0 in a degree-1 extension
    set_coeff(xe, 0, B.neg(modulus_[0]));
  }
  Elem g1 = pow(xe, B.size());
  frob_gen_powers_.resize(deg_);
  frob_gen_powers_[0] = one();
  for (size_t j = 1; j < deg_; ++j) frob_gen_powers_[j] = mul(frob_gen_powers_[j - 1], g1);
  // power sums of the modulus roots via Newton's identities:
  // tr(x^k) = p_k with p_k + sum_{i=1}^{min(k,deg)-?} a_{deg-i} p_{k-i} (+ k a_{deg-k}) = 0
  power_traces_.assign(2 * deg_ - 1, B.zero());
  power_traces_[0] = B.from_u64(deg_ % p_);
  for (size_t k = 1; k <= 2 * deg_ - 2; ++k) {
    Elem acc = B.zero();
    size_t lim = std::min(k - 1, deg_);
    for (size_t i = 1; i <= lim; ++i)
      acc = B.add(acc, B.mul(modulus_[deg_ - i], power_traces_[k - i]));
    if (k <= deg_) {
      Elem t = B.scale(B.from_u64(k % p_), modulus_[deg_ - k]);
      acc = B.add(acc, t);
    }
    power_traces_[k] = B.neg(acc);
  }
  basis_traces_.assign(power_traces_.begin(), power_traces_.begin() + deg_);
}

std::optional<Elem> Field::sqrt(const Elem& a) const {
  if (is_zero(a)) return zero();
  if (p_ == 2) {
    BigUint e = size_;
    e.shr1();
    Elem r = pow(a, e);
    if (!equal(mul(r, r), a)) throw internal_error("sqrt: squaring identity failed in char 2");
    return r;
  }
  BigUint half = size_;
  half.sub_small(1);
  half.shr1();
  Elem ls = pow(a, half);
  if (!equal(ls, one())) return std::nullopt;
  // Tonelli-Shanks: size-1 = 2^e * t
  BigUint t = size_;
  t.sub_small(1);
  unsigned e = 0;
  while (!t.is_odd()) {
    t.shr1();
    ++e;
  }
  // deterministic non-residue scan
  Elem z;
  for (u64 idx = 2;; ++idx) {
    Elem c = from_index(idx);
    if (is_zero(c)) continue;
    if (!equal(pow(c, half), one())) {
      z = std::move(c);
      break;
    }
  }
  Elem c = pow(z, t);
  BigUint t1 = t;
  t1.add_small(1);
  t1.shr1();
  Elem r = pow(a, t1);
  Elem x = pow(a, t);
  unsigned m = e;
  while (!equal(x, one())) {
    unsigned i = 0;
    Elem s = x;
    while (!equal(s, one())) {
      s = mul(s, s);
      ++i;
    }
    Elem b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    r = mul(r, b);
    c = mul(b, b);
    x = mul(x, c);
    m = i;
  }
  Elem r2 = neg(r);
  if (std::lexicographical_compare(r2.begin(), r2.end(), r.begin(), r.end())) r = std::move(r2);
  if (!equal(mul(r, r), a)) throw internal_error("sqrt: verification failed");
  return r;
}

Elem Field::element_of_order(u64 d) const {
  if (d == 0) throw domain_error("element_of_order: d must be positive");
  BigUint e = size_;
  e.sub_small(1);
  {
    BigUint chk = e;
    if (chk.divmod_small(d) != 0)
      throw domain_error("element_of_order: " + std::to_string(d) + " does not divide field size - 1");
    e = chk;
  }
  auto primes = factor_u64(d);
  for (u64 idx = 1;; ++idx) {
    Elem c = from_index(idx);
    if (is_zero(c)) continue;
    Elem g = pow(c, e);
    bool ok = !equal(g, one()) || d == 1;
    for (auto& [l, m] : primes) {
      (void)m;
      if (equal(pow(g, d / l), one())) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (!equal(pow(g, d), one())) throw internal_error("element_of_order: order check failed");
      return g;
    }
  }
}

Elem Field::find_normal_element() const {
  if (!base_) throw domain_error("find_normal_element: prime field has no base");
  std::mt19937_64 rng(0x5d9bull ^ (p_ * 0x9e3779b97f4a7c15ull) ^ ((u64)dim_ << 32) ^ (u64)deg_);
  std::uniform_int_distribution<u64> coord(0, p_ - 1);
  const size_t n = deg_;
  const size_t cap = 64 * n;
  for (size_t trial = 0; trial < cap; ++trial) {
    Elem a(dim_);
    for (auto& c : a) c = coord(rng);
    if (is_zero(a)) continue;
    // certificate: gcd(X^n - 1, sum_i a^{q^i} X^i) constant over this field
    polyring::Poly g(n);
    Elem conj = a;
    for (size_t i = 0; i < n; ++i) {
      g[i] = conj;
      if (i + 1 < n) conj = frobenius_base(conj);
    }
    polyring::normalize(*this, g);
    polyring::Poly xn1(n + 1, zero());
    xn1[0] = neg(one());
    xn1[n] = one();
    polyring::Poly d = polyring::gcd(*this, xn1, g);
    if (polyring::degree(d) == 0) return a;
  }
  throw internal_error("find_normal_element: retry cap exhausted");
}

bool same_field(const Field::Ptr& a, const Field::Ptr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->p() != b->p() || a->dim() != b->dim() || a->deg() != b->deg()) return false;
  if (a->is_prime_field()) return b->is_prime_field();
  if (b->is_prime_field()) return false;
  if (a->modulus() != b->modulus()) return false;
  return same_field(a->base(), b->base());
}

}  // namespace sdnb
