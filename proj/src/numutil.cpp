#include "sdnb/numutil.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdnb {

u64 mulmod_u64(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // deterministic Miller-Rabin bases for 64-bit input
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

u64 pollard_rho(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd_u64(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out[n]++;
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<u64, int> factor_u64(u64 n) {
  std::map<u64, int> out;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (n % p == 0) {
      out[p]++;
      n /= p;
    }
  }
  factor_rec(n, out);
  return out;
}

void prime_power_decompose(u64 q, u64& p, unsigned& r) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  auto f = factor_u64(q);
  if (f.size() != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  p = f.begin()->first;
  r = (unsigned)f.begin()->second;
}

u64 mult_order_mod(u64 a, u64 n) {
  a %= n;
  if (n == 1) return 1;
  if (gcd_u64(a, n) != 1) throw std::invalid_argument("mult_order_mod: gcd(a,n) != 1");
  // order divides lambda(n); just divide down from the Carmichael-style bound
  u64 phi = 1;
  for (auto [p, e] : factor_u64(n)) {
    u64 pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    phi *= pe / p * (p - 1);
  }
  u64 ord = phi;
  for (auto [p, e] : factor_u64(phi)) {
    (void)e;
    while (ord % p == 0 && powmod_u64(a, ord / p, n) == 1) ord /= p;
  }
  return ord;
}

u64 checked_pow_u64(u64 q, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / q) throw std::overflow_error("checked_pow_u64 overflow");
    r *= q;
  }
  return r;
}

BigUint::BigUint(u64 v) {
  if (v) limbs_.push_back((u32)v);
  if (v >> 32) limbs_.push_back((u32)(v >> 32));
}

BigUint BigUint::pow(u64 base, unsigned exp) {
  BigUint r(1);
  for (unsigned i = 0; i < exp; ++i) r.mul_small(base);
  return r;
}

u64 BigUint::to_u64() const {
  if (limbs_.size() > 2) throw std::overflow_error("BigUint::to_u64");
  u64 v = 0;
  if (limbs_.size() > 1) v = (u64)limbs_[1] << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

void BigUint::add_small(u64 v) {
  u128 carry = v;
  for (size_t i = 0; carry && i < limbs_.size(); ++i) {
    carry += limbs_[i];
    limbs_[i] = (u32)carry;
    carry >>= 32;
  }
  while (carry) {
    limbs_.push_back((u32)carry);
    carry >>= 32;
  }
}

void BigUint::sub_small(u64 v) {
  // requires *this >= v
  u64 borrow = v;
  for (size_t i = 0; borrow && i < limbs_.size(); ++i) {
    u64 cur = limbs_[i];
    u64 take = borrow & 0xffffffffull;
    if (cur >= take) {
      limbs_[i] = (u32)(cur - take);
      borrow >>= 32;
    } else {
      limbs_[i] = (u32)(cur + 0x100000000ull - take);
      borrow = (borrow >> 32) + 1;
    }
  }
  if (borrow) throw std::underflow_error("BigUint::sub_small");
  trim();
}

void BigUint::mul_small(u64 v) {
  if (v == 0) {
    limbs_.clear();
    return;
  }
  u64 lo = v & 0xffffffffull, hi = v >> 32;
  std::vector<u32> out(limbs_.size() + 2, 0);
  u128 carry = 0;
  for (size_t i = 0; i < out.size(); ++i) {
    u128 acc = carry & 0xffffffffull;
    carry >>= 32;
    if (i < limbs_.size()) acc += (u128)limbs_[i] * lo;
    if (i >= 1 && i - 1 < limbs_.size()) acc += (u128)limbs_[i - 1] * hi;
    out[i] = (u32)acc;
    carry += acc >> 32;
  }
  limbs_ = std::move(out);
  trim();
}

u64 BigUint::divmod_small(u64 d) {
  if (d == 0) throw std::invalid_argument("BigUint: divide by zero");
  u128 rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    u128 cur = (rem << 32) | limbs_[i];
    limbs_[i] = (u32)(cur / d);
    rem = cur % d;
  }
  trim();
  return (u64)rem;
}

void BigUint::shr1() {
  u32 carry = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    u32 cur = limbs_[i];
    limbs_[i] = (cur >> 1) | (carry << 31);
    carry = cur & 1;
  }
  trim();
}

size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  u32 top = limbs_.back();
  size_t b = 0;
  while (top) top >>= 1, ++b;
  return (limbs_.size() - 1) * 32 + b;
}

bool BigUint::bit(size_t i) const {
  size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1;
}

int BigUint::compare(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  BigUint t = *this;
  std::string s;
  while (!t.is_zero()) s.push_back((char)('0' + t.divmod_small(10)));
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace sdnb
