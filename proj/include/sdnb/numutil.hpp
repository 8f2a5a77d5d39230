#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sdnb {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 a, u64 e, u64 m);
bool is_prime_u64(u64 n);

/// Full factorization of n >= 2 as prime -> exponent.
std::map<u64, int> factor_u64(u64 n);

/// Decompose a prime power q = p^r. Throws if q is not a prime power >= 2.
void prime_power_decompose(u64 q, u64& p, unsigned& r);

/// Multiplicative order of a modulo n (gcd(a, n) must be 1).
u64 mult_order_mod(u64 a, u64 n);

u64 gcd_u64(u64 a, u64 b);

/// q^e with overflow check.
u64 checked_pow_u64(u64 q, unsigned e);

/// Unsigned big integer, little-endian 32-bit limbs. Just enough for field
/// sizes p^dim and the exponents derived from them.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(u64 v);

  static BigUint pow(u64 base, unsigned exp);

  bool is_zero() const { return limbs_.empty(); }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1); }
  bool fits_u64() const { return limbs_.size() <= 2; }
  u64 to_u64() const;  // throws if too large

  void add_small(u64 v);
  void sub_small(u64 v);  // requires *this >= v
  void mul_small(u64 v);
  /// Divides in place by d, returns remainder.
  u64 divmod_small(u64 d);
  void shr1();

  size_t bit_length() const;
  bool bit(size_t i) const;

  int compare(const BigUint& o) const;
  bool operator==(const BigUint& o) const { return compare(o) == 0; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<u32> limbs_;
};

}  // namespace sdnb
