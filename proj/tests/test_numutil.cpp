#include "doctest.h"
#include "sdnb/numutil.hpp"

using namespace sdnb;

TEST_CASE("primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(1009));
  CHECK(is_prime_u64((1ull << 61) - 1));  // Mersenne
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(561));   // Carmichael
  CHECK(!is_prime_u64(6601));  // Carmichael
  CHECK(!is_prime_u64((1ull << 59) - 1));
}

TEST_CASE("factorization") {
  auto f = factor_u64(720);  // 2^4 * 3^2 * 5
  CHECK(f.size() == 3);
  CHECK(f[2] == 4);
  CHECK(f[3] == 2);
  CHECK(f[5] == 1);
  auto g = factor_u64(1000003ull * 1000033ull);
  CHECK(g.size() == 2);
  CHECK(g[1000003] == 1);
  CHECK(g[1000033] == 1);
}

TEST_CASE("prime power decomposition") {
  u64 p;
  unsigned r;
  prime_power_decompose(8, p, r);
  CHECK(p == 2);
  CHECK(r == 3);
  prime_power_decompose(9, p, r);
  CHECK(p == 3);
  CHECK(r == 2);
  prime_power_decompose(1009, p, r);
  CHECK(p == 1009);
  CHECK(r == 1);
  CHECK_THROWS(prime_power_decompose(12, p, r));
  CHECK_THROWS(prime_power_decompose(1, p, r));
}

TEST_CASE("multiplicative orders") {
  CHECK(mult_order_mod(2, 7) == 3);
  CHECK(mult_order_mod(2, 9) == 6);
  CHECK(mult_order_mod(13, 9) == 3);
  CHECK(mult_order_mod(2, 31) == 5);
  CHECK(mult_order_mod(2, 43) == 14);
  CHECK(mult_order_mod(16, 15) == 1);
}

TEST_CASE("checked pow") {
  CHECK(checked_pow_u64(2, 10) == 1024);
  CHECK(checked_pow_u64(13, 3) == 2197);
  CHECK_THROWS(checked_pow_u64(3, 64));
}

TEST_CASE("BigUint basics") {
  BigUint a = BigUint::pow(2, 70);
  CHECK(a.to_string() == "1180591620717411303424");
  CHECK(!a.fits_u64());
  CHECK(a.bit_length() == 71);
  CHECK(a.bit(70));
  CHECK(!a.bit(69));

  BigUint b = BigUint::pow(3, 4);
  CHECK(b.to_u64() == 81);
  b.mul_small(1000000007);
  b.add_small(5);
  CHECK(b.to_string() == "81000000572");
  CHECK(b.divmod_small(10) == 2);
  CHECK(b.to_u64() == 8100000057ull);

  BigUint c = BigUint::pow(5, 30);
  BigUint d = BigUint::pow(5, 30);
  CHECK(c == d);
  d.add_small(1);
  CHECK(c.compare(d) < 0);
  d.sub_small(1);
  CHECK(c == d);

  BigUint e(12345);
  e.shr1();
  CHECK(e.to_u64() == 6172);
}

TEST_CASE("BigUint pow matches repeated multiplication") {
  BigUint a(1);
  for (int i = 0; i < 13; ++i) a.mul_small(11);
  CHECK(a == BigUint::pow(11, 13));
}
