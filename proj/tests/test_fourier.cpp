#include "doctest.h"
#include "sdnb/fourier.hpp"

using namespace sdnb;

namespace {

GaElement random_ga(Field::Ptr fq, size_t n, u64 seed) {
  GaElement a = ga_zero(fq, n);
  u64 s = seed * 0x9e3779b97f4a7c15ull + 1;
  for (size_t i = 0; i < n; ++i) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    a.coeffs[i] = fq->from_index((s >> 33) % fq->size_u64());
  }
  return a;
}

}  // namespace

TEST_CASE("round trip over several parameter sets") {
  for (auto [q, n] : std::vector<std::pair<u64, u64>>{{2, 3}, {2, 5}, {2, 9}, {3, 7},
                                                      {3, 5}, {4, 3}, {2, 15}, {13, 9}}) {
    auto fq = Field::make_fq(q);
    auto fc = FourierCtx::create(fq, n);
    for (u64 t = 0; t < 4; ++t) {
      GaElement a = random_ga(fq, n, q * 1000 + n * 10 + t);
      CHECK(ga_equal(fc.inverse(fc.forward(a)), a));
    }
  }
}

TEST_CASE("forward turns convolution into pointwise product") {
  auto fq = Field::make_fq(3);
  auto fc = FourierCtx::create(fq, 7);
  const Field& ext = *fc.ext();
  GaElement a = random_ga(fq, 7, 5), b = random_ga(fq, 7, 6);
  auto fa = fc.forward(a), fb = fc.forward(b), fab = fc.forward(ga_mul(a, b));
  for (u64 s = 0; s < 7; ++s) CHECK(fab[s] == ext.mul(fa[s], fb[s]));
}

TEST_CASE("conjugation in frequency") {
  auto fq = Field::make_fq(2);
  auto fc = FourierCtx::create(fq, 9);
  GaElement a = random_ga(fq, 9, 7);
  auto lhs = fc.forward(conjugate(a));
  auto rhs = fc.conjugate_in_frequency(fc.forward(a));
  for (u64 s = 0; s < 9; ++s) CHECK(lhs[s] == rhs[s]);
}

TEST_CASE("zeta has exact order n") {
  auto fq = Field::make_fq(2);
  auto fc = FourierCtx::create(fq, 15);
  const Field& ext = *fc.ext();
  Elem z = fc.zeta();
  Elem c = z;
  for (u64 k = 1; k < 15; ++k) {
    CHECK(c != ext.one());
    CHECK(c == fc.zeta_pow(k));
    c = ext.mul(c, z);
  }
  CHECK(c == ext.one());
}

TEST_CASE("incoherent frequency data is rejected") {
  auto fq = Field::make_fq(2);
  auto fc = FourierCtx::create(fq, 7);
  const Field& ext = *fc.ext();
  std::vector<Elem> vals(7, ext.one());
  vals[1] = fc.zeta();  // not Frobenius-coherent with vals[2] = 1
  CHECK_THROWS_AS((void)fc.inverse(vals), domain_error);
}

TEST_CASE("evaluation field degree is the order of q mod n") {
  CHECK(FourierCtx::create(Field::make_fq(2), 7).ext()->deg() == 3);
  CHECK(FourierCtx::create(Field::make_fq(2), 9).ext()->deg() == 6);
  CHECK(FourierCtx::create(Field::make_fq(13), 9).ext()->deg() == 3);
  CHECK(FourierCtx::create(Field::make_fq(16), 15).ext()->deg() == 1);
}
