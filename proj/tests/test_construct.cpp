#include <map>
#include <set>

#include "doctest.h"
#include "sdnb/construct.hpp"
#include "sdnb/search.hpp"

using namespace sdnb;

TEST_CASE("existence conditions") {
  CHECK(!existence_check(3, 2));
  CHECK(!existence_check(2, 4));
  CHECK(existence_check(2, 6));
  CHECK(existence_check(4, 10));
  CHECK(!existence_check(2, 8));
  CHECK(!existence_check(5, 6));
  for (u64 q : {2, 3, 4, 5, 7, 8, 9})
    for (u64 n = 1; n <= 15; n += 2) CHECK(existence_check(q, n));
}

TEST_CASE("verify_sdnb rejects the unit and non-self-dual normal elements") {
  auto f2 = Field::make_fq(2);
  auto k5 = Field::extension(f2, (size_t)5);
  CHECK(!verify_sdnb(k5->one(), *k5));

  // scan F_32: exactly 5 self-dual generators (the group orbit), and some
  // normal element that is not self-dual
  size_t sd = 0;
  bool found_normal_not_sd = false;
  for (u64 i = 0; i < 32; ++i) {
    Elem a = k5->from_index(i);
    bool is_sd = verify_sdnb(a, *k5);
    if (is_sd) ++sd;
    // normality: the 32 conjugate combinations span everything
    std::vector<Elem> conj(5);
    conj[0] = a;
    for (int t = 1; t < 5; ++t) conj[t] = k5->frobenius_base(conj[t - 1]);
    std::set<Elem> span;
    for (u64 mask = 0; mask < 32; ++mask) {
      Elem s = k5->zero();
      for (int t = 0; t < 5; ++t)
        if (mask >> t & 1) s = k5->add(s, conj[t]);
      span.insert(s);
    }
    bool normal = span.size() == 32;
    if (is_sd) CHECK(normal);
    if (normal && !is_sd) found_normal_not_sd = true;
  }
  CHECK(sd == 5);
  CHECK(found_normal_not_sd);
}

TEST_CASE("semisimple solver: v conj(v) = R") {
  for (auto [q, n] : std::vector<std::pair<u64, u64>>{{2, 3}, {2, 5}, {2, 9}, {3, 5},
                                                      {4, 3}, {5, 3}, {8, 5}, {13, 3}}) {
    auto fq = Field::make_fq(q);
    auto ctx = Field::extension(fq, (size_t)n);
    Elem alpha = ctx->find_normal_element();
    auto fc = FourierCtx::create(fq, n);
    GaElement v = solve_semisimple(alpha, *ctx, fc);
    GaElement R = compute_R(alpha, *ctx);
    CHECK(ga_equal(ga_mul(v, conjugate(v)), R));
    // v^{-1} o alpha is then a self-dual generator
    CHECK(verify_sdnb(act(ga_inverse(v), alpha, *ctx), *ctx));
  }
}

TEST_CASE("solver consistency when alpha is already self-dual") {
  auto cert = construct(2, 5);
  GaElement R = compute_R(cert.gamma, *cert.ctx_n);
  CHECK(ga_equal(R, ga_one(cert.fq, 5)));
  auto fc = FourierCtx::create(cert.fq, 5);
  GaElement v = solve_semisimple(cert.gamma, *cert.ctx_n, fc);
  CHECK(ga_equal(ga_mul(v, conjugate(v)), ga_one(cert.fq, 5)));
}

TEST_CASE("ramified solver: omega^2 = R, omega self-conjugate") {
  for (auto [q, n] : std::vector<std::pair<u64, u64>>{{3, 3}, {3, 9}, {5, 5}, {7, 7}, {9, 3}}) {
    auto fq = Field::make_fq(q);
    auto ctx = Field::extension(fq, (size_t)n);
    Elem alpha = ctx->find_normal_element();
    GaElement omega = solve_ramified(alpha, *ctx);
    GaElement R = compute_R(alpha, *ctx);
    CHECK(ga_equal(ga_mul(omega, omega), R));
    CHECK(ga_equal(conjugate(omega), omega));
    CHECK(augmentation(omega) == ctx->trace_to_base(alpha));
    CHECK(verify_sdnb(act(ga_inverse(omega), alpha, *ctx), *ctx));
  }
}

TEST_CASE("even quadratic construction") {
  // minima over the full solution group (exhaustive): the 2n-1 bound is
  // attained for q = 2 and 8 but not for q = 4 and 16
  std::map<u64, u64> expected_min = {{2, 3}, {4, 4}, {8, 3}, {16, 4}};
  for (u64 q : {2, 4, 8, 16}) {
    auto cert = construct_even_quadratic(Field::make_fq(q));
    CHECK(cert.n == 2);
    CHECK(cert.ctx_n->trace_to_base(cert.gamma) == cert.fq->one());
    CHECK(verify_sdnb(cert.gamma, *cert.ctx_n));
    CHECK(complexity(cert.gamma, *cert.ctx_n) >= 3);
    CHECK(search_min(cert, {}).min_complexity == expected_min[q]);
  }
  CHECK_THROWS_AS((void)construct_even_quadratic(Field::make_fq(3)), domain_error);
}

TEST_CASE("construct is deterministic and verified") {
  auto a = construct(3, 5);
  auto b = construct(3, 5);
  CHECK(a.gamma == b.gamma);
  CHECK(verify_sdnb(a.gamma, *a.ctx_n));
  CHECK_THROWS_AS((void)construct(3, 2), nonexistence_error);
  CHECK_THROWS_AS((void)construct(2, 4), nonexistence_error);
}

TEST_CASE("compositum complexity is multiplicative") {
  // q=2: degrees 2 x 3 -> 15, 2 x 5 -> 27 (auto-split path)
  auto c6 = construct(2, 6);
  CHECK(c6.complexity == 15);
  CHECK(verify_sdnb(c6.gamma, *c6.ctx_n));
  auto c10 = construct(2, 10);
  CHECK(c10.complexity == 27);

  // trivial factor
  auto c3 = construct(2, 3);
  auto c1 = construct(2, 1);
  auto same = compose_coprime(c3, c1);
  CHECK(same.n == 3);
  CHECK(same.gamma == c3.gamma);

  CHECK_THROWS_AS((void)compose_coprime(c3, construct(2, 9)), domain_error);
}

TEST_CASE("compositum of minimal pieces over F_5") {
  // minimal complexities: 6 in degree 3, 13 in degree 5; product 78
  auto base3 = construct(5, 3);
  auto rep3 = search_min(base3, {});
  auto base5 = construct(5, 5);
  auto rep5 = search_min(base5, {});
  REQUIRE(rep3.min_complexity == 6);
  REQUIRE(rep5.min_complexity == 13);
  SdnbCertificate m3{base3.fq, base3.ctx_n, 5, 3, rep3.witnesses.at(0), std::nullopt, std::nullopt};
  SdnbCertificate m5{base5.fq, base5.ctx_n, 5, 5, rep5.witnesses.at(0), std::nullopt, std::nullopt};
  auto c15 = compose_coprime(m3, m5);
  CHECK(c15.complexity == 78);
  CHECK(verify_sdnb(c15.gamma, *c15.ctx_n));
}

TEST_CASE("base extension keeps the generator and complexity") {
  auto c23 = construct(2, 3);
  auto e = base_extension(c23, 2);
  CHECK(e.q == 4);
  CHECK(e.n == 3);
  CHECK(verify_sdnb(e.gamma, *e.ctx_n));
  CHECK(e.complexity == 5);

  auto c25 = construct(2, 5);
  CHECK(base_extension(c25, 2).complexity == 9);

  CHECK(base_extension(c23, 1).gamma == c23.gamma);
  CHECK_THROWS_AS((void)base_extension(c23, 3), domain_error);
}

TEST_CASE("mixed-degree auto-split routes through the compositum") {
  auto c = construct(3, 15);  // 15 = 5 * 3 with p = 3
  CHECK(c.n == 15);
  CHECK(verify_sdnb(c.gamma, *c.ctx_n));
  CHECK(c.complexity.has_value());
}

TEST_CASE("fallback scalar scan") {
  using sdnb::testing::case_c_scan;
  auto [t5, eta5] = case_c_scan(5);
  CHECK(t5 == 4);  // -4 = 1 = 1^2 mod 5; -3 = 2 is not a square
  CHECK(eta5 == 1);
  auto [t3, eta3] = case_c_scan(3);
  CHECK(t3 == 2);  // -2 = 1 mod 3
  CHECK(eta3 == 1);
  auto [t7, eta7] = case_c_scan(7);
  CHECK(t7 == 3);  // -3 = 4 = 2^2 mod 7; -2 = 5 is not a square
  CHECK(eta7 == 2);
  auto [t13, eta13] = case_c_scan(13);
  CHECK(t13 == 3);  // -3 = 10 = 6^2 mod 13; -2 = 11 is not a square
  CHECK(eta13 == 6);
}

TEST_CASE("complexity lower bound") {
  for (auto [q, n] : std::vector<std::pair<u64, u64>>{{2, 3}, {2, 7}, {3, 3}, {3, 7},
                                                      {4, 5}, {5, 5}, {8, 3}}) {
    auto cert = construct(q, n);
    CHECK(complexity(cert.gamma, *cert.ctx_n) >= 2 * n - 1);
  }
}
