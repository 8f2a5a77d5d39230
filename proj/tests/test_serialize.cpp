#include "doctest.h"
#include "sdnb/serialize.hpp"

using namespace sdnb;

TEST_CASE("certificate JSON round trip is byte identical") {
  for (auto [q, n] : std::vector<std::pair<u64, u64>>{{2, 3}, {3, 3}, {4, 5}, {2, 6}, {5, 5}}) {
    auto cert = construct(q, n);
    cert.complexity = complexity(cert.gamma, *cert.ctx_n);
    std::string text = certificate_to_json(cert);
    auto back = certificate_from_json(text);
    CHECK(back.q == cert.q);
    CHECK(back.n == cert.n);
    CHECK(back.gamma == cert.gamma);
    CHECK(certificate_to_json(back) == text);
  }
}

TEST_CASE("tampered certificates are rejected") {
  auto cert = construct(2, 3);
  std::string text = certificate_to_json(cert);
  // flip the first coordinate digit of gamma
  auto pos = text.find("\"gamma_coords\"");
  REQUIRE(pos != std::string::npos);
  pos = text.find_first_of("01", text.find('[', pos));
  text[pos] = text[pos] == '0' ? '1' : '0';
  CHECK_THROWS_AS((void)certificate_from_json(text), domain_error);
}

TEST_CASE("report JSON round trip is byte identical") {
  auto cert = construct(3, 5);
  SearchOptions opt;
  opt.histogram = true;
  auto rep = search_min(cert, opt);
  std::string text = report_to_json(rep);
  SearchReport back = report_from_json(text);
  CHECK(report_to_json(back) == text);
  CHECK(back.min_complexity == rep.min_complexity);
  CHECK(back.histogram == rep.histogram);
  CHECK(back.coverage == rep.coverage);
  CHECK(back.group_cardinality == rep.group_cardinality);
  CHECK(back.witnesses == rep.witnesses);
}

TEST_CASE("merging deserialized shard reports") {
  auto cert = construct(2, 9);
  SearchOptions a, b;
  a.shard_count = b.shard_count = 2;
  b.shard_index = 1;
  auto ra = report_from_json(report_to_json(search_min(cert, a)));
  auto rb = report_from_json(report_to_json(search_min(cert, b)));
  auto merged = merge_reports(ra, rb);
  CHECK(merged.complete);
  CHECK(merged.min_complexity == 17);
}

TEST_CASE("CSV layout") {
  CHECK(report_csv_header() == "q,n,min_complexity,multiplier,group_cardinality,elapsed_ms");
  SearchReport rep;
  rep.q = 8;
  rep.n = 9;
  rep.min_complexity = 45;
  rep.multiplier = 3;
  rep.group_cardinality = BigUint(6561);
  rep.elapsed_ms = 1234.5;
  CHECK(report_to_csv_row(rep) == "8,9,45,3,6561,1234.500");
}

TEST_CASE("BigUint string parsing") {
  CHECK(biguint_from_string("0").is_zero());
  CHECK(biguint_from_string("1180591620717411303424") == BigUint::pow(2, 70));
  CHECK(biguint_from_string("322102").to_u64() == 322102);
  CHECK_THROWS_AS((void)biguint_from_string("12x"), domain_error);
  CHECK_THROWS_AS((void)biguint_from_string(""), domain_error);
}

TEST_CASE("decomposition dump") {
  std::string text = decomposition_to_json(decompose(7, 2));
  CHECK(text.find("\"m\": 3") != std::string::npos);
  CHECK(text.find("\"paired\"") != std::string::npos);
}
