#pragma once

#include <string>

#include "sdnb/cyclotomic.hpp"
#include "sdnb/search.hpp"

namespace sdnb {

/// JSON round trips are byte-identical: parse(emit(x)) re-emits the same
/// bytes (sorted keys, fixed indentation).
std::string certificate_to_json(const SdnbCertificate& cert);
SdnbCertificate certificate_from_json(const std::string& text);

std::string report_to_json(const SearchReport& rep);
SearchReport report_from_json(const std::string& text);

/// One row per report: q,n,min_complexity,multiplier,group_cardinality,elapsed_ms
std::string report_csv_header();
std::string report_to_csv_row(const SearchReport& rep);

std::string decomposition_to_json(const CyclotomicDecomposition& dec);

BigUint biguint_from_string(const std::string& s);

}  // namespace sdnb
