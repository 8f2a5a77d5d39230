#include "sdnb/serialize.hpp"

#include <cstdio>

#include "json.hpp"

namespace sdnb {

using nlohmann::json;

namespace {

json elem_to_json(const Elem& e) { return json(e); }

Elem elem_from_json(const json& j, size_t dim) {
  Elem e = j.get<Elem>();
  if (e.size() != dim) throw domain_error("deserialize: element has wrong dimension");
  return e;
}

json elems_to_json(const std::vector<Elem>& v) {
  json arr = json::array();
  for (const Elem& e : v) arr.push_back(elem_to_json(e));
  return arr;
}

}  // namespace

BigUint biguint_from_string(const std::string& s) {
  if (s.empty()) throw domain_error("biguint_from_string: empty string");
  BigUint out(0);
  for (char c : s) {
    if (c < '0' || c > '9') throw domain_error("biguint_from_string: not a decimal integer");
    out.mul_small(10);
    out.add_small((u64)(c - '0'));
  }
  return out;
}

std::string certificate_to_json(const SdnbCertificate& cert) {
  json j;
  j["q"] = cert.q;
  j["n"] = cert.n;
  j["modulus"] = elems_to_json(cert.ctx_n->modulus());
  json coords = json::array();
  for (size_t t = 0; t < cert.n; ++t) coords.push_back(elem_to_json(cert.ctx_n->coeff(cert.gamma, t)));
  j["gamma_coords"] = coords;
  if (cert.v)
    j["v_coeffs"] = elems_to_json(cert.v->coeffs);
  else
    j["v_coeffs"] = nullptr;
  if (cert.complexity)
    j["complexity"] = *cert.complexity;
  else
    j["complexity"] = nullptr;
  return j.dump(2);
}

SdnbCertificate certificate_from_json(const std::string& text) {
  json j = json::parse(text);
  SdnbCertificate cert;
  cert.q = j.at("q").get<u64>();
  cert.n = j.at("n").get<u64>();
  cert.fq = Field::make_fq(cert.q);
  std::vector<Elem> modulus;
  for (const json& c : j.at("modulus")) modulus.push_back(elem_from_json(c, cert.fq->dim()));
  cert.ctx_n = Field::extension(cert.fq, std::move(modulus));
  if (cert.ctx_n->deg() != cert.n) throw domain_error("deserialize: modulus degree != n");
  cert.gamma = cert.ctx_n->zero();
  const json& coords = j.at("gamma_coords");
  if (coords.size() != cert.n) throw domain_error("deserialize: expected n coordinates");
  for (size_t t = 0; t < cert.n; ++t)
    cert.ctx_n->set_coeff(cert.gamma, t, elem_from_json(coords[t], cert.fq->dim()));
  if (!j.at("v_coeffs").is_null()) {
    GaElement v = ga_zero(cert.fq, cert.n);
    const json& vc = j.at("v_coeffs");
    if (vc.size() != cert.n) throw domain_error("deserialize: expected n v-coefficients");
    for (size_t t = 0; t < cert.n; ++t) v.coeffs[t] = elem_from_json(vc[t], cert.fq->dim());
    cert.v = std::move(v);
  }
  if (!j.at("complexity").is_null()) cert.complexity = j.at("complexity").get<u64>();
  if (!verify_sdnb(cert.gamma, *cert.ctx_n))
    throw domain_error("deserialize: certificate fails self-duality verification");
  return cert;
}

std::string report_to_json(const SearchReport& rep) {
  json j;
  j["q"] = rep.q;
  j["n"] = rep.n;
  j["group_cardinality"] = rep.group_cardinality.to_string();
  j["visited"] = rep.visited;
  j["min_complexity"] = rep.min_complexity;
  j["min_count"] = rep.min_count;
  j["multiplier"] = rep.multiplier;
  j["multiplier_integral"] = rep.multiplier_integral;
  json wit = json::array();
  for (const auto& w : rep.witnesses) wit.push_back(elem_to_json(w));
  j["witnesses"] = wit;
  j["witness_cap"] = rep.witness_cap;
  j["histogram_enabled"] = rep.histogram_enabled;
  json hist = json::object();
  for (const auto& [c, cnt] : rep.histogram) hist[std::to_string(c)] = cnt;
  j["histogram"] = hist;
  json cov = json::array();
  for (const auto& [lo, hi] : rep.coverage) cov.push_back(json::array({lo, hi}));
  j["coverage"] = cov;
  j["complete"] = rep.complete;
  j["elapsed_ms"] = rep.elapsed_ms;
  return j.dump(2);
}

SearchReport report_from_json(const std::string& text) {
  json j = json::parse(text);
  SearchReport rep;
  rep.q = j.at("q").get<u64>();
  rep.n = j.at("n").get<u64>();
  rep.group_cardinality = biguint_from_string(j.at("group_cardinality").get<std::string>());
  rep.visited = j.at("visited").get<u64>();
  rep.min_complexity = j.at("min_complexity").get<u64>();
  rep.min_count = j.at("min_count").get<u64>();
  rep.multiplier = j.at("multiplier").get<u64>();
  rep.multiplier_integral = j.at("multiplier_integral").get<bool>();
  for (const json& w : j.at("witnesses")) rep.witnesses.push_back(w.get<Elem>());
  rep.witness_cap = j.at("witness_cap").get<size_t>();
  rep.histogram_enabled = j.at("histogram_enabled").get<bool>();
  for (const auto& [k, v] : j.at("histogram").items())
    rep.histogram[std::stoull(k)] = v.get<u64>();
  for (const json& c : j.at("coverage")) rep.coverage.push_back({c.at(0).get<u64>(), c.at(1).get<u64>()});
  rep.complete = j.at("complete").get<bool>();
  rep.elapsed_ms = j.at("elapsed_ms").get<double>();
  return rep;
}

std::string report_csv_header() {
  return "q,n,min_complexity,multiplier,group_cardinality,elapsed_ms";
}

std::string report_to_csv_row(const SearchReport& rep) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", rep.elapsed_ms);
  return std::to_string(rep.q) + "," + std::to_string(rep.n) + "," +
         std::to_string(rep.min_complexity) + "," + std::to_string(rep.multiplier) + "," +
         rep.group_cardinality.to_string() + "," + buf;
}

std::string decomposition_to_json(const CyclotomicDecomposition& dec) {
  json j;
  j["n"] = dec.n;
  j["q"] = dec.q;
  j["m"] = dec.m;
  json classes = json::array();
  for (const CyclotomicClass& cls : dec.classes) {
    json c;
    c["rep"] = cls.rep;
    c["members"] = cls.members;
    switch (cls.kind) {
      case ClassKind::Zero: c["kind"] = "zero"; break;
      case ClassKind::SelfPaired: c["kind"] = "self_paired"; break;
      case ClassKind::Paired:
        c["kind"] = "paired";
        c["partner_rep"] = cls.partner_rep;
        break;
    }
    classes.push_back(c);
  }
  j["classes"] = classes;
  return j.dump(2);
}

}  // namespace sdnb
