#include "sdnb/cyclotomic.hpp"

#include <algorithm>

namespace sdnb {

const CyclotomicClass& CyclotomicDecomposition::class_of(u64 s) const {
  s %= n;
  for (const auto& c : classes)
    if (std::find(c.members.begin(), c.members.end(), s) != c.members.end()) return c;
  throw internal_error("class_of: element not covered");
}

CyclotomicDecomposition decompose(u64 n, u64 q) {
  if (n == 0) throw domain_error("decompose: n must be positive");
  if (gcd_u64(n, q) != 1)
    throw domain_error("decompose: gcd(n, q) != 1; use the ramified path");
  if (n % 2 == 0) throw domain_error("decompose: n must be odd");
  CyclotomicDecomposition dec;
  dec.n = n;
  dec.q = q;
  std::vector<char> seen(n, 0);
  for (u64 s = 0; s < n; ++s) {
    if (seen[s]) continue;
    CyclotomicClass cls;
    cls.rep = s;
    u64 t = s;
    do {
      cls.members.push_back(t);
      seen[t] = 1;
      t = (u64)((u128)t * q % n);
    } while (t != s);
    dec.classes.push_back(std::move(cls));
  }
  // classify
  for (auto& cls : dec.classes) {
    if (cls.rep == 0) {
      cls.kind = ClassKind::Zero;
      continue;
    }
    u64 negs = n - cls.rep;
    bool self = std::find(cls.members.begin(), cls.members.end(), negs) != cls.members.end();
    if (self) {
      cls.kind = ClassKind::SelfPaired;
    } else {
      cls.kind = ClassKind::Paired;
      // partner = class containing n - rep
      for (const auto& other : dec.classes) {
        if (std::find(other.members.begin(), other.members.end(), negs) != other.members.end()) {
          cls.partner_rep = other.rep;
          break;
        }
      }
    }
  }
  dec.m = dec.class_of(1 % n).members.size();
  return dec;
}

ClassCensus class_type_census(const CyclotomicDecomposition& dec) {
  ClassCensus cen;
  cen.sigma = 1;
  for (const auto& cls : dec.classes) {
    switch (cls.kind) {
      case ClassKind::Zero:
        break;
      case ClassKind::SelfPaired:
        cen.sigma++;
        cen.c.push_back(cls.members.size() / 2);
        break;
      case ClassKind::Paired:
        if (cls.rep < cls.partner_rep) {  // count each pair once
          cen.tau++;
          cen.d.push_back(cls.members.size());
        }
        break;
    }
  }
  return cen;
}

}  // namespace sdnb
