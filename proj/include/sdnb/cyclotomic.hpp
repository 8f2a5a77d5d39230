#pragma once

#include <vector>

#include "sdnb/errors.hpp"
#include "sdnb/numutil.hpp"

namespace sdnb {

enum class ClassKind { Zero, SelfPaired, Paired };

struct CyclotomicClass {
  u64 rep = 0;                 // smallest member
  std::vector<u64> members;    // orbit order: rep, rep*q, rep*q^2, ...
  ClassKind kind = ClassKind::Zero;
  u64 partner_rep = 0;         // for Paired: representative of the class of n - rep
};

/// The q-cyclotomic classes of {0, ..., n-1}.
struct CyclotomicDecomposition {
  u64 n = 0;
  u64 q = 0;
  u64 m = 0;  // multiplicative order of q mod n (size of the class of 1)
  std::vector<CyclotomicClass> classes;  // sorted by representative

  const CyclotomicClass& class_of(u64 s) const;
};

struct ClassCensus {
  u64 sigma = 0;            // 1 + number of nonzero self-paired classes
  u64 tau = 0;              // number of paired pairs
  std::vector<u64> c;       // |class| / 2 per nonzero self-paired class
  std::vector<u64> d;       // |class| per paired pair (counted once)
};

/// Requires gcd(n, q) = 1 and n odd (the separable setting).
CyclotomicDecomposition decompose(u64 n, u64 q);

ClassCensus class_type_census(const CyclotomicDecomposition& dec);

}  // namespace sdnb
