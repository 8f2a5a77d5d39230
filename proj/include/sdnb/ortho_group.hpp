#pragma once

#include <memory>

#include "sdnb/construct.hpp"
#include "sdnb/fourier.hpp"
#include "sdnb/group_algebra.hpp"

namespace sdnb {

enum class GroupCase { Semisimple, RamifiedOdd, RamifiedEvenN2 };

/// Structure of the group of solutions of v * conjugate(v) = 1 in
/// F_q[X]/(X^n - 1) (the orthogonal circulant group), with enough generator
/// data to enumerate it as a mixed-radix product.
struct GroupSpec {
  GroupCase kind = GroupCase::Semisimple;
  Field::Ptr fq;
  u64 q = 0;
  u64 n = 0;
  BigUint cardinality;

  // Semisimple: one slot per independent choice, in a fixed order (sign at
  // the trivial class when q is odd, then one slot per nonzero self-paired
  // class and per paired pair, by representative).
  struct Slot {
    ClassKind kind = ClassKind::SelfPaired;
    u64 rep = 0;          // class representative (0 for the sign slot)
    u64 order = 0;        // slot radix
    Elem gen;             // component generator in the evaluation field
  };
  std::shared_ptr<const FourierCtx> fc;  // semisimple only
  std::vector<Slot> slots;

  // Ramified odd: free coefficients are v_0 in {1,-1} and the odd-index
  // coefficients in the (X-1)-power basis; binom holds Pascal's triangle
  // mod p up to row n.
  std::vector<std::vector<u64>> binom;
};

/// Requires n odd with gcd(n, q) = 1 or n = p^e, or (q even, n = 2).
/// Mixed degrees n = n1 * p^e with n1 > 1, e > 0 raise unsupported_error.
GroupSpec group_spec(Field::Ptr fq, u64 n);

/// Closed-form cardinality of the solution group (same preconditions).
BigUint predicted_cardinality(u64 q, u64 n);

/// Deterministic, index-addressable enumeration of the solution group.
/// Index ranges can be processed independently (sharding).
class SolutionStream {
 public:
  explicit SolutionStream(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  u64 size() const;  // throws unsupported_error if the cardinality exceeds 64 bits
  GaElement at(u64 index) const;

 private:
  GroupSpec spec_;
  std::vector<std::vector<Elem>> powers_;  // per-slot generator power cache
};

/// r = sum_i r_i (X^i - X^{n-i}); conjugate(r) = -r by construction.
struct SkewVector {
  Field::Ptr fq;
  u64 n = 0;
  std::vector<Elem> r;  // r_1 ... r_{(n-1)/2}
};

GaElement skew_to_ga(const SkewVector& r);

/// Fixed-point recovery of w with (1 + w)(1 + conjugate(w)) = 1 from a skew
/// vector, in the ramified odd case; the identity is asserted on return.
/// {+(1+w), -(1+w)} over all skew vectors is the full solution group.
GaElement macwilliams_iterate(const SkewVector& r);

/// act(conjugate(v), gamma): the SDNB generator attached to solution v.
Elem generator_from_solution(const SdnbCertificate& cert, const GaElement& v);

}  // namespace sdnb
