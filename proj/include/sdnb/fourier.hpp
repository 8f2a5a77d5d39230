#pragma once

#include "sdnb/cyclotomic.hpp"
#include "sdnb/field.hpp"
#include "sdnb/group_algebra.hpp"

namespace sdnb {

/// Evaluation/interpolation at the powers of a primitive n-th root of unity
/// zeta in F_{q^m}, m the order of q mod n.
class FourierCtx {
 public:
  /// Requires gcd(n, q) = 1 and n odd.
  static FourierCtx create(Field::Ptr fq, u64 n);

  const Field::Ptr& fq() const { return fq_; }
  const Field::Ptr& ext() const { return ext_; }  // F_{q^m} as extension of fq
  u64 n() const { return n_; }
  const CyclotomicDecomposition& decomposition() const { return dec_; }
  const Elem& zeta() const { return zeta_pow_[1 % n_]; }
  const Elem& zeta_pow(u64 k) const { return zeta_pow_[k % n_]; }

  /// Component s is u evaluated at zeta^s.
  std::vector<Elem> forward(const GaElement& u) const;
  /// Interpolation back to F_q[X]/(X^n-1); input must be Frobenius-coherent
  /// across each cyclotomic class.
  GaElement inverse(const std::vector<Elem>& vals) const;
  /// Component s moves to component n - s mod n.
  std::vector<Elem> conjugate_in_frequency(const std::vector<Elem>& vals) const;

 private:
  FourierCtx() = default;
  Field::Ptr fq_;
  Field::Ptr ext_;
  u64 n_ = 0;
  CyclotomicDecomposition dec_;
  std::vector<Elem> zeta_pow_;  // zeta^k for 0 <= k < n
  Elem inv_n_;                  // (n mod p)^{-1} in fq
};

}  // namespace sdnb
