#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "sdnb/errors.hpp"
#include "sdnb/numutil.hpp"

namespace sdnb {

/// A field element: flat vector of F_p residues, length Field::dim().
/// For an extension tower F_p < B < K, the coefficient of K's generator^j
/// occupies the slice [j * B.dim(), (j+1) * B.dim()).
using Elem = std::vector<u64>;

/// A finite field, either F_p or an extension of another Field by a monic
/// irreducible modulus. Immutable after construction; share via Ptr.
class Field {
 public:
  using Ptr = std::shared_ptr<const Field>;

  static Ptr prime(u64 p);
  /// Extension with an explicit monic modulus (deg+1 base-field coefficients).
  static Ptr extension(Ptr base, std::vector<Elem> modulus);
  /// Extension of the given degree with the deterministic modulus: the monic
  /// irreducible of lowest index in the little-endian coefficient enumeration.
  static Ptr extension(Ptr base, size_t degree);
  /// Convenience: F_q for a prime power q (tower F_p < F_q when q is not prime).
  static Ptr make_fq(u64 q);

  const Ptr& base() const { return base_; }   // null for prime fields
  bool is_prime_field() const { return base_ == nullptr; }
  u64 p() const { return p_; }
  size_t deg() const { return deg_; }         // over base (1 for prime fields)
  size_t dim() const { return dim_; }         // over F_p
  const BigUint& size() const { return size_; }
  u64 size_u64() const;                       // throws on overflow
  const std::vector<Elem>& modulus() const { return modulus_; }

  Elem zero() const { return Elem(dim_, 0); }
  Elem one() const;
  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  /// Prime-subfield scalar v mod p as a constant of this field.
  Elem from_u64(u64 v) const;
  /// Element with index idx in the little-endian base-p digit enumeration.
  Elem from_index(u64 idx) const;
  u64 to_index(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem sqr(const Elem& a) const { return mul(a, a); }
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, u64 e) const;
  Elem pow(const Elem& a, const BigUint& e) const;

  // raw span variants (arrays of length dim()) for hot paths
  void add_raw(const u64* a, const u64* b, u64* out) const;
  void sub_raw(const u64* a, const u64* b, u64* out) const;
  void mul_raw(const u64* a, const u64* b, u64* out) const;
  void axpy_raw(const u64* scalar_base, const u64* x, u64* acc) const;
  bool is_zero_raw(const u64* a) const;

  // --- tower structure (extension fields only) ---
  Elem embed_base(const Elem& b) const;
  bool in_base(const Elem& a) const;
  Elem project_base(const Elem& a) const;  // throws domain_error if not in base
  Elem coeff(const Elem& a, size_t j) const;
  void set_coeff(Elem& a, size_t j, const Elem& b) const;
  /// Multiply by a base-field scalar.
  Elem scale(const Elem& b, const Elem& a) const;

  /// a ^ (|base|^k): the Frobenius of this field relative to its base.
  Elem frobenius_base(const Elem& a, unsigned k = 1) const;
  /// Relative trace to the base field.
  Elem trace_to_base(const Elem& a) const;
  /// tr(x^k) for 0 <= k <= 2 deg - 2, as base-field elements. Lets callers
  /// evaluate tr(a*b) from the coefficient convolution without reducing.
  const std::vector<Elem>& power_traces() const { return power_traces_; }
  /// tr(a*b) via power_traces().
  Elem trace_of_product(const Elem& a, const Elem& b) const;

  /// Deterministic square root: the lexicographically smaller of the two
  /// roots (the unique one in characteristic 2); nullopt for non-squares.
  std::optional<Elem> sqrt(const Elem& a) const;
  /// Element of exact multiplicative order d (d must divide size-1).
  Elem element_of_order(u64 d) const;
  /// Element whose Frobenius orbit over the base field is a basis.
  Elem find_normal_element() const;

 private:
  Field() = default;
  void init_extension_tables();

  Ptr base_;
  u64 p_ = 0;
  size_t deg_ = 1;
  size_t dim_ = 1;
  BigUint size_;
  std::vector<Elem> modulus_;            // base coefficients, monic
  std::vector<Elem> red_table_;          // x^k mod modulus, deg <= k <= 2deg-2 (flat this-field elems)
  std::vector<Elem> frob_gen_powers_;    // (x^{|base|})^j mod modulus, j < deg
  std::vector<Elem> basis_traces_;       // tr(x^j), j < deg (base elems)
  std::vector<Elem> power_traces_;       // tr(x^k), k < 2deg-1 (base elems)
};

/// True if the two pointers denote the same field construction.
bool same_field(const Field::Ptr& a, const Field::Ptr& b);

}  // namespace sdnb
