#pragma once

#include <vector>

#include "sdnb/field.hpp"

namespace sdnb::polyring {

/// Dense univariate polynomials over a Field, coefficient k at index k.
/// All functions keep results normalized (no trailing zero coefficients).
using Poly = std::vector<Elem>;

void normalize(const Field& k, Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial
Poly x_poly(const Field& k);
Poly constant(const Field& k, const Elem& c);
bool is_zero(const Poly& f);

Poly add(const Field& k, const Poly& a, const Poly& b);
Poly sub(const Field& k, const Poly& a, const Poly& b);
Poly mul(const Field& k, const Poly& a, const Poly& b);
Poly scale(const Field& k, const Elem& c, const Poly& a);
/// Remainder of a modulo monic-leading b (b need not be monic).
Poly mod(const Field& k, const Poly& a, const Poly& b);
Poly make_monic(const Field& k, const Poly& a);
Poly gcd(const Field& k, Poly a, Poly b);  // monic
/// g and s with s*a = g mod b (half extended Euclid).
void ext_gcd(const Field& k, const Poly& a, const Poly& b, Poly& g, Poly& s);
Poly pow_mod(const Field& k, Poly base, const BigUint& e, const Poly& m);
/// f(g) mod m
Poly compose_mod(const Field& k, const Poly& f, const Poly& g, const Poly& m);
Elem eval(const Field& k, const Poly& f, const Elem& x);

/// Deterministic irreducibility test for a monic polynomial.
bool is_irreducible(const Field& k, const Poly& f);

/// One root in k of a monic polynomial that splits completely over k.
/// Deterministic (fixed splitting sequence). Throws internal_error if the
/// polynomial turns out not to split.
Elem find_root(const Field& k, Poly f);

}  // namespace sdnb::polyring
