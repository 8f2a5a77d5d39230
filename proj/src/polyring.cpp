#include "sdnb/polyring.hpp"

namespace sdnb::polyring {

void normalize(const Field& k, Poly& f) {
  while (!f.empty() && k.is_zero(f.back())) f.pop_back();
}

int degree(const Poly& f) { return (int)f.size() - 1; }

bool is_zero(const Poly& f) { return f.empty(); }

Poly x_poly(const Field& k) { return {k.zero(), k.one()}; }

Poly constant(const Field& k, const Elem& c) {
  Poly f{c};
  normalize(k, f);
  return f;
}

Poly add(const Field& k, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), k.zero());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] = k.add(out[i], b[i]);
  normalize(k, out);
  return out;
}

Poly sub(const Field& k, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), k.zero());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] = k.sub(out[i], b[i]);
  normalize(k, out);
  return out;
}

Poly mul(const Field& k, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, k.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (k.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
  }
  normalize(k, out);
  return out;
}

Poly scale(const Field& k, const Elem& c, const Poly& a) {
  Poly out(a.size(), k.zero());
  for (size_t i = 0; i < a.size(); ++i) out[i] = k.mul(c, a[i]);
  normalize(k, out);
  return out;
}

Poly mod(const Field& k, const Poly& a, const Poly& b) {
  if (b.empty()) throw domain_error("polyring::mod: division by zero polynomial");
  Poly r = a;
  Elem lead_inv = k.inv(b.back());
  while ((int)r.size() >= (int)b.size()) {
    Elem c = k.mul(r.back(), lead_inv);
    size_t shift = r.size() - b.size();
    if (!k.is_zero(c)) {
      for (size_t i = 0; i < b.size(); ++i)
        r[shift + i] = k.sub(r[shift + i], k.mul(c, b[i]));
    }
    r.pop_back();
    normalize(k, r);
  }
  return r;
}

Poly make_monic(const Field& k, const Poly& a) {
  if (a.empty()) return a;
  return scale(k, k.inv(a.back()), a);
}

Poly gcd(const Field& k, Poly a, Poly b) {
  normalize(k, a);
  normalize(k, b);
  while (!b.empty()) {
    Poly r = mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(k, a);
}

void ext_gcd(const Field& k, const Poly& a, const Poly& b, Poly& g, Poly& s) {
  // maintain r0 = s0*a (mod b), r1 = s1*a (mod b)
  Poly r0 = a, r1 = b;
  normalize(k, r0);
  normalize(k, r1);
  Poly s0 = {k.one()}, s1 = {};
  while (!r1.empty()) {
    // quotient of r0 by r1
    Poly q;
    {
      Poly r = r0;
      Elem lead_inv = k.inv(r1.back());
      q.assign(r.size() >= r1.size() ? r.size() - r1.size() + 1 : 0, k.zero());
      while ((int)r.size() >= (int)r1.size()) {
        Elem c = k.mul(r.back(), lead_inv);
        size_t shift = r.size() - r1.size();
        q[shift] = c;
        if (!k.is_zero(c)) {
          for (size_t i = 0; i < r1.size(); ++i)
            r[shift + i] = k.sub(r[shift + i], k.mul(c, r1[i]));
        }
        r.pop_back();
        normalize(k, r);
      }
      normalize(k, q);
      r0.swap(r1);
      r1 = std::move(r);
    }
    Poly s2 = sub(k, s0, mul(k, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  g = r0;
  s = s0;
}

Poly pow_mod(const Field& k, Poly base, const BigUint& e, const Poly& m) {
  base = mod(k, base, m);
  Poly r = {k.one()};
  for (size_t i = e.bit_length(); i-- > 0;) {
    r = mod(k, mul(k, r, r), m);
    if (e.bit(i)) r = mod(k, mul(k, r, base), m);
  }
  return r;
}

Poly compose_mod(const Field& k, const Poly& f, const Poly& g, const Poly& m) {
  Poly r = {};
  for (size_t i = f.size(); i-- > 0;) {
    r = mod(k, mul(k, r, g), m);
    r = add(k, r, constant(k, f[i]));
  }
  return r;
}

Elem eval(const Field& k, const Poly& f, const Elem& x) {
  Elem r = k.zero();
  for (size_t i = f.size(); i-- > 0;) r = k.add(k.mul(r, x), f[i]);
  return r;
}

bool is_irreducible(const Field& k, const Poly& f) {
  int d = degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  if (k.is_zero(f[0])) return false;  // x divides
  Poly x = x_poly(k);
  Poly fr = pow_mod(k, x, k.size(), f);  // X^{|k|} mod f
  // pi[j] = X^{|k|^j} mod f
  std::vector<Poly> pi((size_t)d + 1);
  pi[1] = fr;
  for (int j = 2; j <= d; ++j) pi[j] = compose_mod(k, pi[j - 1], fr, f);
  if (!(sub(k, pi[d], x).empty())) return false;
  for (auto& [l, m] : factor_u64((u64)d)) {
    (void)m;
    Poly g = gcd(k, f, sub(k, pi[d / l], x));
    if (degree(g) != 0) return false;
  }
  return true;
}

Elem find_root(const Field& k, Poly f) {
  normalize(k, f);
  f = make_monic(k, f);
  if (degree(f) < 1) throw domain_error("find_root: constant polynomial");
  const size_t attempts_cap = 64 + 8 * k.dim();
  while (degree(f) > 1) {
    bool split = false;
    if (k.p() == 2) {
      // additive splitting by the absolute trace of cX. c runs over an
      // F_2-basis of the field: the trace form is non-degenerate, so whenever
      // f has two distinct roots some basis element takes trace 0 on one root
      // and 1 on the other, making the gcd a proper factor.
      for (size_t m = 0; m < k.dim(); ++m) {
        Elem c = k.zero();
        c[m] = 1;
        Poly cx = scale(k, c, x_poly(k));
        Poly s = mod(k, cx, f);
        Poly tr = s;
        for (size_t i = 1; i < k.dim(); ++i) {
          s = mod(k, mul(k, s, s), f);
          tr = add(k, tr, s);
        }
        Poly g = gcd(k, f, tr);
        int dg = degree(g);
        if (dg >= 1 && dg < degree(f)) {
          f = std::move(g);
          split = true;
          break;
        }
      }
    } else {
      BigUint half = k.size();
      half.sub_small(1);
      half.shr1();
      for (u64 t = 0; t <= attempts_cap; ++t) {
        Poly shifted = add(k, x_poly(k), constant(k, k.from_index(t)));
        Poly h = pow_mod(k, shifted, half, f);
        Poly g = gcd(k, f, sub(k, h, Poly{k.one()}));
        int dg = degree(g);
        if (dg >= 1 && dg < degree(f)) {
          f = std::move(g);
          split = true;
          break;
        }
      }
    }
    if (!split) throw internal_error("find_root: splitting stalled (input may not split over field)");
  }
  return k.neg(f[0]);
}

}  // namespace sdnb::polyring
