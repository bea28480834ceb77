#pragma once
// The standard enumeration of the rationals used by every index-coded
// representation: q at code <n,<k,m>> is (n-k)/(m+1).  Codes of a given
// value form a two-parameter family; the least code has the closed form
// (a,0,b-1) for a >= 0 and (0,-a,b-1) for a < 0, with value a/b reduced.

#include "baire.hpp"
#include "exact.hpp"
#include "real.hpp"

namespace wlab {

inline Rat q_at(const Int& j) {
  auto [n, t] = unpair_code(j);
  auto [k, m] = unpair_code(t);
  return Rat(n - k, m + 1);
}

// Code of value v with family parameters u >= 1 (denominator multiple)
// and s >= 0 (shift added to both sides of the difference).
inline Int code_of(const Rat& v, const Int& u = 1, const Int& s = 0) {
  Int a = numerator(v), b = denominator(v);
  Int k = (a >= 0 ? Int(0) : -a * u) + s;
  Int n = a * u + k;
  return pair_code(n, pair_code(k, b * u - 1));
}

inline Int least_code_of(const Rat& v) { return code_of(v); }

// Smallest family code of v that is >= lo (used when an enumeration must
// emit fresh, strictly increasing codes).
inline Int code_of_at_least(const Rat& v, const Int& lo) {
  if (code_of(v) >= lo) return code_of(v);
  Int s_lo = 1, s_hi = 2;
  while (code_of(v, 1, s_hi) < lo) s_hi *= 2;
  while (s_lo < s_hi) {
    Int mid = (s_lo + s_hi) / 2;
    if (code_of(v, 1, mid) >= lo)
      s_hi = mid;
    else
      s_lo = mid + 1;
  }
  return code_of(v, 1, s_lo);
}

// Simplest rational (smallest denominator, then smallest numerator
// magnitude) in the open interval (lo, hi); classical Stern-Brocot walk.
inline Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  Int a = rfloor(lo);
  if (Rat(a + 1) < hi) return Rat(a + 1);
  if (lo == Rat(a)) {
    Int t = rfloor(Rat(1) / (hi - lo)) + 1;
    return lo + Rat(1, t);
  }
  return Rat(a) + Rat(1) / simplest_between(Rat(1) / (hi - Rat(a)),
                                            Rat(1) / (lo - Rat(a)));
}

// Simplest rational in the closed interval [lo, hi].
inline Rat simplest_closed(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_closed: empty interval");
  if (lo == hi) return lo;
  if (lo <= 0 && 0 <= hi) return Rat(0);
  if (hi < 0) return -simplest_closed(-hi, -lo);
  Int c = rceil(lo);
  if (Rat(c) <= hi) return Rat(c);
  Int f = rfloor(lo);
  return Rat(f) +
         Rat(1) / simplest_closed(Rat(1) / (hi - Rat(f)), Rat(1) / (lo - Rat(f)));
}

// floor(x * 2^k) / 2^k
inline Rat dyadic_below(const Real& x, Nat k) {
  Int sc = ipow(2, k);
  if (x.is_rational()) return Rat(rfloor(x.rat() * Rat(sc)), sc);
  const Surd& s = x.surd();
  return Rat(surd_floor(s.p * sc, s.d * sc * sc, s.q), sc);
}

inline Rat dyadic_above(const Real& x, Nat k) {
  Rat lo = dyadic_below(x, k);
  if (x.is_rational() && x.rat() == lo) return lo;
  return lo + pow2(-static_cast<long long>(k));
}

}  // namespace wlab
