#pragma once
// Exact integer / rational arithmetic helpers used throughout the lab.
// All staircase constructions manipulate dyadic and decimal rationals whose
// exponents routinely exceed machine-word range, so everything here is bignum.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace wlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Nat = std::uint64_t;

inline Int ipow(Int base, Nat e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat pow2(long long e) {
  if (e >= 0) return Rat(ipow(2, static_cast<Nat>(e)));
  return Rat(1, ipow(2, static_cast<Nat>(-e)));
}

inline Rat pow10(long long e) {
  if (e >= 0) return Rat(ipow(10, static_cast<Nat>(e)));
  return Rat(1, ipow(10, static_cast<Nat>(-e)));
}

// cpp_rational's two-argument constructor rejects negative denominators;
// this normalizes the sign first.
inline Rat mkrat(Int num, Int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int rfloor(const Rat& q) {
  return floor_div(numerator(q), denominator(q));
}

inline Int rceil(const Rat& q) { return -rfloor(-q); }

inline Rat rabs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Integer square root (floor).  Input must be >= 0.
inline Int isqrt(const Int& n) {
  if (n <= 0) return 0;
  Int x = Int(1) << (msb(n) / 2 + 1);
  for (;;) {
    Int y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

// z-coding of signed integers onto naturals: 0,-1,1,-2,2,... <-> 0,1,2,3,4,...
inline Int zigzag(const Int& z) {
  if (z >= 0) return 2 * z;
  return -2 * z - 1;
}

inline Int unzigzag(const Int& n) {
  if (n % 2 == 0) return n / 2;
  return -(n + 1) / 2;
}

inline std::string rat_str(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

// Splitmix64: cheap deterministic PRNG used for seed-derived streams.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  // Uniform in [lo, hi] inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }
  bool coin() { return next() & 1; }
  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
};

}  // namespace wlab
