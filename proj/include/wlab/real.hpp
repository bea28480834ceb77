#pragma once
// Exact real values: rationals and quadratic irrationals (p + sqrt(d))/q.
// Quadratic irrationals are kept in the classical surd form with the
// invariant q | d - p^2, which makes the continued-fraction recurrence
// integral with a fixed radicand.  RealDesc extends this with reals that
// are only known as limits (shrinking brackets + a decidable comparison
// oracle against rationals); those arise inside staircase constructions.

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exact.hpp"

namespace wlab {

struct Surd {
  Int p;  // (p + sqrt(d)) / q
  Int d;  // d > 0, not a perfect square
  Int q;  // q != 0, q | d - p^2
};

// sign of ((p + sqrt(d))/q - v)
inline int surd_cmp(const Int& p, const Int& d, const Int& q, const Rat& v) {
  Rat r = v * Rat(q) - Rat(p);
  int sg;
  if (r < 0) {
    sg = 1;
  } else {
    Rat rr = r * r;
    sg = Rat(d) > rr ? 1 : (Rat(d) < rr ? -1 : 0);
  }
  return q > 0 ? sg : -sg;
}

// floor((p + sqrt(d))/q), exact.  With s = isqrt(d) the value lies in
// [(p+s)/q, (p+s+1)/q) for q > 0 (strictly inside when d is not a
// perfect square), which pins the floor without any estimation.
inline Int surd_floor(const Int& p, const Int& d, const Int& q) {
  Int s = isqrt(d);
  if (s * s == d) return floor_div(p + s, q);
  if (q > 0) return floor_div(p + s, q);
  return -floor_div(p + s, -q) - 1;
}

class Real {
 public:
  Real() : rat_(0), quad_(std::nullopt) {}
  static Real rational(Rat v) {
    Real r;
    r.rat_ = std::move(v);
    return r;
  }
  // (a + sqrt(b)) / c, integer a, c != 0, b > 0.
  static Real quadratic(const Int& a, const Int& b, const Int& c) {
    if (c == 0) throw std::invalid_argument("quadratic: zero denominator");
    if (b <= 0) throw std::invalid_argument("quadratic: radicand must be positive");
    if (is_perfect_square(b)) {
      return rational(mkrat(a + isqrt(b), c));
    }
    Real r;
    Int ac = abs(c);
    // Scale so the surd invariant q | d - p^2 holds.
    r.quad_ = Surd{a * ac, b * ac * ac, c * ac};
    return r;
  }

  bool is_rational() const { return !quad_.has_value(); }
  const Rat& rat() const { return rat_; }
  const Surd& surd() const { return *quad_; }

  // sign of (x - v)
  int cmp(const Rat& v) const {
    if (is_rational()) {
      if (rat_ < v) return -1;
      return rat_ > v ? 1 : 0;
    }
    const Surd& s = *quad_;
    return surd_cmp(s.p, s.d, s.q, v);
  }

  bool operator<(const Rat& v) const { return cmp(v) < 0; }
  bool operator>(const Rat& v) const { return cmp(v) > 0; }
  bool operator==(const Rat& v) const { return cmp(v) == 0; }

  Int floor() const {
    if (is_rational()) return rfloor(rat_);
    const Surd& s = *quad_;
    return surd_floor(s.p, s.d, s.q);
  }

  // Fractional digit k >= 1 in base 10 of the anchored expansion
  // x = floor(x) + 0.d1 d2 d3 ...
  Nat decimal_digit(Nat k) const {
    Int fl = floor();
    if (is_rational()) {
      Rat scaled = (rat_ - Rat(fl)) * pow10(static_cast<long long>(k));
      return static_cast<Nat>(rfloor(scaled) % 10);
    }
    // floor(x * 10^k) mod 10, x scaled inside the surd.
    const Surd& s = *quad_;
    Int m = ipow(10, k);
    Real scaled;
    scaled.quad_ = Surd{s.p * m, s.d * m * m, s.q};
    Int v = scaled.floor() - fl * m;
    return static_cast<Nat>(v % 10);
  }

  // True when x * 10^k is an integer for some k (decimal grid point).
  bool is_decimal_grid() const {
    if (!is_rational()) return false;
    Int den = denominator(rat_);
    while (den % 2 == 0) den /= 2;
    while (den % 5 == 0) den /= 5;
    return den == 1;
  }

  bool is_dyadic() const {
    if (!is_rational()) return false;
    Int den = denominator(rat_);
    while (den % 2 == 0) den /= 2;
    return den == 1;
  }

  std::string str() const {
    if (is_rational()) return rat_str(rat_);
    const Surd& s = *quad_;
    return "(" + s.p.str() + "+sqrt(" + s.d.str() + "))/" + s.q.str();
  }

 private:
  Rat rat_;
  std::optional<Surd> quad_;
};

// Continued-fraction quotients of a rational, canonical form: the last
// quotient is >= 2 unless the expansion is a single integer term.
inline std::vector<Int> cf_of_rational(Rat x) {
  std::vector<Int> out;
  for (;;) {
    Int a = rfloor(x);
    out.push_back(a);
    Rat frac = x - Rat(a);
    if (frac == 0) break;
    x = Rat(1) / frac;
  }
  return out;
}

// Infinite continued-fraction stream of a quadratic irrational via the
// integral surd recurrence: a = floor((p + sqrt(d))/q), p' = a*q - p,
// q' = (d - p'^2)/q.  The radicand d never changes.
class SurdCf {
 public:
  explicit SurdCf(const Surd& s) : p_(s.p), d_(s.d), q_(s.q) {}
  Int next() {
    Int a = surd_floor(p_, d_, q_);
    Int p2 = a * q_ - p_;
    Int q2 = (d_ - p2 * p2) / q_;
    p_ = p2;
    q_ = q2;
    return a;
  }

 private:
  Int p_, d_, q_;
};

inline std::vector<Int> cf_prefix(const Real& x, Nat n) {
  std::vector<Int> out;
  if (x.is_rational()) {
    out = cf_of_rational(x.rat());
    if (out.size() > n) out.resize(n);
    return out;
  }
  // The scaled surd stored in Real already satisfies the invariant, but
  // SurdCf::next re-derives floors exactly, so feed it directly.
  SurdCf cf(x.surd());
  for (Nat i = 0; i < n; ++i) out.push_back(cf.next());
  return out;
}

// A real number the lab can interrogate: either exactly represented, or
// given as a limit with a shrinking-bracket approximator plus an exact
// comparison oracle (sign of x - q, guaranteed to terminate).  Limit-form
// values in this lab are irrational by construction, so sign never
// returns 0 for them.
struct RealDesc {
  std::optional<Real> exact;
  std::function<std::pair<Rat, Rat>(Nat)> bracket;  // [lo,hi] with hi-lo <= 2^-k
  std::function<int(const Rat&)> sign_minus;        // sign(x - q)
  bool rational = false;

  static RealDesc from_exact(const Real& x) {
    RealDesc d;
    d.exact = x;
    d.rational = x.is_rational();
    d.sign_minus = [x](const Rat& q) { return x.cmp(q); };
    d.bracket = [x](Nat k) {
      if (x.is_rational()) return std::make_pair(x.rat(), x.rat());
      Int sc = ipow(2, k);
      const Surd& s = x.surd();
      Int fl = surd_floor(s.p * sc, s.d * sc * sc, s.q);
      Rat lo = Rat(fl, sc);
      return std::make_pair(lo, Rat(lo + Rat(1, sc)));
    };
    return d;
  }

  int cmp(const Rat& q) const { return sign_minus(q); }
};

// floor(x) for a descriptor-backed real.
inline Int desc_floor(const RealDesc& x) {
  if (x.exact) return x.exact->floor();
  auto [lo, hi] = x.bracket(0);
  Int g = rfloor(lo);
  while (x.cmp(Rat(g + 1)) >= 0) ++g;
  while (x.cmp(Rat(g)) < 0) --g;
  return g;
}

// Fractional decimal digit k >= 1 of a descriptor-backed real, anchored at
// floor(x).  For limit-form (irrational) values the bracket is refined
// until it no longer straddles a grid line.
inline Nat desc_decimal_digit(const RealDesc& x, Nat k) {
  if (x.exact) return x.exact->decimal_digit(k);
  Rat step = pow10(-static_cast<long long>(k));
  for (Nat prec = 4 * k + 4;; prec += 8) {
    auto [lo, hi] = x.bracket(prec);
    Int a = rfloor(lo / step), b = rfloor(hi / step);
    if (a == b) {
      Int fl = desc_floor(x);
      Int scaled = a - fl * ipow(10, k);
      return static_cast<Nat>(scaled % 10);
    }
  }
}

// Continued-fraction stream over a descriptor-backed real, for values that
// are irrational (limit form or exact quadratic).  Maintains the tail as a
// Moebius transform t = (a*x + b)/(c*x + d) with integer coefficients;
// comparisons against rationals reduce to sign queries on x itself.
class DescCf {
 public:
  explicit DescCf(RealDesc x) : x_(std::move(x)), a_(1), b_(0), c_(0), d_(1) {}

  Int next() {
    Int fl = tail_floor();
    // t' = 1/(t - fl): subtract, then swap numerator/denominator rows.
    Int na = a_ - fl * c_, nb = b_ - fl * d_;
    a_ = c_;
    b_ = d_;
    c_ = na;
    d_ = nb;
    return fl;
  }

 private:
  // sign of (a*x + b) for integer a, b
  int affine_sign(const Int& a, const Int& b) const {
    if (a == 0) return b == 0 ? 0 : (b > 0 ? 1 : -1);
    int s = x_.cmp(mkrat(-b, a));
    return a > 0 ? s : -s;
  }
  // sign of (t - v) where t = (a_ x + b_)/(c_ x + d_)
  int tail_cmp(const Rat& v) const {
    Int nu = numerator(v), de = denominator(v);
    int num = affine_sign(a_ * de - nu * c_, b_ * de - nu * d_);
    int den = affine_sign(c_, d_);
    return num * den;
  }
  Int tail_floor() const {
    // Refine a bracket of x until the Moebius image has a sign-constant
    // denominator and width < 1, then correct the floor exactly (at most
    // two steps once the image is that narrow).
    Rat est;
    for (Nat prec = 16;; prec += 16) {
      auto [lo, hi] = x_.bracket(prec);
      Rat den_lo = Rat(c_) * lo + Rat(d_);
      Rat den_hi = Rat(c_) * hi + Rat(d_);
      if ((den_lo > 0 && den_hi > 0) || (den_lo < 0 && den_hi < 0)) {
        Rat t_lo = (Rat(a_) * lo + Rat(b_)) / den_lo;
        Rat t_hi = (Rat(a_) * hi + Rat(b_)) / den_hi;
        if (rabs(t_hi - t_lo) < 1) {
          est = t_lo;
          break;
        }
      }
      if (prec > 4096) throw std::runtime_error("cf tail: bracket refinement stalled");
    }
    Int g = rfloor(est);
    while (tail_cmp(Rat(g + 1)) >= 0) ++g;
    while (tail_cmp(Rat(g)) < 0) --g;
    return g;
  }

  RealDesc x_;
  Int a_, b_, c_, d_;
};

// Parse "a/b", "a", or "(a+sqrt(b))/c" (also "a+sqrt(b)").
inline std::optional<Real> parse_real(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = t[0] == '-' ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  auto sq = t.find("sqrt(");
  if (sq != std::string::npos) {
    std::string body = t;
    Int c = 1;
    auto close = body.find(')', sq);
    if (close == std::string::npos) return std::nullopt;
    std::string after = body.substr(close + 1);
    if (!after.empty()) {
      if (after[0] != '/' && after[0] != ')') return std::nullopt;
      if (after[0] == ')') after = after.substr(1);
      if (!after.empty()) {
        if (after[0] != '/') return std::nullopt;
        std::string den = after.substr(1);
        if (!is_int(den)) return std::nullopt;
        c = Int(den);
      }
    }
    std::string head = body.substr(0, sq);
    if (!head.empty() && head[0] == '(') head = head.substr(1);
    Int a = 0;
    if (!head.empty()) {
      if (head.back() != '+' && head.back() != '-') return std::nullopt;
      char sign = head.back();
      std::string as = head.substr(0, head.size() - 1);
      if (as.empty() && sign == '-') return std::nullopt;
      if (!as.empty()) {
        if (!is_int(as)) return std::nullopt;
        a = Int(as);
      }
      if (sign == '-') return std::nullopt;  // only a + sqrt(b) supported
    }
    std::string rad = body.substr(sq + 5, close - sq - 5);
    if (!is_int(rad)) return std::nullopt;
    Int b(rad);
    if (b <= 0 || c == 0) return std::nullopt;
    if (is_perfect_square(b)) return Real::rational(Rat(a + isqrt(b), c));
    return Real::quadratic(a, b, c);
  }
  auto slash = t.find('/');
  if (slash == std::string::npos) {
    if (!is_int(t)) return std::nullopt;
    return Real::rational(Rat(Int(t)));
  }
  std::string nu = t.substr(0, slash), de = t.substr(slash + 1);
  if (!is_int(nu) || !is_int(de) || Int(de) == 0) return std::nullopt;
  return Real::rational(Rat(Int(nu), Int(de)));
}

}  // namespace wlab
