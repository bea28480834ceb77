#pragma once
// The eight representations of the reals and the nine translation machines
// between them.
//
//   rho        tokens j_i with |q(j_i) - x| <= 2^-i
//   rho_prime  rational codes whose values converge to x (no rate)
//   rho_10     anchored decimal: zigzag(z), then digits d1 d2 ... with
//              x in [z + 0.d1..dk, z + 0.d1..dk + 10^-k] (closed)
//   rho_cf     continued fraction: zigzag(a0), quotients >= 1, rationals
//              end with a 0 terminator and 0 padding
//   rho_cf_lt  characteristic function of { n : q(n) < x }
//   rho_cf_gt  characteristic function of { n : q(n) > x }
//   rho_lt     enumeration (0 dummy / v codes v-1) of { n : q(n) < x }
//   rho_gt     enumeration of { n : q(n) > x }
//
// Validators are prefix-sound: they accept exactly the prefixes that extend
// to a valid name of x.  Synthesizers produce seeded valid names; the seed
// varies junk, code choices, and expansion variants at grid points.

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "baire.hpp"
#include "ratenum.hpp"
#include "real.hpp"

namespace wlab {

enum class RepId { Rho, RhoPrime, Rho10, RhoCf, RhoCfL, RhoCfR, RhoL, RhoR };

inline const std::array<RepId, 8>& all_reps() {
  static const std::array<RepId, 8> v = {RepId::Rho,    RepId::RhoPrime, RepId::Rho10,
                                         RepId::RhoCf,  RepId::RhoCfL,   RepId::RhoCfR,
                                         RepId::RhoL,   RepId::RhoR};
  return v;
}

inline const char* rep_name(RepId r) {
  switch (r) {
    case RepId::Rho: return "rho";
    case RepId::RhoPrime: return "rho_prime";
    case RepId::Rho10: return "rho_10";
    case RepId::RhoCf: return "rho_cf";
    case RepId::RhoCfL: return "rho_cf_lt";
    case RepId::RhoCfR: return "rho_cf_gt";
    case RepId::RhoL: return "rho_lt";
    case RepId::RhoR: return "rho_gt";
  }
  return "?";
}

inline std::optional<RepId> rep_parse(const std::string& s) {
  for (RepId r : all_reps())
    if (s == rep_name(r)) return r;
  return std::nullopt;
}

// ----- validators -----------------------------------------------------------

using TokFn = std::function<Int(Nat)>;

namespace detail {

inline bool is_prefix(const std::vector<Int>& p, const std::vector<Int>& full) {
  if (p.size() > full.size()) return false;
  return std::equal(p.begin(), p.end(), full.begin());
}

// The two finite quotient lists naming a rational: canonical and the
// split variant [..., a-1, 1].
inline std::pair<std::vector<Int>, std::vector<Int>> cf_variants(const Rat& v) {
  std::vector<Int> canon = cf_of_rational(v);
  std::vector<Int> alt = canon;
  if (alt.size() == 1) {
    alt.back() -= 1;
    alt.push_back(1);
  } else {
    alt.back() -= 1;
    alt.push_back(1);
  }
  return {canon, alt};
}

}  // namespace detail

inline bool validate_rho(const RealDesc& x, const TokFn& tok, Nat len) {
  for (Nat i = 0; i < len; ++i) {
    Int t = tok(i);
    if (t < 0) return false;
    Rat q = q_at(t);
    Rat slack = pow2(-static_cast<long long>(i));
    if (x.cmp(q - slack) < 0) return false;
    if (x.cmp(q + slack) > 0) return false;
  }
  return true;
}

inline bool validate_rho_prime(const RealDesc&, const TokFn& tok, Nat len) {
  for (Nat i = 0; i < len; ++i)
    if (tok(i) < 0) return false;
  return true;
}

inline bool validate_rho10(const RealDesc& x, const TokFn& tok, Nat len) {
  if (len == 0) return true;
  Rat lo(unzigzag(tok(0)));
  for (Nat k = 1; k < len; ++k) {
    Int d = tok(k);
    if (d < 0 || d > 9) return false;
    lo += Rat(d) * pow10(-static_cast<long long>(k));
  }
  Rat width = pow10(-static_cast<long long>(len - 1));
  return x.cmp(lo) >= 0 && x.cmp(lo + width) <= 0;
}

inline bool validate_rho_cf(const RealDesc& x, const TokFn& tok, Nat len) {
  std::vector<Int> quo;
  bool term = false;
  for (Nat i = 0; i < len; ++i) {
    Int t = tok(i);
    if (t < 0) return false;
    if (i == 0) {
      quo.push_back(unzigzag(t));
      continue;
    }
    if (term) {
      if (t != 0) return false;
      continue;
    }
    if (t == 0) {
      term = true;
      continue;
    }
    quo.push_back(t);
  }
  if (quo.empty()) return true;
  if (x.rational) {
    auto [canon, alt] = detail::cf_variants(x.exact->rat());
    if (term) return quo == canon || quo == alt;
    return detail::is_prefix(quo, canon) || detail::is_prefix(quo, alt);
  }
  if (term) return false;
  // Irrational: the expansion is unique; committed quotients must match it.
  if (x.exact) {
    SurdCf s(x.exact->surd());
    for (auto& a : quo)
      if (s.next() != a) return false;
    return true;
  }
  DescCf s(x);
  for (auto& a : quo)
    if (s.next() != a) return false;
  return true;
}

inline bool validate_bits(const RealDesc& x, const TokFn& tok, Nat len, bool lt) {
  for (Nat n = 0; n < len; ++n) {
    Int b = tok(n);
    if (b != 0 && b != 1) return false;
    int s = x.cmp(q_at(Int(n)));
    bool in_set = lt ? (s > 0) : (s < 0);
    if ((b == 1) != in_set) return false;
  }
  return true;
}

inline bool validate_enum_cut(const RealDesc& x, const TokFn& tok, Nat len, bool lt) {
  for (Nat i = 0; i < len; ++i) {
    Int v = tok(i);
    if (v < 0) return false;
    auto e = enum_decode(v);
    if (!e) continue;
    int s = x.cmp(q_at(*e));
    if (lt ? (s <= 0) : (s >= 0)) return false;
  }
  return true;
}

inline bool validate_prefix(RepId rep, const RealDesc& x, const TokFn& tok, Nat len) {
  switch (rep) {
    case RepId::Rho: return validate_rho(x, tok, len);
    case RepId::RhoPrime: return validate_rho_prime(x, tok, len);
    case RepId::Rho10: return validate_rho10(x, tok, len);
    case RepId::RhoCf: return validate_rho_cf(x, tok, len);
    case RepId::RhoCfL: return validate_bits(x, tok, len, true);
    case RepId::RhoCfR: return validate_bits(x, tok, len, false);
    case RepId::RhoL: return validate_enum_cut(x, tok, len, true);
    case RepId::RhoR: return validate_enum_cut(x, tok, len, false);
  }
  return false;
}

// ----- synthesizers ---------------------------------------------------------

namespace detail {

inline std::uint64_t mix(Nat seed, const Int& pos) {
  Rng r(seed * 0x9e3779b97f4a7c15ull + (pos % 1000003).convert_to<std::uint64_t>());
  return r.next();
}

// Last nonzero fractional decimal position of a grid point (0 for integers).
inline Nat grid_depth(const Real& x) {
  Rat f = x.rat() - Rat(x.floor());
  Nat k = 0;
  while (f != 0) {
    ++k;
    f *= 10;
    f -= Rat(rfloor(f));
  }
  return k;
}

}  // namespace detail

inline Name synth_rho(const Real& x, Nat seed) {
  return Name([x, seed](const Int& pos) -> Int {
    Nat i = pos.convert_to<Nat>();
    std::uint64_t h = detail::mix(seed, pos);
    Rat v;
    if (x.is_rational() && h % 4 == 0) {
      v = x.rat();
    } else if (h % 2 == 0) {
      v = dyadic_below(x, i + 2);
    } else {
      v = dyadic_above(x, i + 2);
    }
    Int extra = Int((h >> 8) % 3);
    return code_of(v, 1, extra);
  });
}

inline Name synth_rho_prime(const Real& x, Nat seed) {
  Nat junk = Rng(seed).below(20);
  bool from_below = Rng(seed + 1).coin();
  return Name([x, seed, junk, from_below](const Int& pos) -> Int {
    Nat i = pos.convert_to<Nat>();
    if (i < junk) return Int(detail::mix(seed, pos) % 60);
    Nat k = i - junk;
    Rat v = from_below ? dyadic_below(x, k) : dyadic_above(x, k);
    return least_code_of(v);
  });
}

inline Name synth_rho10(const Real& x, Nat seed) {
  bool low_form = x.is_decimal_grid() && Rng(seed ^ 0xd1d1).coin();
  Int fl = x.floor();
  if (!low_form) {
    return Name([x, fl](const Int& pos) -> Int {
      if (pos == 0) return zigzag(fl);
      return Int(x.decimal_digit(pos.convert_to<Nat>()));
    });
  }
  Nat gd = detail::grid_depth(x);
  if (gd == 0) {
    // integer: z - 1 then all nines
    return Name([fl](const Int& pos) -> Int {
      if (pos == 0) return zigzag(fl - 1);
      return Int(9);
    });
  }
  return Name([x, fl, gd](const Int& pos) -> Int {
    if (pos == 0) return zigzag(fl);
    Nat k = pos.convert_to<Nat>();
    if (k < gd) return Int(x.decimal_digit(k));
    if (k == gd) return Int(x.decimal_digit(k)) - 1;
    return Int(9);
  });
}

inline Name synth_rho_cf(const Real& x, Nat seed) {
  if (x.is_rational()) {
    auto [canon, alt] = detail::cf_variants(x.rat());
    const std::vector<Int>& quo = Rng(seed ^ 0xcf).coin() ? alt : canon;
    std::vector<Int> toks;
    toks.push_back(zigzag(quo[0]));
    for (std::size_t i = 1; i < quo.size(); ++i) toks.push_back(quo[i]);
    toks.push_back(0);
    return name_prefix_then(std::move(toks), 0);
  }
  struct St {
    SurdCf cf;
    std::vector<Int> toks;
  };
  auto st = std::make_shared<St>(St{SurdCf(x.surd()), {}});
  return Name([st](const Int& pos) -> Int {
    std::size_t p = pos.convert_to<std::size_t>();
    while (st->toks.size() <= p) {
      Int a = st->cf.next();
      st->toks.push_back(st->toks.empty() ? zigzag(a) : a);
    }
    return st->toks[p];
  });
}

inline Name synth_cf_bits(const Real& x, bool lt) {
  return Name([x, lt](const Int& n) -> Int {
    int s = x.cmp(q_at(n));
    bool in_set = lt ? (s > 0) : (s < 0);
    return Int(in_set ? 1 : 0);
  });
}

// Enumeration of a cut side: position t handles candidate pi(t), a seeded
// within-block shuffle of t, so every candidate appears exactly once.
inline Name synth_enum_cut(const Real& x, Nat seed, bool lt) {
  return Name([x, seed, lt](const Int& pos) -> Int {
    Int block = pos / 16, off = pos % 16;
    std::uint64_t rot = detail::mix(seed ^ 0xe17, block) % 16;
    Int j = block * 16 + Int((off.convert_to<std::uint64_t>() + rot) % 16);
    int s = x.cmp(q_at(j));
    bool in_set = lt ? (s > 0) : (s < 0);
    return in_set ? j + 1 : Int(0);
  });
}

inline Name synthesize(RepId rep, const Real& x, Nat seed) {
  switch (rep) {
    case RepId::Rho: return synth_rho(x, seed);
    case RepId::RhoPrime: return synth_rho_prime(x, seed);
    case RepId::Rho10: return synth_rho10(x, seed);
    case RepId::RhoCf: return synth_rho_cf(x, seed);
    case RepId::RhoCfL: return synth_cf_bits(x, true);
    case RepId::RhoCfR: return synth_cf_bits(x, false);
    case RepId::RhoL: return synth_enum_cut(x, seed, true);
    case RepId::RhoR: return synth_enum_cut(x, seed, false);
  }
  return Name();
}

// Name of a descriptor-backed real (used when a value exists only as a
// limit).  Exact descriptors delegate to the seeded synthesizer.
inline Name name_from_desc(RepId rep, const RealDesc& x, Nat seed) {
  if (x.exact) return synthesize(rep, *x.exact, seed);
  switch (rep) {
    case RepId::Rho:
    case RepId::RhoPrime:
      return Name([x](const Int& pos) -> Int {
        Nat i = pos.convert_to<Nat>();
        auto [lo, hi] = x.bracket(i + 2);
        return least_code_of((lo + hi) / 2);
      });
    case RepId::Rho10: {
      auto fl = std::make_shared<std::optional<Int>>();
      return Name([x, fl](const Int& pos) -> Int {
        if (!fl->has_value()) *fl = desc_floor(x);
        if (pos == 0) return zigzag(**fl);
        return Int(desc_decimal_digit(x, pos.convert_to<Nat>()));
      });
    }
    case RepId::RhoCf: {
      struct St {
        DescCf cf;
        std::vector<Int> toks;
      };
      auto st = std::make_shared<St>(St{DescCf(x), {}});
      return Name([st](const Int& pos) -> Int {
        std::size_t p = pos.convert_to<std::size_t>();
        while (st->toks.size() <= p) {
          Int a = st->cf.next();
          st->toks.push_back(st->toks.empty() ? zigzag(a) : a);
        }
        return st->toks[p];
      });
    }
    case RepId::RhoCfL:
      return Name([x](const Int& n) { return Int(x.cmp(q_at(n)) > 0 ? 1 : 0); });
    case RepId::RhoCfR:
      return Name([x](const Int& n) { return Int(x.cmp(q_at(n)) < 0 ? 1 : 0); });
    case RepId::RhoL:
    case RepId::RhoR: {
      bool lt = rep == RepId::RhoL;
      return Name([x, seed, lt](const Int& pos) -> Int {
        Int block = pos / 16, off = pos % 16;
        std::uint64_t rot = detail::mix(seed ^ 0xe17, block) % 16;
        Int j = block * 16 + Int((off.convert_to<std::uint64_t>() + rot) % 16);
        int s = x.cmp(q_at(j));
        return (lt ? s > 0 : s < 0) ? j + 1 : Int(0);
      });
    }
  }
  return Name();
}

// ----- the nine translators -------------------------------------------------

// rho_cf -> rho_cf_lt / rho_cf_gt: bracket the value between consecutive
// convergents; a cell for q(n) reads quotients until q(n) escapes the hull
// or the expansion terminates with an exact value.
inline Machine tr_cf_to_bits(bool lt) {
  std::string label = lt ? "rho_cf->rho_cf_lt" : "rho_cf->rho_cf_gt";
  return make_cellwise_machine(label, [lt](Reader& in, Fuel& fuel, const Int& n) -> Int {
    Rat q = q_at(n);
    Int a0 = unzigzag(in(0));
    Rat lo(a0), hi(a0 + 1);
    Int pm2 = 1, qm2 = 0, pm1 = a0, qm1 = 1;
    for (Nat m = 1;; ++m) {
      fuel.burn();
      if (q < lo) return Int(lt ? 1 : 0);
      if (q > hi) return Int(lt ? 0 : 1);
      Int t = in(Int(m));
      if (t == 0) {
        Rat v = mkrat(pm1, qm1);
        bool in_set = lt ? (q < v) : (q > v);
        return Int(in_set ? 1 : 0);
      }
      Int p = t * pm1 + pm2, qq = t * qm1 + qm2;
      pm2 = pm1;
      pm1 = p;
      qm2 = qm1;
      qm1 = qq;
      Rat c1 = mkrat(pm1, qm1), c2 = mkrat(pm2, qm2);
      lo = std::min(c1, c2);
      hi = std::max(c1, c2);
    }
  });
}

// rho_cf_lt / rho_cf_gt -> rho_10: walk the decimal grid.  The lt-side
// name pins z < x <= z+1 and yields the low decimal form (nine-tails at
// grid points); the gt side pins z <= x < z+1 and yields the high form.
inline Machine tr_bits_to_10(bool from_lt) {
  struct St : SeqState {
    bool from_lt;
    int phase = 0;
    Int scan = 0;
    Rat base = 0;
    Nat k = 1;
    explicit St(bool l) : from_lt(l) {}
    void step(Reader& in, Fuel&, std::vector<Int>& out) override {
      if (phase == 0) {
        Int z = unzigzag(scan);
        ++scan;
        Int b0 = in(least_code_of(Rat(z)));
        Int b1 = in(least_code_of(Rat(z + 1)));
        bool found = from_lt ? (b0 == 1 && b1 == 0) : (b0 == 0 && b1 == 1);
        if (found) {
          out.push_back(zigzag(z));
          base = Rat(z);
          phase = 1;
        }
        return;
      }
      Rat step10 = pow10(-static_cast<long long>(k));
      int digit = 9;
      for (int d = 0; d < 10; ++d) {
        Int b = in(least_code_of(base + Rat(d + 1) * step10));
        bool stop = from_lt ? (b == 0) : (b == 1);
        if (stop) {
          digit = d;
          break;
        }
      }
      out.push_back(Int(digit));
      base += Rat(digit) * step10;
      ++k;
    }
  };
  bool l = from_lt;
  return make_seq_machine(l ? "rho_cf_lt->rho_10" : "rho_cf_gt->rho_10",
                          [l] { return std::make_unique<St>(l); });
}

// rho_10 -> rho: midpoints of the decimal intervals.
inline Machine tr_10_to_rho() {
  return make_cellwise_machine("rho_10->rho", [](Reader& in, Fuel&, const Int& i) -> Int {
    Nat k = i.convert_to<Nat>() + 1;
    Rat base(unzigzag(in(0)));
    for (Nat j = 1; j <= k; ++j)
      base += Rat(in(Int(j))) * pow10(-static_cast<long long>(j));
    Rat mid = base + pow10(-static_cast<long long>(k)) / 2;
    return least_code_of(mid);
  });
}

// rho -> rho_lt / rho_gt: enumerate cut elements once certified by an
// approximation band.
inline Machine tr_rho_to_enum(bool lt) {
  struct St : SeqState {
    bool lt;
    Int t = 0;
    std::unordered_set<Int, IntHash> emitted;
    explicit St(bool l) : lt(l) {}
    void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
      Rat a = q_at(in(t));
      Rat slack = pow2(-static_cast<long long>(t.convert_to<long long>()));
      for (Int j = 0; j <= t; ++j) {
        fuel.burn();
        if (emitted.count(j)) continue;
        Rat qj = q_at(j);
        bool cert = lt ? (qj < a - slack) : (qj > a + slack);
        if (cert) {
          emitted.insert(j);
          out.push_back(j + 1);
          ++t;
          return;
        }
      }
      out.push_back(0);
      ++t;
    }
  };
  bool l = lt;
  return make_seq_machine(l ? "rho->rho_lt" : "rho->rho_gt",
                          [l] { return std::make_unique<St>(l); });
}

// rho_lt / rho_gt -> rho_prime: running extremum of the enumerated side.
inline Machine tr_enum_to_prime(bool from_lt) {
  struct St : SeqState {
    bool from_lt;
    Int t = 0;
    std::optional<Rat> best;
    explicit St(bool l) : from_lt(l) {}
    void step(Reader& in, Fuel&, std::vector<Int>& out) override {
      Int v = in(t);
      ++t;
      if (auto e = enum_decode(v)) {
        Rat q = q_at(*e);
        if (!best || (from_lt ? q > *best : q < *best)) best = q;
      }
      out.push_back(best ? least_code_of(*best) : Int(0));
    }
  };
  bool l = from_lt;
  return make_seq_machine(l ? "rho_lt->rho_prime" : "rho_gt->rho_prime",
                          [l] { return std::make_unique<St>(l); });
}

struct TranslatorArrow {
  RepId from, to;
  Machine machine;
};

inline const std::vector<TranslatorArrow>& translator_arrows() {
  static const std::vector<TranslatorArrow> arrows = [] {
    std::vector<TranslatorArrow> v;
    v.push_back({RepId::RhoCf, RepId::RhoCfL, tr_cf_to_bits(true)});
    v.push_back({RepId::RhoCf, RepId::RhoCfR, tr_cf_to_bits(false)});
    v.push_back({RepId::RhoCfL, RepId::Rho10, tr_bits_to_10(true)});
    v.push_back({RepId::RhoCfR, RepId::Rho10, tr_bits_to_10(false)});
    v.push_back({RepId::Rho10, RepId::Rho, tr_10_to_rho()});
    v.push_back({RepId::Rho, RepId::RhoL, tr_rho_to_enum(true)});
    v.push_back({RepId::Rho, RepId::RhoR, tr_rho_to_enum(false)});
    v.push_back({RepId::RhoL, RepId::RhoPrime, tr_enum_to_prime(true)});
    v.push_back({RepId::RhoR, RepId::RhoPrime, tr_enum_to_prime(false)});
    return v;
  }();
  return arrows;
}

// Shortest arrow path from one representation to another (BFS); empty when
// no computable chain exists.
inline std::optional<std::vector<const TranslatorArrow*>> translator_path(RepId from,
                                                                          RepId to) {
  if (from == to) return std::vector<const TranslatorArrow*>{};
  std::unordered_map<int, std::pair<int, const TranslatorArrow*>> parent;
  std::vector<RepId> frontier = {from};
  parent[static_cast<int>(from)] = {-1, nullptr};
  while (!frontier.empty()) {
    std::vector<RepId> next;
    for (RepId cur : frontier) {
      for (const auto& a : translator_arrows()) {
        if (a.from != cur) continue;
        int key = static_cast<int>(a.to);
        if (parent.count(key)) continue;
        parent[key] = {static_cast<int>(cur), &a};
        if (a.to == to) {
          std::vector<const TranslatorArrow*> path;
          int at = key;
          while (parent[at].second) {
            path.push_back(parent[at].second);
            at = parent[at].first;
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        next.push_back(a.to);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

inline Machine translator_chain(const std::vector<const TranslatorArrow*>& path) {
  if (path.empty()) return machine_id();
  Machine m = path[0]->machine;
  for (std::size_t i = 1; i < path.size(); ++i)
    m = compose_machines(path[i]->machine, m);
  return m;
}

}  // namespace wlab
