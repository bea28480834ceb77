#pragma once
// The problem zoo.  Every problem is multivalued and operates on names;
// an Instance carries the machine-facing name together with a ground-truth
// record that only validators and checkers may interrogate.  Validators
// are prefix-sound: they accept a finite prefix iff it extends to a
// correct infinite name, so a "true" verdict never over-commits.

#include <any>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reps.hpp"

namespace wlab {

using Truth = std::any;

struct Instance {
  Name name;
  Truth truth;
};

// Tri-state solution check: Bad refutes, Ok confirms the prefix matches a
// correct answer, Undecided means the prefix is still consistent with both
// outcomes (the harness treats it as a provisional pass).
enum class Check { Bad = -1, Undecided = 0, Ok = 1 };

struct Problem {
  std::string id;
  std::function<Instance(std::uint64_t)> generate;
  // prefix of a correct input name for this exact instance?
  std::function<bool(const Truth&, const TokFn&, Nat)> validate_input;
  // is the instance inside the problem's domain promise?
  std::function<bool(const Truth&)> in_domain;
  // one correct answer name (seed picks among valid answers)
  std::function<Name(const Truth&, std::uint64_t)> oracle;
  // structural well-formedness of an answer prefix (alphabet / shape)
  std::function<bool(const Truth&, const TokFn&, Nat)> validate_output;
  std::function<Check(const Truth&, const TokFn&, Nat)> check_solution;
};

template <class T>
std::shared_ptr<const T> truth_of(const Truth& t) {
  return std::any_cast<std::shared_ptr<const T>>(t);
}

template <class T>
Truth make_truth(T v) {
  return Truth(std::shared_ptr<const T>(std::make_shared<T>(std::move(v))));
}

// ----- truth records --------------------------------------------------------

// Shared by EC and EC1; EC1 instances additionally promise that the
// complement of the enumerated set has at most one element.  When the set
// is ultimately periodic the stem/pattern pair is recorded in shape.
struct EcTruth {
  std::function<bool(const Int&)> member;
  std::optional<Int> missing;
  bool co_small = false;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> shape;
};

// Shared by SEP and SEP1.  assign: 0 = first set, 1 = second set,
// 2 = unassigned (separator free to choose).
struct SepTruth {
  std::function<int(const Int&)> assign;
  std::vector<Int> unassigned;
};

struct WklTruth {
  std::function<bool(const std::vector<int>&)> in_tree;
  std::function<bool(const std::vector<int>&)> extendable;
  std::function<int(Nat)> path;  // canonical infinite path
  // does some tree word of the given length extend w?
  std::function<bool(const std::vector<int>&, Nat)> ext;
  bool infinite = true;
};

// Closed subsets of Cantor space given by negative information.
struct CantorTruth {
  std::function<bool(const std::vector<int>&)> consistent;  // [w] meets the set
  std::function<int(Nat, Nat)> path;                        // member path i, bit n
  Nat card = 1;
};

// Choice over {0..space-1}, or over N when space == 0.
struct ChoiceTruth {
  Nat space = 0;
  std::function<bool(const Int&)> alive;
  std::vector<Int> alive_sample;        // nonempty pool of valid answers
  std::optional<Nat> removed_count;     // set when the instance promises a bound
};

// LPO / LLPO / MLPO over `arity` interleaved number sequences.
struct OmniTruth {
  Nat arity = 1;
  std::function<Int(Nat, Nat)> seq;                // sequence i, index j
  std::vector<std::optional<Nat>> first_nz;        // per sequence
};

struct LimTruth {
  std::function<Int(Nat, Nat)> value;  // stage k, coordinate n
  std::function<Int(Nat)> limit;
  std::function<Nat(Nat)> stab;        // value(k, n) == limit(n) for k >= stab(n)
};

struct SortTruth {
  std::optional<Nat> zeros;  // nullopt = infinitely many zeros in the input
};

struct RatTruth {
  RealDesc desc;
  std::optional<Rat> value;  // set exactly when the described real is rational
};

struct ImplTruth {
  RepId from;
  RepId to;
  RealDesc x;
};

struct ParTruth {
  std::function<Truth(Nat)> component;
};

// ----- small helpers --------------------------------------------------------

namespace detail {

inline std::uint64_t submix(std::uint64_t seed, std::uint64_t salt) {
  Rng r(seed ^ (salt * 0x632be59bd9b4e019ull + 0x9e3779b97f4a7c15ull));
  return r.next();
}

inline bool is_bit(const Int& v) { return v == 0 || v == 1; }

// Tokens of an enumeration prefix, decoded; false on a negative token.
inline bool scan_enum(const TokFn& tok, Nat len,
                      const std::function<bool(const Int&)>& accept) {
  for (Nat i = 0; i < len; ++i) {
    Int v = tok(i);
    if (v < 0) return false;
    auto e = enum_decode(v);
    if (e && !accept(*e)) return false;
  }
  return true;
}

// Eventually periodic bit stream.
struct BitStream {
  std::vector<int> stem;
  std::vector<int> pat;
  int at(Nat n) const {
    if (n < stem.size()) return stem[n];
    return pat[(n - stem.size()) % pat.size()];
  }
  bool agrees(const std::vector<int>& w) const {
    for (Nat i = 0; i < w.size(); ++i)
      if (w[i] != at(i)) return false;
    return true;
  }
};

inline BitStream random_stream(Rng& rng, Nat max_stem, Nat max_period) {
  BitStream s;
  Nat sl = rng.below(max_stem + 1), pl = 1 + rng.below(max_period);
  for (Nat i = 0; i < sl; ++i) s.stem.push_back(static_cast<int>(rng.below(2)));
  for (Nat i = 0; i < pl; ++i) s.pat.push_back(static_cast<int>(rng.below(2)));
  return s;
}

// answer names for single-valued selections: a constant stream
inline bool constant_answer_ok(const TokFn& tok, Nat len) {
  if (len == 0) return true;
  Int v0 = tok(0);
  if (v0 < 0) return false;
  for (Nat i = 1; i < len; ++i)
    if (tok(i) != v0) return false;
  return true;
}

}  // namespace detail

// ----- EC / EC1 -------------------------------------------------------------

inline Problem prob_ec_core(bool one) {
  Problem p;
  p.id = one ? "EC1" : "EC";
  p.generate = [one](std::uint64_t seed) {
    Rng rng(seed);
    EcTruth t;
    std::uint64_t nseed = 0;
    if (one) {
      std::optional<Int> missing;
      if (!rng.chance(1, 4)) missing = Int(rng.below(41));
      t.member = [missing](const Int& n) { return !missing || n != *missing; };
      t.missing = missing;
      t.co_small = true;
      std::vector<int> stem;
      if (missing) {
        for (Int i = 0; i < *missing; ++i) stem.push_back(1);
        stem.push_back(0);
      }
      t.shape = {stem, {1}};
      nseed = rng.next();
      Name nm([missing, nseed](const Int& pos) -> Int {
        if (pos % 2 == 0) {
          Int n = pos / 2;
          if (missing && n == *missing) return 0;
          return n + 1;
        }
        std::uint64_t h = detail::mix(nseed, pos);
        if (h % 2 == 0) return 0;
        Int n((h >> 1) % 48);
        if (missing && n == *missing) return 0;
        return n + 1;
      });
      return Instance{nm, make_truth(std::move(t))};
    }
    auto bs = detail::random_stream(rng, 12, 6);
    t.shape = {bs.stem, bs.pat};
    t.member = [bs](const Int& n) {
      if (n < 0) return false;
      Nat stem = bs.stem.size();
      if (n < Int(stem)) return bs.stem[n.convert_to<Nat>()] == 1;
      Nat off = ((n - stem) % bs.pat.size()).convert_to<Nat>();
      return bs.pat[off] == 1;
    };
    nseed = rng.next();
    auto member = t.member;
    Name nm([member, nseed](const Int& pos) -> Int {
      if (pos % 2 == 0) {
        Int n = pos / 2;
        return member(n) ? Int(n + 1) : Int(0);
      }
      std::uint64_t h = detail::mix(nseed, pos);
      if (h % 2 == 0) return 0;
      Int n((h >> 1) % 64);
      return member(n) ? Int(n + 1) : Int(0);
    });
    return Instance{nm, make_truth(std::move(t))};
  };
  p.validate_input = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<EcTruth>(tr);
    return detail::scan_enum(tok, len, t->member);
  };
  p.in_domain = [one](const Truth& tr) {
    return !one || truth_of<EcTruth>(tr)->co_small;
  };
  p.oracle = [](const Truth& tr, std::uint64_t) {
    auto t = truth_of<EcTruth>(tr);
    return Name([t](const Int& pos) { return Int(t->member(pos) ? 1 : 0); });
  };
  p.validate_output = [](const Truth&, const TokFn& tok, Nat len) {
    for (Nat i = 0; i < len; ++i)
      if (!detail::is_bit(tok(i))) return false;
    return true;
  };
  p.check_solution = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<EcTruth>(tr);
    for (Nat i = 0; i < len; ++i) {
      Int v = tok(i);
      if (!detail::is_bit(v)) return Check::Bad;
      if ((v == 1) != t->member(Int(i))) return Check::Bad;
    }
    return Check::Ok;
  };
  return p;
}

inline Problem prob_ec() { return prob_ec_core(false); }
inline Problem prob_ec1() { return prob_ec_core(true); }

// ----- SEP / SEP1 -----------------------------------------------------------

inline Problem prob_sep(bool one) {
  Problem p;
  p.id = one ? "SEP1" : "SEP";
  p.generate = [one](std::uint64_t seed) {
    Rng rng(seed);
    Nat u_count = one ? rng.below(2) : rng.below(7);
    std::set<Int> uset;
    while (uset.size() < u_count) uset.insert(Int(rng.below(51)));
    std::uint64_t aseed = rng.next();
    SepTruth t;
    t.unassigned.assign(uset.begin(), uset.end());
    t.assign = [uset, aseed](const Int& n) -> int {
      if (uset.count(n)) return 2;
      return static_cast<int>(detail::mix(aseed, n) % 2);
    };
    auto assign = t.assign;
    std::uint64_t nseed = rng.next();
    Name nm([assign, nseed](const Int& pos) -> Int {
      int side = (pos % 2).convert_to<int>();
      Int u = pos / 2;
      if (u % 2 == 0) {
        Int n = u / 2;
        return assign(n) == side ? Int(n + 1) : Int(0);
      }
      std::uint64_t h = detail::mix(nseed, pos);
      if (h % 2 == 0) return 0;
      Int n((h >> 1) % 64);
      return assign(n) == side ? Int(n + 1) : Int(0);
    });
    return Instance{nm, make_truth(std::move(t))};
  };
  p.validate_input = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<SepTruth>(tr);
    for (Nat i = 0; i < len; ++i) {
      Int v = tok(i);
      if (v < 0) return false;
      auto e = enum_decode(v);
      if (!e) continue;
      int side = static_cast<int>(i % 2);
      if (t->assign(*e) != side) return false;
    }
    return true;
  };
  p.in_domain = [one](const Truth& tr) {
    return !one || truth_of<SepTruth>(tr)->unassigned.size() <= 1;
  };
  p.oracle = [](const Truth& tr, std::uint64_t seed) {
    auto t = truth_of<SepTruth>(tr);
    return Name([t, seed](const Int& pos) -> Int {
      int a = t->assign(pos);
      if (a == 0) return 1;
      if (a == 1) return 0;
      return Int(detail::mix(seed, pos) % 2);
    });
  };
  p.validate_output = [](const Truth&, const TokFn& tok, Nat len) {
    for (Nat i = 0; i < len; ++i)
      if (!detail::is_bit(tok(i))) return false;
    return true;
  };
  p.check_solution = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<SepTruth>(tr);
    for (Nat i = 0; i < len; ++i) {
      Int v = tok(i);
      if (!detail::is_bit(v)) return Check::Bad;
      int a = t->assign(Int(i));
      if (a == 0 && v != 1) return Check::Bad;
      if (a == 1 && v != 0) return Check::Bad;
    }
    return Check::Ok;
  };
  return p;
}

// ----- WKL ------------------------------------------------------------------

inline Problem prob_wkl() {
  Problem p;
  p.id = "WKL";
  p.generate = [](std::uint64_t seed) {
    Rng rng(seed);
    Nat npaths = 1 + rng.below(2);
    std::vector<detail::BitStream> paths;
    paths.push_back(detail::random_stream(rng, 12, 4));
    if (npaths == 2) {
      for (int tries = 0; tries < 8; ++tries) {
        auto cand = detail::random_stream(rng, 12, 4);
        bool same = true;
        for (Nat n = 0; n < 24 && same; ++n) same = cand.at(n) == paths[0].at(n);
        if (!same) {
          paths.push_back(cand);
          break;
        }
      }
    }
    // dead stubs: branch off a live path and wander for a few levels
    std::vector<std::vector<int>> tips;
    std::set<Int> stub;
    Nat nstubs = rng.below(9);
    for (Nat s = 0; s < nstubs; ++s) {
      const auto& base = paths[rng.below(paths.size())];
      Nat at = rng.below(11);
      std::vector<int> w;
      for (Nat n = 0; n < at; ++n) w.push_back(base.at(n));
      w.push_back(1 - base.at(at));
      Nat extra = rng.below(12 - std::min<Nat>(at, 11));
      for (Nat e = 0; e < extra; ++e) w.push_back(static_cast<int>(rng.below(2)));
      tips.push_back(w);
      std::vector<int> pref;
      for (int b : w) {
        pref.push_back(b);
        stub.insert(word_code(pref));
      }
    }
    auto live = [paths](const std::vector<int>& w) {
      for (const auto& ps : paths)
        if (ps.agrees(w)) return true;
      return false;
    };
    WklTruth t;
    t.in_tree = [live, stub](const std::vector<int>& w) {
      if (w.empty()) return true;
      for (int b : w)
        if (b != 0 && b != 1) return false;
      return live(w) || stub.count(word_code(w)) > 0;
    };
    t.extendable = live;
    t.ext = [live, tips](const std::vector<int>& w, Nat n) {
      if (live(w)) return true;
      Nat best = 0;
      for (const auto& tip : tips) {
        if (tip.size() < w.size()) continue;
        bool pref = true;
        for (Nat i = 0; i < w.size() && pref; ++i) pref = tip[i] == w[i];
        if (pref) best = std::max<Nat>(best, tip.size());
      }
      return w.size() <= n ? n <= best : false;
    };
    // canonical path: lexicographically least live path
    Nat which = 0;
    if (paths.size() == 2) {
      for (Nat n = 0; n < 64; ++n) {
        if (paths[0].at(n) != paths[1].at(n)) {
          which = paths[0].at(n) < paths[1].at(n) ? 0 : 1;
          break;
        }
      }
    }
    auto canon = paths[which];
    t.path = [canon](Nat n) { return canon.at(n); };
    auto in_tree = t.in_tree;
    Name nm([in_tree](const Int& pos) -> Int {
      return in_tree(word_decode(pos)) ? 1 : 0;
    });
    return Instance{nm, make_truth(std::move(t))};
  };
  p.validate_input = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<WklTruth>(tr);
    for (Nat i = 0; i < len; ++i) {
      Int v = tok(i);
      if (!detail::is_bit(v)) return false;
      if ((v == 1) != t->in_tree(word_decode(Int(i)))) return false;
    }
    return true;
  };
  p.in_domain = [](const Truth& tr) { return truth_of<WklTruth>(tr)->infinite; };
  p.oracle = [](const Truth& tr, std::uint64_t) {
    auto t = truth_of<WklTruth>(tr);
    return Name([t](const Int& pos) { return Int(t->path(pos.convert_to<Nat>())); });
  };
  p.validate_output = [](const Truth&, const TokFn& tok, Nat len) {
    for (Nat i = 0; i < len; ++i)
      if (!detail::is_bit(tok(i))) return false;
    return true;
  };
  p.check_solution = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<WklTruth>(tr);
    std::vector<int> w;
    for (Nat i = 0; i < len; ++i) {
      Int v = tok(i);
      if (!detail::is_bit(v)) return Check::Bad;
      w.push_back(v == 1 ? 1 : 0);
      if (!t->in_tree(w)) return Check::Bad;
    }
    return t->extendable(w) ? Check::Ok : Check::Bad;
  };
  return p;
}

// ----- closed choice on Cantor space ----------------------------------------

inline Problem prob_cantor_choice(bool le2) {
  Problem p;
  p.id = le2 ? "C#le2" : "C_2N";
  p.generate = [le2](std::uint64_t seed) {
    Rng rng(seed);
    Nat npaths = 1 + rng.below(le2 ? 2 : 3);
    std::vector<detail::BitStream> paths;
    paths.push_back(detail::random_stream(rng, 10, 4));
    while (paths.size() < npaths) {
      auto cand = detail::random_stream(rng, 10, 4);
      bool fresh = true;
      for (const auto& q : paths) {
        bool same = true;
        for (Nat n = 0; n < 24 && same; ++n) same = cand.at(n) == q.at(n);
        if (same) fresh = false;
      }
      if (fresh)
        paths.push_back(cand);
      else
        break;
    }
    auto survivor_prefix = [paths](const std::vector<int>& w) {
      for (const auto& ps : paths)
        if (ps.agrees(w)) return true;
      return false;
    };
    CantorTruth t;
    t.card = paths.size();
    t.consistent = [survivor_prefix](const std::vector<int>& w) {
      for (int b : w)
        if (b != 0 && b != 1) return false;
      return survivor_prefix(w);
    };
    t.path = [paths](Nat i, Nat n) { return paths[i % paths.size()].at(n); };
    // removals, levelwise: the non-surviving children of surviving words
    auto removals = std::make_shared<std::vector<Int>>();
    auto frontier = std::make_shared<std::vector<std::vector<int>>>();
    frontier->push_back({});
    auto removal_at = [removals, frontier, survivor_prefix](Nat j) {
      while (removals->size() <= j) {
        std::vector<std::vector<int>> next;
        for (const auto& u : *frontier) {
          for (int b = 0; b < 2; ++b) {
            auto w = u;
            w.push_back(b);
            if (survivor_prefix(w))
              next.push_back(w);
            else
              removals->push_back(word_code(w));
          }
        }
        *frontier = std::move(next);
      }
      return (*removals)[j];
    };
    std::uint64_t nseed = rng.next();
    Name nm([removal_at, nseed](const Int& pos) -> Int {
      if (pos % 2 == 0) return removal_at((pos / 2).convert_to<Nat>()) + 1;
      std::uint64_t h = detail::mix(nseed, pos);
      if (h % 3 == 0) return 0;
      return removal_at(h % 40) + 1;
    });
    return Instance{nm, make_truth(std::move(t))};
  };
  p.validate_input = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<CantorTruth>(tr);
    return detail::scan_enum(tok, len, [t](const Int& c) {
      return !t->consistent(word_decode(c));
    });
  };
  p.in_domain = [le2](const Truth& tr) {
    auto t = truth_of<CantorTruth>(tr);
    return t->card >= 1 && (!le2 || t->card <= 2);
  };
  p.oracle = [](const Truth& tr, std::uint64_t seed) {
    auto t = truth_of<CantorTruth>(tr);
    Nat i = seed % t->card;
    return Name([t, i](const Int& pos) {
      return Int(t->path(i, pos.convert_to<Nat>()));
    });
  };
  p.validate_output = [](const Truth&, const TokFn& tok, Nat len) {
    for (Nat i = 0; i < len; ++i)
      if (!detail::is_bit(tok(i))) return false;
    return true;
  };
  p.check_solution = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<CantorTruth>(tr);
    std::vector<int> w;
    for (Nat i = 0; i < len; ++i) {
      Int v = tok(i);
      if (!detail::is_bit(v)) return Check::Bad;
      w.push_back(v == 1 ? 1 : 0);
    }
    return t->consistent(w) ? Check::Ok : Check::Bad;
  };
  return p;
}

// ----- choice over a finite space or N --------------------------------------

inline Problem prob_choice_core(std::string id, Nat space, bool acc) {
  Problem p;
  p.id = std::move(id);
  p.generate = [space, acc](std::uint64_t seed) {
    Rng rng(seed);
    ChoiceTruth t;
    t.space = space;
    if (space > 0) {
      std::vector<Int> removed;
      if (acc) {
        if (rng.coin()) removed.push_back(Int(rng.below(space)));
      } else {
        Nat mask = 1 + rng.below((Nat(1) << space) - 1);  // nonempty survivors
        for (Nat v = 0; v < space; ++v)
          if (!((mask >> v) & 1)) removed.push_back(Int(v));
      }
      std::set<Int> rset(removed.begin(), removed.end());
      t.alive = [rset, space](const Int& v) {
        return v >= 0 && v < Int(space) && !rset.count(v);
      };
      for (Nat v = 0; v < space; ++v)
        if (t.alive(Int(v))) t.alive_sample.push_back(Int(v));
      t.removed_count = removed.size();
      std::uint64_t nseed = rng.next();
      Name nm([removed, nseed](const Int& pos) -> Int {
        if (removed.empty()) return 0;
        Int u = pos / 2;
        if (pos % 2 == 0)
          return u < Int(removed.size()) ? removed[u.convert_to<Nat>()] + 1 : Int(0);
        std::uint64_t h = detail::mix(nseed, pos);
        if (h % 2 == 0) return 0;
        return removed[h % removed.size()] + 1;
      });
      return Instance{nm, make_truth(std::move(t))};
    }
    // space == 0: choice on N
    if (acc) {
      std::optional<Int> removed;
      if (rng.coin()) removed = Int(rng.below(41));
      t.alive = [removed](const Int& v) { return v >= 0 && (!removed || v != *removed); };
      for (Int v = 0; Int(t.alive_sample.size()) < 3; ++v)
        if (t.alive(v)) t.alive_sample.push_back(v);
      t.removed_count = removed ? 1 : 0;
      std::uint64_t nseed = rng.next();
      Name nm([removed, nseed](const Int& pos) -> Int {
        if (!removed) return 0;
        return detail::mix(nseed, pos) % 3 == 0 ? *removed + 1 : Int(0);
      });
      return Instance{nm, make_truth(std::move(t))};
    }
    std::set<Int> sset;
    Nat scount = 1 + rng.below(3);
    while (sset.size() < scount) sset.insert(Int(rng.below(31)));
    t.alive = [sset](const Int& v) { return sset.count(v) > 0; };
    t.alive_sample.assign(sset.begin(), sset.end());
    std::uint64_t nseed = rng.next();
    Name nm([sset, nseed](const Int& pos) -> Int {
      if (pos % 2 == 0) {
        Int n = pos / 2;
        return sset.count(n) ? Int(0) : Int(n + 1);
      }
      std::uint64_t h = detail::mix(nseed, pos);
      Int n(h % 64);
      return sset.count(n) ? Int(0) : Int(n + 1);
    });
    return Instance{nm, make_truth(std::move(t))};
  };
  p.validate_input = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<ChoiceTruth>(tr);
    return detail::scan_enum(tok, len, [t](const Int& v) {
      if (t->space > 0 && v >= Int(t->space)) return false;
      return !t->alive(v);
    });
  };
  p.in_domain = [acc](const Truth& tr) {
    auto t = truth_of<ChoiceTruth>(tr);
    if (t->alive_sample.empty()) return false;
    if (acc && (!t->removed_count || *t->removed_count > 1)) return false;
    return true;
  };
  p.oracle = [](const Truth& tr, std::uint64_t seed) {
    auto t = truth_of<ChoiceTruth>(tr);
    Int v = t->alive_sample[seed % t->alive_sample.size()];
    return name_const(v);
  };
  p.validate_output = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<ChoiceTruth>(tr);
    if (!detail::constant_answer_ok(tok, len)) return false;
    if (len > 0 && t->space > 0 && tok(0) >= Int(t->space)) return false;
    return true;
  };
  p.check_solution = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<ChoiceTruth>(tr);
    if (len == 0) return Check::Ok;
    if (!detail::constant_answer_ok(tok, len)) return Check::Bad;
    return t->alive(tok(0)) ? Check::Ok : Check::Bad;
  };
  return p;
}

inline Problem prob_cn(Nat k) { return prob_choice_core("Cn:" + std::to_string(k), k, false); }
inline Problem prob_cnat() { return prob_choice_core("CN", 0, false); }
inline Problem prob_acc(Nat k) { return prob_choice_core("ACCn:" + std::to_string(k), k, true); }
inline Problem prob_accnat() { return prob_choice_core("ACCN", 0, true); }

// ----- LPO / LLPO / MLPO ----------------------------------------------------

enum class OmniKind { Lpo, Llpo, Mlpo };

inline Problem prob_omni(OmniKind kind, Nat arity) {
  Problem p;
  switch (kind) {
    case OmniKind::Lpo: p.id = "LPOn:" + std::to_string(arity); break;
    case OmniKind::Llpo: p.id = "LLPOn:" + std::to_string(arity); break;
    case OmniKind::Mlpo: p.id = "MLPOn:" + std::to_string(arity); break;
  }
  p.generate = [kind, arity](std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::optional<Nat>> fnz(arity);
    auto draw = [&rng]() -> Nat {
      return rng.chance(1, 8) ? rng.below(1000) : rng.below(30);
    };
    switch (kind) {
      case OmniKind::Lpo:
        for (Nat i = 0; i < arity; ++i)
          if (rng.coin()) fnz[i] = draw();
        break;
      case OmniKind::Llpo: {
        Nat pick = rng.below(arity + 1);
        if (pick < arity) fnz[pick] = draw();
        break;
      }
      case OmniKind::Mlpo: {
        for (Nat i = 0; i < arity; ++i)
          if (rng.coin()) fnz[i] = draw();
        fnz[rng.below(arity)] = std::nullopt;
        break;
      }
    }
    std::uint64_t vseed = rng.next();
    OmniTruth t;
    t.arity = arity;
    t.first_nz = fnz;
    t.seq = [fnz, vseed](Nat i, Nat j) -> Int {
      if (!fnz[i]) return 0;
      Nat f = *fnz[i];
      if (j < f) return 0;
      std::uint64_t h = detail::mix(vseed, pos_tuple(fnz.size(), i, Int(j)));
      if (j == f) return Int(1 + h % 3);
      return Int(h % 4);
    };
    auto seq = t.seq;
    Name nm([seq, arity](const Int& pos) -> Int {
      Nat i = (pos % arity).convert_to<Nat>();
      Nat j = (pos / arity).convert_to<Nat>();
      return seq(i, j);
    });
    return Instance{nm, make_truth(std::move(t))};
  };
  p.validate_input = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<OmniTruth>(tr);
    for (Nat i = 0; i < len; ++i) {
      if (tok(i) != t->seq(i % t->arity, i / t->arity)) return false;
    }
    return true;
  };
  p.in_domain = [kind](const Truth& tr) {
    auto t = truth_of<OmniTruth>(tr);
    Nat nz = 0, z = 0;
    for (const auto& f : t->first_nz) f ? ++nz : ++z;
    if (kind == OmniKind::Llpo) return nz <= 1;
    if (kind == OmniKind::Mlpo) return z >= 1;
    return true;
  };
  p.oracle = [kind](const Truth& tr, std::uint64_t seed) {
    auto t = truth_of<OmniTruth>(tr);
    if (kind == OmniKind::Lpo) {
      return Name([t](const Int& pos) -> Int {
        if (pos >= Int(t->arity)) return 0;
        return t->first_nz[pos.convert_to<Nat>()] ? 1 : 0;
      });
    }
    // pick a valid all-zero index, seed breaks ties
    std::vector<Nat> zs;
    for (Nat i = 0; i < t->arity; ++i)
      if (!t->first_nz[i]) zs.push_back(i);
    Nat ans = zs.empty() ? 0 : zs[seed % zs.size()];
    return name_const(Int(ans));
  };
  p.validate_output = [kind](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<OmniTruth>(tr);
    if (kind == OmniKind::Lpo) {
      for (Nat i = 0; i < len && i < t->arity; ++i)
        if (!detail::is_bit(tok(i))) return false;
      return true;
    }
    if (!detail::constant_answer_ok(tok, len)) return false;
    return len == 0 || tok(0) < Int(t->arity);
  };
  p.check_solution = [kind](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<OmniTruth>(tr);
    if (kind == OmniKind::Lpo) {
      for (Nat i = 0; i < len && i < t->arity; ++i) {
        Int v = tok(i);
        if (!detail::is_bit(v)) return Check::Bad;
        if ((v == 1) != t->first_nz[i].has_value()) return Check::Bad;
      }
      return Check::Ok;
    }
    if (len == 0) return Check::Ok;
    if (!detail::constant_answer_ok(tok, len)) return Check::Bad;
    Int v = tok(0);
    if (v < 0 || v >= Int(t->arity)) return Check::Bad;
    return t->first_nz[v.convert_to<Nat>()] ? Check::Bad : Check::Ok;
  };
  return p;
}

inline Problem prob_lpo(Nat k) { return prob_omni(OmniKind::Lpo, k); }
inline Problem prob_llpo(Nat k) { return prob_omni(OmniKind::Llpo, k); }
inline Problem prob_mlpo(Nat k) { return prob_omni(OmniKind::Mlpo, k); }

// ----- LIM ------------------------------------------------------------------

inline Problem prob_lim() {
  Problem p;
  p.id = "LIM";
  p.generate = [](std::uint64_t seed) {
    Rng rng(seed);
    std::uint64_t lseed = rng.next(), sseed = rng.next(), pseed = rng.next();
    LimTruth t;
    t.limit = [lseed](Nat n) -> Int { return Int(detail::mix(lseed, Int(n)) % 19) - 9; };
    t.stab = [sseed](Nat n) -> Nat {
      std::uint64_t h = detail::mix(sseed, Int(n));
      return h % 4 == 0 ? (h >> 2) % 40 : (h >> 2) % 6;
    };
    auto limit = t.limit;
    auto stab = t.stab;
    t.value = [limit, stab, pseed](Nat k, Nat n) -> Int {
      if (k >= stab(n)) return limit(n);
      return limit(n) + 1 + Int(detail::mix(pseed, pos_omega(Int(k), Int(n))) % 3);
    };
    auto value = t.value;
    Name nm([value](const Int& pos) -> Int {
      auto [k, n] = unpair_code(pos);
      return value(k.convert_to<Nat>(), n.convert_to<Nat>());
    });
    return Instance{nm, make_truth(std::move(t))};
  };
  p.validate_input = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<LimTruth>(tr);
    for (Nat i = 0; i < len; ++i) {
      auto [k, n] = unpair_code(Int(i));
      if (tok(i) != t->value(k.convert_to<Nat>(), n.convert_to<Nat>())) return false;
    }
    return true;
  };
  p.in_domain = [](const Truth&) { return true; };
  p.oracle = [](const Truth& tr, std::uint64_t) {
    auto t = truth_of<LimTruth>(tr);
    return Name([t](const Int& pos) { return t->limit(pos.convert_to<Nat>()); });
  };
  p.validate_output = [](const Truth&, const TokFn&, Nat) { return true; };
  p.check_solution = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<LimTruth>(tr);
    for (Nat i = 0; i < len; ++i)
      if (tok(i) != t->limit(i)) return Check::Bad;
    return Check::Ok;
  };
  return p;
}

// ----- SORT -----------------------------------------------------------------

inline Problem prob_sort() {
  Problem p;
  p.id = "SORT";
  p.generate = [](std::uint64_t seed) {
    Rng rng(seed);
    SortTruth t;
    std::function<int(Nat)> bit;
    if (rng.chance(2, 3)) {
      Nat z = rng.below(41);
      std::set<Nat> zpos;
      Nat range = 3 * z + 8;
      std::uint64_t zseed = rng.next();
      for (Nat c = 0; zpos.size() < z; ++c) zpos.insert(detail::mix(zseed, Int(c)) % range);
      t.zeros = z;
      bit = [zpos](Nat n) { return zpos.count(n) ? 0 : 1; };
    } else {
      t.zeros = std::nullopt;
      if (rng.coin()) {
        Nat g = 2 + rng.below(5);
        bit = [g](Nat n) { return n % g == 0 ? 0 : 1; };
      } else {
        bit = [](Nat n) {
          // zeros on the triangular grid, density -> 0
          Nat r = static_cast<Nat>(std::sqrt(2.0 * static_cast<double>(n))) + 2;
          while (r * (r + 1) / 2 > n) --r;
          return r * (r + 1) / 2 == n ? 0 : 1;
        };
      }
    }
    Name nm([bit](const Int& pos) { return Int(bit(pos.convert_to<Nat>())); });
    return Instance{nm, make_truth(std::move(t))};
  };
  p.validate_input = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<SortTruth>(tr);
    Nat zs = 0;
    for (Nat i = 0; i < len; ++i) {
      Int v = tok(i);
      if (!detail::is_bit(v)) return false;
      if (v == 0) ++zs;
    }
    return !t->zeros || zs <= *t->zeros;
  };
  p.in_domain = [](const Truth&) { return true; };
  p.oracle = [](const Truth& tr, std::uint64_t) {
    auto t = truth_of<SortTruth>(tr);
    return Name([t](const Int& pos) -> Int {
      if (!t->zeros) return 0;
      return pos < Int(*t->zeros) ? 0 : 1;
    });
  };
  p.validate_output = [](const Truth&, const TokFn& tok, Nat len) {
    bool seen_one = false;
    for (Nat i = 0; i < len; ++i) {
      Int v = tok(i);
      if (!detail::is_bit(v)) return false;
      if (v == 0 && seen_one) return false;
      if (v == 1) seen_one = true;
    }
    return true;
  };
  p.check_solution = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<SortTruth>(tr);
    for (Nat i = 0; i < len; ++i) {
      Int v = tok(i);
      if (!detail::is_bit(v)) return Check::Bad;
      Int want = !t->zeros ? Int(0) : (i < *t->zeros ? Int(0) : Int(1));
      if (v != want) return Check::Bad;
    }
    return Check::Ok;
  };
  return p;
}

// ----- RAT ------------------------------------------------------------------
// Input: a rho-name of a real x.  Answer: 0^m 1^inf when x equals the
// rational with code m in the standard enumeration, all zeros when x is
// irrational.

inline Real pool_real(Rng& rng) {
  if (rng.chance(1, 3)) {
    Int a = Int(rng.below(41)) - 20;
    Int c = Int(rng.below(40)) - 20;
    if (c >= 0) c += 1;
    Int b;
    do {
      b = Int(2 + rng.below(98));
    } while (is_perfect_square(b));
    return Real::quadratic(a, b, c);
  }
  Int den = Int(1 + rng.below(50));
  Int num = Int(rng.below(400)) - 200;
  return Real::rational(mkrat(num, den));
}

inline Problem prob_rat() {
  Problem p;
  p.id = "RAT";
  p.generate = [](std::uint64_t seed) {
    Rng rng(seed);
    Real x = pool_real(rng);
    RatTruth t{RealDesc::from_exact(x),
               x.is_rational() ? std::optional<Rat>(x.rat()) : std::nullopt};
    Name nm = synthesize(RepId::Rho, x, rng.next());
    return Instance{nm, make_truth(std::move(t))};
  };
  p.validate_input = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<RatTruth>(tr);
    return validate_prefix(RepId::Rho, t->desc, tok, len);
  };
  p.in_domain = [](const Truth&) { return true; };
  p.oracle = [](const Truth& tr, std::uint64_t) {
    auto t = truth_of<RatTruth>(tr);
    if (!t->value) return name_const(Int(0));
    Int m = least_code_of(*t->value);
    return Name([m](const Int& pos) { return Int(pos < m ? 0 : 1); });
  };
  p.validate_output = [](const Truth&, const TokFn& tok, Nat len) {
    bool seen_one = false;
    for (Nat i = 0; i < len; ++i) {
      Int v = tok(i);
      if (!detail::is_bit(v)) return false;
      if (v == 0 && seen_one) return false;
      if (v == 1) seen_one = true;
    }
    return true;
  };
  p.check_solution = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<RatTruth>(tr);
    std::optional<Nat> first_one;
    for (Nat i = 0; i < len; ++i) {
      Int v = tok(i);
      if (!detail::is_bit(v)) return Check::Bad;
      if (v == 0 && first_one) return Check::Bad;
      if (v == 1 && !first_one) first_one = i;
    }
    if (first_one) {
      if (!t->value) return Check::Bad;
      return *t->value == q_at(Int(*first_one)) ? Check::Ok : Check::Bad;
    }
    return t->value ? Check::Undecided : Check::Ok;
  };
  return p;
}

// ----- representation conversion --------------------------------------------

inline bool rep_struct_ok(RepId rep, const TokFn& tok, Nat len) {
  for (Nat i = 0; i < len; ++i) {
    Int v = tok(i);
    switch (rep) {
      case RepId::Rho10:
        if (i > 0 && (v < 0 || v > 9)) return false;
        if (i == 0 && v < 0) return false;
        break;
      case RepId::RhoCfL:
      case RepId::RhoCfR:
        if (!detail::is_bit(v)) return false;
        break;
      default:
        if (v < 0) return false;
    }
  }
  return true;
}

inline Problem prob_impl(RepId from, RepId to) {
  Problem p;
  p.id = std::string("IMPL:") + rep_name(from) + ":" + rep_name(to);
  p.generate = [from, to](std::uint64_t seed) {
    Rng rng(seed);
    Real x = pool_real(rng);
    ImplTruth t{from, to, RealDesc::from_exact(x)};
    Name nm = synthesize(from, x, rng.next());
    return Instance{nm, make_truth(std::move(t))};
  };
  p.validate_input = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<ImplTruth>(tr);
    return validate_prefix(t->from, t->x, tok, len);
  };
  p.in_domain = [](const Truth&) { return true; };
  p.oracle = [](const Truth& tr, std::uint64_t seed) {
    auto t = truth_of<ImplTruth>(tr);
    return name_from_desc(t->to, t->x, seed);
  };
  p.validate_output = [](const Truth& tr, const TokFn& tok, Nat len) {
    return rep_struct_ok(truth_of<ImplTruth>(tr)->to, tok, len);
  };
  p.check_solution = [](const Truth& tr, const TokFn& tok, Nat len) {
    auto t = truth_of<ImplTruth>(tr);
    return validate_prefix(t->to, t->x, tok, len) ? Check::Ok : Check::Bad;
  };
  return p;
}

// ----- parallelization ------------------------------------------------------

inline Problem parallelize(const Problem& base) {
  Problem p;
  p.id = "PAR:" + base.id;
  auto component_positions = [](Nat len, Nat i) -> Nat {
    // how many positions of component i fall below len in the omega coding
    Nat m = 0;
    while (pos_omega(Int(i), Int(m)) < Int(len)) ++m;
    return m;
  };
  p.generate = [base](std::uint64_t seed) {
    auto cache = std::make_shared<std::map<Nat, Instance>>();
    auto comp_inst = [base, seed, cache](Nat i) {
      auto it = cache->find(i);
      if (it != cache->end()) return it->second;
      Instance inst = base.generate(detail::submix(seed, i));
      return cache->emplace(i, inst).first->second;
    };
    ParTruth t;
    t.component = [comp_inst](Nat i) { return comp_inst(i).truth; };
    Name nm = name_omega_tuple([comp_inst](Nat i) { return comp_inst(i).name; });
    return Instance{nm, make_truth(std::move(t))};
  };
  p.validate_input = [base, component_positions](const Truth& tr, const TokFn& tok,
                                                 Nat len) {
    auto t = truth_of<ParTruth>(tr);
    for (Nat i = 0; pos_omega(Int(i), 0) < Int(len); ++i) {
      Nat m = component_positions(len, i);
      TokFn sub = [tok, i](Nat j) {
        return tok(pos_omega(Int(i), Int(j)).convert_to<Nat>());
      };
      if (!base.validate_input(t->component(i), sub, m)) return false;
    }
    return true;
  };
  p.in_domain = [base](const Truth& tr) {
    auto t = truth_of<ParTruth>(tr);
    for (Nat i = 0; i < 8; ++i)
      if (!base.in_domain(t->component(i))) return false;
    return true;
  };
  p.oracle = [base](const Truth& tr, std::uint64_t seed) {
    auto t = truth_of<ParTruth>(tr);
    return name_omega_tuple([base, t, seed](Nat i) {
      return base.oracle(t->component(i), detail::submix(seed, i));
    });
  };
  p.validate_output = [base, component_positions](const Truth& tr, const TokFn& tok,
                                                  Nat len) {
    auto t = truth_of<ParTruth>(tr);
    for (Nat i = 0; pos_omega(Int(i), 0) < Int(len); ++i) {
      Nat m = component_positions(len, i);
      TokFn sub = [tok, i](Nat j) {
        return tok(pos_omega(Int(i), Int(j)).convert_to<Nat>());
      };
      if (!base.validate_output(t->component(i), sub, m)) return false;
    }
    return true;
  };
  p.check_solution = [base, component_positions](const Truth& tr, const TokFn& tok,
                                                 Nat len) {
    auto t = truth_of<ParTruth>(tr);
    Check agg = Check::Ok;
    for (Nat i = 0; pos_omega(Int(i), 0) < Int(len); ++i) {
      Nat m = component_positions(len, i);
      TokFn sub = [tok, i](Nat j) {
        return tok(pos_omega(Int(i), Int(j)).convert_to<Nat>());
      };
      Check c = base.check_solution(t->component(i), sub, m);
      if (c == Check::Bad) return Check::Bad;
      if (c == Check::Undecided) agg = Check::Undecided;
    }
    return agg;
  };
  return p;
}

// ----- registry -------------------------------------------------------------

inline std::optional<Problem> problem_by_id(const std::string& id) {
  auto suffix_num = [](const std::string& s, const std::string& pre) -> std::optional<Nat> {
    if (s.rfind(pre, 0) != 0) return std::nullopt;
    std::string tail = s.substr(pre.size());
    if (tail.empty() || tail.size() > 2) return std::nullopt;
    for (char c : tail)
      if (!isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return static_cast<Nat>(std::stoul(tail));
  };
  if (id == "EC") return prob_ec();
  if (id == "EC1") return prob_ec1();
  if (id == "SEP") return prob_sep(false);
  if (id == "SEP1") return prob_sep(true);
  if (id == "WKL") return prob_wkl();
  if (id == "C_2N") return prob_cantor_choice(false);
  if (id == "C#le2") return prob_cantor_choice(true);
  if (id == "CN") return prob_cnat();
  if (id == "ACCN") return prob_accnat();
  if (id == "LIM") return prob_lim();
  if (id == "SORT") return prob_sort();
  if (id == "RAT") return prob_rat();
  if (auto k = suffix_num(id, "Cn:")) return *k >= 2 && *k <= 12 ? std::optional(prob_cn(*k)) : std::nullopt;
  if (auto k = suffix_num(id, "ACCn:")) return *k >= 2 && *k <= 12 ? std::optional(prob_acc(*k)) : std::nullopt;
  if (auto k = suffix_num(id, "LPOn:")) return *k >= 1 && *k <= 12 ? std::optional(prob_lpo(*k)) : std::nullopt;
  if (auto k = suffix_num(id, "LLPOn:")) return *k >= 2 && *k <= 12 ? std::optional(prob_llpo(*k)) : std::nullopt;
  if (auto k = suffix_num(id, "MLPOn:")) return *k >= 2 && *k <= 12 ? std::optional(prob_mlpo(*k)) : std::nullopt;
  if (id.rfind("IMPL:", 0) == 0) {
    auto rest = id.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string::npos) return std::nullopt;
    auto from = rep_parse(rest.substr(0, colon));
    auto to = rep_parse(rest.substr(colon + 1));
    if (!from || !to) return std::nullopt;
    return prob_impl(*from, *to);
  }
  if (id.rfind("PAR:", 0) == 0) {
    auto inner = problem_by_id(id.substr(4));
    if (!inner) return std::nullopt;
    return parallelize(*inner);
  }
  return std::nullopt;
}

inline std::vector<std::string> zoo_ids() {
  return {"EC",      "EC1",     "SEP",     "SEP1",    "WKL",     "C_2N",
          "C#le2",   "Cn:2",    "Cn:3",    "CN",      "ACCn:2",  "ACCn:4",
          "ACCN",    "LPOn:1",  "LPOn:2",  "LPOn:3",  "LLPOn:2", "LLPOn:3",
          "LLPOn:4", "MLPOn:2", "MLPOn:3", "LIM",     "SORT",    "RAT",
          "IMPL:rho:rho_10",    "IMPL:rho_prime:rho", "IMPL:rho_lt:rho",
          "IMPL:rho_cf:rho",    "IMPL:rho_cf_lt:rho_cf_gt",
          "PAR:LPOn:1",         "PAR:LLPOn:2"};
}

// Spot check that every instance of `sub` is also a legal instance of
// `super` with compatible answers (the two must share a truth layout).
inline bool refines_spot(const Problem& sub, const Problem& super, Nat seeds,
                         Nat depth) {
  for (Nat s = 0; s < seeds; ++s) {
    Instance inst = sub.generate(1000 + s);
    if (!super.in_domain(inst.truth)) return false;
    TokFn toks = [inst](Nat i) { return inst.name.at(Int(i)); };
    if (!super.validate_input(inst.truth, toks, depth)) return false;
    Name ans = sub.oracle(inst.truth, 77 + s);
    TokFn atoks = [ans](Nat i) { return ans.at(Int(i)); };
    if (super.check_solution(inst.truth, atoks, depth) == Check::Bad) return false;
  }
  return true;
}

// ----- abstract multifunctions ----------------------------------------------
// Five-point multifunctions used to pin down the composition domain rule:
// g after f is defined at x iff x is in dom(f) and every value of f(x)
// lies in dom(g).  Patterns: 0 = undefined, 1 = {x}, 2 = {x, (x+2) mod 5}.

struct AbstractMulti {
  std::array<int, 5> pat{};
  unsigned values(int x) const {
    switch (pat[x]) {
      case 1: return 1u << x;
      case 2: return (1u << x) | (1u << ((x + 2) % 5));
      default: return 0;
    }
  }
};

inline AbstractMulti abstract_from_index(int idx) {
  AbstractMulti m;
  for (int i = 0; i < 5; ++i) {
    m.pat[i] = idx % 3;
    idx /= 3;
  }
  return m;
}

// value masks of the composition; 0 marks "outside the domain"
inline std::array<unsigned, 5> abstract_compose(const AbstractMulti& g,
                                                const AbstractMulti& f) {
  std::array<unsigned, 5> out{};
  for (int x = 0; x < 5; ++x) {
    unsigned fy = f.values(x);
    if (fy == 0) continue;
    unsigned u = 0;
    bool ok = true;
    for (int y = 0; y < 5 && ok; ++y) {
      if (!(fy >> y & 1)) continue;
      unsigned gv = g.values(y);
      if (gv == 0)
        ok = false;
      else
        u |= gv;
    }
    out[x] = ok ? u : 0;
  }
  return out;
}

}  // namespace wlab
