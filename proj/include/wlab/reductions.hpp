// Catalog of directed reductions between the zoo problems.  Each entry is a
// playable strategy: a forward transducer K that rewrites f-inputs into
// g-inputs, a backward transducer H that rewrites g-answers into f-answers,
// and a witness map that produces the ground truth of the transformed
// instance so the harness can audit every move of the game.
#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "problems.hpp"

namespace wlab {

// A registered reduction f <= g.  Under the strong discipline H reads the
// bare g-answer; otherwise it reads the pair <f-input, g-answer>.  k_sem
// maps an f-instance to the ground truth of K's output, which is what the
// harness validates K against and feeds to g's answer oracle.
struct Reduction {
  std::string id;
  std::string f_id;
  std::string g_id;
  bool strong = false;
  std::string anchor;
  Machine K;
  Machine H;
  std::function<Truth(const Instance&)> k_sem;
};

namespace detail {

// ----- shared machinery ------------------------------------------------------

// Does some word of length `target` extend w inside the tree whose
// characteristic bits are read through `in`?  Assumes a downward closed
// tree, so the search can prune at the first missing prefix.
inline bool ext_dfs(Reader& in, Fuel& fuel, std::vector<int>& w, Nat target) {
  fuel.burn();
  if (in(word_code(w)) != 1) return false;
  if (w.size() >= target) return w.size() == target;
  for (int b = 0; b < 2; ++b) {
    w.push_back(b);
    bool ok = ext_dfs(in, fuel, w, target);
    w.pop_back();
    if (ok) return true;
  }
  return false;
}

// Answer transducer for sources whose answers are paths but whose oracles
// arrive as separator bit streams indexed by word code: walk down the tree,
// reading the committed bit of each visited prefix.
inline Machine walk_bits_machine(const std::string& label) {
  return make_cellwise_machine(
      label, [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        Nat depth = pos.convert_to<Nat>();
        std::vector<int> w;
        for (Nat d = 0; d <= depth; ++d) {
          fuel.burn();
          w.push_back(in(word_code(w)) == 1 ? 1 : 0);
        }
        return Int(w[depth]);
      });
}

// ----- falsification staircase ----------------------------------------------

// Folds rho tokens into a shrinking closed interval and keeps the simplest
// rational of the hull as the live candidate.  The candidate's enumeration
// code is withheld while it survives; a falsified candidate's code joins
// the backlog and is spoken later.  Once the candidate settles on the true
// value its code is withheld forever, so exactly one code is never spoken.
struct RatStair {
  bool started = false;
  Rat lo = 0;
  Rat hi = 0;
  long long stage = 0;
  std::optional<Rat> cand;
  Int withheld{-1};
  std::deque<Int> backlog;
  Int cursor{0};

  void feed(const Int& tok) {
    Rat q = q_at(tok < 0 ? Int(0) : tok);
    Rat slack = pow2(-stage);
    Rat a = q - slack;
    Rat b = q + slack;
    if (!started) {
      lo = a;
      hi = b;
      started = true;
    } else {
      lo = std::max(lo, a);
      hi = std::min(hi, b);
      if (lo > hi) hi = lo;
    }
    ++stage;
    Rat c = simplest_closed(lo, hi);
    if (!cand || *cand != c) {
      // Only re-speak a code the cursor has already skipped; anything still
      // ahead of the cursor gets spoken by the ordinary sweep.
      if (withheld >= 0 && withheld < cursor) backlog.push_back(withheld);
      cand = c;
      withheld = code_of_at_least(c, cursor);
    }
  }

  Int next_token() {
    if (!backlog.empty()) {
      Int e = backlog.front();
      backlog.pop_front();
      return e + 1;
    }
    while (cursor == withheld) ++cursor;
    Int e = cursor;
    ++cursor;
    return e + 1;
  }
};

struct RatStairK : SeqState {
  RatStair st;
  long long t = 0;
  void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
    fuel.burn();
    st.feed(in(Int(t++)));
    out.push_back(st.next_token());
  }
};

// Replays the staircase against the known value; the withheld code at the
// moment the candidate first equals the value is the one missing element.
inline Truth rat_stair_truth(const Name& nm, const std::optional<Rat>& value) {
  EcTruth t;
  t.co_small = true;
  if (!value) {
    t.member = [](const Int&) { return true; };
    return make_truth(std::move(t));
  }
  RatStair st;
  Rat v = *value;
  for (long long i = 0;; ++i) {
    if (i > 4096) throw std::runtime_error("staircase did not stabilise");
    st.feed(nm.at(Int(i)));
    if (st.cand && *st.cand == v) break;
    st.next_token();
  }
  Int m = st.withheld;
  t.missing = m;
  t.member = [m](const Int& n) { return n >= 0 && n != m; };
  return make_truth(std::move(t));
}

// ----- dead-subtree bookkeeping ----------------------------------------------

// Incremental covering structure over removal words: a node is dead when a
// removal prefixes it or both of its children are dead.  Queries and
// inserts cost one tree walk each.
struct DeadTrie {
  struct Node {
    int child[2] = {-1, -1};
    bool dead = false;
  };
  std::vector<Node> nodes{1, Node{}};

  void insert(const std::vector<int>& w, Fuel* fuel) {
    if (fuel) fuel->burn();
    std::vector<int> path{0};
    int cur = 0;
    for (int b : w) {
      if (nodes[cur].dead) return;
      if (nodes[cur].child[b] < 0) {
        nodes[cur].child[b] = static_cast<int>(nodes.size());
        nodes.push_back(Node{});
      }
      cur = nodes[cur].child[b];
      path.push_back(cur);
    }
    nodes[cur].dead = true;
    for (auto it = path.rbegin() + 1; it != path.rend(); ++it) {
      Node& n = nodes[*it];
      if (n.dead) break;
      int c0 = n.child[0], c1 = n.child[1];
      if (c0 >= 0 && nodes[c0].dead && c1 >= 0 && nodes[c1].dead)
        n.dead = true;
      else
        break;
    }
  }

  bool covered(const std::vector<int>& w, Fuel* fuel) const {
    if (fuel) fuel->burn();
    int cur = 0;
    for (int b : w) {
      if (nodes[cur].dead) return true;
      cur = nodes[cur].child[b];
      if (cur < 0) return false;
    }
    return nodes[cur].dead;
  }
};

// Replica of the covering race run by the closed-choice forward machines:
// hear one removal token per step, visit the next diagonal word, and when
// at least one child of the visited word is dead dispatch the word toward
// its surviving side (ties break toward child 0's enumeration).
struct CoverRace {
  DeadTrie trie;
  std::map<Int, int> fired;  // word code -> surviving child bit
  long long t = 0;

  void hear(const Int& tok, Fuel* fuel) {
    if (tok > 0) trie.insert(word_decode(tok - 1), fuel);
  }

  std::optional<std::pair<Int, int>> visit(Fuel* fuel) {
    auto pr = unpair_code(Int(t));
    ++t;
    auto s = word_decode(pr.second);
    Int c = word_code(s);
    if (fired.count(c)) return std::nullopt;
    std::vector<int> sc = s;
    sc.push_back(0);
    bool c0 = trie.covered(sc, fuel);
    sc.back() = 1;
    bool c1 = trie.covered(sc, fuel);
    if (!c0 && !c1) return std::nullopt;
    int dir = (c0 && c1) ? 0 : (c0 ? 1 : 0);
    fired.emplace(c, dir);
    return std::make_pair(c, dir);
  }
};

// ----- group: enumeration, sorting, staircases -------------------------------

inline Reduction red_rat_sle_ec1() {
  Reduction r;
  r.id = "rat_sle_ec1";
  r.f_id = "RAT";
  r.g_id = "EC1";
  r.strong = true;
  r.anchor = "after von Stein (1989); Weihrauch (1992), TR-92-050";
  r.K = make_seq_machine("rat<=ec1:K",
                         [] { return std::make_unique<RatStairK>(); });
  r.H = make_cellwise_machine(
      "rat<=ec1:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        for (Int m = 0; m <= pos; ++m) {
          fuel.burn();
          if (in(m) == 0) return Int(1);
        }
        return Int(0);
      });
  r.k_sem = [](const Instance& inst) {
    auto t = truth_of<RatTruth>(inst.truth);
    return rat_stair_truth(inst.name, t->value);
  };
  return r;
}

inline Reduction red_ec1_sle_sort() {
  Reduction r;
  r.id = "ec1_sle_sort";
  r.f_id = "EC1";
  r.g_id = "SORT";
  r.strong = true;
  r.anchor = "Neumann-Pauly (2018), sorting the naturals";
  struct K : SeqState {
    std::set<Int> seen;
    Int least{0};
    Int zeros{0};
    long long t = 0;
    void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
      fuel.burn();
      Int v = in(Int(t++));
      if (v > 0) {
        seen.insert(v - 1);
        while (seen.count(least) != 0) ++least;
      }
      if (zeros < least + 1) {
        out.push_back(Int(0));
        ++zeros;
      } else {
        out.push_back(Int(1));
      }
    }
  };
  r.K = make_seq_machine("ec1<=sort:K", [] { return std::make_unique<K>(); });
  r.H = make_cellwise_machine(
      "ec1<=sort:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(1);
        fuel.burn();
        if (in(pos) == 0 && in(pos + 1) == 1) return Int(0);
        return Int(1);
      });
  r.k_sem = [](const Instance& inst) {
    auto t = truth_of<EcTruth>(inst.truth);
    SortTruth st;
    if (t->missing) st.zeros = (*t->missing + 1).convert_to<Nat>();
    return make_truth(std::move(st));
  };
  return r;
}

// Dyadic staircase: every zero of the bit stream buys a strictly smaller
// power of two whose exponent encodes the running zero count, so the limit
// value of the emitted rationals reveals how many zeros there were.
struct SortStair {
  Rat c = 0;
  long long e_prev = 0;
  long long gap = 1;
  Int zc{0};

  void jump(long long floor_t, Fuel* fuel) {
    ++zc;
    Int lower(std::max(e_prev + gap + 1, floor_t + 1));
    Int cand;
    for (long long k = 0;; ++k) {
      if (fuel) fuel->burn();
      cand = pair_code(zc, Int(k));
      if (cand >= lower) break;
    }
    long long e = cand.convert_to<long long>();
    gap = e - e_prev;
    e_prev = e;
    c += pow2(-e);
  }
};

inline Reduction red_sort_le_rat() {
  Reduction r;
  r.id = "sort_le_rat";
  r.f_id = "SORT";
  r.g_id = "RAT";
  r.strong = false;
  r.anchor = "Neumann-Pauly (2018), sorting the naturals";
  struct K : SeqState {
    SortStair st;
    long long t = 0;
    void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
      fuel.burn();
      if (in(Int(t)) == 0) st.jump(t, &fuel);
      out.push_back(least_code_of(st.c));
      ++t;
    }
  };
  r.K = make_seq_machine("sort<=rat:K", [] { return std::make_unique<K>(); });
  struct H : SeqState {
    bool resolved = false;
    long long zeros_total = 0;
    long long probe_k = 0;
    long long zeros_seen = 0;
    long long emitted = 0;
    long long in_pos = 0;
    void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
      fuel.burn();
      if (!resolved) {
        Int p = ipow(2, static_cast<Nat>(probe_k)) - 1;
        if (in(pos_pair(1, p)) == 1) {
          Int lo = probe_k == 0 ? Int(0)
                                : ipow(2, static_cast<Nat>(probe_k - 1));
          Int hi = p;
          while (lo < hi) {
            fuel.burn();
            Int mid = (lo + hi) / 2;
            if (in(pos_pair(1, mid)) == 1)
              hi = mid;
            else
              lo = mid + 1;
          }
          Rat v = q_at(lo);
          Int den = denominator(v);
          long long e = den == 1 ? 0 : static_cast<long long>(msb(den));
          zeros_total =
              unpair_code(Int(e)).first.convert_to<long long>();
          resolved = true;
        } else {
          ++probe_k;
        }
      }
      if (resolved) {
        out.push_back(Int(emitted < zeros_total ? 0 : 1));
        ++emitted;
        return;
      }
      if (in(pos_pair(0, Int(in_pos++))) == 0) ++zeros_seen;
      if (emitted < zeros_seen) {
        out.push_back(Int(0));
        ++emitted;
      }
    }
  };
  r.H = make_seq_machine("sort<=rat:H", [] { return std::make_unique<H>(); });
  r.k_sem = [](const Instance& inst) {
    auto t = truth_of<SortTruth>(inst.truth);
    Name nm = inst.name;
    RatTruth rt;
    if (t->zeros) {
      SortStair st;
      long long horizon = 3 * static_cast<long long>(*t->zeros) + 16;
      for (long long i = 0; i < horizon; ++i)
        if (nm.at(Int(i)) == 0) st.jump(i, nullptr);
      rt.value = st.c;
      rt.desc = RealDesc::from_exact(Real::rational(st.c));
      return make_truth(std::move(rt));
    }
    struct Live {
      Name nm;
      SortStair st;
      long long t = 0;
      void advance() {
        if (nm.at(Int(t)) == 0) st.jump(t, nullptr);
        ++t;
      }
      Rat residual() const {
        long long lower = std::max(st.e_prev + st.gap + 1, t + 1);
        return pow2(-(lower - 1));
      }
    };
    auto live = std::make_shared<Live>(Live{nm, SortStair{}, 0});
    RealDesc d;
    d.rational = false;
    d.bracket = [live](Nat k) {
      Rat eps = pow2(-static_cast<long long>(k));
      while (live->residual() > eps) live->advance();
      return std::pair<Rat, Rat>(live->st.c, live->st.c + live->residual());
    };
    d.sign_minus = [live](const Rat& q) {
      for (;;) {
        if (q <= live->st.c) return 1;
        if (q >= live->st.c + live->residual()) return -1;
        live->advance();
      }
    };
    rt.desc = std::move(d);
    return make_truth(std::move(rt));
  };
  return r;
}

inline Reduction red_lpo_le_ec1() {
  Reduction r;
  r.id = "lpo_le_ec1";
  r.f_id = "LPOn:1";
  r.g_id = "EC1";
  r.strong = false;
  r.anchor = "Weihrauch (1992), omniscience under enumeration completion";
  struct K : SeqState {
    bool fired = false;
    Int bc{1};
    long long t = 0;
    void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
      fuel.burn();
      Int v = in(Int(t++));
      if (v != 0 && !fired) {
        fired = true;
        out.push_back(Int(1));
      } else {
        out.push_back(bc + 1);
        ++bc;
      }
    }
  };
  r.K = make_seq_machine("lpo<=ec1:K", [] { return std::make_unique<K>(); });
  r.H = make_cellwise_machine(
      "lpo<=ec1:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        fuel.burn();
        if (pos == 0) return in(pos_pair(1, Int(0))) == 1 ? Int(1) : Int(0);
        return Int(0);
      });
  r.k_sem = [](const Instance& inst) {
    auto t = truth_of<OmniTruth>(inst.truth);
    bool has = t->first_nz.at(0).has_value();
    EcTruth e;
    e.co_small = true;
    if (!has) e.missing = Int(0);
    e.member = [has](const Int& n) {
      if (n < 0) return false;
      return n != 0 || has;
    };
    return make_truth(std::move(e));
  };
  return r;
}

// ----- group: trees, separation, closed choice -------------------------------

inline Reduction red_sep1_sle_cle2() {
  Reduction r;
  r.id = "sep1_sle_cle2";
  r.f_id = "SEP1";
  r.g_id = "C#le2";
  r.strong = true;
  r.anchor = "Brattka-Gherardi (2011), boundedness and separation";
  struct K : SeqState {
    std::map<Int, int> assigns;
    std::set<Int> fired;
    long long t = 0;
    void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
      fuel.burn();
      Int tok = in(Int(t));
      if (tok > 0) {
        int side = static_cast<int>((Int(t) % 2).convert_to<int>());
        assigns.emplace(tok - 1, side);
      }
      auto pr = unpair_code(Int(t));
      auto w = word_decode(pr.second);
      Int c = word_code(w);
      bool conflict = false;
      for (Nat i = 0; i < w.size() && !conflict; ++i) {
        auto it = assigns.find(Int(i));
        if (it == assigns.end()) continue;
        if (it->second == 0 && w[i] == 0) conflict = true;
        if (it->second == 1 && w[i] == 1) conflict = true;
      }
      if (conflict && !fired.count(c)) {
        fired.insert(c);
        out.push_back(c + 1);
      } else {
        out.push_back(Int(0));
      }
      ++t;
    }
  };
  r.K = make_seq_machine("sep1<=c2:K", [] { return std::make_unique<K>(); });
  r.H = machine_id("sep1<=c2:H");
  r.k_sem = [](const Instance& inst) {
    auto tr = truth_of<SepTruth>(inst.truth);
    auto assign = tr->assign;
    CantorTruth ct;
    ct.consistent = [assign](const std::vector<int>& w) {
      for (Nat i = 0; i < w.size(); ++i) {
        if (w[i] != 0 && w[i] != 1) return false;
        int a = assign(Int(i));
        if (a == 0 && w[i] != 1) return false;
        if (a == 1 && w[i] != 0) return false;
      }
      return true;
    };
    ct.card = tr->unassigned.size() == 1 ? 2 : 1;
    ct.path = [assign](Nat i, Nat n) {
      int a = assign(Int(n));
      if (a == 0) return 1;
      if (a == 1) return 0;
      return i >= 1 ? 1 : 0;
    };
    return make_truth(std::move(ct));
  };
  return r;
}

inline Reduction red_cle2_sle_sep1() {
  Reduction r;
  r.id = "cle2_sle_sep1";
  r.f_id = "C#le2";
  r.g_id = "SEP1";
  r.strong = true;
  r.anchor = "Brattka-Gherardi (2011), boundedness and separation";
  struct K : SeqState {
    CoverRace race;
    std::deque<Int> qp, qq;
    long long t = 0;
    void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
      fuel.burn();
      race.hear(in(Int(t++)), &fuel);
      auto hit = race.visit(&fuel);
      if (hit) {
        if (hit->second == 1)
          qp.push_back(hit->first);
        else
          qq.push_back(hit->first);
      }
      if (qp.empty()) {
        out.push_back(Int(0));
      } else {
        out.push_back(qp.front() + 1);
        qp.pop_front();
      }
      if (qq.empty()) {
        out.push_back(Int(0));
      } else {
        out.push_back(qq.front() + 1);
        qq.pop_front();
      }
    }
  };
  r.K = make_seq_machine("c2<=sep1:K", [] { return std::make_unique<K>(); });
  r.H = walk_bits_machine("c2<=sep1:H");
  r.k_sem = [](const Instance& inst) {
    auto tr = truth_of<CantorTruth>(inst.truth);
    Name nm = inst.name;
    auto consistent = tr->consistent;
    auto race = std::make_shared<std::optional<CoverRace>>();
    auto fired_dir = [race, nm](const Int& c) -> std::optional<int> {
      if (!race->has_value()) {
        race->emplace();
        for (long long t = 0; t < 4096; ++t) {
          (*race)->hear(nm.at(Int(t)), nullptr);
          (*race)->visit(nullptr);
        }
      }
      auto it = (*race)->fired.find(c);
      if (it == (*race)->fired.end()) return std::nullopt;
      return it->second;
    };
    SepTruth st;
    st.assign = [consistent, fired_dir](const Int& n) -> int {
      if (n < 0) return 2;
      auto s = word_decode(n);
      std::vector<int> s0 = s;
      s0.push_back(0);
      std::vector<int> s1 = s;
      s1.push_back(1);
      bool k0 = consistent(s0), k1 = consistent(s1);
      if (k0 && k1) return 2;
      if (k0 != k1) return k1 ? 0 : 1;
      auto d = fired_dir(n);
      if (!d) return 2;
      return *d == 1 ? 0 : 1;
    };
    if (tr->card >= 2) {
      std::vector<int> w;
      for (Nat dpt = 0; dpt < 64; ++dpt) {
        std::vector<int> w0 = w;
        w0.push_back(0);
        std::vector<int> w1 = w;
        w1.push_back(1);
        bool c0 = consistent(w0), c1 = consistent(w1);
        if (c0 && c1) {
          st.unassigned.push_back(word_code(w));
          break;
        }
        w.push_back(c0 ? 0 : 1);
      }
    }
    return make_truth(std::move(st));
  };
  return r;
}

inline Reduction red_wkl_sle_c2n() {
  Reduction r;
  r.id = "wkl_sle_c2n";
  r.f_id = "WKL";
  r.g_id = "C_2N";
  r.strong = true;
  r.anchor = "Brattka-Gherardi (2011), compact choice";
  struct K : SeqState {
    std::set<Int> fired;
    long long t = 0;
    void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
      fuel.burn();
      auto pr = unpair_code(Int(t));
      auto w = word_decode(pr.second);
      Nat extra = pr.first > 14 ? 14 : pr.first.convert_to<Nat>();
      Int c = word_code(w);
      Int ev{0};
      if (!fired.count(c)) {
        std::vector<int> ww = w;
        if (!ext_dfs(in, fuel, ww, w.size() + extra)) {
          fired.insert(c);
          ev = c + 1;
        }
      }
      out.push_back(ev);
      ++t;
    }
  };
  r.K = make_seq_machine("wkl<=c2n:K", [] { return std::make_unique<K>(); });
  r.H = machine_id("wkl<=c2n:H");
  r.k_sem = [](const Instance& inst) {
    auto tr = truth_of<WklTruth>(inst.truth);
    CantorTruth ct;
    auto live = tr->extendable;
    ct.consistent = [live](const std::vector<int>& w) {
      for (int b : w)
        if (b != 0 && b != 1) return false;
      return live(w);
    };
    ct.card = 1;
    auto path = tr->path;
    ct.path = [path](Nat, Nat n) { return path(n); };
    return make_truth(std::move(ct));
  };
  return r;
}

inline Reduction red_c2n_sle_wkl() {
  Reduction r;
  r.id = "c2n_sle_wkl";
  r.f_id = "C_2N";
  r.g_id = "WKL";
  r.strong = true;
  r.anchor = "Brattka-Gherardi (2011), compact choice";
  auto staged_in_tree = [](const std::function<Int(const Int&)>& look,
                           Fuel* fuel, const std::vector<int>& w) {
    for (Nat j = 0; j < w.size(); ++j) {
      if (fuel) fuel->burn();
      Int tok = look(Int(j));
      if (tok <= 0) continue;
      auto rm = word_decode(tok - 1);
      if (rm.size() <= w.size() &&
          std::equal(rm.begin(), rm.end(), w.begin()))
        return false;
    }
    return true;
  };
  r.K = make_cellwise_machine(
      "c2n<=wkl:K",
      [staged_in_tree](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        auto w = word_decode(pos < 0 ? Int(0) : pos);
        return staged_in_tree(in, &fuel, w) ? Int(1) : Int(0);
      });
  r.H = machine_id("c2n<=wkl:H");
  r.k_sem = [staged_in_tree](const Instance& inst) {
    auto tr = truth_of<CantorTruth>(inst.truth);
    Name nm = inst.name;
    auto look = [nm](const Int& p) { return nm.at(p); };
    WklTruth wt;
    wt.in_tree = [staged_in_tree, look](const std::vector<int>& w) {
      return staged_in_tree(look, nullptr, w);
    };
    auto consistent = tr->consistent;
    wt.extendable = consistent;
    auto path = tr->path;
    wt.path = [path](Nat n) { return path(0, n); };
    wt.ext = [staged_in_tree, look, consistent](const std::vector<int>& w,
                                                Nat n) {
      if (n < w.size()) return false;
      if (consistent(w)) return true;
      std::function<bool(std::vector<int>&)> go =
          [&](std::vector<int>& u) -> bool {
        if (!staged_in_tree(look, nullptr, u)) return false;
        if (u.size() >= n) return true;
        for (int b = 0; b < 2; ++b) {
          u.push_back(b);
          if (go(u)) {
            u.pop_back();
            return true;
          }
          u.pop_back();
        }
        return false;
      };
      std::vector<int> u = w;
      return go(u);
    };
    wt.infinite = true;
    return make_truth(std::move(wt));
  };
  return r;
}

inline Reduction red_sep_sle_wkl() {
  Reduction r;
  r.id = "sep_sle_wkl";
  r.f_id = "SEP";
  r.g_id = "WKL";
  r.strong = true;
  r.anchor = "Gherardi-Marcone (2009), Theorem 6.7";
  auto staged_ok = [](const std::function<Int(const Int&)>& look, Fuel* fuel,
                      const std::vector<int>& w, Nat levels) {
    for (Nat u = 0; u < levels; ++u) {
      if (fuel) fuel->burn();
      Int pv = look(pos_pair(0, Int(u)));
      Int qv = look(pos_pair(1, Int(u)));
      if (pv > 0) {
        Int e = pv - 1;
        if (e < Int(w.size()) && w[e.convert_to<Nat>()] != 1) return false;
      }
      if (qv > 0) {
        Int e = qv - 1;
        if (e < Int(w.size()) && w[e.convert_to<Nat>()] != 0) return false;
      }
    }
    return true;
  };
  r.K = make_cellwise_machine(
      "sep<=wkl:K",
      [staged_ok](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        auto w = word_decode(pos < 0 ? Int(0) : pos);
        for (int b : w)
          if (b != 0 && b != 1) return Int(0);
        return staged_ok(in, &fuel, w, w.size()) ? Int(1) : Int(0);
      });
  r.H = machine_id("sep<=wkl:H");
  r.k_sem = [staged_ok](const Instance& inst) {
    auto tr = truth_of<SepTruth>(inst.truth);
    Name nm = inst.name;
    auto look = [nm](const Int& p) { return nm.at(p); };
    auto assign = tr->assign;
    WklTruth wt;
    wt.in_tree = [staged_ok, look](const std::vector<int>& w) {
      for (int b : w)
        if (b != 0 && b != 1) return false;
      return staged_ok(look, nullptr, w, w.size());
    };
    wt.extendable = [assign](const std::vector<int>& w) {
      for (Nat i = 0; i < w.size(); ++i) {
        if (w[i] != 0 && w[i] != 1) return false;
        int a = assign(Int(i));
        if (a == 0 && w[i] != 1) return false;
        if (a == 1 && w[i] != 0) return false;
      }
      return true;
    };
    wt.path = [assign](Nat n) { return assign(Int(n)) == 0 ? 1 : 0; };
    wt.ext = [staged_ok, look](const std::vector<int>& w, Nat n) {
      if (n < w.size()) return false;
      for (int b : w)
        if (b != 0 && b != 1) return false;
      return staged_ok(look, nullptr, w, n);
    };
    wt.infinite = true;
    return make_truth(std::move(wt));
  };
  return r;
}

inline Reduction red_wkl_sle_sep() {
  Reduction r;
  r.id = "wkl_sle_sep";
  r.f_id = "WKL";
  r.g_id = "SEP";
  r.strong = true;
  r.anchor = "Gherardi-Marcone (2009), Theorem 6.7";
  struct K : SeqState {
    std::map<Int, Nat> next_l;
    std::set<Int> fired;
    std::deque<Int> qp, qq;
    long long t = 0;
    void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
      fuel.burn();
      auto pr = unpair_code(Int(t));
      auto s = word_decode(pr.second);
      Int c = word_code(s);
      if (!fired.count(c)) {
        auto itl = next_l.emplace(c, s.size() + 1).first;
        Nat level = itl->second;
        std::vector<int> s0 = s;
        s0.push_back(0);
        std::vector<int> s1 = s;
        s1.push_back(1);
        bool e0 = ext_dfs(in, fuel, s0, level);
        bool e1 = ext_dfs(in, fuel, s1, level);
        if (e0 != e1) {
          fired.insert(c);
          if (e1)
            qp.push_back(c);
          else
            qq.push_back(c);
        } else {
          itl->second = level + 1;
        }
      }
      if (qp.empty()) {
        out.push_back(Int(0));
      } else {
        out.push_back(qp.front() + 1);
        qp.pop_front();
      }
      if (qq.empty()) {
        out.push_back(Int(0));
      } else {
        out.push_back(qq.front() + 1);
        qq.pop_front();
      }
      ++t;
    }
  };
  r.K = make_seq_machine("wkl<=sep:K", [] { return std::make_unique<K>(); });
  r.H = walk_bits_machine("wkl<=sep:H");
  r.k_sem = [](const Instance& inst) {
    auto tr = truth_of<WklTruth>(inst.truth);
    auto live = tr->extendable;
    auto ext = tr->ext;
    SepTruth st;
    st.assign = [live, ext](const Int& n) -> int {
      if (n < 0) return 2;
      auto s = word_decode(n);
      std::vector<int> s0 = s;
      s0.push_back(0);
      std::vector<int> s1 = s;
      s1.push_back(1);
      if (live(s0) && live(s1)) return 2;
      for (Nat level = s.size() + 1; level <= s.size() + 44; ++level) {
        bool e0 = ext(s0, level), e1 = ext(s1, level);
        if (e0 != e1) return e1 ? 0 : 1;
      }
      return 2;
    };
    auto path = tr->path;
    std::vector<int> w;
    for (Nat d = 0; d < 40; ++d) {
      int b = path(d);
      std::vector<int> other = w;
      other.push_back(1 - b);
      if (live(other)) {
        st.unassigned.push_back(word_code(w));
        break;
      }
      w.push_back(b);
    }
    return make_truth(std::move(st));
  };
  return r;
}

// ----- group: limits ----------------------------------------------------------

inline Reduction red_ec_le_lim() {
  Reduction r;
  r.id = "ec_le_lim";
  r.f_id = "EC";
  r.g_id = "LIM";
  r.strong = false;
  r.anchor = "von Stein (1989); Brattka (2005), limit computability";
  r.K = make_cellwise_machine(
      "ec<=lim:K", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        auto pr = unpair_code(pos);
        Int k = pr.first, n = pr.second;
        for (Int j = 0; j < k; ++j) {
          fuel.burn();
          auto e = enum_decode(in(j));
          if (e && *e == n) return Int(1);
        }
        return Int(0);
      });
  r.H = make_cellwise_machine(
      "ec<=lim:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        fuel.burn();
        if (pos < 0) return Int(0);
        return in(pos_pair(1, pos)) == 0 ? Int(0) : Int(1);
      });
  r.k_sem = [](const Instance& inst) {
    auto tr = truth_of<EcTruth>(inst.truth);
    Name nm = inst.name;
    auto member = tr->member;
    LimTruth lt;
    lt.value = [nm](Nat k, Nat n) -> Int {
      for (Nat j = 0; j < k; ++j) {
        auto e = enum_decode(nm.at(Int(j)));
        if (e && *e == Int(n)) return Int(1);
      }
      return Int(0);
    };
    lt.limit = [member](Nat n) { return Int(member(Int(n)) ? 1 : 0); };
    lt.stab = [nm, member](Nat n) -> Nat {
      if (!member(Int(n))) return 0;
      for (Nat j = 0;; ++j) {
        auto e = enum_decode(nm.at(Int(j)));
        if (e && *e == Int(n)) return j + 1;
        if (j > 2 * n + 8)
          throw std::runtime_error("enumeration missed a member");
      }
    };
    return make_truth(std::move(lt));
  };
  return r;
}

inline Reduction red_lim_le_ec() {
  Reduction r;
  r.id = "lim_le_ec";
  r.f_id = "LIM";
  r.g_id = "EC";
  r.strong = false;
  r.anchor = "von Stein (1989); Brattka (2005), limit computability";
  struct K : SeqState {
    std::set<Int> emitted;
    long long t = 0;
    void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
      fuel.burn();
      auto pr = unpair_code(Int(t));
      auto nk = unpair_code(pr.second);
      Int n = nk.first, k = nk.second;
      Int a = in(pair_code(k, n));
      Int b = in(pair_code(k + 1 + pr.first, n));
      Int code = pair_code(n, k);
      if (a != b && !emitted.count(code)) {
        emitted.insert(code);
        out.push_back(code + 1);
      } else {
        out.push_back(Int(0));
      }
      ++t;
    }
  };
  r.K = make_seq_machine("lim<=ec:K", [] { return std::make_unique<K>(); });
  r.H = make_cellwise_machine(
      "lim<=ec:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        for (Int s = 0;; ++s) {
          fuel.burn();
          if (in(pos_pair(1, pair_code(pos, s))) == 0)
            return in(pos_pair(0, pair_code(s, pos)));
        }
      });
  r.k_sem = [](const Instance& inst) {
    auto tr = truth_of<LimTruth>(inst.truth);
    auto value = tr->value;
    auto stab = tr->stab;
    EcTruth et;
    et.co_small = false;
    et.member = [value, stab](const Int& m) {
      if (m < 0) return false;
      auto nk = unpair_code(m);
      Nat n = nk.first.convert_to<Nat>();
      Nat k = nk.second.convert_to<Nat>();
      Nat s = stab(n);
      Int base = value(k, n);
      for (Nat kk = k + 1; kk <= s; ++kk)
        if (value(kk, n) != base) return true;
      return false;
    };
    return make_truth(std::move(et));
  };
  return r;
}

// ----- group: finite choice and omniscience -----------------------------------

inline Reduction red_omni_to_choice(const std::string& id, Nat k, bool acc) {
  Reduction r;
  r.id = id;
  r.f_id = (acc ? "LLPOn:" : "MLPOn:") + std::to_string(k);
  r.g_id = (acc ? "ACCn:" : "Cn:") + std::to_string(k);
  r.strong = true;
  r.anchor = "Brattka-Gherardi (2011), effective choice on finite spaces";
  struct K : SeqState {
    Nat k;
    std::vector<bool> flagged;
    long long t = 0;
    explicit K(Nat kk) : k(kk), flagged(kk, false) {}
    void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
      fuel.burn();
      Nat i = static_cast<Nat>(t % k);
      Int v = in(Int(t));
      ++t;
      if (v != 0 && !flagged[i]) {
        flagged[i] = true;
        out.push_back(Int(i) + 1);
      } else {
        out.push_back(Int(0));
      }
    }
  };
  r.K = make_seq_machine(id + ":K", [k] { return std::make_unique<K>(k); });
  r.H = machine_id(id + ":H");
  r.k_sem = [k](const Instance& inst) {
    auto t = truth_of<OmniTruth>(inst.truth);
    auto fnz = t->first_nz;
    ChoiceTruth c;
    c.space = k;
    c.alive = [fnz, k](const Int& v) {
      if (v < 0 || v >= Int(k)) return false;
      return !fnz[v.convert_to<Nat>()].has_value();
    };
    Nat removed = 0;
    for (Nat i = 0; i < k; ++i) {
      if (fnz[i])
        ++removed;
      else
        c.alive_sample.push_back(Int(i));
    }
    c.removed_count = removed;
    return make_truth(std::move(c));
  };
  return r;
}

inline Reduction red_choice_to_omni(const std::string& id, Nat k, bool acc) {
  Reduction r;
  r.id = id;
  r.f_id = (acc ? "ACCn:" : "Cn:") + std::to_string(k);
  r.g_id = (acc ? "LLPOn:" : "MLPOn:") + std::to_string(k);
  r.strong = true;
  r.anchor = "Brattka-Gherardi (2011), effective choice on finite spaces";
  r.K = make_cellwise_machine(
      id + ":K", [k](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        Int i = pos % Int(k);
        Int j = pos / Int(k);
        for (Int u = 0; u <= j; ++u) {
          fuel.burn();
          Int tok = in(u);
          if (tok > 0 && tok - 1 == i) return Int(1);
        }
        return Int(0);
      });
  r.H = machine_id(id + ":H");
  r.k_sem = [k](const Instance& inst) {
    Name nm = inst.name;
    OmniTruth o;
    o.arity = k;
    o.seq = [nm, k](Nat i, Nat j) -> Int {
      for (Nat u = 0; u <= j; ++u) {
        Int tok = nm.at(Int(u));
        if (tok > 0 && tok - 1 == Int(i)) return Int(1);
      }
      return Int(0);
    };
    o.first_nz.assign(k, std::nullopt);
    for (Nat u = 0; u < 256; ++u) {
      Int tok = nm.at(Int(u));
      if (tok > 0 && tok <= Int(k)) {
        Nat i = (tok - 1).convert_to<Nat>();
        if (!o.first_nz[i]) o.first_nz[i] = u;
      }
    }
    return make_truth(std::move(o));
  };
  return r;
}

// Merging the last two rows halves the arity: the merged row interleaves
// both sources, so it is eventually null exactly when both are.
inline Reduction red_llpo_merge(const std::string& id, Nat m) {
  Reduction r;
  r.id = id;
  r.f_id = "LLPOn:" + std::to_string(m);
  r.g_id = "LLPOn:" + std::to_string(m - 1);
  r.strong = true;
  r.anchor = "Brattka-Gherardi (2011), finite omniscience collapses";
  r.K = make_cellwise_machine(
      id + ":K", [m](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        fuel.burn();
        Int i = pos % Int(m - 1);
        Int j = pos / Int(m - 1);
        if (i < Int(m - 2)) return in(i + Int(m) * j);
        if (j % 2 == 0) return in(Int(m - 2) + Int(m) * (j / 2));
        return in(Int(m - 1) + Int(m) * ((j - 1) / 2));
      });
  r.H = make_cellwise_machine(
      id + ":H", [m](Reader& in, Fuel& fuel, const Int&) -> Int {
        fuel.burn();
        Int v = in(Int(0));
        if (v >= 0 && v < Int(m - 2)) return v;
        return Int(m - 2);
      });
  r.k_sem = [m](const Instance& inst) {
    auto t = truth_of<OmniTruth>(inst.truth);
    auto seq = t->seq;
    OmniTruth o;
    o.arity = m - 1;
    o.seq = [seq, m](Nat i, Nat j) -> Int {
      if (i < m - 2) return seq(i, j);
      if (j % 2 == 0) return seq(m - 2, j / 2);
      return seq(m - 1, (j - 1) / 2);
    };
    o.first_nz.assign(m - 1, std::nullopt);
    for (Nat i = 0; i + 2 < m; ++i) o.first_nz[i] = t->first_nz[i];
    auto fa = t->first_nz[m - 2], fb = t->first_nz[m - 1];
    if (fa || fb) {
      Nat best = 0;
      bool have = false;
      if (fa) {
        best = 2 * *fa;
        have = true;
      }
      if (fb) {
        Nat cand = 2 * *fb + 1;
        if (!have || cand < best) best = cand;
      }
      o.first_nz[m - 2] = best;
    }
    return make_truth(std::move(o));
  };
  return r;
}

// Padding with an always-nonzero row embeds into the next arity up.
inline Reduction red_mlpo_pad(const std::string& id, Nat n) {
  Reduction r;
  r.id = id;
  r.f_id = "MLPOn:" + std::to_string(n);
  r.g_id = "MLPOn:" + std::to_string(n + 1);
  r.strong = true;
  r.anchor = "Brattka-Gherardi (2011), finite omniscience collapses";
  r.K = make_cellwise_machine(
      id + ":K", [n](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        fuel.burn();
        Int i = pos % Int(n + 1);
        Int j = pos / Int(n + 1);
        if (i < Int(n)) return in(i + Int(n) * j);
        return Int(1);
      });
  r.H = make_cellwise_machine(
      id + ":H", [n](Reader& in, Fuel& fuel, const Int&) -> Int {
        fuel.burn();
        Int v = in(Int(0));
        if (v >= 0 && v < Int(n)) return v;
        return Int(0);
      });
  r.k_sem = [n](const Instance& inst) {
    auto t = truth_of<OmniTruth>(inst.truth);
    auto seq = t->seq;
    OmniTruth o;
    o.arity = n + 1;
    o.seq = [seq, n](Nat i, Nat j) -> Int {
      return i < n ? seq(i, j) : Int(1);
    };
    o.first_nz = t->first_nz;
    o.first_nz.push_back(0);
    return make_truth(std::move(o));
  };
  return r;
}

// Dropping the last row: the kept rows go to a full LPO block one arity
// down; if every kept row is flagged nonzero, the dropped row must be null.
inline Reduction red_mlpo_drop(const std::string& id, Nat n) {
  Reduction r;
  r.id = id;
  r.f_id = "MLPOn:" + std::to_string(n + 1);
  r.g_id = "LPOn:" + std::to_string(n);
  r.strong = true;
  r.anchor = "Brattka-Gherardi (2011), finite omniscience collapses";
  r.K = make_cellwise_machine(
      id + ":K", [n](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        fuel.burn();
        Int i = pos % Int(n);
        Int j = pos / Int(n);
        return in(i + Int(n + 1) * j);
      });
  r.H = make_cellwise_machine(
      id + ":H", [n](Reader& in, Fuel& fuel, const Int&) -> Int {
        for (Nat i = 0; i < n; ++i) {
          fuel.burn();
          if (in(Int(i)) == 0) return Int(i);
        }
        return Int(n);
      });
  r.k_sem = [n](const Instance& inst) {
    auto t = truth_of<OmniTruth>(inst.truth);
    auto seq = t->seq;
    OmniTruth o;
    o.arity = n;
    o.seq = [seq](Nat i, Nat j) { return seq(i, j); };
    o.first_nz.assign(t->first_nz.begin(), t->first_nz.begin() + n);
    return make_truth(std::move(o));
  };
  return r;
}

inline Reduction red_llpo2_sle_lpo1() {
  Reduction r;
  r.id = "llpo2_sle_lpo1";
  r.f_id = "LLPOn:2";
  r.g_id = "LPOn:1";
  r.strong = true;
  r.anchor = "Brattka-Gherardi (2011), finite omniscience collapses";
  r.K = make_cellwise_machine(
      "llpo2<=lpo1:K", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        fuel.burn();
        return in(2 * pos);
      });
  r.H = make_cellwise_machine(
      "llpo2<=lpo1:H", [](Reader& in, Fuel& fuel, const Int&) -> Int {
        fuel.burn();
        return in(Int(0)) == 1 ? Int(1) : Int(0);
      });
  r.k_sem = [](const Instance& inst) {
    auto t = truth_of<OmniTruth>(inst.truth);
    auto seq = t->seq;
    OmniTruth o;
    o.arity = 1;
    o.seq = [seq](Nat, Nat j) { return seq(0, j); };
    o.first_nz = {t->first_nz[0]};
    return make_truth(std::move(o));
  };
  return r;
}

// ----- group: parallelization -------------------------------------------------

inline Reduction red_par_llpo_le_wkl() {
  Reduction r;
  r.id = "par_llpo_le_wkl";
  r.f_id = "PAR:LLPOn:2";
  r.g_id = "WKL";
  r.strong = false;
  r.anchor = "Brattka-Gherardi (2011), parallelization";
  r.K = make_cellwise_machine(
      "parllpo<=wkl:K", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        auto w = word_decode(pos < 0 ? Int(0) : pos);
        for (Nat i = 0; i < w.size(); ++i) {
          for (Nat j = 0; j < w.size(); ++j) {
            fuel.burn();
            if (in(pos_omega(Int(i), Int(w[i] + 2 * static_cast<int>(j)))) !=
                0)
              return Int(0);
          }
        }
        return Int(1);
      });
  r.H = make_cellwise_machine(
      "parllpo<=wkl:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        fuel.burn();
        if (pos < 0) return Int(0);
        auto pr = unpair_code(pos);
        return in(pos_pair(1, pr.first)) == 1 ? Int(1) : Int(0);
      });
  r.k_sem = [](const Instance& inst) {
    auto tr = truth_of<ParTruth>(inst.truth);
    auto comp = tr->component;
    auto row = [comp](Nat i) { return truth_of<OmniTruth>(comp(i)); };
    WklTruth wt;
    wt.in_tree = [row](const std::vector<int>& w) {
      for (Nat i = 0; i < w.size(); ++i) {
        if (w[i] != 0 && w[i] != 1) return false;
        auto t = row(i);
        for (Nat j = 0; j < w.size(); ++j)
          if (t->seq(w[i], j) != 0) return false;
      }
      return true;
    };
    wt.extendable = [row](const std::vector<int>& w) {
      for (Nat i = 0; i < w.size(); ++i) {
        if (w[i] != 0 && w[i] != 1) return false;
        if (row(i)->first_nz[w[i]].has_value()) return false;
      }
      return true;
    };
    wt.path = [row](Nat n) { return row(n)->first_nz[0] ? 1 : 0; };
    wt.ext = [row](const std::vector<int>& w, Nat n) {
      if (n < w.size()) return false;
      for (Nat i = 0; i < w.size(); ++i) {
        if (w[i] != 0 && w[i] != 1) return false;
        auto t = row(i);
        for (Nat j = 0; j < n; ++j)
          if (t->seq(w[i], j) != 0) return false;
      }
      return true;
    };
    wt.infinite = true;
    return make_truth(std::move(wt));
  };
  return r;
}

inline Reduction red_wkl_le_par_llpo() {
  Reduction r;
  r.id = "wkl_le_par_llpo";
  r.f_id = "WKL";
  r.g_id = "PAR:LLPOn:2";
  r.strong = false;
  r.anchor = "Brattka-Gherardi (2011), parallelization";
  r.K = make_cellwise_machine(
      "wkl<=parllpo:K", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        auto pr = unpair_code(pos);
        auto s = word_decode(pr.first);
        Int q = pr.second;
        int b = static_cast<int>((q % 2).convert_to<int>());
        Int j = q / 2;
        Nat extra = j > 12 ? 12 : j.convert_to<Nat>();
        Nat level = s.size() + 1 + extra;
        std::vector<int> sb = s;
        sb.push_back(b);
        std::vector<int> so = s;
        so.push_back(1 - b);
        bool dead_b = !ext_dfs(in, fuel, sb, level);
        bool live_o = ext_dfs(in, fuel, so, level);
        return dead_b && live_o ? Int(1) : Int(0);
      });
  r.H = make_cellwise_machine(
      "wkl<=parllpo:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        Nat depth = pos.convert_to<Nat>();
        std::vector<int> w;
        for (Nat d = 0; d <= depth; ++d) {
          fuel.burn();
          Int a = in(pos_pair(1, pos_omega(word_code(w), Int(0))));
          w.push_back(a == 1 ? 1 : 0);
        }
        return Int(w[depth]);
      });
  r.k_sem = [](const Instance& inst) {
    auto tr = truth_of<WklTruth>(inst.truth);
    auto ext = tr->ext;
    ParTruth pt;
    pt.component = [ext](Nat i) -> Truth {
      auto s = word_decode(Int(i));
      auto cell = [ext, s](Nat b, Nat j) -> Int {
        Nat extra = j > 12 ? 12 : j;
        Nat level = s.size() + 1 + extra;
        std::vector<int> sb = s;
        sb.push_back(static_cast<int>(b));
        std::vector<int> so = s;
        so.push_back(static_cast<int>(1 - b));
        return !ext(sb, level) && ext(so, level) ? Int(1) : Int(0);
      };
      OmniTruth o;
      o.arity = 2;
      o.seq = cell;
      o.first_nz.assign(2, std::nullopt);
      for (Nat b = 0; b < 2; ++b)
        for (Nat j = 0; j <= 14; ++j)
          if (cell(b, j) != 0) {
            o.first_nz[b] = j;
            break;
          }
      return make_truth(std::move(o));
    };
    return make_truth(std::move(pt));
  };
  return r;
}

inline Reduction red_par_lpo_le_ec() {
  Reduction r;
  r.id = "par_lpo_le_ec";
  r.f_id = "PAR:LPOn:1";
  r.g_id = "EC";
  r.strong = false;
  r.anchor = "Weihrauch (1992), omniscience under enumeration completion";
  struct K : SeqState {
    std::set<Int> flagged;
    long long t = 0;
    void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
      fuel.burn();
      auto pr = unpair_code(Int(t++));
      Int i = pr.first, j = pr.second;
      if (in(pos_omega(i, j)) != 0 && !flagged.count(i)) {
        flagged.insert(i);
        out.push_back(i + 1);
      } else {
        out.push_back(Int(0));
      }
    }
  };
  r.K = make_seq_machine("parlpo<=ec:K", [] { return std::make_unique<K>(); });
  r.H = make_cellwise_machine(
      "parlpo<=ec:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        fuel.burn();
        if (pos < 0) return Int(0);
        auto pr = unpair_code(pos);
        if (pr.second != 0) return Int(0);
        return in(pos_pair(1, pr.first)) == 1 ? Int(1) : Int(0);
      });
  r.k_sem = [](const Instance& inst) {
    auto tr = truth_of<ParTruth>(inst.truth);
    auto comp = tr->component;
    EcTruth et;
    et.co_small = false;
    et.member = [comp](const Int& n) {
      if (n < 0) return false;
      return truth_of<OmniTruth>(comp(n.convert_to<Nat>()))
          ->first_nz[0]
          .has_value();
    };
    return make_truth(std::move(et));
  };
  return r;
}

inline Reduction red_ec_le_par_lpo() {
  Reduction r;
  r.id = "ec_le_par_lpo";
  r.f_id = "EC";
  r.g_id = "PAR:LPOn:1";
  r.strong = false;
  r.anchor = "Weihrauch (1992), omniscience under enumeration completion";
  r.K = make_cellwise_machine(
      "ec<=parlpo:K", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        auto pr = unpair_code(pos);
        Int i = pr.first, j = pr.second;
        for (Int u = 0; u <= j; ++u) {
          fuel.burn();
          auto e = enum_decode(in(u));
          if (e && *e == i) return Int(1);
        }
        return Int(0);
      });
  r.H = make_cellwise_machine(
      "ec<=parlpo:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        fuel.burn();
        if (pos < 0) return Int(0);
        return in(pos_pair(1, pos_omega(pos, Int(0)))) == 1 ? Int(1) : Int(0);
      });
  r.k_sem = [](const Instance& inst) {
    auto tr = truth_of<EcTruth>(inst.truth);
    Name nm = inst.name;
    auto member = tr->member;
    ParTruth pt;
    pt.component = [nm, member](Nat i) -> Truth {
      OmniTruth o;
      o.arity = 1;
      o.seq = [nm, i](Nat, Nat j) -> Int {
        for (Nat u = 0; u <= j; ++u) {
          auto e = enum_decode(nm.at(Int(u)));
          if (e && *e == Int(i)) return Int(1);
        }
        return Int(0);
      };
      o.first_nz.assign(1, std::nullopt);
      if (member(Int(i))) {
        for (Nat u = 0; u <= 2 * i + 8; ++u) {
          auto e = enum_decode(nm.at(Int(u)));
          if (e && *e == Int(i)) {
            o.first_nz[0] = u;
            break;
          }
        }
        if (!o.first_nz[0])
          throw std::runtime_error("enumeration missed a member");
      }
      return make_truth(std::move(o));
    };
    return make_truth(std::move(pt));
  };
  return r;
}

// ----- group: real names through enumeration ---------------------------------

// Value of the ternary encoding sum_{n in A} 2*3^-(n+1) for the eventually
// periodic set with the given stem and repeating pattern.
inline Rat cantor_third(const std::vector<int>& stem,
                        const std::vector<int>& pat) {
  Rat x = 0;
  Nat L = stem.size();
  for (Nat i = 0; i < L; ++i)
    if (stem[i]) x += mkrat(2, ipow(3, i + 1));
  if (pat.empty()) return x;
  Rat per = 0;
  for (Nat j = 0; j < pat.size(); ++j)
    if (pat[j]) per += mkrat(2, ipow(3, L + j + 1));
  if (per == 0) return x;
  Int p3 = ipow(3, pat.size());
  return x + per * Rat(p3) / Rat(p3 - 1);
}

inline Truth impl_truth(RepId from, RepId to, RealDesc x) {
  return make_truth(ImplTruth{from, to, std::move(x)});
}

inline Rat ec_encoded_value(const Instance& inst) {
  auto tr = truth_of<EcTruth>(inst.truth);
  if (!tr->shape)
    throw std::runtime_error("member set has no periodic description");
  return cantor_third(tr->shape->first, tr->shape->second);
}

// Forward machine folding each newly enumerated element n into the running
// sum of 2*3^-(n+1).  Partial sums approach the encoded value from below,
// so speaking a code for the sum after every token yields a convergent
// approximation stream.
struct CutSumK : SeqState {
  std::set<Int> seen;
  Rat sum = 0;
  long long t = 0;
  void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
    fuel.burn();
    auto e = enum_decode(in(Int(t++)));
    if (e && *e >= 0 && seen.insert(*e).second)
      sum += mkrat(2, ipow(3, e->convert_to<Nat>() + 1));
    out.push_back(least_code_of(sum));
  }
};

// Forward machine speaking the lower cut of the encoded value instead: pair
// step t as (m, N) and speak code m exactly when q_m lies below the N-token
// partial sum, which never overshoots.
struct CutEnumK : SeqState {
  std::set<Int> seen;
  std::vector<Rat> sums{Rat(0)};
  Int consumed{0};
  long long t = 0;
  void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
    fuel.burn();
    auto pr = unpair_code(Int(t++));
    const Int& m = pr.first;
    const Int& N = pr.second;
    while (consumed <= N) {
      fuel.burn();
      auto e = enum_decode(in(consumed));
      Rat s = sums.back();
      if (e && *e >= 0 && seen.insert(*e).second)
        s += mkrat(2, ipow(3, e->convert_to<Nat>() + 1));
      sums.push_back(s);
      ++consumed;
    }
    out.push_back(q_at(m) < sums[N.convert_to<Nat>()] ? Int(m + 1) : Int(0));
  }
};

// Backward machine recovering member bits from approximation codes of the
// encoded value: each ternary digit is 0 or 2, so one token precise enough
// to clear the midline by a quarter step decides it.
inline Machine ec_digit_h(const std::string& label) {
  return make_cellwise_machine(
      label, [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        Nat n = pos.convert_to<Nat>();
        Rat base = 0;
        Int bit{0};
        for (Nat m = 0; m <= n; ++m) {
          fuel.burn();
          Int at = Int(1585) * (m + 1) / 1000 + 3;
          Rat q = q_at(in(at));
          if (q > base + mkrat(3, 2 * ipow(3, m + 1))) {
            bit = 1;
            base += mkrat(2, ipow(3, m + 1));
          } else {
            bit = 0;
          }
        }
        return bit;
      });
}

// Same digit walk driven by upper-cut bits: probing the characteristic bit
// of the midline rational decides each ternary digit in a single read.
inline Machine ec_probe_h(const std::string& label) {
  return make_cellwise_machine(
      label, [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        Nat n = pos.convert_to<Nat>();
        Rat base = 0;
        Int bit{0};
        for (Nat m = 0; m <= n; ++m) {
          fuel.burn();
          Rat tau = base + mkrat(3, 2 * ipow(3, m + 1));
          if (in(least_code_of(tau)) == 1) {
            bit = 0;
          } else {
            bit = 1;
            base += mkrat(2, ipow(3, m + 1));
          }
        }
        return bit;
      });
}

// Witness truth shared by the translations out of approximation names: a
// pair <n,k> is in the falsifier set when token k is contradicted at
// precision 2^-n, either by a visibly distant later token or by the value
// itself lying strictly outside the closed band.
inline Truth prime_falsifier_truth(const Instance& inst) {
  auto tr = truth_of<ImplTruth>(inst.truth);
  RealDesc x = tr->x;
  Name nm = inst.name;
  EcTruth t;
  t.member = [x, nm](const Int& e) {
    if (e < 0) return false;
    auto pr = unpair_code(e);
    long long n = pr.first.convert_to<long long>();
    Rat slack = pow2(-n);
    Rat vk = q_at(nm.at(pr.second));
    for (Int kp = pr.second + 1; kp <= 24; ++kp)
      if (rabs(q_at(nm.at(kp)) - vk) > slack) return true;
    return x.cmp(vk + slack) > 0 || x.cmp(vk - slack) < 0;
  };
  return make_truth(std::move(t));
}

// Witness truth for the translations out of lower-cut names: the input is
// already an enumeration of the cut, so membership is the cut itself.
inline Truth cut_member_truth(const Instance& inst) {
  auto tr = truth_of<ImplTruth>(inst.truth);
  RealDesc x = tr->x;
  EcTruth t;
  t.member = [x](const Int& m) { return m >= 0 && x.cmp(q_at(m)) > 0; };
  return make_truth(std::move(t));
}

// Cut bits to approximation codes: locate the unit interval by spiralling
// over the integer grid, then bisect i+1 times.  Each grid point costs one
// random-access probe of the characteristic function.
inline Int bisect_tok(const std::function<Int(const Int&)>& bit, Fuel& fuel,
                      Nat i) {
  Int z = 0;
  for (;;) {
    fuel.burn();
    if (bit(least_code_of(Rat(z))) == 1 && bit(least_code_of(Rat(z + 1))) == 0)
      break;
    z = z > 0 ? Int(-z) : Int(-z + 1);
  }
  Rat lo(z), hi(z + 1);
  for (Nat r = 0; r <= i; ++r) {
    fuel.burn();
    Rat mid = (lo + hi) / 2;
    if (bit(least_code_of(mid)) == 1)
      lo = mid;
    else
      hi = mid;
  }
  return least_code_of((lo + hi) / 2);
}

inline Reduction red_imp_prime_rho_le_ec() {
  Reduction r;
  r.id = "imp_prime_rho_le_ec";
  r.f_id = "IMPL:rho_prime:rho";
  r.g_id = "EC";
  r.strong = false;
  r.anchor = "Weihrauch (1992), TR-92-050, Cauchy names against cut names";
  r.K = make_cellwise_machine(
      "impprimerho<=ec:K", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        fuel.burn();
        if (pos < 0) return Int(0);
        auto pr = unpair_code(pos);
        auto nk = unpair_code(pr.first);
        Int k2 = nk.second + 1 + pr.second;
        Rat vk = q_at(in(nk.second));
        Rat vk2 = q_at(in(k2));
        long long n = nk.first.convert_to<long long>();
        return rabs(vk2 - vk) > pow2(-n) ? Int(pair_code(nk.first, nk.second) + 1)
                                         : Int(0);
      });
  r.H = make_cellwise_machine(
      "impprimerho<=ec:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        for (Int k = 0;; ++k) {
          fuel.burn();
          if (in(pos_pair(1, pair_code(pos, k))) == 0) return in(pos_pair(0, k));
        }
      });
  r.k_sem = prime_falsifier_truth;
  return r;
}

inline Reduction red_imp_prime_gt_le_ec() {
  Reduction r = red_imp_prime_rho_le_ec();
  r.id = "imp_prime_gt_le_ec";
  r.f_id = "IMPL:rho_prime:rho_gt";
  r.K.label = "impprimegt<=ec:K";
  r.H = make_cellwise_machine(
      "impprimegt<=ec:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        fuel.burn();
        if (pos < 0) return Int(0);
        auto pr = unpair_code(pos);
        auto nk = unpair_code(pr.second);
        if (in(pos_pair(1, pair_code(nk.first, nk.second))) != 0) return Int(0);
        Rat vk = q_at(in(pos_pair(0, nk.second)));
        long long n = nk.first.convert_to<long long>();
        return vk + pow2(-n) < q_at(pr.first) ? Int(pr.first + 1) : Int(0);
      });
  return r;
}

inline Reduction red_imp_lt_gt_sle_ec() {
  Reduction r;
  r.id = "imp_lt_gt_sle_ec";
  r.f_id = "IMPL:rho_lt:rho_gt";
  r.g_id = "EC";
  r.strong = true;
  r.anchor = "Weihrauch (1992), TR-92-050, Cauchy names against cut names";
  r.K = machine_id("impltgt<=ec:K");
  r.H = make_cellwise_machine(
      "impltgt<=ec:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        fuel.burn();
        if (pos < 0) return Int(0);
        auto pr = unpair_code(pos);
        if (in(pr.first) != 0 || in(pr.second) != 0) return Int(0);
        return q_at(pr.second) < q_at(pr.first) ? Int(pr.first + 1) : Int(0);
      });
  r.k_sem = cut_member_truth;
  return r;
}

inline Reduction red_imp_lt_rho_sle_ec() {
  Reduction r;
  r.id = "imp_lt_rho_sle_ec";
  r.f_id = "IMPL:rho_lt:rho";
  r.g_id = "EC";
  r.strong = true;
  r.anchor = "Weihrauch (1992), TR-92-050, Cauchy names against cut names";
  r.K = machine_id("impltrho<=ec:K");
  r.H = make_cellwise_machine(
      "impltrho<=ec:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        return bisect_tok([&in](const Int& q) { return in(q); }, fuel,
                          pos.convert_to<Nat>());
      });
  r.k_sem = cut_member_truth;
  return r;
}

inline Reduction red_ec_sle_imp_prime_rho() {
  Reduction r;
  r.id = "ec_sle_imp_prime_rho";
  r.f_id = "EC";
  r.g_id = "IMPL:rho_prime:rho";
  r.strong = true;
  r.anchor = "Weihrauch (1992), TR-92-050, Cauchy names against cut names";
  r.K = make_seq_machine("ec<=impprimerho:K",
                         [] { return std::make_unique<CutSumK>(); });
  r.H = ec_digit_h("ec<=impprimerho:H");
  r.k_sem = [](const Instance& inst) {
    return impl_truth(RepId::RhoPrime, RepId::Rho,
                      RealDesc::from_exact(Real::rational(ec_encoded_value(inst))));
  };
  return r;
}

inline Reduction red_ec_sle_imp_prime_cfgt() {
  Reduction r = red_ec_sle_imp_prime_rho();
  r.id = "ec_sle_imp_prime_cfgt";
  r.g_id = "IMPL:rho_prime:rho_cf_gt";
  r.K.label = "ec<=impprimecfgt:K";
  r.H = ec_probe_h("ec<=impprimecfgt:H");
  r.k_sem = [](const Instance& inst) {
    return impl_truth(RepId::RhoPrime, RepId::RhoCfR,
                      RealDesc::from_exact(Real::rational(ec_encoded_value(inst))));
  };
  return r;
}

inline Reduction red_ec_sle_imp_lt_cfgt() {
  Reduction r;
  r.id = "ec_sle_imp_lt_cfgt";
  r.f_id = "EC";
  r.g_id = "IMPL:rho_lt:rho_cf_gt";
  r.strong = true;
  r.anchor = "Weihrauch (1992), TR-92-050, Cauchy names against cut names";
  r.K = make_seq_machine("ec<=impltcfgt:K",
                         [] { return std::make_unique<CutEnumK>(); });
  r.H = ec_probe_h("ec<=impltcfgt:H");
  r.k_sem = [](const Instance& inst) {
    return impl_truth(RepId::RhoL, RepId::RhoCfR,
                      RealDesc::from_exact(Real::rational(ec_encoded_value(inst))));
  };
  return r;
}

inline Reduction red_ec_sle_imp_lt_rho() {
  Reduction r = red_ec_sle_imp_lt_cfgt();
  r.id = "ec_sle_imp_lt_rho";
  r.g_id = "IMPL:rho_lt:rho";
  r.K.label = "ec<=impltrho:K";
  r.H = ec_digit_h("ec<=impltrho:H");
  r.k_sem = [](const Instance& inst) {
    return impl_truth(RepId::RhoL, RepId::Rho,
                      RealDesc::from_exact(Real::rational(ec_encoded_value(inst))));
  };
  return r;
}

// ----- group: decimal names against separation --------------------------------

// One bit-packed decimal encoding: zigzag-many ones, a zero, then digits as
// four-bit groups.
struct DecStream {
  Int zz;
  std::function<int(Nat)> digit;
  int bit(const Int& p) const {
    if (p < zz) return 1;
    if (p == zz) return 0;
    Int q = p - zz - 1;
    Nat jd = (q / 4).convert_to<Nat>();
    int sh = 3 - (q % 4).convert_to<int>();
    return (digit(jd) >> sh) & 1;
  }
};

// All encodings of x: one for most reals, two at decimal grid points where
// the nine-tail form joins in.
inline std::vector<DecStream> dec_streams(const Real& x) {
  Int fl = x.floor();
  std::vector<DecStream> out;
  DecStream high;
  high.zz = zigzag(fl);
  high.digit = [x](Nat j) { return static_cast<int>(x.decimal_digit(j + 1)); };
  out.push_back(high);
  if (!x.is_decimal_grid()) return out;
  Nat gd = grid_depth(x);
  DecStream low;
  if (gd == 0) {
    low.zz = zigzag(fl - 1);
    low.digit = [](Nat) { return 9; };
  } else {
    low.zz = zigzag(fl);
    low.digit = [x, gd](Nat j) -> int {
      Nat k = j + 1;
      if (k < gd) return static_cast<int>(x.decimal_digit(k));
      if (k == gd) return static_cast<int>(x.decimal_digit(k)) - 1;
      return 9;
    };
  }
  out.push_back(low);
  return out;
}

// Does every infinite valid extension of w name a value outside the closed
// window [in_lo, in_hi]?  Non-bits and over-nine digit groups have no valid
// extension at all and are always removable.
inline bool dec_word_removable(const std::vector<int>& w, const Rat& in_lo,
                               const Rat& in_hi) {
  if (w.empty()) return false;
  for (int b : w)
    if (b != 0 && b != 1) return true;
  Nat z = 0;
  while (z < w.size() && w[z] == 1) ++z;
  if (z == w.size()) {
    // all ones: every anchor compatible with the window must still clear it
    Int amin = rfloor(in_lo) - 1;
    Int amax = rfloor(in_hi) + 1;
    for (Int a = amin; a <= amax; ++a) {
      if (zigzag(a) < Int(z)) continue;
      if (!(in_hi < Rat(a) || Rat(a + 1) < in_lo)) return false;
    }
    return true;
  }
  Rat base(unzigzag(Int(z)));
  Nat pos = z + 1;
  Nat full = (w.size() - pos) / 4;
  Nat rem = (w.size() - pos) % 4;
  for (Nat jd = 0; jd < full; ++jd) {
    int d = 0;
    for (Nat b = 0; b < 4; ++b) d = d * 2 + w[pos + 4 * jd + b];
    if (d > 9) return true;
    base += Rat(d) * pow10(-static_cast<long long>(jd) - 1);
  }
  int lo_d = 0;
  for (Nat b = 0; b < rem; ++b) lo_d = lo_d * 2 + w[pos + 4 * full + b];
  lo_d <<= (4 - rem);
  if (rem > 0 && lo_d > 9) return true;
  int hi_d = lo_d + (1 << (4 - rem)) - 1;
  if (hi_d > 9) hi_d = 9;
  long long depth = static_cast<long long>(full) + 1;
  Rat w_lo = base + Rat(lo_d) * pow10(-depth);
  Rat w_hi = base + Rat(hi_d + 1) * pow10(-depth);
  return in_hi < w_lo || w_hi < in_lo;
}

// Forward machine enumerating removable words: sweep all (precision, word)
// pairs and fire each word once its value window separates from the input
// window.  Deeper words get proportionally tighter input windows.
struct DecRemoveK : SeqState {
  std::set<Int> fired;
  long long t = 0;
  void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
    fuel.burn();
    auto pr = unpair_code(Int(t++));
    std::vector<int> w = word_decode(pr.second);
    Int jcap = Int(30 + static_cast<long long>(w.size()));
    Int ji = pr.first < jcap ? pr.first : jcap;
    long long j = ji.convert_to<long long>();
    Rat q = q_at(in(Int(j)));
    if (dec_word_removable(w, q - pow2(-j), q + pow2(-j))) {
      Int c = word_code(w);
      if (fired.insert(c).second) {
        out.push_back(c + 1);
        return;
      }
    }
    out.push_back(Int(0));
  }
};

inline Reduction red_imp_rho10_le_cle2() {
  Reduction r;
  r.id = "imp_rho10_le_cle2";
  r.f_id = "IMPL:rho:rho_10";
  r.g_id = "C#le2";
  r.strong = true;
  r.anchor = "Weihrauch (1992), TR-92-050, decimal names against separation";
  r.K = make_seq_machine("imprho10<=cle2:K",
                         [] { return std::make_unique<DecRemoveK>(); });
  // the surviving path is a bit-packed decimal name: unpack it
  r.H = make_cellwise_machine(
      "imprho10<=cle2:H", [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        Int p = 0;
        while (in(p) == 1) {
          fuel.burn();
          ++p;
        }
        if (pos == 0) return p;
        Int at = p + 1 + 4 * (pos - 1);
        int dig = 0;
        for (int b = 0; b < 4; ++b) {
          fuel.burn();
          dig = dig * 2 + (in(at + b) == 1 ? 1 : 0);
        }
        return Int(dig);
      });
  r.k_sem = [](const Instance& inst) -> Truth {
    auto tr = truth_of<ImplTruth>(inst.truth);
    if (!tr->x.exact) throw std::runtime_error("expected an exact input value");
    auto streams =
        std::make_shared<std::vector<DecStream>>(dec_streams(*tr->x.exact));
    CantorTruth ct;
    ct.card = streams->size();
    ct.path = [streams](Nat i, Nat n) {
      const DecStream& s = (*streams)[i < streams->size() ? i : 0];
      return s.bit(Int(n));
    };
    ct.consistent = [streams](const std::vector<int>& w) {
      for (const auto& s : *streams) {
        bool ok = true;
        for (Nat i = 0; i < w.size() && ok; ++i)
          if (w[i] != s.bit(Int(i))) ok = false;
        if (ok) return true;
      }
      return false;
    };
    return make_truth(std::move(ct));
  };
  return r;
}

// Decimal staircase: every resolved element appends one block to the digit
// expansion, 5 0^g 1 when it lands in the first set and 4 9^g 8 for the
// second, with runs long enough that the value never drifts out of any
// band already spoken for.
struct SepStair {
  Rat val = 0;
  long long dlen = 0;
  long long g_prev = 0;
  Int next_n{0};
  std::map<Int, int> learned;
  long long p = 0;
  long long emitted = 0;

  Rat hover() const { return val + 5 * pow10(-dlen - 1); }

  void advance(const std::function<Int(const Int&)>& rd) {
    auto e = enum_decode(rd(Int(p)));
    if (e && *e >= 0) learned[*e] = static_cast<int>(p % 2);
    ++p;
    for (;;) {
      auto it = learned.find(next_n);
      if (it == learned.end()) break;
      long long g = g_prev + 1;
      while (Rat(3) * pow10(-(dlen + g + 2)) > pow2(-emitted)) ++g;
      int side = it->second;
      append(side == 0 ? 5 : 4);
      for (long long u = 0; u < g; ++u) append(side == 0 ? 0 : 9);
      append(side == 0 ? 1 : 8);
      g_prev = g;
      ++next_n;
    }
  }
  void append(int d) {
    val += Rat(d) * pow10(-dlen - 1);
    ++dlen;
  }
};

struct SepStairK : SeqState {
  SepStair st;
  void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
    fuel.burn();
    st.advance([&in](const Int& q) { return in(q); });
    out.push_back(least_code_of(st.hover()));
    ++st.emitted;
  }
};

// Backward machine: the digit blocks of the answer replay the staircase, so
// parse them in element order and race that against the input's own
// enumeration, which alone settles everything past a stalled block.
struct SepDigitH : SeqState {
  Int n{0};
  long long apos = 1;
  long long ipos = 0;
  std::map<Int, int> learned;
  std::map<Int, int> slot;
  Int parse_elem{0};
  int mode = 0;  // 0 at slot digit, 1 scanning zeros, 2 scanning nines

  void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
    fuel.burn();
    auto e = enum_decode(in(pos_pair(0, Int(ipos))));
    if (e && *e >= 0) learned[*e] = static_cast<int>(ipos % 2);
    ++ipos;
    Int dig = in(pos_pair(1, Int(apos)));
    ++apos;
    if (mode == 0) {
      slot[parse_elem] = dig >= 5 ? 1 : 0;
      mode = dig >= 5 ? 1 : 2;
    } else if (mode == 1 && dig == 1) {
      ++parse_elem;
      mode = 0;
    } else if (mode == 2 && dig == 8) {
      ++parse_elem;
      mode = 0;
    }
    auto sl = slot.find(n);
    if (sl != slot.end()) {
      out.push_back(Int(sl->second));
      ++n;
      return;
    }
    auto lr = learned.find(n);
    if (lr != learned.end()) {
      out.push_back(lr->second == 0 ? Int(1) : Int(0));
      ++n;
    }
  }
};

inline Reduction red_sep1_le_imp_rho10() {
  Reduction r;
  r.id = "sep1_le_imp_rho10";
  r.f_id = "SEP1";
  r.g_id = "IMPL:rho:rho_10";
  r.strong = false;
  r.anchor = "Weihrauch (1992), TR-92-050, decimal names against separation";
  r.K = make_seq_machine("sep1<=imprho10:K",
                         [] { return std::make_unique<SepStairK>(); });
  r.H = make_seq_machine("sep1<=imprho10:H",
                         [] { return std::make_unique<SepDigitH>(); });
  r.k_sem = [](const Instance& inst) -> Truth {
    auto tr = truth_of<SepTruth>(inst.truth);
    Name nm = inst.name;
    if (!tr->unassigned.empty()) {
      Int u = tr->unassigned.front();
      SepStair st;
      long long horizon = 4 * u.convert_to<long long>() + 8;
      for (long long s = 0; s < horizon; ++s) {
        st.advance([&nm](const Int& q) { return nm.at(q); });
        ++st.emitted;
      }
      if (st.next_n != u)
        throw std::runtime_error("staircase failed to stall at the free element");
      return impl_truth(RepId::Rho, RepId::Rho10,
                        RealDesc::from_exact(Real::rational(st.hover())));
    }
    auto live = std::make_shared<SepStair>();
    auto nmp = std::make_shared<Name>(nm);
    auto stepper = [live, nmp]() {
      live->advance([nmp](const Int& q) { return nmp->at(q); });
      ++live->emitted;
    };
    RealDesc d;
    d.rational = false;
    d.bracket = [live, stepper](Nat k) {
      Rat tol = pow2(-static_cast<long long>(k)) / 2;
      while (pow10(-live->dlen - 2) > tol) stepper();
      Rat c = live->hover();
      Rat s = pow10(-live->dlen - 2);
      return std::pair<Rat, Rat>(c - s, c + s);
    };
    d.sign_minus = [live, stepper](const Rat& q) {
      for (;;) {
        Rat c = live->hover();
        Rat s = pow10(-live->dlen - 2);
        if (q < c - s) return 1;
        if (q > c + s) return -1;
        stepper();
      }
    };
    return impl_truth(RepId::Rho, RepId::Rho10, std::move(d));
  };
  return r;
}

// ----- group: continued fractions against completion --------------------------

// The completion answer hides exactly one code, and the staircase always
// draws that code from the shift family of the withheld value's enumeration
// entry.  Climbing the family ladder over the simplest rational of the
// current bracket reaches the hidden code in a handful of probes, where a
// positional walk would pay one read for every code below it.
struct WithheldProbe {
  std::optional<Rat> cand;
  long long shift = 0;
  std::set<Int> probed;

  std::optional<Rat> poke(Reader& in, const Rat& lo, const Rat& hi) {
    Rat v = simplest_closed(lo, hi);
    if (!cand || *cand != v) {
      cand = v;
      shift = 0;
    }
    Int code = code_of(v, 1, Int(shift++));
    if (probed.insert(code).second && in(pos_pair(1, code)) == 0) return v;
    return std::nullopt;
  }
};

// Comparison probes against lower-cut bits: spiral to a unit bracket, then
// halve once per call.  A set bit certifies the probed code sits below the
// value, so the bracket stays of the form (lo, hi].
struct BitBisect {
  bool init = false;
  Rat lo = 0, hi = 0;

  void refine(const std::function<Int(const Int&)>& bit, Fuel& fuel) {
    if (!init) {
      Int z = 0;
      for (;;) {
        fuel.burn();
        if (bit(least_code_of(Rat(z))) == 1 &&
            bit(least_code_of(Rat(z + 1))) == 0)
          break;
        z = z > 0 ? Int(-z) : Int(-z + 1);
      }
      lo = Rat(z);
      hi = Rat(z + 1);
      init = true;
      return;
    }
    Rat mid = (lo + hi) / 2;
    if (bit(least_code_of(mid)) == 1)
      lo = mid;
    else
      hi = mid;
  }
};

// Backward machine for continued-fraction targets: race a Moebius floor
// extractor over a shrinking input bracket against the withheld-code probe;
// once the probe pins the exact value the canonical tail plays out
// verbatim, terminator and padding included.  Bracket refinement is capped
// so a terminal quotient stalling the pins cannot inflate the rationals
// the extractor touches.
struct CfPeelH : SeqState {
  static constexpr long long kPinCap = 1024;
  bool from_bits;
  Int A{1}, B{0}, C{0}, Dd{1};
  long long cnt = 0;
  long long k = 0;
  std::deque<Int> tail;
  bool exact = false;
  bool hinit = false;
  Rat hlo = 0, hhi = 0;
  BitBisect bb;
  WithheldProbe wp;

  explicit CfPeelH(bool bits) : from_bits(bits) {}

  void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
    fuel.burn();
    if (exact) {
      if (tail.empty()) {
        out.push_back(Int(0));
        return;
      }
      out.push_back(tail.front());
      tail.pop_front();
      return;
    }
    if (k <= kPinCap) {
      if (from_bits) {
        auto bit = [&in](const Int& q) { return in(pos_pair(0, q)); };
        bb.refine(bit, fuel);
        hlo = bb.lo;
        hhi = bb.hi;
        hinit = true;
      } else {
        Int tok = in(pos_pair(0, Int(k)));
        Rat q = q_at(tok);
        Rat slack = pow2(-k);
        Rat a = q - slack;
        Rat b = q + slack;
        if (!hinit) {
          hlo = a;
          hhi = b;
          hinit = true;
        } else {
          hlo = std::max(hlo, a);
          hhi = std::min(hhi, b);
          if (hlo > hhi) hhi = hlo;
        }
      }
      ++k;
    }
    if (!hinit) return;
    if (auto v = wp.poke(in, hlo, hhi)) {
      auto cf = cf_of_rational(*v);
      for (Nat u = static_cast<Nat>(cnt); u < cf.size(); ++u)
        tail.push_back(u == 0 ? zigzag(cf[u]) : cf[u]);
      tail.push_back(Int(0));
      exact = true;
      out.push_back(tail.front());
      tail.pop_front();
      return;
    }
    if (k > kPinCap) return;
    Rat dl = Rat(C) * hlo + Rat(Dd);
    Rat dh = Rat(C) * hhi + Rat(Dd);
    if (dl == 0 || dh == 0 || (dl > 0) != (dh > 0)) return;
    Rat tl = (Rat(A) * hlo + Rat(B)) / dl;
    Rat th = (Rat(A) * hhi + Rat(B)) / dh;
    if (tl > th) std::swap(tl, th);
    Int fl = rfloor(tl);
    if (fl != rfloor(th)) return;
    out.push_back(cnt == 0 ? zigzag(fl) : Int(fl));
    ++cnt;
    Int nA = C, nB = Dd, nC = A - fl * C, nD = B - fl * Dd;
    A = nA;
    B = nB;
    C = nC;
    Dd = nD;
  }
};

// Backward machine for upper-cut-bit targets fed by approximation codes:
// each bit falls to a bracket separation or, for a code of the value
// itself, to the withheld-code probe.
struct RhoToBitsH : SeqState {
  static constexpr long long kPinCap = 256;
  Int n{0};
  long long k = 0;
  bool hinit = false;
  Rat hlo = 0, hhi = 0;
  WithheldProbe wp;
  std::optional<Rat> exact;

  void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
    fuel.burn();
    if (!exact && k <= kPinCap) {
      Int tok = in(pos_pair(0, Int(k)));
      Rat q = q_at(tok);
      Rat slack = pow2(-k);
      ++k;
      Rat a = q - slack;
      Rat b = q + slack;
      if (!hinit) {
        hlo = a;
        hhi = b;
        hinit = true;
      } else {
        hlo = std::max(hlo, a);
        hhi = std::min(hhi, b);
        if (hlo > hhi) hhi = hlo;
      }
    }
    if (!exact && hinit)
      if (auto v = wp.poke(in, hlo, hhi)) exact = v;
    Rat qn = q_at(n);
    if (exact) {
      out.push_back(qn > *exact ? Int(1) : Int(0));
      ++n;
      return;
    }
    if (!hinit) return;
    if (qn > hhi) {
      out.push_back(Int(1));
      ++n;
    } else if (qn < hlo) {
      out.push_back(Int(0));
      ++n;
    }
  }
};

// Backward machine for upper-cut bits from lower-cut bits: a set input bit
// settles 0 at once, the bisection bracket settles codes strictly above the
// value, and the withheld-code probe resolves the value's own codes.
struct CutBitsH : SeqState {
  static constexpr long long kPinCap = 256;
  Int n{0};
  long long k = 0;
  BitBisect bb;
  WithheldProbe wp;
  std::optional<Rat> exact;

  void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
    fuel.burn();
    if (!exact && k <= kPinCap) {
      auto bit = [&in](const Int& q) { return in(pos_pair(0, q)); };
      bb.refine(bit, fuel);
      ++k;
    }
    if (!exact && bb.init)
      if (auto v = wp.poke(in, bb.lo, bb.hi)) exact = v;
    Rat qn = q_at(n);
    if (exact) {
      out.push_back(qn > *exact ? Int(1) : Int(0));
      ++n;
      return;
    }
    if (!bb.init) return;
    if (in(pos_pair(0, n)) == 1) {
      out.push_back(Int(0));
      ++n;
      return;
    }
    if (qn > bb.hi) {
      out.push_back(Int(1));
      ++n;
    }
  }
};

inline Machine cut_to_codes_machine(const std::string& label) {
  return make_cellwise_machine(
      label, [](Reader& in, Fuel& fuel, const Int& pos) -> Int {
        if (pos < 0) return Int(0);
        return bisect_tok([&in](const Int& q) { return in(q); }, fuel,
                          pos.convert_to<Nat>());
      });
}

inline Truth impl_stair_truth(const Instance& inst) {
  auto tr = truth_of<ImplTruth>(inst.truth);
  std::optional<Rat> v;
  if (tr->x.exact && tr->x.exact->is_rational()) v = tr->x.exact->rat();
  return rat_stair_truth(inst.name, v);
}

inline Truth impl_stair_truth_bits(const Instance& inst) {
  auto tr = truth_of<ImplTruth>(inst.truth);
  std::optional<Rat> v;
  if (tr->x.exact && tr->x.exact->is_rational()) v = tr->x.exact->rat();
  auto nmp = std::make_shared<Name>(inst.name);
  auto fuel = std::make_shared<Fuel>(50'000'000);
  Name codes([nmp, fuel](const Int& pos) -> Int {
    if (pos < 0) return Int(0);
    return bisect_tok([nmp](const Int& q) { return nmp->at(q); }, *fuel,
                      pos.convert_to<Nat>());
  });
  return rat_stair_truth(codes, v);
}

inline Reduction red_imp_rho_cf_le_ec1() {
  Reduction r;
  r.id = "imp_rho_cf_le_ec1";
  r.f_id = "IMPL:rho:rho_cf";
  r.g_id = "EC1";
  r.strong = false;
  r.anchor =
      "Weihrauch (1992), TR-92-050, continued fractions against completion";
  r.K = make_seq_machine("imprhocf<=ec1:K",
                         [] { return std::make_unique<RatStairK>(); });
  r.H = make_seq_machine("imprhocf<=ec1:H",
                         [] { return std::make_unique<CfPeelH>(false); });
  r.k_sem = impl_stair_truth;
  return r;
}

inline Reduction red_imp_rho_cfgt_le_ec1() {
  Reduction r = red_imp_rho_cf_le_ec1();
  r.id = "imp_rho_cfgt_le_ec1";
  r.f_id = "IMPL:rho:rho_cf_gt";
  r.K.label = "imprhocfgt<=ec1:K";
  r.H = make_seq_machine("imprhocfgt<=ec1:H",
                         [] { return std::make_unique<RhoToBitsH>(); });
  return r;
}

inline Reduction red_imp_cflt_cfgt_le_ec1() {
  Reduction r;
  r.id = "imp_cflt_cfgt_le_ec1";
  r.f_id = "IMPL:rho_cf_lt:rho_cf_gt";
  r.g_id = "EC1";
  r.strong = false;
  r.anchor =
      "Weihrauch (1992), TR-92-050, continued fractions against completion";
  r.K = compose_machines(
      make_seq_machine("impcfltcfgt<=ec1:K:stair",
                       [] { return std::make_unique<RatStairK>(); }),
      cut_to_codes_machine("impcfltcfgt<=ec1:K:codes"), "impcfltcfgt<=ec1:K");
  r.H = make_seq_machine("impcfltcfgt<=ec1:H",
                         [] { return std::make_unique<CutBitsH>(); });
  r.k_sem = impl_stair_truth_bits;
  return r;
}

inline Reduction red_imp_cflt_cf_le_ec1() {
  Reduction r = red_imp_cflt_cfgt_le_ec1();
  r.id = "imp_cflt_cf_le_ec1";
  r.f_id = "IMPL:rho_cf_lt:rho_cf";
  r.K = compose_machines(
      make_seq_machine("impcfltcf<=ec1:K:stair",
                       [] { return std::make_unique<RatStairK>(); }),
      cut_to_codes_machine("impcfltcf<=ec1:K:codes"), "impcfltcf<=ec1:K");
  r.H = make_seq_machine("impcfltcf<=ec1:H",
                         [] { return std::make_unique<CfPeelH>(true); });
  return r;
}

// Bit-emitting staircase: each settled element knocks a power of two off
// the value with strictly growing exponent gaps, and a cut query landing in
// the undecided band raises the floor of the next exponent, which keeps the
// query strictly below every later value.  Enumerated rationals have small
// denominators next to the dyadic value, so the raises stay linear and the
// limit's quotients stay pinnable; the value is rational exactly when some
// element never settles.
struct BitStair {
  Rat v = 1;
  Int e_prev{0};
  Int gap{1};
  Int efloor{2};
  std::set<Int> seen;
  Int next_e{0};
  std::vector<Rat> vals{Rat(1)};
  long long t = 0;

  Rat tail_bound() const { return pow2(-efloor.convert_to<long long>() + 1); }

  Int feed(const Int& tok) {
    auto e = enum_decode(tok);
    if (e && *e >= 0) seen.insert(*e);
    while (seen.count(next_e)) {
      Int ex = e_prev + gap + 1;
      if (ex < Int(t) + 2) ex = Int(t) + 2;
      if (ex < efloor) ex = efloor;
      gap = ex - e_prev;
      e_prev = ex;
      efloor = ex + 1;
      v -= pow2(-ex.convert_to<long long>());
      vals.push_back(v);
      ++next_e;
    }
    Rat q = q_at(Int(t));
    ++t;
    if (q >= v) return Int(0);
    while (v - tail_bound() <= q) ++efloor;
    return Int(1);
  }
};

// Dyadic staircase: each settled element knocks 2^-e off the value with
// strictly growing exponent gaps, so the limit's binary runs are unbounded
// and the value is rational exactly when some element never settles.
struct DyadSim {
  Rat v = 1;
  Int e_prev{0};
  Int gap{1};
  std::set<Int> seen;
  Int next_e{0};
  std::vector<Rat> vals{Rat(1)};
  long long t = 0;

  Int feed(const Int& tok) {
    auto e = enum_decode(tok);
    if (e && *e >= 0) seen.insert(*e);
    while (seen.count(next_e)) {
      Int ex = e_prev + gap + 1;
      if (ex < Int(t) + 2) ex = Int(t) + 2;
      gap = ex - e_prev;
      e_prev = ex;
      v -= pow2(-ex.convert_to<long long>());
      vals.push_back(v);
      ++next_e;
    }
    ++t;
    return least_code_of(v);
  }
};

template <class Sim>
struct StairFeedK : SeqState {
  Sim sim;
  void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
    fuel.burn();
    out.push_back(sim.feed(in(Int(sim.t))));
  }
};

// Element c settles to 1 the moment the input enumerates it; otherwise the
// staircase value after c moves is probed against the answer's upper-cut
// bits, and only the stalled element's value ties the encoded real.
template <class Sim>
struct StairProbeH : SeqState {
  Sim sim;
  Nat c = 0;
  void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
    fuel.burn();
    sim.feed(in(pos_pair(0, Int(sim.t))));
    if (sim.seen.count(Int(c))) {
      out.push_back(Int(1));
      ++c;
      return;
    }
    if (sim.vals.size() > c) {
      out.push_back(in(pos_pair(1, least_code_of(sim.vals[c]))) == 1 ? Int(1)
                                                                     : Int(0));
      ++c;
    }
  }
};

// Same race against a full continued-fraction answer: the convergent hull
// brackets the encoded real, so a staircase value outside the hull is not
// the stall, and the terminator settles the one that is.
template <class Sim>
struct StairHullH : SeqState {
  Sim sim;
  Nat c = 0;
  long long apos = 0;
  Rat lo = 0, hi = 0;
  bool have_hull = false;
  Int pm2{1}, qm2{0}, pm1{0}, qm1{1};
  std::optional<Rat> exact;

  void step(Reader& in, Fuel& fuel, std::vector<Int>& out) override {
    fuel.burn();
    sim.feed(in(pos_pair(0, Int(sim.t))));
    if (sim.seen.count(Int(c))) {
      out.push_back(Int(1));
      ++c;
      return;
    }
    if (sim.vals.size() <= c) return;
    Rat vc = sim.vals[c];
    if (!exact) {
      Int tok = in(pos_pair(1, Int(apos)));
      if (apos == 0) {
        pm1 = unzigzag(tok);
        lo = Rat(pm1);
        hi = lo + 1;
        have_hull = true;
      } else if (tok == 0) {
        exact = Rat(pm1) / Rat(qm1);
      } else {
        Int np = tok * pm1 + pm2;
        Int nq = tok * qm1 + qm2;
        pm2 = pm1;
        qm2 = qm1;
        pm1 = np;
        qm1 = nq;
        Rat c1 = Rat(pm1) / Rat(qm1);
        Rat c2 = Rat(pm2) / Rat(qm2);
        lo = std::min(c1, c2);
        hi = std::max(c1, c2);
      }
      ++apos;
    }
    if (exact) {
      out.push_back(*exact == vc ? Int(0) : Int(1));
      ++c;
      return;
    }
    if (have_hull && (vc < lo || vc > hi)) {
      out.push_back(Int(1));
      ++c;
    }
  }
};

inline Truth bit_stair_truth(const Instance& inst, RepId from, RepId to) {
  auto tr = truth_of<EcTruth>(inst.truth);
  Name nm = inst.name;
  if (tr->missing) {
    BitStair sim;
    long long horizon = 2 * tr->missing->convert_to<long long>() + 16;
    for (long long s = 0; s < horizon; ++s) sim.feed(nm.at(Int(sim.t)));
    if (sim.next_e != *tr->missing)
      throw std::runtime_error("bit staircase failed to stall at the missing element");
    return impl_truth(from, to, RealDesc::from_exact(Real::rational(sim.v)));
  }
  auto live = std::make_shared<BitStair>();
  auto nmp = std::make_shared<Name>(nm);
  RealDesc d;
  d.rational = false;
  d.bracket = [live, nmp](Nat k) {
    Rat tol = pow2(-static_cast<long long>(k));
    while (live->tail_bound() > tol) live->feed(nmp->at(Int(live->t)));
    return std::pair<Rat, Rat>(live->v - live->tail_bound(), live->v);
  };
  d.sign_minus = [live, nmp](const Rat& q) {
    for (;;) {
      if (q >= live->v) return -1;
      if (q <= live->v - live->tail_bound()) return 1;
      live->feed(nmp->at(Int(live->t)));
    }
  };
  return impl_truth(from, to, std::move(d));
}

inline Truth dyad_truth(const Instance& inst, RepId from, RepId to) {
  auto tr = truth_of<EcTruth>(inst.truth);
  Name nm = inst.name;
  if (tr->missing) {
    DyadSim sim;
    long long horizon = 2 * tr->missing->convert_to<long long>() + 16;
    for (long long s = 0; s < horizon; ++s) sim.feed(nm.at(Int(sim.t)));
    if (sim.next_e != *tr->missing)
      throw std::runtime_error("staircase failed to stall at the missing element");
    return impl_truth(from, to, RealDesc::from_exact(Real::rational(sim.v)));
  }
  auto live = std::make_shared<DyadSim>();
  auto nmp = std::make_shared<Name>(nm);
  RealDesc d;
  d.rational = false;
  d.bracket = [live, nmp](Nat k) {
    Rat tol = pow2(-static_cast<long long>(k));
    while (pow2(-(live->t + 1)) > tol) live->feed(nmp->at(Int(live->t)));
    return std::pair<Rat, Rat>(live->v - pow2(-(live->t + 1)), live->v);
  };
  d.sign_minus = [live, nmp](const Rat& q) {
    for (;;) {
      if (q > live->v) return -1;
      if (q < live->v - pow2(-(live->t + 1))) return 1;
      live->feed(nmp->at(Int(live->t)));
    }
  };
  return impl_truth(from, to, std::move(d));
}

inline Reduction red_ec1_le_imp_cflt_cfgt() {
  Reduction r;
  r.id = "ec1_le_imp_cflt_cfgt";
  r.f_id = "EC1";
  r.g_id = "IMPL:rho_cf_lt:rho_cf_gt";
  r.strong = false;
  r.anchor =
      "Weihrauch (1992), TR-92-050, continued fractions against completion";
  r.K = make_seq_machine("ec1<=impcfltcfgt:K",
                         [] { return std::make_unique<StairFeedK<BitStair>>(); });
  r.H = make_seq_machine("ec1<=impcfltcfgt:H", [] {
    return std::make_unique<StairProbeH<BitStair>>();
  });
  r.k_sem = [](const Instance& inst) {
    return bit_stair_truth(inst, RepId::RhoCfL, RepId::RhoCfR);
  };
  return r;
}

inline Reduction red_ec1_le_imp_cflt_cf() {
  Reduction r = red_ec1_le_imp_cflt_cfgt();
  r.id = "ec1_le_imp_cflt_cf";
  r.g_id = "IMPL:rho_cf_lt:rho_cf";
  r.K.label = "ec1<=impcfltcf:K";
  r.H = make_seq_machine("ec1<=impcfltcf:H",
                         [] { return std::make_unique<StairHullH<BitStair>>(); });
  r.k_sem = [](const Instance& inst) {
    return bit_stair_truth(inst, RepId::RhoCfL, RepId::RhoCf);
  };
  return r;
}

inline Reduction red_ec1_le_imp_rho_cfgt() {
  Reduction r;
  r.id = "ec1_le_imp_rho_cfgt";
  r.f_id = "EC1";
  r.g_id = "IMPL:rho:rho_cf_gt";
  r.strong = false;
  r.anchor =
      "Weihrauch (1992), TR-92-050, continued fractions against completion";
  r.K = make_seq_machine("ec1<=imprhocfgt:K",
                         [] { return std::make_unique<StairFeedK<DyadSim>>(); });
  r.H = make_seq_machine("ec1<=imprhocfgt:H",
                         [] { return std::make_unique<StairProbeH<DyadSim>>(); });
  r.k_sem = [](const Instance& inst) {
    return dyad_truth(inst, RepId::Rho, RepId::RhoCfR);
  };
  return r;
}

inline Reduction red_ec1_le_imp_rho_cf() {
  Reduction r = red_ec1_le_imp_rho_cfgt();
  r.id = "ec1_le_imp_rho_cf";
  r.g_id = "IMPL:rho:rho_cf";
  r.K.label = "ec1<=imprhocf:K";
  r.H = make_seq_machine("ec1<=imprhocf:H",
                         [] { return std::make_unique<StairHullH<DyadSim>>(); });
  r.k_sem = [](const Instance& inst) {
    return dyad_truth(inst, RepId::Rho, RepId::RhoCf);
  };
  return r;
}

}  // namespace detail

// Sequential composition: given inner: f <= g and outer: g <= h, produce
// f <= h.  The forward machines compose directly; the backward machine
// reconstructs whatever inputs the two stages are entitled to see.
inline Reduction chain_reductions(const Reduction& outer,
                                  const Reduction& inner,
                                  const std::string& id) {
  if (inner.g_id != outer.f_id)
    throw std::invalid_argument("chain_reductions: endpoint mismatch");
  Reduction r;
  r.id = id;
  r.f_id = inner.f_id;
  r.g_id = outer.g_id;
  r.strong = inner.strong && outer.strong;
  r.anchor = "composition of " + inner.id + " and " + outer.id;
  r.K = compose_machines(outer.K, inner.K, id + ":K");
  if (r.strong) {
    r.H = compose_machines(inner.H, outer.H, id + ":H");
  } else {
    Machine h1 = inner.H, h2 = outer.H, k1 = inner.K;
    bool s1 = inner.strong, s2 = outer.strong;
    Machine m;
    m.label = id + ":H";
    m.start = [h1, h2, k1, s1, s2](Reader rd, Fuel& fuel) -> ItemFn {
      auto shared = std::make_shared<Reader>(std::move(rd));
      Reader x = [shared](const Int& n) { return (*shared)(pos_pair(0, n)); };
      Reader c = [shared](const Int& n) { return (*shared)(pos_pair(1, n)); };
      auto memo_item = [](ItemFn f) {
        auto cache = std::make_shared<std::unordered_map<Int, Int, IntHash>>();
        return ItemFn([f = std::move(f), cache](const Int& pos) {
          auto it = cache->find(pos);
          if (it != cache->end()) return it->second;
          Int v = f(pos);
          cache->emplace(pos, v);
          return v;
        });
      };
      ItemFn mid;
      if (s2) {
        mid = h2.start(c, fuel);
      } else {
        ItemFn k1out = memo_item(k1.start(x, fuel));
        Reader paired = [k1out, c](const Int& p) {
          return p % 2 == 0 ? k1out(p / 2) : c((p - 1) / 2);
        };
        mid = h2.start(paired, fuel);
      }
      ItemFn gans = memo_item(std::move(mid));
      if (s1) return h1.start(Reader(gans), fuel);
      Reader paired2 = [x, gans](const Int& p) {
        return p % 2 == 0 ? x(p / 2) : gans((p - 1) / 2);
      };
      return h1.start(paired2, fuel);
    };
    r.H = m;
  }
  auto ks1 = inner.k_sem;
  auto ks2 = outer.k_sem;
  Machine k1 = inner.K;
  r.k_sem = [ks1, ks2, k1](const Instance& inst) -> Truth {
    Truth t1 = ks1(inst);
    auto fuel = std::make_shared<Fuel>(50'000'000);
    Name nm = inst.name;
    ItemFn raw = start_machine(
        k1, [nm](const Int& p) { return nm.at(p); }, *fuel);
    Name mid([raw, fuel](const Int& pos) { return raw(pos); });
    return ks2(Instance{mid, t1});
  };
  return r;
}

inline const std::vector<Reduction>& catalog() {
  static const std::vector<Reduction> entries = [] {
    std::vector<Reduction> v;
    v.push_back(detail::red_rat_sle_ec1());
    v.push_back(detail::red_ec1_sle_sort());
    v.push_back(detail::red_sort_le_rat());
    v.push_back(detail::red_lpo_le_ec1());
    v.push_back(detail::red_sep1_sle_cle2());
    v.push_back(detail::red_cle2_sle_sep1());
    v.push_back(detail::red_wkl_sle_c2n());
    v.push_back(detail::red_c2n_sle_wkl());
    v.push_back(detail::red_sep_sle_wkl());
    v.push_back(detail::red_wkl_sle_sep());
    v.push_back(detail::red_ec_le_lim());
    v.push_back(detail::red_lim_le_ec());
    v.push_back(detail::red_omni_to_choice("mlpo2_sle_cn2", 2, false));
    v.push_back(detail::red_choice_to_omni("cn2_sle_mlpo2", 2, false));
    v.push_back(detail::red_omni_to_choice("mlpo3_sle_cn3", 3, false));
    v.push_back(detail::red_choice_to_omni("cn3_sle_mlpo3", 3, false));
    v.push_back(detail::red_omni_to_choice("llpo2_sle_acc2", 2, true));
    v.push_back(detail::red_choice_to_omni("acc2_sle_llpo2", 2, true));
    v.push_back(detail::red_omni_to_choice("llpo4_sle_acc4", 4, true));
    v.push_back(detail::red_choice_to_omni("acc4_sle_llpo4", 4, true));
    v.push_back(detail::red_llpo_merge("llpo3_sle_llpo2", 3));
    v.push_back(detail::red_llpo_merge("llpo4_sle_llpo3", 4));
    v.push_back(detail::red_mlpo_pad("mlpo2_sle_mlpo3", 2));
    v.push_back(detail::red_mlpo_pad("mlpo3_sle_mlpo4", 3));
    v.push_back(detail::red_mlpo_drop("mlpo2_sle_lpo1", 1));
    v.push_back(detail::red_mlpo_drop("mlpo3_sle_lpo2", 2));
    v.push_back(detail::red_llpo2_sle_lpo1());
    v.push_back(detail::red_par_llpo_le_wkl());
    v.push_back(detail::red_wkl_le_par_llpo());
    v.push_back(detail::red_par_lpo_le_ec());
    v.push_back(detail::red_ec_le_par_lpo());
    v.push_back(detail::red_imp_prime_rho_le_ec());
    v.push_back(detail::red_imp_prime_gt_le_ec());
    v.push_back(detail::red_imp_lt_gt_sle_ec());
    v.push_back(detail::red_imp_lt_rho_sle_ec());
    v.push_back(detail::red_ec_sle_imp_prime_rho());
    v.push_back(detail::red_ec_sle_imp_prime_cfgt());
    v.push_back(detail::red_ec_sle_imp_lt_cfgt());
    v.push_back(detail::red_ec_sle_imp_lt_rho());
    v.push_back(detail::red_imp_rho10_le_cle2());
    v.push_back(detail::red_sep1_le_imp_rho10());
    v.push_back(chain_reductions(detail::red_cle2_sle_sep1(),
                                 detail::red_imp_rho10_le_cle2(),
                                 "imp_rho10_le_sep1"));
    v.push_back(detail::red_imp_rho_cf_le_ec1());
    v.push_back(detail::red_imp_rho_cfgt_le_ec1());
    v.push_back(detail::red_imp_cflt_cfgt_le_ec1());
    v.push_back(detail::red_imp_cflt_cf_le_ec1());
    v.push_back(detail::red_ec1_le_imp_cflt_cfgt());
    v.push_back(detail::red_ec1_le_imp_cflt_cf());
    v.push_back(detail::red_ec1_le_imp_rho_cfgt());
    v.push_back(detail::red_ec1_le_imp_rho_cf());
    return v;
  }();
  return entries;
}

inline const Reduction& reduction_by_id(const std::string& id) {
  for (const auto& r : catalog())
    if (r.id == id) return r;
  throw std::out_of_range("unknown reduction: " + id);
}

}  // namespace wlab
