#pragma once
// Baire-space machinery: lazy names (total maps N -> N), pairing and tuple
// codings, and the machine model.
//
// Machines are deterministic transducers consuming a positional reader and
// producing a lazy output sequence.  Reads are random-access: the fuel
// meter charges one unit per *fresh* input position (repeat reads of a
// cached position are free) and one unit per unit of internal work.  This
// keeps index-coded inputs usable: several constructions read single cells
// at positions the size of word codes, which no sequential scan could
// reach within any reasonable budget.
//
// Token values and positions are arbitrary-precision: code-valued tokens
// (word codes, rational codes of deep dyadics) overflow 64 bits routinely.

#include <boost/functional/hash.hpp>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "exact.hpp"

namespace wlab {

struct IntHash {
  std::size_t operator()(const Int& v) const { return boost::hash<Int>{}(v); }
};

// ----- pairing and coding conventions -------------------------------------

// Cantor pairing <n,k> = (n+k)(n+k+1)/2 + k
inline Int pair_code(const Int& n, const Int& k) {
  Int s = n + k;
  return s * (s + 1) / 2 + k;
}

inline std::pair<Int, Int> unpair_code(const Int& t) {
  Int w = (isqrt(8 * t + 1) - 1) / 2;
  while (w * (w + 1) / 2 > t) --w;
  while ((w + 1) * (w + 2) / 2 <= t) ++w;
  Int k = t - w * (w + 1) / 2;
  return {w - k, k};
}

// Binary words coded by length-then-value: code(w) = 2^|w| - 1 + val(w),
// val reading w[0] as the most significant bit.  code(empty) = 0.
inline Int word_code(const std::vector<int>& w) {
  Int v = 0;
  for (int b : w) v = 2 * v + b;
  return ipow(2, w.size()) - 1 + v;
}

inline std::vector<int> word_decode(Int c) {
  unsigned len = msb(c + 1);
  Int v = c - (ipow(2, len) - 1);
  std::vector<int> w(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    w[len - 1 - i] = static_cast<int>(v % 2);
    v /= 2;
  }
  return w;
}

// Position conventions for structured names.
inline Int pos_pair(int side, const Int& n) { return 2 * n + side; }
// Finite n-tuple, component i in [0, n), index j.
inline Int pos_tuple(Nat n, Nat i, const Int& j) { return Int(n) * j + Int(i); }
// Countable tuple, component i, index j.
inline Int pos_omega(const Int& i, const Int& j) { return pair_code(i, j); }

// Enumeration convention for sets of naturals: a token v > 0 enumerates
// element v - 1, a token 0 is a dummy.
inline std::optional<Int> enum_decode(const Int& v) {
  if (v == 0) return std::nullopt;
  return v - 1;
}

// ----- names ----------------------------------------------------------------

// A name is a total lazy sequence of naturals with a shared memo table.
class Name {
 public:
  Name() = default;
  explicit Name(std::function<Int(const Int&)> gen)
      : impl_(std::make_shared<Impl>(std::move(gen))) {}

  const Int& at(const Int& pos) const {
    auto& memo = impl_->memo;
    auto it = memo.find(pos);
    if (it != memo.end()) return it->second;
    Int v = impl_->gen(pos);
    return memo.emplace(pos, std::move(v)).first->second;
  }

  bool valid() const { return impl_ != nullptr; }

 private:
  struct Impl {
    explicit Impl(std::function<Int(const Int&)> g) : gen(std::move(g)) {}
    std::function<Int(const Int&)> gen;
    std::unordered_map<Int, Int, IntHash> memo;
  };
  std::shared_ptr<Impl> impl_;
};

inline Name name_pair(const Name& a, const Name& b) {
  return Name([a, b](const Int& pos) {
    return pos % 2 == 0 ? a.at(pos / 2) : b.at((pos - 1) / 2);
  });
}

inline Name name_left(const Name& p) {
  return Name([p](const Int& n) { return p.at(2 * n); });
}

inline Name name_right(const Name& p) {
  return Name([p](const Int& n) { return p.at(2 * n + 1); });
}

inline Name name_tuple(const std::vector<Name>& parts) {
  Nat n = parts.size();
  return Name([parts, n](const Int& pos) {
    Nat i = static_cast<Nat>(pos % n);
    return parts[i].at(pos / n);
  });
}

inline Name name_tuple_component(const Name& t, Nat n, Nat i) {
  return Name([t, n, i](const Int& j) { return t.at(pos_tuple(n, i, j)); });
}

// Countable tuple assembled from a component factory; components are
// created on demand and cached.
inline Name name_omega_tuple(std::function<Name(Nat)> component) {
  auto cache = std::make_shared<std::unordered_map<Nat, Name>>();
  return Name([component = std::move(component), cache](const Int& pos) {
    auto [i, j] = unpair_code(pos);
    Nat ii = i.convert_to<Nat>();
    auto it = cache->find(ii);
    if (it == cache->end()) it = cache->emplace(ii, component(ii)).first;
    return it->second.at(j);
  });
}

inline Name name_omega_component(const Name& t, const Int& i) {
  return Name([t, i](const Int& j) { return t.at(pos_omega(i, j)); });
}

inline Name name_const(const Int& v) {
  return Name([v](const Int&) { return v; });
}

// Finite prefix followed by a constant tail.
inline Name name_prefix_then(std::vector<Int> prefix, const Int& tail) {
  return Name([prefix = std::move(prefix), tail](const Int& pos) {
    if (pos < Int(prefix.size())) return prefix[pos.convert_to<std::size_t>()];
    return tail;
  });
}

// ----- machines -------------------------------------------------------------

struct NeedMoreInput {};
struct FuelExhausted {};

class Fuel {
 public:
  explicit Fuel(long long budget) : left_(budget) {}
  void burn(long long n = 1) {
    used_ += n;
    left_ -= n;
    if (left_ < 0) throw FuelExhausted{};
  }
  long long used() const { return used_; }
  long long left() const { return left_; }

 private:
  long long left_;
  long long used_ = 0;
};

using Reader = std::function<Int(const Int&)>;
using ItemFn = std::function<Int(const Int&)>;

// A machine turns a charged input reader into a lazy output sequence; all
// per-run state lives in the closure returned by start.  Contract: the
// reader passed to start already meters fuel, and implementations burn
// one unit per unit of internal work (helpers below handle the common
// patterns).  Machines must be deterministic and their outputs monotone
// in the input prefix: longer input can only extend what shorter input
// produced.
struct Machine {
  std::string label;
  std::function<ItemFn(Reader, Fuel&)> start;
};

// Wrap a raw reader so each fresh position costs one fuel unit.
inline Reader charge_reads(Reader base, Fuel& fuel) {
  auto seen = std::make_shared<std::unordered_set<Int, IntHash>>();
  return [base = std::move(base), &fuel, seen](const Int& pos) {
    if (!seen->count(pos)) {
      fuel.burn();
      seen->insert(pos);
    }
    return base(pos);
  };
}

inline ItemFn start_machine(const Machine& m, Reader raw_input, Fuel& fuel) {
  return m.start(charge_reads(std::move(raw_input), fuel), fuel);
}

// Expose a machine's output over a full input name as a lazy name.  The
// fuel meter must outlive the returned name.
inline Name machine_output(const Machine& m, const Name& input, Fuel& fuel) {
  auto item = start_machine(m, [input](const Int& p) { return input.at(p); }, fuel);
  return Name([item](const Int& pos) { return item(pos); });
}

enum class RunStatus { Done, NeedInput, FuelOut };

struct RunResult {
  std::vector<Int> items;
  RunStatus status = RunStatus::Done;
  long long fuel_used = 0;
};

// Drive a machine for the first `count` output items.  If in_prefix is
// given, only that many input positions exist (suspension beyond them).
inline RunResult run_prefix(const Machine& m, const Name& input, Nat count,
                            long long budget,
                            std::optional<Int> in_prefix = std::nullopt) {
  Fuel fuel(budget);
  Reader raw = [input, in_prefix](const Int& pos) -> Int {
    if (in_prefix && pos >= *in_prefix) throw NeedMoreInput{};
    return input.at(pos);
  };
  RunResult res;
  try {
    ItemFn item = start_machine(m, raw, fuel);
    for (Nat k = 0; k < count; ++k) res.items.push_back(item(Int(k)));
  } catch (const NeedMoreInput&) {
    res.status = RunStatus::NeedInput;
  } catch (const FuelExhausted&) {
    res.status = RunStatus::FuelOut;
  }
  res.fuel_used = fuel.used();
  return res;
}

// Sequential authoring helper: a state object advances in bounded steps,
// appending output items as they become ready.  Reads go through the
// charged reader; each step burns one unit.
struct SeqState {
  virtual ~SeqState() = default;
  virtual void step(Reader& in, Fuel& fuel, std::vector<Int>& out) = 0;
};

inline Machine make_seq_machine(std::string label,
                                std::function<std::unique_ptr<SeqState>()> make) {
  Machine m;
  m.label = std::move(label);
  m.start = [make = std::move(make)](Reader in, Fuel& fuel) -> ItemFn {
    struct Run {
      std::unique_ptr<SeqState> st;
      std::vector<Int> out;
      Reader in;
    };
    auto run = std::make_shared<Run>();
    run->st = make();
    run->in = std::move(in);
    return [run, &fuel](const Int& pos) -> Int {
      if (pos > Int(2'000'000'000)) throw FuelExhausted{};
      std::size_t p = pos.convert_to<std::size_t>();
      while (run->out.size() <= p) {
        fuel.burn();
        run->st->step(run->in, fuel, run->out);
      }
      return run->out[p];
    };
  };
  return m;
}

// Positional authoring helper for machines whose output cell is a direct
// function of the input; one unit of work is charged per computed cell.
inline Machine make_cellwise_machine(
    std::string label,
    std::function<Int(Reader&, Fuel&, const Int&)> cell) {
  Machine m;
  m.label = std::move(label);
  m.start = [cell = std::move(cell)](Reader in, Fuel& fuel) -> ItemFn {
    auto rd = std::make_shared<Reader>(std::move(in));
    return [rd, &fuel, cell](const Int& pos) -> Int {
      fuel.burn();
      return cell(*rd, fuel, pos);
    };
  };
  return m;
}

// Identity transducer.
inline Machine machine_id(std::string label = "id") {
  return make_cellwise_machine(std::move(label),
                               [](Reader& in, Fuel&, const Int& pos) { return in(pos); });
}

// outer after inner; the intermediate sequence is memoized so the outer
// machine's repeat reads do not re-run the inner machine.
inline Machine compose_machines(const Machine& outer, const Machine& inner,
                                std::string label = "") {
  Machine m;
  m.label = label.empty() ? outer.label + "*" + inner.label : std::move(label);
  m.start = [outer, inner](Reader in, Fuel& fuel) -> ItemFn {
    ItemFn mid = inner.start(std::move(in), fuel);
    auto memo = std::make_shared<std::unordered_map<Int, Int, IntHash>>();
    Reader mid_rd = [mid, memo](const Int& pos) -> Int {
      auto it = memo->find(pos);
      if (it != memo->end()) return it->second;
      Int v = mid(pos);
      return memo->emplace(pos, std::move(v)).first->second;
    };
    return outer.start(charge_reads(std::move(mid_rd), fuel), fuel);
  };
  return m;
}

// Product transducer on paired inputs/outputs: runs a on the even
// (left) half and b on the odd (right) half.
inline Machine product_machines(const Machine& a, const Machine& b,
                                std::string label = "") {
  Machine m;
  m.label = label.empty() ? a.label + "x" + b.label : std::move(label);
  m.start = [a, b](Reader in, Fuel& fuel) -> ItemFn {
    auto rd = std::make_shared<Reader>(std::move(in));
    ItemFn left = a.start([rd](const Int& n) { return (*rd)(2 * n); }, fuel);
    ItemFn right = b.start([rd](const Int& n) { return (*rd)(2 * n + 1); }, fuel);
    return [left, right](const Int& pos) -> Int {
      return pos % 2 == 0 ? left(pos / 2) : right((pos - 1) / 2);
    };
  };
  return m;
}

}  // namespace wlab
