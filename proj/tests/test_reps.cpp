#include <catch2/catch_amalgamated.hpp>

#include "wlab/reps.hpp"

using namespace wlab;

namespace {

TokFn toks(std::vector<Int> v) {
  return [v = std::move(v)](Nat i) { return v.at(i); };
}

TokFn name_toks(const Name& n) {
  return [n](Nat i) { return n.at(Int(i)); };
}

RealDesc desc(const Real& x) { return RealDesc::from_exact(x); }

std::vector<Real> sample_values() {
  return {
      Real::rational(Rat(0)),          Real::rational(Rat(1, 3)),
      Real::rational(Rat(1, 2)),       Real::rational(Rat(-7, 3)),
      Real::rational(Rat(355, 113)),   Real::rational(Rat(5)),
      Real::rational(Rat(-3, 8)),      Real::rational(Rat(99, 10)),
      Real::quadratic(1, 5, 2),        Real::quadratic(0, 2, 1),
      Real::quadratic(0, 3, 1),        Real::quadratic(-2, 7, 3),
      Real::quadratic(3, 19, 7),       Real::quadratic(0, 2, -1),
  };
}

}  // namespace

TEST_CASE("rho validator: bands are closed and indexed by position") {
  Real third = Real::rational(Rat(1, 3));
  Int c = least_code_of(Rat(1, 3));
  CHECK(validate_prefix(RepId::Rho, desc(third), toks({c, c, c}), 3));
  // |0.34 - 1/3| = 1/150: inside the band at position 7 (1/128), outside
  // at position 8 (1/256)
  Int c34 = least_code_of(Rat(34, 100));
  CHECK(validate_prefix(RepId::Rho, desc(third), toks({c34}), 1));
  std::vector<Int> deep(9, c);
  deep[7] = c34;
  CHECK(validate_prefix(RepId::Rho, desc(third), toks(deep), 8));
  deep[8] = c34;
  CHECK(!validate_prefix(RepId::Rho, desc(third), toks(deep), 9));
  // exact boundary |q - x| = 2^-i is allowed
  Real x = Real::rational(Rat(0));
  Int cb = least_code_of(Rat(1, 4));
  std::vector<Int> b = {least_code_of(Rat(0)), least_code_of(Rat(0)), cb};
  CHECK(validate_prefix(RepId::Rho, desc(x), toks(b), 3));
}

TEST_CASE("rho_10 validator: wrong digit commits are rejected") {
  Real third = Real::rational(Rat(1, 3));
  CHECK(validate_prefix(RepId::Rho10, desc(third), toks({zigzag(0), 3, 3}), 3));
  CHECK(!validate_prefix(RepId::Rho10, desc(third), toks({zigzag(0), 3, 4}), 3));
  CHECK(!validate_prefix(RepId::Rho10, desc(third), toks({zigzag(1)}), 1));
  // grid point: both neighbours are valid names of 1/2
  Real half = Real::rational(Rat(1, 2));
  CHECK(validate_prefix(RepId::Rho10, desc(half), toks({zigzag(0), 5, 0}), 3));
  CHECK(validate_prefix(RepId::Rho10, desc(half), toks({zigzag(0), 4, 9}), 3));
  CHECK(!validate_prefix(RepId::Rho10, desc(half), toks({zigzag(0), 3, 9}), 3));
  // digits out of range
  CHECK(!validate_prefix(RepId::Rho10, desc(half), toks({zigzag(0), 12}), 2));
}

TEST_CASE("rho_cf validator: canonical expansion, split variant, terminator") {
  Real x = Real::rational(Rat(355, 113));
  auto d = desc(x);
  CHECK(validate_prefix(RepId::RhoCf, d, toks({zigzag(3), 7, 16, 0, 0}), 5));
  CHECK(validate_prefix(RepId::RhoCf, d, toks({zigzag(3), 7, 15, 1, 0}), 5));
  CHECK(!validate_prefix(RepId::RhoCf, d, toks({zigzag(3), 7, 15, 0}), 4));
  CHECK(!validate_prefix(RepId::RhoCf, d, toks({zigzag(3), 8}), 2));
  CHECK(validate_prefix(RepId::RhoCf, d, toks({zigzag(3), 7}), 2));
  // tokens after the terminator must be padding zeros
  CHECK(!validate_prefix(RepId::RhoCf, d, toks({zigzag(3), 7, 16, 0, 3}), 5));

  Real golden = Real::quadratic(1, 5, 2);
  auto g = desc(golden);
  CHECK(validate_prefix(RepId::RhoCf, g, toks({zigzag(1), 1, 1, 1, 1, 1}), 6));
  CHECK(!validate_prefix(RepId::RhoCf, g, toks({zigzag(1), 1, 2}), 3));
  CHECK(!validate_prefix(RepId::RhoCf, g, toks({zigzag(1), 1, 0}), 3));

  // integers: [a0] terminated, or the variant [a0-1, 1]
  Real five = Real::rational(Rat(5));
  CHECK(validate_prefix(RepId::RhoCf, desc(five), toks({zigzag(5), 0, 0}), 3));
  CHECK(validate_prefix(RepId::RhoCf, desc(five), toks({zigzag(4), 1, 0}), 3));
  CHECK(!validate_prefix(RepId::RhoCf, desc(five), toks({zigzag(5), 1}), 2));
}

TEST_CASE("cut validators: strict sides") {
  Real half = Real::rational(Rat(1, 2));
  auto d = desc(half);
  Name bitsL = synth_cf_bits(half, true);
  Name bitsR = synth_cf_bits(half, false);
  CHECK(validate_prefix(RepId::RhoCfL, d, name_toks(bitsL), 40));
  CHECK(validate_prefix(RepId::RhoCfR, d, name_toks(bitsR), 40));
  // q at its own code is never strictly below itself
  Int c = least_code_of(Rat(1, 2));
  CHECK(bitsL.at(c) == 0);
  CHECK(bitsR.at(c) == 0);
  // flipping one bit is caught
  Nat flip = static_cast<Nat>(c.convert_to<Nat>());
  TokFn bad = [bitsL, flip](Nat i) -> Int {
    if (i == flip) return 1 - bitsL.at(Int(i));
    return bitsL.at(Int(i));
  };
  CHECK(!validate_prefix(RepId::RhoCfL, d, bad, flip + 1));

  // enumerations: a claim q_j < x with q_j = x is rejected
  TokFn claim = [c](Nat i) { return i == 0 ? c + 1 : Int(0); };
  CHECK(!validate_prefix(RepId::RhoL, d, claim, 2));
  Int c13 = least_code_of(Rat(1, 3));
  TokFn ok = [c13](Nat i) { return i == 0 ? c13 + 1 : Int(0); };
  CHECK(validate_prefix(RepId::RhoL, d, ok, 2));
  CHECK(!validate_prefix(RepId::RhoR, d, ok, 2));
}

TEST_CASE("synthesized names validate across representations and seeds") {
  for (const Real& x : sample_values()) {
    RealDesc d = desc(x);
    for (RepId rep : all_reps()) {
      for (Nat seed : {1u, 7u, 23u}) {
        Name n = synthesize(rep, x, seed);
        INFO(rep_name(rep) << " of " << x.str() << " seed " << seed);
        CHECK(validate_prefix(rep, d, name_toks(n), 30));
      }
    }
  }
}

TEST_CASE("synthesized names of nearby values cross-fail") {
  Real x = Real::rational(Rat(1, 3));
  Real y = Real::rational(Rat(1, 3) + Rat(1, 1024));
  Name ny = synthesize(RepId::Rho, y, 5);
  CHECK(!validate_prefix(RepId::Rho, desc(x), name_toks(ny), 30));
  Name cf = synthesize(RepId::RhoCf, y, 5);
  CHECK(!validate_prefix(RepId::RhoCf, desc(x), name_toks(cf), 30));
}

TEST_CASE("grid point low decimal form ends in nines") {
  Real half = Real::rational(Rat(1, 2));
  bool saw_low = false, saw_high = false;
  for (Nat seed = 0; seed < 12; ++seed) {
    Name n = synthesize(RepId::Rho10, half, seed);
    if (n.at(1) == 4) {
      saw_low = true;
      CHECK(n.at(2) == 9);
      CHECK(n.at(5) == 9);
    } else {
      saw_high = true;
      CHECK(n.at(1) == 5);
      CHECK(n.at(2) == 0);
    }
  }
  CHECK(saw_low);
  CHECK(saw_high);
}

TEST_CASE("cf to cut bits: golden ratio convergent sides") {
  Real golden = Real::quadratic(1, 5, 2);
  Name in = synthesize(RepId::RhoCf, golden, 3);
  Fuel fuel(100000);
  Name out = machine_output(tr_cf_to_bits(true), in, fuel);
  CHECK(out.at(least_code_of(Rat(8, 5))) == 1);    // 1.6 < phi
  CHECK(out.at(least_code_of(Rat(13, 8))) == 0);   // 1.625 > phi
  CHECK(out.at(least_code_of(Rat(1))) == 1);
  CHECK(out.at(least_code_of(Rat(2))) == 0);
  CHECK(validate_prefix(RepId::RhoCfL, desc(golden), name_toks(out), 30));

  Fuel fuel2(100000);
  Name outR = machine_output(tr_cf_to_bits(false), in, fuel2);
  CHECK(outR.at(least_code_of(Rat(8, 5))) == 0);
  CHECK(outR.at(least_code_of(Rat(13, 8))) == 1);
  CHECK(validate_prefix(RepId::RhoCfR, desc(golden), name_toks(outR), 30));
}

TEST_CASE("cf to cut bits: rational inputs settle by terminator") {
  Real x = Real::rational(Rat(355, 113));
  for (Nat seed : {0u, 1u}) {  // canonical and split variant
    Name in = synthesize(RepId::RhoCf, x, seed);
    Fuel fuel(100000);
    Name out = machine_output(tr_cf_to_bits(true), in, fuel);
    CHECK(out.at(least_code_of(Rat(355, 113))) == 0);
    CHECK(out.at(least_code_of(Rat(3))) == 1);
    CHECK(out.at(least_code_of(Rat(22, 7))) == 0);  // 22/7 > 355/113
    CHECK(validate_prefix(RepId::RhoCfL, desc(x), name_toks(out), 25));
  }
}

TEST_CASE("cut bits to decimal: grid point picks the side the cut dictates") {
  Real half = Real::rational(Rat(1, 2));
  // lt-side bits pin z < x <= z+1, low form: 0.4999...
  Name binL = synth_cf_bits(half, true);
  auto resL = run_prefix(tr_bits_to_10(true), binL, 6, 200000);
  REQUIRE(resL.status == RunStatus::Done);
  CHECK(resL.items == std::vector<Int>{zigzag(0), 4, 9, 9, 9, 9});
  // gt-side bits pin z <= x < z+1, high form: 0.5000...
  Name binR = synth_cf_bits(half, false);
  auto resR = run_prefix(tr_bits_to_10(false), binR, 6, 200000);
  REQUIRE(resR.status == RunStatus::Done);
  CHECK(resR.items == std::vector<Int>{zigzag(0), 5, 0, 0, 0, 0});
}

TEST_CASE("cut bits to decimal: negative values anchor correctly") {
  Real x = Real::rational(Rat(-5, 4));  // -1.25
  Name bin = synth_cf_bits(x, false);
  auto res = run_prefix(tr_bits_to_10(false), bin, 5, 200000);
  REQUIRE(res.status == RunStatus::Done);
  CHECK(res.items == std::vector<Int>{zigzag(-2), 7, 5, 0, 0});
}

TEST_CASE("decimal to rho: midpoints stay in band") {
  Real golden = Real::quadratic(1, 5, 2);
  Name dec = synthesize(RepId::Rho10, golden, 2);
  auto res = run_prefix(tr_10_to_rho(), dec, 20, 200000);
  REQUIRE(res.status == RunStatus::Done);
  CHECK(validate_prefix(RepId::Rho, desc(golden), toks(res.items), 20));
}

TEST_CASE("rho to enumerations: only certified elements, zero appears early") {
  Real golden = Real::quadratic(1, 5, 2);
  Name rho = synthesize(RepId::Rho, golden, 9);
  auto res = run_prefix(tr_rho_to_enum(true), rho, 40, 500000);
  REQUIRE(res.status == RunStatus::Done);
  bool saw_zero_code = false;
  for (auto& v : res.items) {
    if (auto e = enum_decode(v)) {
      CHECK(golden.cmp(q_at(*e)) > 0);
      if (*e == 0) saw_zero_code = true;
    }
  }
  CHECK(saw_zero_code);
  CHECK(validate_prefix(RepId::RhoL, desc(golden), toks(res.items), 40));

  auto resR = run_prefix(tr_rho_to_enum(false), rho, 40, 500000);
  REQUIRE(resR.status == RunStatus::Done);
  CHECK(validate_prefix(RepId::RhoR, desc(golden), toks(resR.items), 40));
}

TEST_CASE("enumeration to naive limit: running extremum converges") {
  Real golden = Real::quadratic(1, 5, 2);
  Name en = synthesize(RepId::RhoL, golden, 4);
  auto res = run_prefix(tr_enum_to_prime(true), en, 340, 2000000);
  REQUIRE(res.status == RunStatus::Done);
  Rat last = q_at(res.items.back());
  CHECK(last >= Rat(8, 5));
  CHECK(golden.cmp(last) > 0);
  // running max is monotone
  Rat prev = q_at(res.items[0]);
  for (auto& t : res.items) {
    Rat v = q_at(t);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("translator path search") {
  auto p = translator_path(RepId::RhoCf, RepId::Rho);
  REQUIRE(p.has_value());
  CHECK(p->size() == 3);
  auto q = translator_path(RepId::RhoCf, RepId::RhoPrime);
  REQUIRE(q.has_value());
  CHECK(q->size() == 5);
  CHECK(!translator_path(RepId::Rho, RepId::RhoCf).has_value());
  CHECK(!translator_path(RepId::RhoPrime, RepId::Rho).has_value());
  CHECK(!translator_path(RepId::Rho10, RepId::RhoCfL).has_value());
  auto same = translator_path(RepId::Rho, RepId::Rho);
  REQUIRE(same.has_value());
  CHECK(same->empty());
}

TEST_CASE("chained translation: continued fraction to rho") {
  Real x = Real::quadratic(0, 2, 1);
  Name in = synthesize(RepId::RhoCf, x, 1);
  auto path = translator_path(RepId::RhoCf, RepId::Rho);
  REQUIRE(path.has_value());
  Machine chain = translator_chain(*path);
  auto res = run_prefix(chain, in, 15, 2000000);
  REQUIRE(res.status == RunStatus::Done);
  CHECK(validate_prefix(RepId::Rho, desc(x), toks(res.items), 15));
}

TEST_CASE("translators over many values and seeds stay valid") {
  Rng rng(77);
  for (const Real& x : sample_values()) {
    RealDesc d = desc(x);
    for (const auto& arrow : translator_arrows()) {
      Nat seed = rng.below(1000);
      Name in = synthesize(arrow.from, x, seed);
      Nat depth = (arrow.to == RepId::RhoPrime || arrow.to == RepId::RhoL ||
                   arrow.to == RepId::RhoR)
                      ? 30
                      : 12;
      auto res = run_prefix(arrow.machine, in, depth, 2000000);
      INFO(arrow.machine.label << " on " << x.str());
      REQUIRE(res.status == RunStatus::Done);
      CHECK(validate_prefix(arrow.to, d, toks(res.items), depth));
    }
  }
}

TEST_CASE("limit-form descriptors synthesize and validate") {
  // sqrt(2) described only through brackets and comparisons
  Real s2 = Real::quadratic(0, 2, 1);
  RealDesc lim;
  lim.rational = false;
  lim.sign_minus = [s2](const Rat& q) { return s2.cmp(q); };
  lim.bracket = [s2](Nat k) {
    return std::make_pair(dyadic_below(s2, k + 1), dyadic_above(s2, k + 1));
  };
  RealDesc truth = RealDesc::from_exact(s2);
  for (RepId rep : all_reps()) {
    Name n = name_from_desc(rep, lim, 3);
    INFO(rep_name(rep));
    CHECK(validate_prefix(rep, truth, name_toks(n), 18));
  }
}
