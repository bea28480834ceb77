#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include <wlab/reductions.hpp>

using namespace wlab;

namespace {

struct TrialStats {
  int ok = 0;
  int undecided = 0;
};

// One full round of the reduction game, mirroring what the verification
// harness does: transform the instance, audit the transformed name against
// the witness truth, answer with the target's oracle, translate the answer
// back, and check it against the source instance.
TrialStats run_trials(const Reduction& r, int trials, Nat depth = 40,
                      long long fuel_budget = 2'000'000) {
  Problem f = *problem_by_id(r.f_id);
  Problem g = *problem_by_id(r.g_id);
  TrialStats stats;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t seed = detail::submix(0x7ab5u + static_cast<std::uint64_t>(t), 0x51u);
    CAPTURE(r.id, t, seed);
    Instance inst = f.generate(seed);
    REQUIRE(f.in_domain(inst.truth));
    Truth gt = r.k_sem(inst);
    REQUIRE(g.in_domain(gt));
    Fuel fk(fuel_budget);
    Name kout = machine_output(r.K, inst.name, fk);
    std::vector<Int> kv;
    for (Nat i = 0; i < depth; ++i) kv.push_back(kout.at(Int(i)));
    TokFn ktok = [&kv](Nat i) { return kv[i]; };
    REQUIRE(g.validate_input(gt, ktok, depth));
    Name ans = g.oracle(gt, detail::submix(seed, 99));
    Name hin = r.strong ? ans : name_pair(inst.name, ans);
    Fuel fh(fuel_budget);
    Name hout = machine_output(r.H, hin, fh);
    std::vector<Int> hv;
    for (Nat i = 0; i < depth; ++i) hv.push_back(hout.at(Int(i)));
    TokFn htok = [&hv](Nat i) { return hv[i]; };
    REQUIRE(f.validate_output(inst.truth, htok, depth));
    Check c = f.check_solution(inst.truth, htok, depth);
    REQUIRE(c != Check::Bad);
    if (c == Check::Ok)
      ++stats.ok;
    else
      ++stats.undecided;
  }
  return stats;
}

TrialStats run_trials(const std::string& rid, int trials) {
  return run_trials(reduction_by_id(rid), trials);
}

}  // namespace

TEST_CASE("catalog entries are well formed") {
  std::set<std::string> ids;
  for (const auto& r : catalog()) {
    CAPTURE(r.id);
    REQUIRE(ids.insert(r.id).second);
    REQUIRE(problem_by_id(r.f_id).has_value());
    REQUIRE(problem_by_id(r.g_id).has_value());
    REQUIRE_FALSE(r.anchor.empty());
    REQUIRE(r.K.start);
    REQUIRE(r.H.start);
    REQUIRE(r.k_sem);
  }
  REQUIRE(catalog().size() == 50);
  REQUIRE(reduction_by_id("rat_sle_ec1").strong);
  REQUIRE_FALSE(reduction_by_id("sort_le_rat").strong);
  REQUIRE(reduction_by_id("imp_lt_rho_sle_ec").strong);
  REQUIRE(reduction_by_id("imp_rho10_le_sep1").strong);
  REQUIRE(reduction_by_id("imp_rho10_le_sep1").f_id == "IMPL:rho:rho_10");
  REQUIRE(reduction_by_id("imp_rho10_le_sep1").g_id == "SEP1");
  REQUIRE_FALSE(reduction_by_id("sep1_le_imp_rho10").strong);
  REQUIRE_FALSE(reduction_by_id("ec1_le_imp_rho_cf").strong);
  REQUIRE_THROWS_AS(reduction_by_id("nope"), std::out_of_range);
}

TEST_CASE("falsification staircase withholds exactly the value's code") {
  Name nm = name_const(least_code_of(Rat(1, 2)));
  auto truth = detail::rat_stair_truth(nm, Rat(1, 2));
  auto t = truth_of<EcTruth>(truth);
  REQUIRE(t->missing.has_value());
  REQUIRE(q_at(*t->missing) == Rat(1, 2));
  REQUIRE_FALSE(t->member(*t->missing));
  REQUIRE(t->member(*t->missing + 1));

  // an irrational input never stabilises, so nothing is withheld
  auto rt = *problem_by_id("RAT");
  Instance irr;
  bool found = false;
  for (std::uint64_t s = 0; s < 64 && !found; ++s) {
    irr = rt.generate(s);
    found = !truth_of<RatTruth>(irr.truth)->value.has_value();
  }
  REQUIRE(found);
  auto co = truth_of<EcTruth>(detail::rat_stair_truth(irr.name, std::nullopt));
  REQUIRE_FALSE(co->missing.has_value());
  REQUIRE(co->member(Int(0)));
}

TEST_CASE("staircase forward machine speaks everything else") {
  auto rt = *problem_by_id("RAT");
  for (std::uint64_t s = 0; s < 24; ++s) {
    Instance inst = rt.generate(s);
    auto truth = detail::rat_stair_truth(
        inst.name, truth_of<RatTruth>(inst.truth)->value);
    auto et = truth_of<EcTruth>(truth);
    Fuel fuel(2'000'000);
    Name out = machine_output(reduction_by_id("rat_sle_ec1").K, inst.name, fuel);
    std::set<Int> spoken;
    for (Nat i = 0; i < 60; ++i) {
      Int v = out.at(Int(i));
      REQUIRE(v > 0);
      if (et->missing) REQUIRE(v - 1 != *et->missing);
      REQUIRE(spoken.insert(v - 1).second);
    }
  }
}

TEST_CASE("sorting recovers a co-singleton enumeration") {
  auto s = run_trials("ec1_sle_sort", 16);
  REQUIRE(s.ok == 16);
}

TEST_CASE("rationals decide sorting") {
  auto s = run_trials("sort_le_rat", 12);
  REQUIRE(s.ok == 12);
}

TEST_CASE("co-singleton enumeration decides a rational") {
  auto s = run_trials("rat_sle_ec1", 16);
  REQUIRE(s.ok + s.undecided == 16);
  REQUIRE(s.ok >= 8);
}

TEST_CASE("one-row omniscience from co-singleton enumeration") {
  auto s = run_trials("lpo_le_ec1", 16);
  REQUIRE(s.ok == 16);
}

TEST_CASE("separation against two-point choice, both ways") {
  REQUIRE(run_trials("sep1_sle_cle2", 12).ok == 12);
  REQUIRE(run_trials("cle2_sle_sep1", 12).ok == 12);
}

TEST_CASE("tree choice against compact choice, both ways") {
  REQUIRE(run_trials("wkl_sle_c2n", 12).ok == 12);
  REQUIRE(run_trials("c2n_sle_wkl", 12).ok == 12);
}

TEST_CASE("separation against tree choice, both ways") {
  REQUIRE(run_trials("sep_sle_wkl", 12).ok == 12);
  REQUIRE(run_trials("wkl_sle_sep", 12).ok == 12);
}

TEST_CASE("enumeration against limits, both ways") {
  REQUIRE(run_trials("ec_le_lim", 12).ok == 12);
  REQUIRE(run_trials("lim_le_ec", 12).ok == 12);
}

TEST_CASE("finite choice against omniscience rows") {
  REQUIRE(run_trials("mlpo2_sle_cn2", 12).ok == 12);
  REQUIRE(run_trials("cn2_sle_mlpo2", 12).ok == 12);
  REQUIRE(run_trials("mlpo3_sle_cn3", 12).ok == 12);
  REQUIRE(run_trials("cn3_sle_mlpo3", 12).ok == 12);
}

TEST_CASE("all-or-co-unique choice against weak omniscience") {
  REQUIRE(run_trials("llpo2_sle_acc2", 12).ok == 12);
  REQUIRE(run_trials("acc2_sle_llpo2", 12).ok == 12);
  REQUIRE(run_trials("llpo4_sle_acc4", 12).ok == 12);
  REQUIRE(run_trials("acc4_sle_llpo4", 12).ok == 12);
}

TEST_CASE("row merging lowers the arity") {
  REQUIRE(run_trials("llpo3_sle_llpo2", 16).ok == 16);
  REQUIRE(run_trials("llpo4_sle_llpo3", 16).ok == 16);
}

TEST_CASE("merge witness interleaves the last two rows") {
  OmniTruth base;
  base.arity = 3;
  base.seq = [](Nat i, Nat j) { return Int(i == 1 && j == 5 ? 7 : 0); };
  base.first_nz = {std::nullopt, 5, std::nullopt};
  Instance inst{name_const(Int(0)), make_truth(std::move(base))};
  auto merged = truth_of<OmniTruth>(
      reduction_by_id("llpo3_sle_llpo2").k_sem(inst));
  REQUIRE(merged->arity == 2);
  REQUIRE_FALSE(merged->first_nz[0].has_value());
  REQUIRE(merged->first_nz[1] == Nat(10));
  REQUIRE(merged->seq(1, 10) == 7);
  REQUIRE(merged->seq(1, 11) == 0);
}

TEST_CASE("padding and dropping rows") {
  REQUIRE(run_trials("mlpo2_sle_mlpo3", 12).ok == 12);
  REQUIRE(run_trials("mlpo3_sle_mlpo4", 12).ok == 12);
  REQUIRE(run_trials("mlpo2_sle_lpo1", 16).ok == 16);
  REQUIRE(run_trials("mlpo3_sle_lpo2", 16).ok == 16);
  REQUIRE(run_trials("llpo2_sle_lpo1", 16).ok == 16);
}

TEST_CASE("parallel weak omniscience against tree choice, both ways") {
  REQUIRE(run_trials("par_llpo_le_wkl", 10).ok == 10);
  REQUIRE(run_trials("wkl_le_par_llpo", 10).ok == 10);
}

TEST_CASE("parallel one-row omniscience against enumeration, both ways") {
  REQUIRE(run_trials("par_lpo_le_ec", 10).ok == 10);
  REQUIRE(run_trials("ec_le_par_lpo", 10).ok == 10);
}

TEST_CASE("chained strong reductions compose") {
  auto chained = chain_reductions(reduction_by_id("llpo3_sle_llpo2"),
                                  reduction_by_id("llpo4_sle_llpo3"),
                                  "llpo4_to_llpo2");
  REQUIRE(chained.f_id == "LLPOn:4");
  REQUIRE(chained.g_id == "LLPOn:2");
  REQUIRE(chained.strong);
  REQUIRE(run_trials(chained, 12).ok == 12);
}

TEST_CASE("chained weak reductions compose") {
  auto chained = chain_reductions(reduction_by_id("lim_le_ec"),
                                  reduction_by_id("ec_le_lim"),
                                  "ec_roundtrip");
  REQUIRE(chained.f_id == "EC");
  REQUIRE(chained.g_id == "EC");
  REQUIRE_FALSE(chained.strong);
  REQUIRE(run_trials(chained, 10).ok == 10);
  REQUIRE_THROWS_AS(chain_reductions(reduction_by_id("ec_le_lim"),
                                     reduction_by_id("lpo_le_ec1"), "bad"),
                    std::invalid_argument);
}

TEST_CASE("approximation names translate through enumeration") {
  REQUIRE(run_trials("imp_prime_rho_le_ec", 12).ok == 12);
  REQUIRE(run_trials("imp_prime_gt_le_ec", 12).ok == 12);
  REQUIRE(run_trials("imp_lt_gt_sle_ec", 14).ok == 14);
  REQUIRE(run_trials("imp_lt_rho_sle_ec", 14).ok == 14);
}

TEST_CASE("ternary encoding of eventually periodic sets") {
  REQUIRE(detail::cantor_third({1, 0, 1}, {1, 0}) == Rat(83, 108));
  REQUIRE(detail::cantor_third({0, 1}, {}) == Rat(2, 9));
  REQUIRE(detail::cantor_third({}, {1}) == Rat(1));
  REQUIRE(detail::cantor_third({}, {}) == Rat(0));
  REQUIRE(detail::cantor_third({1}, {0, 0}) == Rat(2, 3));
}

TEST_CASE("enumeration rebuilds real names in four flavours") {
  REQUIRE(run_trials("ec_sle_imp_prime_rho", 12).ok == 12);
  REQUIRE(run_trials("ec_sle_imp_prime_cfgt", 12).ok == 12);
  REQUIRE(run_trials("ec_sle_imp_lt_cfgt", 12).ok == 12);
  REQUIRE(run_trials("ec_sle_imp_lt_rho", 12).ok == 12);
}

TEST_CASE("decimal encodings of a value form at most two paths") {
  auto quarter = detail::dec_streams(Real::rational(Rat(5, 4)));
  REQUIRE(quarter.size() == 2);
  REQUIRE(quarter[0].zz == 2);
  REQUIRE(quarter[0].digit(0) == 2);
  REQUIRE(quarter[0].digit(1) == 5);
  REQUIRE(quarter[0].digit(2) == 0);
  REQUIRE(quarter[1].zz == 2);
  REQUIRE(quarter[1].digit(0) == 2);
  REQUIRE(quarter[1].digit(1) == 4);
  REQUIRE(quarter[1].digit(2) == 9);
  // bit packing: ones run, separator, then four bits per digit
  REQUIRE(quarter[0].bit(Int(0)) == 1);
  REQUIRE(quarter[0].bit(Int(2)) == 0);
  REQUIRE(quarter[0].bit(Int(5)) == 1);  // 2 = 0010
  REQUIRE(quarter[0].bit(Int(6)) == 0);

  auto integer = detail::dec_streams(Real::rational(Rat(3)));
  REQUIRE(integer.size() == 2);
  REQUIRE(integer[0].zz == 6);
  REQUIRE(integer[0].digit(0) == 0);
  REQUIRE(integer[1].zz == 4);
  REQUIRE(integer[1].digit(0) == 9);
  REQUIRE(integer[1].digit(7) == 9);

  auto surd = detail::dec_streams(Real::quadratic(Int(1), Int(2), Int(1)));
  REQUIRE(surd.size() == 1);
  REQUIRE(surd[0].digit(0) == 4);  // 1 + sqrt(2) = 2.414...
  REQUIRE(surd[0].digit(1) == 1);
}

TEST_CASE("decimal translation reduces to two-point choice") {
  REQUIRE(run_trials("imp_rho10_le_cle2", 12).ok == 12);
}

TEST_CASE("separation reduces to decimal translation") {
  REQUIRE(run_trials("sep1_le_imp_rho10", 12).ok == 12);
}

TEST_CASE("decimal staircase stalls on the free element") {
  auto sp = *problem_by_id("SEP1");
  const Reduction& r = reduction_by_id("sep1_le_imp_rho10");
  int found = 0;
  for (std::uint64_t s = 0; s < 64 && found < 3; ++s) {
    Instance inst = sp.generate(s);
    if (truth_of<SepTruth>(inst.truth)->unassigned.empty()) continue;
    ++found;
    Truth gt = r.k_sem(inst);
    auto it = truth_of<ImplTruth>(gt);
    REQUIRE(it->x.exact.has_value());
    REQUIRE(it->x.exact->is_rational());
    Fuel fk(2'000'000);
    Name kout = machine_output(r.K, inst.name, fk);
    std::vector<Int> kv;
    for (Nat i = 0; i < 20; ++i) kv.push_back(kout.at(Int(i)));
    TokFn ktok = [&kv](Nat i) { return kv[i]; };
    REQUIRE(validate_prefix(RepId::Rho, it->x, ktok, 20));
  }
  REQUIRE(found == 3);
}

TEST_CASE("decimal translation reaches separation by chaining") {
  REQUIRE(run_trials("imp_rho10_le_sep1", 10).ok == 10);
}

TEST_CASE("continued fraction names from completion") {
  REQUIRE(run_trials("imp_rho_cf_le_ec1", 10).ok == 10);
  REQUIRE(run_trials("imp_rho_cfgt_le_ec1", 10).ok == 10);
  REQUIRE(run_trials("imp_cflt_cfgt_le_ec1", 10).ok == 10);
  REQUIRE(run_trials("imp_cflt_cf_le_ec1", 10).ok == 10);
}

TEST_CASE("peeled quotients match the canonical expansion") {
  Real x = Real::rational(Rat(10, 7));
  Instance inst{synthesize(RepId::Rho, x, 5),
                detail::impl_truth(RepId::Rho, RepId::RhoCf,
                                   RealDesc::from_exact(x))};
  const Reduction& r = reduction_by_id("imp_rho_cf_le_ec1");
  Truth gt = r.k_sem(inst);
  auto g = *problem_by_id("EC1");
  Name ans = g.oracle(gt, 7);
  Fuel fh(2'000'000);
  Name hout = machine_output(r.H, name_pair(inst.name, ans), fh);
  // 10/7 = [1; 2, 3], anchored with a zigzag head and closed by the
  // terminator plus padding
  std::vector<Int> want{Int(2), Int(2), Int(3), Int(0), Int(0), Int(0),
                        Int(0), Int(0), Int(0), Int(0), Int(0), Int(0)};
  for (Nat i = 0; i < want.size(); ++i) {
    CAPTURE(i);
    REQUIRE(hout.at(Int(i)) == want[i]);
  }
}

TEST_CASE("completion reduces to real-name translations") {
  REQUIRE(run_trials("ec1_le_imp_cflt_cfgt", 12).ok == 12);
  REQUIRE(run_trials("ec1_le_imp_cflt_cf", 12).ok == 12);
  REQUIRE(run_trials("ec1_le_imp_rho_cfgt", 12).ok == 12);
  REQUIRE(run_trials("ec1_le_imp_rho_cf", 12).ok == 12);
}

TEST_CASE("bit staircase stalls exactly at the withheld element") {
  Name nm([](const Int& pos) {
    if (pos % 2 != 0) return Int(0);
    Int e = pos / 2;
    return e == 3 ? Int(0) : Int(e + 1);
  });
  detail::BitStair sim;
  std::vector<Int> bits;
  for (int t = 0; t < 40; ++t) bits.push_back(sim.feed(nm.at(Int(sim.t))));
  REQUIRE(sim.next_e == 3);
  REQUIRE(sim.vals.size() == 4);
  Rat x = sim.v;
  REQUIRE(x == sim.vals[3]);
  for (int t = 0; t < 40; ++t) {
    CAPTURE(t);
    REQUIRE(bits[static_cast<Nat>(t)] == (q_at(Int(t)) < x ? Int(1) : Int(0)));
  }
}

TEST_CASE("dyadic staircase emits a valid approximation stream") {
  Name nm([](const Int& pos) {
    return pos % 2 == 0 ? Int(pos / 2 + 1) : Int(0);
  });
  detail::DyadSim sim;
  std::vector<Int> toks;
  for (int t = 0; t < 40; ++t) toks.push_back(sim.feed(nm.at(Int(sim.t))));
  REQUIRE(sim.vals.size() > 10);
  for (Nat i = 1; i < sim.vals.size(); ++i)
    REQUIRE(sim.vals[i] < sim.vals[i - 1]);
  Rat x = sim.v;
  for (int t = 0; t < 40; ++t) {
    CAPTURE(t);
    REQUIRE(rabs(q_at(toks[static_cast<Nat>(t)]) - x) <=
            pow2(-static_cast<long long>(t)));
  }
}
