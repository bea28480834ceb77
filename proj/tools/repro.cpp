#include <cstdio>
#include <vector>

#include <wlab/reductions.hpp>

using namespace wlab;

static void trial(const char* rid, int t) {
  Reduction r = reduction_by_id(rid);
  Problem f = *problem_by_id(r.f_id);
  Problem g = *problem_by_id(r.g_id);
  std::uint64_t seed = detail::submix(0x7ab5u + static_cast<std::uint64_t>(t), 0x51u);
  Instance inst = f.generate(seed);
  Truth gt = r.k_sem(inst);
  Fuel fk(2'000'000);
  Name kout = machine_output(r.K, inst.name, fk);
  for (Nat i = 0; i < 40; ++i) kout.at(Int(i));
  Name ans = g.oracle(gt, detail::submix(seed, 99));
  Name hin = r.strong ? ans : name_pair(inst.name, ans);
  Fuel fh(2'000'000);
  Name hout = machine_output(r.H, hin, fh);
  for (Nat i = 0; i < 40; ++i) hout.at(Int(i));
  std::printf("  t=%d ok\n", t);
  std::fflush(stdout);
}

int main(int argc, char** argv) {
  const char* rid = argc > 1 ? argv[1] : "ec1_le_imp_cflt_cf";
  int lo = argc > 2 ? std::atoi(argv[2]) : 0;
  int hi = argc > 3 ? std::atoi(argv[3]) : 12;
  std::printf("%s\n", rid);
  for (int t = lo; t < hi; ++t) trial(rid, t);
  std::printf("done\n");
  return 0;
}
