// Serial reference vs OpenMP evaluation of one time probe over a parameter
// grid. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "timeprobe/evaluation.hpp"
#include "timeprobe/experiment.hpp"
#include "timeprobe/synthgen.hpp"

namespace {

using namespace timeprobe;

struct Fixture {
  EventLog log;
  ProbeSplit split;
  std::vector<MethodSpec> methods;
  std::vector<UserProbe> users;
};

const Fixture& fixture() {
  static const Fixture f = [] {
    GenParams p;
    p.seed = 3;
    Fixture out{generate(p), {}, {}, {}};
    out.split = time_probe(out.log, static_cast<Timestamp>(0.9 * static_cast<double>(out.log.max_time())), 5);
    ExperimentConfig c;
    c.theta_grid = {0.5, 1.0, 2.0};
    for (const auto m : c.methods) {
      const auto grid = expand_grid(c, m);
      out.methods.insert(out.methods.end(), grid.begin(), grid.end());
    }
    out.users = evaluation_users(out.split, {});
    return out;
  }();
  return f;
}

void BM_EvaluateSerial(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_users_serial(f.split, f.methods, f.users, 50));
  state.counters["method_points"] = static_cast<double>(f.methods.size());
  state.counters["users"] = static_cast<double>(f.users.size());
}

void BM_EvaluateParallel(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_users_parallel(f.split, f.methods, f.users, 50));
  state.counters["threads"] = max_threads();
}

void BM_ProbsOnly(benchmark::State& state) {
  const auto& f = fixture();
  const std::vector<MethodSpec> probs{{Method::probs, {}}};
  const bool parallel = state.range(0) != 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(parallel ? evaluate_users_parallel(f.split, probs, f.users, 50)
                                      : evaluate_users_serial(f.split, probs, f.users, 50));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvaluateParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ProbsOnly)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
