// Stage timings of the key-recovery pipeline across growing embedded sizes
// k = n * |G|. The interesting curve is solve/build versus k: the system is
// k^2 x k^2, but its rank never exceeds n^2 |G|, which keeps elimination far
// below the worst case.
//
// The order-60 group with n=3 (k=180) needs roughly 8.4 GB for the system
// matrix alone and is therefore opt-in: set MAKEKEX_BENCH_HUGE=1 to register
// it, and bring time and memory.

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <map>
#include <string>

#include "makekex/attack.hpp"
#include "makekex/linalg.hpp"

using namespace makekex;

namespace {

struct Config {
    std::uint64_t p;
    const char* group;  // nullptr for plain Z_p
    std::size_t n;
    std::string label() const {
        return "Z" + std::to_string(p) + (group ? std::string("_") + group : "") + "_n" +
               std::to_string(n);
    }
};

const Config kConfigs[] = {
    {101, nullptr, 3}, {101, nullptr, 6}, {7, "s3", 1},  {7, "s3", 2},
    {7, "s3", 3},      {7, "s3", 4},      {3, "d4", 2},  {7, "a5", 1},
};
const Config kHuge{7, "a5", 3};

struct Instance {
    PublicParams params;
    Transcript transcript;
    EmbeddingContext ctx;
    FieldMatrix e1, e2;

    explicit Instance(const Config& cfg)
        : params(generate_params(cfg.p,
                                 cfg.group ? std::optional<GroupSpec>(GroupSpec{cfg.group, 0, {}})
                                           : std::nullopt,
                                 cfg.n, 7)),
          transcript([&] {
              SeededRng rng(8);
              const std::uint64_t x = sample_exponent(rng, 20);
              const std::uint64_t y = sample_exponent(rng, 20);
              return run_exchange(params, x, y);
          }()),
          ctx(params.context()),
          e1(ctx.embed(params.H1)),
          e2(ctx.embed(params.H2)) {}
};

// One instance per config, built on first use and kept for every stage.
const Instance& instance(const Config& cfg) {
    static std::map<std::string, Instance> cache;
    auto it = cache.find(cfg.label());
    if (it == cache.end()) it = cache.emplace(cfg.label(), Instance(cfg)).first;
    return it->second;
}

void bm_exchange(benchmark::State& state, Config cfg) {
    const Instance& inst = instance(cfg);
    SeededRng rng(9);
    const std::uint64_t x = sample_exponent(rng, 20);
    const std::uint64_t y = sample_exponent(rng, 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_exchange(inst.params, x, y));
    }
    state.counters["k"] = static_cast<double>(inst.ctx.k());
}

void bm_telescope(benchmark::State& state, Config cfg) {
    const Instance& inst = instance(cfg);
    const AttackInput input = AttackInput::from_transcript(inst.transcript);
    for (auto _ : state) {
        benchmark::DoNotOptimize(telescope(input, inst.ctx));
    }
    state.counters["k"] = static_cast<double>(inst.ctx.k());
}

void bm_build_system(benchmark::State& state, Config cfg) {
    const Instance& inst = instance(cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sandwich_matrix(inst.params.H1, inst.params.H2, inst.params.M, inst.ctx));
    }
    state.counters["k"] = static_cast<double>(inst.ctx.k());
}

void bm_solve(benchmark::State& state, Config cfg) {
    const Instance& inst = instance(cfg);
    const FieldMatrix system =
        sandwich_matrix(inst.params.H1, inst.params.H2, inst.params.M, inst.ctx);
    const FieldVector rhs =
        vec(telescope(AttackInput::from_transcript(inst.transcript), inst.ctx));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_linear(system, rhs));
    }
    state.counters["k"] = static_cast<double>(inst.ctx.k());
    state.counters["rank_bound"] = static_cast<double>(
        inst.ctx.n() * inst.ctx.n() * inst.ctx.block());
}

void bm_recover(benchmark::State& state, Config cfg) {
    const Instance& inst = instance(cfg);
    const AttackInput input = AttackInput::from_transcript(inst.transcript);
    for (auto _ : state) {
        benchmark::DoNotOptimize(recover_key(input));
    }
    state.counters["k"] = static_cast<double>(inst.ctx.k());
}

void register_stages(const Config& cfg) {
    const std::string name = cfg.label();
    benchmark::RegisterBenchmark(("exchange/" + name).c_str(), bm_exchange, cfg)
        ->Unit(benchmark::kMillisecond);
    benchmark::RegisterBenchmark(("telescope/" + name).c_str(), bm_telescope, cfg)
        ->Unit(benchmark::kMillisecond);
    benchmark::RegisterBenchmark(("build_system/" + name).c_str(), bm_build_system, cfg)
        ->Unit(benchmark::kMillisecond);
    benchmark::RegisterBenchmark(("solve/" + name).c_str(), bm_solve, cfg)
        ->Unit(benchmark::kMillisecond);
    benchmark::RegisterBenchmark(("recover/" + name).c_str(), bm_recover, cfg)
        ->Unit(benchmark::kMillisecond);
}

} // namespace

int main(int argc, char** argv) {
    for (const Config& cfg : kConfigs) register_stages(cfg);
    const char* huge = std::getenv("MAKEKEX_BENCH_HUGE");
    if (huge && *huge && std::string(huge) != "0") register_stages(kHuge);

    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
