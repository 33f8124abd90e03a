// makekex: key exchange over matrix rings (optionally group rings Z_p[G])
// and the eavesdropper's linear-algebra key recovery.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure,
// 3 attack failure.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "makekex/selftest.hpp"
#include "makekex/serialize.hpp"

namespace {

using namespace makekex;

std::string ring_description(const PublicParams& params) {
    std::string ring = "Z_" + std::to_string(params.mod.value());
    if (!params.commutative()) {
        const std::string gname =
            params.group_spec->is_builtin() ? params.group_spec->name : "custom group";
        ring += "[" + gname + ", order " + std::to_string(params.group->order()) + "]";
    }
    return std::to_string(params.n) + "x" + std::to_string(params.n) +
           " matrices over " + ring;
}

struct GenArgs {
    std::uint64_t prime = 0;
    std::string group;
    std::size_t dim = 2;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_gen(const GenArgs& args) {
    std::optional<GroupSpec> spec;
    if (!args.group.empty()) spec = parse_group_arg(args.group);
    const PublicParams params = generate_params(args.prime, spec, args.dim, args.seed);
    write_params(args.out, params);
    const std::size_t k = params.context().k();
    std::cout << "params: " << ring_description(params) << " (embedded size " << k << "x" << k
              << ")\nwrote " << args.out << "\n";
    return 0;
}

struct ExchangeArgs {
    std::string in;
    std::string out;
    std::uint64_t seed = 2;
    unsigned x_bits = 20;
    bool demo = false;
};

int cmd_exchange(const ExchangeArgs& args) {
    const PublicParams params = read_params(args.in);
    SeededRng rng(args.seed);
    const std::uint64_t x = sample_exponent(rng, args.x_bits);
    const std::uint64_t y = sample_exponent(rng, args.x_bits);
    const Transcript transcript = run_exchange(params, x, y);
    write_transcript(args.out, transcript, args.in, args.demo);
    std::cout << "exchange over " << ring_description(params) << ": keys agree\n";
    if (args.demo) {
        std::cout << "demo mode: exponents x=" << x << " y=" << y
                  << " and the shared key are in the transcript\n";
    }
    std::cout << "wrote " << args.out << "\n";
    return 0;
}

struct AttackArgs {
    std::string in;
    std::string out;
};

int cmd_attack(const AttackArgs& args) {
    const Transcript transcript = read_transcript(args.in);
    const std::size_t k = transcript.params.context().k();
    try {
        const AttackResult result = recover_key(AttackInput::from_transcript(transcript));
        std::optional<bool> match;
        if (transcript.K) match = result.recovered_key == *transcript.K;
        write_success_report(args.out, transcript.params, result, match);
        std::cout << "system " << result.system_size << "x" << result.system_size
                  << " solved in " << result.timings.solve_s << "s (total "
                  << result.timings.total_s << "s)\nwrote " << args.out << "\n";
        if (match) {
            std::cout << "recovered key " << (*match ? "matches" : "DOES NOT match")
                      << " the transcript's shared key\n";
            if (!*match) return 2;
        }
        return 0;
    } catch (const NoSolutionError& e) {
        write_failure_report(args.out, k * k, e.what());
        std::cerr << "attack failed: " << e.what() << "\n";
        return 3;
    } catch (const NotInImageError& e) {
        write_failure_report(args.out, k * k, e.what());
        std::cerr << "attack failed: " << e.what() << "\n";
        return 3;
    }
}

struct SelftestArgs {
    bool quick = false;
    std::uint64_t seed = 20240915;
    bool inject_fault = false;
};

int cmd_selftest(const SelftestArgs& args) {
    return run_selftest({args.quick, args.seed, args.inject_fault}, std::cout) ? 0 : 2;
}

struct BenchArgs {
    std::vector<std::string> configs;
    std::uint64_t seed = 1;
    unsigned x_bits = 20;
};

// "p:group:n" with an empty group meaning plain Z_p.
std::tuple<std::uint64_t, std::string, std::size_t> parse_bench_config(const std::string& s) {
    const auto c1 = s.find(':');
    const auto c2 = s.rfind(':');
    if (c1 == std::string::npos || c2 == c1) {
        throw InvalidInputError("bench config must look like p:group:n, got '" + s + "'");
    }
    try {
        const std::uint64_t p = std::stoull(s.substr(0, c1));
        const std::size_t n = std::stoull(s.substr(c2 + 1));
        return {p, s.substr(c1 + 1, c2 - c1 - 1), n};
    } catch (const std::exception&) {
        throw InvalidInputError("bench config must look like p:group:n, got '" + s + "'");
    }
}

int cmd_bench(const BenchArgs& args) {
    std::cout << "config            k  system   telescope_s    build_s    solve_s  recover_s"
                 "    total_s\n";
    double previous_total = 0;
    bool monotone = true;
    for (const std::string& cfg : args.configs) {
        const auto [p, group, n] = parse_bench_config(cfg);
        std::optional<GroupSpec> spec;
        if (!group.empty()) spec = parse_group_arg(group);
        const PublicParams params = generate_params(p, spec, n, args.seed);
        SeededRng rng(args.seed + 1);
        const Transcript transcript = run_exchange(params, sample_exponent(rng, args.x_bits),
                                                   sample_exponent(rng, args.x_bits));
        const AttackResult result = recover_key(AttackInput::from_transcript(transcript));
        if (transcript.K && result.recovered_key != *transcript.K) {
            std::cerr << "bench config " << cfg << ": recovered key mismatch\n";
            return 2;
        }
        const StageTimings& t = result.timings;
        char line[160];
        std::snprintf(line, sizeof line, "%-15s %4zu %7zu %12.4f %10.4f %10.4f %10.4f %10.4f\n",
                      cfg.c_str(), params.context().k(), result.system_size, t.telescope_s,
                      t.build_s, t.solve_s, t.recover_s, t.total_s);
        std::cout << line;
        if (t.total_s + 1e-9 < previous_total) monotone = false;
        previous_total = t.total_s;
    }
    if (!monotone) {
        std::cout << "note: total time not monotone across the given configs\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"key exchange over matrix rings and its key-recovery attack"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate public parameters");
    gen_cmd->add_option("--prime", gen.prime, "prime modulus p")->required();
    gen_cmd->add_option("--group", gen.group,
                        "group: builtin name (trivial,c2,s3,d4,q8,a5) or generator "
                        "permutations like [[1,0,2],[1,2,0]]; omit for plain Z_p");
    gen_cmd->add_option("--dim", gen.dim, "matrix size n")->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "output params file")->required();

    ExchangeArgs exchange;
    CLI::App* ex_cmd = app.add_subcommand("exchange", "run both sides of the key exchange");
    ex_cmd->add_option("--in", exchange.in, "params file")->required();
    ex_cmd->add_option("--out", exchange.out, "output transcript file")->required();
    ex_cmd->add_option("--seed", exchange.seed, "RNG seed for the private exponents")
        ->capture_default_str();
    ex_cmd->add_option("--x-bits", exchange.x_bits, "exponents are uniform in [2, 2^bits)")
        ->capture_default_str();
    ex_cmd->add_flag("--demo", exchange.demo,
                     "record private exponents and the shared key in the transcript");

    AttackArgs attack;
    CLI::App* at_cmd =
        app.add_subcommand("attack", "recover the shared key from public data only");
    at_cmd->add_option("--in", attack.in, "transcript file")->required();
    at_cmd->add_option("--out", attack.out, "output report file")->required();

    SelftestArgs selftest;
    CLI::App* st_cmd = app.add_subcommand("selftest", "run all property suites");
    st_cmd->add_flag("--quick", selftest.quick, "reduced trial counts");
    st_cmd->add_option("--seed", selftest.seed, "RNG seed")->capture_default_str();
    st_cmd->add_flag("--inject-fault", selftest.inject_fault,
                     "add a deliberately failing suite (harness check)");

    BenchArgs bench;
    CLI::App* be_cmd = app.add_subcommand("bench", "time the attack stages per configuration");
    be_cmd->add_option("configs", bench.configs, "configurations as p:group:n (group may be empty)")
        ->required();
    be_cmd->add_option("--seed", bench.seed, "RNG seed")->capture_default_str();
    be_cmd->add_option("--x-bits", bench.x_bits, "exponent size")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gen_cmd->parsed()) return cmd_gen(gen);
        if (ex_cmd->parsed()) return cmd_exchange(exchange);
        if (at_cmd->parsed()) return cmd_attack(attack);
        if (st_cmd->parsed()) return cmd_selftest(selftest);
        if (be_cmd->parsed()) return cmd_bench(bench);
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
